#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

namespace conifold {

// All series coefficients and counts are exact integers.
using Int = boost::multiprecision::cpp_int;

// Exact rationals for slopes and window offsets. Magnitudes stay desk-scale.
using Rat = boost::rational<long long>;

Int binomial(long long n, long long k);

// A rational augmented with a symbolic infinitesimal: value + eps * epsilon,
// ordered lexicographically. This realizes bounds like "-eta + epsilon"
// without picking a concrete epsilon.
struct EpsRational {
    Rat value{};
    int eps = 0;

    EpsRational() = default;
    EpsRational(Rat v, int e = 0) : value(v), eps(e) {}
    EpsRational(long long v) : value(v), eps(0) {}

    friend EpsRational operator+(const EpsRational& a, const EpsRational& b) {
        return {a.value + b.value, a.eps + b.eps};
    }
    friend EpsRational operator-(const EpsRational& a, const EpsRational& b) {
        return {a.value - b.value, a.eps - b.eps};
    }
    friend bool operator==(const EpsRational& a, const EpsRational& b) {
        return a.value == b.value && a.eps == b.eps;
    }
    friend bool operator<(const EpsRational& a, const EpsRational& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.eps < b.eps;
    }
    friend bool operator<=(const EpsRational& a, const EpsRational& b) {
        return a == b || a < b;
    }
    friend bool operator>(const EpsRational& a, const EpsRational& b) { return b < a; }
    friend bool operator>=(const EpsRational& a, const EpsRational& b) { return b <= a; }

    std::string str() const;
};

// Half-open interval [lo, hi) in EpsRational arithmetic. The epsilon part of
// the bounds encodes endpoint openness exactly.
struct WeightInterval {
    EpsRational lo;
    EpsRational hi;

    bool contains(long long w) const {
        EpsRational v{Rat(w), 0};
        return lo <= v && v < hi;
    }
    bool contains(const EpsRational& v) const { return lo <= v && v < hi; }
};

std::string rat_str(const Rat& r);

}  // namespace conifold
