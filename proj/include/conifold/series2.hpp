#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "conifold/numeric.hpp"

namespace conifold {

using Exp2 = std::pair<int, int>;

/// Truncated bivariate integer power series: exponents outside the box
/// e0 <= N0, e1 <= N1 are dropped after every operation.
class Series2 {
public:
    Series2(int n0, int n1);
    static Series2 one(int n0, int n1);

    int trunc0() const { return n0_; }
    int trunc1() const { return n1_; }
    const std::map<Exp2, Int>& terms() const { return terms_; }

    Int coeff(int e0, int e1) const;
    void add_term(int e0, int e1, const Int& c);

    Series2 operator+(const Series2& o) const;
    Series2 operator-(const Series2& o) const;
    /// Truncated product; partitions the left factor across OpenMP threads
    /// when available and merges by exponent key.
    Series2 operator*(const Series2& o) const;
    /// Plain nested-loop product kept as the reference implementation.
    Series2 mul_serial(const Series2& o) const;

    /// Exponent re-mapping into a new truncation box; terms mapped outside
    /// the box are dropped, pre-images must not collide.
    Series2 remap(const std::function<std::optional<Exp2>(Exp2)>& f, int n0, int n1) const;

    friend bool operator==(const Series2& a, const Series2& b) {
        return a.n0_ == b.n0_ && a.n1_ == b.n1_ && a.terms_ == b.terms_;
    }

private:
    int n0_;
    int n1_;
    std::map<Exp2, Int> terms_;
};

/// (1 + q0^m (-q1)^{m-1})^m truncated.
Series2 wall_factor(int m, Exp2 trunc);

/// Product of wall factors m = 1..M, truncated; the coefficient at (v0, v1)
/// is the signed summand count once M exceeds every relevant wall.
Series2 dt_series(int M, Exp2 trunc);

/// a_{n,beta}: sum over l: Z>=1 -> Z>=0 with sum m*l(m) = n, sum l(m) = beta
/// of the product of binomial(m, l(m)).
Int a_coeff(int n, int beta);

/// PT generating series prod_{m>=1} (1 - (-q)^m t)^m in (q, t), truncated.
Series2 pt_product(Exp2 trunc);

/// (q, t) exponents (n, beta) -> (q0, q1) exponents (n, n-beta) and back.
Series2 pt_to_dt_variables(const Series2& pt, Exp2 trunc);
Series2 dt_to_pt_variables(const Series2& dt, Exp2 trunc);

struct CrosscheckReport {
    bool pass = true;
    Exp2 box{0, 0};
    long long coefficients_checked = 0;
    std::optional<Exp2> first_mismatch;  // (n, beta)
    std::string failed_check;            // which of the three pipelines disagreed
};

/// Coefficientwise verification on the box: (i) P = (-1)^{n+beta} a,
/// (ii) the DT product at (n, n-beta) equals P, (iii) the iterated SOD count
/// equals a.
CrosscheckReport crosscheck(Exp2 trunc);

}  // namespace conifold
