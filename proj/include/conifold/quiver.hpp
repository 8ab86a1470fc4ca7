#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "conifold/numeric.hpp"

namespace conifold {

/// Dimension vector (v_inf, v0, v1) of the framed conifold quiver. Framed
/// moduli use v_inf in {0, 1}; the pairing itself is defined for any values.
struct DimVec {
    long long vinf = 0;
    long long v0 = 0;
    long long v1 = 0;

    friend DimVec operator+(const DimVec& a, const DimVec& b) {
        return {a.vinf + b.vinf, a.v0 + b.v0, a.v1 + b.v1};
    }
    friend bool operator==(const DimVec& a, const DimVec& b) {
        return a.vinf == b.vinf && a.v0 == b.v0 && a.v1 == b.v1;
    }
};

/// dim Hom - dim Ext^1 of framed-quiver representations with the given
/// dimension vectors.
long long euler_form(const DimVec& e, const DimVec& ep);

/// v0 - v0^2 - v1^2 + 4 v0 v1; its parity always matches v1.
long long moduli_dim(long long v0, long long v1);

enum class WallFamily { W, Wp };

/// Wall in stability-parameter space, stored by its integer primitive
/// direction: (1-m, m) for family W, (-m-1, m) for family Wp.
struct Wall {
    WallFamily family = WallFamily::W;
    int m = 1;

    std::pair<long long, long long> direction() const {
        if (family == WallFamily::W) return {1 - m, m};
        return {-m - 1, m};
    }
};

Wall make_wall(WallFamily family, int m);

/// Dimension vector of the unique stable representation on the wall:
/// (0, m, m-1) on W_m, (0, m, m+1) on W'_m.
DimVec stable_dimvec(const Wall& wall);

/// PT dictionary (beta, n) -> (1, n, n-beta).
DimVec pt_dimvec(long long beta, long long n);

/// Inverse dictionary (beta, n) = (v0 - v1, v0).
std::pair<long long, long long> pt_class(const DimVec& v);

/// Ext^1 dimensions at a polystable point R_inf + (V tensor S_m) with
/// dim V = d on the wall W_m.
struct ExtQuiverData {
    long long a = 0;  // arrows infinity -> 1
    long long b = 0;  // arrows 1 -> infinity
    long long c = 0;  // loops at 1, equals 2m^2 - 2m
    long long C = 0;  // C_{v,m} = (m-2) v0 + (m+1) v1
    int m = 1;
    int d = 0;
    bool valid = true;  // false when a < d or b < 0
    std::optional<long long> loops_inf;  // ext^1(R_inf, R_inf); unknown unless supplied
};

ExtQuiverData ext_quiver_data(std::pair<long long, long long> v, int m, int d);

/// All walls W_m with v - l*s_m >= 0 for some l >= 1, with the maximal such l.
std::vector<std::pair<Wall, long long>> relevant_walls(std::pair<long long, long long> v);

}  // namespace conifold
