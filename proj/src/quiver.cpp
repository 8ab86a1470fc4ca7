#include "conifold/quiver.hpp"

#include <stdexcept>

namespace conifold {

long long euler_form(const DimVec& e, const DimVec& ep) {
    return e.vinf * ep.vinf - e.vinf * ep.v0 + e.v0 * ep.v0 - 2 * e.v0 * ep.v1 -
           2 * e.v1 * ep.v0 + e.v1 * ep.v1;
}

long long moduli_dim(long long v0, long long v1) {
    return v0 - v0 * v0 - v1 * v1 + 4 * v0 * v1;
}

Wall make_wall(WallFamily family, int m) {
    if (m < 1) throw std::invalid_argument("make_wall: m must be >= 1");
    return Wall{family, m};
}

DimVec stable_dimvec(const Wall& wall) {
    if (wall.m < 1) throw std::invalid_argument("stable_dimvec: m must be >= 1");
    if (wall.family == WallFamily::W) return {0, wall.m, wall.m - 1};
    return {0, wall.m, wall.m + 1};
}

DimVec pt_dimvec(long long beta, long long n) {
    if (n < 0 || n - beta < 0)
        throw std::invalid_argument("pt_dimvec: need n >= 0 and n - beta >= 0");
    return {1, n, n - beta};
}

std::pair<long long, long long> pt_class(const DimVec& v) {
    return {v.v0 - v.v1, v.v0};
}

ExtQuiverData ext_quiverdata_unchecked(std::pair<long long, long long> v, int m, int d) {
    const long long v0 = v.first, v1 = v.second;
    ExtQuiverData q;
    q.m = m;
    q.d = d;
    q.C = (m - 2) * v0 + (m + 1) * v1;
    const long long shift = static_cast<long long>(d) * (-2LL * m * m + 2 * m + 1);
    q.a = q.C + m + shift;
    q.b = q.C + shift;
    q.c = 2LL * m * m - 2 * m;
    q.valid = (q.a >= d && q.b >= 0);
    return q;
}

ExtQuiverData ext_quiver_data(std::pair<long long, long long> v, int m, int d) {
    if (m < 1) throw std::invalid_argument("ext_quiver_data: m must be >= 1");
    if (d < 0) throw std::invalid_argument("ext_quiver_data: d must be >= 0");
    if (v.first - static_cast<long long>(d) * m < 0 ||
        v.second - static_cast<long long>(d) * (m - 1) < 0)
        throw std::invalid_argument("ext_quiver_data: v - d*s_m must be componentwise >= 0");
    return ext_quiverdata_unchecked(v, m, d);
}

std::vector<std::pair<Wall, long long>> relevant_walls(std::pair<long long, long long> v) {
    if (v.first < 0 || v.second < 0)
        throw std::invalid_argument("relevant_walls: v must be componentwise >= 0");
    std::vector<std::pair<Wall, long long>> out;
    for (int m = 1; m <= v.first; ++m) {
        long long l = v.first / m;
        if (m > 1) l = std::min(l, v.second / (m - 1));
        if (l >= 1) out.push_back({Wall{WallFamily::W, m}, l});
    }
    return out;
}

}  // namespace conifold
