#include "conifold/numeric.hpp"

namespace conifold {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

std::string rat_str(const Rat& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
}

std::string EpsRational::str() const {
    std::string s = rat_str(value);
    if (eps > 0) s += (eps == 1) ? "+eps" : "+" + std::to_string(eps) + "eps";
    if (eps < 0) s += (eps == -1) ? "-eps" : std::to_string(eps) + "eps";
    return s;
}

}  // namespace conifold
