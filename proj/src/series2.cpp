#include "conifold/series2.hpp"

#include <stdexcept>
#include <vector>

#include "conifold/windows.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conifold {

Series2::Series2(int n0, int n1) : n0_(n0), n1_(n1) {
    if (n0 < 0 || n1 < 0) throw std::invalid_argument("Series2: truncation must be >= 0");
}

Series2 Series2::one(int n0, int n1) {
    Series2 s(n0, n1);
    s.terms_[{0, 0}] = 1;
    return s;
}

Int Series2::coeff(int e0, int e1) const {
    auto it = terms_.find({e0, e1});
    return it == terms_.end() ? Int(0) : it->second;
}

void Series2::add_term(int e0, int e1, const Int& c) {
    if (e0 < 0 || e1 < 0) throw std::invalid_argument("Series2: negative exponent");
    if (e0 > n0_ || e1 > n1_ || c == 0) return;
    Int& slot = terms_[{e0, e1}];
    slot += c;
    if (slot == 0) terms_.erase({e0, e1});
}

Series2 Series2::operator+(const Series2& o) const {
    Series2 r(std::min(n0_, o.n0_), std::min(n1_, o.n1_));
    for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, c);
    return r;
}

Series2 Series2::operator-(const Series2& o) const {
    Series2 r(std::min(n0_, o.n0_), std::min(n1_, o.n1_));
    for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, c);
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
    return r;
}

Series2 Series2::mul_serial(const Series2& o) const {
    Series2 r(std::min(n0_, o.n0_), std::min(n1_, o.n1_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

Series2 Series2::operator*(const Series2& o) const {
#ifndef _OPENMP
    return mul_serial(o);
#else
    const int rn0 = std::min(n0_, o.n0_), rn1 = std::min(n1_, o.n1_);
    std::vector<std::pair<Exp2, Int>> lhs(terms_.begin(), terms_.end());
    const int n = static_cast<int>(lhs.size());
    int nthreads = 1;
#pragma omp parallel
    {
#pragma omp single
        nthreads = omp_get_num_threads();
    }
    std::vector<std::map<Exp2, Int>> partial(nthreads);
#pragma omp parallel
    {
        auto& local = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
        for (int idx = 0; idx < n; ++idx) {
            const auto& [ea, ca] = lhs[idx];
            for (const auto& [eb, cb] : o.terms_) {
                const int e0 = ea.first + eb.first, e1 = ea.second + eb.second;
                if (e0 > rn0 || e1 > rn1) continue;
                local[{e0, e1}] += ca * cb;
            }
        }
    }
    Series2 r(rn0, rn1);
    for (const auto& part : partial)
        for (const auto& [e, c] : part) r.add_term(e.first, e.second, c);
    return r;
#endif
}

Series2 Series2::remap(const std::function<std::optional<Exp2>(Exp2)>& f, int n0,
                       int n1) const {
    Series2 r(n0, n1);
    for (const auto& [e, c] : terms_) {
        const auto target = f(e);
        if (!target) continue;
        const auto [e0, e1] = *target;
        if (e0 < 0 || e1 < 0 || e0 > n0 || e1 > n1) continue;
        if (r.terms_.count({e0, e1}))
            throw std::invalid_argument("Series2::remap: exponent collision");
        r.terms_[{e0, e1}] = c;
    }
    return r;
}

Series2 wall_factor(int m, Exp2 trunc) {
    if (m < 1) throw std::invalid_argument("wall_factor: m must be >= 1");
    Series2 s(trunc.first, trunc.second);
    for (int l = 0; l <= m; ++l) {
        const long long e0 = static_cast<long long>(l) * m;
        const long long e1 = static_cast<long long>(l) * (m - 1);
        if (e0 > trunc.first || e1 > trunc.second) continue;
        Int c = binomial(m, l);
        if ((e1 % 2) != 0) c = -c;
        s.add_term(static_cast<int>(e0), static_cast<int>(e1), c);
    }
    return s;
}

Series2 dt_series(int M, Exp2 trunc) {
    if (M < 1) throw std::invalid_argument("dt_series: M must be >= 1");
    Series2 s = Series2::one(trunc.first, trunc.second);
    for (int m = 1; m <= M; ++m) s = s * wall_factor(m, trunc);
    return s;
}

Int a_coeff(int n, int beta) {
    if (n < 0 || beta < 0) throw std::invalid_argument("a_coeff: n, beta must be >= 0");
    // Support of l is bounded by m <= n; recurse over the largest m.
    auto rec = [](auto&& self, int m, int n_rem, int b_rem) -> Int {
        if (n_rem == 0 && b_rem == 0) return 1;
        if (m == 0 || n_rem < 0 || b_rem < 0) return 0;
        Int total = 0;
        for (int l = 0; l <= m && l <= b_rem && static_cast<long long>(l) * m <= n_rem; ++l)
            total += binomial(m, l) * self(self, m - 1, n_rem - l * m, b_rem - l);
        return total;
    };
    return rec(rec, n, n, beta);
}

Series2 pt_product(Exp2 trunc) {
    Series2 s = Series2::one(trunc.first, trunc.second);
    for (int m = 1; m <= trunc.first; ++m) {
        Series2 factor(trunc.first, trunc.second);
        for (int l = 0; l <= m; ++l) {
            const long long eq = static_cast<long long>(l) * m;
            if (eq > trunc.first || l > trunc.second) continue;
            Int c = binomial(m, l);
            if ((static_cast<long long>(l) * (m + 1)) % 2 != 0) c = -c;
            factor.add_term(static_cast<int>(eq), l, c);
        }
        s = s * factor;
    }
    return s;
}

Series2 pt_to_dt_variables(const Series2& pt, Exp2 trunc) {
    return pt.remap(
        [](Exp2 e) -> std::optional<Exp2> {
            const auto [n, beta] = e;
            if (n - beta < 0) return std::nullopt;
            return Exp2{n, n - beta};
        },
        trunc.first, trunc.second);
}

Series2 dt_to_pt_variables(const Series2& dt, Exp2 trunc) {
    return dt.remap(
        [](Exp2 e) -> std::optional<Exp2> {
            const auto [v0, v1] = e;
            if (v0 - v1 < 0) return std::nullopt;
            return Exp2{v0, v0 - v1};
        },
        trunc.first, trunc.second);
}

CrosscheckReport crosscheck(Exp2 trunc) {
    CrosscheckReport report;
    report.box = trunc;
    const int N = trunc.first, B = trunc.second;

    const Series2 pt = pt_product(trunc);
    const Series2 dt = dt_series(std::max(N, 1), {N, N});

    auto fail = [&](int n, int beta, const char* which) {
        if (report.pass) {
            report.pass = false;
            report.first_mismatch = Exp2{n, beta};
            report.failed_check = which;
        }
    };

    for (int n = 0; n <= N && report.pass; ++n) {
        for (int beta = 0; beta <= B && report.pass; ++beta) {
            const Int p = pt.coeff(n, beta);
            Int a = a_coeff(n, beta);
            ++report.coefficients_checked;

            Int signed_a = ((n + beta) % 2 == 0) ? a : -a;
            if (p != signed_a) fail(n, beta, "product-vs-a");

            if (n - beta >= 0) {
                if (dt.coeff(n, n - beta) != p) fail(n, beta, "dt-vs-pt");
            } else if (p != 0) {
                fail(n, beta, "dt-vs-pt");
            }

            if (n - beta >= 0) {
                const Int sod = iterated_sod_count({n, n - beta}, n == 0 ? 1 : n);
                if (sod != a) fail(n, beta, "sod-vs-a");
            }
        }
    }
    return report;
}

}  // namespace conifold
