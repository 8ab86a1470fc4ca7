#include "conifold/windows.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conifold {

WallWindowSetup make_wall_window_setup(std::pair<long long, long long> v, int m, int d) {
    WallWindowSetup s;
    s.v = v;
    s.m = m;
    s.d = d;
    s.derived = ext_quiver_data(v, m, d);
    return s;
}

long long gamma_weight(const std::vector<int>& lambda, int m) {
    if (m < 1) throw std::invalid_argument("gamma_weight: m must be >= 1");
    long long sum = 0;
    const int d = static_cast<int>(lambda.size());
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            if (j == k) continue;
            const long long p = static_cast<long long>(lambda[j]) - lambda[k];
            if (p > 0) sum += p;
        }
    return sum * (static_cast<long long>(m) * m - m);
}

std::vector<std::vector<int>> ext_quiver_y_weights(const WallWindowSetup& setup) {
    const int d = setup.d;
    const long long h = static_cast<long long>(setup.m) * setup.m - setup.m;
    std::vector<std::vector<int>> ws;
    for (int j = 0; j < d; ++j) {
        std::vector<int> e(d, 0);
        e[j] = 1;
        for (long long r = 0; r < setup.derived.a; ++r) ws.push_back(e);
        e[j] = -1;
        for (long long r = 0; r < setup.derived.b; ++r) ws.push_back(e);
    }
    // W + W^dual: every gl root with multiplicity 2(m^2-m); Cartan weights of
    // End_0 are zero and never pair.
    for (const auto& root : gl_root_weights(d))
        for (long long r = 0; r < 2 * h; ++r) ws.push_back(root);
    return ws;
}

EpsRational window_offset(const WallWindowSetup& setup, int i, Side side,
                          long long eta, long long chi0_pairing) {
    (void)i;
    const Rat half_eta(-eta, 2);
    Rat coeff(setup.derived.C, 2);
    if (side == Side::Plus) coeff += Rat(setup.m, 2);
    return EpsRational{half_eta + coeff * Rat(chi0_pairing), 0};
}

long long koszul_wedge_dim(const WallWindowSetup& setup) {
    const long long d = setup.d;
    const long long h = static_cast<long long>(setup.m) * setup.m - setup.m;
    return (d * d - 1 > 0 ? d * d - 1 : 0) * h;
}

namespace {

std::vector<int> lambda_plus(int d, int i) {
    std::vector<int> l(d, 0);
    for (int j = i; j < d; ++j) l[j] = -1;
    return l;
}

// Pairings of lambda with the weight multiset of W = End_0(V) tensor
// C^{m^2-m}, including the zero weights of the Cartan part.
std::vector<long long> wedge_pairings(const std::vector<int>& lambda, int m) {
    const int d = static_cast<int>(lambda.size());
    const long long h = static_cast<long long>(m) * m - m;
    std::vector<long long> ps;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            if (j == k) continue;
            for (long long r = 0; r < h; ++r)
                ps.push_back(static_cast<long long>(lambda[j]) - lambda[k]);
        }
    for (long long r = 0; r < (d - 1) * h; ++r) ps.push_back(0);
    return ps;
}

}  // namespace

KoszulCertificate verify_koszul_window(const WallWindowSetup& setup, const Character& chi,
                                       int k, int i) {
    const int d = setup.d;
    const int m = setup.m;
    const long long a = setup.derived.a;
    if (i < 0 || i >= d)
        throw std::invalid_argument("verify_koszul_window: stratum index out of range");
    if (chi.rank() != d)
        throw std::invalid_argument("verify_koszul_window: character rank must equal d");
    for (int j = 0; j < d; ++j) {
        const int x = chi.entries()[j];
        if (x < 0 || x > a - d)
            throw std::invalid_argument("verify_koszul_window: entry " + std::to_string(j + 1) +
                                        " = " + std::to_string(x) + " violates B_" +
                                        std::to_string(a) + "(" + std::to_string(d) + ")");
    }
    const long long dim_w = koszul_wedge_dim(setup);
    if (k < 0 || k > dim_w)
        throw std::invalid_argument("verify_koszul_window: k must lie in [0, dim W]");

    const std::vector<int> lambda = lambda_plus(d, i);
    const long long gamma = gamma_weight(lambda, m);
    const long long eta = generic_eta(lambda, ext_quiver_y_weights(setup), gl_root_weights(d));
    const long long chi0 = -(d - i);
    const EpsRational lo = window_offset(setup, i, Side::Plus, eta, chi0);
    const WeightInterval window{lo, lo + EpsRational{Rat(eta), 0}};

    const long long h = static_cast<long long>(m) * m - m;
    const long long base = d * h * chi0;

    // Extremes of <lambda, chi'> over the weights of V(chi), with witness
    // tableaux for both ends.
    long long vmin = std::numeric_limits<long long>::max();
    long long vmax = std::numeric_limits<long long>::min();
    std::vector<std::vector<int>> tab_min, tab_max;
    for_each_ssyt(chi, [&](const std::vector<std::vector<int>>& tab, const std::vector<int>& c) {
        long long p = 0;
        for (int j = 0; j < d; ++j) p += static_cast<long long>(lambda[j]) * c[j];
        if (p < vmin) {
            vmin = p;
            tab_min = tab;
        }
        if (p > vmax) {
            vmax = p;
            tab_max = tab;
        }
    });

    // Wedge contribution: exact k-subset extremes for d <= 3, the paper's
    // [-gamma, gamma] envelope otherwise.
    long long wmin, wmax;
    if (d <= 3) {
        std::vector<long long> ps = wedge_pairings(lambda, m);
        std::sort(ps.begin(), ps.end());
        wmin = 0;
        wmax = 0;
        for (int t = 0; t < k; ++t) {
            wmin += ps[t];
            wmax += ps[ps.size() - 1 - t];
        }
    } else {
        wmin = -gamma;
        wmax = gamma;
    }

    KoszulCertificate cert;
    cert.interval = window;
    cert.weight_min = base + vmin + wmin;
    cert.weight_max = base + vmax + wmax;
    cert.pass = window.contains(cert.weight_min) && window.contains(cert.weight_max);

    const long long bound_lo = base - (a - d) * (d - i) - gamma;
    const long long bound_hi = base + gamma;
    cert.bound_pass = window.contains(bound_lo) && window.contains(bound_hi);

    if (!window.contains(cert.weight_min)) {
        cert.worst_weight = cert.weight_min;
        cert.witness_tableau = tab_min;
    } else if (!window.contains(cert.weight_max)) {
        cert.worst_weight = cert.weight_max;
        cert.witness_tableau = tab_max;
    } else {
        const EpsRational margin_lo = EpsRational{Rat(cert.weight_min)} - window.lo;
        const EpsRational margin_hi = window.hi - EpsRational{Rat(cert.weight_max)};
        if (margin_lo <= margin_hi) {
            cert.worst_weight = cert.weight_min;
            cert.witness_tableau = tab_min;
        } else {
            cert.worst_weight = cert.weight_max;
            cert.witness_tableau = tab_max;
        }
    }
    return cert;
}

KoszulSweep sweep_koszul_block(const WallWindowSetup& setup, bool parallel) {
    const long long a = setup.derived.a;
    const int d = setup.d;
    const long long dim_w = koszul_wedge_dim(setup);
    const auto block = enumerate_block(static_cast<int>(a), d);
    const int nchi = static_cast<int>(block.size());

    std::vector<std::vector<KoszulCertificate>> per_chi(nchi);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int ci = 0; ci < nchi; ++ci) {
        auto& local = per_chi[ci];
        for (long long k = 0; k <= dim_w; ++k)
            for (int i = 0; i < d; ++i)
                local.push_back(verify_koszul_window(setup, block[ci], static_cast<int>(k), i));
    }
    (void)parallel;

    KoszulSweep sweep;
    for (int ci = 0; ci < nchi; ++ci)
        for (auto& cert : per_chi[ci]) {
            ++sweep.checks;
            if (!cert.pass) {
                sweep.pass = false;
                sweep.failures.push_back(cert);
            }
        }
    return sweep;
}

TwistDescriptor hall_twists(int l, const JSequence& jseq, int m, int d) {
    if (m < 1) throw std::invalid_argument("hall_twists: m must be >= 1");
    if (d < 0) throw std::invalid_argument("hall_twists: d must be >= 0");
    if (jseq.length() != l)
        throw std::invalid_argument("hall_twists: sequence length must equal l");
    const long long h = static_cast<long long>(m) * m - m;
    for (int v : jseq.values())
        if (v > m - l)
            throw std::invalid_argument("hall_twists: sequence value exceeds bound m-l");

    TwistDescriptor t;
    t.l = l;
    t.jseq = jseq;
    for (int i = 1; i <= l; ++i) {
        t.per_factor_weights.push_back(jseq.values()[i - 1] + (2LL * i - 1) * h);
        t.knoerrer_weights.push_back((2LL * i - d - 1) * h);
    }
    t.tail_twist = (l > 0 ? jseq.values()[l - 1] : 0) + 2LL * l * h;
    const long long twice = static_cast<long long>(l) * (2LL * d - l - 1);
    if (twice % 2 != 0) throw std::logic_error("hall_twists: shift is not integral");
    t.shift = (twice / 2) * h;
    return t;
}

std::vector<ConifoldSummand> conifold_sod(std::pair<long long, long long> v, int m) {
    if (m < 1) throw std::invalid_argument("conifold_sod: m must be >= 1");
    if (v.first < 0 || v.second < 0)
        throw std::invalid_argument("conifold_sod: v must be componentwise >= 0");
    const long long sm0 = m, sm1 = m - 1;
    int l_cap = 0;
    for (int l = 1; l <= m; ++l) {
        if (v.first - l * sm0 < 0 || v.second - l * sm1 < 0) break;
        l_cap = l;
    }
    std::vector<ConifoldSummand> out;
    for (int l = 0; l <= l_cap; ++l) {
        for (const JSequence& js : enumerate_jseqs(l, m - l, l_cap)) {
            ConifoldSummand s;
            s.l = l;
            s.jseq = js;
            s.child = {v.first - l * sm0, v.second - l * sm1};
            s.twists = hall_twists(l, js, m, l);
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const ConifoldSummand& x, const ConifoldSummand& y) {
        return jseq_compare(x.jseq, y.jseq) > 0;
    });
    return out;
}

Int iterated_sod_count(std::pair<long long, long long> v, int M) {
    std::map<std::tuple<long long, long long, int>, Int> memo;
    auto rec = [&](auto&& self, std::pair<long long, long long> u, int m) -> Int {
        if (m == 0) return (u.first == 0 && u.second == 0) ? Int(1) : Int(0);
        const auto key = std::make_tuple(u.first, u.second, m);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Int total = 0;
        for (const ConifoldSummand& s : conifold_sod(u, m))
            total += self(self, s.child, m - 1);
        memo[key] = total;
        return total;
    };
    return rec(rec, v, M);
}

}  // namespace conifold
