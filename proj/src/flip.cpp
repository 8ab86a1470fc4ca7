#include "conifold/flip.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace conifold {

FlipSetup make_flip_setup(int a, int b, int d) {
    if (a < 0 || b < 0 || d < 0)
        throw std::invalid_argument("FlipSetup: a, b, d must be >= 0");
    if (a < b) throw std::invalid_argument("FlipSetup: requires a >= b");
    return FlipSetup{a, b, d};
}

long long generic_eta(const std::vector<int>& lambda,
                      const std::vector<std::vector<int>>& y_weights,
                      const std::vector<std::vector<int>>& g_weights) {
    auto dual_positive_sum = [&](const std::vector<std::vector<int>>& weights) {
        long long sum = 0;
        for (const auto& w : weights) {
            long long p = 0;
            for (size_t j = 0; j < w.size(); ++j) p -= static_cast<long long>(lambda[j]) * w[j];
            if (p > 0) sum += p;
        }
        return sum;
    };
    return dual_positive_sum(y_weights) - dual_positive_sum(g_weights);
}

std::vector<std::vector<int>> flip_y_weights(const FlipSetup& setup) {
    std::vector<std::vector<int>> ws;
    for (int j = 0; j < setup.d; ++j) {
        std::vector<int> e(setup.d, 0);
        e[j] = 1;
        for (int r = 0; r < setup.a; ++r) ws.push_back(e);
        e[j] = -1;
        for (int r = 0; r < setup.b; ++r) ws.push_back(e);
    }
    return ws;
}

std::vector<std::vector<int>> gl_root_weights(int d) {
    std::vector<std::vector<int>> ws;
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            if (j == k) continue;
            std::vector<int> w(d, 0);
            w[j] = 1;
            w[k] = -1;
            ws.push_back(w);
        }
    return ws;
}

std::vector<KNStratum> kn_strata(const FlipSetup& setup, Side side) {
    const int d = setup.d;
    std::vector<KNStratum> out;
    const auto yw = flip_y_weights(setup);
    const auto gw = gl_root_weights(d);
    // Strata with i beyond the possible rank of the defining map are empty.
    const int top = std::min(d - 1, side == Side::Plus ? setup.a : setup.b);
    for (int i = 0; i <= top; ++i) {
        KNStratum s;
        s.index = i;
        s.side = side;
        s.lambda.assign(d, 0);
        if (side == Side::Plus) {
            for (int j = i; j < d; ++j) s.lambda[j] = -1;
            s.eta = static_cast<long long>(setup.a - i) * (d - i);
        } else {
            for (int j = 0; j < d - i; ++j) s.lambda[j] = 1;
            s.eta = generic_eta(s.lambda, yw, gw);
        }
        // wt of the linearization at the center is -(d-i) on both sides, so
        // mu_i^2 = (d-i)^2 / |lambda|^2 = d-i.
        s.slope_sq = Rat(d - i);
        out.push_back(std::move(s));
    }
    return out;
}

Resolution resolve(const YoungDiagram& delta, int d, int b) {
    if (d < 1) throw std::invalid_argument("resolve: d must be >= 1");
    if (b < 0) throw std::invalid_argument("resolve: b must be >= 0");
    if (delta.height() > d - 1)
        throw std::invalid_argument("resolve: diagram must have at most d-1 rows");

    Resolution res;
    res.block_c = std::max(b, d - 1 + delta.width());

    const std::vector<int> mu = delta.columns();
    auto mu_at = [&](int i) {  // 1-based, 0 beyond the width
        return (i >= 1 && i <= static_cast<int>(mu.size())) ? mu[i - 1] : 0;
    };

    for (int i = 1;; ++i) {
        const long long s = d + i - 1 - mu_at(i);
        if (s > b) {
            res.next_s = s;
            break;
        }
        std::vector<int> cols;
        cols.push_back(d);
        for (int j = 2; j <= i; ++j) cols.push_back(mu_at(j - 1) + 1);
        for (int j = i + 1; j <= static_cast<int>(mu.size()); ++j) cols.push_back(mu_at(j));
        ResolutionStep step;
        step.delta = YoungDiagram::from_columns(cols);
        step.s = s;
        step.mult = binomial(b, s);
        res.steps.push_back(std::move(step));
    }
    return res;
}

YoungDiagram strip_transform(const YoungDiagram& delta, int d) {
    const std::vector<int> mu = delta.columns();
    if (mu.empty() || mu[0] != d)
        throw std::invalid_argument("strip_transform: first column must have height d");
    std::vector<int> cols;
    for (size_t j = 1; j < mu.size(); ++j)
        if (mu[j] - 1 > 0) cols.push_back(mu[j] - 1);
    return YoungDiagram::from_columns(cols);
}

std::vector<SODSummand> sod_summands(const FlipSetup& setup, int c) {
    if (c < setup.b) throw std::invalid_argument("sod_summands: requires c >= b");
    std::vector<SODSummand> out;
    for (int l = 0; l <= setup.d; ++l) {
        for (const JSequence& js : enumerate_jseqs(l, c - setup.b - l, setup.d)) {
            SODSummand s;
            s.l = l;
            s.jseq = js;
            s.child_c = setup.b;
            s.child_d = setup.d - l;
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end(), [](const SODSummand& x, const SODSummand& y) {
        return jseq_compare(x.jseq, y.jseq) > 0;
    });
    return out;
}

bool hom_vanishes(const JSequence& a, const JSequence& b) {
    return jseq_compare(a, b) > 0;
}

EpsRational default_window_offset(const KNStratum& stratum) {
    if (stratum.side == Side::Plus) return EpsRational{Rat(-stratum.eta), 1};
    return EpsRational{Rat(0), 0};
}

bool window_weight_check(const Character& chi, const KNStratum& stratum,
                         const EpsRational& m_i) {
    if (chi.rank() != static_cast<int>(stratum.lambda.size()))
        throw std::invalid_argument("window_weight_check: rank mismatch");
    const WeightInterval window{m_i, m_i + EpsRational{Rat(stratum.eta), 0}};
    for (const auto& [wt, mult] : schur_weights(chi)) {
        long long pairing = 0;
        for (size_t j = 0; j < wt.size(); ++j)
            pairing += static_cast<long long>(stratum.lambda[j]) * wt[j];
        if (!window.contains(pairing)) return false;
    }
    return true;
}

std::vector<std::vector<bool>> sweep_window_block(const FlipSetup& setup, Side side,
                                                  int c, bool parallel) {
    const auto strata = kn_strata(setup, side);
    const auto block = enumerate_block(c, setup.d);
    std::vector<std::vector<bool>> result(block.size(),
                                          std::vector<bool>(strata.size(), false));
    const int n = static_cast<int>(block.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int idx = 0; idx < n; ++idx) {
        for (size_t si = 0; si < strata.size(); ++si)
            result[idx][si] =
                window_weight_check(block[idx], strata[si], default_window_offset(strata[si]));
    }
    (void)parallel;
    return result;
}

}  // namespace conifold
