#pragma once

#include <utility>
#include <vector>

#include "conifold/flip.hpp"
#include "conifold/quiver.hpp"

namespace conifold {

/// Wall-window datum at a polystable point R_inf + (V tensor S_m) with
/// dim V = d on the wall W_m.
struct WallWindowSetup {
    std::pair<long long, long long> v;
    int m = 1;
    int d = 0;
    ExtQuiverData derived;
};

WallWindowSetup make_wall_window_setup(std::pair<long long, long long> v, int m, int d);

/// gamma_lambda = <lambda, W^{lambda>0}> for W = End_0(V) tensor C^{m^2-m};
/// equals i(d-i)(m^2-m) on lambda_i^+.
long long gamma_weight(const std::vector<int>& lambda, int m);

/// Weights of Ext^1(R,R) as a GL(V)-representation (trivial summands
/// omitted): V^a + (V^dual)^b + W + W^dual.
std::vector<std::vector<int>> ext_quiver_y_weights(const WallWindowSetup& setup);

/// Window offset: -eta/2 + (C/2 + m/2) <lambda, chi_0> on side +, and
/// -eta/2 + (C/2) <lambda, chi_0> on side -.
EpsRational window_offset(const WallWindowSetup& setup, int i, Side side,
                          long long eta, long long chi0_pairing);

struct KoszulCertificate {
    bool pass = false;
    bool bound_pass = false;  // certificate from the extremes +-gamma alone
    long long worst_weight = 0;
    WeightInterval interval;
    std::vector<std::vector<int>> witness_tableau;
    long long weight_min = 0;
    long long weight_max = 0;
};

/// Checks every lambda_i^+-weight of V(chi) tensor wedge^k W, shifted by
/// d(m^2-m) <lambda_i^+, chi_0>, against [m_i^+, m_i^+ + eta_i^+). Wedge
/// weights are enumerated exactly for d <= 3 and bounded by [-gamma, gamma]
/// otherwise.
KoszulCertificate verify_koszul_window(const WallWindowSetup& setup, const Character& chi,
                                       int k, int i);

long long koszul_wedge_dim(const WallWindowSetup& setup);

struct KoszulSweep {
    bool pass = true;
    long long checks = 0;
    std::vector<KoszulCertificate> failures;  // in deterministic (chi, k, i) order
};

/// Exhaustive verification over all chi in B_a(d), all k, all strata.
/// Parallel fan-out is over characters; output is independent of it.
KoszulSweep sweep_koszul_block(const WallWindowSetup& setup, bool parallel = true);

/// Twist bookkeeping for one Hall-product summand.
struct TwistDescriptor {
    int l = 0;
    JSequence jseq;
    std::vector<long long> per_factor_weights;  // j_i + (2i-1)(m^2-m)
    long long tail_twist = 0;                   // j_l + 2l(m^2-m)
    std::vector<long long> knoerrer_weights;    // (2i-d-1)(m^2-m)
    long long shift = 0;                        // (dl - l/2 - l^2/2)(m^2-m)
};

TwistDescriptor hall_twists(int l, const JSequence& jseq, int m, int d);

struct ConifoldSummand {
    int l = 0;
    JSequence jseq;
    std::pair<long long, long long> child;  // v - l * s_m
    TwistDescriptor twists;
};

/// All l >= 0 with v - l*s_m >= 0 and all j-sequences bounded by m-l,
/// ordered descending by jseq_compare; per-l count is binomial(m, l).
/// Twist data uses d = l (the smallest polystable locus seeing the summand).
std::vector<ConifoldSummand> conifold_sod(std::pair<long long, long long> v, int m);

/// Summand count from iterating conifold_sod over walls m = M..1 down to the
/// empty chamber; equals a_{n,beta} under (beta, n) = (v0-v1, v0).
Int iterated_sod_count(std::pair<long long, long long> v, int M);

}  // namespace conifold
