#pragma once

#include <vector>

#include "conifold/partitions.hpp"
#include "conifold/schur.hpp"

namespace conifold {

/// The flip datum G_{a,b}(d): quotient of Hom(A,V) + Hom(V,B) by GL(V).
struct FlipSetup {
    int a = 0;
    int b = 0;
    int d = 0;
};

FlipSetup make_flip_setup(int a, int b, int d);

enum class Side { Plus, Minus };

/// One Kempf-Ness stratum: one-parameter subgroup exponents, numeric width
/// eta, and the squared slope wt^2/|lambda|^2 kept as an exact rational.
struct KNStratum {
    int index = 0;
    Side side = Side::Plus;
    std::vector<int> lambda;
    long long eta = 0;
    Rat slope_sq{0};
};

/// eta = <lambda, (Y^dual)^{lambda>0} - (g^dual)^{lambda>0}>, evaluated from
/// the weight lists of Y and g themselves (duals taken internally).
long long generic_eta(const std::vector<int>& lambda,
                      const std::vector<std::vector<int>>& y_weights,
                      const std::vector<std::vector<int>>& g_weights);

/// Weights of Hom(A,V) + Hom(V,B) as a GL(V)-representation: a copies of
/// each e_j and b copies of each -e_j.
std::vector<std::vector<int>> flip_y_weights(const FlipSetup& setup);

/// Root weights e_j - e_k (j != k) of gl(V); zero weights omitted.
std::vector<std::vector<int>> gl_root_weights(int d);

/// Strata i = 0..d-1 ordered by strictly decreasing slope. Side + uses the
/// closed form eta_i = (a-i)(d-i); side - evaluates generic_eta.
std::vector<KNStratum> kn_strata(const FlipSetup& setup, Side side);

struct ResolutionStep {
    YoungDiagram delta;  // delta_i
    long long s = 0;     // boxes added, |delta_i| - |delta|
    Int mult;            // dim of the s-th wedge of B
};

struct Resolution {
    std::vector<ResolutionStep> steps;
    int block_c = 0;     // smallest c >= b with delta in B_c(d-1)
    long long next_s = 0;  // first s value exceeding b (termination witness)
};

/// Column-filling resolution: delta_1 fills column 1 to height d, delta_i
/// fills column i to one more than the height of column i-1 of delta, with
/// s_i = d + i - 1 - mu_i(delta); steps are emitted while s_i <= b.
Resolution resolve(const YoungDiagram& delta, int d, int b);

/// Drops the full first column and one box from every remaining column:
/// the result has column heights (mu_2 - 1, mu_3 - 1, ...). Requires
/// mu_1 = d.
YoungDiagram strip_transform(const YoungDiagram& delta, int d);

/// One semiorthogonal summand: the index sequence plus its child block
/// label B_b(d-l).
struct SODSummand {
    int l = 0;
    JSequence jseq;
    int child_c = 0;  // block parameter b
    int child_d = 0;  // rank d - l
};

/// All (l, j_seq) with 0 <= l <= d and 0 <= j_1 <= ... <= j_l <= c-b-l,
/// sorted so any pair with jseq > jseq' places jseq first.
std::vector<SODSummand> sod_summands(const FlipSetup& setup, int c);

/// Hom(C_j, C_j') vanishes exactly when j > j' in the padded order.
bool hom_vanishes(const JSequence& a, const JSequence& b);

/// Lower window bound for the stratum: -eta + epsilon on side +, 0 on side -.
EpsRational default_window_offset(const KNStratum& stratum);

/// True iff every weight of V(chi) pairs with lambda inside [m_i, m_i + eta).
bool window_weight_check(const Character& chi, const KNStratum& stratum,
                         const EpsRational& m_i);

/// Sweep window_weight_check over an entire block with the default offsets;
/// returns one flag per (character, stratum) pair, characters in
/// enumerate_block order. Parallel and serial paths give identical output.
std::vector<std::vector<bool>> sweep_window_block(const FlipSetup& setup, Side side,
                                                  int c, bool parallel = true);

}  // namespace conifold
