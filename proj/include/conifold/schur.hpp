#pragma once

#include <functional>
#include <map>
#include <vector>

#include "conifold/partitions.hpp"

namespace conifold {

/// Weight multiset of the irreducible GL(d)-module V(chi): map from weight
/// vector (content counts of values 1..d) to multiplicity.
using WeightMultiset = std::map<std::vector<int>, long long>;

/// Enumerate the semistandard tableaux of shape delta(chi) with entries in
/// {1, ..., d} and collect their content vectors. Requires entries >= 0.
WeightMultiset schur_weights(const Character& chi);

/// Streaming variant: fn receives each tableau (rows of entries, 1-based
/// values) together with its content vector.
void for_each_ssyt(const Character& chi,
                   const std::function<void(const std::vector<std::vector<int>>&,
                                            const std::vector<int>&)>& fn);

/// Total multiplicity, i.e. dim V(chi).
Int schur_dim(const Character& chi);

}  // namespace conifold
