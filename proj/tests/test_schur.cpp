#include <doctest.h>

#include <algorithm>

#include "conifold/schur.hpp"

using namespace conifold;

namespace {

// Hook content formula, the independent dimension oracle:
// dim V(lambda) = prod over cells (d + j - i) / hook(i, j), 1-based.
Int hook_content_dim(const Character& chi) {
    const int d = chi.rank();
    const YoungDiagram delta = char_to_diagram(chi);
    const auto& rows = delta.rows();
    const auto cols = delta.columns();
    Int num = 1, den = 1;
    for (int i = 1; i <= static_cast<int>(rows.size()); ++i)
        for (int j = 1; j <= rows[i - 1]; ++j) {
            num *= d + j - i;
            den *= rows[i - 1] - j + cols[j - 1] - i + 1;
        }
    return num / den;
}

}  // namespace

TEST_CASE("schur_weights on small representations") {
    WeightMultiset w = schur_weights(Character({0, 0, 0}));
    REQUIRE(w.size() == 1);
    CHECK(w.at({0, 0, 0}) == 1);

    w = schur_weights(Character({0, 1}));
    REQUIRE(w.size() == 2);
    CHECK(w.at({1, 0}) == 1);
    CHECK(w.at({0, 1}) == 1);

    w = schur_weights(Character({1, 1}));
    REQUIRE(w.size() == 1);
    CHECK(w.at({1, 1}) == 1);
}

TEST_CASE("schur_weights rejects non-polynomial characters") {
    CHECK_THROWS_AS(schur_weights(Character({-1, 0})), std::invalid_argument);
}

TEST_CASE("total multiplicity equals the hook content dimension") {
    for (int c = 2; c <= 6; ++c)
        for (int d = 1; d <= 3; ++d)
            for (const Character& chi : enumerate_block(c, d))
                CHECK(schur_dim(chi) == hook_content_dim(chi));
    // a couple of classics: dim V((1,2)) = 8 for gl(3), dim Sym^2 C^3 = 6
    CHECK(schur_dim(Character({0, 1, 2})) == 8);
    CHECK(schur_dim(Character({0, 0, 2})) == 6);
}

TEST_CASE("weight multiset is Weyl symmetric") {
    for (const Character& chi :
         {Character({0, 1, 2}), Character({0, 2, 3}), Character({1, 1, 3})}) {
        const WeightMultiset w = schur_weights(chi);
        for (const auto& [wt, mult] : w) {
            std::vector<int> swapped = wt;
            for (size_t i = 0; i + 1 < swapped.size(); ++i) {
                std::swap(swapped[i], swapped[i + 1]);
                CHECK(w.at(swapped) == mult);
                std::swap(swapped[i], swapped[i + 1]);
            }
        }
    }
}

TEST_CASE("weights respect the componentwise block bounds") {
    const int c = 6, d = 3;
    for (const Character& chi : enumerate_block(c, d)) {
        for (const auto& [wt, mult] : schur_weights(chi)) {
            for (int x : wt) {
                CHECK(x >= chi.min_entry());
                CHECK(x <= chi.max_entry());
                CHECK(x >= 0);
            }
        }
    }
}
