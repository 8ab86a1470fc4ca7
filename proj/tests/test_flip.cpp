#include <doctest.h>

#include "conifold/flip.hpp"

using namespace conifold;

TEST_CASE("kn_strata side + carries the closed-form eta") {
    const auto strata = kn_strata(make_flip_setup(8, 6, 2), Side::Plus);
    REQUIRE(strata.size() == 2);
    CHECK(strata[0].eta == 16);
    CHECK(strata[1].eta == 7);
    CHECK(strata[0].lambda == std::vector<int>{-1, -1});
    CHECK(strata[1].lambda == std::vector<int>{0, -1});
}

TEST_CASE("kn_strata side - evaluates generic_eta") {
    const auto strata = kn_strata(make_flip_setup(8, 6, 2), Side::Minus);
    REQUIRE(strata.size() == 2);
    CHECK(strata[0].lambda == std::vector<int>{1, 1});
    CHECK(strata[1].lambda == std::vector<int>{1, 0});
    CHECK(strata[0].eta == 12);
    CHECK(strata[1].eta == 5);
    // the brute force lands on (b-i)(d-i) across the grid
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= a; ++b)
            for (int d = 0; d <= 4; ++d) {
                const auto minus = kn_strata(make_flip_setup(a, b, d), Side::Minus);
                for (const auto& s : minus)
                    CHECK(s.eta == static_cast<long long>(b - s.index) * (d - s.index));
            }
}

TEST_CASE("kn_strata empty for d = 0 and slopes strictly decreasing") {
    CHECK(kn_strata(make_flip_setup(5, 3, 0), Side::Plus).empty());
    for (Side side : {Side::Plus, Side::Minus}) {
        const auto strata = kn_strata(make_flip_setup(7, 4, 4), side);
        for (size_t i = 0; i + 1 < strata.size(); ++i)
            CHECK(strata[i].slope_sq > strata[i + 1].slope_sq);
        for (const auto& s : strata) CHECK(s.slope_sq > Rat(0));
    }
}

TEST_CASE("generic_eta against the side + closed form") {
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= a; ++b)
            for (int d = 0; d <= 4; ++d) {
                const FlipSetup setup = make_flip_setup(a, b, d);
                const auto yw = flip_y_weights(setup);
                const auto gw = gl_root_weights(d);
                const auto plus = kn_strata(setup, Side::Plus);
                for (const auto& s : plus)
                    CHECK(generic_eta(s.lambda, yw, gw) == s.eta);
            }
    // lambda = 0 pairs with nothing
    CHECK(generic_eta(std::vector<int>(3, 0), flip_y_weights(make_flip_setup(4, 2, 3)),
                      gl_root_weights(3)) == 0);
}

TEST_CASE("resolve reproduces the column-filling algorithm") {
    const Resolution res = resolve(YoungDiagram({4, 2, 1}), 4, 7);
    REQUIRE(res.steps.size() == 4);
    CHECK(res.steps[0].delta == YoungDiagram({4, 2, 1, 1}));
    CHECK(res.steps[1].delta == YoungDiagram({4, 2, 2, 2}));
    CHECK(res.steps[2].delta == YoungDiagram({4, 3, 3, 2}));
    CHECK(res.steps[3].delta == YoungDiagram({4, 4, 3, 2}));
    const std::vector<long long> s{1, 3, 5, 6};
    const std::vector<long long> mult{7, 35, 21, 7};
    for (int i = 0; i < 4; ++i) {
        CHECK(res.steps[i].s == s[i]);
        CHECK(res.steps[i].mult == mult[i]);
    }
    CHECK(res.next_s == 8);
    CHECK(res.block_c == 7);
}

TEST_CASE("resolve termination and edge cases") {
    CHECK(resolve(YoungDiagram{}, 1, 0).steps.empty());
    CHECK_THROWS_AS(resolve(YoungDiagram({2, 1, 1}), 3, 5), std::invalid_argument);

    // K <= c-d+1 and every delta_i stays inside B_{c+1}(d)
    for (int d = 2; d <= 4; ++d)
        for (int c = d - 1; c <= 8; ++c)
            for (const Character& chi : enumerate_block(c, d - 1)) {
                const int b = c;  // the regime of the resolution statement
                const Resolution res = resolve(char_to_diagram(chi), d, b);
                CHECK(static_cast<int>(res.steps.size()) <= c - d + 1);
                for (const auto& step : res.steps) {
                    CHECK(step.delta.height() <= d);
                    CHECK(step.delta.width() <= c - d + 1);
                    CHECK(step.s == step.delta.size() - char_to_diagram(chi).size());
                }
                for (size_t i = 0; i + 1 < res.steps.size(); ++i)
                    CHECK(res.steps[i].s < res.steps[i + 1].s);
            }
}

TEST_CASE("strip_transform peels the full column") {
    CHECK(strip_transform(YoungDiagram({5, 4, 3, 2, 2}), 5) == YoungDiagram({3, 2, 1, 1}));
    CHECK(strip_transform(YoungDiagram({1, 1, 1}), 3) == YoungDiagram{});
    CHECK_THROWS_AS(strip_transform(YoungDiagram({2, 1}), 3), std::invalid_argument);
}

TEST_CASE("strip_transform drops exactly b boxes and resolve reconstructs") {
    const YoungDiagram delta({5, 4, 3, 2, 2});
    const int d = 5;
    const int b = d + delta.width() - 1;  // width exactly b-d+1
    const YoungDiagram stripped = strip_transform(delta, d);
    CHECK(delta.size() - stripped.size() == b);

    const Resolution res = resolve(stripped, d, b);
    REQUIRE(static_cast<int>(res.steps.size()) == b - d + 1);
    CHECK(res.steps.back().delta == delta);
    CHECK(res.steps.back().mult == 1);

    // same round trip across a whole block family
    for (const Character& chi : enumerate_block(8, 3)) {
        const YoungDiagram dl = char_to_diagram(chi);
        if (dl.height() != 3 || dl.width() == 0) continue;
        const int bb = 3 + dl.width() - 1;
        const YoungDiagram st = strip_transform(dl, 3);
        CHECK(dl.size() - st.size() == bb);
        const Resolution rt = resolve(st, 3, bb);
        REQUIRE(!rt.steps.empty());
        CHECK(rt.steps.back().delta == dl);
    }
}

TEST_CASE("sod_summands counts and ordering") {
    CHECK_THROWS_AS(sod_summands(make_flip_setup(4, 3, 2), 2), std::invalid_argument);

    const auto single = sod_summands(make_flip_setup(5, 2, 0), 4);
    REQUIRE(single.size() == 1);
    CHECK(single[0].l == 0);

    for (int a = 1; a <= 7; ++a)
        for (int b = 0; b <= a; ++b)
            for (int d = 0; d <= 4; ++d) {
                const auto summands = sod_summands(make_flip_setup(a, b, d), a);
                // per-l counts are binomial(a-b, l)
                std::vector<long long> per_l(d + 1, 0);
                for (const auto& s : summands) ++per_l[s.l];
                for (int l = 0; l <= d; ++l) CHECK(per_l[l] == binomial(a - b, l));
                // emitted order never violates the vanishing direction
                for (size_t i = 0; i + 1 < summands.size(); ++i)
                    CHECK_FALSE(hom_vanishes(summands[i + 1].jseq, summands[i].jseq));
            }
}

TEST_CASE("sod_summands satisfies the rank identity") {
    for (int c = 0; c <= 12; ++c)
        for (int b = 0; b <= c; ++b)
            for (int d = 0; d <= std::min(c, 5); ++d) {
                Int total = 0;
                for (const auto& s : sod_summands(make_flip_setup(c, b, d), c))
                    total += Int(enumerate_block(s.child_c, s.child_d).size());
                CHECK(total == Int(enumerate_block(c, d).size()));
            }
}

TEST_CASE("hom_vanishes follows the padded order") {
    CHECK(hom_vanishes(JSequence({1}, 3), JSequence({0}, 3)));
    CHECK_FALSE(hom_vanishes(JSequence({0, 1}, 3), JSequence({0, 1}, 3)));
    CHECK(hom_vanishes(JSequence({0, 1}, 3), JSequence({0, 0, 0}, 3)));
}

TEST_CASE("window_weight_check accepts the block on both sides") {
    for (int a = 1; a <= 6; ++a)
        for (int b = 0; b <= a; ++b)
            for (int d = 1; d <= 3; ++d) {
                const FlipSetup setup = make_flip_setup(a, b, d);
                for (Side side : {Side::Plus, Side::Minus}) {
                    const int c = (side == Side::Plus) ? a : b;
                    for (const auto& row : sweep_window_block(setup, side, c, false))
                        for (bool ok : row) CHECK(ok);
                }
            }
}

TEST_CASE("window_weight_check rejects characters outside the block") {
    const FlipSetup setup = make_flip_setup(4, 2, 2);
    const auto strata = kn_strata(setup, Side::Plus);
    const Character outside({3, 3});  // entries exceed a - d = 2
    CHECK_FALSE(window_weight_check(outside, strata[1], default_window_offset(strata[1])));
}

TEST_CASE("window_weight_check trivial character") {
    const FlipSetup setup = make_flip_setup(5, 3, 2);
    for (const auto& stratum : kn_strata(setup, Side::Plus)) {
        // 0 lies in [m_i, m_i + eta) whenever m_i <= 0 < m_i + eta
        CHECK(window_weight_check(Character({0, 0}), stratum,
                                  default_window_offset(stratum)));
        CHECK_FALSE(window_weight_check(Character({0, 0}), stratum,
                                        EpsRational{Rat(1), 0}));
    }
}
