#include "conifold/schur.hpp"

#include <stdexcept>

namespace conifold {

namespace {

void check_polynomial(const Character& chi) {
    if (chi.min_entry() < 0)
        throw std::invalid_argument(
            "schur_weights: negative entries unsupported (polynomial representations only)");
}

}  // namespace

void for_each_ssyt(const Character& chi,
                   const std::function<void(const std::vector<std::vector<int>>&,
                                            const std::vector<int>&)>& fn) {
    check_polynomial(chi);
    const int d = chi.rank();
    const YoungDiagram delta = char_to_diagram(chi);
    const std::vector<int>& shape = delta.rows();

    std::vector<std::vector<int>> t;
    for (int r : shape) t.emplace_back(r, 0);
    std::vector<int> content(d, 0);

    if (shape.empty()) {
        fn(t, content);
        return;
    }

    const int nrows = static_cast<int>(shape.size());
    // Fill cells row-major: entries weakly increase along rows, strictly
    // increase down columns, values in 1..d.
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == nrows) {
            fn(t, content);
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == shape[i]) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);
        if (i > 0 && j < shape[i - 1]) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= d; ++v) {
            t[i][j] = v;
            ++content[v - 1];
            self(self, ni, nj);
            --content[v - 1];
        }
    };
    rec(rec, 0, 0);
}

WeightMultiset schur_weights(const Character& chi) {
    WeightMultiset w;
    for_each_ssyt(chi, [&](const std::vector<std::vector<int>>&, const std::vector<int>& c) {
        ++w[c];
    });
    return w;
}

Int schur_dim(const Character& chi) {
    Int n = 0;
    for (const auto& [wt, mult] : schur_weights(chi)) n += mult;
    return n;
}

}  // namespace conifold
