#include "conifold/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace conifold {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1)
            throw std::invalid_argument("YoungDiagram: row lengths must be positive");
        if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
            throw std::invalid_argument("YoungDiagram: rows must be weakly decreasing");
    }
}

long long YoungDiagram::size() const {
    long long s = 0;
    for (int r : rows_) s += r;
    return s;
}

std::vector<int> YoungDiagram::columns() const {
    std::vector<int> mu(width(), 0);
    for (int r : rows_)
        for (int j = 0; j < r; ++j) ++mu[j];
    return mu;
}

YoungDiagram YoungDiagram::from_columns(const std::vector<int>& cols) {
    for (size_t j = 0; j + 1 < cols.size(); ++j)
        if (cols[j] < cols[j + 1])
            throw std::invalid_argument("from_columns: columns must be weakly decreasing");
    int h = cols.empty() ? 0 : cols[0];
    std::vector<int> rows;
    for (int i = 1; i <= h; ++i) {
        int len = 0;
        while (len < static_cast<int>(cols.size()) && cols[len] >= i) ++len;
        if (len > 0) rows.push_back(len);
    }
    return YoungDiagram(rows);
}

Character::Character(std::vector<int> entries) : entries_(std::move(entries)) {
    for (size_t i = 0; i + 1 < entries_.size(); ++i)
        if (entries_[i] > entries_[i + 1])
            throw std::invalid_argument("Character: entries must be weakly increasing");
}

bool Character::in_block(int c) const {
    int d = rank();
    if (c < d) return false;
    for (int x : entries_)
        if (x < 0 || x > c - d) return false;
    return true;
}

Character diagram_to_char(const YoungDiagram& delta, int d) {
    if (delta.height() > d)
        throw std::invalid_argument("diagram_to_char: diagram has more than d rows");
    std::vector<int> x(d, 0);
    const auto& rows = delta.rows();
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) x[d - 1 - i] = rows[i];
    return Character(x);
}

YoungDiagram char_to_diagram(const Character& chi) {
    std::vector<int> rows;
    const auto& x = chi.entries();
    for (int i = chi.rank() - 1; i >= 0; --i) {
        if (x[i] < 0)
            throw std::invalid_argument("char_to_diagram: negative entry");
        if (x[i] > 0) rows.push_back(x[i]);
    }
    return YoungDiagram(rows);
}

std::vector<Character> enumerate_block(int c, int d) {
    if (c < 0 || d < 0)
        throw std::invalid_argument("enumerate_block: c, d must be >= 0");
    std::vector<Character> out;
    if (c < d) return out;
    const int w = c - d;
    std::vector<int> x(d, 0);
    // Lexicographic generation of weakly increasing tuples in [0, w]^d.
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == d) {
            out.emplace_back(x);
            return;
        }
        for (int v = lo; v <= w; ++v) {
            x[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

Character tensor_det(const Character& chi, int j) {
    std::vector<int> x = chi.entries();
    for (int& v : x) v += j;
    return Character(x);
}

JSequence::JSequence(std::vector<int> values, int ambient_length)
    : values_(std::move(values)), ambient_(ambient_length) {
    if (static_cast<int>(values_.size()) > ambient_)
        throw std::invalid_argument("JSequence: length exceeds ambient length");
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0)
            throw std::invalid_argument("JSequence: values must be >= 0");
        if (i + 1 < values_.size() && values_[i] > values_[i + 1])
            throw std::invalid_argument("JSequence: values must be weakly increasing");
    }
}

std::vector<int> JSequence::padded() const {
    std::vector<int> p = values_;
    p.resize(ambient_, -1);
    return p;
}

int jseq_compare(const JSequence& a, const JSequence& b) {
    if (a.ambient_length() != b.ambient_length())
        throw std::invalid_argument("jseq_compare: ambient lengths differ");
    std::vector<int> pa = a.padded(), pb = b.padded();
    for (size_t i = 0; i < pa.size(); ++i) {
        if (pa[i] > pb[i]) return 1;
        if (pa[i] < pb[i]) return -1;
    }
    return 0;
}

std::vector<JSequence> enumerate_jseqs(int l, int bound, int d) {
    if (l < 0 || l > d)
        throw std::invalid_argument("enumerate_jseqs: need 0 <= l <= d");
    std::vector<JSequence> out;
    if (l == 0) {
        out.emplace_back(std::vector<int>{}, d);
        return out;
    }
    if (bound < 0) return out;
    std::vector<int> j(l, 0);
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == l) {
            out.emplace_back(j, d);
            return;
        }
        for (int v = lo; v <= bound; ++v) {
            j[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(),
              [](const JSequence& x, const JSequence& y) { return jseq_compare(x, y) > 0; });
    return out;
}

}  // namespace conifold
