#pragma once

#include <vector>

#include "conifold/numeric.hpp"

namespace conifold {

/// Young diagram stored as weakly decreasing positive row lengths.
/// The empty vector is the empty diagram.
class YoungDiagram {
public:
    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    long long size() const;
    int height() const { return static_cast<int>(rows_.size()); }
    int width() const { return rows_.empty() ? 0 : rows_[0]; }

    /// Column heights mu_j = #{i : rows[i] >= j}, weakly decreasing,
    /// length = width().
    std::vector<int> columns() const;

    /// Rebuild a diagram from weakly decreasing column heights (transpose).
    static YoungDiagram from_columns(const std::vector<int>& cols);

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
        return a.rows_ == b.rows_;
    }
    friend bool operator!=(const YoungDiagram& a, const YoungDiagram& b) {
        return !(a == b);
    }

private:
    std::vector<int> rows_;
};

/// Dominant GL(d)-weight x_1 <= x_2 <= ... <= x_d. Entries may be negative;
/// block membership and Schur expansion require polynomial (>= 0) weights.
class Character {
public:
    Character() = default;
    explicit Character(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int rank() const { return static_cast<int>(entries_.size()); }
    int min_entry() const { return entries_.empty() ? 0 : entries_.front(); }
    int max_entry() const { return entries_.empty() ? 0 : entries_.back(); }

    /// Membership in the block B_c(d): 0 <= x_i <= c-d.
    bool in_block(int c) const;

    friend bool operator==(const Character& a, const Character& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator<(const Character& a, const Character& b) {
        return a.entries_ < b.entries_;
    }

private:
    std::vector<int> entries_;
};

/// Row lengths read off as x_{d-i+1} = rows[i]; missing rows read as 0.
Character diagram_to_char(const YoungDiagram& delta, int d);

/// Inverse of diagram_to_char; entries must be >= 0.
YoungDiagram char_to_diagram(const Character& chi);

/// All of B_c(d) in lexicographic order on the tuple. Empty when c < d.
std::vector<Character> enumerate_block(int c, int d);

/// chi + (j, j, ..., j).
Character tensor_det(const Character& chi, int j);

/// Weakly increasing index sequence 0 <= j_1 <= ... <= j_l, compared through
/// its (-1)-padded length-d tuple.
class JSequence {
public:
    JSequence() = default;
    JSequence(std::vector<int> values, int ambient_length);

    const std::vector<int>& values() const { return values_; }
    int length() const { return static_cast<int>(values_.size()); }
    int ambient_length() const { return ambient_; }
    std::vector<int> padded() const;

    friend bool operator==(const JSequence& a, const JSequence& b) {
        return a.ambient_ == b.ambient_ && a.values_ == b.values_;
    }

private:
    std::vector<int> values_;
    int ambient_ = 0;
};

/// Lexicographic comparison of the padded tuples: +1 when a > b, -1 when
/// a < b, 0 on equality. Requires equal ambient lengths.
int jseq_compare(const JSequence& a, const JSequence& b);

/// All weakly increasing sequences of length l with values in [0, bound],
/// sorted descending by jseq_compare. Empty when bound < 0 and l >= 1.
std::vector<JSequence> enumerate_jseqs(int l, int bound, int d);

}  // namespace conifold
