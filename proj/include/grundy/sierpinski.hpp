#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grundy/graph.hpp"

namespace grundy {

/// A vertex of S_p^n: the digit string <u_1...u_n>, each digit in [0, p).
struct SierpinskiLabel {
    int p = 1;
    std::vector<uint8_t> digits;

    int length() const { return static_cast<int>(digits.size()); }
    bool operator==(const SierpinskiLabel&) const = default;
};

/// Sequence of labels sharing one (p, n), digits packed contiguously one
/// byte each. Generation cost is dominated by digit emission, so the
/// storage is a single flat buffer.
class LabelSequence {
public:
    LabelSequence(int p, int n) : p_(p), n_(n) {
        if (p < 1 || n < 1) throw InputError("label sequence needs p >= 1 and n >= 1");
    }

    int base() const { return p_; }
    int digits_per_label() const { return n_; }
    size_t size() const { return data_.size() / n_; }

    std::span<const uint8_t> label_digits(size_t k) const {
        return {data_.data() + k * n_, static_cast<size_t>(n_)};
    }

    SierpinskiLabel label(size_t k) const {
        auto d = label_digits(k);
        return {p_, std::vector<uint8_t>(d.begin(), d.end())};
    }

    void reserve_labels(size_t count) { data_.reserve(count * n_); }

    void append_digits(const uint8_t* d) { data_.insert(data_.end(), d, d + n_); }

    const std::vector<uint8_t>& data() const { return data_; }
    std::vector<uint8_t>& mutable_data() { return data_; }

    bool operator==(const LabelSequence&) const = default;

private:
    int p_;
    int n_;
    std::vector<uint8_t> data_;
};

/// True iff some position h has: equal digits before h, different digits at
/// h, and after h each label repeats the other's digit at h. Labels must
/// share p and length.
bool sierpinski_adjacent(const SierpinskiLabel& u, const SierpinskiLabel& v);

/// Lexicographic rank of the label: its base-p positional value.
uint64_t label_to_index(const SierpinskiLabel& u);

SierpinskiLabel index_to_label(int p, int n, uint64_t index);

/// One character per digit, 0-9 then a-z; requires p <= 36.
std::string format_label(const SierpinskiLabel& u);

SierpinskiLabel parse_label(const std::string& text, int p);

struct SierpinskiGraph {
    int p = 1;
    int n = 1;
    /// Vertex k is the label index_to_label(p, n, k); indices are
    /// lexicographic on labels.
    Graph graph;
};

/// S_p^n built recursively: p index-shifted copies of S_p^{n-1} plus the
/// C(p,2) linking edges {<ij^{n-1}>, <ji^{n-1}>}. Adjacency agrees with
/// sierpinski_adjacent. Rejects sizes whose dense representation would not
/// fit in memory.
SierpinskiGraph build_sierpinski(int p, int n);

/// gamma_gr(S_p^n) = p^{n-1} + p(p^{n-1} - 1)/2, overflow-checked.
uint64_t grundy_formula(int p, int n);

/// (<i(i+1)^{n-1}>, <i(i+2)^{n-1}>, ..., <i(p-1)^{n-1}>); empty for i = p-1.
/// Requires n >= 2.
LabelSequence b_sequence(int i, int p, int n);

/// The recursive Grundy dominating sequence: A_p^1 = (<0>) and
/// A_p^n = concat over i of (i prefixed to A_p^{n-1}, then iB_p^n).
/// O(n p^n) digit writes; no graph is materialized.
LabelSequence a_sequence(int p, int n);

/// Same output as a_sequence, byte for byte; the top-level per-copy blocks
/// are stamped into precomputed offsets by parallel workers.
LabelSequence a_sequence_parallel(int p, int n);

/// Membership in L_p^n: last digit 0, or the label ends a b^{l-1} with
/// b > a and 2 <= l <= n.
bool in_l_sequence(const SierpinskiLabel& v);

/// All labels satisfying in_l_sequence, lexicographically increasing.
LabelSequence l_sequence(int p, int n);

}  // namespace grundy
