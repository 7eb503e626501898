#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "grundy/errors.hpp"

namespace grundy {

/// Fixed-universe bitset over vertices 0..n-1. All set operations cost
/// O(n/64) word operations.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : n_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0) throw InputError("vertex set universe must be non-negative");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    int universe_size() const { return n_; }

    bool test(int v) const {
        check_range(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check_range(v);
        words_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check_range(v);
        words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    /// Set difference: elements of this not in o.
    VertexSet minus(const VertexSet& o) const {
        VertexSet r = *this;
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }

    bool intersects(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

    /// Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    /// Low 64 bits; valid as a complete state only when the universe fits one word.
    uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

private:
    void check_range(int v) const {
        if (v < 0 || v >= n_) throw InputError("vertex index out of range");
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace grundy
