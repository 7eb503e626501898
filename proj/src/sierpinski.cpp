#include "grundy/sierpinski.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "grundy/errors.hpp"

namespace grundy {

namespace {

constexpr uint64_t kMemoryLimit = uint64_t{512} << 20;

void validate_pn(int p, int n) {
    if (p < 1 || n < 1) throw InputError("sierpinski parameters need p >= 1 and n >= 1");
    if (p > 256) throw InputError("digits are stored one byte each; p must be <= 256");
}

uint64_t checked_pow(uint64_t base, int exp) {
    __uint128_t v = 1;
    for (int t = 0; t < exp; ++t) {
        v *= base;
        if (v > std::numeric_limits<uint64_t>::max())
            throw InputError("sierpinski size overflows 64 bits");
    }
    return static_cast<uint64_t>(v);
}

void check_sequence_bytes(uint64_t labels, int n) {
    if (static_cast<__uint128_t>(labels) * n > kMemoryLimit)
        throw InputError("sequence would exceed the 512 MiB generation limit");
}

bool in_l_digits(const uint8_t* d, int n) {
    const uint8_t last = d[n - 1];
    if (last == 0) return true;
    int run = 1;
    while (run < n && d[n - 1 - run] == last) ++run;
    // the label is x...x a last^run; membership needs a < last
    return run < n && d[n - 1 - run] < last;
}

/// Writes block i of level k: the relabeled copy iA_p^{k-1}, then iB_p^k.
void stamp_block(uint8_t* dst, const uint8_t* prev, size_t prev_labels, int p, int k,
                 int i) {
    for (size_t l = 0; l < prev_labels; ++l) {
        *dst++ = static_cast<uint8_t>(i);
        const uint8_t* src = prev + l * (k - 1);
        dst = std::copy(src, src + (k - 1), dst);
    }
    for (int j = i + 1; j < p; ++j) {
        *dst++ = static_cast<uint8_t>(i);
        dst = std::fill_n(dst, k - 1, static_cast<uint8_t>(j));
    }
}

size_t block_offset_labels(size_t prev_labels, int p, int i) {
    // blocks 0..i-1 hold i copies of A_{k-1} plus (p-1) + ... + (p-i) b-labels
    return static_cast<size_t>(i) * prev_labels +
           static_cast<size_t>(i) * (p - 1) - static_cast<size_t>(i) * (i - 1) / 2;
}

std::vector<uint8_t> a_level_data(int p, int n, bool parallel_top) {
    std::vector<uint8_t> cur{0};
    for (int k = 2; k <= n; ++k) {
        const size_t prev_labels = cur.size() / (k - 1);
        const size_t pairs = static_cast<size_t>(p) * (p - 1) / 2;
        std::vector<uint8_t> next((static_cast<size_t>(p) * prev_labels + pairs) *
                                  static_cast<size_t>(k));
        const bool split = parallel_top && k == n && p > 1;
        (void)split;
#ifdef GRUNDY_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (split)
#endif
        for (int i = 0; i < p; ++i)
            stamp_block(next.data() + block_offset_labels(prev_labels, p, i) * k,
                        cur.data(), prev_labels, p, k, i);
        cur = std::move(next);
    }
    return cur;
}

LabelSequence build_a(int p, int n, bool parallel) {
    validate_pn(p, n);
    const uint64_t expected = grundy_formula(p, n);
    check_sequence_bytes(expected, n);
    LabelSequence out(p, n);
    out.mutable_data() = a_level_data(p, n, parallel);
    if (out.size() != expected) throw InternalError("a_sequence length mismatch");
    return out;
}

}  // namespace

bool sierpinski_adjacent(const SierpinskiLabel& u, const SierpinskiLabel& v) {
    if (u.p != v.p || u.digits.size() != v.digits.size())
        throw InputError("adjacency needs labels with equal p and length");
    const int n = u.length();
    int h = 0;
    while (h < n && u.digits[h] == v.digits[h]) ++h;
    if (h == n) return false;
    for (int t = h + 1; t < n; ++t)
        if (u.digits[t] != v.digits[h] || v.digits[t] != u.digits[h]) return false;
    return true;
}

uint64_t label_to_index(const SierpinskiLabel& u) {
    validate_pn(u.p, u.length());
    __uint128_t value = 0;
    for (uint8_t d : u.digits) {
        if (d >= u.p) throw InputError("label digit exceeds base");
        value = value * u.p + d;
        if (value > std::numeric_limits<uint64_t>::max())
            throw InputError("label index overflows 64 bits");
    }
    return static_cast<uint64_t>(value);
}

SierpinskiLabel index_to_label(int p, int n, uint64_t index) {
    validate_pn(p, n);
    if (index >= checked_pow(p, n)) throw InputError("label index out of range");
    SierpinskiLabel out{p, std::vector<uint8_t>(n, 0)};
    for (int t = n - 1; t >= 0; --t) {
        out.digits[t] = static_cast<uint8_t>(index % p);
        index /= p;
    }
    return out;
}

std::string format_label(const SierpinskiLabel& u) {
    validate_pn(u.p, u.length());
    if (u.p > 36) throw InputError("label formatting supports p <= 36");
    std::string out;
    out.reserve(u.digits.size());
    for (uint8_t d : u.digits) {
        if (d >= u.p) throw InputError("label digit exceeds base");
        out.push_back(d < 10 ? static_cast<char>('0' + d)
                             : static_cast<char>('a' + d - 10));
    }
    return out;
}

SierpinskiLabel parse_label(const std::string& text, int p) {
    validate_pn(p, 1);
    if (p > 36) throw InputError("label parsing supports p <= 36");
    if (text.empty()) throw InputError("empty label");
    SierpinskiLabel out{p, {}};
    out.digits.reserve(text.size());
    for (char c : text) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'z') d = c - 'a' + 10;
        else throw InputError(std::string("invalid label character '") + c + "'");
        if (d >= p) throw InputError("label digit exceeds base");
        out.digits.push_back(static_cast<uint8_t>(d));
    }
    return out;
}

SierpinskiGraph build_sierpinski(int p, int n) {
    if (p < 1 || n < 1) throw InputError("sierpinski parameters need p >= 1 and n >= 1");
    const uint64_t nv = checked_pow(p, n);
    const uint64_t ne =
        p >= 2 ? static_cast<uint64_t>(p) * (p - 1) / 2 * ((nv - 1) / (p - 1)) : 0;
    const __uint128_t mem =
        static_cast<__uint128_t>(nv) * ((nv + 63) / 64) * 16 + static_cast<__uint128_t>(ne) * 16;
    if (mem > kMemoryLimit) throw InputError("sierpinski graph too large to build");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(ne);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) edges.emplace_back(i, j);
    uint64_t sub = 1;
    for (int k = 2; k <= n; ++k) {
        sub *= p;  // p^{k-1}
        std::vector<std::pair<int, int>> next;
        next.reserve(p * edges.size() + static_cast<size_t>(p) * (p - 1) / 2);
        for (int i = 0; i < p; ++i) {
            const int off = static_cast<int>(i * sub);
            for (auto [u, v] : edges) next.emplace_back(u + off, v + off);
        }
        if (p >= 2) {
            const uint64_t unit = (sub - 1) / (p - 1);  // value of a repeated digit 1
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j)
                    next.emplace_back(static_cast<int>(i * sub + j * unit),
                                      static_cast<int>(j * sub + i * unit));
        }
        edges = std::move(next);
    }
    return {p, n, Graph::from_edges(static_cast<int>(nv), edges)};
}

uint64_t grundy_formula(int p, int n) {
    if (p < 1 || n < 1) throw InputError("grundy_formula needs p >= 1 and n >= 1");
    const uint64_t q = checked_pow(p, n - 1);
    const __uint128_t value =
        static_cast<__uint128_t>(q) + static_cast<__uint128_t>(p) * (q - 1) / 2;
    if (value > std::numeric_limits<uint64_t>::max())
        throw InputError("grundy_formula overflows 64 bits");
    return static_cast<uint64_t>(value);
}

LabelSequence b_sequence(int i, int p, int n) {
    validate_pn(p, n);
    if (n < 2) throw InputError("b_sequence requires n >= 2");
    if (i < 0 || i >= p) throw InputError("b_sequence index out of range");
    LabelSequence out(p, n);
    std::vector<uint8_t> buf(n);
    buf[0] = static_cast<uint8_t>(i);
    for (int j = i + 1; j < p; ++j) {
        std::fill(buf.begin() + 1, buf.end(), static_cast<uint8_t>(j));
        out.append_digits(buf.data());
    }
    return out;
}

LabelSequence a_sequence(int p, int n) { return build_a(p, n, false); }

LabelSequence a_sequence_parallel(int p, int n) { return build_a(p, n, true); }

bool in_l_sequence(const SierpinskiLabel& v) {
    validate_pn(v.p, v.length());
    return in_l_digits(v.digits.data(), v.length());
}

LabelSequence l_sequence(int p, int n) {
    validate_pn(p, n);
    const uint64_t expected = grundy_formula(p, n);
    check_sequence_bytes(expected, n);
    const uint64_t total = checked_pow(p, n);
    LabelSequence out(p, n);
    out.reserve_labels(expected);
    std::vector<uint8_t> d(n, 0);
    for (uint64_t idx = 0; idx < total; ++idx) {
        if (in_l_digits(d.data(), n)) out.append_digits(d.data());
        if (idx + 1 < total) {
            int t = n - 1;
            while (d[t] == p - 1) d[t--] = 0;
            ++d[t];
        }
    }
    if (out.size() != expected)
        throw InternalError("l_sequence count disagrees with the closed form");
    return out;
}

}  // namespace grundy
