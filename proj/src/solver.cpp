#include "grundy/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "grundy/errors.hpp"
#include "memo_table.hpp"

#ifdef GRUNDY_HAVE_OPENMP
#include <omp.h>
#endif

namespace grundy {

namespace {

// Memo keys shift left by 8 to pack alongside the value byte.
constexpr int kMaxPackableVertices = 56;

struct SearchShared {
    std::vector<uint64_t> closed;
    uint64_t full = 0;
    std::vector<int> order;
    MemoTable* memo = nullptr;
    std::atomic<uint64_t> counter{0};
    uint64_t budget = UINT64_MAX;
    std::atomic<bool> aborted{false};
};

/// Depth-first search over legal moves. The value of a dominated-set state
/// is the maximum number of further legal moves; a state where everything
/// is dominated is worth 0 because no move can footprint anything, and a
/// state with an undominated vertex u always has the legal move u itself.
/// Values are exact in every mode: the optimistic bound used for pruning
/// (one new footprinted vertex per move) only skips children that cannot
/// beat the best branch already measured.
class Searcher {
public:
    explicit Searcher(SearchShared& sh) : sh_(sh) {}

    void begin_root(int v) { path_.assign(1, v); }

    int dfs(uint64_t dominated) {
        if (dominated == sh_.full) {
            if (path_.size() > incumbent_.size()) incumbent_ = path_;
            return 0;
        }
        if (sh_.aborted.load(std::memory_order_relaxed)) return 0;
        if (sh_.memo) {
            if (int found = sh_.memo->find(dominated); found >= 0) {
                ++memo_hits_;
                return found;
            }
        } else if (!charge_budget()) {
            return 0;
        }
        ++explored_;
        int best = 0;
        for (int v : sh_.order) {
            uint64_t child = dominated | sh_.closed[v];
            if (child == dominated) continue;
            int optimistic = 1 + std::popcount(sh_.full & ~child);
            if (optimistic <= best) continue;
            path_.push_back(v);
            int sub = dfs(child);
            path_.pop_back();
            if (sh_.aborted.load(std::memory_order_relaxed)) return 0;
            best = std::max(best, 1 + sub);
        }
        if (sh_.memo) {
            // Charged per insertion so the budget bounds table growth; a
            // full fixed-size table degrades to unmemoized search instead.
            if (!charge_budget()) return 0;
            sh_.memo->insert(dominated, best);
        }
        return best;
    }

    const VertexSequence& incumbent() const { return incumbent_; }
    uint64_t explored() const { return explored_; }
    uint64_t memo_hits() const { return memo_hits_; }

private:
    bool charge_budget() {
        uint64_t used = sh_.counter.fetch_add(1, std::memory_order_relaxed) + 1;
        if (used > sh_.budget) {
            sh_.aborted.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    SearchShared& sh_;
    VertexSequence path_;
    VertexSequence incumbent_;
    uint64_t explored_ = 0;
    uint64_t memo_hits_ = 0;
};

/// Canonical witness: from the empty state walk to any child whose value is
/// exactly one less, always taking the lowest vertex index. Children the
/// search pruned or never stored are recomputed on demand, so the result is
/// independent of exploration order, memoization, and parallel scheduling.
VertexSequence reconstruct_witness(SearchShared& sh, int gamma, Searcher& helper) {
    const int n = static_cast<int>(sh.closed.size());
    VertexSequence witness;
    witness.reserve(gamma);
    uint64_t state = 0;
    for (int remaining = gamma; remaining > 0; --remaining) {
        bool advanced = false;
        for (int v = 0; v < n && !advanced; ++v) {
            uint64_t child = state | sh.closed[v];
            if (child == state) continue;
            int value = sh.memo ? sh.memo->find(child) : -1;
            if (value < 0) value = helper.dfs(child);
            if (value == remaining - 1) {
                witness.push_back(v);
                state = child;
                advanced = true;
            }
        }
        if (!advanced)
            throw InternalError("witness reconstruction found no optimal child");
    }
    return witness;
}

}  // namespace

SolveResult grundy_domination_number(const Graph& g, const SolverOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    if (opts.max_vertices < 0 || opts.max_vertices > kMaxPackableVertices)
        throw InputError("solver max_vertices must be between 0 and " +
                         std::to_string(kMaxPackableVertices));
    if (n > opts.max_vertices)
        throw InputError("graph has " + std::to_string(n) +
                         " vertices, solver limit is " + std::to_string(opts.max_vertices));

    SolveResult result;
    if (n == 0) {
        result.stats.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return result;
    }

    SearchShared sh;
    sh.closed.resize(n);
    for (int v = 0; v < n; ++v) sh.closed[v] = g.closed_neighbors(v).low_word();
    sh.full = (uint64_t{1} << n) - 1;
    sh.order.resize(n);
    std::iota(sh.order.begin(), sh.order.end(), 0);
    if (opts.degree_heuristic)
        std::stable_sort(sh.order.begin(), sh.order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    if (opts.budget) sh.budget = *opts.budget;

    std::unique_ptr<MemoTable> table;
    if (opts.use_memo) {
        if (opts.parallel) {
            // Fixed capacity: concurrent growth is not supported. Sized to
            // the state space with headroom, clamped by the budget when set.
            // A full table degrades to unmemoized search, which stays exact,
            // so the cap trades a little redundant work for allocation cost.
            size_t cap = size_t{1} << std::min(n + 2, 20);
            if (opts.budget) cap = std::min(cap, std::bit_ceil(*opts.budget * 2 + 16));
            table = std::make_unique<MemoTable>(cap, false);
        } else {
            table = std::make_unique<MemoTable>(size_t{1} << 12, true);
        }
        sh.memo = table.get();
    }

    int gamma = 0;
    VertexSequence best_incumbent;
    uint64_t explored = 0;
    uint64_t memo_hits = 0;

    auto absorb = [&](const Searcher& s) {
        explored += s.explored();
        memo_hits += s.memo_hits();
        const VertexSequence& inc = s.incumbent();
        if (inc.size() > best_incumbent.size() ||
            (inc.size() == best_incumbent.size() &&
             std::lexicographical_compare(inc.begin(), inc.end(),
                                          best_incumbent.begin(), best_incumbent.end())))
            best_incumbent = inc;
    };

    if (opts.parallel) {
        int workers = 1;
#ifdef GRUNDY_HAVE_OPENMP
        workers = std::max(1, omp_get_max_threads());
#endif
        std::vector<Searcher> searchers;
        searchers.reserve(workers);
        for (int i = 0; i < workers; ++i) searchers.emplace_back(sh);
        std::vector<int> branch(n, 0);
#ifdef GRUNDY_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (int v = 0; v < n; ++v) {
            int tid = 0;
#ifdef GRUNDY_HAVE_OPENMP
            tid = omp_get_thread_num();
#endif
            Searcher& s = searchers[tid];
            s.begin_root(v);
            branch[v] = 1 + s.dfs(sh.closed[v]);
        }
        for (int v = 0; v < n; ++v) gamma = std::max(gamma, branch[v]);
        for (const Searcher& s : searchers) absorb(s);
    } else {
        Searcher s(sh);
        gamma = s.dfs(0);
        absorb(s);
    }

    if (sh.aborted.load()) {
        result.status = SolveStatus::BudgetExceeded;
        result.witness = best_incumbent.empty() ? extend_to_dominating(g, {})
                                                : best_incumbent;
        result.gamma_gr = static_cast<int>(result.witness.size());
    } else {
        result.status = SolveStatus::Exact;
        result.gamma_gr = gamma;
        sh.budget = UINT64_MAX;
        Searcher helper(sh);
        result.witness = reconstruct_witness(sh, gamma, helper);
        absorb(helper);
    }
    result.stats.explored_states = explored;
    result.stats.memo_hits = memo_hits;
    result.stats.memo_entries = table ? table->size() : 0;
    result.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

namespace {

struct BruteForce {
    const std::vector<uint64_t>& closed;
    int n;
    VertexSequence path;
    VertexSequence best;
    uint64_t nodes = 0;

    void enumerate(uint64_t dominated) {
        ++nodes;
        bool moved = false;
        for (int v = 0; v < n; ++v) {
            uint64_t child = dominated | closed[v];
            if (child == dominated) continue;
            moved = true;
            path.push_back(v);
            enumerate(child);
            path.pop_back();
        }
        // no legal move means everything is dominated: a maximal sequence
        if (!moved && path.size() > best.size()) best = path;
    }
};

}  // namespace

SolveResult grundy_brute_force(const Graph& g) {
    constexpr int kBruteForceLimit = 12;
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    if (n > kBruteForceLimit)
        throw InputError("brute force accepts at most " +
                         std::to_string(kBruteForceLimit) + " vertices");

    std::vector<uint64_t> closed(n);
    for (int v = 0; v < n; ++v) closed[v] = g.closed_neighbors(v).low_word();

    BruteForce bf{closed, n, {}, {}, 0};
    bf.enumerate(0);

    SolveResult result;
    result.status = SolveStatus::Exact;
    result.gamma_gr = static_cast<int>(bf.best.size());
    result.witness = std::move(bf.best);
    result.stats.explored_states = bf.nodes;
    result.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace grundy
