// Compares the serial kernels with their OpenMP counterparts. Build and run
// manually; the numbers depend on the machine and are not asserted anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "grundy/families.hpp"
#include "grundy/removal.hpp"
#include "grundy/sierpinski.hpp"
#include "grundy/solver.hpp"

#ifdef GRUNDY_HAVE_OPENMP
#include <omp.h>
#endif

namespace {

double time_best_of(int reps, const std::function<void()>& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const double s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n", name,
                serial, parallel, serial / parallel);
}

}  // namespace

int main() {
#ifdef GRUNDY_HAVE_OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP, parallel modes run on one thread\n\n");
#endif

    {
        // 60 sparse instances per timed call: single solves finish in well
        // under a millisecond, so a batch keeps the clock honest.
        grundy::SolverOptions serial_opts;
        serial_opts.max_vertices = 24;
        grundy::SolverOptions parallel_opts = serial_opts;
        parallel_opts.parallel = true;

        std::vector<grundy::Graph> batch;
        for (uint64_t seed = 0; seed < 60; ++seed)
            batch.push_back(grundy::random_graph(24, 0.15, seed));

        auto solve_all = [&](const grundy::SolverOptions& o) {
            long long total = 0;
            for (const grundy::Graph& g : batch)
                total += grundy::grundy_domination_number(g, o).gamma_gr;
            return total;
        };
        long long sum_serial = 0, sum_parallel = 0;
        const double ts = time_best_of(3, [&] { sum_serial = solve_all(serial_opts); });
        const double tp = time_best_of(3, [&] { sum_parallel = solve_all(parallel_opts); });
        report("solver 60x n=24 p=0.15", ts, tp);
        if (sum_serial != sum_parallel) {
            std::printf("MISMATCH: gamma sums differ, serial %lld parallel %lld\n",
                        sum_serial, sum_parallel);
            return 1;
        }
    }

    {
        const grundy::Graph g = grundy::random_graph(18, 0.2, 7);
        grundy::SolverOptions serial_opts;
        grundy::SolverOptions parallel_opts;
        parallel_opts.parallel = true;

        grundy::EdgeRemovalProfile ps, pp;
        const double ts =
            time_best_of(3, [&] { ps = grundy::edge_removal_profile(g, serial_opts); });
        const double tp =
            time_best_of(3, [&] { pp = grundy::edge_removal_profile(g, parallel_opts); });
        report("edge removal n=18 p=0.2", ts, tp);
        if (!(ps == pp)) {
            std::printf("MISMATCH: removal profiles differ\n");
            return 1;
        }
    }

    {
        grundy::LabelSequence s(3, 1), p(3, 1);
        const double ts = time_best_of(5, [&] { s = grundy::a_sequence(3, 13); });
        const double tp = time_best_of(5, [&] { p = grundy::a_sequence_parallel(3, 13); });
        report("a_sequence p=3 n=13", ts, tp);
        if (!(s == p)) {
            std::printf("MISMATCH: label sequences differ\n");
            return 1;
        }
    }

    return 0;
}
