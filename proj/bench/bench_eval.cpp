// Benchmark: serial reference vs OpenMP batch evaluation. Exact rational
// arithmetic, so besides the timing the two paths are checked for
// identical results.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fixlocus/corpus.hpp"
#include "fixlocus/eval.hpp"
#include "fixlocus/rng.hpp"

using namespace fixlocus;

namespace {

double seconds(const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* label, double serial, double parallel) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx\n", label, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled at compile time; both paths are serial\n");
#endif

    Rng rng(987654321);

    {
        Polynomial p = rng.polynomial(3, 6, 14, 40);
        std::vector<RationalPoint> pts = rng.points(20000, 3, 4000, 60);
        std::vector<Rational> a, b;
        const double ts = seconds([&] { a = evaluate_batch_serial(p, pts); });
        const double tp = seconds([&] { b = evaluate_batch(p, pts); });
        if (a != b) {
            std::printf("MISMATCH between serial and parallel evaluation\n");
            return 1;
        }
        report("dense random polynomial", ts, tp);
    }

    {
        const CorpusEntry* e = find_corpus_entry("nagata_v1");
        LoadedEntry loaded = load_corpus_entry(*e);
        const std::vector<Polynomial>& comps = loaded.aut.forward().components;
        std::vector<RationalPoint> pts = rng.points(12000, 3, 2000, 40);
        std::vector<RationalPoint> a, b;
        const double ts = seconds([&] { a = map_batch_serial(comps, pts); });
        const double tp = seconds([&] { b = map_batch(comps, pts); });
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].coords != b[i].coords) {
                std::printf("MISMATCH between serial and parallel map batches\n");
                return 1;
            }
        report("degree-five map batch", ts, tp);
    }

    return 0;
}
