// Benchmark comparing the OpenMP kernels against their serial reference
// implementations: batch word normalization and the exact quotient-basis
// row reduction.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ternalg/oracle.hpp"
#include "ternalg/rewrite.hpp"

using namespace ternalg;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Word> words_of_degree(const Presentation& pres, int degree) {
    const auto& alphabet = pres.alphabet();
    std::vector<Word> out;
    std::vector<size_t> digits(static_cast<size_t>(degree), 0);
    while (true) {
        std::vector<Generator> gens;
        gens.reserve(digits.size());
        for (size_t d : digits) gens.push_back(alphabet[d]);
        out.push_back(Word(std::move(gens)));
        size_t k = digits.size();
        while (k > 0) {
            if (++digits[k - 1] < alphabet.size()) break;
            digits[--k] = 0;
        }
        if (k == 0) break;
    }
    return out;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    {
        Presentation pres(AlgebraType::CombinedZ6, 2, 2);
        std::vector<Word> words = words_of_degree(pres, 5);
        std::printf("normalize batch: %zu words of degree 5, combined N=2 n=2\n", words.size());

        auto t0 = std::chrono::steady_clock::now();
        auto serial = normalize_batch_serial(words, pres);
        double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        auto parallel = normalize_batch(words, pres);
        double tp = seconds_since(t0);

        bool same = serial == parallel;
        std::printf("  serial   %.3fs\n  parallel %.3fs  (x%.2f, identical: %s)\n", ts, tp,
                    ts / tp, same ? "yes" : "NO");
    }

    {
        Presentation pres(AlgebraType::CombinedZ6, 2, 2);
        std::printf("quotient basis: combined N=2 n=2, degree 4\n");

        OracleOptions serial_opts;
        serial_opts.parallel = false;
        auto t0 = std::chrono::steady_clock::now();
        QuotientBasis qs = quotient_basis(pres, 4, serial_opts);
        double ts = seconds_since(t0);

        OracleOptions parallel_opts;
        auto t1 = std::chrono::steady_clock::now();
        QuotientBasis qp = quotient_basis(pres, 4, parallel_opts);
        double tp = seconds_since(t1);

        bool same = qs.basis() == qp.basis();
        std::printf("  serial   %.3fs  (dimension %ld)\n  parallel %.3fs  (x%.2f, identical: %s)\n",
                    ts, qs.dimension(), tp, ts / tp, same ? "yes" : "NO");
    }
    return 0;
}
