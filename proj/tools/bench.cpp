// Compares the serial reference kernels against the OpenMP lanes:
//   - edge-word enumeration for the distinct-part-size digraphs
//   - window decoding inside verify
//   - the odd-permutation reduction over a transition digraph
//
// Usage: ucycle_bench [n_words] [n_graph]
//   n_words: word length for the enumeration/verify kernels (default 13, k=3)
//   n_graph: n for the G(n,4) reduction benchmark (default 11)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ucycle/digraph.hpp"
#include "ucycle/distinct.hpp"
#include "ucycle/verify.hpp"

using namespace ucycle;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* kernel, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", kernel, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    const int n_words = argc > 1 ? std::atoi(argv[1]) : 13;
    const int n_graph = argc > 2 ? std::atoi(argv[2]) : 11;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both lanes run serially\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        std::vector<Word> a, b;
        const double ts = time_ms([&] { a = enumerate_edge_words(n_words, 3, PsvFlavor::weak, Execution::serial); });
        const double tp = time_ms([&] { b = enumerate_edge_words(n_words, 3, PsvFlavor::weak, Execution::parallel); });
        if (a != b) {
            std::fprintf(stderr, "lane mismatch in enumerate_edge_words\n");
            return 1;
        }
        const std::string label = "edge words (" + std::to_string(n_words) + ",3) weak";
        report(label.c_str(), ts, tp);
        std::printf("  %zu edge words\n", a.size());
    }

    {
        const auto w = ucovering(n_words, 3);
        VerifyReport ra, rb;
        const double ts =
            time_ms([&] { ra = verify(w, n_words, Family::kpartitions, 3, VerifyMode::ucovering, Execution::serial); });
        const double tp =
            time_ms([&] { rb = verify(w, n_words, Family::kpartitions, 3, VerifyMode::ucovering, Execution::parallel); });
        if (ra.accepted != rb.accepted || ra.distinct != rb.distinct) {
            std::fprintf(stderr, "lane mismatch in verify\n");
            return 1;
        }
        const std::string label = "verify ucovering (" + std::to_string(n_words) + ",3)";
        report(label.c_str(), ts, tp);
        std::printf("  %zu windows, verdict %s\n", ra.windows_checked, ra.accepted ? "accept" : "reject");
    }

    {
        const auto g = build_digraph(n_graph, 4);
        int64_t a = 0, b = 0;
        const double ts = time_ms([&] { a = count_odd_assoc(g, Execution::serial); });
        const double tp = time_ms([&] { b = count_odd_assoc(g, Execution::parallel); });
        if (a != b) {
            std::fprintf(stderr, "lane mismatch in count_odd_assoc\n");
            return 1;
        }
        const std::string label = "odd assoc G(" + std::to_string(n_graph) + ",4)";
        report(label.c_str(), ts, tp);
        std::printf("  %zu edges, %lld odd\n", g.edges.size(), static_cast<long long>(a));
    }
    return 0;
}
