#include "ucycle/distinct.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "graph_util.hpp"
#include "ucycle/errors.hpp"

namespace ucycle {

namespace {

void check_flavor_bounds(int n, int k) {
    if (k < 1) throw std::invalid_argument("enumerate_psv: k must be positive");
    if (n < 0) throw std::invalid_argument("enumerate_psv: n must be nonnegative");
}

void psv_rec(int slots_left, int lo, int remaining, PsvFlavor flavor, std::vector<int>& acc,
             std::vector<Psv>& out) {
    if (slots_left == 0) {
        if (remaining == 0) out.push_back(Psv{acc, flavor});
        return;
    }
    for (int a = lo; a <= remaining; ++a) {
        // smallest possible sum of the remaining slots
        const int64_t tail_min = (flavor == PsvFlavor::strict)
                                     ? static_cast<int64_t>(slots_left - 1) * (2 * a + slots_left) / 2
                                     : static_cast<int64_t>(slots_left - 1) * a;
        if (static_cast<int64_t>(a) + tail_min > remaining) break;
        acc.push_back(a);
        psv_rec(slots_left - 1, flavor == PsvFlavor::strict ? a + 1 : a, remaining - a, flavor, acc, out);
        acc.pop_back();
    }
}

Word word_of_psv(const Psv& p) {
    Word w;
    for (size_t i = 0; i < p.sizes.size(); ++i)
        w.insert(w.end(), static_cast<size_t>(p.sizes[i]), static_cast<int>(i) + 1);
    return w;
}

/// Serial reference: generate legal words in lexicographic order directly,
/// pruning prefixes whose symbol counts fit no PSV.
void serial_words_rec(int n, int k, const std::vector<Psv>& psvs, std::vector<int>& counts, Word& w,
                      int pos, std::vector<Word>& out) {
    if (pos == n) {
        out.push_back(w);
        return;
    }
    for (int s = 1; s <= k; ++s) {
        ++counts[s - 1];
        bool feasible = false;
        for (const auto& p : psvs) {
            bool fits = true;
            for (int i = 0; i < k; ++i)
                if (counts[i] > p.sizes[i]) {
                    fits = false;
                    break;
                }
            if (fits) {
                feasible = true;
                break;
            }
        }
        if (feasible) {
            w[pos] = s;
            serial_words_rec(n, k, psvs, counts, w, pos + 1, out);
        }
        --counts[s - 1];
    }
}

BigInt multinomial(int n, const std::vector<int>& sizes) {
    std::vector<BigInt> fact(static_cast<size_t>(n) + 1);
    fact[0] = 1;
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    BigInt v = fact[n];
    for (int a : sizes) v /= fact[a];
    return v;
}

BigInt count_by_flavor(int n, int k, PsvFlavor flavor) {
    BigInt total = 0;
    for (const auto& p : enumerate_psv(n, k, flavor)) total += multinomial(n, p.sizes);
    return total;
}

CyclicWord euler_word_checked(int n, int k, PsvFlavor flavor) {
    const auto g = build_distinct_digraph(n, k, flavor);
    if (g.edge_words.empty())
        throw NotConnectedError("no legal edge words for these parameters");
    if (!is_weakly_connected(g))
        throw NotConnectedError("digraph is not weakly connected at this n (below threshold?)");
    return distinct_euler_word(g);
}

}  // namespace

std::vector<Psv> enumerate_psv(int n, int k, PsvFlavor flavor) {
    check_flavor_bounds(n, k);
    std::vector<Psv> out;
    std::vector<int> acc;
    psv_rec(k, 1, n, flavor, acc, out);
    return out;
}

int threshold_n1(int k) {
    if (k < 2) throw std::invalid_argument("threshold_n1: k must be at least 2");
    return (k + 4) * (k - 1) / 2 + 1;
}

std::vector<Word> enumerate_edge_words(int n, int k, PsvFlavor flavor, Execution exec) {
    const auto psvs = enumerate_psv(n, k, flavor);
    if (exec == Execution::serial) {
        std::vector<Word> out;
        std::vector<int> counts(k, 0);
        Word w(n);
        serial_words_rec(n, k, psvs, counts, w, 0, out);
        return out;
    }
    // Parallel lane: per-PSV batches (disjoint count vectors), merged by word.
    std::vector<std::vector<Word>> batches(psvs.size());
    const auto total = static_cast<int64_t>(psvs.size());
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < total; ++i) {
        Word w = word_of_psv(psvs[i]);
        auto& batch = batches[i];
        do {
            batch.push_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
    }
    std::vector<Word> out;
    size_t total_words = 0;
    for (const auto& b : batches) total_words += b.size();
    out.reserve(total_words);
    for (auto& b : batches) {
        out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
        b.clear();
        b.shrink_to_fit();
    }
    std::sort(out.begin(), out.end());
    return out;
}

int DistinctDigraph::vertex_index(const Word& w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || *it != w) return -1;
    return static_cast<int>(it - vertices.begin());
}

DistinctDigraph build_distinct_digraph(int n, int k, PsvFlavor flavor, Execution exec) {
    if (n < 2) throw std::invalid_argument("build_distinct_digraph: n too small");
    DistinctDigraph g;
    g.n = n;
    g.k = k;
    g.flavor = flavor;
    g.edge_words = enumerate_edge_words(n, k, flavor, exec);

    g.vertices.reserve(2 * g.edge_words.size());
    for (const auto& e : g.edge_words) {
        g.vertices.emplace_back(e.begin(), e.end() - 1);
        g.vertices.emplace_back(e.begin() + 1, e.end());
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());

    g.edge_tail.resize(g.edge_words.size());
    g.edge_head.resize(g.edge_words.size());
    g.out_edges.resize(g.vertices.size());
    for (size_t e = 0; e < g.edge_words.size(); ++e) {
        const auto& w = g.edge_words[e];
        const int tail = g.vertex_index(Word(w.begin(), w.end() - 1));
        const int head = g.vertex_index(Word(w.begin() + 1, w.end()));
        assert(tail >= 0 && head >= 0);
        g.edge_tail[e] = tail;
        g.edge_head[e] = head;
        g.out_edges[tail].push_back(static_cast<int>(e));
    }
    return g;
}

bool is_balanced(const DistinctDigraph& g) {
    return detail::degrees_balanced(g.vertices.size(), g.edge_tail, g.edge_head);
}

bool is_weakly_connected(const DistinctDigraph& g) {
    return detail::weakly_connected(g.vertices.size(), g.edge_tail, g.edge_head);
}

CyclicWord distinct_euler_word(const DistinctDigraph& g) {
    if (!is_balanced(g) || !is_weakly_connected(g))
        throw NotEulerianError("distinct_euler_word: digraph is not Eulerian");
    const auto circuit = detail::hierholzer(0, g.out_edges, g.edge_head);
    assert(circuit.size() == g.edge_words.size());
    CyclicWord out;
    out.cyclic = true;
    out.word.reserve(circuit.size());
    for (int e : circuit) out.word.push_back(g.edge_words[e].back());
    return out;
}

CyclicWord upacking(int n, int k) { return euler_word_checked(n, k, PsvFlavor::strict); }

CyclicWord ucovering(int n, int k) { return euler_word_checked(n, k, PsvFlavor::weak); }

BigInt count_T(int n, int k) { return count_by_flavor(n, k, PsvFlavor::strict); }

BigInt count_U(int n, int k) { return count_by_flavor(n, k, PsvFlavor::weak); }

std::vector<RatioRow> ratio_report(int k, int n_from, int n_to) {
    if (k < 3) throw std::invalid_argument("ratio_report: k must be at least 3");
    if (n_from > n_to || n_from < k) throw std::invalid_argument("ratio_report: bad n range");
    std::vector<RatioRow> rows;
    for (int n = n_from; n <= n_to; ++n) {
        RatioRow row;
        row.n = n;
        row.T = count_T(n, k);
        row.U = count_U(n, k);
        row.S = stirling(n, k);
        row.t_over_s = row.T.convert_to<double>() / row.S.convert_to<double>();
        row.u_over_s = row.U.convert_to<double>() / row.S.convert_to<double>();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string ratio_csv(const std::vector<RatioRow>& rows) {
    std::ostringstream os;
    os << "n,T,U,S,T_over_S,U_over_S\n";
    char buf[64];
    for (const auto& r : rows) {
        os << r.n << "," << r.T.str() << "," << r.U.str() << "," << r.S.str() << ",";
        std::snprintf(buf, sizeof(buf), "%.12g", r.t_over_s);
        os << buf << ",";
        std::snprintf(buf, sizeof(buf), "%.12g", r.u_over_s);
        os << buf << "\n";
    }
    return os.str();
}

}  // namespace ucycle
