#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ucycle/digraph.hpp"
#include "ucycle/execution.hpp"
#include "ucycle/partitions.hpp"

namespace ucycle {

enum class PsvFlavor { strict, weak };

/// Part-size vector: sizes[i-1] = number of occurrences of symbol i in an
/// edge word. strict demands sizes[0] < sizes[1] < ...; weak non-decreasing.
struct Psv {
    std::vector<int> sizes;
    PsvFlavor flavor = PsvFlavor::strict;
    bool operator==(const Psv&) const = default;
};

/// All legal PSVs in lexicographic order; empty when n is too small.
std::vector<Psv> enumerate_psv(int n, int k, PsvFlavor flavor);

/// Connectivity threshold (k+4)(k-1)/2 + 1 above which the packing and
/// covering digraphs are guaranteed connected.
int threshold_n1(int k);

/// De Bruijn-style digraph over literal words: edges are the length-n words
/// over {1..k} whose symbol-count vector is a legal PSV of the flavor;
/// vertices are the length-(n-1) prefixes and suffixes of edge words.
struct DistinctDigraph {
    int n = 0;
    int k = 0;
    PsvFlavor flavor = PsvFlavor::strict;
    std::vector<Word> vertices;   // lexicographic
    std::vector<Word> edge_words; // lexicographic
    std::vector<int> edge_tail;
    std::vector<int> edge_head;
    std::vector<std::vector<int>> out_edges;

    int vertex_index(const Word& w) const;  // -1 when absent
};

/// All edge words in lexicographic order. The parallel lane enumerates the
/// multiset permutations of each PSV independently and merges by word; the
/// serial reference generates words position by position with PSV
/// feasibility pruning.
std::vector<Word> enumerate_edge_words(int n, int k, PsvFlavor flavor, Execution exec);

DistinctDigraph build_distinct_digraph(int n, int k, PsvFlavor flavor,
                                       Execution exec = Execution::parallel);

bool is_balanced(const DistinctDigraph& g);
bool is_weakly_connected(const DistinctDigraph& g);

/// Euler circuit of the digraph rendered as the cyclic word of trailing
/// symbols; each length-n window is exactly one edge word.
CyclicWord distinct_euler_word(const DistinctDigraph& g);

/// Universal packing: cyclic word of length T(n,k) whose windows are the
/// distinct-part-size k-partitions of [n], each exactly once. Throws
/// NotConnectedError when the digraph is not weakly connected (possible
/// below threshold_n1) or has no edges.
CyclicWord upacking(int n, int k);
/// Universal covering: cyclic word of length U(n,k) whose windows cover
/// every k-partition of [n] at least once.
CyclicWord ucovering(int n, int k);

/// Exact edge counts: sums of multinomials n!/(a1!...ak!) over strict
/// (T) and weak (U) PSVs.
BigInt count_T(int n, int k);
BigInt count_U(int n, int k);

struct RatioRow {
    int n = 0;
    BigInt T, U, S;
    double t_over_s = 0.0;
    double u_over_s = 0.0;
};

/// Exact T/U/S counts with floating ratios for n in [n_from, n_to].
std::vector<RatioRow> ratio_report(int k, int n_from, int n_to);

/// CSV with header n,T,U,S,T_over_S,U_over_S; ratios to 12 significant digits.
std::string ratio_csv(const std::vector<RatioRow>& rows);

}  // namespace ucycle
