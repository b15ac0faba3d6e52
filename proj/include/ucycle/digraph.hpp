#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ucycle/execution.hpp"
#include "ucycle/partitions.hpp"

namespace ucycle {

/// One edge of the transition digraph: a k-partition of [n]. The tail is the
/// partition restricted to 1..n-1, the head the partition of 2..n shifted
/// down by one; assoc is the associated permutation of the edge.
struct DigraphEdge {
    Word partition;
    int tail = -1;
    int head = -1;
    Perm assoc;
};

/// Transition digraph G(n,k): vertices are the k- and (k-1)-partitions of
/// [n-1] in lexicographic word order, edges the k-partitions of [n] in
/// lexicographic word order. Parallel edges are kept as distinct entries.
struct TransitionDigraph {
    int n = 0;
    int k = 0;
    std::vector<CanonicalPartition> vertices;
    std::vector<DigraphEdge> edges;
    std::vector<std::vector<int>> out_edges;  // ascending edge index = ascending edge word
    std::vector<std::vector<int>> in_edges;

    int vertex_index(const Word& w) const;  // -1 when absent
};

TransitionDigraph build_digraph(int n, int k);

const Perm& associated_permutation(const TransitionDigraph& g, int edge_index);

bool is_balanced(const TransitionDigraph& g);
bool is_weakly_connected(const TransitionDigraph& g);

/// Canonical target vertex 1 2 ... k-1 k k ... k of length n-1.
int target_vertex(const TransitionDigraph& g);

/// Vertex path u -> target: first raise the count of trailing distinct
/// symbols to k (at most k-1 steps), then repeat the trailing symbol until
/// the target is reached (n-1-k steps).
std::vector<int> path_to_target(const TransitionDigraph& g, int u);

struct EulerCircuit {
    int start_vertex = 0;
    std::vector<int> edge_sequence;
};

/// Hierholzer with lowest-index edge selection, starting at vertex 0.
/// Throws NotEulerianError when the digraph is unbalanced or disconnected.
EulerCircuit euler_circuit(const TransitionDigraph& g);
/// Same algorithm over seed-shuffled adjacency and a seed-chosen start.
EulerCircuit euler_circuit_seeded(const TransitionDigraph& g, uint64_t seed);

/// Right-to-left product of the associated permutations along the circuit.
Perm permutation_product(const TransitionDigraph& g, const EulerCircuit& c);

/// The associated permutations of all edges (one entry per edge).
std::vector<Perm> permutation_multiset(const TransitionDigraph& g);

/// Number of odd permutations in the permutation multiset.
int64_t count_odd_assoc(const TransitionDigraph& g, Execution exec = Execution::serial);

struct CyclicWord {
    Word word;
    bool cyclic = true;
};

struct LiftResult {
    bool ok = false;
    CyclicWord cycle;  // the appended symbols; a ucycle iff ok
    Word ustring;      // start representation followed by the appended symbols
    Perm mismatch;     // identity iff ok; equals the circuit's permutation product
};

/// Walks the circuit from a concrete representation of its start vertex,
/// collecting appended symbols. Succeeds iff the walk returns to start_rep.
LiftResult lift(const TransitionDigraph& g, const EulerCircuit& c, const Word& start_rep);

enum class SearchStatus { found, obstructed, exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    CyclicWord word;             // set when status == found
    uint64_t nodes_visited = 0;
    bool complete = false;       // search space exhausted below budget
};

constexpr uint64_t kDefaultSearchBudget = 10'000'000;

/// Finds a ucycle of the k-partitions of [n] or certifies why none was
/// produced: k = 2 lifts the deterministic Euler circuit, Par(n,k) = 1 is
/// obstructed outright, otherwise a bounded backtracking search over Euler
/// circuits tracks the running permutation product.
SearchResult search_ucycle(int n, int k, uint64_t budget = kDefaultSearchBudget);

/// Graphviz text: one node line per vertex (canonical word label), one edge
/// line per edge (partition word and associated permutation in cycle
/// notation, fixed points suppressed).
std::string export_dot(const TransitionDigraph& g);

}  // namespace ucycle
