#pragma once

#include <cstdint>
#include <vector>

namespace ucycle::detail {

/// Hierholzer over a multigraph: out_edges[v] lists edge indices consumed in
/// order, heads[e] the target of edge e. Caller guarantees the graph is
/// Eulerian; the result starts and ends at `start` and uses each edge once.
std::vector<int> hierholzer(int start, const std::vector<std::vector<int>>& out_edges,
                            const std::vector<int>& heads);

bool degrees_balanced(size_t vertex_count, const std::vector<int>& tails, const std::vector<int>& heads);

/// Connectivity of the underlying undirected graph (vacuously true for <= 1 vertex).
bool weakly_connected(size_t vertex_count, const std::vector<int>& tails, const std::vector<int>& heads);

/// Deterministic Fisher-Yates driven by a splitmix-style generator.
void shuffle_inplace(std::vector<int>& v, uint64_t& state);
uint64_t next_rand(uint64_t& state);

}  // namespace ucycle::detail
