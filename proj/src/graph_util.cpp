#include "graph_util.hpp"

#include <algorithm>

namespace ucycle::detail {

std::vector<int> hierholzer(int start, const std::vector<std::vector<int>>& out_edges,
                            const std::vector<int>& heads) {
    std::vector<size_t> next(out_edges.size(), 0);
    std::vector<int> circuit;
    circuit.reserve(heads.size());
    // stack of (vertex, edge used to arrive); edges are appended on pop
    std::vector<std::pair<int, int>> stack;
    stack.push_back({start, -1});
    while (!stack.empty()) {
        auto [v, ein] = stack.back();
        if (next[v] < out_edges[v].size()) {
            const int e = out_edges[v][next[v]++];
            stack.push_back({heads[e], e});
        } else {
            stack.pop_back();
            if (ein >= 0) circuit.push_back(ein);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    return circuit;
}

bool degrees_balanced(size_t vertex_count, const std::vector<int>& tails, const std::vector<int>& heads) {
    std::vector<int64_t> net(vertex_count, 0);
    for (size_t e = 0; e < tails.size(); ++e) {
        ++net[tails[e]];
        --net[heads[e]];
    }
    return std::all_of(net.begin(), net.end(), [](int64_t d) { return d == 0; });
}

bool weakly_connected(size_t vertex_count, const std::vector<int>& tails, const std::vector<int>& heads) {
    if (vertex_count <= 1) return true;
    std::vector<std::vector<int>> adj(vertex_count);
    for (size_t e = 0; e < tails.size(); ++e) {
        adj[tails[e]].push_back(heads[e]);
        adj[heads[e]].push_back(tails[e]);
    }
    std::vector<char> seen(vertex_count, 0);
    std::vector<int> queue = {0};
    seen[0] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == vertex_count;
}

uint64_t next_rand(uint64_t& state) {
    // splitmix64
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void shuffle_inplace(std::vector<int>& v, uint64_t& state) {
    for (size_t i = v.size(); i > 1; --i) {
        const size_t j = next_rand(state) % i;
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace ucycle::detail
