#include "ucycle/digraph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "graph_util.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/parity.hpp"

namespace ucycle {

namespace {

std::vector<int> tails_of(const TransitionDigraph& g) {
    std::vector<int> t(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) t[e] = g.edges[e].tail;
    return t;
}

std::vector<int> heads_of(const TransitionDigraph& g) {
    std::vector<int> h(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) h[e] = g.edges[e].head;
    return h;
}

/// The symbol appended when edge `partition` is traversed out of a tail whose
/// current concrete representation is `rep`. The first n-1 symbols of the edge
/// word are the tail's canonical word; `rep` relabels them.
int appended_symbol(const Word& partition, const Word& rep, int k) {
    const size_t m = rep.size();
    std::vector<int> sigma(static_cast<size_t>(k) + 1, 0);
    std::vector<char> used(static_cast<size_t>(k) + 1, 0);
    for (size_t i = 0; i < m; ++i) {
        const int canon = partition[i];
        if (sigma[canon] == 0) {
            sigma[canon] = rep[i];
            used[rep[i]] = 1;
        }
    }
    const int last = partition[m];
    if (sigma[last] != 0) return sigma[last];
    for (int s = 1; s <= k; ++s)
        if (!used[s]) return s;
    throw std::logic_error("appended_symbol: no free symbol");
}

int trailing_distinct(const Word& w) {
    int t = 0;
    for (size_t i = w.size(); i-- > 0;) {
        const int s = w[i];
        bool fresh = true;
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[j] == s) {
                fresh = false;
                break;
            }
        if (!fresh) break;
        ++t;
    }
    return t;
}

}  // namespace

int TransitionDigraph::vertex_index(const Word& w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w,
                               [](const CanonicalPartition& p, const Word& key) { return p.word < key; });
    if (it == vertices.end() || it->word != w) return -1;
    return static_cast<int>(it - vertices.begin());
}

TransitionDigraph build_digraph(int n, int k) {
    if (!(2 <= k && k < n)) throw std::invalid_argument("build_digraph: need 2 <= k < n");
    TransitionDigraph g;
    g.n = n;
    g.k = k;

    // Vertices: all (k-1)- and k-partitions of [n-1], merged in word order.
    auto small = list_partitions(n - 1, k - 1);
    auto large = list_partitions(n - 1, k);
    g.vertices.resize(small.size() + large.size());
    std::merge(small.begin(), small.end(), large.begin(), large.end(), g.vertices.begin());

    g.out_edges.resize(g.vertices.size());
    g.in_edges.resize(g.vertices.size());

    enumerate_partitions(n, k, [&](const CanonicalPartition& p) {
        DigraphEdge e;
        e.partition = p.word;
        Word prefix(p.word.begin(), p.word.end() - 1);  // already canonical
        Word suffix(p.word.begin() + 1, p.word.end());
        e.tail = g.vertex_index(prefix);
        e.head = g.vertex_index(canonicalize(suffix).word);
        assert(e.tail >= 0 && e.head >= 0);
        // Definition route: the tail's canonical word has identity relative
        // order, so the associated permutation is the relative order of the
        // corresponding head representation, i.e. of the raw suffix.
        e.assoc = relative_order(suffix, k);
        const int idx = static_cast<int>(g.edges.size());
        g.out_edges[e.tail].push_back(idx);
        g.in_edges[e.head].push_back(idx);
        g.edges.push_back(std::move(e));
    });
    return g;
}

const Perm& associated_permutation(const TransitionDigraph& g, int edge_index) {
    return g.edges.at(edge_index).assoc;
}

bool is_balanced(const TransitionDigraph& g) {
    return detail::degrees_balanced(g.vertices.size(), tails_of(g), heads_of(g));
}

bool is_weakly_connected(const TransitionDigraph& g) {
    return detail::weakly_connected(g.vertices.size(), tails_of(g), heads_of(g));
}

int target_vertex(const TransitionDigraph& g) {
    Word w;
    for (int i = 1; i < g.k; ++i) w.push_back(i);
    while (static_cast<int>(w.size()) < g.n - 1) w.push_back(g.k);
    const int idx = g.vertex_index(w);
    assert(idx >= 0);
    return idx;
}

std::vector<int> path_to_target(const TransitionDigraph& g, int u) {
    const int target = target_vertex(g);
    std::vector<int> path = {u};
    int cur = u;
    // Phase 1: raise the trailing-distinct count to k.
    while (cur != target && trailing_distinct(g.vertices[cur].word) < g.k) {
        const int t = trailing_distinct(g.vertices[cur].word);
        int next = -1;
        for (int e : g.out_edges[cur]) {
            if (trailing_distinct(g.vertices[g.edges[e].head].word) >= t + 1) {
                next = g.edges[e].head;
                break;
            }
        }
        if (next < 0) throw std::logic_error("path_to_target: no trailing-distinct increase available");
        path.push_back(next);
        cur = next;
    }
    // Phase 2: repeat the trailing symbol until the target appears.
    while (cur != target) {
        const Word& w = g.vertices[cur].word;
        Word shifted(w.begin() + 1, w.end());
        shifted.push_back(w.back());
        const int expect = g.vertex_index(canonicalize(shifted).word);
        int next = -1;
        for (int e : g.out_edges[cur]) {
            if (g.edges[e].head == expect) {
                next = expect;
                break;
            }
        }
        if (next < 0) throw std::logic_error("path_to_target: trailing-repeat edge missing");
        path.push_back(next);
        cur = next;
        assert(path.size() <= static_cast<size_t>(g.n));
    }
    return path;
}

EulerCircuit euler_circuit(const TransitionDigraph& g) {
    if (!is_balanced(g) || !is_weakly_connected(g))
        throw NotEulerianError("euler_circuit: digraph is not Eulerian");
    EulerCircuit c;
    c.start_vertex = 0;
    c.edge_sequence = detail::hierholzer(0, g.out_edges, heads_of(g));
    assert(c.edge_sequence.size() == g.edges.size());
    return c;
}

EulerCircuit euler_circuit_seeded(const TransitionDigraph& g, uint64_t seed) {
    if (!is_balanced(g) || !is_weakly_connected(g))
        throw NotEulerianError("euler_circuit: digraph is not Eulerian");
    uint64_t state = seed;
    auto shuffled = g.out_edges;
    for (auto& list : shuffled) detail::shuffle_inplace(list, state);
    EulerCircuit c;
    c.start_vertex = static_cast<int>(detail::next_rand(state) % g.vertices.size());
    c.edge_sequence = detail::hierholzer(c.start_vertex, shuffled, heads_of(g));
    assert(c.edge_sequence.size() == g.edges.size());
    return c;
}

Perm permutation_product(const TransitionDigraph& g, const EulerCircuit& c) {
    Perm prod = Perm::identity(g.k);
    for (int e : c.edge_sequence) prod = compose(g.edges[e].assoc, prod);
    return prod;
}

std::vector<Perm> permutation_multiset(const TransitionDigraph& g) {
    std::vector<Perm> out;
    out.reserve(g.edges.size());
    for (const auto& e : g.edges) out.push_back(e.assoc);
    return out;
}

int64_t count_odd_assoc(const TransitionDigraph& g, Execution exec) {
    const auto count = static_cast<int64_t>(g.edges.size());
    int64_t odd = 0;
    if (exec == Execution::parallel) {
#pragma omp parallel for reduction(+ : odd) schedule(static)
        for (int64_t e = 0; e < count; ++e) odd += g.edges[e].assoc.is_odd() ? 1 : 0;
    } else {
        for (int64_t e = 0; e < count; ++e) odd += g.edges[e].assoc.is_odd() ? 1 : 0;
    }
    return odd;
}

LiftResult lift(const TransitionDigraph& g, const EulerCircuit& c, const Word& start_rep) {
    if (static_cast<int>(start_rep.size()) != g.n - 1)
        throw std::invalid_argument("lift: start_rep has wrong length");
    if (canonicalize(start_rep).word != g.vertices[c.start_vertex].word)
        throw std::invalid_argument("lift: start_rep does not represent the start vertex");

    const Perm start_order = relative_order(start_rep, g.k);
    Word rep = start_rep;
    LiftResult out;
    out.ustring = start_rep;
    out.cycle.cyclic = true;
    out.cycle.word.reserve(c.edge_sequence.size());
    for (int e : c.edge_sequence) {
        const int u = appended_symbol(g.edges[e].partition, rep, g.k);
        out.cycle.word.push_back(u);
        out.ustring.push_back(u);
        rep.erase(rep.begin());
        rep.push_back(u);
    }
    out.ok = (rep == start_rep);
    out.mismatch = compose(relative_order(rep, g.k), start_order.inverse());
    return out;
}

namespace {

struct UcycleSearch {
    const TransitionDigraph& g;
    uint64_t budget;
    std::vector<char> used;
    size_t used_count = 0;
    Word rep;
    Word start_rep;
    Word appended;
    int run_sign = +1;
    int64_t odd_remaining = 0;
    uint64_t visited = 0;
    bool over_budget = false;
    bool found = false;

    explicit UcycleSearch(const TransitionDigraph& graph, uint64_t b)
        : g(graph), budget(b), used(graph.edges.size(), 0) {
        start_rep = g.vertices[0].word;
        rep = start_rep;
        odd_remaining = count_odd_assoc(g);
    }

    struct Frame {
        int vertex;
        size_t next;       // next adjacency slot to try
        int in_edge;       // edge taken to arrive here, -1 at the root
        int saved_front;   // rep symbol displaced by that edge
    };

    void run() {
        std::vector<Frame> stack;
        stack.reserve(g.edges.size() + 1);
        stack.push_back({0, 0, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next == 0 && used_count == g.edges.size() && f.vertex == 0 && rep == start_rep) {
                found = true;
                return;
            }
            bool descended = false;
            while (f.next < g.out_edges[f.vertex].size()) {
                const int e = g.out_edges[f.vertex][f.next++];
                if (used[e]) continue;
                const int esign = g.edges[e].assoc.sign();
                // The running product composed with the remaining edges (in
                // any order) must be able to reach the identity; compare signs.
                const int64_t odd_after = odd_remaining - (esign < 0 ? 1 : 0);
                const int remaining_sign = (odd_after % 2 != 0) ? -1 : +1;
                if (run_sign * esign * remaining_sign != +1) continue;
                if (++visited > budget) {
                    over_budget = true;
                    return;
                }
                used[e] = 1;
                ++used_count;
                run_sign *= esign;
                odd_remaining = odd_after;
                const int u = appended_symbol(g.edges[e].partition, rep, g.k);
                const int front = rep.front();
                rep.erase(rep.begin());
                rep.push_back(u);
                appended.push_back(u);
                stack.push_back({g.edges[e].head, 0, e, front});
                descended = true;
                break;
            }
            if (descended) continue;
            const Frame done = stack.back();
            stack.pop_back();
            if (done.in_edge >= 0) {
                const int e = done.in_edge;
                const int esign = g.edges[e].assoc.sign();
                appended.pop_back();
                rep.pop_back();
                rep.insert(rep.begin(), done.saved_front);
                odd_remaining += (esign < 0 ? 1 : 0);
                run_sign *= esign;
                --used_count;
                used[e] = 0;
            }
        }
    }
};

}  // namespace

SearchResult search_ucycle(int n, int k, uint64_t budget) {
    if (!(2 <= k && k < n)) throw std::invalid_argument("search_ucycle: need 2 <= k < n");
    if (budget == 0) throw std::invalid_argument("search_ucycle: budget must be positive");

    SearchResult result;
    if (k == 2) {
        const auto g = build_digraph(n, k);
        const auto c = euler_circuit(g);
        auto lr = lift(g, c, g.vertices[c.start_vertex].word);
        assert(lr.ok);
        result.status = SearchStatus::found;
        result.word = std::move(lr.cycle);
        result.complete = true;
        return result;
    }
    if (par_recursive(n, k) == 1) {
        result.status = SearchStatus::obstructed;
        result.complete = true;
        return result;
    }

    const auto g = build_digraph(n, k);
    UcycleSearch search(g, budget);
    search.run();
    result.nodes_visited = search.visited;
    if (search.found) {
        result.status = SearchStatus::found;
        result.word = CyclicWord{std::move(search.appended), true};
        return result;
    }
    result.status = SearchStatus::exhausted;
    result.complete = !search.over_budget;
    return result;
}

std::string export_dot(const TransitionDigraph& g) {
    std::ostringstream os;
    os << "digraph G_" << g.n << "_" << g.k << " {\n";
    for (size_t v = 0; v < g.vertices.size(); ++v)
        os << "  v" << v << " [label=\"" << render_word(g.vertices[v].word) << "\"];\n";
    for (const auto& e : g.edges)
        os << "  v" << e.tail << " -> v" << e.head << " [label=\"" << render_word(e.partition) << " "
           << e.assoc.cycle_string() << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace ucycle
