#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "ucycle/digraph.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/verify.hpp"

using namespace ucycle;

namespace {

Word W(std::initializer_list<int> xs) { return Word(xs); }

/// Independent oracle for the associated permutation of all out-edges of a
/// vertex: locate the second occurrence of the first symbol in the canonical
/// word; j-1 is the number of distinct symbols strictly between the two
/// occurrences, j = k when there is no second occurrence.
Perm assoc_rule(const Word& vertex_word, int k) {
    const int first = vertex_word[0];
    size_t second = vertex_word.size();
    for (size_t i = 1; i < vertex_word.size(); ++i)
        if (vertex_word[i] == first) {
            second = i;
            break;
        }
    int j;
    if (second == vertex_word.size()) {
        j = k;
    } else {
        std::set<int> between(vertex_word.begin() + 1, vertex_word.begin() + second);
        j = static_cast<int>(between.size()) + 1;
    }
    return Perm::cycle_to_j(j, k);
}

bool chains(const TransitionDigraph& g, const EulerCircuit& c) {
    if (c.edge_sequence.empty()) return true;
    if (g.edges[c.edge_sequence.front()].tail != c.start_vertex) return false;
    for (size_t i = 0; i + 1 < c.edge_sequence.size(); ++i)
        if (g.edges[c.edge_sequence[i]].head != g.edges[c.edge_sequence[i + 1]].tail) return false;
    return g.edges[c.edge_sequence.back()].head == c.start_vertex;
}

}  // namespace

TEST_CASE("vertex and edge counts") {
    const auto g53 = build_digraph(5, 3);
    CHECK(g53.vertices.size() == 13);  // S(4,3) + S(4,2) = 6 + 7
    CHECK(g53.edges.size() == 25);     // S(5,3)

    const auto g32 = build_digraph(3, 2);
    CHECK(g32.vertices.size() == 2);  // S(2,2) + S(2,1)
    CHECK(g32.edges.size() == 3);

    for (int n = 3; n <= 8; ++n)
        for (int k = 2; k < n; ++k) {
            const auto g = build_digraph(n, k);
            CHECK(BigInt(g.vertices.size()) == stirling(n - 1, k) + stirling(n - 1, k - 1));
            CHECK(BigInt(g.edges.size()) == stirling(n, k));
        }

    CHECK_THROWS_AS(build_digraph(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_digraph(3, 1), std::invalid_argument);
}

TEST_CASE("degree law: k-block vertices have degree k, others 1") {
    for (int n = 3; n <= 8; ++n)
        for (int k = 2; k < n; ++k) {
            const auto g = build_digraph(n, k);
            for (size_t v = 0; v < g.vertices.size(); ++v) {
                const size_t expect = (g.vertices[v].k == k) ? static_cast<size_t>(k) : 1;
                CHECK(g.out_edges[v].size() == expect);
                CHECK(g.in_edges[v].size() == expect);
            }
        }
}

TEST_CASE("edge endpoints restrict the partition") {
    const auto g = build_digraph(5, 3);
    for (const auto& e : g.edges) {
        CHECK(g.vertices[e.tail].word == Word(e.partition.begin(), e.partition.end() - 1));
        CHECK(g.vertices[e.head].word == canonicalize(Word(e.partition.begin() + 1, e.partition.end())).word);
    }
}

TEST_CASE("associated permutation examples") {
    const auto g = build_digraph(5, 3);
    const int v1213 = g.vertex_index(W({1, 2, 1, 3}));
    REQUIRE(v1213 >= 0);
    for (int e : g.out_edges[v1213]) CHECK(g.edges[e].assoc == Perm::cycle_to_j(2, 3));

    const int v1123 = g.vertex_index(W({1, 1, 2, 3}));
    REQUIRE(v1123 >= 0);
    for (int e : g.out_edges[v1123]) CHECK(g.edges[e].assoc.is_identity());

    // first symbol never recurs -> (1 k k-1 ... 2)
    const int v1233 = g.vertex_index(W({1, 2, 3, 3}));
    REQUIRE(v1233 >= 0);
    for (int e : g.out_edges[v1233]) CHECK(g.edges[e].assoc == Perm::cycle_to_j(3, 3));
}

TEST_CASE("per-vertex assoc equals the second-occurrence rule") {
    for (int n = 3; n <= 7; ++n)
        for (int k = 2; k < n; ++k) {
            const auto g = build_digraph(n, k);
            for (size_t v = 0; v < g.vertices.size(); ++v) {
                const Perm expect = assoc_rule(g.vertices[v].word, k);
                for (int e : g.out_edges[v]) CHECK(associated_permutation(g, e) == expect);
            }
        }
}

TEST_CASE("balanced and weakly connected") {
    for (int n = 3; n <= 8; ++n)
        for (int k = 2; k < n; ++k) {
            const auto g = build_digraph(n, k);
            CHECK(is_balanced(g));
            CHECK(is_weakly_connected(g));
        }
    TransitionDigraph degenerate;
    degenerate.vertices.push_back(CanonicalPartition{W({1}), 1});
    degenerate.out_edges.resize(1);
    degenerate.in_edges.resize(1);
    CHECK(is_balanced(degenerate));
    CHECK(is_weakly_connected(degenerate));
}

TEST_CASE("path_to_target") {
    const auto g63 = build_digraph(6, 3);
    const int target = target_vertex(g63);
    CHECK(g63.vertices[target].word == W({1, 2, 3, 3, 3}));
    CHECK(path_to_target(g63, target) == std::vector<int>{target});
    for (size_t u = 0; u < g63.vertices.size(); ++u) {
        const auto path = path_to_target(g63, static_cast<int>(u));
        CHECK(path.front() == static_cast<int>(u));
        CHECK(path.back() == target);
    }
    for (int n = 3; n <= 7; ++n)
        for (int k = 2; k < n; ++k) {
            const auto g = build_digraph(n, k);
            for (size_t u = 0; u < g.vertices.size(); ++u) {
                const auto path = path_to_target(g, static_cast<int>(u));
                // steps <= (k-1) + (n-1-k)
                CHECK(path.size() <= static_cast<size_t>(n - 2) + 1);
                // consecutive vertices joined by an edge
                for (size_t i = 0; i + 1 < path.size(); ++i) {
                    bool adjacent = false;
                    for (int e : g.out_edges[path[i]])
                        if (g.edges[e].head == path[i + 1]) adjacent = true;
                    CHECK(adjacent);
                }
            }
        }
}

TEST_CASE("euler_circuit uses every edge once and chains") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}, {4, 3}, {7, 4}}) {
        const auto g = build_digraph(n, k);
        const auto c = euler_circuit(g);
        CHECK(c.edge_sequence.size() == g.edges.size());
        CHECK(chains(g, c));
        std::set<int> used(c.edge_sequence.begin(), c.edge_sequence.end());
        CHECK(used.size() == g.edges.size());
    }
    CHECK(euler_circuit(build_digraph(4, 2)).edge_sequence.size() == 7);
    CHECK(euler_circuit(build_digraph(5, 3)).edge_sequence.size() == 25);
}

TEST_CASE("euler_circuit rejects non-Eulerian input") {
    auto g = build_digraph(3, 2);
    g.edges.pop_back();  // unbalance by dropping one edge
    CHECK_THROWS_AS(euler_circuit(g), NotEulerianError);
}

TEST_CASE("seeded circuits are valid and deterministic per seed") {
    const auto g = build_digraph(5, 3);
    const auto a = euler_circuit_seeded(g, 42);
    const auto b = euler_circuit_seeded(g, 42);
    CHECK(a.edge_sequence == b.edge_sequence);
    CHECK(chains(g, a));
    const auto c = euler_circuit_seeded(g, 43);
    CHECK(chains(g, c));
}

TEST_CASE("permutation product: k=2 circuits are identity, G(4,3) never is") {
    for (int n = 3; n <= 10; ++n) {
        const auto g = build_digraph(n, 2);
        CHECK(permutation_product(g, euler_circuit(g)).is_identity());
        for (uint64_t seed = 1; seed <= 5; ++seed)
            CHECK(permutation_product(g, euler_circuit_seeded(g, seed)).is_identity());
    }
    const auto g43 = build_digraph(4, 3);
    CHECK_FALSE(permutation_product(g43, euler_circuit(g43)).is_identity());
    for (uint64_t seed = 1; seed <= 20; ++seed)
        CHECK_FALSE(permutation_product(g43, euler_circuit_seeded(g43, seed)).is_identity());

    EulerCircuit empty;
    CHECK(permutation_product(g43, empty).is_identity());
}

TEST_CASE("lift succeeds iff the permutation product is the identity") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}}) {
        const auto g = build_digraph(n, k);
        for (uint64_t seed = 0; seed <= 30; ++seed) {
            const auto c = seed == 0 ? euler_circuit(g) : euler_circuit_seeded(g, seed);
            const auto lr = lift(g, c, g.vertices[c.start_vertex].word);
            const auto prod = permutation_product(g, c);
            CHECK(lr.ok == prod.is_identity());
            CHECK(lr.mismatch == prod);
        }
    }
}

TEST_CASE("lift of k=2 circuits yields verified ucycles") {
    for (int n = 3; n <= 10; ++n) {
        const auto g = build_digraph(n, 2);
        const auto c = euler_circuit(g);
        const auto lr = lift(g, c, g.vertices[c.start_vertex].word);
        CHECK(lr.ok);
        CHECK(lr.cycle.word.size() == (size_t{1} << (n - 1)) - 1);
        const auto report = verify(lr.cycle, n, Family::kpartitions, 2, VerifyMode::ucycle);
        CHECK(report.accepted);
    }
}

TEST_CASE("lift validates its start representation") {
    const auto g = build_digraph(4, 3);
    const auto c = euler_circuit(g);
    CHECK_THROWS_AS(lift(g, c, W({1, 2})), std::invalid_argument);
    const Word wrong_vertex = g.vertices[(c.start_vertex + 1) % g.vertices.size()].word;
    CHECK_THROWS_AS(lift(g, c, wrong_vertex), std::invalid_argument);
    // any representation of the right vertex is accepted
    const auto reps = all_representations(g.vertices[c.start_vertex]);
    for (const auto& rep : reps) {
        const auto lr = lift(g, c, rep);
        CHECK(lr.mismatch == permutation_product(g, c));
    }
}

TEST_CASE("degenerate empty circuit lifts to the unchanged representation") {
    const auto g = build_digraph(4, 3);
    EulerCircuit empty;
    empty.start_vertex = 2;
    const auto lr = lift(g, empty, g.vertices[2].word);
    CHECK(lr.ok);
    CHECK(lr.cycle.word.empty());
    CHECK(lr.ustring == g.vertices[2].word);
}

TEST_CASE("ustring windows decode the circuit's edges in order") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {5, 2}}) {
        const auto g = build_digraph(n, k);
        const auto c = euler_circuit(g);
        const auto lr = lift(g, c, g.vertices[c.start_vertex].word);
        REQUIRE(lr.ustring.size() == g.vertices[c.start_vertex].word.size() + c.edge_sequence.size());
        for (size_t i = 0; i < c.edge_sequence.size(); ++i) {
            const Word window(lr.ustring.begin() + i, lr.ustring.begin() + i + n);
            CHECK(canonicalize(window).word == g.edges[c.edge_sequence[i]].partition);
        }
    }
}

TEST_CASE("permutation multiset") {
    for (int n = 3; n <= 8; ++n) {
        const auto g = build_digraph(n, 2);
        const auto ms = permutation_multiset(g);
        CHECK(ms.size() == g.edges.size());
        CHECK(count_odd_assoc(g) % 2 == 0);  // even number of (12)
    }
    const auto g53 = build_digraph(5, 3);
    const auto ms = permutation_multiset(g53);
    CHECK(ms.size() == 25);
    for (const auto& p : ms) {
        bool is_cycle_form = false;
        for (int j = 1; j <= 3; ++j)
            if (p == Perm::cycle_to_j(j, 3)) is_cycle_form = true;
        CHECK(is_cycle_form);
    }
    CHECK(count_odd_assoc(g53, Execution::serial) == count_odd_assoc(g53, Execution::parallel));
}

TEST_CASE("search_ucycle finds a verified ucycle for (5,3)") {
    const auto r = search_ucycle(5, 3);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.word.word.size() == 25);
    CHECK(verify(r.word, 5, Family::kpartitions, 3, VerifyMode::ucycle).accepted);
}

TEST_CASE("search_ucycle k=2 route") {
    const auto r = search_ucycle(6, 2);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.word.word.size() == 31);
    CHECK(verify(r.word, 6, Family::kpartitions, 2, VerifyMode::ucycle).accepted);
}

TEST_CASE("search_ucycle obstruction and budget") {
    CHECK(search_ucycle(4, 3).status == SearchStatus::obstructed);
    CHECK(search_ucycle(6, 3).status == SearchStatus::obstructed);
    CHECK_THROWS_AS(search_ucycle(5, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(search_ucycle(3, 3), std::invalid_argument);
    // Par(7,3) = 0 but one node is never enough: budget exhaustion
    const auto r = search_ucycle(7, 3, 1);
    CHECK(r.status == SearchStatus::exhausted);
    CHECK_FALSE(r.complete);
}

TEST_CASE("export_dot shape") {
    const auto dot53 = export_dot(build_digraph(5, 3));
    CHECK(dot53.find("digraph") == 0);
    CHECK(std::count(dot53.begin(), dot53.end(), '\n') == 1 + 13 + 25 + 1);
    CHECK(dot53.find("->") != std::string::npos);
    const auto dot32 = export_dot(build_digraph(3, 2));
    CHECK(std::count(dot32.begin(), dot32.end(), '\n') == 1 + 2 + 3 + 1);
    // edge labels carry cycle notation with fixed points suppressed
    CHECK(dot32.find("(1 2)") != std::string::npos);
    CHECK(dot32.find("id") != std::string::npos);
}
