// Command-line front end: universal cycles of k-partitions of [n].
//
// Exit codes: 0 success / accept; 1 verified negative (obstructed, reject,
// not connected); 2 usage or resource errors (including an exhausted search
// budget, which decides nothing).

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ucycle/digraph.hpp"
#include "ucycle/distinct.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/parity.hpp"
#include "ucycle/partitions.hpp"
#include "ucycle/verify.hpp"

using namespace ucycle;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

uint64_t budget_from_env() {
    if (const char* env = std::getenv("UCYCLE_BUDGET")) {
        const auto v = std::strtoull(env, nullptr, 10);
        if (v > 0) return v;
    }
    return kDefaultSearchBudget;
}

std::string word_string(const Word& w) { return render_word(w); }

int cmd_enumerate(int n, int k, bool as_json) {
    if (as_json) {
        json j;
        j["command"] = "enumerate";
        j["n"] = n;
        j["k"] = k;
        auto arr = json::array();
        enumerate_partitions(n, k, [&](const CanonicalPartition& p) { arr.push_back(word_string(p.word)); });
        j["count"] = arr.size();
        j["partitions"] = std::move(arr);
        std::cout << j.dump() << "\n";
    } else {
        enumerate_partitions(n, k, [&](const CanonicalPartition& p) { std::cout << word_string(p.word) << "\n"; });
    }
    return kExitOk;
}

int cmd_stirling(int n, int k, bool parity, bool as_json) {
    const auto value = stirling(n, k);
    const int bit = stirling_parity(n, k);
    if (as_json) {
        json j;
        j["command"] = "stirling";
        j["n"] = n;
        j["k"] = k;
        j["value"] = value.str();
        j["parity"] = bit;
        std::cout << j.dump() << "\n";
    } else if (parity) {
        std::cout << bit << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return kExitOk;
}

int cmd_digraph(int n, int k, bool dot, bool as_json) {
    const auto g = build_digraph(n, k);
    if (dot) {
        std::cout << export_dot(g);
        return kExitOk;
    }
    const bool balanced = is_balanced(g);
    const bool connected = is_weakly_connected(g);
    if (as_json) {
        json j;
        j["command"] = "digraph";
        j["n"] = n;
        j["k"] = k;
        j["vertices"] = g.vertices.size();
        j["edges"] = g.edges.size();
        j["balanced"] = balanced;
        j["weakly_connected"] = connected;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "G(" << n << "," << k << "): " << g.vertices.size() << " vertices, " << g.edges.size()
                  << " edges, balanced=" << (balanced ? "yes" : "no")
                  << ", weakly_connected=" << (connected ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

int cmd_euler(int n, int k, uint64_t seed, bool as_json) {
    const auto g = build_digraph(n, k);
    const auto c = seed == 0 ? euler_circuit(g) : euler_circuit_seeded(g, seed);
    const auto lr = lift(g, c, g.vertices[c.start_vertex].word);
    if (as_json) {
        json j;
        j["command"] = "euler";
        j["n"] = n;
        j["k"] = k;
        j["seed"] = seed;
        j["edges"] = c.edge_sequence.size();
        j["start_vertex"] = word_string(g.vertices[c.start_vertex].word);
        j["ustring"] = word_string(lr.ustring);
        j["liftable"] = lr.ok;
        j["permutation_product"] = permutation_product(g, c).cycle_string();
        if (lr.ok) j["ucycle"] = word_string(lr.cycle.word);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "ustring: " << word_string(lr.ustring) << "\n";
        std::cout << "liftable: " << (lr.ok ? "yes" : "no")
                  << " (product " << permutation_product(g, c).cycle_string() << ")\n";
        if (lr.ok) std::cout << "ucycle: " << word_string(lr.cycle.word) << "\n";
    }
    return kExitOk;
}

int cmd_ucycle(int n, int k, uint64_t budget, bool as_json) {
    const auto r = search_ucycle(n, k, budget);
    std::string status;
    switch (r.status) {
        case SearchStatus::found: status = "found"; break;
        case SearchStatus::obstructed: status = "obstructed"; break;
        case SearchStatus::exhausted: status = r.complete ? "none_exists" : "exhausted"; break;
    }
    if (as_json) {
        json j;
        j["command"] = "ucycle";
        j["n"] = n;
        j["k"] = k;
        j["budget"] = budget;
        j["status"] = status;
        j["nodes_visited"] = r.nodes_visited;
        if (r.status == SearchStatus::found) j["word"] = word_string(r.word.word);
        std::cout << j.dump() << "\n";
    } else {
        if (r.status == SearchStatus::found)
            std::cout << word_string(r.word.word) << "\n";
        else if (r.status == SearchStatus::obstructed)
            std::cout << "obstructed: Par(" << n << "," << k << ") = 1, no ucycle exists\n";
        else if (r.complete)
            std::cout << "search space exhausted: no ucycle exists\n";
        else
            std::cout << "budget exhausted after " << r.nodes_visited << " nodes, undecided\n";
    }
    switch (r.status) {
        case SearchStatus::found: return kExitOk;
        case SearchStatus::obstructed: return kExitNegative;
        case SearchStatus::exhausted: return r.complete ? kExitNegative : kExitError;
    }
    return kExitError;
}

int cmd_verify(const std::string& word, int n, int k, const std::string& family_flag,
               const std::string& mode_flag, bool as_json) {
    Family family = Family::kpartitions;
    if (family_flag == "all")
        family = Family::all_partitions;
    else if (family_flag == "distinct")
        family = Family::distinct_parts;
    else if (!family_flag.empty())
        throw CLI::ValidationError("--family", "expected 'all' or 'distinct'");

    VerifyMode mode = VerifyMode::ucycle;
    if (mode_flag == "upacking")
        mode = VerifyMode::upacking;
    else if (mode_flag == "ucovering")
        mode = VerifyMode::ucovering;
    else if (mode_flag == "ustring")
        mode = VerifyMode::ustring;
    else if (mode_flag != "ucycle")
        throw CLI::ValidationError("--mode", "expected ucycle, upacking, ucovering or ustring");

    if (family != Family::all_partitions && k < 1)
        throw CLI::ValidationError("--k", "required unless --family all");

    CyclicWord cw{parse_opaque(word), mode != VerifyMode::ustring};
    const auto report = verify(cw, n, family, k, mode);
    std::cout << (as_json ? to_json(report) + "\n" : to_text(report));
    return report.accepted ? kExitOk : kExitNegative;
}

int cmd_parity(int max_n, const std::string& route_flag, bool as_json) {
    ParRoute route = ParRoute::closed;
    if (route_flag == "recursive")
        route = ParRoute::recursive;
    else if (route_flag == "direct")
        route = ParRoute::direct;
    else if (route_flag != "closed")
        throw CLI::ValidationError("--route", "expected closed, recursive or direct");
    const auto t = build_parity_table(max_n, route);
    if (as_json) {
        json j;
        j["command"] = "parity";
        j["max_n"] = max_n;
        j["route"] = route_flag;
        auto cells = json::array();
        for (int n = 3; n <= max_n; ++n)
            for (int k = 2; k < n; ++k)
                cells.push_back(json{{"n", n}, {"k", k}, {"par", t.at(n, k)}, {"no_ucycle", t.at(n, k) == 1}});
        j["cells"] = std::move(cells);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << render_parity_table(t);
    }
    return kExitOk;
}

int cmd_pack_or_cover(const char* name, int n, int k, bool as_json, bool cover) {
    const auto w = cover ? ucovering(n, k) : upacking(n, k);
    const auto report = verify(w, n, cover ? Family::kpartitions : Family::distinct_parts, k,
                               cover ? VerifyMode::ucovering : VerifyMode::upacking);
    if (as_json) {
        json j;
        j["command"] = name;
        j["n"] = n;
        j["k"] = k;
        j["length"] = w.word.size();
        j["verified"] = report.accepted;
        j["word"] = word_string(w.word);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << word_string(w.word) << "\n";
    }
    return report.accepted ? kExitOk : kExitNegative;
}

int cmd_ratio(int k, int n_from, int n_to) {
    std::cout << ratio_csv(ratio_report(k, n_from, n_to));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal cycles, packings and coverings of k-partitions of [n]"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON on stdout");

    int n = 0, k = 0;
    uint64_t seed = 0;
    uint64_t budget = budget_from_env();
    bool dot = false, parity_only = false;
    std::string word, family_flag, mode_flag = "ucycle", route_flag = "closed";
    int max_n = 12, n_from = 8, n_to = 20;

    auto* enumerate = app.add_subcommand("enumerate", "list the k-partitions of [n]");
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--k", k)->required();

    auto* stirling_cmd = app.add_subcommand("stirling", "Stirling number S(n,k)");
    stirling_cmd->add_option("--n", n)->required();
    stirling_cmd->add_option("--k", k)->required();
    stirling_cmd->add_flag("--parity", parity_only, "print S(n,k) mod 2 instead");

    auto* digraph_cmd = app.add_subcommand("digraph", "build the transition digraph G(n,k)");
    digraph_cmd->add_option("--n", n)->required();
    digraph_cmd->add_option("--k", k)->required();
    digraph_cmd->add_flag("--dot", dot, "emit Graphviz DOT");

    auto* euler = app.add_subcommand("euler", "Euler circuit of G(n,k) and its lift attempt");
    euler->add_option("--n", n)->required();
    euler->add_option("--k", k)->required();
    euler->add_option("--seed", seed, "random-restart seed (0 = deterministic)");

    auto* ucycle_cmd = app.add_subcommand("ucycle", "search for a ucycle of the k-partitions of [n]");
    ucycle_cmd->add_option("--n", n)->required();
    ucycle_cmd->add_option("--k", k)->required();
    ucycle_cmd->add_option("--budget", budget, "search budget in visited nodes");

    auto* verify_cmd = app.add_subcommand("verify", "verify a word against a partition family");
    verify_cmd->add_option("--word", word)->required();
    verify_cmd->add_option("--n", n)->required();
    verify_cmd->add_option("--k", k);
    verify_cmd->add_option("--family", family_flag, "all | distinct (default: k-partitions)");
    verify_cmd->add_option("--mode", mode_flag, "ucycle | upacking | ucovering | ustring");

    auto* parity_cmd = app.add_subcommand("parity", "parity table Par(n,k)");
    parity_cmd->add_option("--max-n", max_n);
    parity_cmd->add_option("--route", route_flag, "closed | recursive | direct");

    auto* upack = app.add_subcommand("upack", "universal packing from distinct part sizes");
    upack->add_option("--n", n)->required();
    upack->add_option("--k", k)->required();

    auto* ucover = app.add_subcommand("ucover", "universal covering from non-decreasing part sizes");
    ucover->add_option("--n", n)->required();
    ucover->add_option("--k", k)->required();

    auto* ratio = app.add_subcommand("ratio", "CSV of T(n,k), U(n,k), S(n,k) and their ratios");
    ratio->add_option("--k", k)->required();
    ratio->add_option("--from", n_from);
    ratio->add_option("--to", n_to);

    for (auto* sc : app.get_subcommands([](CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
        if (enumerate->parsed()) return cmd_enumerate(n, k, as_json);
        if (stirling_cmd->parsed()) return cmd_stirling(n, k, parity_only, as_json);
        if (digraph_cmd->parsed()) return cmd_digraph(n, k, dot, as_json);
        if (euler->parsed()) return cmd_euler(n, k, seed, as_json);
        if (ucycle_cmd->parsed()) return cmd_ucycle(n, k, budget, as_json);
        if (verify_cmd->parsed()) return cmd_verify(word, n, k, family_flag, mode_flag, as_json);
        if (parity_cmd->parsed()) return cmd_parity(max_n, route_flag, as_json);
        if (upack->parsed()) return cmd_pack_or_cover("upack", n, k, as_json, false);
        if (ucover->parsed()) return cmd_pack_or_cover("ucover", n, k, as_json, true);
        if (ratio->parsed()) return cmd_ratio(k, n_from, n_to);
        return kExitError;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    } catch (const NotConnectedError& e) {
        std::cerr << "not connected: " << e.what() << "\n";
        return kExitNegative;
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
