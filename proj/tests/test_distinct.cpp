#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "ucycle/distinct.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/verify.hpp"

using namespace ucycle;

namespace {

std::vector<std::vector<int>> psv_sizes(int n, int k, PsvFlavor f) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_psv(n, k, f)) out.push_back(p.sizes);
    return out;
}

/// Brute-force edge-word oracle: scan all k^n words, keep those whose symbol
/// counts form a legal PSV.
std::vector<Word> brute_force_edge_words(int n, int k, PsvFlavor flavor) {
    std::vector<Word> out;
    Word w(n, 1);
    while (true) {
        std::vector<int> counts(k, 0);
        for (int s : w) ++counts[s - 1];
        bool legal = std::all_of(counts.begin(), counts.end(), [](int c) { return c >= 1; });
        for (int i = 0; legal && i + 1 < k; ++i) {
            if (flavor == PsvFlavor::strict ? counts[i] >= counts[i + 1] : counts[i] > counts[i + 1])
                legal = false;
        }
        if (legal) out.push_back(w);
        int i = n - 1;
        while (i >= 0 && w[i] == k) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

}  // namespace

TEST_CASE("PSV enumeration matches the published lists") {
    CHECK(psv_sizes(18, 5, PsvFlavor::strict) ==
          std::vector<std::vector<int>>{{1, 2, 3, 4, 8}, {1, 2, 3, 5, 7}, {1, 2, 4, 5, 6}});
    CHECK(psv_sizes(19, 5, PsvFlavor::strict) ==
          std::vector<std::vector<int>>{
              {1, 2, 3, 4, 9}, {1, 2, 3, 5, 8}, {1, 2, 3, 6, 7}, {1, 2, 4, 5, 7}, {1, 3, 4, 5, 6}});
    CHECK(psv_sizes(15, 5, PsvFlavor::strict) == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
    CHECK(enumerate_psv(14, 5, PsvFlavor::strict).empty());
    CHECK(enumerate_psv(2, 3, PsvFlavor::weak).empty());
    CHECK(psv_sizes(5, 3, PsvFlavor::weak) ==
          std::vector<std::vector<int>>{{1, 1, 3}, {1, 2, 2}});
}

TEST_CASE("threshold") {
    CHECK(threshold_n1(5) == 19);
    CHECK(threshold_n1(3) == 8);
    for (int k = 2; k <= 10; ++k) CHECK(threshold_n1(k) - k * (k + 1) / 2 == k - 1);
    CHECK_THROWS_AS(threshold_n1(1), std::invalid_argument);
}

TEST_CASE("legal and illegal vertices from the worked n=10, k=4 example") {
    const auto g = build_distinct_digraph(10, 4, PsvFlavor::strict);
    CHECK(g.vertex_index(Word{1, 2, 2, 3, 3, 3, 4, 4, 4}) >= 0);
    CHECK(g.vertex_index(Word{1, 2, 3, 3, 3, 4, 4, 4, 4}) >= 0);
    CHECK(g.vertex_index(Word{1, 1, 2, 2, 3, 3, 3, 4, 4}) < 0);
}

TEST_CASE("edge words: serial reference, parallel lane, and brute force agree") {
    for (auto [n, k, flavor] : std::vector<std::tuple<int, int, PsvFlavor>>{
             {8, 3, PsvFlavor::strict}, {7, 3, PsvFlavor::weak}, {10, 4, PsvFlavor::strict},
             {6, 2, PsvFlavor::strict}, {5, 3, PsvFlavor::weak}}) {
        const auto serial = enumerate_edge_words(n, k, flavor, Execution::serial);
        const auto parallel = enumerate_edge_words(n, k, flavor, Execution::parallel);
        CHECK(serial == parallel);
        CHECK(serial == brute_force_edge_words(n, k, flavor));
        CHECK(std::is_sorted(serial.begin(), serial.end()));
    }
}

TEST_CASE("counts: multinomial sums equal edge counts") {
    CHECK(count_T(8, 3) == 448);
    CHECK(count_T(8, 3) == oracles::multinomial_u64(8, {1, 2, 5}) + oracles::multinomial_u64(8, {1, 3, 4}));
    CHECK(count_U(8, 3) == 56 + 168 + 280 + 420 + 560);  // PSVs 116,125,134,224,233
    CHECK(count_T(5, 3) == 0);  // below n0 = 6
    for (int n = 8; n <= 12; ++n) {
        CHECK(BigInt(build_distinct_digraph(n, 3, PsvFlavor::strict).edge_words.size()) == count_T(n, 3));
        CHECK(BigInt(build_distinct_digraph(n, 3, PsvFlavor::weak).edge_words.size()) == count_U(n, 3));
    }
}

TEST_CASE("T <= S <= U") {
    for (int k = 3; k <= 6; ++k)
        for (int n = k + 1; n <= 15; ++n) {
            CHECK(count_T(n, k) <= stirling(n, k));
            CHECK(stirling(n, k) <= count_U(n, k));
        }
}

TEST_CASE("balance and connectivity") {
    for (int n = 4; n <= 12; ++n) {
        for (auto flavor : {PsvFlavor::strict, PsvFlavor::weak}) {
            const auto g = build_distinct_digraph(n, 3, flavor);
            CHECK(is_balanced(g));
        }
    }
    for (int n = 8; n <= 12; ++n) CHECK(is_weakly_connected(build_distinct_digraph(n, 3, PsvFlavor::strict)));
    // one size above the k = 4 threshold n1 = 13
    const auto g13 = build_distinct_digraph(13, 4, PsvFlavor::strict);
    CHECK(is_balanced(g13));
    CHECK(is_weakly_connected(g13));
}

TEST_CASE("upacking(8,3)") {
    const auto w = upacking(8, 3);
    CHECK(w.word.size() == 448);
    const auto report = verify(w, 8, Family::distinct_parts, 3, VerifyMode::upacking);
    CHECK(report.accepted);
    CHECK(report.distinct == 448);
    // ucycle of the distinct-parts family: all 448 present
    CHECK(verify(w, 8, Family::distinct_parts, 3, VerifyMode::ucycle).accepted);
    // raw windows are canonical surjections: counts strictly increasing by symbol
    for (size_t i = 0; i < w.word.size(); ++i) {
        std::vector<int> counts(3, 0);
        for (int j = 0; j < 8; ++j) ++counts[w.word[(i + j) % w.word.size()] - 1];
        CHECK(counts[0] >= 1);
        CHECK(counts[0] < counts[1]);
        CHECK(counts[1] < counts[2]);
    }
}

TEST_CASE("ucovering(8,3)") {
    const auto w = ucovering(8, 3);
    CHECK(BigInt(w.word.size()) == count_U(8, 3));
    CHECK(w.word.size() >= 966);  // U >= S
    const auto report = verify(w, 8, Family::kpartitions, 3, VerifyMode::ucovering);
    CHECK(report.accepted);
    CHECK(report.covered == 966);
    CHECK(report.missing_count == 0);

    // every window is a distinct word, and each partition appears once per
    // non-decreasing labeling of its blocks
    std::set<Word> raw;
    std::map<Word, size_t> canon_mult;
    for (size_t i = 0; i < w.word.size(); ++i) {
        Word window(8);
        for (int j = 0; j < 8; ++j) window[j] = w.word[(i + j) % w.word.size()];
        raw.insert(window);
        ++canon_mult[canonicalize(window).word];
    }
    CHECK(raw.size() == w.word.size());
    CHECK(canon_mult.size() == 966);
    for (const auto& [word, times] : canon_mult) {
        const auto p = canonicalize(word);
        CHECK(times == oracles::weak_representations(block_sizes(p)));
    }
}

TEST_CASE("upacking below the edge-existence bound reports no edges") {
    CHECK_THROWS_AS(upacking(5, 3), NotConnectedError);
}

TEST_CASE("ratio report") {
    const auto rows = ratio_report(3, 8, 30);
    REQUIRE(rows.size() == 23);
    for (const auto& r : rows) {
        CHECK(r.T <= r.S);
        CHECK(r.S <= r.U);
        CHECK(r.t_over_s > 0.0);
        CHECK(r.u_over_s >= 1.0);
    }
    // The ratios drift towards 1 but oscillate with n mod 3 (the dominant
    // equal-pair part-size vector degenerates when 3 divides n); only the
    // same-residue subsequences are strictly monotone. Compare exactly by
    // cross-multiplication.
    for (size_t i = 0; i + 3 < rows.size(); ++i) {
        CHECK(rows[i].T * rows[i + 3].S < rows[i + 3].T * rows[i].S);
        CHECK(rows[i].U * rows[i + 3].S > rows[i + 3].U * rows[i].S);
    }
    CHECK(rows.front().T * rows.back().S < rows.back().T * rows.front().S);
    CHECK(rows.front().U * rows.back().S > rows.back().U * rows.front().S);
    const auto csv = ratio_csv(rows);
    CHECK(csv.rfind("n,T,U,S,T_over_S,U_over_S\n", 0) == 0);
    CHECK(csv.find("448,1484,966") != std::string::npos);
    CHECK_THROWS_AS(ratio_report(2, 8, 9), std::invalid_argument);
}

TEST_CASE("enumerate_psv input validation") {
    CHECK_THROWS_AS(enumerate_psv(8, 0, PsvFlavor::strict), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_psv(-1, 3, PsvFlavor::weak), std::invalid_argument);
}
