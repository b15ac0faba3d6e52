#include "ucycle/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ucycle/distinct.hpp"

namespace ucycle {

namespace {

constexpr size_t kMaxExamples = 8;
constexpr size_t kMaxEnumerableFamily = 200'000;

bool sizes_distinct(const CanonicalPartition& p) {
    auto sizes = block_sizes(p);
    std::sort(sizes.begin(), sizes.end());
    return std::adjacent_find(sizes.begin(), sizes.end()) == sizes.end();
}

bool is_member(const CanonicalPartition& p, Family family, int k) {
    switch (family) {
        case Family::kpartitions: return p.k == k;
        case Family::all_partitions: return true;
        case Family::distinct_parts: return p.k == k && sizes_distinct(p);
    }
    return false;
}

/// Text rendering of a decoded window for violation listings; falls back to
/// a tuple form when the canonical alphabet exceeds the renderable range.
std::string describe(const Word& w) {
    try {
        return render_word(w);
    } catch (const std::invalid_argument&) {
        std::string out;
        for (int s : w) out += std::to_string(s) + ".";
        return out;
    }
}

struct Tally {
    size_t times = 0;
    bool member = false;
};

void list_missing(const VerifyReport& r, const std::map<Word, Tally>& mult,
                  std::vector<std::string>& out) {
    if (r.family_total > kMaxEnumerableFamily) return;
    auto consider = [&](const CanonicalPartition& p) {
        if (out.size() >= kMaxExamples) return;
        if (is_member(p, r.family, r.k) && mult.find(p.word) == mult.end())
            out.push_back(describe(p.word));
    };
    if (r.family == Family::all_partitions) {
        for (int kk = 1; kk <= r.n; ++kk) enumerate_partitions(r.n, kk, consider);
    } else {
        enumerate_partitions(r.n, r.k, consider);
    }
}

}  // namespace

BigInt family_size(int n, Family family, int k) {
    switch (family) {
        case Family::kpartitions: return stirling(n, k);
        case Family::all_partitions: return bell(n);
        case Family::distinct_parts: return count_T(n, k);
    }
    return 0;
}

VerifyReport verify(const CyclicWord& w, int n, Family family, int k, VerifyMode mode, Execution exec) {
    if (w.word.empty()) throw std::invalid_argument("verify: malformed word (empty)");
    if (n < 1) throw std::invalid_argument("verify: n must be positive");
    if (family != Family::all_partitions && k < 1)
        throw std::invalid_argument("verify: k must be positive for this family");

    VerifyReport r;
    r.mode = mode;
    r.family = family;
    r.n = n;
    r.k = (family == Family::all_partitions) ? 0 : k;
    r.length = w.word.size();
    r.family_total = family_size(n, family, k);

    const size_t length = w.word.size();
    const bool linear = (mode == VerifyMode::ustring);
    const size_t count = linear ? (length + 1 > static_cast<size_t>(n) ? length - n + 1 : 0) : length;
    r.windows_checked = count;

    std::vector<CanonicalPartition> decoded(count);
    const auto total = static_cast<int64_t>(count);
    const bool parallel = (exec == Execution::parallel);
#pragma omp parallel for schedule(static) if (parallel)
    for (int64_t i = 0; i < total; ++i) {
        Word window(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            const size_t pos = linear ? (i + j) : ((i + j) % length);
            window[j] = w.word[pos];
        }
        decoded[i] = canonicalize(window);
    }

    std::map<Word, Tally> mult;
    for (const auto& p : decoded) {
        const bool member = is_member(p, family, k);
        if (!member) {
            ++r.nonmember_count;
            if (r.nonmember_examples.size() < kMaxExamples) r.nonmember_examples.push_back(describe(p.word));
        }
        auto& tally = mult[p.word];
        tally.member = member;
        if (++tally.times == 2 && r.duplicate_examples.size() < kMaxExamples)
            r.duplicate_examples.push_back(describe(p.word));
    }
    r.distinct = mult.size();
    r.duplicate_count = count - r.distinct;
    for (const auto& [word, tally] : mult) {
        (void)word;
        if (tally.member) ++r.covered;
    }
    r.missing_count = r.family_total - r.covered;

    switch (mode) {
        case VerifyMode::ucycle:
        case VerifyMode::ustring:
            r.accepted = r.nonmember_count == 0 && r.duplicate_count == 0 &&
                         BigInt(r.windows_checked) == r.family_total;
            break;
        case VerifyMode::upacking:
            r.accepted = r.nonmember_count == 0 && r.duplicate_count == 0;
            break;
        case VerifyMode::ucovering:
            r.accepted = r.nonmember_count == 0 && r.missing_count == 0;
            break;
    }
    if (!r.accepted && r.missing_count > 0 &&
        (mode == VerifyMode::ucycle || mode == VerifyMode::ucovering || mode == VerifyMode::ustring))
        list_missing(r, mult, r.missing_examples);
    return r;
}

std::string verdict_string(const VerifyReport& r) { return r.accepted ? "accept" : "reject"; }

std::string family_name(Family f) {
    switch (f) {
        case Family::kpartitions: return "kpartitions";
        case Family::all_partitions: return "all";
        case Family::distinct_parts: return "distinct";
    }
    return "?";
}

std::string mode_name(VerifyMode m) {
    switch (m) {
        case VerifyMode::ucycle: return "ucycle";
        case VerifyMode::upacking: return "upacking";
        case VerifyMode::ucovering: return "ucovering";
        case VerifyMode::ustring: return "ustring";
    }
    return "?";
}

namespace {

nlohmann::json bigint_json(const BigInt& v) {
    if (v >= 0 && v <= BigInt(UINT64_MAX)) return v.convert_to<uint64_t>();
    return v.str();
}

}  // namespace

std::string to_json(const VerifyReport& r) {
    nlohmann::json j;
    j["mode"] = mode_name(r.mode);
    j["n"] = r.n;
    if (r.family == Family::kpartitions)
        j["k_or_family"] = r.k;
    else if (r.family == Family::all_partitions)
        j["k_or_family"] = "all";
    else
        j["k_or_family"] = "distinct:" + std::to_string(r.k);
    j["length"] = r.length;
    j["windows_checked"] = r.windows_checked;
    j["distinct"] = r.distinct;
    j["covered"] = r.covered;
    j["missing_count"] = bigint_json(r.missing_count);
    j["duplicate_count"] = r.duplicate_count;
    j["verdict"] = verdict_string(r);
    return j.dump();
}

std::string to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << "verdict: " << verdict_string(r) << "\n";
    os << "mode " << mode_name(r.mode) << ", n=" << r.n;
    if (r.family != Family::all_partitions) os << ", k=" << r.k;
    os << ", family " << family_name(r.family) << " (size " << r.family_total.str() << ")\n";
    os << "length " << r.length << ", windows " << r.windows_checked << ", distinct " << r.distinct
       << ", covered " << r.covered << ", duplicates " << r.duplicate_count << ", nonmembers "
       << r.nonmember_count << ", missing " << r.missing_count.str() << "\n";
    auto dump = [&](const char* label, const std::vector<std::string>& v) {
        if (v.empty()) return;
        os << label << ":";
        for (const auto& s : v) os << " " << s;
        os << "\n";
    };
    dump("nonmember windows", r.nonmember_examples);
    dump("duplicated windows", r.duplicate_examples);
    dump("missing members", r.missing_examples);
    return os.str();
}

}  // namespace ucycle
