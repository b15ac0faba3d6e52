#pragma once

#include <string>
#include <vector>

#include "ucycle/digraph.hpp"
#include "ucycle/execution.hpp"
#include "ucycle/partitions.hpp"

namespace ucycle {

enum class Family {
    kpartitions,     // partitions of [n] into exactly k blocks
    all_partitions,  // partitions of [n] into any number of blocks
    distinct_parts,  // k blocks with pairwise distinct sizes
};

enum class VerifyMode { ucycle, upacking, ucovering, ustring };

struct VerifyReport {
    VerifyMode mode = VerifyMode::ucycle;
    Family family = Family::kpartitions;
    int n = 0;
    int k = 0;  // unused for all_partitions
    size_t length = 0;
    size_t windows_checked = 0;
    size_t distinct = 0;  // distinct decoded partitions
    size_t covered = 0;   // distinct decoded partitions that are family members
    BigInt family_total = 0;
    BigInt missing_count = 0;
    size_t duplicate_count = 0;
    size_t nonmember_count = 0;
    bool accepted = false;
    // Capped samples for the text report.
    std::vector<std::string> nonmember_examples;
    std::vector<std::string> duplicate_examples;
    std::vector<std::string> missing_examples;
};

BigInt family_size(int n, Family family, int k);

/// Decodes every window of length n (cyclically, or linearly in ustring
/// mode), canonicalizes it, and checks family membership, distinctness and
/// coverage according to the mode. Symbols are treated opaquely.
VerifyReport verify(const CyclicWord& w, int n, Family family, int k, VerifyMode mode,
                    Execution exec = Execution::parallel);

std::string verdict_string(const VerifyReport& r);  // "accept" or "reject"
std::string to_json(const VerifyReport& r);
std::string to_text(const VerifyReport& r);

std::string family_name(Family f);
std::string mode_name(VerifyMode m);

}  // namespace ucycle
