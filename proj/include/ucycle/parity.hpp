#pragma once

#include <string>
#include <vector>

#include "ucycle/execution.hpp"

namespace ucycle {

enum class ParRoute { direct, recursive, closed };

/// Parity of the number of odd permutations in the permutation multiset of
/// G(n,k), counted on the built digraph. Throws ResourceLimitError when the
/// digraph would be too large.
int par_direct(int n, int k, Execution exec = Execution::serial);

/// Par(n,k) by the recurrence
///   Par(n,k) = k*Par(n-1,k) + Par(n-1,k-1) + S(n-2,k-2)  (mod 2)
/// with Par(n,2) = 0 and Par(n,n-1) = 1 iff n = 0 mod 4.
int par_recursive(int n, int k);

/// Closed form: 0 for odd n, S(n-2,k-2) mod 2 for even n (n = 3 falls back
/// to the recursion).
int par_closed(int n, int k);

/// One-sided nonexistence certificate: true means no ucycle of the
/// k-partitions of [n] exists; false decides nothing.
bool no_ucycle_by_parity(int n, int k);

/// Immutable grid of Par(n,k) bits for 2 <= k < n <= max_n, built once and
/// then read-only.
struct ParityTable {
    int max_n = 0;
    ParRoute route = ParRoute::closed;
    std::vector<uint8_t> bits;  // row n, column k

    int at(int n, int k) const;
};

ParityTable build_parity_table(int max_n, ParRoute route = ParRoute::closed);

/// Rows n, columns k; certified-nonexistence cells are marked "1*".
std::string render_parity_table(const ParityTable& t);

}  // namespace ucycle
