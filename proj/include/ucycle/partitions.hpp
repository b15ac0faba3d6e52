#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ucycle {

// A word is a sequence of symbols. Canonical partition words use {1..k};
// arbitrary representations may use any int symbols.
using Word = std::vector<int>;
using BigInt = boost::multiprecision::cpp_int;

/// Permutation of {1..k}; images()[i-1] is the image of i.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int k);
    /// The cycle (1 j j-1 ... 2): 1 -> j, i -> i-1 for 2 <= i <= j. j = 1 gives the identity.
    static Perm cycle_to_j(int j, int k);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Perm inverse() const;
    bool is_identity() const;
    bool is_odd() const;
    int sign() const { return is_odd() ? -1 : +1; }  // +1 even, -1 odd

    /// Cycle notation with fixed points suppressed, e.g. "(1 3 2)"; "id" for the identity.
    std::string cycle_string() const;

    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

/// compose(p, q) applies q first, then p.
Perm compose(const Perm& p, const Perm& q);

/// A set partition of [m] encoded as a restricted-growth word: word[0] == 1,
/// every symbol exceeds the running maximum by at most one, and the distinct
/// symbols are exactly {1..k}. Position i holds the block of element i+1.
struct CanonicalPartition {
    Word word;
    int k = 0;
    bool operator==(const CanonicalPartition&) const = default;
    bool operator<(const CanonicalPartition& o) const { return word < o.word; }
};

bool is_restricted_growth(const Word& w);
int distinct_symbols(const Word& w);

/// Relabels symbols in first-occurrence order to 1,2,...; all representations
/// of one partition map to the same output.
CanonicalPartition canonicalize(const Word& representation);

/// The permutation sending each symbol to its first-occurrence rank in r.
/// When exactly k-1 of the symbols {1..k} appear, the missing one gets rank k.
/// Rendered in one-line form this is the word of first occurrences, e.g.
/// 2133 -> 213 and 1331 -> 132. Throws if r is not over {1..k} or uses fewer
/// than k-1 distinct symbols.
Perm relative_order(const Word& r, int k);

/// All k! representations of p (one per symbol bijection of {1..k}).
std::vector<Word> all_representations(const CanonicalPartition& p);

std::vector<int> block_sizes(const CanonicalPartition& p);

/// Streams every restricted-growth word of length n with exactly k symbols,
/// in lexicographic order.
void enumerate_partitions(int n, int k, const std::function<void(const CanonicalPartition&)>& yield);
std::vector<CanonicalPartition> list_partitions(int n, int k);

/// Stirling number of the second kind, exact. S(0,0) = 1, S(n,0) = 0 for n > 0.
BigInt stirling(int n, int k);
/// S(n,k) mod 2, computed with bit arithmetic only.
int stirling_parity(int n, int k);
/// Bell number: partitions of [n] into any number of blocks.
BigInt bell(int n);

// Symbol rendering: 1..9 as '1'..'9', 10.. as 'a','b',...
char render_symbol(int s);
std::string render_word(const Word& w);
/// Inverse of render_symbol on its output range.
int parse_symbol(char c);
/// Treats each character as an opaque symbol (identity of char value).
Word parse_opaque(const std::string& s);

}  // namespace ucycle
