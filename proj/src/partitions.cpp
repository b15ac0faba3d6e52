#include "ucycle/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ucycle {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    const int k = static_cast<int>(images_.size());
    std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > k || seen[v]) throw std::invalid_argument("Perm: not a bijection of {1..k}");
        seen[v] = 1;
    }
}

Perm Perm::identity(int k) {
    std::vector<int> im(k);
    std::iota(im.begin(), im.end(), 1);
    return Perm(std::move(im));
}

Perm Perm::cycle_to_j(int j, int k) {
    if (k < 1 || j < 1 || j > k) throw std::invalid_argument("cycle_to_j: j out of range");
    std::vector<int> im(k);
    std::iota(im.begin(), im.end(), 1);
    im[0] = j;
    for (int i = 2; i <= j; ++i) im[i - 1] = i - 1;
    return Perm(std::move(im));
}

Perm Perm::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) im[apply(i) - 1] = i;
    return Perm(std::move(im));
}

bool Perm::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (apply(i) != i) return false;
    return true;
}

bool Perm::is_odd() const {
    // parity = (k - number of cycles) mod 2
    const int k = size();
    std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
    int cycles = 0;
    for (int i = 1; i <= k; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = apply(j)) seen[j] = 1;
    }
    return (k - cycles) % 2 != 0;
}

std::string Perm::cycle_string() const {
    const int k = size();
    std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
    std::string out;
    for (int i = 1; i <= k; ++i) {
        if (seen[i] || apply(i) == i) continue;
        out += '(';
        bool first = true;
        for (int j = i; !seen[j]; j = apply(j)) {
            seen[j] = 1;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
        }
        out += ')';
    }
    return out.empty() ? "id" : out;
}

Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> im(p.size());
    for (int i = 1; i <= p.size(); ++i) im[i - 1] = p.apply(q.apply(i));
    return Perm(std::move(im));
}

bool is_restricted_growth(const Word& w) {
    if (w.empty() || w[0] != 1) return false;
    int mx = 1;
    for (int s : w) {
        if (s < 1 || s > mx + 1) return false;
        mx = std::max(mx, s);
    }
    return true;
}

int distinct_symbols(const Word& w) {
    std::vector<int> seen;
    for (int s : w)
        if (std::find(seen.begin(), seen.end(), s) == seen.end()) seen.push_back(s);
    return static_cast<int>(seen.size());
}

CanonicalPartition canonicalize(const Word& representation) {
    if (representation.empty()) throw std::invalid_argument("canonicalize: empty representation");
    Word out;
    out.reserve(representation.size());
    std::vector<int> first_seen;  // first_seen[r-1] = symbol with rank r
    for (int s : representation) {
        int rank = 0;
        for (size_t i = 0; i < first_seen.size(); ++i) {
            if (first_seen[i] == s) {
                rank = static_cast<int>(i) + 1;
                break;
            }
        }
        if (rank == 0) {
            first_seen.push_back(s);
            rank = static_cast<int>(first_seen.size());
        }
        out.push_back(rank);
    }
    return CanonicalPartition{std::move(out), static_cast<int>(first_seen.size())};
}

Perm relative_order(const Word& r, int k) {
    if (k < 1) throw std::invalid_argument("relative_order: k must be positive");
    std::vector<int> rank(static_cast<size_t>(k) + 1, 0);
    int next = 0;
    for (int s : r) {
        if (s < 1 || s > k) throw std::invalid_argument("relative_order: symbol outside {1..k}");
        if (rank[s] == 0) rank[s] = ++next;
    }
    if (next < k - 1) throw std::invalid_argument("relative_order: fewer than k-1 distinct symbols");
    if (next == k - 1) {
        for (int s = 1; s <= k; ++s)
            if (rank[s] == 0) rank[s] = k;  // missing symbol appended
    }
    std::vector<int> im(k);
    for (int s = 1; s <= k; ++s) im[s - 1] = rank[s];
    return Perm(std::move(im));
}

std::vector<Word> all_representations(const CanonicalPartition& p) {
    std::vector<int> sigma(p.k);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<Word> out;
    do {
        Word w;
        w.reserve(p.word.size());
        for (int s : p.word) w.push_back(sigma[s - 1]);
        out.push_back(std::move(w));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<int> block_sizes(const CanonicalPartition& p) {
    std::vector<int> sizes(p.k, 0);
    for (int s : p.word) ++sizes[s - 1];
    return sizes;
}

namespace {

void enumerate_rec(Word& w, int pos, int max_sym, int n, int k,
                   const std::function<void(const CanonicalPartition&)>& yield) {
    if (pos == n) {
        yield(CanonicalPartition{w, k});
        return;
    }
    const int hi = std::min(max_sym + 1, k);
    for (int s = 1; s <= hi; ++s) {
        const int new_max = std::max(max_sym, s);
        if (k - new_max > n - pos - 1) continue;  // cannot still reach k symbols
        w[pos] = s;
        enumerate_rec(w, pos + 1, new_max, n, k, yield);
    }
}

}  // namespace

void enumerate_partitions(int n, int k, const std::function<void(const CanonicalPartition&)>& yield) {
    if (k < 1 || k > n) throw std::invalid_argument("enumerate_partitions: need 1 <= k <= n");
    Word w(n);
    enumerate_rec(w, 0, 0, n, k, yield);
}

std::vector<CanonicalPartition> list_partitions(int n, int k) {
    std::vector<CanonicalPartition> out;
    enumerate_partitions(n, k, [&](const CanonicalPartition& p) { out.push_back(p); });
    return out;
}

BigInt stirling(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling: negative argument");
    if (k > n) return 0;
    if (n == 0) return 1;  // S(0,0)
    if (k == 0) return 0;
    std::vector<BigInt> row(static_cast<size_t>(k) + 1);
    row[0] = 1;  // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) row[j] = row[j - 1] + j * row[j];
        row[0] = 0;
    }
    return row[k];
}

int stirling_parity(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling_parity: negative argument");
    if (k > n) return 0;
    if (n == 0) return 1;
    if (k == 0) return 0;
    std::vector<uint8_t> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) row[j] = (row[j - 1] + (j & 1) * row[j]) & 1;
        row[0] = 0;
    }
    return row[k];
}

BigInt bell(int n) {
    BigInt total = 0;
    for (int k = 0; k <= n; ++k) total += stirling(n, k);
    return total;
}

char render_symbol(int s) {
    if (s >= 1 && s <= 9) return static_cast<char>('0' + s);
    if (s >= 10 && s <= 35) return static_cast<char>('a' + (s - 10));
    throw std::invalid_argument("render_symbol: symbol out of renderable range 1..35");
}

std::string render_word(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (int s : w) out += render_symbol(s);
    return out;
}

int parse_symbol(char c) {
    if (c >= '1' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    throw std::invalid_argument("parse_symbol: unparseable symbol character");
}

Word parse_opaque(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) w.push_back(static_cast<int>(static_cast<unsigned char>(c)));
    return w;
}

}  // namespace ucycle
