#include "ucycle/parity.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "ucycle/digraph.hpp"
#include "ucycle/errors.hpp"
#include "ucycle/partitions.hpp"

namespace ucycle {

namespace {

void check_domain(const char* who, int n, int k) {
    if (!(2 <= k && k < n)) throw std::invalid_argument(std::string(who) + ": need 2 <= k < n");
}

}  // namespace

int par_direct(int n, int k, Execution exec) {
    check_domain("par_direct", n, k);
    constexpr int64_t kMaxEdges = 2'000'000;
    if (stirling(n, k) > kMaxEdges)
        throw ResourceLimitError("par_direct: G(n,k) too large; use par_recursive or par_closed");
    const auto g = build_digraph(n, k);
    return static_cast<int>(count_odd_assoc(g, exec) & 1);
}

int par_recursive(int n, int k) {
    check_domain("par_recursive", n, k);
    // Fresh local table per call; rows 3..n, entries for 2 <= kk < nn.
    std::vector<std::vector<uint8_t>> par(static_cast<size_t>(n) + 1);
    for (int nn = 3; nn <= n; ++nn) {
        par[nn].assign(static_cast<size_t>(nn), 0);
        for (int kk = 2; kk < nn; ++kk) {
            if (kk == 2) {
                par[nn][kk] = 0;
            } else if (kk == nn - 1) {
                par[nn][kk] = (nn % 4 == 0) ? 1 : 0;
            } else {
                const int term = kk * par[nn - 1][kk] + par[nn - 1][kk - 1] + stirling_parity(nn - 2, kk - 2);
                par[nn][kk] = static_cast<uint8_t>(term & 1);
            }
        }
    }
    return par[n][k];
}

int par_closed(int n, int k) {
    check_domain("par_closed", n, k);
    if (n == 3) return par_recursive(n, k);  // closed form stated for n >= 4
    if (n % 2 == 1) return 0;
    return stirling_parity(n - 2, k - 2);
}

bool no_ucycle_by_parity(int n, int k) {
    check_domain("no_ucycle_by_parity", n, k);
    return par_closed(n, k) == 1;
}

int ParityTable::at(int n, int k) const {
    if (!(2 <= k && k < n && n <= max_n)) throw std::out_of_range("ParityTable::at");
    return bits[static_cast<size_t>(n) * static_cast<size_t>(max_n + 1) + static_cast<size_t>(k)];
}

ParityTable build_parity_table(int max_n, ParRoute route) {
    if (max_n < 3) throw std::invalid_argument("build_parity_table: max_n must be at least 3");
    ParityTable t;
    t.max_n = max_n;
    t.route = route;
    t.bits.assign(static_cast<size_t>(max_n + 1) * static_cast<size_t>(max_n + 1), 0);
    for (int n = 3; n <= max_n; ++n) {
        for (int k = 2; k < n; ++k) {
            int bit = 0;
            switch (route) {
                case ParRoute::direct: bit = par_direct(n, k); break;
                case ParRoute::recursive: bit = par_recursive(n, k); break;
                case ParRoute::closed: bit = par_closed(n, k); break;
            }
            t.bits[static_cast<size_t>(n) * static_cast<size_t>(max_n + 1) + static_cast<size_t>(k)] =
                static_cast<uint8_t>(bit);
        }
    }
    return t;
}

std::string render_parity_table(const ParityTable& t) {
    std::ostringstream os;
    os << "Par(n,k); 1* marks certified ucycle nonexistence\n";
    os << " n\\k";
    for (int k = 2; k < t.max_n; ++k) os << "\t" << k;
    os << "\n";
    for (int n = 3; n <= t.max_n; ++n) {
        os << " " << n;
        for (int k = 2; k < t.max_n; ++k) {
            os << "\t";
            if (k < n) os << t.at(n, k) << (t.at(n, k) == 1 ? "*" : "");
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace ucycle
