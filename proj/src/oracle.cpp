#include "lcsx/oracle.hpp"

#include <algorithm>
#include <bit>
#include <span>
#include <vector>

#include "lcsx/kernels.hpp"

namespace lcsx {

namespace {

constexpr std::uint64_t full_table_cell_limit = std::uint64_t{1} << 24;  // ~32 MiB of u16 cells

using sym_span = std::span<const symbol_id>;

// (i, j) element-index pairs of one LCS, via the full DP table.
std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_full_table(sym_span x, sym_span y) {
    const std::size_t m = x.size(), n = y.size();
    std::vector<std::uint16_t> dp((m + 1) * (n + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::uint16_t& { return dp[i * (n + 1) + j]; };
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            at(i, j) = x[i - 1] == y[j - 1] ? static_cast<std::uint16_t>(at(i - 1, j - 1) + 1)
                                            : std::max(at(i - 1, j), at(i, j - 1));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(at(m, n));
    std::size_t k = pairs.size();
    std::size_t i = m, j = n;
    while (i > 0 && j > 0) {
        if (x[i - 1] == y[j - 1]) {
            pairs[--k] = {static_cast<std::uint32_t>(i - 1), static_cast<std::uint32_t>(j - 1)};
            --i, --j;
        } else if (at(i - 1, j) >= at(i, j - 1)) {
            --i;
        } else {
            --j;
        }
    }
    return pairs;
}

// Last DP row of LCS(x, y[0..j]) for all j, forward or over reversed inputs.
void lcs_row(sym_span x, sym_span y, bool reversed, std::vector<std::uint32_t>& row,
             std::vector<std::uint32_t>& scratch) {
    const std::size_t n = y.size();
    row.assign(n + 1, 0);
    scratch.assign(n + 1, 0);
    for (std::size_t ii = 0; ii < x.size(); ++ii) {
        const symbol_id xi = reversed ? x[x.size() - 1 - ii] : x[ii];
        for (std::size_t j = 0; j < n; ++j) {
            const symbol_id yj = reversed ? y[n - 1 - j] : y[j];
            scratch[j + 1] = xi == yj ? row[j] + 1 : std::max(row[j + 1], scratch[j]);
        }
        std::swap(row, scratch);
    }
}

// Hirschberg divide and conquer; linear space, emits match pairs in order.
void pairs_linear_space(sym_span x, sym_span y, std::uint32_t x_base, std::uint32_t y_base,
                        std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) {
    const std::size_t m = x.size(), n = y.size();
    if (m == 0 || n == 0) return;
    if (m == 1) {
        for (std::size_t j = 0; j < n; ++j)
            if (y[j] == x[0]) {
                out.emplace_back(x_base, y_base + static_cast<std::uint32_t>(j));
                return;
            }
        return;
    }
    const std::size_t half = m / 2;
    std::vector<std::uint32_t> fwd, bwd, scratch;
    lcs_row(x.first(half), y, false, fwd, scratch);
    lcs_row(x.subspan(half), y, true, bwd, scratch);
    std::size_t split = 0;
    std::uint32_t best = 0;
    for (std::size_t j = 0; j <= n; ++j) {
        std::uint32_t total = fwd[j] + bwd[n - j];
        if (total > best) {
            best = total;
            split = j;
        }
    }
    fwd.clear();
    bwd.clear();
    scratch.clear();
    fwd.shrink_to_fit();
    bwd.shrink_to_fit();
    scratch.shrink_to_fit();
    pairs_linear_space(x.first(half), y.first(split), x_base, y_base, out);
    pairs_linear_space(x.subspan(half), y.subspan(split), x_base + static_cast<std::uint32_t>(half),
                       y_base + static_cast<std::uint32_t>(split), out);
}

}  // namespace

oracle_result lcs_exact(const sequence& x, const sequence& y, std::uint64_t cell_budget,
                        traceback_mode mode) {
    const std::uint64_t cells = static_cast<std::uint64_t>(x.size()) * y.size();
    if (cells > cell_budget)
        throw budget_exceeded_error("lcs_exact: " + std::to_string(cells) + " cells exceed budget " +
                                    std::to_string(cell_budget));
    if (mode == traceback_mode::automatic)
        mode = cells <= full_table_cell_limit ? traceback_mode::full_table : traceback_mode::linear_space;
    // The u16 table cannot represent lengths past 65534.
    if (mode == traceback_mode::full_table && std::min(x.size(), y.size()) > 65534)
        mode = traceback_mode::linear_space;

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    if (x.empty() || y.empty()) {
        // nothing to do
    } else if (mode == traceback_mode::full_table) {
        pairs = pairs_full_table(x.symbols, y.symbols);
    } else {
        pairs_linear_space(x.symbols, y.symbols, 0, 0, pairs);
    }

    oracle_result res;
    res.length = pairs.size();
    res.witness.symbols.reserve(pairs.size());
    res.witness.idx_x.reserve(pairs.size());
    res.witness.idx_y.reserve(pairs.size());
    for (auto [i, j] : pairs) {
        res.witness.symbols.push_back(x.symbols[i]);
        res.witness.idx_x.push_back(x.origins[i]);
        res.witness.idx_y.push_back(y.origins[j]);
    }
    return res;
}

std::size_t lcs_exact_length(const sequence& x, const sequence& y) {
    return kernels::lcs_length(x.symbols, y.symbols);
}

std::size_t lcs_bruteforce(const sequence& x, const sequence& y) {
    const sequence& shorter = x.size() <= y.size() ? x : y;
    const sequence& longer = x.size() <= y.size() ? y : x;
    if (shorter.size() > 20) throw too_large_error("lcs_bruteforce: shorter side exceeds 20 elements");
    std::size_t best = 0;
    const std::size_t k = shorter.size();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        const std::size_t bits = static_cast<std::size_t>(std::popcount(mask));
        if (bits <= best) continue;
        // Greedy embedding check into the longer sequence.
        std::size_t pos = 0;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            while (pos < longer.size() && longer.symbols[pos] != shorter.symbols[i]) ++pos;
            if (pos == longer.size())
                ok = false;
            else
                ++pos;
        }
        if (ok) best = bits;
    }
    return best;
}

bool validate_witness(const subsequence_witness& w, const sequence& x, const sequence& y) {
    if (w.symbols.size() != w.idx_x.size() || w.symbols.size() != w.idx_y.size()) return false;
    for (std::size_t k = 0; k < w.symbols.size(); ++k) {
        if (w.idx_x[k] >= x.size() || w.idx_y[k] >= y.size()) return false;
        if (k > 0 && (w.idx_x[k] <= w.idx_x[k - 1] || w.idx_y[k] <= w.idx_y[k - 1])) return false;
        if (x.symbols[w.idx_x[k]] != w.symbols[k]) return false;
        if (y.symbols[w.idx_y[k]] != w.symbols[k]) return false;
    }
    return true;
}

}  // namespace lcsx
