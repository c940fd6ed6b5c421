#include "lcsx/approx.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "lcsx/order.hpp"

namespace lcsx {

std::size_t approx_report::max_candidate_len() const {
    std::size_t best = 0;
    for (const pass_trace& p : passes) {
        best = std::max<std::size_t>(best, p.best_match_len);
        best = std::max<std::size_t>(best, p.lis_pi_len);
        for (const iteration_trace& it : p.iterations) best = std::max<std::size_t>(best, it.candidate_len);
    }
    return best;
}

std::size_t approx_report::total_iterations() const {
    std::size_t n = 0;
    for (const pass_trace& p : passes) n += p.iterations.size();
    return n;
}

std::size_t match_count(const sequence& x, const sequence& y, symbol_id sigma) {
    std::size_t cx = 0, cy = 0;
    for (symbol_id s : x.symbols) cx += (s == sigma);
    for (symbol_id s : y.symbols) cy += (s == sigma);
    return std::min(cx, cy);
}

subsequence_witness best_match(const sequence& x, const sequence& y) {
    frequency_table fx = frequencies(x);
    frequency_table fy = frequencies(y);
    std::uint32_t best = 0;
    symbol_id best_sym = 0;
    for (const auto& [sym, cx] : fx) {
        std::uint32_t m = std::min(cx, fy.count(sym));
        if (m > best || (m == best && m > 0 && sym < best_sym)) {
            best = m;
            best_sym = sym;
        }
    }
    subsequence_witness w;
    if (best == 0) return w;
    w.symbols.assign(best, best_sym);
    for (std::size_t i = 0; i < x.size() && w.idx_x.size() < best; ++i)
        if (x.symbols[i] == best_sym) w.idx_x.push_back(x.origins[i]);
    for (std::size_t i = 0; i < y.size() && w.idx_y.size() < best; ++i)
        if (y.symbols[i] == best_sym) w.idx_y.push_back(y.origins[i]);
    return w;
}

subsequence_witness lis_candidate(const sequence& y, const sequence& pi) {
    total_order ord = order_from(pi);
    monotone_witness inc = lis(y, ord);
    subsequence_witness w;
    w.symbols.reserve(inc.size());
    w.idx_x.reserve(inc.size());
    w.idx_y.reserve(inc.size());
    for (std::size_t k = 0; k < inc.size(); ++k) {
        symbol_id s = inc.elements.symbols[k];
        w.symbols.push_back(s);
        w.idx_y.push_back(inc.elements.origins[k]);
        // Increasing rank walks pi left to right, so these are increasing too.
        w.idx_x.push_back(pi.origins[ord.rank(s)]);
    }
    return w;
}

namespace {

void max_assign(subsequence_witness& into, subsequence_witness&& cand) {
    if (cand.size() > into.size()) into = std::move(cand);
}

// One full Approx-LCS run over x (already band-filtered when f > 1).
void run_pass(const sequence& x, const sequence& y, alds_variant variant, std::uint64_t f,
              approx_report& report) {
    pass_trace trace;
    trace.band_lo = f;
    trace.x_len = x.size();

    auto consider = [&](subsequence_witness&& cand) {
        trace.best_len = std::max<std::uint32_t>(trace.best_len, static_cast<std::uint32_t>(cand.size()));
        max_assign(report.output, std::move(cand));
    };

    // Part 1: best match.
    subsequence_witness bm = best_match(x, y);
    trace.best_match_len = static_cast<std::uint32_t>(bm.size());
    consider(std::move(bm));

    if (!x.empty()) {
        // Part 2: LIS with respect to pi = RF(x).
        sequence pi = repetition_free_first(x);
        subsequence_witness c = lis_candidate(y, pi);
        trace.lis_pi_len = static_cast<std::uint32_t>(c.size());
        consider(std::move(c));

        // Part 3: greedy LDS peeling of x.
        peel_state st(x, order_from(pi), variant);
        while (!st.live_empty()) {
            monotone_witness alds = st.current_alds();
            iteration_trace iter;
            iter.alds_len = static_cast<std::uint32_t>(alds.size());
            subsequence_witness c2 = lis_candidate(y, alds.elements);
            iter.candidate_len = static_cast<std::uint32_t>(c2.size());
            consider(std::move(c2));
            iter.deleted = static_cast<std::uint32_t>(
                st.remove_symbols(symbol_set::from_symbols(alds.elements.symbols)));
            trace.iterations.push_back(iter);
        }
    }
    report.passes.push_back(std::move(trace));
}

}  // namespace

approx_report approx_lcs_v1(const sequence& x, const sequence& y, alds_variant variant) {
    approx_report report;
    run_pass(x, y, variant, 1, report);
    return report;
}

approx_report better_approx_lcs(const sequence& x, const sequence& y, alds_variant variant) {
    approx_report report;
    const std::uint64_t n = x.size() + y.size();
    if (n <= 1 || x.empty() || y.empty()) return report;  // nothing to match

    frequency_table freq = frequencies(x);
    const unsigned log_n = std::bit_width(n) - 1;  // floor(log2 n)
    for (unsigned i = 0; i <= log_n; ++i) {
        const std::uint64_t f = std::uint64_t{1} << i;
        sequence filtered = project(x, sigma_band(freq, f, n));
        run_pass(filtered, y, variant, f, report);
    }
    return report;
}

double ratio_bound_4n45(std::size_t n) { return 4.0 * std::pow(static_cast<double>(n), 0.8); }

double ratio_bound_n34log(std::size_t n) {
    if (n == 0) return 0.0;
    return std::pow(static_cast<double>(n), 0.75) * std::log2(static_cast<double>(n));
}

}  // namespace lcsx
