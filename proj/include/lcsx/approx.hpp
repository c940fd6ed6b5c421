#ifndef LCSX_APPROX_HPP
#define LCSX_APPROX_HPP

#include <cstdint>
#include <vector>

#include "lcsx/peel.hpp"
#include "lcsx/seq.hpp"

namespace lcsx {

/// A claimed common subsequence of the ORIGINAL x and y, certified by
/// strictly increasing index lists into both.
struct subsequence_witness {
    std::vector<symbol_id> symbols;
    std::vector<pos_t> idx_x;
    std::vector<pos_t> idx_y;

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
};

/// One round of greedy LDS peeling.
struct iteration_trace {
    std::uint32_t alds_len = 0;       // |pi'| extracted this round
    std::uint32_t candidate_len = 0;  // |LIS_{pi'}(y)| harvested
    std::uint32_t deleted = 0;        // elements removed from live x
};

/// One full Approx-LCS run (over a band-filtered x when part of the sweep).
struct pass_trace {
    std::uint64_t band_lo = 1;  // f: symbols kept have frequency in [f..n]
    std::uint64_t x_len = 0;    // length of the (filtered) x this pass saw
    std::uint32_t best_match_len = 0;
    std::uint32_t lis_pi_len = 0;
    std::vector<iteration_trace> iterations;
    std::uint32_t best_len = 0;  // longest candidate seen in this pass
};

struct approx_report {
    subsequence_witness output;
    std::vector<pass_trace> passes;

    /// Longest candidate length recorded anywhere; equals output.size().
    std::size_t max_candidate_len() const;
    std::size_t total_iterations() const;
};

/// min{#sigma(x), #sigma(y)}.
std::size_t match_count(const sequence& x, const sequence& y, symbol_id sigma);

/// The longest single-symbol common subsequence: the symbol maximizing
/// match_count (smallest id on ties), repeated that many times, using the
/// first occurrences on each side. Empty if the alphabets are disjoint.
subsequence_witness best_match(const sequence& x, const sequence& y);

/// LIS of y with respect to the order induced by pi, emitted as a common
/// subsequence: idx_y from y, idx_x from pi's recorded origins in x. pi must
/// be repetition-free with origins pointing into the original x.
subsequence_witness lis_candidate(const sequence& y, const sequence& pi);

/// Warm-up algorithm: best match, LIS w.r.t. RF(x), then greedy LDS peeling.
/// Output is the longest candidate. Guarantees output >= |LCS| / (4 n^{4/5})
/// with n = |x| + |y|, and a nonempty output whenever LCS >= 1.
approx_report approx_lcs_v1(const sequence& x, const sequence& y,
                            alds_variant variant = alds_variant::exact_recompute);

/// Frequency-band sweep: for every f = 2^i, i in [0..floor(log2 n)], runs the
/// warm-up algorithm on x restricted to symbols occurring >= f times, and
/// keeps the longest output. The f = 1 pass is the warm-up algorithm on the
/// full x, so every warm-up guarantee carries over.
approx_report better_approx_lcs(const sequence& x, const sequence& y,
                                alds_variant variant = alds_variant::exact_recompute);

/// 4 * n^{4/5}: the assertable approximation-ratio bound.
double ratio_bound_4n45(std::size_t n);

/// n^{3/4} * log2(n): the asymptotic envelope, reported but never asserted.
double ratio_bound_n34log(std::size_t n);

}  // namespace lcsx

#endif
