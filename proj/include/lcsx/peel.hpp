#ifndef LCSX_PEEL_HPP
#define LCSX_PEEL_HPP

#include <cstdint>
#include <stdexcept>

#include "lcsx/occ_index.hpp"
#include "lcsx/order.hpp"
#include "lcsx/seq.hpp"

namespace lcsx {

struct uncovered_symbol_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct empty_live_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// How current_alds refreshes its decreasing subsequence.
///
/// exact_recompute runs an exact LDS over the live sequence on every call (a
/// 1-approximation, trivially within the required factor 2). triggered_recompute
/// keeps the last witness, prunes deleted symbols out of it, and recomputes
/// only once the pruned length drops below half of its length at computation
/// time; until then the pruned witness is still at least half of the current
/// exact LDS, because deletions never lengthen an LDS.
enum class alds_variant { exact_recompute, triggered_recompute };

/// Greedy LDS peeling state over one sequence x and one fixed symbol order.
/// current_alds returns a strictly decreasing subsequence of the live x of
/// length >= ceil(LDS/2) >= 1; remove_symbols deletes whole symbol classes.
class peel_state {
  public:
    /// Throws uncovered_symbol_error if some symbol of x has no rank in ord.
    peel_state(const sequence& x, total_order ord, alds_variant variant);

    std::size_t live_size() const { return live_.size(); }
    bool live_empty() const { return live_.empty(); }

    /// The alive subsequence (original origins).
    sequence live_sequence() const { return live_.materialize(); }

    /// A strictly decreasing (by rank) subsequence of the live sequence with
    /// length >= ceil(|exact LDS of live| / 2). Repetition-free by strictness.
    /// Throws empty_live_error if the live sequence is empty.
    monotone_witness current_alds();

    /// Removes every occurrence of every symbol in drop from the live
    /// sequence. Returns the number of elements deleted. Removed symbols
    /// never reappear.
    std::size_t remove_symbols(const symbol_set& drop);

    /// Number of exact-LDS recomputations performed so far (instrumentation).
    std::size_t recompute_count() const { return recomputes_; }

  private:
    occ_index live_;
    total_order ord_;
    alds_variant variant_;
    sequence cached_;  // pruned decreasing witness, valid iff cache_valid_
    bool cache_valid_ = false;
    std::size_t cached_len_at_recompute_ = 0;
    std::size_t recomputes_ = 0;
};

}  // namespace lcsx

#endif
