#ifndef LCSX_ORDER_HPP
#define LCSX_ORDER_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "lcsx/seq.hpp"

namespace lcsx {

struct repeated_symbol_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Total order over symbols induced by a repetition-free sequence pi:
/// rank(pi[i]) = i, so sigma < sigma' iff sigma occurs earlier in pi.
class total_order {
  public:
    static constexpr std::uint32_t npos = std::numeric_limits<std::uint32_t>::max();

    total_order() = default;

    std::uint32_t rank(symbol_id s) const {
        return s < rank_.size() ? rank_[s] : npos;
    }
    bool covers(symbol_id s) const { return rank(s) != npos; }
    /// Number of ranked symbols.
    std::size_t size() const { return count_; }

  private:
    friend total_order order_from(const sequence& pi);
    std::vector<std::uint32_t> rank_;
    std::size_t count_ = 0;
};

/// Builds the positional order of a repetition-free sequence.
/// Throws repeated_symbol_error if pi repeats a symbol.
total_order order_from(const sequence& pi);

enum class direction { increasing, decreasing };

/// A strictly monotone (by rank) subsequence of some queried sequence.
/// elements keeps the origin provenance of the query, so the witness is a
/// certified subsequence of the original input.
struct monotone_witness {
    sequence elements;
    direction dir = direction::increasing;

    std::size_t size() const { return elements.size(); }
    bool empty() const { return elements.empty(); }
};

/// Exact longest strictly increasing (by ord rank) subsequence of s.
/// Symbols not ranked by ord are dropped first, per the generalized
/// definition LIS(s) = LIS(project(s, domain)). Among maximum-length
/// witnesses, returns the one with lexicographically smallest origin list.
/// Patience sorting, O(m log m).
monotone_witness lis(const sequence& s, const total_order& ord);

/// Exact longest strictly decreasing witness; lis under the reversed ranks.
monotone_witness lds(const sequence& s, const total_order& ord);

/// Positions (into ranks) of a maximum-length strictly increasing run,
/// lexicographically smallest by position. Shared by lis/lds and the
/// peeling engine.
std::vector<std::uint32_t> lis_positions(std::span<const std::uint32_t> ranks);

}  // namespace lcsx

#endif
