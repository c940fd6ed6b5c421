#ifndef LCSX_ORACLE_HPP
#define LCSX_ORACLE_HPP

#include <cstdint>
#include <stdexcept>

#include "lcsx/approx.hpp"
#include "lcsx/seq.hpp"

namespace lcsx {

struct budget_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct too_large_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct oracle_result {
    std::size_t length = 0;
    subsequence_witness witness;
};

inline constexpr std::uint64_t default_cell_budget = 100'000'000;

/// How lcs_exact recovers the witness.
enum class traceback_mode {
    automatic,    // full table when it fits comfortably, else linear space
    full_table,   // quadratic-memory table walk
    linear_space  // Hirschberg divide and conquer
};

/// Exact LCS length and one witness by quadratic dynamic programming.
/// Throws budget_exceeded_error when |x| * |y| exceeds cell_budget.
oracle_result lcs_exact(const sequence& x, const sequence& y,
                        std::uint64_t cell_budget = default_cell_budget,
                        traceback_mode mode = traceback_mode::automatic);

/// Length only, linear space, no budget; runs on the dispatched kernel.
std::size_t lcs_exact_length(const sequence& x, const sequence& y);

/// Exact length by enumerating every subsequence of the shorter sequence.
/// Throws too_large_error if min(|x|, |y|) > 20.
std::size_t lcs_bruteforce(const sequence& x, const sequence& y);

/// True iff both index lists are strictly increasing, in range, and the
/// claimed symbols match x and y at those positions. x and y must be the
/// ORIGINAL sequences (origins = identity).
bool validate_witness(const subsequence_witness& w, const sequence& x, const sequence& y);

}  // namespace lcsx

#endif
