#ifndef LCSX_KERNELS_HPP
#define LCSX_KERNELS_HPP

#include <cstddef>
#include <span>

#include "lcsx/seq.hpp"

namespace lcsx::kernels {

/// LCS-length kernels. scalar is the reference row-sweep; avx2 evaluates the
/// DP table along anti-diagonals, eight 32-bit cells per step. Both compute
/// identical lengths; the fastest available variant is picked at runtime.
enum class kind { scalar, avx2 };

const char* name(kind k);
bool available(kind k);

/// Kernel the dispatcher currently uses.
kind active();

/// Overrides the dispatcher (tests, benchmarks). Throws std::invalid_argument
/// if the kernel is not available on this machine.
void force(kind k);

/// |LCS(x, y)| via the active kernel. Linear space.
std::size_t lcs_length(std::span<const symbol_id> x, std::span<const symbol_id> y);

/// Runs one specific kernel; throws std::invalid_argument if unavailable.
std::size_t lcs_length_with(kind k, std::span<const symbol_id> x, std::span<const symbol_id> y);

}  // namespace lcsx::kernels

#endif
