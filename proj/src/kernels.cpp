#include "lcsx/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <vector>

namespace lcsx::kernels {

#if defined(LCSX_HAVE_AVX2)
namespace detail {
std::size_t lcs_length_avx2(std::span<const symbol_id> x, std::span<const symbol_id> y);
}
#endif

std::size_t lcs_length_scalar(std::span<const symbol_id> x, std::span<const symbol_id> y) {
    if (x.empty() || y.empty()) return 0;
    if (y.size() > x.size()) std::swap(x, y);  // sweep rows over the longer side
    const std::size_t n = y.size();
    std::vector<std::uint32_t> prev(n + 1, 0), cur(n + 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const symbol_id xi = x[i];
        for (std::size_t j = 0; j < n; ++j)
            cur[j + 1] = xi == y[j] ? prev[j] + 1 : std::max(prev[j + 1], cur[j]);
        std::swap(prev, cur);
    }
    return prev[n];
}

namespace {

bool cpu_has_avx2() {
#if defined(LCSX_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<kind> g_active{cpu_has_avx2() ? kind::avx2 : kind::scalar};

}  // namespace

const char* name(kind k) { return k == kind::scalar ? "scalar" : "avx2"; }

bool available(kind k) { return k == kind::scalar || cpu_has_avx2(); }

kind active() { return g_active.load(std::memory_order_relaxed); }

void force(kind k) {
    if (!available(k)) throw std::invalid_argument(std::string("kernel not available: ") + name(k));
    g_active.store(k, std::memory_order_relaxed);
}

std::size_t lcs_length_with(kind k, std::span<const symbol_id> x, std::span<const symbol_id> y) {
    if (!available(k)) throw std::invalid_argument(std::string("kernel not available: ") + name(k));
#if defined(LCSX_HAVE_AVX2)
    if (k == kind::avx2) return detail::lcs_length_avx2(x, y);
#endif
    return lcs_length_scalar(x, y);
}

std::size_t lcs_length(std::span<const symbol_id> x, std::span<const symbol_id> y) {
    return lcs_length_with(active(), x, y);
}

}  // namespace lcsx::kernels
