#include <immintrin.h>

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "lcsx/seq.hpp"

namespace lcsx::kernels::detail {

// Anti-diagonal wavefront: cells on one diagonal d = i + j depend only on the
// two previous diagonals, so they are evaluated eight at a time. Buffers are
// indexed by i and hold D(i, d - i); slots outside a diagonal's write range are
// boundary cells and stay at their zero initialization (a slot is first
// written at diagonal i + 1, and reads beyond the written range only ever hit
// never-written slots).
std::size_t lcs_length_avx2(std::span<const symbol_id> x, std::span<const symbol_id> y) {
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    if (m == 0 || n == 0) return 0;

    std::vector<std::uint32_t> buf_a(m + 1, 0), buf_b(m + 1, 0), buf_c(m + 1, 0);
    std::uint32_t* d2 = buf_a.data();  // diagonal d - 2
    std::uint32_t* d1 = buf_b.data();  // diagonal d - 1
    std::uint32_t* d0 = buf_c.data();  // diagonal d

    std::vector<symbol_id> yr(n);
    for (std::size_t t = 0; t < n; ++t) yr[t] = y[n - 1 - t];

    std::size_t result = 0;
    for (std::size_t d = 2; d <= m + n; ++d) {
        const std::size_t ilo = d > n ? d - n : 1;
        const std::size_t ihi = std::min(m, d - 1);
        // Match for cell (i, j=d-i) is x[i-1] vs y[j-1] = yr[n-d+i]; both
        // streams advance with i, so loads stay contiguous.
        const std::ptrdiff_t yoff = static_cast<std::ptrdiff_t>(n) - static_cast<std::ptrdiff_t>(d);

        std::size_t i = ilo;
        for (; i + 7 <= ihi; i += 8) {
            __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&x[i - 1]));
            __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&yr[yoff + static_cast<std::ptrdiff_t>(i)]));
            __m256i eq = _mm256_cmpeq_epi32(xv, yv);
            __m256i diag = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&d2[i - 1]));
            __m256i cand = _mm256_sub_epi32(diag, eq);  // +1 where equal
            __m256i up = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&d1[i - 1]));
            __m256i left = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(&d1[i]));
            __m256i mx = _mm256_max_epu32(_mm256_max_epu32(up, left), cand);
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(&d0[i]), mx);
        }
        for (; i <= ihi; ++i) {
            std::uint32_t eq = x[i - 1] == yr[yoff + static_cast<std::ptrdiff_t>(i)] ? 1u : 0u;
            d0[i] = std::max(std::max(d1[i - 1], d1[i]), d2[i - 1] + eq);
        }

        if (d == m + n) result = d0[m];
        std::uint32_t* tmp = d2;
        d2 = d1;
        d1 = d0;
        d0 = tmp;
    }
    return result;
}

}  // namespace lcsx::kernels::detail
