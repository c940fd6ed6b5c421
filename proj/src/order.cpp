#include "lcsx/order.hpp"

#include <algorithm>

namespace lcsx {

total_order order_from(const sequence& pi) {
    total_order ord;
    if (pi.empty()) return ord;
    symbol_id max_sym = *std::max_element(pi.symbols.begin(), pi.symbols.end());
    ord.rank_.assign(static_cast<std::size_t>(max_sym) + 1, total_order::npos);
    for (std::size_t i = 0; i < pi.size(); ++i) {
        symbol_id s = pi.symbols[i];
        if (ord.rank_[s] != total_order::npos)
            throw repeated_symbol_error("order_from: sequence repeats symbol " + std::to_string(s));
        ord.rank_[s] = static_cast<std::uint32_t>(i);
    }
    ord.count_ = pi.size();
    return ord;
}

// Two passes. The backward patience pass computes, for every position, the
// length of the longest strictly increasing run starting there; the forward
// greedy pass then picks the earliest position admissible at each step, which
// yields the lexicographically-smallest-by-position maximum witness.
std::vector<std::uint32_t> lis_positions(std::span<const std::uint32_t> ranks) {
    const std::size_t m = ranks.size();
    if (m == 0) return {};

    constexpr std::uint32_t max_u32 = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> len_start(m);
    std::vector<std::uint32_t> tops;  // pile tops over flipped ranks
    tops.reserve(64);
    std::uint32_t best = 0;
    for (std::size_t i = m; i-- > 0;) {
        // Scanning right-to-left, an increasing-to-the-right run is an
        // increasing run in flipped rank order.
        std::uint32_t key = max_u32 - ranks[i];
        auto it = std::lower_bound(tops.begin(), tops.end(), key);
        len_start[i] = static_cast<std::uint32_t>(it - tops.begin()) + 1;
        if (it == tops.end())
            tops.push_back(key);
        else
            *it = key;
        best = std::max(best, len_start[i]);
    }

    std::vector<std::uint32_t> out;
    out.reserve(best);
    std::uint32_t need = best;
    std::uint32_t last_rank = 0;
    for (std::size_t i = 0; i < m && need > 0; ++i) {
        if (len_start[i] >= need && (out.empty() || ranks[i] > last_rank)) {
            out.push_back(static_cast<std::uint32_t>(i));
            last_rank = ranks[i];
            --need;
        }
    }
    return out;
}

namespace {

monotone_witness monotone(const sequence& s, const total_order& ord, direction dir) {
    // Project onto the order's domain, remembering source positions.
    std::vector<std::uint32_t> ranks;
    std::vector<std::uint32_t> src;
    ranks.reserve(s.size());
    src.reserve(s.size());
    const std::uint32_t flip = ord.size() ? static_cast<std::uint32_t>(ord.size() - 1) : 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::uint32_t r = ord.rank(s.symbols[i]);
        if (r == total_order::npos) continue;
        ranks.push_back(dir == direction::increasing ? r : flip - r);
        src.push_back(static_cast<std::uint32_t>(i));
    }
    monotone_witness w;
    w.dir = dir;
    for (std::uint32_t p : lis_positions(ranks)) {
        std::uint32_t i = src[p];
        w.elements.push_back(s.symbols[i], s.origins[i]);
    }
    return w;
}

}  // namespace

monotone_witness lis(const sequence& s, const total_order& ord) {
    return monotone(s, ord, direction::increasing);
}

monotone_witness lds(const sequence& s, const total_order& ord) {
    return monotone(s, ord, direction::decreasing);
}

}  // namespace lcsx
