#include "lcsx/occ_index.hpp"

#include <bit>
#include <stdexcept>

namespace lcsx {

occ_index::occ_index(const sequence& s)
    : slot_symbol_(s.symbols), slot_origin_(s.origins), alive_(s.size(), 1), alive_count_(s.size()) {
    const std::size_t n = s.size();
    fenwick_.assign(n + 1, 0);
    // Linear-time Fenwick build over all-ones.
    for (std::size_t i = 1; i <= n; ++i) {
        fenwick_[i] += 1;
        std::size_t parent = i + (i & (0 - i));
        if (parent <= n) fenwick_[parent] += fenwick_[i];
    }
    symbol_id max_sym = 0;
    for (symbol_id sym : s.symbols) max_sym = std::max(max_sym, sym);
    if (n > 0) slots_of_.resize(static_cast<std::size_t>(max_sym) + 1);
    for (std::size_t i = 0; i < n; ++i) slots_of_[s.symbols[i]].push_back(static_cast<std::uint32_t>(i));
}

std::uint32_t occ_index::prefix_alive(std::uint32_t slot) const {
    std::uint32_t sum = 0;
    for (std::uint32_t i = slot + 1; i > 0; i -= i & (0 - i)) sum += fenwick_[i];
    return sum;
}

std::uint32_t occ_index::select(std::uint32_t k) const {
    // Smallest slot with prefix_alive == k, by binary lifting over the tree.
    std::uint32_t pos = 0;
    std::uint32_t remaining = k;
    std::uint32_t step = std::bit_floor(static_cast<std::uint32_t>(fenwick_.size() - 1));
    for (; step > 0; step >>= 1) {
        std::uint32_t next = pos + step;
        if (next < fenwick_.size() && fenwick_[next] < remaining) {
            pos = next;
            remaining -= fenwick_[next];
        }
    }
    return pos;  // 0-based slot (pos is the count of slots strictly before it)
}

std::vector<std::uint32_t> occ_index::occ(symbol_id sigma) {
    if (sigma >= slots_of_.size()) return {};
    auto& slots = slots_of_[sigma];
    std::vector<std::uint32_t> ranks;
    ranks.reserve(slots.size());
    std::size_t keep = 0;
    for (std::uint32_t slot : slots) {
        if (!alive_[slot]) continue;  // compacted away below
        slots[keep++] = slot;
        ranks.push_back(prefix_alive(slot) - 1);
    }
    slots.resize(keep);
    return ranks;
}

void occ_index::erase(std::uint32_t i) {
    if (i >= alive_count_) throw std::out_of_range("occ_index::erase: position " + std::to_string(i) +
                                                   " out of range (size " + std::to_string(alive_count_) + ")");
    std::uint32_t slot = select(i + 1);
    alive_[slot] = 0;
    for (std::uint32_t j = slot + 1; j < fenwick_.size(); j += j & (0 - j)) fenwick_[j] -= 1;
    --alive_count_;
}

sequence occ_index::materialize() const {
    sequence out;
    out.reserve(alive_count_);
    for (std::size_t i = 0; i < alive_.size(); ++i)
        if (alive_[i]) out.push_back(slot_symbol_[i], slot_origin_[i]);
    return out;
}

}  // namespace lcsx
