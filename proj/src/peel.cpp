#include "lcsx/peel.hpp"

#include <algorithm>
#include <utility>

namespace lcsx {

peel_state::peel_state(const sequence& x, total_order ord, alds_variant variant)
    : live_(x), ord_(std::move(ord)), variant_(variant) {
    for (symbol_id s : x.symbols)
        if (!ord_.covers(s))
            throw uncovered_symbol_error("peel_state: symbol " + std::to_string(s) + " has no rank");
}

monotone_witness peel_state::current_alds() {
    if (live_.empty()) throw empty_live_error("current_alds: live sequence is empty");
    if (variant_ == alds_variant::exact_recompute) {
        ++recomputes_;
        return lds(live_.materialize(), ord_);
    }
    if (!cache_valid_) {
        monotone_witness w = lds(live_.materialize(), ord_);
        ++recomputes_;
        cached_ = std::move(w.elements);
        cached_len_at_recompute_ = cached_.size();
        cache_valid_ = true;
    }
    return monotone_witness{cached_, direction::decreasing};
}

std::size_t peel_state::remove_symbols(const symbol_set& drop) {
    std::size_t deleted = 0;
    for (symbol_id s : drop.members()) {
        std::vector<std::uint32_t> positions = live_.occ(s);
        // Delete back to front so earlier current positions stay valid.
        for (auto it = positions.rbegin(); it != positions.rend(); ++it) live_.erase(*it);
        deleted += positions.size();
    }
    if (variant_ == alds_variant::triggered_recompute && cache_valid_ && deleted > 0) {
        sequence pruned;
        pruned.reserve(cached_.size());
        for (std::size_t i = 0; i < cached_.size(); ++i)
            if (!drop.contains(cached_.symbols[i])) pruned.push_back(cached_.symbols[i], cached_.origins[i]);
        cached_ = std::move(pruned);
        if (2 * cached_.size() < cached_len_at_recompute_) cache_valid_ = false;
    }
    return deleted;
}

}  // namespace lcsx
