#include "lcsx/seq.hpp"

namespace lcsx {

sequence fresh_sequence(std::vector<symbol_id> symbols) {
    std::vector<pos_t> origins(symbols.size());
    for (std::size_t i = 0; i < origins.size(); ++i) origins[i] = static_cast<pos_t>(i);
    return sequence{std::move(symbols), std::move(origins)};
}

frequency_table::frequency_table(const sequence& s) {
    counts_.reserve(s.size());
    for (symbol_id sym : s.symbols) ++counts_[sym];
    total_ = s.size();
}

frequency_table frequencies(const sequence& s) { return frequency_table(s); }

sequence project(const sequence& s, const symbol_set& keep) {
    sequence out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (keep.contains(s.symbols[i])) out.push_back(s.symbols[i], s.origins[i]);
    return out;
}

sequence exclude(const sequence& s, const symbol_set& drop) {
    sequence out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!drop.contains(s.symbols[i])) out.push_back(s.symbols[i], s.origins[i]);
    return out;
}

sequence repetition_free_first(const sequence& s) {
    sequence out;
    symbol_set seen;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!seen.contains(s.symbols[i])) {
            seen.insert(s.symbols[i]);
            out.push_back(s.symbols[i], s.origins[i]);
        }
    }
    return out;
}

symbol_set sigma_band(const frequency_table& f, std::uint64_t lo, std::uint64_t hi) {
    if (lo == 0) throw std::invalid_argument("sigma_band: lo must be positive");
    if (lo > hi) throw std::invalid_argument("sigma_band: lo > hi");
    symbol_set out;
    for (const auto& [sym, count] : f)
        if (lo <= count && count <= hi) out.insert(sym);
    return out;
}

}  // namespace lcsx
