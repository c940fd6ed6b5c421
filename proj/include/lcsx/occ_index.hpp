#ifndef LCSX_OCC_INDEX_HPP
#define LCSX_OCC_INDEX_HPP

#include <cstdint>
#include <vector>

#include "lcsx/seq.hpp"

namespace lcsx {

/// A dynamic sequence supporting per-symbol occurrence queries and positional
/// deletion. Alive elements are tracked by a Fenwick tree over the original
/// slots (rank = alive prefix count, select = rank inverse); each symbol keeps
/// a lazily compacted list of its slots. occ costs O(#sigma * log n) and
/// erase O(log n); only deletions are supported.
class occ_index {
  public:
    explicit occ_index(const sequence& s);

    /// Number of alive elements.
    std::size_t size() const { return alive_count_; }
    bool empty() const { return alive_count_ == 0; }

    /// Current positions (0-based ranks among alive elements) of sigma's
    /// occurrences, ascending. Compacts the symbol's slot list in passing.
    std::vector<std::uint32_t> occ(symbol_id sigma);

    /// Deletes the element at current position i.
    /// Throws std::out_of_range if i >= size().
    void erase(std::uint32_t i);

    /// The alive subsequence, original origins preserved.
    sequence materialize() const;

  private:
    std::uint32_t prefix_alive(std::uint32_t slot) const;  // alive in [0..slot]
    std::uint32_t select(std::uint32_t k) const;           // slot of k-th alive (1-based)

    std::vector<std::uint32_t> fenwick_;
    std::vector<symbol_id> slot_symbol_;
    std::vector<pos_t> slot_origin_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::vector<std::uint32_t>> slots_of_;  // per symbol, ascending
    std::size_t alive_count_ = 0;
};

}  // namespace lcsx

#endif
