#ifndef LCSX_SEQ_HPP
#define LCSX_SEQ_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lcsx {

/// Dense interned symbol id, shared between both input sequences.
using symbol_id = std::uint32_t;

/// Index of an element in the original (pre-projection) input sequence.
using pos_t = std::uint32_t;

/// A symbol sequence that remembers, for every element, its position in the
/// original input it descends from. project/exclude preserve origins, so a
/// subsequence produced anywhere downstream can be certified as a subsequence
/// of the original input by its origin list alone.
///
/// Invariant: origins is strictly increasing and has the same length as
/// symbols.
struct sequence {
    std::vector<symbol_id> symbols;
    std::vector<pos_t> origins;

    sequence() = default;
    sequence(std::vector<symbol_id> syms, std::vector<pos_t> origs)
        : symbols(std::move(syms)), origins(std::move(origs)) {}

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }

    void push_back(symbol_id s, pos_t origin) {
        symbols.push_back(s);
        origins.push_back(origin);
    }
    void reserve(std::size_t n) {
        symbols.reserve(n);
        origins.reserve(n);
    }

    friend bool operator==(const sequence&, const sequence&) = default;
};

/// A fresh sequence straight from an input: origins[i] = i.
sequence fresh_sequence(std::vector<symbol_id> symbols);

/// Per-symbol occurrence counts of one sequence. Symbols that do not occur
/// are absent from the table.
class frequency_table {
  public:
    frequency_table() = default;
    explicit frequency_table(const sequence& s);

    std::uint32_t count(symbol_id s) const {
        auto it = counts_.find(s);
        return it == counts_.end() ? 0 : it->second;
    }
    std::size_t distinct() const { return counts_.size(); }
    std::uint64_t total() const { return total_; }

    auto begin() const { return counts_.begin(); }
    auto end() const { return counts_.end(); }

  private:
    std::unordered_map<symbol_id, std::uint32_t> counts_;
    std::uint64_t total_ = 0;
};

/// A set of symbol ids. Membership is O(1); members() preserves insertion
/// order and carries no semantic meaning.
class symbol_set {
  public:
    symbol_set() = default;

    void insert(symbol_id s) {
        if (s >= bits_.size()) bits_.resize(s + 1, false);
        if (!bits_[s]) {
            bits_[s] = true;
            members_.push_back(s);
        }
    }
    bool contains(symbol_id s) const { return s < bits_.size() && bits_[s]; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<symbol_id>& members() const { return members_; }

    static symbol_set of(std::initializer_list<symbol_id> ids) {
        symbol_set set;
        for (symbol_id s : ids) set.insert(s);
        return set;
    }
    static symbol_set from_symbols(std::span<const symbol_id> ids) {
        symbol_set set;
        for (symbol_id s : ids) set.insert(s);
        return set;
    }

  private:
    std::vector<bool> bits_;
    std::vector<symbol_id> members_;
};

template <typename Token>
struct intern_result {
    sequence x;
    sequence y;
    std::vector<Token> vocabulary;  // vocabulary[id] recovers the token
};

/// Interns two token streams into one shared dense symbol-id space,
/// first-seen order (x scanned before y). Empty inputs are fine.
template <typename Token>
intern_result<Token> intern(std::span<const Token> tokens_x, std::span<const Token> tokens_y) {
    intern_result<Token> out;
    std::unordered_map<Token, symbol_id> ids;
    ids.reserve(tokens_x.size() + tokens_y.size());
    auto id_of = [&](const Token& t) {
        auto [it, fresh] = ids.emplace(t, static_cast<symbol_id>(out.vocabulary.size()));
        if (fresh) out.vocabulary.push_back(t);
        return it->second;
    };
    out.x.reserve(tokens_x.size());
    for (std::size_t i = 0; i < tokens_x.size(); ++i)
        out.x.push_back(id_of(tokens_x[i]), static_cast<pos_t>(i));
    out.y.reserve(tokens_y.size());
    for (std::size_t i = 0; i < tokens_y.size(); ++i)
        out.y.push_back(id_of(tokens_y[i]), static_cast<pos_t>(i));
    return out;
}

frequency_table frequencies(const sequence& s);

/// Subsequence of s consisting only of elements whose symbol is in keep.
sequence project(const sequence& s, const symbol_set& keep);

/// Subsequence of s consisting only of elements whose symbol is not in drop.
sequence exclude(const sequence& s, const symbol_set& drop);

/// The repetition-free subsequence of s keeping the first occurrence of each
/// symbol. Contains every distinct symbol of s exactly once.
sequence repetition_free_first(const sequence& s);

/// Symbols whose occurrence count lies in [lo..hi]. Throws
/// std::invalid_argument if lo is zero or lo > hi.
symbol_set sigma_band(const frequency_table& f, std::uint64_t lo, std::uint64_t hi);

}  // namespace lcsx

#endif
