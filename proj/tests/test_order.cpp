#include <doctest.h>

#include <algorithm>
#include <vector>

#include "brute.hpp"
#include "lcsx/gen.hpp"
#include "lcsx/order.hpp"
#include "lcsx/seq.hpp"

using namespace lcsx;

namespace {

sequence seq(std::vector<symbol_id> symbols) { return fresh_sequence(std::move(symbols)); }

// Independent witness check: monotone by rank in the right direction and a
// genuine subsequence of s (matching symbol at each claimed origin).
bool witness_ok(const monotone_witness& w, const sequence& s, const total_order& ord) {
    std::size_t cursor = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        symbol_id sym = w.elements.symbols[k];
        if (!ord.covers(sym)) return false;
        if (k > 0) {
            std::uint32_t prev = ord.rank(w.elements.symbols[k - 1]), cur = ord.rank(sym);
            if (w.dir == direction::increasing ? prev >= cur : prev <= cur) return false;
        }
        // Find the claimed origin while walking s left to right.
        while (cursor < s.size() && s.origins[cursor] != w.elements.origins[k]) ++cursor;
        if (cursor == s.size() || s.symbols[cursor] != sym) return false;
        ++cursor;
    }
    return true;
}

total_order identity_order(symbol_id alphabet) {
    std::vector<symbol_id> pi(alphabet);
    for (symbol_id i = 0; i < alphabet; ++i) pi[i] = i;
    return order_from(fresh_sequence(pi));
}

}  // namespace

TEST_CASE("order_from assigns positional ranks") {
    // b a c
    total_order ord = order_from(seq({1, 0, 2}));
    CHECK(ord.rank(1) == 0);
    CHECK(ord.rank(0) == 1);
    CHECK(ord.rank(2) == 2);
    CHECK(ord.size() == 3);
    CHECK_FALSE(ord.covers(9));

    CHECK(order_from(seq({})).size() == 0);
    CHECK_THROWS_AS(order_from(seq({0, 0})), repeated_symbol_error);
}

TEST_CASE("lis and lds on a four-element example") {
    total_order ord = identity_order(3);  // a<b<c
    sequence s = seq({1, 0, 2, 1});       // b a c b

    monotone_witness inc = lis(s, ord);
    CHECK(inc.size() == 2);
    CHECK(witness_ok(inc, s, ord));
    // Lexicographically smallest maximum witness by origin: [b,c] at 0,2.
    CHECK(inc.elements.origins == std::vector<pos_t>{0, 2});
    CHECK(inc.elements.symbols == std::vector<symbol_id>{1, 2});

    monotone_witness dec = lds(s, ord);
    CHECK(dec.size() == 2);
    CHECK(witness_ok(dec, s, ord));
    CHECK(dec.elements.origins == std::vector<pos_t>{0, 1});
    CHECK(dec.elements.symbols == std::vector<symbol_id>{1, 0});
}

TEST_CASE("monotone inputs are their own witnesses") {
    total_order ord = identity_order(5);
    sequence up = seq({0, 1, 2, 3, 4});
    CHECK(lis(up, ord).elements == up);
    CHECK(lds(up, ord).size() == 1);
    CHECK(lds(up, ord).elements.origins == std::vector<pos_t>{0});  // earliest element

    sequence down = seq({4, 3, 2, 1, 0});
    CHECK(lds(down, ord).elements == down);
    CHECK(lis(down, ord).size() == 1);

    CHECK(lis(seq({}), ord).empty());
    CHECK(lds(seq({3}), ord).elements == seq({3}));
}

TEST_CASE("symbols without a rank are dropped first") {
    total_order ord = order_from(seq({0, 1}));
    sequence s = seq({7, 0, 7, 1, 7});
    monotone_witness inc = lis(s, ord);
    CHECK(inc.size() == 2);
    CHECK(inc.elements.symbols == std::vector<symbol_id>{0, 1});
    CHECK(inc.elements.origins == std::vector<pos_t>{1, 3});
}

TEST_CASE("lis length and lex-smallest witness match brute force, exhaustively") {
    total_order ord = identity_order(4);
    // Every sequence of length 0..6 over 4 symbols.
    for (std::size_t len = 0; len <= 6; ++len) {
        std::vector<symbol_id> syms(len, 0);
        while (true) {
            sequence s = seq(syms);
            std::vector<std::uint32_t> ranks(syms.begin(), syms.end());

            monotone_witness inc = lis(s, ord);
            REQUIRE(inc.size() == brute::lis_len(ranks));
            REQUIRE(witness_ok(inc, s, ord));
            std::vector<std::uint32_t> lex = brute::lis_lex_positions(ranks);
            REQUIRE(inc.elements.origins == std::vector<pos_t>(lex.begin(), lex.end()));

            monotone_witness dec = lds(s, ord);
            REQUIRE(dec.size() == brute::lds_len(ranks));
            REQUIRE(witness_ok(dec, s, ord));

            std::size_t i = len;
            while (i > 0 && syms[i - 1] == 3) syms[--i] = 0;
            if (i == 0) break;
            ++syms[i - 1];
        }
    }
}

TEST_CASE("lis matches brute force on random sequences up to length 10, alphabet 5") {
    total_order ord = identity_order(5);
    splitmix64 rng(21);
    for (int round = 0; round < 10000; ++round) {
        std::size_t len = rng.next_below(11);
        std::vector<symbol_id> syms;
        for (std::size_t i = 0; i < len; ++i)
            syms.push_back(static_cast<symbol_id>(rng.next_below(5)));
        sequence s = seq(syms);
        std::vector<std::uint32_t> ranks(syms.begin(), syms.end());
        CHECK(lis(s, ord).size() == brute::lis_len(ranks));
        CHECK(lds(s, ord).size() == brute::lds_len(ranks));
        CHECK(lis(s, ord).elements.origins ==
              [&] {
                  auto lex = brute::lis_lex_positions(ranks);
                  return std::vector<pos_t>(lex.begin(), lex.end());
              }());
    }
}

TEST_CASE("duality: lds equals lis under the reversed order") {
    splitmix64 rng(22);
    for (int round = 0; round < 2000; ++round) {
        std::size_t len = rng.next_below(40);
        std::vector<symbol_id> syms;
        for (std::size_t i = 0; i < len; ++i)
            syms.push_back(static_cast<symbol_id>(rng.next_below(10)));
        sequence s = seq(syms);

        total_order ord = identity_order(10);
        std::vector<symbol_id> reversed_pi{9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
        total_order rev = order_from(fresh_sequence(reversed_pi));
        CHECK(lds(s, ord).size() == lis(s, rev).size());
    }
}

TEST_CASE("Erdos-Szekeres: lis * lds covers a repetition-free sequence") {
    splitmix64 rng(23);
    for (int round = 0; round < 500; ++round) {
        std::size_t len = 1 + rng.next_below(200);
        std::vector<symbol_id> perm(len);
        for (std::size_t i = 0; i < len; ++i) perm[i] = static_cast<symbol_id>(i);
        for (std::size_t i = len; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.next_below(i)]);

        sequence s = seq(perm);
        total_order ord = identity_order(static_cast<symbol_id>(len));
        CHECK(lis(s, ord).size() * lds(s, ord).size() >= len);
    }
}

TEST_CASE("lis_positions handles plateaus strictly") {
    std::vector<std::uint32_t> ranks{2, 2, 2};
    CHECK(lis_positions(ranks) == std::vector<std::uint32_t>{0});
    std::vector<std::uint32_t> empty;
    CHECK(lis_positions(empty).empty());
}
