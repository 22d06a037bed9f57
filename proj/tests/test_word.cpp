#include "helpers.hpp"

#include "unlabelled/word.hpp"

#include <doctest.h>

using namespace unlabelled;

namespace {
Word W(const char* s) { return Word::parse(s); }
}  // namespace

TEST_CASE("parse rejects non-binary and empty input") {
    CHECK_THROWS_AS(Word::parse("01x1"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
    CHECK(W("0110").str() == "0110");
    CHECK(Word::from_bits(6, 4) == W("0110"));
    CHECK(W("0110").to_bits() == 6);
}

TEST_CASE("cross-length order") {
    CHECK(lex_less(W("01"), W("10")));
    CHECK(lex_less(W("0011"), W("01")));
    CHECK_FALSE(lex_less(W("01"), W("0011")));
    CHECK(lex_less(W("01"), W("0101")));
    CHECK_FALSE(lex_less(W("0101"), W("01")));
    CHECK_FALSE(lex_less(W("0101"), W("0101")));
}

TEST_CASE("cross-length order agrees with infinite powers and length tie-break") {
    for (std::size_t a = 1; a <= 6; ++a) {
        for (std::size_t b = 1; b <= 6; ++b) {
            for (const Word& u : test::all_words(a)) {
                for (const Word& v : test::all_words(b)) {
                    const auto c = compare_infinite(u, v);
                    const bool expected = c < 0 || (c == 0 && u.size() < v.size());
                    REQUIRE(lex_less(u, v) == expected);
                }
            }
        }
    }
}

TEST_CASE("rotate, complement, subword") {
    CHECK(rotate(W("0011"), 1) == W("0110"));
    CHECK(rotate(W("0011"), 0) == W("0011"));
    CHECK(rotate(W("0011"), 4) == W("0011"));
    CHECK(complement(W("0011")) == W("1100"));
    CHECK(complement(W("0")) == W("1"));
    CHECK(complement(complement(W("010011"))) == W("010011"));
    CHECK(subword(W("0011"), 4, 2) == W("10"));
    CHECK(subword(W("0011"), 1, 4) == W("0011"));
    CHECK(subword(W("0001"), 3, 3) == W("010"));
    CHECK_THROWS_AS(subword(W("0011"), 0, 2), std::out_of_range);
    CHECK_THROWS_AS(subword(W("0011"), 1, 5), std::out_of_range);
    CHECK(power(W("01"), 3) == W("010101"));
}

TEST_CASE("canonical forms") {
    CHECK(canonical(W("1010")) == W("0101"));
    CHECK(canonical(W("1000")) == W("0001"));
    CHECK(canonical(W("0000")) == W("0000"));
    CHECK(canonical_unlabelled(W("1110")) == W("0001"));
    CHECK(canonical_unlabelled(W("0101")) == W("0101"));
    CHECK(canonical_unlabelled(W("0011")) == W("0011"));
}

TEST_CASE("least rotation matches brute force for every word up to length 12") {
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const Word& w : test::all_words(n)) {
            const Word best = test::brute_canonical(w);
            REQUIRE(canonical(w) == best);
            const std::size_t k = least_rotation_index(w);
            REQUIRE(rotate(w, k) == best);
            for (std::size_t j = 0; j < k; ++j) REQUIRE(rotate(w, j) != best);
        }
    }
}

TEST_CASE("period, necklace and Lyndon predicates") {
    CHECK(period(W("0101")) == 2);
    CHECK(period(W("0011")) == 4);
    CHECK(period(W("0000")) == 1);
    CHECK(is_necklace(W("0101")));
    CHECK_FALSE(is_lyndon(W("0101")));
    CHECK(is_necklace(W("0011")));
    CHECK(is_lyndon(W("0011")));
    CHECK_FALSE(is_necklace(W("0110")));
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const Word& w : test::all_words(n)) {
            bool lyndon = true;
            for (std::size_t r = 1; r < n; ++r) lyndon = lyndon && w < rotate(w, r);
            REQUIRE(is_lyndon(w) == lyndon);
            REQUIRE(is_necklace(w) == (test::brute_canonical(w) == w));
        }
    }
}

TEST_CASE("antisymmetry rotation") {
    CHECK(min_antisymmetry_rotation(W("0101")) == std::optional<std::size_t>(1));
    CHECK(period(W("0101")) == 2);
    CHECK(min_antisymmetry_rotation(W("0011")) == std::optional<std::size_t>(2));
    CHECK_FALSE(min_antisymmetry_rotation(W("0001")).has_value());
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const Word& w : test::all_words(n)) {
            const auto r = min_antisymmetry_rotation(w);
            const bool symmetric = canonical(w) == canonical(complement(w));
            REQUIRE(r.has_value() == symmetric);
            if (r) REQUIRE(period(w) == 2 * *r);
        }
    }
}
