#include "helpers.hpp"

#include "unlabelled/necklace_rank.hpp"
#include "unlabelled/oracle.hpp"

#include <doctest.h>

using namespace unlabelled;

namespace {
Word W(const char* s) { return Word::parse(s); }
}  // namespace

TEST_CASE("rank_necklaces examples") {
    CHECK(rank_necklaces(W("0011"), 4) == 2);
    CHECK(rank_necklaces(W("0011"), 1) == 1);
    CHECK(rank_necklaces(W("0000"), 4) == 0);
    CHECK_THROWS_AS(rank_necklaces(W("0011"), 5), std::invalid_argument);
    CHECK_THROWS_AS(rank_necklaces(W("0011"), 0), std::invalid_argument);
}

TEST_CASE("necklace and Lyndon counts") {
    CHECK(count_necklaces(4) == 6);
    CHECK(count_necklaces(1) == 2);
    CHECK(count_lyndon(4) == 3);
    for (std::size_t n = 1; n <= 14; ++n) {
        long long necklaces = 0;
        long long lyndon = 0;
        for (const Word& w : test::all_words(n)) {
            necklaces += is_necklace(w);
            lyndon += is_lyndon(w);
        }
        REQUIRE(count_necklaces(n) == necklaces);
        REQUIRE(count_lyndon(n) == lyndon);
    }
}

TEST_CASE("rank_necklaces matches the oracle for every word, not only necklaces") {
    oracle::RankOracle ora;
    for (std::size_t n = 1; n <= 9; ++n) {
        for (const Word& w : test::all_words(n)) {
            for (std::size_t m = 1; m <= n; ++m) {
                CAPTURE(w.str());
                CAPTURE(m);
                REQUIRE(rank_necklaces(w, m) == ora.rank(w, m, oracle::RankSet::Necklace));
            }
        }
    }
}

TEST_CASE("rank_necklaces boundaries and monotonicity") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const Word ones = Word::repeat(1, n);
        REQUIRE(rank_necklaces(ones, n) == count_necklaces(n) - 1);
        Count previous = -1;
        for (const Word& w : test::all_words(n)) {
            const Count r = rank_necklaces(w, n);
            REQUIRE(r >= previous);
            previous = r;
        }
    }
}
