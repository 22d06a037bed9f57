#include "helpers.hpp"

#include "unlabelled/bound_table.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace unlabelled;

namespace {
Word W(const char* s) { return Word::parse(s); }
}  // namespace

TEST_CASE("strict_bound examples") {
    auto b = strict_bound(W("11"), W("0001"));
    REQUIRE(b);
    CHECK(b->value == W("10"));
    CHECK(b->start == 4);
    CHECK_FALSE(strict_bound(W("00"), W("0001")));
    b = strict_bound(W("111"), W("0001"));
    REQUIRE(b);
    CHECK(b->value == W("100"));
    CHECK_THROWS_AS(strict_bound(W("00000"), W("0001")), std::invalid_argument);
}

TEST_CASE("WX examples and contract") {
    const WxTable t = build_wx(W("0001"));
    const SubwordRef ten = *strict_bound(W("11"), W("0001"));
    CHECK(wx_lookup(t, ten, 0).value == W("100"));
    CHECK(wx_lookup(t, ten, 1).value == W("100"));
    // 00 < 01 are adjacent length-2 words, so nothing is strictly bounded by 00.
    const SubwordRef zero_zero = t.ref(2, *t.find_exact(W("00")));
    CHECK_THROWS_AS(wx_lookup(t, zero_zero, 0), std::logic_error);
    CHECK(t.empty_ref().is_empty());
}

TEST_CASE("classify agrees with strict_bound") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const Word& w : test::all_words(n)) {
            const WxTable t(w);
            for (std::size_t l = 1; l <= n; ++l) {
                for (const Word& v : test::all_words(l)) {
                    const Tracker c = t.classify(v);
                    const auto b = strict_bound(v, w);
                    if (c.kind == Tracker::Kind::Bound) {
                        REQUIRE(b);
                        REQUIRE(b->rank == c.rank);
                        REQUIRE(t.ref(l, c.rank).value == b->value);
                        REQUIRE(t.ref(l, c.rank).start == b->start);
                    } else {
                        REQUIRE_FALSE(b);
                    }
                }
            }
        }
    }
}

TEST_CASE("WX entries are independent of the bounded representative") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const Word& w : test::all_words(n)) {
            const WxTable t(w);
            for (std::size_t l = 0; l < n; ++l) {
                for (const Word& u : test::all_words(l)) {
                    if (l == 0) continue;
                    const auto b = strict_bound(u, w);
                    if (!b) continue;
                    for (Symbol x = 0; x <= 1; ++x) {
                        Word ux = u;
                        ux.push_back(x);
                        const auto expected = strict_bound(ux, w);
                        REQUIRE(expected);
                        REQUIRE(wx_lookup(t, *b, x) == *expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("tracker steps follow the extended word") {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const Word& w : test::all_words(n)) {
            const WxTable t(w);
            for (std::size_t l = 0; l < n; ++l) {
                for (const Word& u : test::all_words(l)) {
                    const Tracker before = l == 0 ? Tracker::exact(0) : t.classify(u);
                    for (Symbol x = 0; x <= 1; ++x) {
                        Word ux = u;
                        ux.push_back(x);
                        REQUIRE(t.step(l, before, x) == t.classify(ux));
                    }
                }
            }
        }
    }
}

TEST_CASE("the prefix of a necklace is its least subword") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (const Word& w : test::all_words(n)) {
            if (!is_necklace(w)) continue;
            const WxTable t(w);
            for (std::size_t l = 1; l <= n; ++l) REQUIRE(t.ref(l, 0).value == subword(w, 1, l));
        }
    }
}

TEST_CASE("WX dump matches the frozen text for 0001") {
    std::ostringstream out;
    build_wx(W("0001")).dump(out);
    std::ifstream golden(std::string(UNLABELLED_TEST_DATA) + "/wx_0001.txt");
    REQUIRE(golden);
    std::stringstream expected;
    expected << golden.rdbuf();
    CHECK(out.str() == expected.str());
}
