#include "helpers.hpp"

#include "unlabelled/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace unlabelled;
using namespace unlabelled::oracle;

namespace {
Word W(const char* s) { return Word::parse(s); }
}  // namespace

TEST_CASE("enumerate_classes examples") {
    const ClassTable four = enumerate_classes(4);
    REQUIRE(four.classes.size() == 4);
    std::size_t symmetric = 0;
    for (const auto& c : four.classes) symmetric += c.symmetric;
    CHECK(symmetric == 2);
    CHECK(four.classes[2].representative == W("0011"));
    CHECK(four.classes[3].representative == W("0101"));
    CHECK(four.classes[1].partner == W("0111"));

    const ClassTable five = enumerate_classes(5);
    CHECK(five.classes.size() == 4);
    for (const auto& c : five.classes) CHECK_FALSE(c.symmetric);

    CHECK(enumerate_classes(1).classes.size() == 1);
    CHECK_THROWS_AS(enumerate_classes(17), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_classes(0), std::invalid_argument);
}

TEST_CASE("every word maps to exactly one class") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const ClassTable t = enumerate_classes(n);
        std::size_t words = 0;
        for (const auto& c : t.classes) {
            std::set<Word> members;
            for (const Word& base : {c.representative, c.partner}) {
                for (std::size_t r = 0; r < n; ++r) {
                    members.insert(rotate(base, r));
                    members.insert(rotate(complement(base), r));
                }
            }
            words += members.size();
        }
        CHECK(words == (std::size_t{1} << n));
    }
}

TEST_CASE("oracle_rank examples") {
    CHECK(oracle_rank(W("0011"), 4, RankSet::Enclosing) == 2);
    CHECK(oracle_rank(W("0101"), 4, RankSet::Symmetric) == 1);
    CHECK(oracle_rank(W("0011"), 4, RankSet::Unlabelled) == 2);
    CHECK(oracle_rank(W("0011"), 4, RankSet::Necklace) == 2);
    CHECK_THROWS_AS(oracle_rank(W("0011"), 17, RankSet::Necklace), std::invalid_argument);
}

TEST_CASE("oracle_set examples") {
    CHECK(oracle_set(W("0111"), {SetKind::Alpha, 0, 1, 1}) == std::vector<Word>{W("10")});
    CHECK(oracle_set(W("0011"), {SetKind::Gamma, 4, 1, 0}) == std::vector<Word>{W("0000"), W("0001"), W("1000")});
    CHECK(oracle_set(W("0111"), {SetKind::RA, 2, 1, 0}) == std::vector<Word>{W("01"), W("10")});
    CHECK(oracle_set(W("0011"), {SetKind::EN, 4, 0, 0}).size() == 5);
    CHECK_THROWS_AS(oracle_set(W("0011"), {SetKind::EN, 21, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(oracle_set(W("0011"), {SetKind::Alpha, 0, 1, 2}), std::invalid_argument);
}
