// Compares the DP against oracle values frozen in tests/data.

#include "helpers.hpp"

#include "unlabelled/enclosing_rank.hpp"
#include "unlabelled/symmetric_rank.hpp"
#include "unlabelled/unlabelled_rank.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>

using namespace unlabelled;
using json = nlohmann::json;

namespace {

json load(const std::string& name) {
    std::ifstream in(std::string(UNLABELLED_TEST_DATA) + "/" + name);
    REQUIRE(in);
    return json::parse(in);
}

}  // namespace

TEST_CASE("frozen rank components") {
    const json rows = load("oracle_ranks.json");
    REQUIRE(rows.size() > 500);
    for (const auto& row : rows) {
        const Word w = Word::parse(row["word"].get<std::string>());
        const std::size_t m = row["m"];
        const RankBreakdown b = rank_unlabelled(w, m);
        CAPTURE(w.str());
        CAPTURE(m);
        REQUIRE(b.rank_necklace.str() == row["necklace"]);
        REQUIRE(b.rank_symmetric.str() == row["symmetric"]);
        REQUIRE(b.rank_enclosing.str() == row["enclosing"]);
        REQUIRE(b.rank_asymmetric.str() == row["asymmetric"]);
        REQUIRE(b.rank_total.str() == row["total"]);
    }
}

TEST_CASE("frozen set sizes") {
    const json rows = load("oracle_sets.json");
    REQUIRE(rows.size() > 1000);
    for (const auto& row : rows) {
        const Word w = Word::parse(row["word"].get<std::string>());
        const std::string set = row["set"];
        const long long size = row["size"];
        CAPTURE(w.str());
        CAPTURE(row.dump());
        if (set == "alpha") {
            REQUIRE(test::to_ll(alpha_size(w, row["r"], row["j"])) == size);
        } else if (set == "beta") {
            REQUIRE(test::to_ll(beta_size(w, row["r"], row["j"])) == size);
        } else if (set == "gamma") {
            REQUIRE(test::to_ll(gamma_size(w, row["m"], row["r"])) == size);
        } else if (set == "RA") {
            REQUIRE(test::to_ll(ra_size(w, row["m"], row["r"])) == size);
        } else if (set == "EN") {
            REQUIRE(test::to_ll(en_size(w, row["m"])) == size);
        } else {
            FAIL("unknown set " << set);
        }
    }
}
