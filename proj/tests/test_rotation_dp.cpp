#include "helpers.hpp"

#include "problems.hpp"
#include "unlabelled/rotation_dp.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace unlabelled;

namespace {

std::vector<std::pair<std::string, RotationProblem>> problems_for(const Word& w) {
    std::vector<std::pair<std::string, RotationProblem>> out;
    const std::size_t n = w.size();
    for (std::size_t r = 1; 2 * r <= n; ++r) {
        for (std::size_t j = 1; j <= r; ++j) {
            out.emplace_back("alpha", detail::alpha_problem(w, r, j));
            out.emplace_back("beta", detail::beta_problem(w, r, j));
        }
        out.emplace_back("antiperiodic_none_below", detail::antiperiodic_none_below_problem(w, r));
        out.emplace_back("y_sym", detail::y_sym_problem(w, r));
    }
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t r = 1; r <= m; ++r) {
            out.emplace_back("gamma", detail::gamma_problem(w, m, r));
            out.emplace_back("below", detail::below_problem(w, m, r));
        }
        out.emplace_back("none_below", detail::none_below_problem(w, m));
        out.emplace_back("enclosing_complement", detail::enclosing_complement_problem(w, m));
        out.emplace_back("y_enc", detail::y_enc_problem(w, m));
    }
    return out;
}

// Reference words: canonical representatives plus a few arbitrary words, since
// the engine itself does not assume a necklace.
std::vector<Word> reference_words(std::size_t max_n) {
    std::vector<Word> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (const Word& w : test::unlabelled_reps(n)) out.push_back(w);
    }
    for (const char* s : {"10", "110", "0110", "10010", "011010", "1011000"}) out.push_back(Word::parse(s));
    return out;
}

}  // namespace

TEST_CASE("suffix counts from every prefix state equal brute-force completions") {
    for (const Word& w : reference_words(7)) {
        const WxTable table(w);
        for (auto& [name, problem] : problems_for(w)) {
            CAPTURE(w.str());
            CAPTURE(name);
            const std::size_t len = problem.length;
            const auto member = problem.member;
            RotationDp dp(table, problem);
            std::vector<bool> accepted(std::size_t{1} << len);
            for (std::uint64_t b = 0; b < accepted.size(); ++b) accepted[b] = member(Word::from_bits(b, len));
            for (std::size_t i = 0; i <= len; ++i) {
                for (std::uint64_t prefix = 0; prefix < (std::uint64_t{1} << i); ++prefix) {
                    std::uint64_t brute = 0;
                    const std::size_t rest = len - i;
                    for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << rest); ++tail) {
                        brute += accepted[(prefix << rest) | tail];
                    }
                    const auto state = dp.state_of_prefix(Word::from_bits(prefix, i));
                    const std::uint64_t counted = state ? static_cast<std::uint64_t>(dp.count(*state)) : 0;
                    CAPTURE(Word::from_bits(prefix, i).str());
                    REQUIRE(counted == brute);
                }
            }
        }
    }
}

TEST_CASE("prefixes reaching one state share their completion sets") {
    for (const Word& w : reference_words(6)) {
        const WxTable table(w);
        for (auto& [name, problem] : problems_for(w)) {
            const std::size_t len = problem.length;
            const auto member = problem.member;
            RotationDp dp(table, problem);
            for (std::size_t i = 1; i < len; ++i) {
                std::map<std::uint64_t, std::set<std::uint64_t>> tails_by_state;
                for (std::uint64_t prefix = 0; prefix < (std::uint64_t{1} << i); ++prefix) {
                    const auto state = dp.state_of_prefix(Word::from_bits(prefix, i));
                    if (!state) continue;
                    std::set<std::uint64_t> tails;
                    const std::size_t rest = len - i;
                    for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << rest); ++tail) {
                        if (member(Word::from_bits((prefix << rest) | tail, len))) tails.insert(tail);
                    }
                    auto [it, fresh] = tails_by_state.emplace(state->pack(), tails);
                    CAPTURE(w.str());
                    CAPTURE(name);
                    REQUIRE(it->second == tails);
                }
            }
        }
    }
}

TEST_CASE("rejected prefixes have no accepted completion") {
    const Word w = Word::parse("0010111");
    const WxTable table(w);
    auto problem = detail::gamma_problem(w, 7, 3);
    const auto member = problem.member;
    RotationDp dp(table, problem);
    for (std::uint64_t prefix = 0; prefix < 8; ++prefix) {
        if (dp.state_of_prefix(Word::from_bits(prefix, 3))) continue;
        for (std::uint64_t tail = 0; tail < 16; ++tail) REQUIRE_FALSE(member(Word::from_bits((prefix << 4) | tail, 7)));
    }
}

TEST_CASE("engine rejects malformed problems") {
    const WxTable table(Word::parse("0011"));
    RotationProblem p;
    p.length = 5;
    p.front.constraints.assign(5, Constraint::None);
    p.back.constraints.assign(5, Constraint::None);
    CHECK_THROWS_AS(RotationDp(table, p), std::invalid_argument);
    p.length = 3;
    CHECK_THROWS_AS(RotationDp(table, p), std::invalid_argument);
}

TEST_CASE("DP counts convert exactly to Count") {
    const DpCount big = (static_cast<DpCount>(1) << 100) + 12345;
    CHECK(to_count(big) == pow2(100) + 12345);
}
