// Command-line front end: rank, unrank, count, enumerate, verify, bench.
//
// Exit codes: 0 success, 2 invalid input or usage, 3 verification failure.

#include "unlabelled/bound_table.hpp"
#include "unlabelled/count.hpp"
#include "unlabelled/oracle.hpp"
#include "unlabelled/symmetric_rank.hpp"
#include "unlabelled/unlabelled_rank.hpp"
#include "unlabelled/verify.hpp"
#include "unlabelled/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace unlabelled;
using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kMismatch = 3;

const std::map<std::string, std::string> kSets = {{"unlabelled", "rank_total"},
                                                  {"necklace", "rank_necklace"},
                                                  {"symmetric", "rank_symmetric"},
                                                  {"enclosing", "rank_enclosing"},
                                                  {"asymmetric", "rank_asymmetric"}};

struct Config {
    std::string word;
    std::size_t length = 0;
    std::string set = "unlabelled";
    bool json = false;
    bool no_canonicalize = false;
    std::string rank_k;
    bool lyndon = false;
    std::size_t max_length = 10;
    std::vector<std::size_t> lengths;
    std::string inject_fault;
};

int cmd_rank(const Config& cfg) {
    const Word input = Word::parse(cfg.word);
    Word w = input;
    const Word canon = canonical_unlabelled(input);
    if (canon != input) {
        if (cfg.no_canonicalize) {
            std::cerr << "error: " << input.str() << " is not canonical (class representative " << canon.str()
                      << ")\n";
            return kInvalid;
        }
        w = canon;
        (cfg.json ? std::cerr : std::cout) << "canonicalized " << input.str() << " -> " << w.str() << "\n";
    }
    const std::size_t m = cfg.length == 0 ? w.size() : cfg.length;
    if (m > w.size()) {
        std::cerr << "error: --length must not exceed the word length\n";
        return kInvalid;
    }
    const RankBreakdown b = rank_unlabelled(w, m);
    const std::map<std::string, const Count*> values = {{"rank_total", &b.rank_total},
                                                        {"rank_necklace", &b.rank_necklace},
                                                        {"rank_symmetric", &b.rank_symmetric},
                                                        {"rank_enclosing", &b.rank_enclosing},
                                                        {"rank_asymmetric", &b.rank_asymmetric}};
    if (cfg.json) {
        json out = {{"word", w.str()}, {"length", m}, {"set", cfg.set}};
        for (const auto& [key, value] : values) out[key] = value->str();
        std::cout << out.dump() << "\n";
    } else if (cfg.set == "unlabelled") {
        std::cout << "word " << w.str() << "\nlength " << m << "\n";
        for (const char* key : {"rank_total", "rank_necklace", "rank_symmetric", "rank_enclosing", "rank_asymmetric"}) {
            std::cout << key << ' ' << values.at(key)->str() << "\n";
        }
    } else {
        std::cout << values.at(kSets.at(cfg.set))->str() << "\n";
    }
    return kOk;
}

int cmd_unrank(const Config& cfg) {
    Count k;
    try {
        k = Count(cfg.rank_k);
    } catch (const std::exception&) {
        std::cerr << "error: rank must be a nonnegative decimal integer\n";
        return kInvalid;
    }
    const Word w = unrank_unlabelled(k, cfg.length);
    if (cfg.json) {
        std::cout << json{{"rank", k.str()}, {"length", cfg.length}, {"word", w.str()}}.dump() << "\n";
    } else {
        std::cout << w.str() << "\n";
    }
    return kOk;
}

int cmd_count(const Config& cfg) {
    const Count c = cfg.lyndon ? count_unlabelled_lyndon(cfg.length) : count_unlabelled(cfg.length);
    if (cfg.json) {
        std::cout << json{{"length", cfg.length}, {"lyndon", cfg.lyndon}, {"count", c.str()}}.dump() << "\n";
    } else {
        std::cout << c.str() << "\n";
    }
    return kOk;
}

int cmd_enumerate(const Config& cfg) {
    const oracle::ClassTable table = oracle::enumerate_classes(cfg.length);
    for (const auto& c : table.classes) {
        if (cfg.json) {
            std::cout << json{{"word", c.representative.str()},
                              {"partner", c.partner.str()},
                              {"symmetric", c.symmetric},
                              {"period", c.period}}
                             .dump()
                      << "\n";
        } else {
            std::cout << c.representative.str() << "\n";
        }
    }
    return kOk;
}

int cmd_verify(const Config& cfg) {
    if (cfg.inject_fault == "mobius-sign") {
        fault::flip_mobius_sign(true);
    } else if (!cfg.inject_fault.empty()) {
        std::cerr << "error: unknown fault " << cfg.inject_fault << "\n";
        return kInvalid;
    }
    const VerifyReport report = verify_ranks(cfg.max_length, [](const LengthReport& l) {
        std::cout << "length " << l.n << ": " << l.classes << " classes checked, " << l.checks << " comparisons\n";
    });
    for (const Mismatch& mm : report.mismatches) {
        std::cout << "mismatch w=" << mm.w.str() << " m=" << mm.m << " component=" << mm.component
                  << " dp=" << mm.dp_value << " oracle=" << mm.oracle_value << "\n";
    }
    std::cout << (report.ok() ? "verify: ok" : "verify: FAILED") << " (" << report.mismatches.size()
              << " mismatches)\n";
    return report.ok() ? kOk : kMismatch;
}

// Deterministic benchmark word of length n: canonical class of a fixed
// pseudo-random bit pattern.
Word bench_word(std::size_t n) {
    std::vector<Symbol> bits(n);
    std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ n;
    for (auto& b : bits) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        b = static_cast<Symbol>(state & 1U);
    }
    return canonical_unlabelled(Word(std::move(bits)));
}

int cmd_bench(const Config& cfg) {
    for (std::size_t n : cfg.lengths) {
        if (n == 0 || n > 120) {
            std::cerr << "error: bench lengths must be in [1, 120]\n";
            return kInvalid;
        }
    }
    if (!cfg.json) std::cout << "length  seconds  beta_states  word\n";
    for (std::size_t n : cfg.lengths) {
        const Word w = bench_word(n);
        const auto t0 = std::chrono::steady_clock::now();
        const RankBreakdown b = rank_unlabelled(w);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        DpStats stats;
        if (n % 2 == 0) {
            const WxTable table(w);
            for (std::size_t j = 1; j <= n / 2; ++j) beta_size(table, n / 2, j, &stats);
        }
        if (cfg.json) {
            std::cout << json{{"length", n},
                              {"seconds", secs},
                              {"beta_states", stats.states},
                              {"word", w.str()},
                              {"rank_total", b.rank_total.str()}}
                             .dump()
                      << "\n";
        } else {
            std::printf("%6zu  %7.3f  %11zu  %s\n", n, secs, stats.states, w.str().c_str());
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank, unrank and count binary unlabelled necklaces"};
    app.require_subcommand(1);
    Config cfg;

    auto* rank = app.add_subcommand("rank", "Rank a word among unlabelled necklaces of its length");
    rank->add_option("word", cfg.word, "Binary word")->required();
    rank->add_option("--length,-m", cfg.length, "Rank among necklaces of this length (default |word|)");
    rank->add_option("--set", cfg.set, "Component to report")->check(CLI::IsMember({"unlabelled", "necklace", "symmetric", "enclosing", "asymmetric"}));
    rank->add_flag("--json", cfg.json, "Machine-readable output");
    rank->add_flag("--no-canonicalize", cfg.no_canonicalize, "Reject non-canonical input instead of mapping it");

    auto* unrank = app.add_subcommand("unrank", "Class representative of a given rank");
    unrank->add_option("rank", cfg.rank_k, "Rank k")->required();
    unrank->add_option("--length,-n", cfg.length, "Word length")->required();
    unrank->add_flag("--json", cfg.json, "Machine-readable output");

    auto* count = app.add_subcommand("count", "Number of unlabelled necklaces of a length");
    count->add_option("--length,-n", cfg.length, "Word length")->required();
    count->add_flag("--lyndon", cfg.lyndon, "Count aperiodic classes only");
    count->add_flag("--json", cfg.json, "Machine-readable output");

    auto* enumerate = app.add_subcommand("enumerate", "List class representatives in ascending order");
    enumerate->add_option("--length,-n", cfg.length, "Word length (at most 16)")->required();
    enumerate->add_flag("--json", cfg.json, "JSON lines with class metadata");

    auto* verify = app.add_subcommand("verify", "Compare every rank component with the exhaustive oracle");
    verify->add_option("--max-length", cfg.max_length, "Largest length checked (at most 16)");
    verify->add_option("--inject-fault", cfg.inject_fault)->group("");

    auto* bench = app.add_subcommand("bench", "Time full ranks and report beta DP sizes");
    bench->add_option("--lengths", cfg.lengths, "Comma-separated lengths")->delimiter(',')->required();
    bench->add_flag("--json", cfg.json, "JSON lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*rank) return cmd_rank(cfg);
        if (*unrank) return cmd_unrank(cfg);
        if (*count) return cmd_count(cfg);
        if (*enumerate) return cmd_enumerate(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*bench) return cmd_bench(cfg);
    } catch (const ConventionError& e) {
        std::cerr << "convention error: " << e.what() << "\n";
        return kMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
