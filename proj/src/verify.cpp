#include "unlabelled/verify.hpp"

#include "unlabelled/oracle.hpp"
#include "unlabelled/unlabelled_rank.hpp"

#include <stdexcept>

namespace unlabelled {

VerifyReport verify_ranks(std::size_t max_length, const std::function<void(const LengthReport&)>& progress) {
    if (max_length == 0 || max_length > oracle::kDefaultBound) {
        throw std::invalid_argument("verify_ranks: max length must be in [1, 16]");
    }
    using oracle::RankSet;
    oracle::RankOracle ora(oracle::kDefaultBound);
    VerifyReport report;
    for (std::size_t n = 1; n <= max_length; ++n) {
        LengthReport length{n, 0, 0};
        for (const auto& c : ora.classes(n).classes) {
            const Word& w = c.representative;
            ++length.classes;
            for (std::size_t m = 1; m <= n; ++m) {
                const std::pair<const char*, RankSet> parts[] = {{"necklace", RankSet::Necklace},
                                                                 {"symmetric", RankSet::Symmetric},
                                                                 {"enclosing", RankSet::Enclosing},
                                                                 {"asymmetric", RankSet::Asymmetric},
                                                                 {"total", RankSet::Unlabelled}};
                try {
                    const RankBreakdown b = rank_unlabelled(w, m);
                    const Count* dp[] = {&b.rank_necklace, &b.rank_symmetric, &b.rank_enclosing, &b.rank_asymmetric,
                                         &b.rank_total};
                    for (std::size_t k = 0; k < 5; ++k) {
                        ++length.checks;
                        const Count expected = ora.rank(w, m, parts[k].second);
                        if (*dp[k] != expected) {
                            report.mismatches.push_back({w, m, parts[k].first, dp[k]->str(), expected.str()});
                        }
                    }
                } catch (const std::exception& e) {
                    length.checks += 5;
                    report.mismatches.push_back({w, m, "error", e.what(), "-"});
                }
            }
        }
        report.lengths.push_back(length);
        if (progress) progress(length);
    }
    return report;
}

}  // namespace unlabelled
