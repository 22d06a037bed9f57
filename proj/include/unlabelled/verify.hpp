#pragma once

// Exhaustive comparison of the DP ranks against the oracle.

#include "unlabelled/word.hpp"

#include <functional>
#include <string>
#include <vector>

namespace unlabelled {

struct Mismatch {
    Word w;
    std::size_t m = 0;
    std::string component;
    std::string dp_value;
    std::string oracle_value;
};

struct LengthReport {
    std::size_t n = 0;
    std::size_t classes = 0;
    std::size_t checks = 0;
};

struct VerifyReport {
    std::vector<LengthReport> lengths;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// For every canonical representative w of length n <= max_length and every
/// m <= n, compares each rank component with the oracle. Exceptions raised
/// by the DP path are recorded as mismatches with component "error".
/// `progress` (optional) is called after each length.
VerifyReport verify_ranks(std::size_t max_length, const std::function<void(const LengthReport&)>& progress = {});

}  // namespace unlabelled
