#pragma once

#include "unlabelled/count.hpp"
#include "unlabelled/word.hpp"

#include <set>
#include <vector>

namespace test {

using unlabelled::Word;

inline std::vector<Word> all_words(std::size_t n) {
    std::vector<Word> out;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.push_back(Word::from_bits(b, n));
    return out;
}

// Minimum over all rotations, by direct comparison.
inline Word brute_canonical(const Word& w) {
    Word best = w;
    for (std::size_t r = 1; r < w.size(); ++r) best = std::min(best, unlabelled::rotate(w, r));
    return best;
}

inline std::vector<Word> unlabelled_reps(std::size_t n) {
    std::set<Word> reps;
    for (const Word& v : all_words(n)) {
        reps.insert(std::min(brute_canonical(v), brute_canonical(unlabelled::complement(v))));
    }
    return {reps.begin(), reps.end()};
}

inline long long to_ll(const unlabelled::Count& c) { return c.convert_to<long long>(); }

}  // namespace test
