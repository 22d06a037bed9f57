#pragma once

// Ranking within symmetric unlabelled necklaces.
//
// For 1 <= j <= r, with u = x : S(x) ranging over antiperiodic words of
// length 2r and comparisons taken on infinite powers against W = w^inf:
//   alpha(w, r, j): j is the least t in [1, r] with rot(u, t) < W.
//   beta(w, r, j):  alpha, and rot(u, t) > W for every t in [r + 1, 2r].
// alpha and beta together count each word of RA(w, 2r, S, r) exactly once:
// words with a rotation below W among t in [1, r] land in alpha, and words
// whose only rotations below W lie in [r + 1, 2r] are mapped onto beta by S.

#include "unlabelled/bound_table.hpp"
#include "unlabelled/count.hpp"
#include "unlabelled/rotation_dp.hpp"
#include "unlabelled/word.hpp"

namespace unlabelled {

/// DP key over alpha(w, r, j): i symbols of x consumed, p the longest
/// constrained overlap of the front scan with a prefix of w, B the tracker of
/// S(x[0, i)) against the length-i subwords of w.
struct SymDpKeySA {
    std::size_t p = 0;
    Tracker B = Tracker::exact(0);
    std::size_t i = 0;
    std::size_t j = 1;
    std::size_t r = 1;
};

/// DP key over beta(w, r, j): overlaps of the front scan x and the back scan
/// S(x), and trackers of x[0, i) (B_f) and S(x[0, i)) (B_b).
struct SymDpKeySB {
    std::size_t p_f = 0;
    std::size_t p_b = 0;
    Tracker B_f = Tracker::exact(0);
    Tracker B_b = Tracker::exact(0);
    std::size_t i = 0;
    std::size_t j = 1;
    std::size_t r = 1;
};

/// Number of completions x[i, r) of a prefix in the state given by key.
Count sa(const Word& w, const SymDpKeySA& key);
Count sb(const Word& w, const SymDpKeySB& key);

/// Completions of length `remaining` after `consumed` symbols of x whose
/// complement-side rotations in (r + 1, 2r) all stay above W, where the back
/// overlap is p_b and x[0, consumed) is tracked by B_f.
Count y_sym(const Word& w, std::size_t remaining, std::size_t p_b, std::size_t consumed, Tracker B_f);

Count alpha_size(const Word& w, std::size_t r, std::size_t j);
Count beta_size(const Word& w, std::size_t r, std::size_t j, DpStats* stats = nullptr);
Count alpha_size(const WxTable& table, std::size_t r, std::size_t j, DpStats* stats = nullptr);
Count beta_size(const WxTable& table, std::size_t r, std::size_t j, DpStats* stats = nullptr);

/// |RA(w, m, S, r)|: words of length m with v_i = S(v_{i+r mod m}) whose
/// necklace is symmetric and precedes w. Zero unless 2r divides m.
Count ra_size(const Word& w, std::size_t m, std::size_t r);
Count ra_size(const WxTable& table, std::size_t m, std::size_t r);

/// Symmetric Lyndon classes of length L preceding w; zero for odd L.
Count rank_sym_lyndon(const Word& w, std::size_t L);

/// Symmetric unlabelled necklaces of length m preceding w; zero for odd m.
Count rank_sym_necklaces(const Word& w, std::size_t m);
Count rank_sym_necklaces(const WxTable& table, std::size_t m);

}  // namespace unlabelled
