#pragma once

// Ranking of enclosing unlabelled necklaces: classes {<u>, <S(u)>} with
// <u> < w < <S(u)>.
//
// gamma(w, m, r) holds the words v of length m with r the least t in [1, m]
// such that rot(v, t)^inf < w^inf (the identity is t = m), and every rotation
// of S(v) strictly above w^inf.

#include "unlabelled/bound_table.hpp"
#include "unlabelled/count.hpp"
#include "unlabelled/rotation_dp.hpp"
#include "unlabelled/word.hpp"

namespace unlabelled {

/// DP key over gamma(w, m, r): overlaps and trackers of v[0, i) (front) and
/// S(v[0, i)) (back).
struct EncDpKey {
    std::size_t i = 0;
    std::size_t r = 1;
    Tracker B_f = Tracker::exact(0);
    Tracker B_b = Tracker::exact(0);
    std::size_t p_f = 0;
    std::size_t p_b = 0;
};

/// Completions of length `remaining` after `consumed` symbols whose complement
/// side keeps every rotation above w^inf, given back overlap p_b and tracker
/// B_b of the consumed complement.
Count y_enc(const Word& w, std::size_t p_b, Tracker B_b, std::size_t consumed, std::size_t remaining);

Count c_size(const Word& w, const EncDpKey& key, std::size_t m);

Count gamma_size(const Word& w, std::size_t m, std::size_t r);
Count gamma_size(const WxTable& table, std::size_t m, std::size_t r, DpStats* stats = nullptr);

/// |EN(w, m)|: words of length m in an enclosing class of w.
Count en_size(const Word& w, std::size_t m);

/// Enclosing unlabelled necklaces of length m.
Count rank_enclosing(const Word& w, std::size_t m);
Count rank_enclosing(const WxTable& table, std::size_t m);

}  // namespace unlabelled
