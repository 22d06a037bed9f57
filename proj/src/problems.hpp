#pragma once

// Constraint layouts for the rotation DP, shared by the ranking modules.
// Notation: W = w^inf, rot(v, t) = v[t, |v|) : v[0, t), comparisons of
// rotations are on their infinite powers.

#include "unlabelled/rotation_dp.hpp"

#include <optional>

namespace unlabelled::detail {

inline bool inf_less(const Word& x, const Word& w) { return compare_infinite(x, w) < 0; }
inline bool inf_greater(const Word& x, const Word& w) { return compare_infinite(x, w) > 0; }

/// Smallest t in [1, |v|] with rot(v, t)^inf < W.
std::optional<std::size_t> first_rotation_below(const Word& v, const Word& w);

/// Every rotation of v has infinite power strictly above W.
bool all_rotations_above(const Word& v, const Word& w);

/// Words u = x : S(x), x in Sigma^r, whose first rotation below W is j.
RotationProblem alpha_problem(const Word& w, std::size_t r, std::size_t j);
/// alpha, restricted to words with rot(u, t)^inf > W for all t in [r+1, 2r].
RotationProblem beta_problem(const Word& w, std::size_t r, std::size_t j);
/// Words v in Sigma^m whose first rotation below W is r and whose
/// complement has every rotation above W.
RotationProblem gamma_problem(const Word& w, std::size_t m, std::size_t r);
/// Words v in Sigma^m whose first rotation below W is r.
RotationProblem below_problem(const Word& w, std::size_t m, std::size_t r);
/// Words v in Sigma^m with no rotation below W.
RotationProblem none_below_problem(const Word& w, std::size_t m);
/// Words v in Sigma^m with no rotation below W and every rotation of S(v)
/// above W.
RotationProblem enclosing_complement_problem(const Word& w, std::size_t m);
/// Words x in Sigma^r such that x : S(x) has no rotation below W.
RotationProblem antiperiodic_none_below_problem(const Word& w, std::size_t r);
/// Complement-side suffix conditions of beta with the front side released.
RotationProblem y_sym_problem(const Word& w, std::size_t r);
/// Complement-side suffix conditions of gamma with the front side released.
RotationProblem y_enc_problem(const Word& w, std::size_t m);

Count run(const WxTable& table, RotationProblem problem, DpStats* stats = nullptr);

/// Count of completions from an explicit state. Validates the state against
/// the problem and the table; throws std::invalid_argument when malformed.
Count run_from(const WxTable& table, RotationProblem problem, std::size_t i, std::size_t front_overlap,
               std::size_t back_overlap, Tracker scan, Tracker complement);

/// Primitive root z of w when z is a necklace (so that z^k is the necklace
/// tying with w under the cross-length order), else empty.
std::optional<Word> tie_root(const Word& w);

}  // namespace unlabelled::detail
