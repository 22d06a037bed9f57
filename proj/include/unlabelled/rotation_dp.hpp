#pragma once

// Counting engine for "rotation-constrained" binary words.
//
// A scan word y of length L is read left to right together with its
// complement S(y). Every start position on either side may carry a
// constraint on the infinite word that begins there:
//
//   front side, start s: the infinite word read from y_s onwards
//   back side,  start k: the infinite word read from S(y)_k onwards
//
// must compare Greater than, Less than, AtLeast (greater or equal), or (None)
// either way against W = w^inf. After the end of the scanned side, reading continues with a
// side-specific continuation (y again, or S(y)), which is how the cyclic
// wrap-around of the full word is expressed.
//
// State after i symbols, per side: the length p of the longest still-open
// constrained comparison (all other open constrained comparisons are borders
// of w[0, p)), plus a Tracker per scanned word giving its bounding subword of
// w. Suffix counts factor over states, so counting from the initial state
// counts the whole set, and counting from any state counts the completions of
// every prefix that reaches it.

#include "unlabelled/bound_table.hpp"
#include "unlabelled/count.hpp"
#include "unlabelled/word.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace unlabelled {

enum class Constraint : std::uint8_t { None, Greater, Less, AtLeast };

/// Which scanned word follows a side once its own scan word is exhausted.
enum class Continuation : std::uint8_t { Scan, Complement };

struct SideRules {
    std::vector<Constraint> constraints;  // index s-1 for start s in [1, L]
    Continuation continuation = Continuation::Scan;
};

struct RotationProblem {
    std::size_t length = 0;
    SideRules front;
    SideRules back;
    /// Membership of the single word y determined when a needed tracker is
    /// still Exact at the end of the scan.
    std::function<bool(const Word& y)> member;
};

struct DpState {
    std::size_t i = 0;
    std::size_t front_overlap = 0;
    std::size_t back_overlap = 0;
    Tracker scan;        // bound of y[0, i)
    Tracker complement;  // bound of S(y)[0, i)

    std::uint64_t pack() const;
    friend bool operator==(const DpState&, const DpState&) = default;
};

struct DpStats {
    std::size_t states = 0;
};

using DpCount = unsigned __int128;

class RotationDp {
public:
    RotationDp(const WxTable& table, RotationProblem problem);

    const RotationProblem& problem() const noexcept { return problem_; }
    DpState initial() const;
    std::optional<DpState> advance(const DpState& s, Symbol c) const;
    /// State reached by reading `prefix`, or empty if the prefix is rejected.
    std::optional<DpState> state_of_prefix(const Word& prefix) const;
    DpState canonicalize(DpState s) const;

    /// Number of completions y[i, L) accepted from state s.
    DpCount count(const DpState& s);
    DpCount count() { return count(initial()); }

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    struct Side {
        const SideRules* rules;
        std::size_t last_constrained = 0;  // largest constrained start, 0 if none
    };

    Constraint constraint(const Side& side, std::size_t start) const;
    bool alive(const Side& side, std::size_t i, std::size_t overlap) const;
    int step_side(int which, std::size_t i, std::size_t overlap, Symbol d) const;
    DpCount finish(const DpState& s) const;
    bool finish_side(const Side& side, std::size_t overlap, Tracker continuation) const;

    const WxTable& table_;
    RotationProblem problem_;
    std::vector<std::size_t> failure_;  // border lengths of prefixes of w
    Side sides_[2];
    mutable std::vector<int> step_cache_;
    std::unordered_map<std::uint64_t, DpCount> memo_;
};

Count to_count(DpCount v);

}  // namespace unlabelled
