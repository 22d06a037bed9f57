#include "problems.hpp"

#include <stdexcept>

namespace unlabelled::detail {
namespace {

using C = Constraint;

std::vector<Constraint> none(std::size_t len) { return std::vector<Constraint>(len, C::None); }

Word antiperiodic_word(const Word& x) { return x + complement(x); }

// Front constraints "first rotation below W is r" for a scan word of length
// len whose start s corresponds to rotation s - 1, and start 1 to rotation len.
std::vector<Constraint> first_below_front(std::size_t len, std::size_t r) {
    auto cons = none(len);
    for (std::size_t s = 2; s <= r; ++s) cons[s - 1] = C::Greater;
    if (r < len) cons[r] = C::Less;
    return cons;
}

}  // namespace

std::optional<std::size_t> first_rotation_below(const Word& v, const Word& w) {
    for (std::size_t t = 1; t <= v.size(); ++t) {
        if (inf_less(rotate(v, t % v.size()), w)) return t;
    }
    return std::nullopt;
}

bool all_rotations_above(const Word& v, const Word& w) {
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (!inf_greater(rotate(v, t), w)) return false;
    }
    return true;
}

RotationProblem alpha_problem(const Word& w, std::size_t r, std::size_t j) {
    if (r == 0 || j == 0 || j > r) throw std::invalid_argument("alpha: need 1 <= j <= r");
    RotationProblem p;
    p.length = r;
    p.front.constraints = first_below_front(r, j);
    p.front.constraints[0] = C::None;
    p.front.continuation = Continuation::Complement;
    p.back.constraints = none(r);
    if (j == r) p.back.constraints[0] = C::Less;
    p.back.continuation = Continuation::Scan;
    p.member = [w, j](const Word& x) { return first_rotation_below(antiperiodic_word(x), w) == j; };
    return p;
}

RotationProblem beta_problem(const Word& w, std::size_t r, std::size_t j) {
    RotationProblem p = alpha_problem(w, r, j);
    p.front.constraints[0] = C::Greater;
    for (std::size_t k = 2; k <= r; ++k) p.back.constraints[k - 1] = C::Greater;
    p.member = [w, r, j](const Word& x) {
        const Word u = antiperiodic_word(x);
        if (first_rotation_below(u, w) != j) return false;
        for (std::size_t t = r + 1; t <= 2 * r; ++t) {
            if (!inf_greater(rotate(u, t % (2 * r)), w)) return false;
        }
        return true;
    };
    return p;
}

RotationProblem below_problem(const Word& w, std::size_t m, std::size_t r) {
    if (m == 0 || r == 0 || r > m) throw std::invalid_argument("below: need 1 <= r <= m");
    RotationProblem p;
    p.length = m;
    p.front.constraints = first_below_front(m, r);
    if (r == m) p.front.constraints[0] = C::Less;
    p.front.continuation = Continuation::Scan;
    p.back.constraints = none(m);
    p.back.continuation = Continuation::Complement;
    p.member = [w, r](const Word& v) { return first_rotation_below(v, w) == r; };
    return p;
}

RotationProblem gamma_problem(const Word& w, std::size_t m, std::size_t r) {
    RotationProblem p = below_problem(w, m, r);
    p.back.constraints.assign(m, C::Greater);
    p.member = [w, r](const Word& v) {
        return first_rotation_below(v, w) == r && all_rotations_above(complement(v), w);
    };
    return p;
}

RotationProblem none_below_problem(const Word& w, std::size_t m) {
    RotationProblem p;
    p.length = m;
    p.front.constraints.assign(m, C::AtLeast);
    p.front.continuation = Continuation::Scan;
    p.back.constraints = none(m);
    p.back.continuation = Continuation::Complement;
    p.member = [w](const Word& v) { return !first_rotation_below(v, w); };
    return p;
}

RotationProblem enclosing_complement_problem(const Word& w, std::size_t m) {
    RotationProblem p = none_below_problem(w, m);
    p.back.constraints.assign(m, C::Greater);
    p.member = [w](const Word& v) { return !first_rotation_below(v, w) && all_rotations_above(complement(v), w); };
    return p;
}

RotationProblem antiperiodic_none_below_problem(const Word& w, std::size_t r) {
    RotationProblem p;
    p.length = r;
    p.front.constraints.assign(r, C::AtLeast);
    p.front.continuation = Continuation::Complement;
    p.back.constraints.assign(r, C::AtLeast);
    p.back.continuation = Continuation::Scan;
    p.member = [w](const Word& x) { return !first_rotation_below(antiperiodic_word(x), w); };
    return p;
}

RotationProblem y_sym_problem(const Word& w, std::size_t r) {
    RotationProblem p;
    p.length = r;
    p.front.constraints = none(r);
    p.front.continuation = Continuation::Complement;
    p.back.constraints.assign(r, C::Greater);
    p.back.constraints[0] = C::None;
    p.back.continuation = Continuation::Scan;
    p.member = [w, r](const Word& x) {
        const Word u = antiperiodic_word(x);
        for (std::size_t t = r + 1; t < 2 * r; ++t) {
            if (!inf_greater(rotate(u, t), w)) return false;
        }
        return true;
    };
    return p;
}

RotationProblem y_enc_problem(const Word& w, std::size_t m) {
    RotationProblem p;
    p.length = m;
    p.front.constraints = none(m);
    p.front.continuation = Continuation::Scan;
    p.back.constraints.assign(m, C::Greater);
    p.back.continuation = Continuation::Complement;
    p.member = [w](const Word& v) { return all_rotations_above(complement(v), w); };
    return p;
}

Count run(const WxTable& table, RotationProblem problem, DpStats* stats) {
    RotationDp dp(table, std::move(problem));
    const Count c = to_count(dp.count());
    if (stats) stats->states += dp.memo_size();
    return c;
}

namespace {

void check_tracker(const WxTable& table, std::size_t i, Tracker t) {
    if (t.kind == Tracker::Kind::Exact || t.kind == Tracker::Kind::Bound) {
        if (t.rank >= table.distinct(i)) throw std::invalid_argument("DP key: tracker rank out of range");
    }
    if (i == 0 && t.kind != Tracker::Kind::Exact && t.kind != Tracker::Kind::Ignored) {
        throw std::invalid_argument("DP key: empty prefix must be tracked exactly");
    }
}

}  // namespace

Count run_from(const WxTable& table, RotationProblem problem, std::size_t i, std::size_t front_overlap,
               std::size_t back_overlap, Tracker scan, Tracker complement) {
    if (i > problem.length) throw std::invalid_argument("DP key: consumed length exceeds word length");
    if (front_overlap > i || back_overlap > i) throw std::invalid_argument("DP key: overlap exceeds consumed length");
    check_tracker(table, i, scan);
    check_tracker(table, i, complement);
    RotationDp dp(table, std::move(problem));
    DpState s;
    s.i = i;
    s.front_overlap = front_overlap;
    s.back_overlap = back_overlap;
    s.scan = scan;
    s.complement = complement;
    DpState probe = s;
    probe.scan = probe.complement = Tracker::exact(0);
    probe = dp.canonicalize(probe);
    if ((probe.scan.kind != Tracker::Kind::Ignored && scan.kind == Tracker::Kind::Ignored) ||
        (probe.complement.kind != Tracker::Kind::Ignored && complement.kind == Tracker::Kind::Ignored)) {
        throw std::invalid_argument("DP key: a required tracker is missing");
    }
    s = dp.canonicalize(s);
    return to_count(dp.count(s));
}

std::optional<Word> tie_root(const Word& w) {
    Word z = subword(w, 1, period(w));
    if (!is_necklace(z)) return std::nullopt;
    return z;
}

}  // namespace unlabelled::detail
