#include "unlabelled/rotation_dp.hpp"

#include <algorithm>
#include <stdexcept>

namespace unlabelled {

std::uint64_t DpState::pack() const {
    auto tr = [](Tracker t) {
        return (static_cast<std::uint64_t>(t.kind) << 8) | static_cast<std::uint64_t>(t.rank & 0xff);
    };
    return static_cast<std::uint64_t>(i) | (static_cast<std::uint64_t>(front_overlap) << 8) |
           (static_cast<std::uint64_t>(back_overlap) << 16) | (tr(scan) << 24) | (tr(complement) << 34);
}

Count to_count(DpCount v) {
    Count hi = static_cast<std::uint64_t>(v >> 64);
    Count lo = static_cast<std::uint64_t>(v);
    return (hi << 64) | lo;
}

RotationDp::RotationDp(const WxTable& table, RotationProblem problem)
    : table_(table), problem_(std::move(problem)) {
    const std::size_t len = problem_.length;
    if (len == 0 || len > table_.n()) throw std::invalid_argument("RotationDp: length out of range");
    if (len > 120) throw std::invalid_argument("RotationDp: length above 120");
    if (problem_.front.constraints.size() != len || problem_.back.constraints.size() != len) {
        throw std::invalid_argument("RotationDp: constraint vector size mismatch");
    }

    const Word& w = table_.reference();
    const std::size_t n = w.size();
    failure_.assign(n + 1, 0);
    for (std::size_t p = 2; p <= n; ++p) {
        std::size_t k = failure_[p - 1];
        while (k > 0 && w[k] != w[p - 1]) k = failure_[k];
        if (w[k] == w[p - 1]) ++k;
        failure_[p] = k;
    }

    const SideRules* rules[2] = {&problem_.front, &problem_.back};
    for (int which = 0; which < 2; ++which) {
        sides_[which].rules = rules[which];
        for (std::size_t s = len; s >= 1; --s) {
            if (rules[which]->constraints[s - 1] != Constraint::None) {
                sides_[which].last_constrained = s;
                break;
            }
        }
    }
    step_cache_.assign(2 * len * (len + 1) * 2, -2);
}

Constraint RotationDp::constraint(const Side& side, std::size_t start) const {
    return side.rules->constraints[start - 1];
}

bool RotationDp::alive(const Side& side, std::size_t i, std::size_t overlap) const {
    return overlap > 0 || side.last_constrained > i;
}

int RotationDp::step_side(int which, std::size_t i, std::size_t overlap, Symbol d) const {
    const std::size_t len = problem_.length;
    int& slot = step_cache_[((which * len + i) * (len + 1) + overlap) * 2 + d];
    if (slot != -2) return slot;

    const Side& side = sides_[which];
    const Word& w = table_.reference();
    int next = 0;
    bool reject = false;
    for (std::size_t b = overlap;; b = failure_[b]) {
        const Constraint c = constraint(side, i - b + 1);
        if (c != Constraint::None) {
            const Symbol expected = w[b];
            if (d == expected) {
                next = std::max(next, static_cast<int>(b + 1));
            } else if ((d > expected && c == Constraint::Less) || (d < expected && c != Constraint::Less)) {
                reject = true;
                break;
            }
        }
        if (b == 0) break;
    }
    slot = reject ? -1 : next;
    return slot;
}

DpState RotationDp::initial() const {
    DpState s;
    s.scan = Tracker::exact(0);
    s.complement = Tracker::exact(0);
    return canonicalize(s);
}

DpState RotationDp::canonicalize(DpState s) const {
    bool need[2] = {false, false};
    std::size_t* overlaps[2] = {&s.front_overlap, &s.back_overlap};
    for (int which = 0; which < 2; ++which) {
        if (alive(sides_[which], s.i, *overlaps[which])) {
            need[sides_[which].rules->continuation == Continuation::Scan ? 0 : 1] = true;
        } else {
            *overlaps[which] = 0;
        }
    }
    if (!need[0]) s.scan = Tracker::ignored();
    if (!need[1]) s.complement = Tracker::ignored();
    return s;
}

std::optional<DpState> RotationDp::advance(const DpState& s, Symbol c) const {
    if (s.i >= problem_.length) throw std::logic_error("RotationDp::advance past the end");
    const Symbol d = static_cast<Symbol>(1 - c);
    const int pf = step_side(0, s.i, s.front_overlap, c);
    if (pf < 0) return std::nullopt;
    const int pb = step_side(1, s.i, s.back_overlap, d);
    if (pb < 0) return std::nullopt;
    DpState next;
    next.i = s.i + 1;
    next.front_overlap = static_cast<std::size_t>(pf);
    next.back_overlap = static_cast<std::size_t>(pb);
    next.scan = table_.step(s.i, s.scan, c);
    next.complement = table_.step(s.i, s.complement, d);
    return canonicalize(next);
}

std::optional<DpState> RotationDp::state_of_prefix(const Word& prefix) const {
    if (prefix.size() > problem_.length) throw std::invalid_argument("state_of_prefix: prefix too long");
    std::optional<DpState> s = initial();
    for (std::size_t k = 0; k < prefix.size() && s; ++k) s = advance(*s, prefix[k]);
    return s;
}

bool RotationDp::finish_side(const Side& side, std::size_t overlap, Tracker continuation) const {
    const std::size_t len = problem_.length;
    for (std::size_t b = overlap; b > 0; b = failure_[b]) {
        const Constraint c = constraint(side, len - b + 1);
        if (c == Constraint::None) continue;
        bool greater = false;
        if (continuation.kind == Tracker::Kind::Bound) {
            greater = table_.slice_rank(b, len) <= continuation.rank;
        } else if (continuation.kind != Tracker::Kind::Below) {
            throw std::logic_error("RotationDp: unresolved continuation tracker");
        }
        // An unresolved comparison cannot end equal here, so AtLeast means Greater.
        if (greater != (c != Constraint::Less)) return false;
    }
    return true;
}

DpCount RotationDp::finish(const DpState& s) const {
    const std::size_t overlaps[2] = {s.front_overlap, s.back_overlap};
    for (int which = 0; which < 2; ++which) {
        if (overlaps[which] == 0) continue;
        const Continuation cont = sides_[which].rules->continuation;
        const Tracker t = cont == Continuation::Scan ? s.scan : s.complement;
        if (t.kind != Tracker::Kind::Exact) continue;
        const Word value = table_.ref(problem_.length, t.rank).value;
        const Word y = cont == Continuation::Scan ? value : complement(value);
        return problem_.member(y) ? 1 : 0;
    }
    for (int which = 0; which < 2; ++which) {
        if (overlaps[which] == 0) continue;
        const Continuation cont = sides_[which].rules->continuation;
        const Tracker t = cont == Continuation::Scan ? s.scan : s.complement;
        if (!finish_side(sides_[which], overlaps[which], t)) return 0;
    }
    return 1;
}

DpCount RotationDp::count(const DpState& s) {
    const std::size_t len = problem_.length;
    if (s.i == len) return finish(s);
    if (!alive(sides_[0], s.i, s.front_overlap) && !alive(sides_[1], s.i, s.back_overlap)) {
        return static_cast<DpCount>(1) << (len - s.i);
    }
    const std::uint64_t key = s.pack();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    DpCount total = 0;
    for (Symbol c = 0; c <= 1; ++c) {
        if (auto next = advance(s, c)) total += count(*next);
    }
    memo_.emplace(key, total);
    return total;
}

}  // namespace unlabelled
