#include "unlabelled/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace unlabelled::oracle {
namespace {

void check_bound(std::size_t n, std::size_t bound, const char* what) {
    if (n == 0 || n > bound) {
        throw std::invalid_argument(std::string(what) + ": length " + std::to_string(n) + " outside [1, " +
                                    std::to_string(bound) + "]");
    }
}

bool rotation_below(const Word& v, std::size_t t, const Word& w) {
    return compare_infinite(rotate(v, t % v.size()), w) < 0;
}

bool rotation_above(const Word& v, std::size_t t, const Word& w) {
    return compare_infinite(rotate(v, t % v.size()), w) > 0;
}

std::size_t first_below(const Word& v, const Word& w) {
    for (std::size_t t = 1; t <= v.size(); ++t) {
        if (rotation_below(v, t, w)) return t;
    }
    return 0;
}

bool symmetric_necklace(const Word& v) { return canonical(v) == canonical(complement(v)); }

bool in_ra(const Word& v, const Word& w, std::size_t r) {
    return is_antiperiodic(v, r) && symmetric_necklace(v) && lex_less(canonical(v), w);
}

bool in_en(const Word& v, const Word& w) {
    return lex_less(canonical(v), w) && lex_less(w, canonical(complement(v)));
}

}  // namespace

ClassTable enumerate_classes(std::size_t n, std::size_t bound) {
    check_bound(n, bound, "enumerate_classes");
    std::map<Word, ClassInfo> seen;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const Word v = Word::from_bits(bits, n);
        const Word a = canonical(v);
        const Word b = canonical(complement(v));
        const Word rep = std::min(a, b);
        if (seen.count(rep)) continue;
        seen.emplace(rep, ClassInfo{rep, std::max(a, b), a == b, period(rep)});
    }
    ClassTable table;
    table.n = n;
    for (auto& [rep, info] : seen) table.classes.push_back(std::move(info));
    return table;
}

const ClassTable& RankOracle::classes(std::size_t m) {
    auto it = classes_.find(m);
    if (it == classes_.end()) it = classes_.emplace(m, enumerate_classes(m, bound_)).first;
    return it->second;
}

const std::vector<Word>& RankOracle::necklaces(std::size_t m) {
    auto it = necklaces_.find(m);
    if (it == necklaces_.end()) {
        check_bound(m, bound_, "RankOracle");
        std::vector<Word> list;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
            Word v = Word::from_bits(bits, m);
            if (is_necklace(v)) list.push_back(std::move(v));
        }
        it = necklaces_.emplace(m, std::move(list)).first;
    }
    return it->second;
}

Count RankOracle::rank(const Word& w, std::size_t m, RankSet which) {
    Count total = 0;
    if (which == RankSet::Necklace) {
        for (const Word& v : necklaces(m)) total += lex_less(v, w);
        return total;
    }
    for (const ClassInfo& c : classes(m).classes) {
        const bool lower = lex_less(c.representative, w);
        switch (which) {
            case RankSet::Symmetric:
                total += c.symmetric && lower;
                break;
            case RankSet::Enclosing:
                total += !c.symmetric && lower && lex_less(w, c.partner);
                break;
            case RankSet::Asymmetric:
                total += !c.symmetric && lex_less(c.partner, w);
                break;
            case RankSet::Unlabelled:
                total += lower;
                break;
            case RankSet::Necklace:
                break;
        }
    }
    return total;
}

Count oracle_rank(const Word& w, std::size_t m, RankSet which, std::size_t bound) {
    RankOracle oracle(bound);
    return oracle.rank(w, m, which);
}

std::vector<Word> oracle_set(const Word& w, const SetQuery& q, std::size_t bound) {
    std::vector<Word> out;
    switch (q.kind) {
        case SetKind::Alpha:
        case SetKind::Beta: {
            if (q.r == 0 || q.j == 0 || q.j > q.r) throw std::invalid_argument("oracle_set: need 1 <= j <= r");
            check_bound(2 * q.r, bound, "oracle_set");
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (2 * q.r)); ++bits) {
                const Word v = Word::from_bits(bits, 2 * q.r);
                if (!is_antiperiodic(v, q.r)) continue;
                const std::size_t t = first_below(v, w);
                if (t != q.j) continue;
                if (q.kind == SetKind::Beta) {
                    bool above = true;
                    for (std::size_t s = q.r + 1; s <= 2 * q.r && above; ++s) above = rotation_above(v, s, w);
                    if (!above) continue;
                }
                out.push_back(v);
            }
            break;
        }
        case SetKind::Gamma:
        case SetKind::RA:
        case SetKind::EN: {
            check_bound(q.m, bound, "oracle_set");
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << q.m); ++bits) {
                const Word v = Word::from_bits(bits, q.m);
                bool keep = false;
                if (q.kind == SetKind::RA) {
                    keep = q.r > 0 && q.m % (2 * q.r) == 0 && in_ra(v, w, q.r);
                } else if (q.kind == SetKind::EN) {
                    keep = in_en(v, w);
                } else {
                    keep = in_en(v, w) && first_below(v, w) == q.r;
                }
                if (keep) out.push_back(v);
            }
            break;
        }
    }
    return out;
}

}  // namespace unlabelled::oracle
