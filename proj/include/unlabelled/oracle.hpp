#pragma once

// Exhaustive reference implementation. Built from the set definitions and the
// word primitives only; shares no code with the DP modules.

#include "unlabelled/count.hpp"
#include "unlabelled/word.hpp"

#include <map>
#include <vector>

namespace unlabelled::oracle {

inline constexpr std::size_t kDefaultBound = 16;

struct ClassInfo {
    Word representative;  // lesser necklace of the class
    Word partner;         // canonical necklace of the complement
    bool symmetric = false;
    std::size_t period = 0;
};

struct ClassTable {
    std::size_t n = 0;
    std::vector<ClassInfo> classes;  // ascending by representative
};

ClassTable enumerate_classes(std::size_t n, std::size_t bound = kDefaultBound);

enum class RankSet { Necklace, Symmetric, Enclosing, Asymmetric, Unlabelled };

/// Caches class tables and necklace lists per length so that repeated rank
/// queries cost one scan each.
class RankOracle {
public:
    explicit RankOracle(std::size_t bound = kDefaultBound) : bound_(bound) {}
    Count rank(const Word& w, std::size_t m, RankSet which);
    const ClassTable& classes(std::size_t m);
    const std::vector<Word>& necklaces(std::size_t m);

private:
    std::size_t bound_;
    std::map<std::size_t, ClassTable> classes_;
    std::map<std::size_t, std::vector<Word>> necklaces_;
};

/// Definitional rank of w among length-m objects of the selected kind, using
/// the cross-length order.
Count oracle_rank(const Word& w, std::size_t m, RankSet which, std::size_t bound = kDefaultBound);

enum class SetKind { Alpha, Beta, Gamma, RA, EN };

struct SetQuery {
    SetKind kind = SetKind::RA;
    std::size_t m = 0;  // word length for Gamma, RA and EN
    std::size_t r = 0;  // antiperiod (Alpha, Beta, RA) or target rotation (Gamma)
    std::size_t j = 0;  // target rotation (Alpha, Beta)
};

/// Literal member list, ascending. Alpha and Beta words have length 2r.
std::vector<Word> oracle_set(const Word& w, const SetQuery& query, std::size_t bound = 20);

}  // namespace unlabelled::oracle
