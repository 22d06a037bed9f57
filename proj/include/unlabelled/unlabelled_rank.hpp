#pragma once

#include "unlabelled/count.hpp"
#include "unlabelled/word.hpp"

#include <stdexcept>

namespace unlabelled {

/// Rank of a word among unlabelled necklaces of one length, by class type.
/// Construction through make_breakdown checks
///   rank_total     = rank_asymmetric + rank_symmetric + rank_enclosing
///   rank_necklace  = 2 * rank_asymmetric + rank_symmetric + rank_enclosing.
struct RankBreakdown {
    Count rank_necklace;
    Count rank_symmetric;
    Count rank_enclosing;
    Count rank_asymmetric;
    Count rank_total;
};

/// Derives the asymmetric and total ranks; throws ConventionError when the
/// identities cannot hold exactly.
RankBreakdown make_breakdown(Count necklace, Count symmetric, Count enclosing);

class NonCanonicalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Number of unlabelled necklace classes of length m (m = 0 means |w|) whose
/// canonical representative precedes w. w must be a canonical unlabelled
/// representative; otherwise NonCanonicalError.
RankBreakdown rank_unlabelled(const Word& w, std::size_t m = 0);

/// Number of classes of length |x| whose canonical representative is
/// lexicographically smaller than x, for any word x. Monotone in x.
Count count_classes_below(const Word& x);

/// Canonical representative of the class of rank k among length-n classes.
/// Requires 1 <= n <= 63 and k < count_unlabelled(n).
Word unrank_unlabelled(const Count& k, std::size_t n);

Count count_unlabelled(std::size_t n);
Count count_unlabelled_lyndon(std::size_t n);

}  // namespace unlabelled
