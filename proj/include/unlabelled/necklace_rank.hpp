#pragma once

#include "unlabelled/bound_table.hpp"
#include "unlabelled/count.hpp"
#include "unlabelled/word.hpp"

namespace unlabelled {

/// Number of necklaces of length m whose canonical representative precedes w
/// in the cross-length order. Requires 1 <= m <= |w|; w need not be canonical.
Count rank_necklaces(const Word& w, std::size_t m);
Count rank_necklaces(const WxTable& table, std::size_t m);

/// Number of words v in Sigma^e with some rotation r satisfying r^inf < w^inf.
Count words_with_rotation_below(const WxTable& table, std::size_t e);

Count count_necklaces(std::size_t m);
Count count_lyndon(std::size_t m);

}  // namespace unlabelled
