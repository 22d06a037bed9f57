#include "unlabelled/necklace_rank.hpp"

#include "problems.hpp"

#include <map>
#include <stdexcept>

namespace unlabelled {

Count words_with_rotation_below(const WxTable& table, std::size_t e) {
    return pow2(e) - detail::run(table, detail::none_below_problem(table.reference(), e));
}

Count rank_necklaces(const WxTable& table, std::size_t m) {
    const Word& w = table.reference();
    if (m == 0 || m > w.size()) throw std::invalid_argument("rank_necklaces: need 1 <= m <= |w|");

    std::map<std::size_t, Count> below;
    for (std::size_t e : arith::divisors(m)) below[e] = words_with_rotation_below(table, e);

    // Lyndon words L of length d with L^inf < w^inf, recovered by Möbius
    // inversion; each contributes the necklace L^(m/d).
    Count total = 0;
    for (std::size_t d : arith::divisors(m)) {
        Count exact = 0;
        for (std::size_t e : arith::divisors(d)) exact += arith::mobius(d / e) * below[e];
        total += exact_div(exact, d, "rank_necklaces");
    }
    // A shorter necklace equal to w on infinite powers precedes w.
    if (m < w.size()) {
        if (auto z = detail::tie_root(w); z && m % z->size() == 0) total += 1;
    }
    return total;
}

Count rank_necklaces(const Word& w, std::size_t m) {
    if (m == 0 || m > w.size()) throw std::invalid_argument("rank_necklaces: need 1 <= m <= |w|");
    return rank_necklaces(WxTable(w), m);
}

Count count_necklaces(std::size_t m) {
    if (m == 0) throw std::invalid_argument("count_necklaces: m must be positive");
    Count total = 0;
    for (std::size_t d : arith::divisors(m)) total += arith::totient(m / d) * pow2(d);
    return exact_div(total, m, "count_necklaces");
}

Count count_lyndon(std::size_t m) {
    if (m == 0) throw std::invalid_argument("count_lyndon: m must be positive");
    Count total = 0;
    for (std::size_t d : arith::divisors(m)) total += arith::mobius(m / d) * pow2(d);
    return exact_div(total, m, "count_lyndon");
}

}  // namespace unlabelled
