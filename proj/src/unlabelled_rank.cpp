#include "unlabelled/unlabelled_rank.hpp"

#include "unlabelled/bound_table.hpp"
#include "unlabelled/enclosing_rank.hpp"
#include "unlabelled/necklace_rank.hpp"
#include "unlabelled/symmetric_rank.hpp"

namespace unlabelled {

RankBreakdown make_breakdown(Count necklace, Count symmetric, Count enclosing) {
    RankBreakdown b;
    b.rank_necklace = std::move(necklace);
    b.rank_symmetric = std::move(symmetric);
    b.rank_enclosing = std::move(enclosing);
    b.rank_asymmetric = exact_div(b.rank_necklace - b.rank_symmetric - b.rank_enclosing, 2, "rank_asymmetric");
    if (b.rank_symmetric < 0 || b.rank_enclosing < 0 || b.rank_asymmetric < 0) {
        throw ConventionError("make_breakdown: negative component");
    }
    b.rank_total = b.rank_asymmetric + b.rank_symmetric + b.rank_enclosing;
    if (b.rank_necklace != 2 * b.rank_asymmetric + b.rank_symmetric + b.rank_enclosing) {
        throw ConventionError("make_breakdown: necklace identity violated");
    }
    return b;
}

RankBreakdown rank_unlabelled(const Word& w, std::size_t m) {
    if (w.empty()) throw std::invalid_argument("rank_unlabelled: empty word");
    if (m == 0) m = w.size();
    if (m > w.size()) throw std::invalid_argument("rank_unlabelled: m exceeds |w|");
    if (canonical_unlabelled(w) != w) {
        throw NonCanonicalError("rank_unlabelled: " + w.str() + " is not a canonical unlabelled representative");
    }
    const WxTable table(w);
    return make_breakdown(rank_necklaces(table, m), rank_sym_necklaces(table, m), rank_enclosing(table, m));
}

Count count_classes_below(const Word& x) {
    if (x.empty()) throw std::invalid_argument("count_classes_below: empty word");
    const WxTable table(x);
    const std::size_t n = x.size();
    // Classes below x: symmetric ones are counted once by both the necklace
    // and the symmetric rank; the rest once or twice by the necklace rank,
    // completed by the enclosing rank or by x being the greater necklace.
    Count total = rank_necklaces(table, n) + rank_sym_necklaces(table, n) + rank_enclosing(table, n);
    if (is_necklace(x)) {
        const Word partner = canonical(complement(x));
        if (partner < x) total += 1;
    }
    return exact_div(total, 2, "count_classes_below");
}

Word unrank_unlabelled(const Count& k, std::size_t n) {
    if (n == 0 || n > 63) throw std::invalid_argument("unrank_unlabelled: need 1 <= n <= 63");
    if (k < 0 || k >= count_unlabelled(n)) throw std::out_of_range("unrank_unlabelled: rank out of range");
    // Largest x with count_classes_below(x) <= k is the representative itself.
    std::uint64_t lo = 0;
    std::uint64_t hi = (std::uint64_t{1} << n) - 1;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (count_classes_below(Word::from_bits(mid, n)) <= k) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Word result = Word::from_bits(lo, n);
    if (canonical_unlabelled(result) != result) throw ConventionError("unrank_unlabelled: search ended off a class");
    return result;
}

Count count_unlabelled(std::size_t n) {
    if (n == 0) throw std::invalid_argument("count_unlabelled: n must be positive");
    Count total = 0;
    for (std::size_t d : arith::divisors(n)) total += arith::totient(2 * d) * pow2(n / d);
    return exact_div(total, 2 * n, "count_unlabelled");
}

Count count_unlabelled_lyndon(std::size_t n) {
    if (n == 0) throw std::invalid_argument("count_unlabelled_lyndon: n must be positive");
    Count total = 0;
    for (std::size_t d : arith::divisors(n)) {
        if (d % 2 == 1) total += arith::mobius(d) * pow2(n / d);
    }
    return exact_div(total, 2 * n, "count_unlabelled_lyndon");
}

}  // namespace unlabelled
