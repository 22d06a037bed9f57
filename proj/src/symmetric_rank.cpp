#include "unlabelled/symmetric_rank.hpp"

#include "problems.hpp"

#include <map>
#include <stdexcept>

namespace unlabelled {
namespace {

void check_length(const WxTable& table, std::size_t m, const char* what) {
    if (m == 0 || m > table.n()) throw std::invalid_argument(std::string(what) + ": need 1 <= m <= |w|");
}

// Antiperiodic words of length 2r whose necklace ties with w: the rotations
// of z^(2r/|z|), present only for a length shorter than w.
Count tie_words(const Word& w, std::size_t r) {
    auto z = detail::tie_root(w);
    if (!z || (2 * r) % z->size() != 0) return 0;
    if (!is_antiperiodic(power(*z, 2 * r / z->size()), r)) return 0;
    return z->size();
}

// Words of length m whose least antiperiod is exactly p: an antiperiod r of a
// word with least antiperiod p satisfies p | r with r / p odd, so inversion
// runs over the odd-quotient divisors.
Count ra_exact(const WxTable& table, std::size_t m, std::size_t p, std::map<std::size_t, Count>& ra_cache) {
    Count total = 0;
    for (std::size_t q : arith::divisors(p)) {
        if ((p / q) % 2 == 0) continue;
        const int mu = arith::mobius(p / q);
        if (mu == 0) continue;
        auto it = ra_cache.find(q);
        if (it == ra_cache.end()) it = ra_cache.emplace(q, ra_size(table, m, q)).first;
        total += mu * it->second;
    }
    return total;
}

}  // namespace

Count sa(const Word& w, const SymDpKeySA& key) {
    const WxTable table(w);
    if (key.r == 0 || key.j == 0 || key.j > key.r || key.i > key.r) throw std::invalid_argument("sa: malformed key");
    // The back side is open only for j = r, where its single constraint starts
    // at S(x)_1 and stays open while S(x[0, i)) = w[0, i).
    std::size_t p_b = 0;
    Tracker scan = key.i == 0 ? Tracker::exact(0) : Tracker::ignored();
    if (key.j == key.r && key.i > 0 && key.i <= table.n() && key.B == Tracker::exact(table.slice_rank(0, key.i))) {
        p_b = key.i;
        scan = table.classify(complement(subword(w, 1, key.i)));
    }
    return detail::run_from(table, detail::alpha_problem(w, key.r, key.j), key.i, key.p, p_b, scan, key.B);
}

Count sb(const Word& w, const SymDpKeySB& key) {
    const WxTable table(w);
    if (key.r == 0 || key.j == 0 || key.j > key.r || key.i > key.r) throw std::invalid_argument("sb: malformed key");
    return detail::run_from(table, detail::beta_problem(w, key.r, key.j), key.i, key.p_f, key.p_b, key.B_f, key.B_b);
}

Count y_sym(const Word& w, std::size_t remaining, std::size_t p_b, std::size_t consumed, Tracker B_f) {
    const WxTable table(w);
    const std::size_t r = consumed + remaining;
    if (r == 0) throw std::invalid_argument("y_sym: empty word");
    return detail::run_from(table, detail::y_sym_problem(w, r), consumed, 0, p_b, B_f, Tracker::ignored());
}

Count alpha_size(const WxTable& table, std::size_t r, std::size_t j, DpStats* stats) {
    return detail::run(table, detail::alpha_problem(table.reference(), r, j), stats);
}

Count beta_size(const WxTable& table, std::size_t r, std::size_t j, DpStats* stats) {
    return detail::run(table, detail::beta_problem(table.reference(), r, j), stats);
}

Count alpha_size(const Word& w, std::size_t r, std::size_t j) { return alpha_size(WxTable(w), r, j); }

Count beta_size(const Word& w, std::size_t r, std::size_t j, DpStats* stats) {
    return beta_size(WxTable(w), r, j, stats);
}

Count ra_size(const WxTable& table, std::size_t m, std::size_t r) {
    check_length(table, m, "ra_size");
    if (r == 0 || m % (2 * r) != 0) return 0;
    // Every antiperiodic word with a rotation below w^inf, which the alpha and
    // beta sets partition.
    Count total = pow2(r) - detail::run(table, detail::antiperiodic_none_below_problem(table.reference(), r));
    if (m < table.n()) total += tie_words(table.reference(), r);
    return total;
}

Count ra_size(const Word& w, std::size_t m, std::size_t r) {
    if (m == 0 || m > w.size()) throw std::invalid_argument("ra_size: need 1 <= m <= |w|");
    return ra_size(WxTable(w), m, r);
}

Count rank_sym_lyndon(const Word& w, std::size_t L) {
    if (L == 0 || L > w.size()) throw std::invalid_argument("rank_sym_lyndon: need 1 <= L <= |w|");
    if (L % 2 != 0) return 0;
    const WxTable table(w);
    std::map<std::size_t, Count> cache;
    return exact_div(ra_exact(table, L, L / 2, cache), L, "rank_sym_lyndon");
}

Count rank_sym_necklaces(const WxTable& table, std::size_t m) {
    check_length(table, m, "rank_sym_necklaces");
    if (m % 2 != 0) return 0;
    // A symmetric necklace with least antiperiod p has exactly 2p rotations.
    std::map<std::size_t, Count> cache;
    Count total = 0;
    for (std::size_t p : arith::divisors(m / 2)) {
        total += exact_div(ra_exact(table, m, p, cache), 2 * p, "rank_sym_necklaces");
    }
    return total;
}

Count rank_sym_necklaces(const Word& w, std::size_t m) {
    if (m == 0 || m > w.size()) throw std::invalid_argument("rank_sym_necklaces: need 1 <= m <= |w|");
    return rank_sym_necklaces(WxTable(w), m);
}

}  // namespace unlabelled
