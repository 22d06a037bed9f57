#include "unlabelled/enclosing_rank.hpp"

#include "problems.hpp"

#include <map>
#include <stdexcept>

namespace unlabelled {
namespace {

// Words of length e in an enclosing class; `tie` admits the necklace equal to
// w on infinite powers, which precedes w only when the length is shorter.
Count en_words(const WxTable& table, std::size_t e, bool tie) {
    // Words with complement above w^inf, minus those with no rotation below;
    // the gamma sets partition the difference.
    const Word& ref = table.reference();
    Count total = detail::run(table, detail::y_enc_problem(ref, e)) -
                  detail::run(table, detail::enclosing_complement_problem(ref, e));
    if (tie) {
        if (auto z = detail::tie_root(ref); z && e % z->size() == 0 && detail::all_rotations_above(complement(*z), ref)) {
            total += z->size();
        }
    }
    return total;
}

}  // namespace

Count y_enc(const Word& w, std::size_t p_b, Tracker B_b, std::size_t consumed, std::size_t remaining) {
    const WxTable table(w);
    const std::size_t m = consumed + remaining;
    if (m == 0) throw std::invalid_argument("y_enc: empty word");
    return detail::run_from(table, detail::y_enc_problem(w, m), consumed, 0, p_b, Tracker::ignored(), B_b);
}

Count c_size(const Word& w, const EncDpKey& key, std::size_t m) {
    const WxTable table(w);
    if (key.r == 0 || key.r > m || key.i > m) throw std::invalid_argument("c_size: malformed key");
    return detail::run_from(table, detail::gamma_problem(w, m, key.r), key.i, key.p_f, key.p_b, key.B_f, key.B_b);
}

Count gamma_size(const WxTable& table, std::size_t m, std::size_t r, DpStats* stats) {
    if (m == 0 || m > table.n()) throw std::invalid_argument("gamma_size: need 1 <= m <= |w|");
    return detail::run(table, detail::gamma_problem(table.reference(), m, r), stats);
}

Count gamma_size(const Word& w, std::size_t m, std::size_t r) { return gamma_size(WxTable(w), m, r); }

Count en_size(const Word& w, std::size_t m) {
    if (m == 0 || m > w.size()) throw std::invalid_argument("en_size: need 1 <= m <= |w|");
    return en_words(WxTable(w), m, m < w.size());
}

Count rank_enclosing(const WxTable& table, std::size_t m) {
    if (m == 0 || m > table.n()) throw std::invalid_argument("rank_enclosing: need 1 <= m <= |w|");
    const bool tie = m < table.n();
    std::map<std::size_t, Count> words;
    for (std::size_t e : arith::divisors(m)) words[e] = en_words(table, e, tie);
    // The lesser necklace of an enclosing class with primitive period d has d
    // distinct rotations.
    Count total = 0;
    for (std::size_t d : arith::divisors(m)) {
        Count exact = 0;
        for (std::size_t e : arith::divisors(d)) exact += arith::mobius(d / e) * words[e];
        total += exact_div(exact, d, "rank_enclosing");
    }
    return total;
}

Count rank_enclosing(const Word& w, std::size_t m) {
    if (m == 0 || m > w.size()) throw std::invalid_argument("rank_enclosing: need 1 <= m <= |w|");
    return rank_enclosing(WxTable(w), m);
}

}  // namespace unlabelled
