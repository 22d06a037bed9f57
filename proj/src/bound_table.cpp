#include "unlabelled/bound_table.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>

namespace unlabelled {
namespace {

// Lexicographic successor among words of the same length; empty if v = 1^l.
std::optional<Word> successor(const Word& v) {
    std::vector<Symbol> s = v.symbols();
    for (std::size_t k = s.size(); k-- > 0;) {
        if (s[k] == 0) {
            s[k] = 1;
            return Word(std::move(s));
        }
        s[k] = 0;
    }
    return std::nullopt;
}

}  // namespace

WxTable::WxTable(Word reference) : w_(std::move(reference)) {
    const std::size_t len = w_.size();
    if (len == 0) throw std::invalid_argument("WxTable: empty reference word");
    if (len > 250) throw std::invalid_argument("WxTable: reference longer than 250 symbols");

    sorted_.resize(len + 1);
    first_start_.resize(len + 1);
    slice_rank_.resize(len + 1);
    for (std::size_t l = 0; l <= len; ++l) {
        std::vector<std::pair<Word, std::size_t>> all;
        all.reserve(len);
        for (std::size_t s = 0; s < len; ++s) all.emplace_back(cyclic_slice(w_, s, l), s);
        std::stable_sort(all.begin(), all.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        slice_rank_[l].assign(len, 0);
        for (const auto& [value, start0] : all) {
            if (sorted_[l].empty() || sorted_[l].back() != value) {
                sorted_[l].push_back(value);
                first_start_[l].push_back(start0 + 1);
            } else {
                first_start_[l].back() = std::min(first_start_[l].back(), start0 + 1);
            }
            slice_rank_[l][start0] = sorted_[l].size() - 1;
        }
        if (l == 0) first_start_[0][0] = 0;
    }

    wx_.resize(len);
    exact_step_.resize(len);
    for (std::size_t l = 0; l < len; ++l) {
        const std::size_t count = sorted_[l].size();
        wx_[l].resize(count);
        exact_step_[l].resize(count);
        for (std::size_t r = 0; r < count; ++r) {
            const Word& s = sorted_[l][r];
            for (Symbol x = 0; x <= 1; ++x) {
                Word ext = s;
                ext.push_back(x);
                exact_step_[l][r][x] = classify(ext);
            }
            auto rep = successor(s);
            if (!rep || find_exact(*rep)) continue;  // nothing is strictly bounded by s
            for (Symbol x = 0; x <= 1; ++x) {
                Word ext = *rep;
                ext.push_back(x);
                const Tracker t = classify(ext);
                if (t.kind != Tracker::Kind::Bound) {
                    throw std::logic_error("WxTable: extension of a bounded word is not bounded");
                }
                wx_[l][r][x] = t.rank;
            }
        }
    }
}

SubwordRef WxTable::ref(std::size_t l, std::size_t rank) const {
    if (l > n() || rank >= sorted_[l].size()) throw std::out_of_range("WxTable::ref");
    return SubwordRef{l, first_start_[l][rank], rank, sorted_[l][rank]};
}

std::optional<std::size_t> WxTable::find_exact(const Word& v) const {
    const auto& row = sorted_.at(v.size());
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it != row.end() && *it == v) return static_cast<std::size_t>(it - row.begin());
    return std::nullopt;
}

Tracker WxTable::classify(const Word& v) const {
    if (v.size() > n()) throw std::invalid_argument("WxTable::classify: word longer than reference");
    const auto& row = sorted_[v.size()];
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it != row.end() && *it == v) return Tracker::exact(static_cast<std::size_t>(it - row.begin()));
    if (it == row.begin()) return Tracker::below();
    return Tracker::bound(static_cast<std::size_t>(it - row.begin()) - 1);
}

std::optional<std::size_t> WxTable::wx(std::size_t l, std::size_t rank, Symbol x) const {
    if (l >= n() || rank >= wx_[l].size() || x > 1) return std::nullopt;
    return wx_[l][rank][x];
}

Tracker WxTable::step(std::size_t l, Tracker t, Symbol x) const {
    switch (t.kind) {
        case Tracker::Kind::Ignored:
        case Tracker::Kind::Below:
            return t;
        case Tracker::Kind::Exact:
            return exact_step_[l][t.rank][x];
        case Tracker::Kind::Bound: {
            const auto next = wx_[l][t.rank][x];
            if (!next) throw std::logic_error("WxTable::step: missing WX entry on a DP path");
            return Tracker::bound(*next);
        }
    }
    return t;
}

void WxTable::dump(std::ostream& out) const {
    for (std::size_t l = 0; l < wx_.size(); ++l) {
        for (std::size_t r = 0; r < wx_[l].size(); ++r) {
            for (Symbol x = 0; x <= 1; ++x) {
                if (!wx_[l][r][x]) continue;
                const std::size_t next = *wx_[l][r][x];
                out << l << ' ' << first_start_[l][r] << ' ' << sorted_[l][r].str() << ' ' << int(x)
                    << " -> " << first_start_[l + 1][next] << ' ' << sorted_[l + 1][next].str() << '\n';
            }
        }
    }
}

std::optional<SubwordRef> strict_bound(const Word& v, const Word& w) {
    if (v.size() > w.size()) throw std::invalid_argument("strict_bound: |v| > |w|");
    // Direct scan over the cyclic subwords; independent of WxTable.
    std::optional<Word> best;
    std::size_t best_start = 0;
    for (std::size_t s = 0; s < w.size(); ++s) {
        Word u = cyclic_slice(w, s, v.size());
        if (u == v) return std::nullopt;
        if (u < v && (!best || *best < u)) {
            best = u;
            best_start = s + 1;
        } else if (best && u == *best) {
            best_start = std::min(best_start, s + 1);
        }
    }
    if (!best) return std::nullopt;
    std::vector<Word> smaller;
    for (std::size_t s = 0; s < w.size(); ++s) {
        Word u = cyclic_slice(w, s, v.size());
        if (u < *best) smaller.push_back(std::move(u));
    }
    std::sort(smaller.begin(), smaller.end());
    const auto rank = static_cast<std::size_t>(std::unique(smaller.begin(), smaller.end()) - smaller.begin());
    return SubwordRef{v.size(), best_start, rank, *best};
}

WxTable build_wx(const Word& w) { return WxTable(w); }

SubwordRef wx_lookup(const WxTable& table, const SubwordRef& s, Symbol x) {
    const auto next = table.wx(s.length, s.rank, x);
    if (!next) {
        throw std::logic_error("wx_lookup: no entry for subword " + s.value.str() + " and symbol " +
                               std::to_string(int(x)));
    }
    return table.ref(s.length + 1, *next);
}

}  // namespace unlabelled
