#pragma once

#include "unlabelled/word.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace unlabelled {

/// A cyclic subword of the reference word, identified by its length and the
/// smallest 1-based start at which that value occurs. Equal-valued subwords
/// share one reference. Length 0 is the distinguished EMPTY reference.
struct SubwordRef {
    std::size_t length = 0;
    std::size_t start = 0;  // 1-based; 0 only for EMPTY
    std::size_t rank = 0;   // position among the distinct subwords of this length, ascending
    Word value;

    bool is_empty() const noexcept { return length == 0; }
    friend bool operator==(const SubwordRef& a, const SubwordRef& b) {
        return a.length == b.length && a.rank == b.rank;
    }
};

/// Relation of a word y (of the tracked length) to the cyclic subwords of the
/// reference word of the same length.
///   Exact: y equals the subword of that rank.
///   Bound: y is strictly bounded by the subword of that rank.
///   Below: y is smaller than every subword of its length.
///   Ignored: not tracked (used by the DP to merge states).
struct Tracker {
    enum class Kind : std::uint8_t { Ignored = 0, Exact = 1, Bound = 2, Below = 3 };
    Kind kind = Kind::Ignored;
    std::uint16_t rank = 0;

    static Tracker exact(std::size_t r) { return {Kind::Exact, static_cast<std::uint16_t>(r)}; }
    static Tracker bound(std::size_t r) { return {Kind::Bound, static_cast<std::uint16_t>(r)}; }
    static Tracker below() { return {Kind::Below, 0}; }
    static Tracker ignored() { return {}; }

    friend bool operator==(const Tracker&, const Tracker&) = default;
};

/// Bounding-subword machinery for one reference word w: the distinct cyclic
/// subwords of every length 0..n in sorted order, the WX extension array for
/// strictly bounding subwords, and the exact-extension map for subwords
/// themselves. Immutable after construction.
class WxTable {
public:
    explicit WxTable(Word reference);

    const Word& reference() const noexcept { return w_; }
    std::size_t n() const noexcept { return w_.size(); }

    /// Number of distinct cyclic subwords of length l.
    std::size_t distinct(std::size_t l) const { return sorted_[l].size(); }
    SubwordRef ref(std::size_t l, std::size_t rank) const;
    SubwordRef empty_ref() const { return ref(0, 0); }

    /// Rank of the cyclic subword of length l starting at 0-based position start0.
    std::size_t slice_rank(std::size_t start0, std::size_t l) const { return slice_rank_[l][start0 % n()]; }

    std::optional<std::size_t> find_exact(const Word& v) const;
    /// Relation of v (|v| <= n) to the subwords of length |v|.
    Tracker classify(const Word& v) const;

    /// WX[s, x]: strict bound of u:x for any u strictly bounded by s. Empty when
    /// s bounds nothing (the next subword is the lexicographic successor of s).
    std::optional<std::size_t> wx(std::size_t l, std::size_t rank, Symbol x) const;

    /// Advances a tracker of a length-l word by symbol x.
    Tracker step(std::size_t l, Tracker t, Symbol x) const;

    /// Text dump, one line per stored WX entry: "l start value x -> start' value'".
    void dump(std::ostream& out) const;

private:
    Word w_;
    std::vector<std::vector<Word>> sorted_;                  // [l] -> distinct subwords ascending
    std::vector<std::vector<std::size_t>> first_start_;      // [l][rank] -> 1-based start
    std::vector<std::vector<std::size_t>> slice_rank_;       // [l][start0] -> rank
    std::vector<std::vector<std::array<std::optional<std::size_t>, 2>>> wx_;     // [l][rank][x]
    std::vector<std::vector<std::array<Tracker, 2>>> exact_step_;               // [l][rank][x]
};

/// Largest length-|v| cyclic subword s of w with s < v and no subword in
/// (s, v]. Empty if v is itself a subword or lies below every subword.
/// Throws std::invalid_argument if |v| > |w|.
std::optional<SubwordRef> strict_bound(const Word& v, const Word& w);

WxTable build_wx(const Word& w);

/// Constant-time accessor over build_wx output. Throws std::logic_error when
/// the entry does not exist, which on a DP path means a logic defect.
SubwordRef wx_lookup(const WxTable& table, const SubwordRef& s, Symbol x);

}  // namespace unlabelled
