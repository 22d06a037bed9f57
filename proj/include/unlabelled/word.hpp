#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unlabelled {

using Symbol = std::uint8_t;

/// A finite binary word. Positions are 0-based internally; the 1-based
/// accessors (`subword`) document their offset mapping.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols);

    /// Parses a string of '0'/'1' characters. Throws std::invalid_argument on
    /// any other character or on empty input.
    static Word parse(std::string_view text);

    /// The word whose symbols are the binary digits of `value`, most
    /// significant first, padded to `length`.
    static Word from_bits(std::uint64_t value, std::size_t length);
    static Word repeat(Symbol s, std::size_t length);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    /// Value of the word read as a binary number (requires size() <= 64).
    std::uint64_t to_bits() const;
    std::string str() const;

    Word operator+(const Word& rhs) const;
    void push_back(Symbol s) { symbols_.push_back(s); }

    /// Plain lexicographic order; a proper prefix is smaller.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) = default;
    friend bool operator==(const Word& a, const Word& b) = default;

private:
    std::vector<Symbol> symbols_;
};

// Order -------------------------------------------------------------------

/// Cross-length order: equal lengths compare lexicographically; otherwise
/// u^{|v|} is compared with v^{|u|}, and exact equality of those powers makes
/// the shorter word the smaller one.
bool lex_less(const Word& u, const Word& v);

/// Compares the infinite periodic words u^inf and v^inf. Both must be
/// nonempty. By Fine and Wilf the first |u| + |v| symbols decide.
std::strong_ordering compare_infinite(const Word& u, const Word& v);

// Transformations -----------------------------------------------------------

/// Cyclic left shift by r (r is reduced mod |w|; 0 is the identity).
Word rotate(const Word& w, std::size_t r);
/// w repeated k times.
Word power(const Word& w, std::size_t k);
Word complement(const Word& w);
/// Least rotation (Booth's algorithm).
Word canonical(const Word& w);
/// min(canonical(w), canonical(complement(w))).
Word canonical_unlabelled(const Word& w);
/// Index r in [0, n) such that rotate(w, r) == canonical(w) (smallest such r).
std::size_t least_rotation_index(const Word& w);

// Structure -----------------------------------------------------------------

/// Length of the primitive root of w.
std::size_t period(const Word& w);
/// Cyclic slice of length `length` starting at 1-based position `start`.
/// Throws std::out_of_range unless 1 <= start <= n and 1 <= length <= n.
Word subword(const Word& w, std::size_t start, std::size_t length);
/// Same as `subword` but 0-based and allowing length 0; no range checks
/// beyond length <= n.
Word cyclic_slice(const Word& w, std::size_t start0, std::size_t length);

bool is_necklace(const Word& w);
bool is_lyndon(const Word& w);
/// Smallest r in [1, n] with rotate(w, r) == complement(w), if any. When it
/// exists, period(w) == 2r.
std::optional<std::size_t> min_antisymmetry_rotation(const Word& w);

/// True iff w_i == S(w_{i+r mod n}) for every i.
bool is_antiperiodic(const Word& w, std::size_t r);

}  // namespace unlabelled
