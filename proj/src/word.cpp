#include "unlabelled/word.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace unlabelled {

Word::Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    for (Symbol s : symbols_) {
        if (s > 1) throw std::invalid_argument("Word: symbol outside {0,1}");
    }
}

Word Word::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Word: empty input");
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("Word: invalid character '" + std::string(1, c) + "'");
        }
        symbols.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(std::move(symbols));
}

Word Word::from_bits(std::uint64_t value, std::size_t length) {
    std::vector<Symbol> symbols(length);
    for (std::size_t i = 0; i < length; ++i) {
        symbols[length - 1 - i] = static_cast<Symbol>((value >> i) & 1U);
    }
    return Word(std::move(symbols));
}

Word Word::repeat(Symbol s, std::size_t length) { return Word(std::vector<Symbol>(length, s)); }

std::uint64_t Word::to_bits() const {
    if (size() > 64) throw std::out_of_range("Word::to_bits: longer than 64 symbols");
    std::uint64_t value = 0;
    for (Symbol s : symbols_) value = (value << 1U) | s;
    return value;
}

std::string Word::str() const {
    std::string out;
    out.reserve(size());
    for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
    return out;
}

Word Word::operator+(const Word& rhs) const {
    std::vector<Symbol> out = symbols_;
    out.insert(out.end(), rhs.symbols_.begin(), rhs.symbols_.end());
    return Word(std::move(out));
}

bool lex_less(const Word& u, const Word& v) {
    if (u.size() == v.size()) return u < v;
    // u^{|v|} and v^{|u|} have the same length |u||v|.
    const std::size_t total = u.size() * v.size();
    for (std::size_t k = 0; k < total; ++k) {
        const Symbol a = u[k % u.size()];
        const Symbol b = v[k % v.size()];
        if (a != b) return a < b;
    }
    return u.size() < v.size();
}

std::strong_ordering compare_infinite(const Word& u, const Word& v) {
    assert(!u.empty() && !v.empty());
    const std::size_t horizon = u.size() + v.size();
    for (std::size_t k = 0; k < horizon; ++k) {
        const Symbol a = u[k % u.size()];
        const Symbol b = v[k % v.size()];
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

Word rotate(const Word& w, std::size_t r) {
    if (w.empty()) return w;
    return cyclic_slice(w, r % w.size(), w.size());
}

Word power(const Word& w, std::size_t k) {
    std::vector<Symbol> out;
    out.reserve(w.size() * k);
    for (std::size_t t = 0; t < k; ++t) out.insert(out.end(), w.symbols().begin(), w.symbols().end());
    return Word(std::move(out));
}

Word complement(const Word& w) {
    std::vector<Symbol> out(w.symbols());
    for (Symbol& s : out) s ^= 1U;
    return Word(std::move(out));
}

std::size_t least_rotation_index(const Word& w) {
    // Booth's algorithm over the doubled word.
    const std::size_t n = w.size();
    if (n == 0) return 0;
    std::vector<long> failure(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const Symbol sj = w[j % n];
        long i = failure[j - k - 1];
        while (i != -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
            i = failure[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    k %= n;
    // Booth may return any start of the least rotation; normalise to the first.
    const Word best = cyclic_slice(w, k, n);
    for (std::size_t r = 0; r < k; ++r) {
        if (cyclic_slice(w, r, n) == best) return r;
    }
    return k;
}

Word canonical(const Word& w) { return rotate(w, least_rotation_index(w)); }

Word canonical_unlabelled(const Word& w) {
    Word a = canonical(w);
    Word b = canonical(complement(w));
    return b < a ? b : a;
}

std::size_t period(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return d;
    }
    return n;
}

Word cyclic_slice(const Word& w, std::size_t start0, std::size_t length) {
    const std::size_t n = w.size();
    std::vector<Symbol> out;
    out.reserve(length);
    for (std::size_t a = 0; a < length; ++a) out.push_back(w[(start0 + a) % n]);
    return Word(std::move(out));
}

Word subword(const Word& w, std::size_t start, std::size_t length) {
    const std::size_t n = w.size();
    if (start < 1 || start > n || length < 1 || length > n) {
        throw std::out_of_range("subword: start or length outside [1, n]");
    }
    return cyclic_slice(w, start - 1, length);
}

bool is_necklace(const Word& w) { return least_rotation_index(w) == 0; }

bool is_lyndon(const Word& w) { return is_necklace(w) && period(w) == w.size(); }

bool is_antiperiodic(const Word& w, std::size_t r) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] == w[(i + r) % n]) return false;
    }
    return true;
}

std::optional<std::size_t> min_antisymmetry_rotation(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t r = 1; r <= n; ++r) {
        if (is_antiperiodic(w, r)) {
            assert(period(w) == 2 * r);
            return r;
        }
    }
    return std::nullopt;
}

}  // namespace unlabelled
