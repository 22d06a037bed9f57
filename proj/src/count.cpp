#include "unlabelled/count.hpp"

#include <atomic>

namespace unlabelled {

Count pow2(std::size_t exponent) {
    Count one = 1;
    return one << exponent;
}

Count exact_div(const Count& numerator, const Count& denominator, const char* what) {
    if (denominator == 0) throw ConventionError(std::string(what) + ": division by zero");
    Count q = numerator / denominator;
    if (q * denominator != numerator) {
        throw ConventionError(std::string(what) + ": inexact division " + numerator.str() + " / " +
                              denominator.str());
    }
    return q;
}

namespace {
std::atomic<bool> mobius_fault{false};
}  // namespace

namespace fault {
void flip_mobius_sign(bool enabled) { mobius_fault = enabled; }
}  // namespace fault

namespace arith {

std::vector<std::size_t> divisors(std::size_t n) {
    std::vector<std::size_t> small;
    std::vector<std::size_t> large;
    for (std::size_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int mobius(std::size_t n) {
    if (n == 0) throw std::invalid_argument("mobius(0)");
    const int sign = (mobius_fault && n > 1) ? -1 : 1;
    int result = sign;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::size_t totient(std::size_t n) {
    std::size_t result = n;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace arith
}  // namespace unlabelled
