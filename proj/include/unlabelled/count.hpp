#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace unlabelled {

/// Exact arbitrary-precision count. Signed so Möbius sums can pass through
/// negative intermediates; every published value is nonnegative.
using Count = boost::multiprecision::cpp_int;

/// Raised when an exact division in a Möbius chain leaves a remainder, or a
/// decomposition identity fails. Either indicates a convention error, never a
/// user error.
class ConventionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline std::string to_string(const Count& c) { return c.str(); }

Count pow2(std::size_t exponent);

/// Divides exactly or throws ConventionError naming `what`.
Count exact_div(const Count& numerator, const Count& denominator, const char* what);

namespace arith {

std::vector<std::size_t> divisors(std::size_t n);
int mobius(std::size_t n);
std::size_t totient(std::size_t n);

}  // namespace arith

namespace fault {

/// Test hook: when set, arith::mobius returns the negated value for n > 1.
/// Used to check that verification reports a broken inversion.
void flip_mobius_sign(bool enabled);

}  // namespace fault
}  // namespace unlabelled
