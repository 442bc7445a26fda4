#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace hgg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds p/q in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Bit length of the larger of numerator/denominator.
std::size_t bit_size(const Rational& q);

}  // namespace hgg
