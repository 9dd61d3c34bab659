#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fillscope {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }

// Canonical "p" or "p/q" form.
std::string to_string(const Rational& value);

// Accepts an optional sign followed by decimal digits; throws
// std::invalid_argument otherwise.
Integer parse_integer(std::string_view text);

// Accepts "p", "p/q" or a terminating decimal such as "0.5".
Rational parse_rational(std::string_view text);

inline Integer floor_of(const Rational& value) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

inline Integer ceil_of(const Rational& value) {
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace fillscope
