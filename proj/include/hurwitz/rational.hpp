#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hurwitz/errors.hpp"

namespace hurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// num/den in lowest terms.
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionViolation("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "p/q" for non-integers, "p" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw ParseError("invalid rational literal '" + s + "'");
  }
  q.canonicalize();
  return q;
}

inline Rational pow(const Rational& base, unsigned e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

}  // namespace hurwitz
