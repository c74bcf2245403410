#pragma once

#include <gmpxx.h>

#include <string>

namespace plethysm {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace plethysm
