#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hodgerep {

using Rational = mpq_class;
using BigInt = mpz_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v);

/// Accepts "p", "-p" and "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// n/d in lowest terms. The two-argument mpq_class constructor does not reduce.
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Exact inverse by Gauss-Jordan elimination; throws DomainError when singular.
RationalMatrix invert(const RationalMatrix& m);

}  // namespace hodgerep
