#pragma once

// Exact arithmetic foundation: arbitrary-precision rationals (GMP via
// boost::multiprecision).  Values are always canonical: lowest terms,
// denominator > 0, unique zero.  mpq_rational maintains this automatically.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace genmat {

using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer num(const Rational& r) { return numerator(r); }
inline Integer den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// Serialization form used everywhere (reports, cache files): "p" for
// integers, "p/q" otherwise, '-' on the numerator.
inline std::string rat_str(const Rational& r) { return r.str(); }

inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  }
}

// Errors with distinct types so callers/tests can tell refusals apart from bugs.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a modular fast path produced a candidate that failed exact
// certification.  Never caught internally: a wrong hint must surface loudly.
struct CertificationError : std::logic_error {
  explicit CertificationError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace genmat
