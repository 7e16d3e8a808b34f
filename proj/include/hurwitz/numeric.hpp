#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

// Bad input: malformed spec, inconsistent sizes, unsupported parameters.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured size limit would be exceeded.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient requested outside the known window of a truncated object.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Caller supplied too little data for the requested operation.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

Integer factorial(long n);
Integer binomial(long n, long k);
Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, long e);

// "num/den", or plain "num" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

inline Rational make_rational(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace hurwitz
