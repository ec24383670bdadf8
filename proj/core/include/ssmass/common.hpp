#ifndef SSMASS_COMMON_HPP
#define SSMASS_COMMON_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ssmass {

// Arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (lowest terms, positive denominator) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller supplied something outside an operation's domain.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Quaternion ramification data violating reciprocity or referring to a
/// non-existent place.
class InvalidAlgebra : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A well-formed input the implementation deliberately does not handle.
class UnsupportedInput : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An identity that must hold on every valid input failed; indicates a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A numeric series did not reach its tolerance inside the term budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

Rational make_rational(long num, long den = 1);

/// "n/d", or "n" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "n/d" or "n"; the result is canonicalized.
Rational parse_rational(const std::string& text);

bool is_prime(long n);
bool is_prime_power(long n, long* base = nullptr, int* exponent = nullptr);
Integer ipow(const Integer& base, unsigned long exponent);
long gcd(long a, long b);

}  // namespace ssmass

#endif  // SSMASS_COMMON_HPP
