#include "ssmass/numfield.hpp"

#include <algorithm>
#include <cstdlib>

#include "ssmass/common.hpp"

namespace ssmass::numfield {

namespace {

bool squarefree(long n) {
  n = std::labs(n);
  for (long d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long powmod(long b, long e, long m) {
  Integer r;
  Integer base = mod(b, m), exponent = e, modulus = m;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return r.get_si();
}

int kronecker_prime(long d, long p) {
  if (p == 2) {
    if (d % 2 == 0) return 0;
    long r = mod(d, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  long a = mod(d, p);
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

FieldSpec FieldSpec::rational() { return FieldSpec(FieldKind::rational, 1); }

FieldSpec FieldSpec::real_quadratic(long discriminant) {
  if (discriminant <= 1 || !is_fundamental_discriminant(discriminant))
    throw InvalidInput("not a fundamental discriminant of a real quadratic field: " +
                       std::to_string(discriminant));
  return FieldSpec(FieldKind::real_quadratic, discriminant);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q") return rational();
  const std::string prefix = "Q(sqrt:";
  if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 &&
      text.back() == ')') {
    std::string digits = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() < 12) {
      return real_quadratic(std::stol(digits));
    }
  }
  throw InvalidInput("field must be 'Q' or 'Q(sqrt:D)', got '" + text + "'");
}

std::string FieldSpec::to_string() const {
  if (kind_ == FieldKind::rational) return "Q";
  return "Q(sqrt:" + std::to_string(discriminant_) + ")";
}

std::string to_string(const PlaceData& v) {
  return "(p=" + std::to_string(v.residue_char) + ",e=" + std::to_string(v.ram_index) +
         ",f=" + std::to_string(v.residue_degree) + ",q=" + std::to_string(v.residue_size) +
         ",idx=" + std::to_string(v.index) + ")";
}

bool is_fundamental_discriminant(long d) {
  if (d == 1) return true;
  if (d == 0) return false;
  if (mod(d, 4) == 1) return squarefree(d);
  if (mod(d, 4) != 0) return false;
  long m = d / 4;
  long r = mod(m, 4);
  return (r == 2 || r == 3) && squarefree(m);
}

int kronecker_symbol(long d, long n) {
  if (n <= 0) throw InvalidInput("kronecker_symbol expects n >= 1");
  int result = 1;
  long rest = n;
  for (long q = 2; q * q <= rest; ++q) {
    while (rest % q == 0) {
      result *= kronecker_prime(d, q);
      rest /= q;
    }
  }
  if (rest > 1) result *= kronecker_prime(d, rest);
  return result;
}

std::vector<PlaceData> places_above(const FieldSpec& field, long p) {
  if (!is_prime(p)) throw InvalidInput("not a prime: " + std::to_string(p));
  std::vector<PlaceData> out;
  if (field.kind() == FieldKind::rational) {
    out.push_back({p, 1, 1, p, 0});
    return out;
  }
  switch (kronecker_symbol(field.discriminant(), p)) {
    case 1:
      out.push_back({p, 1, 1, p, 0});
      out.push_back({p, 1, 1, p, 1});
      break;
    case -1:
      out.push_back({p, 1, 2, p * p, 0});
      break;
    default:
      out.push_back({p, 2, 1, p, 0});
      break;
  }
  return out;
}

bool is_unramified(const FieldSpec& field, long p) { return field.discriminant() % p != 0; }

}  // namespace ssmass::numfield
