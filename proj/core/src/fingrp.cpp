#include "ssmass/fingrp.hpp"

namespace ssmass::fingrp {

namespace {

void require_m(int m) {
  if (m < 1) throw InvalidInput("rank m must be >= 1, got " + std::to_string(m));
}

void require_prime_power(long q) {
  if (!is_prime_power(q))
    throw InvalidInput("q must be a prime power, got " + std::to_string(q));
}

}  // namespace

Integer OrderFactor::value() const { return ipow(base, exponent) + offset; }

Integer GroupOrder::product_of_factors() const {
  Integer out(1);
  for (const auto& f : factors) out *= f.value();
  return out;
}

std::string GroupOrder::factored_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " * ";
    std::string term = f.base.get_str();
    if (f.exponent != 1) term += "^" + std::to_string(f.exponent);
    if (f.offset == 0) {
      out += term;
    } else {
      out += "(" + term + (f.offset > 0 ? "+" : "-") + std::to_string(std::abs(f.offset)) + ")";
    }
  }
  return out;
}

void GroupOrder::multiply(const OrderFactor& factor) {
  value *= factor.value();
  factors.push_back(factor);
}

void GroupOrder::multiply(const GroupOrder& other) {
  value *= other.value;
  factors.insert(factors.end(), other.factors.begin(), other.factors.end());
}

GroupOrder sp_order(int m, long q) {
  require_m(m);
  require_prime_power(q);
  GroupOrder out;
  out.multiply({Integer(q), static_cast<unsigned long>(m) * m, 0});
  for (int i = 1; i <= m; ++i) out.multiply({Integer(q), 2ul * i, -1});
  return out;
}

GroupOrder gl_order(int m, long q) {
  require_m(m);
  require_prime_power(q);
  GroupOrder out;
  unsigned long e = static_cast<unsigned long>(m) * (m - 1) / 2;
  if (e > 0) out.multiply({Integer(q), e, 0});
  for (int i = 1; i <= m; ++i) out.multiply({Integer(q), static_cast<unsigned long>(i), -1});
  return out;
}

GroupOrder siegel_parabolic_order(int m, long q) {
  require_m(m);
  require_prime_power(q);
  // q^((m^2+m)/2) |GL_m(F_q)|
  GroupOrder out;
  out.multiply({Integer(q), static_cast<unsigned long>(m) * m, 0});
  for (int i = 1; i <= m; ++i) out.multiply({Integer(q), static_cast<unsigned long>(i), -1});
  return out;
}

GroupOrder isotropic_coset_count(int m, long q) {
  require_m(m);
  require_prime_power(q);
  GroupOrder out;
  for (int i = 1; i <= m; ++i) out.multiply({Integer(q), static_cast<unsigned long>(i), 1});
  return out;
}

GroupOrder local_index(const numfield::FieldSpec& field, long p,
                       const std::vector<numfield::PlaceData>& delta_prime, int m) {
  require_m(m);
  if (!is_prime(p)) throw InvalidInput("p must be prime, got " + std::to_string(p));
  if (!numfield::is_unramified(field, p))
    throw InvalidInput("p = " + std::to_string(p) + " ramifies in " + field.to_string());
  GroupOrder out;
  for (const auto& v : numfield::places_above(field, p)) {
    bool in_delta = false;
    for (const auto& w : delta_prime) in_delta = in_delta || w == v;
    if (in_delta) continue;
    for (int i = 1; i <= m; ++i)
      out.multiply({Integer(v.residue_size), static_cast<unsigned long>(i), 1});
  }
  return out;
}

std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw InvalidInput("factorize expects n >= 1");
  std::vector<std::pair<long, int>> out;
  for (long d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

GroupOrder sp_order_mod_N(int m, const numfield::FieldSpec& field, long n, std::optional<long> p) {
  require_m(m);
  if (n < 3) throw InvalidInput("level N must be >= 3, got " + std::to_string(n));
  if (p && gcd(n, *p) != 1)
    throw InvalidInput("level N = " + std::to_string(n) + " is not prime to p = " +
                       std::to_string(*p));
  const unsigned long dim = static_cast<unsigned long>(m) * (2 * m + 1);
  GroupOrder out;
  for (const auto& [ell, k] : factorize(n)) {
    for (const auto& v : numfield::places_above(field, ell)) {
      out.multiply(sp_order(m, v.residue_size));
      unsigned long lift = dim * static_cast<unsigned long>(k * v.ram_index - 1);
      if (lift > 0) out.multiply({Integer(v.residue_size), lift, 0});
    }
  }
  return out;
}

}  // namespace ssmass::fingrp
