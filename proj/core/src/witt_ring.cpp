#include "ssmass/witt_ring.hpp"

#include "ssmass/common.hpp"

namespace ssmass::dieudonne {

namespace {

using Poly = std::vector<long>;  // over F_p, lowest coefficient first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_rem(Poly a, const Poly& b, long p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    long lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] = ((a[shift + k] - lead * b[k]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly monic_from_index(long index, int degree, long p) {
  Poly out(static_cast<std::size_t>(degree) + 1, 0);
  for (int k = 0; k < degree; ++k) {
    out[k] = index % p;
    index /= p;
  }
  out[degree] = 1;
  return out;
}

bool irreducible(const Poly& h, long p) {
  const int n = static_cast<int>(h.size()) - 1;
  for (int d = 1; 2 * d <= n; ++d) {
    long count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (long idx = 0; idx < count; ++idx)
      if (poly_rem(h, monic_from_index(idx, d, p), p).empty()) return false;
  }
  return true;
}

}  // namespace

std::vector<std::int32_t> first_irreducible(long p, int degree) {
  if (!is_prime(p) || degree < 1) throw InvalidInput("first_irreducible: bad (p, degree)");
  long count = 1;
  for (int k = 0; k < degree; ++k) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    Poly h = monic_from_index(idx, degree, p);
    if (irreducible(h, p)) return std::vector<std::int32_t>(h.begin(), h.end());
  }
  throw InternalConsistencyError("no irreducible polynomial found");
}

std::int32_t TruncWittRing::norm(long v) const {
  long r = v % mod_;
  return static_cast<std::int32_t>(r < 0 ? r + mod_ : r);
}

TruncWittRing TruncWittRing::build(long p, int degree) {
  if (!is_prime(p)) throw InvalidInput("Witt ring needs a prime p, got " + std::to_string(p));
  if (degree < 1 || degree > kMaxRingDegree)
    throw InvalidInput("Witt ring degree must be in [1, " + std::to_string(kMaxRingDegree) + "]");
  long size = 1;
  for (int k = 0; k < degree; ++k) {
    size *= p;
    if (size > 390625) throw InvalidInput("residue field p^n too large for desk-scale search");
  }

  TruncWittRing r;
  r.p_ = p;
  r.mod_ = p * p;
  r.n_ = degree;
  r.h_ = first_irreducible(p, degree);

  // x^k for k < 2n, reduced modulo the monic lift h~.
  const int n = degree;
  r.xpow_.resize(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    RingElem e;
    e.c[k] = 1;
    r.xpow_[k] = e;
  }
  if (n >= 1) {
    RingElem xn;
    for (int k = 0; k < n; ++k) xn.c[k] = r.norm(-r.h_[k]);
    r.xpow_[n] = xn;
    for (int k = n + 1; k < 2 * n; ++k) {
      // x * x^(k-1)
      const RingElem& prev = r.xpow_[k - 1];
      RingElem next;
      for (int j = 0; j + 1 < n; ++j) next.c[j + 1] = prev.c[j];
      long top = prev.c[n - 1];
      for (int j = 0; j < n; ++j) next.c[j] = r.norm(next.c[j] + top * xn.c[j]);
      r.xpow_[k] = next;
    }
  }

  // σ(x): one Newton step from x^p reaches the root of h~ mod p^2,
  // since h~(x^p) ≡ h(x)^p ≡ 0 mod p.
  RingElem y = r.pow(r.generator(), static_cast<std::uint64_t>(p));
  auto eval = [&](const std::vector<std::int32_t>& coeffs, const RingElem& at) {
    RingElem acc;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = r.add(r.mul(acc, at), r.from_int(coeffs[k]));
    return acc;
  };
  std::vector<std::int32_t> dh(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) dh[k - 1] = r.norm(static_cast<long>(k) * r.h_[k]);
  RingElem hy = eval(r.h_, y);
  if (r.valuation(hy) < 1)
    throw InternalConsistencyError("h~(x^p) is not divisible by p");
  y = r.sub(y, r.mul(hy, r.inverse(eval(dh, y))));
  if (!r.is_zero(eval(r.h_, y))) throw InternalConsistencyError("Hensel lift of x^p failed");
  r.sigma_x_ = y;

  // Images of the monomial basis under σ^k.
  r.frob_images_.assign(static_cast<std::size_t>(n), {});
  RingElem xk = r.generator();
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      // substitute x -> σ(x) into the polynomial xk
      RingElem acc;
      for (int j = n; j-- > 0;) {
        RingElem cst;
        cst.c[0] = xk.c[j];
        acc = r.add(r.mul(acc, r.sigma_x_), cst);
      }
      xk = acc;
    }
    std::vector<RingElem> images(static_cast<std::size_t>(n));
    RingElem power = r.one();
    for (int j = 0; j < n; ++j) {
      images[j] = power;
      power = r.mul(power, xk);
    }
    r.frob_images_[k] = std::move(images);
  }
  return r;
}

RingElem TruncWittRing::from_int(long v) const {
  RingElem e;
  e.c[0] = norm(v);
  return e;
}

RingElem TruncWittRing::generator() const {
  if (n_ == 1) return from_int(-h_[0]);
  RingElem e;
  e.c[1] = 1;
  return e;
}

RingElem TruncWittRing::add(const RingElem& a, const RingElem& b) const {
  RingElem out;
  for (int k = 0; k < n_; ++k) out.c[k] = norm(static_cast<long>(a.c[k]) + b.c[k]);
  return out;
}

RingElem TruncWittRing::sub(const RingElem& a, const RingElem& b) const {
  RingElem out;
  for (int k = 0; k < n_; ++k) out.c[k] = norm(static_cast<long>(a.c[k]) - b.c[k]);
  return out;
}

RingElem TruncWittRing::neg(const RingElem& a) const {
  RingElem out;
  for (int k = 0; k < n_; ++k) out.c[k] = norm(-static_cast<long>(a.c[k]));
  return out;
}

RingElem TruncWittRing::scale(const RingElem& a, long k) const {
  RingElem out;
  for (int j = 0; j < n_; ++j) out.c[j] = norm(static_cast<long>(a.c[j]) * norm(k));
  return out;
}

RingElem TruncWittRing::mul(const RingElem& a, const RingElem& b) const {
  std::array<long, 2 * kMaxRingDegree> prod{};
  for (int i = 0; i < n_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < n_; ++j) prod[i + j] += static_cast<long>(a.c[i]) * b.c[j];
  }
  RingElem out;
  for (int k = 0; k < 2 * n_ - 1; ++k) {
    long coeff = prod[k] % mod_;
    if (coeff == 0) continue;
    const RingElem& xk = xpow_[k];
    for (int j = 0; j < n_; ++j) out.c[j] = norm(out.c[j] + coeff * xk.c[j]);
  }
  return out;
}

RingElem TruncWittRing::pow(RingElem a, std::uint64_t e) const {
  RingElem out = one();
  while (e > 0) {
    if (e & 1) out = mul(out, a);
    a = mul(a, a);
    e >>= 1;
  }
  return out;
}

RingElem TruncWittRing::apply_linear(const std::vector<RingElem>& images, const RingElem& a) const {
  RingElem out;
  for (int j = 0; j < n_; ++j) {
    if (a.c[j] == 0) continue;
    for (int k = 0; k < n_; ++k)
      out.c[k] = norm(out.c[k] + static_cast<long>(a.c[j]) * images[j].c[k]);
  }
  return out;
}

RingElem TruncWittRing::frobenius(const RingElem& a, int k) const {
  int s = ((k % n_) + n_) % n_;
  if (s == 0) return a;
  return apply_linear(frob_images_[s], a);
}

int TruncWittRing::valuation(const RingElem& a) const {
  bool zero = true;
  for (int k = 0; k < n_; ++k) {
    if (a.c[k] % p_ != 0) return 0;
    if (a.c[k] != 0) zero = false;
  }
  return zero ? 2 : 1;
}

RingElem TruncWittRing::inverse(const RingElem& a) const {
  if (!is_unit(a)) throw InvalidInput("inverse of a non-unit " + to_string(a));
  // |R^x| = (p^n - 1) p^n
  std::uint64_t q = 1;
  for (int k = 0; k < n_; ++k) q *= static_cast<std::uint64_t>(p_);
  return pow(a, (q - 1) * q - 1);
}

RingElem TruncWittRing::divide_by_p(const RingElem& a) const {
  RingElem out;
  for (int k = 0; k < n_; ++k) {
    if (a.c[k] % p_ != 0) throw InvalidInput("divide_by_p of a unit " + to_string(a));
    out.c[k] = static_cast<std::int32_t>(a.c[k] / p_);
  }
  return out;
}

RingElem TruncWittRing::residue(const RingElem& a) const {
  RingElem out;
  for (int k = 0; k < n_; ++k) out.c[k] = static_cast<std::int32_t>(a.c[k] % p_);
  return out;
}

bool TruncWittRing::congruent_mod_p(const RingElem& a, const RingElem& b) const {
  return valuation(sub(a, b)) >= 1;
}

std::vector<RingElem> TruncWittRing::residue_representatives() const {
  long count = 1;
  for (int k = 0; k < n_; ++k) count *= p_;
  std::vector<RingElem> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long idx = 0; idx < count; ++idx) {
    RingElem e;
    long rest = idx;
    for (int k = 0; k < n_; ++k) {
      e.c[k] = static_cast<std::int32_t>(rest % p_);
      rest /= p_;
    }
    out.push_back(e);
  }
  return out;
}

RingElem TruncWittRing::random(Xorshift64Star& rng) const {
  RingElem e;
  for (int k = 0; k < n_; ++k)
    e.c[k] = static_cast<std::int32_t>(rng.next() % static_cast<std::uint64_t>(mod_));
  return e;
}

std::string TruncWittRing::to_string(const RingElem& a) const {
  std::string out;
  for (int k = n_; k-- > 0;) {
    if (a.c[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0 || a.c[k] != 1) out += std::to_string(a.c[k]);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string TruncWittRing::polynomial_string() const {
  std::string out;
  for (int k = n_; k >= 0; --k) {
    if (h_[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0 || h_[k] != 1) out += std::to_string(h_[k]);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace ssmass::dieudonne
