#ifndef SSMASS_WITT_RING_HPP
#define SSMASS_WITT_RING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ssmass::dieudonne {

inline constexpr int kMaxRingDegree = 8;

/// Element of (Z/p^2)[x]/(h~), coefficients in [0, p^2).
struct RingElem {
  std::array<std::int32_t, kMaxRingDegree> c{};

  friend bool operator==(const RingElem&, const RingElem&) = default;
};

/// xorshift64* generator; the output stream depends only on the seed.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed)
      : state_(seed == 0 ? 0x9E3779B97F4A7C15ull : seed) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

 private:
  std::uint64_t state_;
};

/// Witt vectors of F_{p^n} truncated at length 2, realised as the Galois
/// ring (Z/p^2)[x]/(h~) where h~ lifts the first irreducible h of degree n
/// over F_p. `frobenius` is the automorphism with σ(x) ≡ x^p mod p and
/// h~(σ(x)) = 0.
class TruncWittRing {
 public:
  /// Requires p prime, 1 <= n <= kMaxRingDegree and p^(2n) small enough
  /// for exhaustive residue searches (p^n <= 390625).
  static TruncWittRing build(long p, int degree);

  long p() const { return p_; }
  long modulus() const { return mod_; }
  int degree() const { return n_; }
  /// Monic h~, lowest coefficient first; size degree()+1.
  const std::vector<std::int32_t>& defining_polynomial() const { return h_; }
  RingElem frobenius_of_generator() const { return sigma_x_; }

  RingElem zero() const { return {}; }
  RingElem one() const { return from_int(1); }
  RingElem from_int(long v) const;
  RingElem generator() const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem scale(const RingElem& a, long k) const;
  RingElem pow(RingElem a, std::uint64_t e) const;

  /// σ^k; negative k allowed.
  RingElem frobenius(const RingElem& a, int k = 1) const;

  bool is_zero(const RingElem& a) const { return a == RingElem{}; }
  /// 0 for units, 1 for nonzero multiples of p, 2 for zero.
  int valuation(const RingElem& a) const;
  bool is_unit(const RingElem& a) const { return valuation(a) == 0; }
  RingElem inverse(const RingElem& a) const;
  /// a/p for a divisible by p; the representative has coefficients in [0, p).
  RingElem divide_by_p(const RingElem& a) const;
  /// Coefficients reduced to [0, p): the Teichmüller-free residue lift.
  RingElem residue(const RingElem& a) const;
  bool congruent_mod_p(const RingElem& a, const RingElem& b) const;

  /// Every element with coefficients in [0, p), in lexicographic order of
  /// the coefficient vector (constant term varying fastest).
  std::vector<RingElem> residue_representatives() const;
  RingElem random(Xorshift64Star& rng) const;

  std::string to_string(const RingElem& a) const;
  std::string polynomial_string() const;

 private:
  TruncWittRing() = default;
  std::int32_t norm(long v) const;
  RingElem apply_linear(const std::vector<RingElem>& images, const RingElem& a) const;

  long p_ = 2;
  long mod_ = 4;
  int n_ = 1;
  std::vector<std::int32_t> h_;
  // x^k reduced for k < 2n
  std::vector<RingElem> xpow_;
  RingElem sigma_x_;
  // frob_images_[k][j] = σ^k(x^j), k in [0, n)
  std::vector<std::vector<RingElem>> frob_images_;
};

/// The lexicographically first monic irreducible polynomial of degree n over
/// F_p (constant coefficient varying fastest), lowest coefficient first.
std::vector<std::int32_t> first_irreducible(long p, int degree);

}  // namespace ssmass::dieudonne

#endif  // SSMASS_WITT_RING_HPP
