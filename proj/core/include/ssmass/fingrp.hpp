#ifndef SSMASS_FINGRP_HPP
#define SSMASS_FINGRP_HPP

#include <optional>
#include <string>
#include <vector>

#include "ssmass/common.hpp"
#include "ssmass/numfield.hpp"

namespace ssmass::fingrp {

/// One factor base^exponent + offset, with offset in {-1, 0, +1}.
struct OrderFactor {
  Integer base;
  unsigned long exponent = 1;
  int offset = 0;

  Integer value() const;
};

/// A group order together with the product shape it was assembled from.
struct GroupOrder {
  Integer value{1};
  std::vector<OrderFactor> factors;

  /// Product of the factored form; equals `value` by construction.
  Integer product_of_factors() const;
  std::string factored_string() const;

  void multiply(const OrderFactor& factor);
  void multiply(const GroupOrder& other);
};

/// |Sp_2m(F_q)| = q^(m^2) prod_{i=1}^m (q^(2i) - 1)
GroupOrder sp_order(int m, long q);

/// |GL_m(F_q)| = prod_{i=0}^{m-1} (q^m - q^i), presented as
/// q^(m(m-1)/2) prod_{i=1}^m (q^i - 1).
GroupOrder gl_order(int m, long q);

/// Stabilizer of a maximal isotropic subspace: q^(m^2) prod_{i=1}^m (q^i - 1).
GroupOrder siegel_parabolic_order(int m, long q);

/// Number of maximal isotropic subspaces: prod_{i=1}^m (q^i + 1).
GroupOrder isotropic_coset_count(int m, long q);

/// prod over v | p with v not dividing Δ' of prod_{i=1}^m (q_v^i + 1).
GroupOrder local_index(const numfield::FieldSpec& field, long p,
                       const std::vector<numfield::PlaceData>& delta_prime, int m);

/// |Sp_2m(O_F / N O_F)|, lifting each residue-field order through the
/// smooth group scheme of dimension m(2m+1). When `p` is given, N must be
/// prime to it.
GroupOrder sp_order_mod_N(int m, const numfield::FieldSpec& field, long n,
                          std::optional<long> p = std::nullopt);

/// (prime, exponent) pairs of n >= 1 in increasing prime order.
std::vector<std::pair<long, int>> factorize(long n);

}  // namespace ssmass::fingrp

#endif  // SSMASS_FINGRP_HPP
