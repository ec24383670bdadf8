#ifndef SSMASS_QUATALG_HPP
#define SSMASS_QUATALG_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ssmass/numfield.hpp"

namespace ssmass::quatalg {

/// (rational prime p, index into places_above(field, p))
using FinitePlaceRef = std::pair<long, int>;

/// A quaternion algebra over F, known only through where it ramifies.
/// Local invariants live in Z/2, so combining algebras is symmetric
/// difference of ramification sets.
struct QuaternionRamification {
  numfield::FieldSpec field = numfield::FieldSpec::rational();
  std::set<FinitePlaceRef> ramified_finite;
  std::set<int> ramified_infinite;

  static QuaternionRamification split(const numfield::FieldSpec& field);
  /// B_{p,∞} over Q.
  static QuaternionRamification definite_over_q(long p);

  /// Parses "split" or a comma list of "p:idx" and "inf:k" markers.
  /// Checks place references but not reciprocity.
  static QuaternionRamification parse(const numfield::FieldSpec& field, const std::string& spec);

  std::string to_string() const;

  friend bool operator==(const QuaternionRamification&,
                         const QuaternionRamification&) = default;
};

struct ValidationReport {
  bool valid = false;
  bool totally_indefinite = false;
  bool totally_definite = false;
  std::vector<std::string> diagnostics;
};

ValidationReport validate(const QuaternionRamification& algebra);

/// Throws InvalidAlgebra carrying the diagnostics when validate() fails.
void require_valid(const QuaternionRamification& algebra);

/// Adds the local invariants of B_{p,∞} ⊗_Q F to those of `algebra`,
/// with no preconditions. Applying it twice with the same p is the identity.
QuaternionRamification tensor_with_Bp_infty(const QuaternionRamification& algebra, long p);

/// The algebra B' with inv_v(B') = inv_v(B_{p,∞} ⊗ B). Requires B totally
/// indefinite, p unramified in F, and no place above p ramified in B.
QuaternionRamification twist_by_Bp_infty(const QuaternionRamification& algebra, long p);

/// Finite ramified places, each with its (e, f, q) data, in canonical order.
std::vector<numfield::PlaceData> discriminant(const QuaternionRamification& algebra);

bool divides_discriminant(const QuaternionRamification& algebra, const numfield::PlaceData& v);

enum class GroupKind { symplectic, quaternion_unitary };

struct LocalGroupType {
  numfield::PlaceData place;
  GroupKind kind;
};

/// Sp_2m(F_v) away from the discriminant, the quaternion-unitary group of
/// B'_v at places dividing it.
LocalGroupType local_group_type(const QuaternionRamification& bprime, const numfield::PlaceData& v);

std::string to_string(GroupKind kind);

}  // namespace ssmass::quatalg

#endif  // SSMASS_QUATALG_HPP
