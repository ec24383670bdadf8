#ifndef SSMASS_MASSFML_HPP
#define SSMASS_MASSFML_HPP

#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ssmass/common.hpp"
#include "ssmass/fingrp.hpp"
#include "ssmass/numfield.hpp"
#include "ssmass/quatalg.hpp"

namespace ssmass::massfml {

/// Externally supplied ζ_F(1-2i), keyed by (field discriminant, i).
class ZetaTable {
 public:
  /// Lines "D<TAB>i<TAB>num/den"; blank lines and lines starting with '#'
  /// are skipped. Throws InvalidInput naming the offending line.
  static ZetaTable parse(std::istream& in);
  static ZetaTable load(const std::string& path);

  void insert(long discriminant, unsigned i, const Rational& value);
  const Rational* find(long discriminant, unsigned i) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::pair<long, unsigned>, Rational> entries_;
};

/// ζ_F(1-2i). Degree <= 2 is computed in-library; a table entry for such a
/// field must agree with it (InternalConsistencyError otherwise). Table
/// values only take over for fields the library cannot evaluate.
Rational resolve_zeta(const numfield::FieldSpec& field, unsigned i, const ZetaTable* table);

enum class LocalRole {
  classical,     // p^i + (-1)^i in the Q formula
  discriminant,  // N(v)^i + (-1)^i for v | Δ
  unramified_p,  // N(v)^i + 1 for v | p, v not dividing Δ'
};

struct LocalFactor {
  numfield::PlaceData place;
  unsigned i = 1;
  LocalRole role = LocalRole::classical;
  Integer value;
};

struct ZetaFactor {
  unsigned i = 1;
  Rational value;
};

/// A mass value with the product it came from: sign / 2^two_power times
/// the zeta factors times the local factors.
struct ExactMass {
  Rational value;
  int sign = 1;
  unsigned two_power = 0;
  std::vector<ZetaFactor> zeta;
  std::vector<LocalFactor> local;

  Rational product_of_factors() const;
  std::string factored_string() const;
};

struct PointCount {
  long level = 0;
  fingrp::GroupOrder group_order;
  ExactMass mass;
  Integer count;
};

/// ((-1)^(g(g+1)/2) / 2^g) prod ζ(1-2i) prod (p^i + (-1)^i).
ExactMass mass_classical(int g, long p);

/// Mass of superspecial principally polarized abelian O_B-varieties.
ExactMass mass_quaternionic(const numfield::FieldSpec& field,
                            const quatalg::QuaternionRamification& algebra, long p, int m,
                            const ZetaTable* zeta = nullptr);

/// Mass of the quaternion-Hermitian unitary group of a totally definite D.
ExactMass mass_shimura(const numfield::FieldSpec& field,
                       const quatalg::QuaternionRamification& definite, int m,
                       const ZetaTable* zeta = nullptr);

struct DecompositionReport {
  bool holds = false;
  quatalg::QuaternionRamification twisted;
  ExactMass quaternionic;
  ExactMass shimura;
  fingrp::GroupOrder local_index;
};

/// Exact check of Mass(Λ) = Mass(G', U_0) · μ.
DecompositionReport mass_decomposition_check(const numfield::FieldSpec& field,
                                             const quatalg::QuaternionRamification& algebra,
                                             long p, int m, const ZetaTable* zeta = nullptr);

/// |G_1(Z/NZ)| times the quaternionic mass. Every prime dividing N must be
/// split in the algebra. Throws InternalConsistencyError if the product is
/// not a positive integer.
PointCount superspecial_point_count(const numfield::FieldSpec& field,
                                    const quatalg::QuaternionRamification& algebra, long p,
                                    int m, long level, const ZetaTable* zeta = nullptr);

}  // namespace ssmass::massfml

#endif  // SSMASS_MASSFML_HPP
