#ifndef SSMASS_NUMFIELD_HPP
#define SSMASS_NUMFIELD_HPP

#include <compare>
#include <string>
#include <vector>

#include "ssmass/common.hpp"

namespace ssmass::numfield {

enum class FieldKind { rational, real_quadratic };

/// A totally real base field: Q, or Q(sqrt D) for a fundamental
/// discriminant D > 1.
class FieldSpec {
 public:
  static FieldSpec rational();
  /// Throws InvalidInput unless `discriminant` is a fundamental
  /// discriminant greater than 1.
  static FieldSpec real_quadratic(long discriminant);
  /// Accepts "Q" or "Q(sqrt:D)".
  static FieldSpec parse(const std::string& text);

  FieldKind kind() const { return kind_; }
  long discriminant() const { return discriminant_; }
  int degree() const { return kind_ == FieldKind::rational ? 1 : 2; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, long disc) : kind_(kind), discriminant_(disc) {}

  FieldKind kind_;
  long discriminant_;
};

/// A finite place v above a rational prime. `index` is the position of v
/// in places_above(field, residue_char), which tells apart the two places
/// of a split prime.
struct PlaceData {
  long residue_char = 0;
  int ram_index = 1;
  int residue_degree = 1;
  long residue_size = 0;
  int index = 0;

  friend auto operator<=>(const PlaceData&, const PlaceData&) = default;
};

std::string to_string(const PlaceData& v);

bool is_fundamental_discriminant(long d);

/// Kronecker symbol (D/n) for n >= 1, extended multiplicatively, with the
/// supplement (D/2) = 0, +1, -1 for D even, D = +-1 mod 8, D = +-3 mod 8.
int kronecker_symbol(long d, long n);

/// Decomposition of p in `field`, sorted by (e, f) and then index.
std::vector<PlaceData> places_above(const FieldSpec& field, long p);

bool is_unramified(const FieldSpec& field, long p);

}  // namespace ssmass::numfield

#endif  // SSMASS_NUMFIELD_HPP
