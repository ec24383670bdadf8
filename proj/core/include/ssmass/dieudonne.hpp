#ifndef SSMASS_DIEUDONNE_HPP
#define SSMASS_DIEUDONNE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssmass/common.hpp"
#include "ssmass/galois_matrix.hpp"
#include "ssmass/witt_ring.hpp"

namespace ssmass::dieudonne {

class NotSuperspecial : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The level-2 Witt ring of F_{p^f}; p <= 5 and f <= 4.
TruncWittRing build_witt_ring(long p, int f);

/// A Z/f-graded module M = M^0 + ... + M^{f-1}, each piece free of rank 2m
/// over `ring`, written in fixed coordinates:
///   F(x) = frob[i] · σ(x)      for x in M^i, landing in M^{i+1}
///   V(x) = ver[i] · σ^{-1}(x)  for x in M^i, landing in M^{i-1}
///   <x, y> = x^T gram[i] y     on M^i, distinct pieces orthogonal.
/// For even f the ring has degree f; for odd f it has degree 2f.
struct GradedSemilinearModule {
  std::shared_ptr<const TruncWittRing> ring;
  int f = 1;
  int m = 1;
  std::vector<Matrix> frob;
  std::vector<Matrix> ver;
  std::vector<Matrix> gram;

  const TruncWittRing& r() const { return *ring; }
  long p() const { return ring->p(); }
  int rank() const { return 2 * m; }
  int next(int i) const { return (i + 1) % f; }
  int prev(int i) const { return (i + f - 1) % f; }

  Vec apply_F(int i, const Vec& x) const;
  Vec apply_V(int i, const Vec& x) const;
  RingElem pairing(int i, const Vec& x, const Vec& y) const;
  /// Some z in M^{i+1} with V z = y, or nullopt if y is not in V M^{i+1}.
  std::optional<Vec> solve_V(int i, const Vec& y) const;
};

/// Per graded piece, columns X_1..X_m, Y_1..Y_m in module coordinates.
struct GoodBasis {
  int m = 1;
  std::vector<Matrix> grades;

  Vec x(int i, int j) const { return grades[i].column(j); }
  Vec y(int i, int j) const { return grades[i].column(m + j); }
};

/// Module presented by a basis satisfying F X^i_j = -Y^{i+1}_j,
/// F Y^i_j = p X^{i+1}_j, V X^{i+1}_j = Y^i_j, V Y^{i+1}_j = -p X^i_j,
/// with the standard symplectic Gram matrix on each piece.
std::pair<GradedSemilinearModule, GoodBasis> standard_module(long p, int f, int m);

/// Rewrites the module in new coordinates: column k of change[i] is the k-th
/// new basis vector of M^i expressed in the old coordinates.
GradedSemilinearModule transport(const GradedSemilinearModule& module,
                                 const std::vector<Matrix>& change);

/// Independent random invertible change of coordinates on each piece,
/// drawn from xorshift64* seeded with `seed`.
GradedSemilinearModule scramble(const GradedSemilinearModule& module, std::uint64_t seed);

/// The random coordinate changes scramble() would apply for `seed`.
std::vector<Matrix> scramble_matrices(const GradedSemilinearModule& module, std::uint64_t seed);

/// Empty when the module is a superspecial quasi-polarized module of the
/// expected shape; otherwise one entry per violated relation.
std::vector<std::string> superspecial_violations(const GradedSemilinearModule& module);

/// Symplectic basis with Y^i_j in V M^{i+1}, F X^i_j = -Y^{i+1}_j and
/// F Y^i_j = p X^{i+1}_j. Throws NotSuperspecial naming the violated relation.
GoodBasis good_basis(const GradedSemilinearModule& module);

struct VerificationReport {
  bool ok = false;
  std::vector<std::string> violations;
};

VerificationReport verify_good_basis(const GradedSemilinearModule& module, const GoodBasis& basis);

/// Odd f = 2c+1 only: T(x) = (-1)^(c+1) p^(-c) F^f x on M^0, evaluated as
/// (-1)^(c+1) (F V^-1)^c F x so that no precision is lost.
Vec hermitian_partner(const GradedSemilinearModule& module, const Vec& x);

struct HermitianFormReport {
  int dimension = 0;  // of M^0 / V M^1 over the residue field
  int rank = 0;
  Matrix gram_mod_p;
};

/// The form (x, y) = <x, T y> mod p on M^0 / V M^1 (odd f only).
HermitianFormReport hermitian_form(const GradedSemilinearModule& module);

struct AutomorphismReport {
  /// propagation succeeded and φ_f agrees with φ_0
  bool automorphism = false;
  bool pairing_preserved = false;
  /// even f: B-block of φ_0 vanishes mod p
  bool siegel_shape = false;
  /// odd f: φ_0 = [[A, -p C^τ], [C, A^τ]] with τ = σ^f
  bool quaternion_unitary_shape = false;
  std::vector<std::string> failures;
  /// φ_0, φ_1, ..., φ_f as far as propagation got.
  std::vector<Matrix> blocks;

  bool accepted() const { return automorphism && pairing_preserved; }
};

/// Propagates φ_0 (in good-basis coordinates) along
/// A_{i+1} = σ(D_i), B_{i+1} = -p σ(C_i), p C_{i+1} = -σ(B_i), D_{i+1} = σ(A_i)
/// and checks wrap-around and pairing preservation. C_{i+1} is only
/// determined mod p at this precision, and is compared as such.
AutomorphismReport automorphism_shape(const GradedSemilinearModule& module, const GoodBasis& basis,
                                      const Matrix& phi0);

struct ReductionCount {
  std::uint64_t candidates = 0;
  std::uint64_t accepted = 0;
  std::uint64_t distinct_reductions = 0;
};

/// Runs automorphism_shape on every 2m x 2m matrix over the ring (at most
/// 2^20 candidates) and counts distinct reductions mod p of accepted ones.
ReductionCount enumerate_automorphism_reductions(const GradedSemilinearModule& module,
                                                 const GoodBasis& basis);

/// Text report: ring, h~, σ(x), basis vectors, and every checked relation.
std::string dump(const GradedSemilinearModule& module, const GoodBasis& basis,
                 const VerificationReport& report);

}  // namespace ssmass::dieudonne

#endif  // SSMASS_DIEUDONNE_HPP
