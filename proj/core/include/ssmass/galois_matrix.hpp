#ifndef SSMASS_GALOIS_MATRIX_HPP
#define SSMASS_GALOIS_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "ssmass/witt_ring.hpp"

namespace ssmass::dieudonne {

using Vec = std::vector<RingElem>;

/// Dense matrix over a TruncWittRing, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static Matrix identity(const TruncWittRing& ring, int n);
  static Matrix from_columns(const std::vector<Vec>& columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RingElem& at(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const RingElem& at(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  Vec column(int c) const;
  void set_column(int c, const Vec& v);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<RingElem> data_;
};

Matrix mul(const TruncWittRing& ring, const Matrix& a, const Matrix& b);
Vec mul(const TruncWittRing& ring, const Matrix& a, const Vec& x);
Matrix add(const TruncWittRing& ring, const Matrix& a, const Matrix& b);
Matrix sub(const TruncWittRing& ring, const Matrix& a, const Matrix& b);
Matrix scale(const TruncWittRing& ring, const Matrix& a, long k);
Matrix transpose(const Matrix& a);
/// Entrywise σ^k.
Matrix frobenius(const TruncWittRing& ring, const Matrix& a, int k = 1);
Vec frobenius(const TruncWittRing& ring, const Vec& x, int k = 1);

Vec add(const TruncWittRing& ring, const Vec& a, const Vec& b);
Vec sub(const TruncWittRing& ring, const Vec& a, const Vec& b);
Vec scale(const TruncWittRing& ring, const Vec& a, const RingElem& s);
Vec scale(const TruncWittRing& ring, const Vec& a, long k);
bool is_zero(const TruncWittRing& ring, const Vec& a);

/// x^T G y
RingElem bilinear(const TruncWittRing& ring, const Vec& x, const Matrix& gram, const Vec& y);

/// U * A * W = diag(p^v_0, ..., p^v_{rank-1}, 0, ...), U and W invertible.
/// Pivots are chosen by minimal valuation, scanning row-major.
struct SmithForm {
  Matrix left;
  Matrix right;
  std::vector<int> pivot_valuation;  // each 0 or 1

  int rank() const { return static_cast<int>(pivot_valuation.size()); }
  int rank_mod_p() const;
};

SmithForm smith_form(const TruncWittRing& ring, const Matrix& a);

/// Some x with A x = b, or nullopt when the system has no solution.
std::optional<Vec> solve(const TruncWittRing& ring, const Matrix& a, const Vec& b);

/// Rank of the reduction mod p.
int rank_mod_p(const TruncWittRing& ring, const Matrix& a);

bool is_invertible(const TruncWittRing& ring, const Matrix& a);
Matrix inverse(const TruncWittRing& ring, const Matrix& a);

std::string to_string(const TruncWittRing& ring, const Vec& v);
std::string to_string(const TruncWittRing& ring, const Matrix& a);

}  // namespace ssmass::dieudonne

#endif  // SSMASS_GALOIS_MATRIX_HPP
