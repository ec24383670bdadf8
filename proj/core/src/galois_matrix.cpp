#include "ssmass/galois_matrix.hpp"

#include <utility>

#include "ssmass/common.hpp"

namespace ssmass::dieudonne {

Matrix Matrix::identity(const TruncWittRing& ring, int n) {
  Matrix out(n, n);
  for (int k = 0; k < n; ++k) out.at(k, k) = ring.one();
  return out;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns) {
  if (columns.empty()) return {};
  Matrix out(static_cast<int>(columns.front().size()), static_cast<int>(columns.size()));
  for (int c = 0; c < out.cols(); ++c) out.set_column(c, columns[c]);
  return out;
}

Vec Matrix::column(int c) const {
  Vec out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void Matrix::set_column(int c, const Vec& v) {
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix mul(const TruncWittRing& ring, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix shape mismatch in product");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a.at(i, k))) continue;
      for (int j = 0; j < b.cols(); ++j)
        out.at(i, j) = ring.add(out.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
    }
  return out;
}

Vec mul(const TruncWittRing& ring, const Matrix& a, const Vec& x) {
  if (a.cols() != static_cast<int>(x.size())) throw InvalidInput("matrix-vector shape mismatch");
  Vec out(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) out[i] = ring.add(out[i], ring.mul(a.at(i, k), x[k]));
  return out;
}

Matrix add(const TruncWittRing& ring, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = ring.add(a.at(i, j), b.at(i, j));
  return out;
}

Matrix sub(const TruncWittRing& ring, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = ring.sub(a.at(i, j), b.at(i, j));
  return out;
}

Matrix scale(const TruncWittRing& ring, const Matrix& a, long k) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = ring.scale(a.at(i, j), k);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

Matrix frobenius(const TruncWittRing& ring, const Matrix& a, int k) {
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = ring.frobenius(a.at(i, j), k);
  return out;
}

Vec frobenius(const TruncWittRing& ring, const Vec& x, int k) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring.frobenius(x[i], k);
  return out;
}

Vec add(const TruncWittRing& ring, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.add(a[i], b[i]);
  return out;
}

Vec sub(const TruncWittRing& ring, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.sub(a[i], b[i]);
  return out;
}

Vec scale(const TruncWittRing& ring, const Vec& a, const RingElem& s) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.mul(s, a[i]);
  return out;
}

Vec scale(const TruncWittRing& ring, const Vec& a, long k) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.scale(a[i], k);
  return out;
}

bool is_zero(const TruncWittRing& ring, const Vec& a) {
  for (const auto& e : a)
    if (!ring.is_zero(e)) return false;
  return true;
}

RingElem bilinear(const TruncWittRing& ring, const Vec& x, const Matrix& gram, const Vec& y) {
  RingElem out;
  for (int i = 0; i < gram.rows(); ++i) {
    if (ring.is_zero(x[i])) continue;
    RingElem row;
    for (int j = 0; j < gram.cols(); ++j) row = ring.add(row, ring.mul(gram.at(i, j), y[j]));
    out = ring.add(out, ring.mul(x[i], row));
  }
  return out;
}

int SmithForm::rank_mod_p() const {
  int r = 0;
  for (int v : pivot_valuation) r += v == 0;
  return r;
}

SmithForm smith_form(const TruncWittRing& ring, const Matrix& a) {
  Matrix s = a;
  SmithForm out;
  out.left = Matrix::identity(ring, a.rows());
  out.right = Matrix::identity(ring, a.cols());
  const int limit = std::min(a.rows(), a.cols());

  auto swap_rows = [](Matrix& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
  };
  auto swap_cols = [](Matrix& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
  };

  for (int t = 0; t < limit; ++t) {
    int best_r = -1, best_c = -1, best_v = 2;
    for (int r = t; r < s.rows() && best_v > 0; ++r)
      for (int c = t; c < s.cols(); ++c) {
        int v = ring.valuation(s.at(r, c));
        if (v < best_v) {
          best_v = v;
          best_r = r;
          best_c = c;
          if (v == 0) break;
        }
      }
    if (best_v == 2) break;
    swap_rows(s, t, best_r);
    swap_rows(out.left, t, best_r);
    swap_cols(s, t, best_c);
    swap_cols(out.right, t, best_c);

    // Normalise the pivot to p^v.
    RingElem unit = best_v == 0 ? s.at(t, t) : ring.divide_by_p(s.at(t, t));
    RingElem inv = ring.inverse(unit);
    for (int c = 0; c < s.cols(); ++c) s.at(t, c) = ring.mul(inv, s.at(t, c));
    for (int c = 0; c < out.left.cols(); ++c) out.left.at(t, c) = ring.mul(inv, out.left.at(t, c));

    auto quotient = [&](const RingElem& e) { return best_v == 0 ? e : ring.divide_by_p(e); };
    for (int r = 0; r < s.rows(); ++r) {
      if (r == t || ring.is_zero(s.at(r, t))) continue;
      RingElem factor = quotient(s.at(r, t));
      for (int c = 0; c < s.cols(); ++c)
        s.at(r, c) = ring.sub(s.at(r, c), ring.mul(factor, s.at(t, c)));
      for (int c = 0; c < out.left.cols(); ++c)
        out.left.at(r, c) = ring.sub(out.left.at(r, c), ring.mul(factor, out.left.at(t, c)));
    }
    for (int c = 0; c < s.cols(); ++c) {
      if (c == t || ring.is_zero(s.at(t, c))) continue;
      RingElem factor = quotient(s.at(t, c));
      for (int r = 0; r < s.rows(); ++r)
        s.at(r, c) = ring.sub(s.at(r, c), ring.mul(factor, s.at(r, t)));
      for (int r = 0; r < out.right.rows(); ++r)
        out.right.at(r, c) = ring.sub(out.right.at(r, c), ring.mul(factor, out.right.at(r, t)));
    }
    out.pivot_valuation.push_back(best_v);
  }
  return out;
}

std::optional<Vec> solve(const TruncWittRing& ring, const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw InvalidInput("solve: shape mismatch");
  SmithForm sf = smith_form(ring, a);
  Vec c = mul(ring, sf.left, b);
  Vec y(static_cast<std::size_t>(a.cols()));
  for (int k = 0; k < a.rows(); ++k) {
    if (k < sf.rank()) {
      int v = sf.pivot_valuation[k];
      if (ring.valuation(c[k]) < v) return std::nullopt;
      y[k] = v == 0 ? c[k] : ring.divide_by_p(c[k]);
    } else if (!ring.is_zero(c[k])) {
      return std::nullopt;
    }
  }
  return mul(ring, sf.right, y);
}

int rank_mod_p(const TruncWittRing& ring, const Matrix& a) {
  return smith_form(ring, a).rank_mod_p();
}

bool is_invertible(const TruncWittRing& ring, const Matrix& a) {
  return a.rows() == a.cols() && rank_mod_p(ring, a) == a.rows();
}

Matrix inverse(const TruncWittRing& ring, const Matrix& a) {
  if (!is_invertible(ring, a)) throw InvalidInput("matrix is not invertible mod p");
  // U A W = I, so A^-1 = W U.
  SmithForm sf = smith_form(ring, a);
  return mul(ring, sf.right, sf.left);
}

std::string to_string(const TruncWittRing& ring, const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += ring.to_string(v[i]);
  }
  return out + ")";
}

std::string to_string(const TruncWittRing& ring, const Matrix& a) {
  std::string out = "[";
  for (int r = 0; r < a.rows(); ++r) {
    if (r) out += "; ";
    for (int c = 0; c < a.cols(); ++c) {
      if (c) out += " ";
      out += ring.to_string(a.at(r, c));
    }
  }
  return out + "]";
}

}  // namespace ssmass::dieudonne
