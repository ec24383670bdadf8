#include "ssmass/dieudonne.hpp"

#include <set>
#include <sstream>

namespace ssmass::dieudonne {

namespace {

Matrix standard_gram(const TruncWittRing& ring, int m) {
  Matrix j(2 * m, 2 * m);
  for (int k = 0; k < m; ++k) {
    j.at(k, m + k) = ring.one();
    j.at(m + k, k) = ring.from_int(-1);
  }
  return j;
}

Matrix scalar(const TruncWittRing& ring, int n, long k) {
  return scale(ring, Matrix::identity(ring, n), k);
}

Vec unit_vector(const TruncWittRing& ring, int n, int k) {
  Vec e(static_cast<std::size_t>(n));
  e[k] = ring.one();
  return e;
}

long ipow_small(long b, int e) {
  long out = 1;
  for (int k = 0; k < e; ++k) out *= b;
  return out;
}

// Matrix Φ with F^k x = Φ σ^k(x) for x in M^i.
Matrix compose_F(const GradedSemilinearModule& mod, int i, int k) {
  const auto& ring = mod.r();
  Matrix phi = Matrix::identity(ring, mod.rank());
  for (int s = 0; s < k; ++s) phi = mul(ring, mod.frob[(i + s) % mod.f], frobenius(ring, phi, 1));
  return phi;
}

// Matrix Ψ with V^k x = Ψ σ^-k(x) for x in M^i.
Matrix compose_V(const GradedSemilinearModule& mod, int i, int k) {
  const auto& ring = mod.r();
  Matrix psi = Matrix::identity(ring, mod.rank());
  for (int s = 0; s < k; ++s)
    psi = mul(ring, mod.ver[((i - s) % mod.f + mod.f) % mod.f], frobenius(ring, psi, -1));
  return psi;
}

bool column_span_contains(const TruncWittRing& ring, const Matrix& span, const Matrix& vectors) {
  for (int c = 0; c < vectors.cols(); ++c)
    if (!solve(ring, span, vectors.column(c))) return false;
  return true;
}

std::string grade_tag(int i) { return "grade " + std::to_string(i) + ": "; }

// Projection onto the symplectic complement of the pairs (xs[k], ys[k]),
// assuming <xs[k], ys[k]> = 1 and the pairs mutually orthogonal.
Vec project(const GradedSemilinearModule& mod, int grade, const std::vector<Vec>& xs,
            const std::vector<Vec>& ys, Vec v) {
  const auto& ring = mod.r();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    RingElem a = mod.pairing(grade, v, ys[k]);
    RingElem b = mod.pairing(grade, v, xs[k]);
    v = sub(ring, v, scale(ring, xs[k], a));
    v = add(ring, v, scale(ring, ys[k], b));
  }
  return v;
}

void require_superspecial(const GradedSemilinearModule& mod) {
  auto violations = superspecial_violations(mod);
  if (violations.empty()) return;
  std::string msg = "module is not superspecial:";
  for (const auto& v : violations) msg += " " + v + ";";
  throw NotSuperspecial(msg);
}

// Even f: symplectic basis of M^0 with every Y in V M^1.
std::pair<std::vector<Vec>, std::vector<Vec>> even_grade_zero(const GradedSemilinearModule& mod) {
  const auto& ring = mod.r();
  const int n = mod.rank();
  const Matrix& vmat = mod.ver[mod.next(0)];
  if (rank_mod_p(ring, vmat) != mod.m)
    throw NotSuperspecial("V M^1 does not reduce to an m-dimensional subspace of M^0/pM^0");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (ring.is_unit(mod.pairing(0, vmat.column(a), vmat.column(b))))
        throw NotSuperspecial("reduction of V M^1 is not isotropic");

  std::vector<Vec> xs, ys;
  for (int j = 0; j < mod.m; ++j) {
    bool found_y = false;
    for (int g = 0; g < n && !found_y; ++g) {
      Vec y = project(mod, 0, xs, ys, vmat.column(g));
      std::vector<Vec> trial = ys;
      trial.push_back(y);
      if (rank_mod_p(ring, Matrix::from_columns(trial)) == j + 1) {
        ys.push_back(y);
        found_y = true;
      }
    }
    if (!found_y) throw InternalConsistencyError("ran out of generators of V M^1");
    bool found_x = false;
    for (int k = 0; k < n && !found_x; ++k) {
      Vec x = project(mod, 0, xs, {ys.begin(), ys.end() - 1}, unit_vector(ring, n, k));
      RingElem s = mod.pairing(0, x, ys.back());
      if (!ring.is_unit(s)) continue;
      xs.push_back(scale(ring, x, ring.inverse(s)));
      found_x = true;
    }
    if (!found_x) throw NotSuperspecial("pairing is degenerate on the complement");
  }
  return {xs, ys};
}

// λ with λ σ^f(λ) = target, for target a unit fixed by σ^f.
RingElem norm_preimage(const TruncWittRing& ring, int f, const RingElem& target) {
  const auto reps = ring.residue_representatives();
  auto norm = [&](const RingElem& a) { return ring.mul(a, ring.frobenius(a, f)); };
  for (const auto& l0 : reps) {
    if (!ring.is_unit(l0)) continue;
    RingElem n0 = norm(l0);
    if (!ring.congruent_mod_p(n0, target)) continue;
    RingElem ratio = ring.mul(target, ring.inverse(n0));
    RingElem delta = ring.divide_by_p(ring.sub(ratio, ring.one()));
    for (const auto& t : reps) {
      if (!ring.congruent_mod_p(ring.add(t, ring.frobenius(t, f)), delta)) continue;
      RingElem lambda = ring.mul(l0, ring.add(ring.one(), ring.scale(t, ring.p())));
      if (norm(lambda) == target) return lambda;
    }
  }
  throw InternalConsistencyError("norm equation has no solution for " + ring.to_string(target));
}

// Odd f: symplectic basis of M^0 with Y_j = T X_j.
std::pair<std::vector<Vec>, std::vector<Vec>> odd_grade_zero(const GradedSemilinearModule& mod) {
  const auto& ring = mod.r();
  const int n = mod.rank();
  const auto reps = ring.residue_representatives();

  std::vector<Vec> xs, ys;
  for (int j = 0; j < mod.m; ++j) {
    // Candidates in lexicographic order: e_a, then e_a + r e_b.
    std::optional<Vec> chosen;
    RingElem mu;
    auto consider = [&](const Vec& raw) {
      Vec x = project(mod, 0, xs, ys, raw);
      RingElem h = mod.pairing(0, x, hermitian_partner(mod, x));
      if (!ring.is_unit(h)) return false;
      chosen = x;
      mu = h;
      return true;
    };
    for (int a = 0; a < n && !chosen; ++a) consider(unit_vector(ring, n, a));
    for (int a = 0; a < n && !chosen; ++a)
      for (int b = a + 1; b < n && !chosen; ++b)
        for (const auto& r : reps) {
          if (ring.is_zero(r)) continue;
          Vec v = unit_vector(ring, n, a);
          v[b] = r;
          if (consider(v)) break;
        }
    if (!chosen) throw NotSuperspecial("Hermitian form on M^0/VM^1 has no anisotropic vector");
    if (ring.frobenius(mu, mod.f) != mu)
      throw InternalConsistencyError("<X, T X> is not fixed by the involution");
    RingElem lambda = norm_preimage(ring, mod.f, ring.inverse(mu));
    Vec x = scale(ring, *chosen, lambda);
    Vec y = hermitian_partner(mod, x);
    if (mod.pairing(0, x, y) != ring.one())
      throw InternalConsistencyError("rescaled pair does not have pairing 1");
    xs.push_back(x);
    ys.push_back(y);
  }
  return {xs, ys};
}

GoodBasis propagate(const GradedSemilinearModule& mod, std::vector<Vec> xs, std::vector<Vec> ys) {
  const auto& ring = mod.r();
  const int m = mod.m;
  GoodBasis basis;
  basis.m = m;
  auto pack = [&](const std::vector<Vec>& x, const std::vector<Vec>& y) {
    std::vector<Vec> cols = x;
    cols.insert(cols.end(), y.begin(), y.end());
    return Matrix::from_columns(cols);
  };
  basis.grades.push_back(pack(xs, ys));
  for (int i = 0; i + 1 < mod.f; ++i) {
    const int ni = i + 1;
    std::vector<Vec> next_y(m), next_x(m);
    for (int j = 0; j < m; ++j) {
      next_y[j] = scale(ring, mod.apply_F(i, xs[j]), -1);
      // p^-1 F Y^i_j, computed as the V-preimage of Y^i_j.
      auto z = mod.solve_V(i, ys[j]);
      if (!z) throw NotSuperspecial(grade_tag(i) + "Y_" + std::to_string(j + 1) + " is not in V M^" +
                                    std::to_string(ni));
      next_x[j] = *z;
    }
    // The V-preimage is only defined up to p·span(Y); choose it so the X's
    // are mutually orthogonal.
    std::vector<Vec> fixed = next_x;
    for (int j = 0; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        RingElem w = mod.pairing(ni, next_x[j], next_x[k]);
        if (ring.is_unit(w))
          throw InternalConsistencyError(grade_tag(ni) + "X preimages not isotropic mod p");
        RingElem t = ring.scale(ring.divide_by_p(w), ring.p());
        fixed[j] = add(ring, fixed[j], scale(ring, next_y[k], t));
      }
    xs = fixed;
    ys = next_y;
    basis.grades.push_back(pack(xs, ys));
  }
  return basis;
}

}  // namespace

Vec GradedSemilinearModule::apply_F(int i, const Vec& x) const {
  return mul(r(), frob[i], frobenius(r(), x, 1));
}

Vec GradedSemilinearModule::apply_V(int i, const Vec& x) const {
  return mul(r(), ver[i], frobenius(r(), x, -1));
}

RingElem GradedSemilinearModule::pairing(int i, const Vec& x, const Vec& y) const {
  return bilinear(r(), x, gram[i], y);
}

std::optional<Vec> GradedSemilinearModule::solve_V(int i, const Vec& y) const {
  auto w = solve(r(), ver[next(i)], y);
  if (!w) return std::nullopt;
  return frobenius(r(), *w, 1);
}

TruncWittRing build_witt_ring(long p, int f) {
  if (p > 5 || f < 1 || f > 4)
    throw InvalidInput("desk-scale Witt ring needs p <= 5 and 1 <= f <= 4");
  return TruncWittRing::build(p, f);
}

std::pair<GradedSemilinearModule, GoodBasis> standard_module(long p, int f, int m) {
  if (m < 1 || m > 3) throw InvalidInput("standard_module needs 1 <= m <= 3");
  if (p > 5 || f < 1 || f > 4 || (f % 2 == 1 && f > 3))
    throw InvalidInput("standard_module needs p <= 5, 1 <= f <= 4, and f <= 3 when f is odd");
  GradedSemilinearModule mod;
  mod.ring = std::make_shared<const TruncWittRing>(
      TruncWittRing::build(p, f % 2 == 0 ? f : 2 * f));
  mod.f = f;
  mod.m = m;
  const auto& ring = mod.r();
  const int n = 2 * m;
  Matrix fm(n, n), vm(n, n);
  for (int k = 0; k < m; ++k) {
    fm.at(k, m + k) = ring.from_int(p);      // F Y = p X
    fm.at(m + k, k) = ring.from_int(-1);     // F X = -Y
    vm.at(m + k, k) = ring.one();            // V X = Y
    vm.at(k, m + k) = ring.from_int(-p);     // V Y = -p X
  }
  GoodBasis basis;
  basis.m = m;
  for (int i = 0; i < f; ++i) {
    mod.frob.push_back(fm);
    mod.ver.push_back(vm);
    mod.gram.push_back(standard_gram(ring, m));
    basis.grades.push_back(Matrix::identity(ring, n));
  }
  return {std::move(mod), std::move(basis)};
}

GradedSemilinearModule transport(const GradedSemilinearModule& mod,
                                 const std::vector<Matrix>& change) {
  const auto& ring = mod.r();
  if (static_cast<int>(change.size()) != mod.f)
    throw InvalidInput("transport needs one change of coordinates per graded piece");
  std::vector<Matrix> inv;
  for (const auto& c : change) inv.push_back(inverse(ring, c));
  GradedSemilinearModule out = mod;
  for (int i = 0; i < mod.f; ++i) {
    out.frob[i] = mul(ring, inv[mod.next(i)], mul(ring, mod.frob[i], frobenius(ring, change[i], 1)));
    out.ver[i] = mul(ring, inv[mod.prev(i)], mul(ring, mod.ver[i], frobenius(ring, change[i], -1)));
    out.gram[i] = mul(ring, transpose(change[i]), mul(ring, mod.gram[i], change[i]));
  }
  return out;
}

std::vector<Matrix> scramble_matrices(const GradedSemilinearModule& mod, std::uint64_t seed) {
  const auto& ring = mod.r();
  Xorshift64Star rng(seed);
  std::vector<Matrix> out;
  for (int i = 0; i < mod.f; ++i) {
    for (;;) {
      Matrix c(mod.rank(), mod.rank());
      for (int r = 0; r < c.rows(); ++r)
        for (int k = 0; k < c.cols(); ++k) c.at(r, k) = ring.random(rng);
      if (is_invertible(ring, c)) {
        out.push_back(std::move(c));
        break;
      }
    }
  }
  return out;
}

GradedSemilinearModule scramble(const GradedSemilinearModule& mod, std::uint64_t seed) {
  return transport(mod, scramble_matrices(mod, seed));
}

std::vector<std::string> superspecial_violations(const GradedSemilinearModule& mod) {
  std::vector<std::string> out;
  const auto& ring = mod.r();
  const int n = mod.rank();
  const int f = mod.f;
  const int expected_degree = f % 2 == 0 ? f : 2 * f;
  if (ring.degree() != expected_degree) {
    out.push_back("coefficient ring has degree " + std::to_string(ring.degree()) + ", expected " +
                  std::to_string(expected_degree));
    return out;
  }
  if (static_cast<int>(mod.frob.size()) != f || static_cast<int>(mod.ver.size()) != f ||
      static_cast<int>(mod.gram.size()) != f) {
    out.push_back("operator count does not match the number of graded pieces");
    return out;
  }
  const Matrix p_id = scalar(ring, n, mod.p());
  for (int i = 0; i < f; ++i) {
    const std::string tag = grade_tag(i);
    const Matrix& g = mod.gram[i];
    if (!(transpose(g) == scale(ring, g, -1))) out.push_back(tag + "pairing is not alternating");
    for (int k = 0; k < n; ++k)
      if (!ring.is_zero(g.at(k, k))) out.push_back(tag + "pairing is not alternating");
    if (!is_invertible(ring, g)) out.push_back(tag + "pairing is not perfect");
    if (!(mul(ring, mod.frob[mod.prev(i)], frobenius(ring, mod.ver[i], 1)) == p_id))
      out.push_back(tag + "FV != p");
    if (!(mul(ring, mod.ver[mod.next(i)], frobenius(ring, mod.frob[i], -1)) == p_id))
      out.push_back(tag + "VF != p");
    Matrix lhs = mul(ring, transpose(mod.frob[i]), mod.gram[mod.next(i)]);
    Matrix rhs = mul(ring, frobenius(ring, mod.gram[i], 1), frobenius(ring, mod.ver[mod.next(i)], 1));
    if (!(lhs == rhs)) out.push_back(tag + "<Fx, y> != <x, Vy>^σ");
    // Superspecial: F M^i = V M^{i+2} inside M^{i+1}.
    const Matrix& fm = mod.frob[i];
    const Matrix& vm = mod.ver[(i + 2) % f];
    if (!column_span_contains(ring, vm, fm) || !column_span_contains(ring, fm, vm))
      out.push_back(tag + "F M != V M (F^2 M != p M)");
    if (f % 2 == 0) {
      const int c = f / 2;
      Matrix lhs_n = compose_F(mod, i, c);
      Matrix rhs_n = compose_V(mod, i, c);
      if (c % 2 == 1) rhs_n = scale(ring, rhs_n, -1);
      if (!(lhs_n == rhs_n)) out.push_back(tag + "F^c != (-1)^c V^c, fixed submodule N is proper");
    } else {
      Matrix lhs_n = compose_F(mod, i, 2 * f);
      if (!(lhs_n == scalar(ring, n, -ipow_small(mod.p(), f))))
        out.push_back(tag + "F^(2f) != -p^f");
    }
  }
  return out;
}

Vec hermitian_partner(const GradedSemilinearModule& mod, const Vec& x) {
  if (mod.f % 2 == 0) throw InvalidInput("hermitian_partner is only defined for odd f");
  const auto& ring = mod.r();
  const int c = (mod.f - 1) / 2;
  Vec y = mod.apply_F(0, x);
  int grade = 1 % mod.f;
  for (int s = 0; s < c; ++s) {
    auto z = mod.solve_V(grade, y);
    if (!z) throw NotSuperspecial("F x is not in V M while evaluating p^-c F^f");
    grade = mod.next(grade);
    y = mod.apply_F(grade, *z);
    grade = mod.next(grade);
  }
  return c % 2 == 0 ? scale(ring, y, -1) : y;
}

HermitianFormReport hermitian_form(const GradedSemilinearModule& mod) {
  const auto& ring = mod.r();
  const int n = mod.rank();
  std::vector<Vec> span;
  const Matrix& vm = mod.ver[mod.next(0)];
  for (int k = 0; k < n; ++k) span.push_back(vm.column(k));
  int base_rank = rank_mod_p(ring, Matrix::from_columns(span));
  std::vector<Vec> quotient;
  for (int k = 0; k < n; ++k) {
    std::vector<Vec> trial = span;
    trial.push_back(unit_vector(ring, n, k));
    int r = rank_mod_p(ring, Matrix::from_columns(trial));
    if (r > base_rank) {
      span = trial;
      base_rank = r;
      quotient.push_back(unit_vector(ring, n, k));
    }
  }
  HermitianFormReport report;
  report.dimension = static_cast<int>(quotient.size());
  report.gram_mod_p = Matrix(report.dimension, report.dimension);
  for (int a = 0; a < report.dimension; ++a)
    for (int b = 0; b < report.dimension; ++b)
      report.gram_mod_p.at(a, b) =
          ring.residue(mod.pairing(0, quotient[a], hermitian_partner(mod, quotient[b])));
  report.rank = report.dimension == 0 ? 0 : rank_mod_p(ring, report.gram_mod_p);
  return report;
}

GoodBasis good_basis(const GradedSemilinearModule& mod) {
  require_superspecial(mod);
  auto [xs, ys] = mod.f % 2 == 0 ? even_grade_zero(mod) : odd_grade_zero(mod);
  GoodBasis basis = propagate(mod, xs, ys);
  VerificationReport check = verify_good_basis(mod, basis);
  if (!check.ok) {
    std::string msg = "constructed basis fails verification:";
    for (const auto& v : check.violations) msg += " " + v + ";";
    throw InternalConsistencyError(msg);
  }
  return basis;
}

VerificationReport verify_good_basis(const GradedSemilinearModule& mod, const GoodBasis& basis) {
  VerificationReport report;
  const auto& ring = mod.r();
  const int m = mod.m;
  const int n = mod.rank();
  if (basis.m != m || static_cast<int>(basis.grades.size()) != mod.f) {
    report.violations.push_back("basis dimensions do not match the module");
    return report;
  }
  for (const auto& g : basis.grades)
    if (g.rows() != n || g.cols() != n) {
      report.violations.push_back("basis dimensions do not match the module");
      return report;
    }
  const Matrix j_std = standard_gram(ring, m);
  for (int i = 0; i < mod.f; ++i) {
    const std::string tag = grade_tag(i);
    const Matrix& b = basis.grades[i];
    Matrix gram = mul(ring, transpose(b), mul(ring, mod.gram[i], b));
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        if (gram.at(a, c) == j_std.at(a, c)) continue;
        auto name = [&](int k) {
          return std::string(k < m ? "X" : "Y") + "_" + std::to_string(k % m + 1);
        };
        std::string what = "<" + name(a) + ", " + name(c) + "> = " + ring.to_string(gram.at(a, c)) +
                           ", expected " + ring.to_string(j_std.at(a, c));
        if (gram.at(a, c) == ring.neg(j_std.at(a, c)) && !ring.is_zero(gram.at(a, c)))
          what += " (symplectic sign violation)";
        report.violations.push_back(tag + what);
      }
    const int ni = mod.next(i);
    for (int k = 0; k < m; ++k) {
      const std::string idx = std::to_string(k + 1);
      if (!mod.solve_V(i, basis.y(i, k)))
        report.violations.push_back(tag + "Y_" + idx + " not in V M^" + std::to_string(ni));
      if (!(mod.apply_F(i, basis.x(i, k)) == scale(ring, basis.y(ni, k), -1)))
        report.violations.push_back(tag + "F X_" + idx + " != -Y_" + idx + " of grade " +
                                    std::to_string(ni));
      if (!(mod.apply_F(i, basis.y(i, k)) == scale(ring, basis.x(ni, k), mod.p())))
        report.violations.push_back(tag + "F Y_" + idx + " != p X_" + idx + " of grade " +
                                    std::to_string(ni));
    }
  }
  report.ok = report.violations.empty();
  return report;
}

AutomorphismReport automorphism_shape(const GradedSemilinearModule& mod, const GoodBasis& basis,
                                      const Matrix& phi0) {
  const auto& ring = mod.r();
  const int m = mod.m;
  const int n = mod.rank();
  if (phi0.rows() != n || phi0.cols() != n)
    throw InvalidInput("phi0 must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  if (!verify_good_basis(mod, basis).ok)
    throw InvalidInput("automorphism_shape needs a basis passing verify_good_basis");

  AutomorphismReport report;
  const Matrix j_std = standard_gram(ring, m);
  auto block = [&](const Matrix& phi, int r0, int c0) {
    Matrix out(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) out.at(r, c) = phi.at(r0 + r, c0 + c);
    return out;
  };
  auto symplectic_mod = [&](const Matrix& phi, bool exact) {
    Matrix g = mul(ring, transpose(phi), mul(ring, j_std, phi));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        bool same = exact ? g.at(r, c) == j_std.at(r, c)
                          : ring.congruent_mod_p(g.at(r, c), j_std.at(r, c));
        if (!same) return false;
      }
    return true;
  };

  report.pairing_preserved = symplectic_mod(phi0, true);
  if (!report.pairing_preserved) report.failures.push_back("phi_0 does not preserve the pairing");

  bool b_mod_p = true;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) b_mod_p = b_mod_p && ring.valuation(phi0.at(r, m + c)) >= 1;
  report.siegel_shape = mod.f % 2 == 0 && b_mod_p;

  report.blocks.push_back(phi0);
  bool propagated = true;
  Matrix phi = phi0;
  for (int i = 0; i < mod.f; ++i) {
    Matrix next(n, n);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) {
        const RingElem a = phi.at(r, c), b = phi.at(r, m + c);
        const RingElem cc = phi.at(m + r, c), d = phi.at(m + r, m + c);
        next.at(r, c) = ring.frobenius(d, 1);
        next.at(m + r, m + c) = ring.frobenius(a, 1);
        next.at(r, m + c) = ring.neg(ring.scale(ring.frobenius(cc, 1), mod.p()));
        RingElem sb = ring.frobenius(b, 1);
        if (ring.valuation(sb) < 1) {
          report.failures.push_back("p C_" + std::to_string(i + 1) + " = -σ(B_" +
                                    std::to_string(i) + ") has no solution: B_" +
                                    std::to_string(i) + " is not divisible by p");
          propagated = false;
        } else {
          next.at(m + r, c) = ring.neg(ring.divide_by_p(sb));
        }
      }
    if (!propagated) break;
    phi = next;
    report.blocks.push_back(phi);
    if (i + 1 < mod.f && !symplectic_mod(phi, false)) {
      report.pairing_preserved = false;
      report.failures.push_back("phi_" + std::to_string(i + 1) + " does not preserve the pairing mod p");
    }
  }

  if (propagated) {
    // φ_f must agree with φ_0; the C-block of φ_f is only known mod p.
    bool wrap = true;
    for (int r = 0; r < n && wrap; ++r)
      for (int c = 0; c < n; ++c) {
        bool c_block = r >= m && c < m;
        bool same = c_block ? ring.congruent_mod_p(phi.at(r, c), phi0.at(r, c))
                            : phi.at(r, c) == phi0.at(r, c);
        if (!same) {
          wrap = false;
          break;
        }
      }
    if (!wrap) report.failures.push_back("wrap-around phi_f != phi_0 fails");
    report.automorphism = wrap;
  }

  if (mod.f % 2 == 1) {
    // [[A, -p C^τ], [C, A^τ]]
    bool shape = true;
    Matrix a = block(phi0, 0, 0), b = block(phi0, 0, m);
    Matrix cm = block(phi0, m, 0), d = block(phi0, m, m);
    shape = frobenius(ring, a, mod.f) == d &&
            scale(ring, frobenius(ring, cm, mod.f), -mod.p()) == b;
    report.quaternion_unitary_shape = shape;
  }
  return report;
}

ReductionCount enumerate_automorphism_reductions(const GradedSemilinearModule& mod,
                                                 const GoodBasis& basis) {
  const auto& ring = mod.r();
  const int n = mod.rank();
  const std::uint64_t ring_size = static_cast<std::uint64_t>(ipow_small(ring.modulus(), ring.degree()));
  std::uint64_t total = 1;
  for (int k = 0; k < n * n; ++k) {
    total *= ring_size;
    if (total > (1u << 20)) throw InvalidInput("automorphism enumeration exceeds 2^20 candidates");
  }
  std::vector<RingElem> elems;
  for (std::uint64_t idx = 0; idx < ring_size; ++idx) {
    RingElem e;
    std::uint64_t rest = idx;
    for (int k = 0; k < ring.degree(); ++k) {
      e.c[k] = static_cast<std::int32_t>(rest % static_cast<std::uint64_t>(ring.modulus()));
      rest /= static_cast<std::uint64_t>(ring.modulus());
    }
    elems.push_back(e);
  }
  ReductionCount out;
  std::set<std::vector<std::int32_t>> reductions;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix phi(n, n);
    std::uint64_t rest = idx;
    for (int k = 0; k < n * n; ++k) {
      phi.at(k / n, k % n) = elems[rest % ring_size];
      rest /= ring_size;
    }
    ++out.candidates;
    if (!automorphism_shape(mod, basis, phi).accepted()) continue;
    ++out.accepted;
    std::vector<std::int32_t> key;
    for (int k = 0; k < n * n; ++k) {
      RingElem e = ring.residue(phi.at(k / n, k % n));
      key.insert(key.end(), e.c.begin(), e.c.begin() + ring.degree());
    }
    reductions.insert(std::move(key));
  }
  out.distinct_reductions = reductions.size();
  return out;
}

std::string dump(const GradedSemilinearModule& mod, const GoodBasis& basis,
                 const VerificationReport& report) {
  const auto& ring = mod.r();
  std::ostringstream out;
  out << "ring: W_2(F_" << ring.p() << "^" << ring.degree() << ") = (Z/" << ring.modulus()
      << ")[x]/(" << ring.polynomial_string() << ")\n";
  out << "sigma(x): " << ring.to_string(ring.frobenius_of_generator()) << "\n";
  out << "grades: " << mod.f << ", half-rank m: " << mod.m << ", case: "
      << (mod.f % 2 == 0 ? "even" : "odd") << "\n";
  for (int i = 0; i < mod.f; ++i) {
    out << "grade " << i << ":\n";
    for (int j = 0; j < mod.m; ++j) {
      out << "  X_" << j + 1 << " = " << to_string(ring, basis.x(i, j)) << "\n";
      out << "  Y_" << j + 1 << " = " << to_string(ring, basis.y(i, j)) << "\n";
    }
  }
  out << "relations:\n";
  out << "  symplectic Gram matrix per grade: " << (report.ok ? "ok" : "see violations") << "\n";
  out << "  Y^i_j in V M^(i+1): checked\n";
  out << "  F X^i_j = -Y^(i+1)_j: checked\n";
  out << "  F Y^i_j = p X^(i+1)_j: checked\n";
  if (mod.f % 2 == 1) out << "  Y^0_j = (-1)^(c+1) p^-c F^f X^0_j: built in\n";
  out << "verdict: " << (report.ok ? "OK" : "FAILED") << "\n";
  for (const auto& v : report.violations) out << "  violation: " << v << "\n";
  return out.str();
}

}  // namespace ssmass::dieudonne
