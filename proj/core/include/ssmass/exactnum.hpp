#ifndef SSMASS_EXACTNUM_HPP
#define SSMASS_EXACTNUM_HPP

#include <cstdint>
#include <string>

#include "ssmass/common.hpp"
#include "ssmass/numfield.hpp"

namespace ssmass::exactnum {

/// ζ_F(1-2i) for a supported field.
struct ZetaValue {
  numfield::FieldSpec field;
  long argument;  // 1 - 2i
  Rational value;
};

/// Bernoulli number B_n with B_1 = -1/2. Memoized behind a mutex, so safe
/// to call from several threads.
Rational bernoulli(unsigned n);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
Rational bernoulli_polynomial(unsigned n, const Rational& x);

/// ζ(1-2i) = -B_{2i}/(2i).
Rational riemann_zeta_neg(unsigned i);

/// Generalized Bernoulli number B_{n,χ_D} = D^(n-1) sum_{a=1}^{D} χ_D(a) B_n(a/D)
/// for the Kronecker character of a real quadratic field.
Rational gen_bernoulli(unsigned n, long discriminant);

ZetaValue dedekind_zeta_neg(const numfield::FieldSpec& field, unsigned i);

inline constexpr std::uint64_t kDefaultTermBudget = 1'000'000;

struct FunctionalCheckReport {
  bool passed = false;
  double numeric_positive = 0;  // ζ_F(2i)
  double predicted = 0;         // ζ_F(1-2i) obtained through Λ_F(s) = Λ_F(1-s)
  Rational exact;               // dedekind_zeta_neg
  double relative_error = 0;
  double tail_bound = 0;        // bound on the truncation error of ζ_F(2i)
  std::uint64_t terms = 0;
};

/// Evaluates ζ_F(2i) numerically, maps it through the completed-zeta symmetry
/// and compares with the exact value. Throws ConvergenceError when the tail
/// bound cannot be pushed below the tolerance within `term_budget` terms.
FunctionalCheckReport zeta_functional_check(const numfield::FieldSpec& field, unsigned i,
                                            double rel_tol,
                                            std::uint64_t term_budget = kDefaultTermBudget);

}  // namespace ssmass::exactnum

#endif  // SSMASS_EXACTNUM_HPP
