#include "ssmass/exactnum.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

namespace ssmass::exactnum {

namespace {

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

struct BernoulliCache {
  std::mutex mutex;
  std::vector<Rational> values{Rational(1)};
};

BernoulliCache& cache() {
  static BernoulliCache instance;
  return instance;
}

Rational rational_pow(const Rational& x, unsigned e) {
  Rational out(1);
  for (unsigned k = 0; k < e; ++k) out *= x;
  return out;
}

void require_supported(const numfield::FieldSpec& field) {
  if (field.degree() > 2)
    throw UnsupportedInput("Dedekind zeta only available for degree <= 2");
}

// Sums ζ(s) for integer s >= 2 up to N, then adds the Euler-Maclaurin
// tail N^(1-s)/(s-1) - N^(-s)/2. The remainder is below s/(12 N^(s+1)).
struct Partial {
  long double value;
  long double bound;
};

Partial riemann_partial(int s, std::uint64_t n_terms) {
  long double sum = 0, comp = 0;
  for (std::uint64_t n = n_terms; n >= 1; --n) {
    long double term = std::pow(static_cast<long double>(n), -s) - comp;
    long double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
  }
  long double nl = static_cast<long double>(n_terms);
  sum += std::pow(nl, 1 - s) / (s - 1) - std::pow(nl, -s) / 2;
  return {sum, s / (12.0L * std::pow(nl, s + 1))};
}

// L(s, χ_D) over whole periods. For an even primitive character both
// sum χ(a) and sum a·χ(a) over a period vanish, so one block starting at M
// is at most (D^3/6)·s(s+1)·M^(-s-2); summing blocks bounds the tail.
Partial dirichlet_partial(int s, long d, std::uint64_t n_terms) {
  std::uint64_t periods = n_terms / static_cast<std::uint64_t>(d);
  if (periods == 0) periods = 1;
  std::uint64_t n_max = periods * static_cast<std::uint64_t>(d);
  std::vector<int> chi(static_cast<std::size_t>(d) + 1);
  for (long a = 1; a <= d; ++a) chi[a] = numfield::kronecker_symbol(d, a);
  long double sum = 0, comp = 0;
  for (std::uint64_t n = n_max; n >= 1; --n) {
    int c = chi[static_cast<std::size_t>((n - 1) % d + 1)];
    if (c == 0) continue;
    long double term = c * std::pow(static_cast<long double>(n), -s) - comp;
    long double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
  }
  long double dl = static_cast<long double>(d);
  long double ml = static_cast<long double>(n_max);
  long double k = dl * dl * dl / 6.0L * s * (s + 1);
  long double bound = k * (std::pow(ml, -s - 2) + std::pow(ml, -s - 1) / (dl * (s + 1)));
  return {sum, bound};
}

}  // namespace

Rational bernoulli(unsigned n) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  // sum_{k=0}^{m} C(m+1,k) B_k = 0
  for (unsigned m = static_cast<unsigned>(c.values.size()); m <= n; ++m) {
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * c.values[k];
    Rational b = -acc / Rational(m + 1);
    b.canonicalize();
    c.values.push_back(b);
  }
  return c.values[n];
}

Rational bernoulli_polynomial(unsigned n, const Rational& x) {
  Rational out(0);
  for (unsigned k = 0; k <= n; ++k)
    out += Rational(binomial(n, k)) * bernoulli(k) * rational_pow(x, n - k);
  out.canonicalize();
  return out;
}

Rational riemann_zeta_neg(unsigned i) {
  if (i == 0) throw InvalidInput("riemann_zeta_neg expects i >= 1");
  Rational out = -bernoulli(2 * i) / Rational(2 * i);
  out.canonicalize();
  return out;
}

Rational gen_bernoulli(unsigned n, long discriminant) {
  if (n == 0) throw InvalidInput("gen_bernoulli expects n >= 1");
  if (discriminant <= 1 || !numfield::is_fundamental_discriminant(discriminant))
    throw InvalidInput("gen_bernoulli: not a fundamental discriminant > 1: " +
                       std::to_string(discriminant));
  Rational sum(0);
  for (long a = 1; a <= discriminant; ++a) {
    int chi = numfield::kronecker_symbol(discriminant, a);
    if (chi == 0) continue;
    Rational b = bernoulli_polynomial(n, Rational(a, discriminant));
    sum += chi > 0 ? b : -b;
  }
  Rational out = Rational(ipow(Integer(discriminant), n - 1)) * sum;
  out.canonicalize();
  return out;
}

ZetaValue dedekind_zeta_neg(const numfield::FieldSpec& field, unsigned i) {
  require_supported(field);
  if (i == 0) throw InvalidInput("dedekind_zeta_neg expects i >= 1");
  Rational value = riemann_zeta_neg(i);
  if (field.kind() == numfield::FieldKind::real_quadratic) {
    // L(1-n, χ) = -B_{n,χ}/n with n = 2i
    value *= -gen_bernoulli(2 * i, field.discriminant()) / Rational(2 * i);
    value.canonicalize();
  }
  return {field, 1 - 2 * static_cast<long>(i), value};
}

FunctionalCheckReport zeta_functional_check(const numfield::FieldSpec& field, unsigned i,
                                            double rel_tol, std::uint64_t term_budget) {
  require_supported(field);
  if (i == 0 || i > 4) throw InvalidInput("zeta_functional_check expects 1 <= i <= 4");
  if (!(rel_tol > 0)) throw InvalidInput("rel_tol must be positive");
  if (term_budget < 16) throw InvalidInput("term budget too small");

  const int s = 2 * static_cast<int>(i);
  const bool quadratic = field.kind() == numfield::FieldKind::real_quadratic;
  const long d = field.discriminant();

  // Grow the truncation point until the tail bound sits well below the
  // requested tolerance.
  std::uint64_t n = 1024;
  long double value = 0, bound = 0;
  for (;;) {
    Partial z = riemann_partial(s, std::min(n, term_budget));
    value = z.value;
    bound = z.bound;
    if (quadratic) {
      Partial l = dirichlet_partial(s, d, std::min(n, term_budget));
      bound = z.bound * std::fabs(l.value) + l.bound * std::fabs(z.value) + z.bound * l.bound;
      value = z.value * l.value;
    }
    if (bound <= 1e-3L * rel_tol * std::fabs(value)) break;
    if (n >= term_budget)
      throw ConvergenceError("zeta series did not converge within " +
                             std::to_string(term_budget) + " terms");
    n *= 4;
  }

  // Λ(s) = |D|^(s/2) (π^(-s/2) Γ(s/2))^d ζ_F(s)
  const int deg = field.degree();
  const long double pi = std::numbers::pi_v<long double>;
  auto gamma_factor = [&](long double x) {
    return std::pow(static_cast<long double>(d), x / 2) *
           std::pow(std::pow(pi, -x / 2) * std::tgamma(x / 2), deg);
  };
  long double completed = gamma_factor(s) * value;
  long double predicted = completed / gamma_factor(1.0L - s);

  FunctionalCheckReport report;
  report.numeric_positive = static_cast<double>(value);
  report.predicted = static_cast<double>(predicted);
  report.exact = dedekind_zeta_neg(field, i).value;
  const double exact = report.exact.get_d();
  report.relative_error = std::fabs(static_cast<double>(predicted) - exact) / std::fabs(exact);
  report.tail_bound = static_cast<double>(bound);
  report.terms = std::min(n, term_budget);
  report.passed = report.relative_error <= rel_tol;
  return report;
}

}  // namespace ssmass::exactnum
