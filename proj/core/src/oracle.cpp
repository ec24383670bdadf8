#include "ssmass/oracle.hpp"

#include <array>
#include <functional>
#include <vector>

namespace ssmass::oracle {

namespace {

using Clock = std::chrono::steady_clock;

// Addition and multiplication tables of F_q, elements encoded as base-p digit
// strings of polynomial coefficients.
class SmallField {
 public:
  explicit SmallField(long q) : q_(static_cast<int>(q)) {
    long p = 0;
    int k = 0;
    if (!is_prime_power(q, &p, &k) || q > 9)
      throw InvalidInput("oracle fields are F_q with q a prime power <= 9");
    p_ = static_cast<int>(p);
    // Monic modulus x^k - (low coefficients); tails for x^2+x+1, x^3+x+1, x^2+1.
    std::vector<int> reduce(k, 0);
    if (q == 4) reduce = {1, 1};
    if (q == 8) reduce = {1, 1, 0};
    if (q == 9) reduce = {1, 0};
    auto digits = [&](int a) {
      std::vector<int> d(k);
      for (int i = 0; i < k; ++i, a /= p_) d[i] = a % p_;
      return d;
    };
    auto encode = [&](const std::vector<int>& d) {
      int a = 0;
      for (int i = k - 1; i >= 0; --i) a = a * p_ + ((d[i] % p_) + p_) % p_;
      return a;
    };
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = da[i] + db[i];
        add_[a * q_ + b] = encode(s);
        std::vector<int> prod(2 * k, 0);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) prod[i + j] += da[i] * db[j];
        for (int d = 2 * k - 1; d >= k; --d) {
          int top = prod[d] % p_;
          prod[d] = 0;
          // x^k = -(reduce) as the tail lists x^k + tail = 0
          for (int i = 0; i < k; ++i) prod[d - k + i] -= top * reduce[i];
        }
        prod.resize(k);
        mul_[a * q_ + b] = encode(prod);
      }
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b)
        if (add_[a * q_ + b] == 0) neg_[a] = b;
  }

  int size() const { return q_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

 private:
  int q_ = 0;
  int p_ = 0;
  std::vector<int> add_, mul_;
  std::array<int, 9> neg_{};
};

using Vector = std::vector<int>;

std::vector<Vector> all_vectors(const SmallField& field, int dim) {
  std::vector<Vector> out;
  Vector v(dim, 0);
  for (;;) {
    out.push_back(v);
    int i = 0;
    while (i < dim && ++v[i] == field.size()) v[i++] = 0;
    if (i == dim) break;
  }
  return out;
}

// Standard form: coordinates (x_1..x_m, y_1..y_m), <x_i, y_i> = 1.
int pairing(const SmallField& field, const Vector& a, const Vector& b) {
  const int m = static_cast<int>(a.size()) / 2;
  int s = 0;
  for (int i = 0; i < m; ++i) {
    s = field.add(s, field.mul(a[i], b[m + i]));
    s = field.sub(s, field.mul(a[m + i], b[i]));
  }
  return s;
}

bool is_zero(const Vector& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

void check_sp_bounds(int m, long q) {
  if (m < 1 || m > 2) throw InvalidInput("oracle enumeration supports m = 1 or 2");
  if ((m == 1 && q > 9) || (m == 2 && q > 5))
    throw InvalidInput("oracle size bound exceeded: q <= 9 for m = 1, q <= 5 for m = 2");
}

// Counts ordered symplectic bases; `in_lagrangian` restricts each e_k to the
// span of the first m coordinates.
Integer count_symplectic_bases(const SmallField& field, int m, bool in_lagrangian) {
  const auto space = all_vectors(field, 2 * m);
  Integer total = 0;
  std::function<void(const std::vector<Vector>&, int)> recurse =
      [&](const std::vector<Vector>& complement, int level) {
        if (level == m) {
          ++total;
          return;
        }
        for (const auto& e : complement) {
          if (is_zero(e)) continue;
          if (in_lagrangian) {
            bool inside = true;
            for (int i = m; i < 2 * m; ++i) inside = inside && e[i] == 0;
            if (!inside) continue;
          }
          for (const auto& f : complement) {
            if (pairing(field, e, f) != 1) continue;
            std::vector<Vector> next;
            for (const auto& v : complement)
              if (pairing(field, v, e) == 0 && pairing(field, v, f) == 0) next.push_back(v);
            recurse(next, level + 1);
          }
        }
      };
  recurse(space, 0);
  return total;
}

}  // namespace

EnumerationResult enum_sp(int m, long q) {
  check_sp_bounds(m, q);
  const SmallField field(q);
  const auto start = Clock::now();
  EnumerationResult out;
  out.count = count_symplectic_bases(field, m, false);
  out.elapsed = Clock::now() - start;
  out.method = "ordered symplectic bases (e, f with <e,f> = 1, recurse on the complement)";
  return out;
}

EnumerationResult enum_parabolic(int m, long q) {
  check_sp_bounds(m, q);
  const SmallField field(q);
  const auto start = Clock::now();
  EnumerationResult out;
  out.count = count_symplectic_bases(field, m, true);
  out.elapsed = Clock::now() - start;
  out.method = "ordered symplectic bases with every e_k in span(e_1..e_m)";
  return out;
}

EnumerationResult enum_isotropic(int m, long q) {
  if (m < 1 || m > 2) throw InvalidInput("oracle enumeration supports m = 1 or 2");
  if (q > 5) throw InvalidInput("oracle size bound exceeded: q <= 5");
  const SmallField field(q);
  const auto start = Clock::now();
  const int n = 2 * m;
  Integer count = 0;
  // Pivot columns as a bitmask; free entries filled in all ways.
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != m) continue;
    std::vector<int> pivots;
    for (int c = 0; c < n; ++c)
      if (mask & (1 << c)) pivots.push_back(c);
    // Free slots: row r, column c > pivots[r], c not a pivot.
    std::vector<std::pair<int, int>> slots;
    for (int r = 0; r < m; ++r)
      for (int c = pivots[r] + 1; c < n; ++c)
        if (!(mask & (1 << c))) slots.emplace_back(r, c);
    std::vector<int> fill(slots.size(), 0);
    for (;;) {
      std::vector<Vector> rows(m, Vector(n, 0));
      for (int r = 0; r < m; ++r) rows[r][pivots[r]] = 1;
      for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = fill[s];
      bool isotropic = true;
      for (int a = 0; a < m && isotropic; ++a)
        for (int b = a + 1; b < m; ++b)
          if (pairing(field, rows[a], rows[b]) != 0) isotropic = false;
      if (isotropic) ++count;
      std::size_t i = 0;
      while (i < fill.size() && ++fill[i] == field.size()) fill[i++] = 0;
      if (i == fill.size()) break;
    }
  }
  EnumerationResult out;
  out.count = count;
  out.elapsed = Clock::now() - start;
  out.method = "reduced row echelon scan of m-dimensional subspaces";
  return out;
}

EnumerationResult enum_sp_mod(int m, long modulus) {
  if (m != 1) throw InvalidInput("enum_sp_mod supports m = 1 only");
  if (modulus < 2 || modulus > 16) throw InvalidInput("enum_sp_mod needs 2 <= modulus <= 16");
  const auto start = Clock::now();
  Integer count = 0;
  for (long a = 0; a < modulus; ++a)
    for (long b = 0; b < modulus; ++b)
      for (long c = 0; c < modulus; ++c)
        for (long d = 0; d < modulus; ++d)
          if (((a * d - b * c) % modulus + modulus) % modulus == 1) ++count;
  EnumerationResult out;
  out.count = count;
  out.elapsed = Clock::now() - start;
  out.method = "scan of all 2x2 matrices over Z/" + std::to_string(modulus);
  return out;
}

Rational bernoulli_alt(int n) {
  if (n < 0 || n > 30) throw InvalidInput("bernoulli_alt needs 0 <= n <= 30");
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    a[k] = Rational(1, k + 1);
    for (int j = k; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
  }
  // The triangle produces B_1 = +1/2.
  return n == 1 ? Rational(-1, 2) : a[0];
}

}  // namespace ssmass::oracle
