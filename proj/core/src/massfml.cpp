#include "ssmass/massfml.hpp"

#include <fstream>
#include <sstream>

#include "ssmass/exactnum.hpp"

namespace ssmass::massfml {

using numfield::FieldSpec;
using numfield::PlaceData;
using quatalg::QuaternionRamification;

namespace {

void require_field_match(const FieldSpec& field, const QuaternionRamification& algebra) {
  if (!(field == algebra.field))
    throw InvalidInput("algebra is over " + algebra.field.to_string() + ", not " +
                       field.to_string());
}

void require_rank(int m) {
  if (m < 1) throw InvalidInput("m must be >= 1, got " + std::to_string(m));
}

int minus_one_pow(long e) { return e % 2 == 0 ? 1 : -1; }

// Common shape of the quaternionic, Shimura and classical formulas:
// sign / 2^(md) prod_i { ζ_F(1-2i) prod_{v|Δ} (q_v^i + (-1)^i) prod_{v∈extra} (q_v^i + 1) }.
ExactMass assemble(const FieldSpec& field, int m, const std::vector<PlaceData>& delta,
                   const std::vector<PlaceData>& extra, const ZetaTable* table, LocalRole role) {
  const long d = field.degree();
  ExactMass out;
  out.sign = minus_one_pow(d * m * (m + 1) / 2);
  out.two_power = static_cast<unsigned>(m * d);
  out.value = Rational(out.sign) / Rational(ipow(Integer(2), out.two_power));
  for (int i = 1; i <= m; ++i) {
    unsigned ui = static_cast<unsigned>(i);
    Rational z = resolve_zeta(field, ui, table);
    out.zeta.push_back({ui, z});
    out.value *= z;
    for (const auto& v : delta) {
      Integer val = ipow(Integer(v.residue_size), ui) + minus_one_pow(i);
      out.local.push_back({v, ui, role, val});
      out.value *= val;
    }
    for (const auto& v : extra) {
      Integer val = ipow(Integer(v.residue_size), ui) + 1;
      out.local.push_back({v, ui, LocalRole::unramified_p, val});
      out.value *= val;
    }
  }
  out.value.canonicalize();
  if (out.value <= 0)
    throw InternalConsistencyError("mass evaluated to a non-positive value " +
                                   to_string(out.value));
  return out;
}

}  // namespace

ZetaTable ZetaTable::parse(std::istream& in) {
  ZetaTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, '\t')) fields.push_back(item);
    auto fail = [&](const std::string& why) {
      throw InvalidInput("zeta table line " + std::to_string(lineno) + ": " + why);
    };
    if (fields.size() != 3) fail("expected 3 tab-separated fields");
    long disc = 0;
    long i = 0;
    try {
      std::size_t used = 0;
      disc = std::stol(fields[0], &used);
      if (used != fields[0].size()) fail("bad discriminant");
      i = std::stol(fields[1], &used);
      if (used != fields[1].size()) fail("bad index");
    } catch (const std::logic_error&) {
      fail("non-numeric discriminant or index");
    }
    if (disc < 1 || i < 1) fail("discriminant and i must be positive");
    Rational value;
    try {
      value = parse_rational(fields[2]);
    } catch (const InvalidInput& e) {
      fail(e.what());
    }
    table.insert(disc, static_cast<unsigned>(i), value);
  }
  return table;
}

ZetaTable ZetaTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open zeta table '" + path + "'");
  return parse(in);
}

void ZetaTable::insert(long discriminant, unsigned i, const Rational& value) {
  entries_[{discriminant, i}] = value;
}

const Rational* ZetaTable::find(long discriminant, unsigned i) const {
  auto it = entries_.find({discriminant, i});
  return it == entries_.end() ? nullptr : &it->second;
}

Rational resolve_zeta(const FieldSpec& field, unsigned i, const ZetaTable* table) {
  const Rational* external = table ? table->find(field.discriminant(), i) : nullptr;
  if (field.degree() <= 2) {
    Rational computed = exactnum::dedekind_zeta_neg(field, i).value;
    if (external && *external != computed)
      throw InternalConsistencyError("zeta table value " + to_string(*external) + " for " +
                                     field.to_string() + ", i=" + std::to_string(i) +
                                     " disagrees with computed " + to_string(computed));
    return computed;
  }
  if (!external)
    throw UnsupportedInput("no zeta value for " + field.to_string() + ", i=" + std::to_string(i));
  return *external;
}

Rational ExactMass::product_of_factors() const {
  Rational out = Rational(sign) / Rational(ipow(Integer(2), two_power));
  for (const auto& z : zeta) out *= z.value;
  for (const auto& l : local) out *= l.value;
  out.canonicalize();
  return out;
}

std::string ExactMass::factored_string() const {
  std::string out = std::string(sign < 0 ? "-" : "") + "1/2^" + std::to_string(two_power);
  for (const auto& z : zeta)
    out += " * zeta(" + std::to_string(1 - 2 * static_cast<long>(z.i)) + ")[" +
           to_string(z.value) + "]";
  for (const auto& l : local) {
    std::string sgn = l.role == LocalRole::unramified_p || l.i % 2 == 0 ? "+" : "-";
    out += " * (" + std::to_string(l.place.residue_size) + "^" + std::to_string(l.i) + sgn +
           "1)";
  }
  return out;
}

ExactMass mass_classical(int g, long p) {
  if (g < 1) throw InvalidInput("g must be >= 1, got " + std::to_string(g));
  if (!is_prime(p)) throw InvalidInput("p must be prime, got " + std::to_string(p));
  const FieldSpec q = FieldSpec::rational();
  return assemble(q, g, numfield::places_above(q, p), {}, nullptr, LocalRole::classical);
}

ExactMass mass_quaternionic(const FieldSpec& field, const QuaternionRamification& algebra,
                            long p, int m, const ZetaTable* zeta) {
  require_field_match(field, algebra);
  require_rank(m);
  QuaternionRamification twisted = quatalg::twist_by_Bp_infty(algebra, p);
  std::vector<PlaceData> delta = quatalg::discriminant(twisted);
  std::vector<PlaceData> extra;
  for (const auto& v : numfield::places_above(field, p))
    if (!quatalg::divides_discriminant(twisted, v)) extra.push_back(v);
  return assemble(field, m, delta, extra, zeta, LocalRole::discriminant);
}

ExactMass mass_shimura(const FieldSpec& field, const QuaternionRamification& definite, int m,
                       const ZetaTable* zeta) {
  require_field_match(field, definite);
  require_rank(m);
  quatalg::ValidationReport report = quatalg::validate(definite);
  quatalg::require_valid(definite);
  if (!report.totally_definite)
    throw InvalidInput("algebra " + definite.to_string() + " is not totally definite");
  return assemble(field, m, quatalg::discriminant(definite), {}, zeta, LocalRole::discriminant);
}

DecompositionReport mass_decomposition_check(const FieldSpec& field,
                                             const QuaternionRamification& algebra, long p,
                                             int m, const ZetaTable* zeta) {
  DecompositionReport report;
  report.quaternionic = mass_quaternionic(field, algebra, p, m, zeta);
  report.twisted = quatalg::twist_by_Bp_infty(algebra, p);
  report.shimura = mass_shimura(field, report.twisted, m, zeta);
  report.local_index = fingrp::local_index(field, p, quatalg::discriminant(report.twisted), m);
  report.holds =
      report.quaternionic.value == report.shimura.value * Rational(report.local_index.value);
  return report;
}

PointCount superspecial_point_count(const FieldSpec& field, const QuaternionRamification& algebra,
                                    long p, int m, long level, const ZetaTable* zeta) {
  require_field_match(field, algebra);
  if (level < 3) throw InvalidInput("level N must be >= 3, got " + std::to_string(level));
  if (gcd(level, p) != 1)
    throw InvalidInput("level N = " + std::to_string(level) + " is not prime to p = " +
                       std::to_string(p));
  for (const auto& [ell, k] : fingrp::factorize(level)) {
    for (const auto& ref : algebra.ramified_finite)
      if (ref.first == ell)
        throw UnsupportedInput("algebra ramifies above " + std::to_string(ell) +
                               " | N; only the split group order mod N is implemented");
  }
  PointCount out;
  out.level = level;
  out.mass = mass_quaternionic(field, algebra, p, m, zeta);
  out.group_order = fingrp::sp_order_mod_N(m, field, level, p);
  Rational product = out.mass.value * Rational(out.group_order.value);
  product.canonicalize();
  if (product.get_den() != 1 || product <= 0)
    throw InternalConsistencyError("point count " + to_string(product) +
                                   " is not a positive integer");
  out.count = product.get_num();
  return out;
}

}  // namespace ssmass::massfml
