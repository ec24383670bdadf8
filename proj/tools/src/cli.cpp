#include "ssmass_cli/cli.hpp"

#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ssmass/dieudonne.hpp"
#include "ssmass/exactnum.hpp"
#include "ssmass/fingrp.hpp"
#include "ssmass/massfml.hpp"
#include "ssmass/numfield.hpp"
#include "ssmass/oracle.hpp"
#include "ssmass/quatalg.hpp"

namespace ssmass::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, tsv, text };

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\t') c = ' ';
  return s;
}

// Every command produces rows of key/value records; a single-row result is
// printed as one JSON object, several rows as a JSON array.
struct Output {
  std::vector<Json> rows;
  std::string text;  // preferred text rendering, when the command has one
};

void render(const Output& result, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      if (result.rows.size() == 1)
        out << result.rows.front().dump(2) << "\n";
      else
        out << Json(result.rows).dump(2) << "\n";
      return;
    case Format::tsv: {
      if (result.rows.empty()) return;
      bool first = true;
      for (const auto& [key, _] : result.rows.front().items()) {
        out << (first ? "" : "\t") << key;
        first = false;
      }
      out << "\n";
      for (const auto& row : result.rows) {
        first = true;
        for (const auto& [_, value] : row.items()) {
          out << (first ? "" : "\t") << one_line(cell(value));
          first = false;
        }
        out << "\n";
      }
      return;
    }
    case Format::text:
      if (!result.text.empty()) {
        out << result.text;
        if (result.text.back() != '\n') out << "\n";
        return;
      }
      for (std::size_t r = 0; r < result.rows.size(); ++r) {
        if (r > 0) out << "\n";
        for (const auto& [key, value] : result.rows[r].items()) out << key << ": " << cell(value) << "\n";
      }
      return;
  }
}

void put_mass(Json& row, const massfml::ExactMass& mass) {
  row["mass"] = to_string(mass.value);
  row["numerator"] = to_string(Integer(mass.value.get_num()));
  row["denominator"] = to_string(Integer(mass.value.get_den()));
  row["factored"] = mass.factored_string();
}

void put_order(Json& row, const std::string& key, const fingrp::GroupOrder& order) {
  row[key] = to_string(order.value);
  row[key + "_factored"] = order.factored_string();
}

std::uint64_t term_budget() {
  const char* env = std::getenv("SSMASS_TERM_BUDGET");
  if (env == nullptr || *env == '\0') return exactnum::kDefaultTermBudget;
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || v == 0)
    throw InvalidInput(std::string("SSMASS_TERM_BUDGET must be a positive integer, got '") + env + "'");
  return v;
}

quatalg::QuaternionRamification parse_algebra(const numfield::FieldSpec& field, const std::string& spec,
                                              bool definite) {
  if (spec.find("inf") != std::string::npos)
    throw InvalidInput("infinite ramification is given with --definite, not in the algebra spec");
  auto algebra = quatalg::QuaternionRamification::parse(field, spec);
  if (definite)
    for (int k = 0; k < field.degree(); ++k) algebra.ramified_infinite.insert(k);
  quatalg::require_valid(algebra);
  return algebra;
}

std::vector<std::string> diagnostics_for(const quatalg::QuaternionRamification& algebra) {
  return quatalg::validate(algebra).diagnostics;
}

struct Options {
  std::string format;
  std::string field = "Q";
  std::string algebra = "split";
  std::string zeta_table;
  long p = 0;
  long q = 0;
  long g = 1;
  long m = 1;
  long n = 0;
  long f = 1;
  long i = 1;
  long modulus = 0;
  long p_max = 13;
  long g_max = 4;
  std::optional<long> p_opt;
  std::optional<std::uint64_t> seed;
  bool definite = false;
  double rel_tol = 1e-9;
};

massfml::ZetaTable load_table(const Options& o, bool& present) {
  present = !o.zeta_table.empty();
  return present ? massfml::ZetaTable::load(o.zeta_table) : massfml::ZetaTable{};
}

Output cmd_classical(const Options& o) {
  Json row;
  row["g"] = o.g;
  row["p"] = o.p;
  if (o.g < 1) throw InvalidInput("--g must be at least 1");
  if (!is_prime(o.p)) throw InvalidInput("--p must be prime");
  put_mass(row, massfml::mass_classical(static_cast<int>(o.g), o.p));
  return {{row}, {}};
}

Output cmd_quaternionic(const Options& o) {
  auto field = numfield::FieldSpec::parse(o.field);
  auto algebra = parse_algebra(field, o.algebra, false);
  bool has_table = false;
  auto table = load_table(o, has_table);
  auto mass = massfml::mass_quaternionic(field, algebra, o.p, static_cast<int>(o.m),
                                         has_table ? &table : nullptr);
  auto twisted = quatalg::twist_by_Bp_infty(algebra, o.p);
  Json row;
  row["field"] = field.to_string();
  row["algebra"] = algebra.to_string();
  row["p"] = o.p;
  row["m"] = o.m;
  row["twisted"] = twisted.to_string();
  put_mass(row, mass);
  row["diagnostics"] = diagnostics_for(twisted);
  return {{row}, {}};
}

Output cmd_shimura(const Options& o) {
  auto field = numfield::FieldSpec::parse(o.field);
  auto algebra = parse_algebra(field, o.algebra, o.definite);
  bool has_table = false;
  auto table = load_table(o, has_table);
  auto mass = massfml::mass_shimura(field, algebra, static_cast<int>(o.m), has_table ? &table : nullptr);
  Json row;
  row["field"] = field.to_string();
  row["algebra"] = algebra.to_string();
  row["m"] = o.m;
  put_mass(row, mass);
  row["diagnostics"] = diagnostics_for(algebra);
  return {{row}, {}};
}

Output cmd_count(const Options& o) {
  auto field = numfield::FieldSpec::parse(o.field);
  auto algebra = parse_algebra(field, o.algebra, false);
  bool has_table = false;
  auto table = load_table(o, has_table);
  auto pc = massfml::superspecial_point_count(field, algebra, o.p, static_cast<int>(o.m), o.n,
                                              has_table ? &table : nullptr);
  Json row;
  row["field"] = field.to_string();
  row["algebra"] = algebra.to_string();
  row["p"] = o.p;
  row["m"] = o.m;
  row["N"] = o.n;
  row["count"] = to_string(pc.count);
  put_order(row, "group_order", pc.group_order);
  row["mass"] = to_string(pc.mass.value);
  return {{row}, {}};
}

Output cmd_group(const std::string& which, const Options& o) {
  Json row;
  row["m"] = o.m;
  fingrp::GroupOrder order;
  const int m = static_cast<int>(o.m);
  if (which == "mod-n") {
    auto field = numfield::FieldSpec::parse(o.field);
    row["field"] = field.to_string();
    row["N"] = o.n;
    order = fingrp::sp_order_mod_N(m, field, o.n, o.p_opt);
  } else {
    row["q"] = o.q;
    if (which == "sp-order") order = fingrp::sp_order(m, o.q);
    else if (which == "gl-order") order = fingrp::gl_order(m, o.q);
    else if (which == "parabolic") order = fingrp::siegel_parabolic_order(m, o.q);
    else order = fingrp::isotropic_coset_count(m, o.q);
  }
  put_order(row, "order", order);
  return {{row}, {}};
}

Output cmd_local_index(const Options& o) {
  auto field = numfield::FieldSpec::parse(o.field);
  auto algebra = parse_algebra(field, o.algebra, false);
  auto twisted = quatalg::twist_by_Bp_infty(algebra, o.p);
  auto delta = quatalg::discriminant(twisted);
  auto index = fingrp::local_index(field, o.p, delta, static_cast<int>(o.m));
  Json row;
  row["field"] = field.to_string();
  row["p"] = o.p;
  row["m"] = o.m;
  Json places = Json::array();
  for (const auto& v : delta) places.push_back(numfield::to_string(v));
  row["delta_prime"] = places;
  put_order(row, "index", index);
  return {{row}, {}};
}

Output cmd_check_decomposition(const Options& o, int& exit_code) {
  auto field = numfield::FieldSpec::parse(o.field);
  auto algebra = parse_algebra(field, o.algebra, false);
  bool has_table = false;
  auto table = load_table(o, has_table);
  auto report = massfml::mass_decomposition_check(field, algebra, o.p, static_cast<int>(o.m),
                                                  has_table ? &table : nullptr);
  Json row;
  row["holds"] = report.holds;
  row["quaternionic"] = to_string(report.quaternionic.value);
  row["shimura"] = to_string(report.shimura.value);
  row["local_index"] = to_string(report.local_index.value);
  row["twisted"] = report.twisted.to_string();
  std::ostringstream text;
  text << (report.holds ? "OK" : "MISMATCH") << ": " << to_string(report.quaternionic.value)
       << (report.holds ? " = " : " != ") << to_string(report.shimura.value) << " * "
       << to_string(report.local_index.value);
  if (!report.holds) exit_code = 2;
  return {{row}, text.str()};
}

Output cmd_check_functional(const Options& o, int& exit_code) {
  auto field = numfield::FieldSpec::parse(o.field);
  auto report = exactnum::zeta_functional_check(field, static_cast<unsigned>(o.i), o.rel_tol, term_budget());
  Json row;
  row["field"] = field.to_string();
  row["i"] = o.i;
  row["passed"] = report.passed;
  row["exact"] = to_string(report.exact);
  row["predicted"] = report.predicted;
  row["numeric_positive"] = report.numeric_positive;
  row["relative_error"] = report.relative_error;
  row["tail_bound"] = report.tail_bound;
  row["terms"] = report.terms;
  std::ostringstream text;
  text.precision(17);
  text << (report.passed ? "OK" : "FAILED") << ": zeta_F(" << 1 - 2 * o.i << ") = " << to_string(report.exact)
       << ", predicted " << report.predicted << " (relative error " << report.relative_error << ", "
       << report.terms << " terms)";
  if (!report.passed) exit_code = 2;
  return {{row}, text.str()};
}

Output cmd_dieudonne(const Options& o, int& exit_code) {
  auto [standard, declared] = dieudonne::standard_module(o.p, static_cast<int>(o.f), static_cast<int>(o.m));
  auto module = o.seed ? dieudonne::scramble(standard, *o.seed) : standard;
  auto basis = dieudonne::good_basis(module);
  auto report = dieudonne::verify_good_basis(module, basis);
  Json row;
  row["p"] = o.p;
  row["f"] = o.f;
  row["m"] = o.m;
  row["seed"] = o.seed ? Json(*o.seed) : Json(nullptr);
  row["ok"] = report.ok;
  row["violations"] = report.violations;
  Json grades = Json::array();
  for (int i = 0; i < module.f; ++i) {
    Json g;
    for (int j = 0; j < module.m; ++j) {
      g["X_" + std::to_string(j + 1)] = dieudonne::to_string(module.r(), basis.x(i, j));
      g["Y_" + std::to_string(j + 1)] = dieudonne::to_string(module.r(), basis.y(i, j));
    }
    grades.push_back(g);
  }
  row["basis"] = grades;
  if (!report.ok) exit_code = 2;
  return {{row}, dieudonne::dump(module, basis, report)};
}

Output cmd_oracle(const std::string& which, const Options& o) {
  Json row;
  if (which == "bernoulli") {
    row["n"] = o.n;
    Rational b = oracle::bernoulli_alt(static_cast<int>(o.n));
    row["value"] = to_string(b);
    row["method"] = "Akiyama-Tanigawa triangle";
    return {{row}, {}};
  }
  oracle::EnumerationResult r;
  row["m"] = o.m;
  if (which == "sp-mod") {
    row["modulus"] = o.modulus;
    r = oracle::enum_sp_mod(static_cast<int>(o.m), o.modulus);
  } else {
    row["q"] = o.q;
    if (which == "sp") r = oracle::enum_sp(static_cast<int>(o.m), o.q);
    else if (which == "isotropic") r = oracle::enum_isotropic(static_cast<int>(o.m), o.q);
    else r = oracle::enum_parabolic(static_cast<int>(o.m), o.q);
  }
  row["count"] = to_string(r.count);
  row["method"] = r.method;
  row["elapsed_seconds"] = r.elapsed.count();
  return {{row}, {}};
}

Output cmd_table(const Options& o) {
  if (o.p_max < 2 || o.p_max > 1000 || o.g_max < 1 || o.g_max > 12)
    throw InvalidInput("table needs 2 <= --p-max <= 1000 and 1 <= --g-max <= 12");
  Output result;
  for (long p = 2; p <= o.p_max; ++p) {
    if (!is_prime(p)) continue;
    for (long g = 1; g <= o.g_max; ++g) {
      Json row;
      row["p"] = p;
      row["g"] = g;
      put_mass(row, massfml::mass_classical(static_cast<int>(g), p));
      result.rows.push_back(row);
    }
  }
  std::ostringstream text;
  for (const auto& row : result.rows)
    text << "p=" << cell(row["p"]) << " g=" << cell(row["g"]) << "  " << cell(row["mass"]) << "  = "
         << cell(row["factored"]) << "\n";
  result.text = text.str();
  return result;
}

Output cmd_zeta(const Options& o) {
  auto field = numfield::FieldSpec::parse(o.field);
  if (o.i < 1) throw InvalidInput("--i must be at least 1");
  auto z = exactnum::dedekind_zeta_neg(field, static_cast<unsigned>(o.i));
  Json row;
  row["field"] = field.to_string();
  row["argument"] = z.argument;
  row["value"] = to_string(z.value);
  return {{row}, {}};
}

Output cmd_bernoulli(const Options& o) {
  if (o.n < 0) throw InvalidInput("--n must be nonnegative");
  Json row;
  row["n"] = o.n;
  row["value"] = to_string(exactnum::bernoulli(static_cast<unsigned>(o.n)));
  return {{row}, {}};
}

std::string error_line(const char* kind, const std::string& what) {
  return std::string("error: ") + kind + ": " + one_line(what) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact mass formulas for superspecial abelian varieties", "ssmass"};
  app.require_subcommand(1);
  // Subcommands pass unknown options up, so --format may follow them.
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json, tsv or text")
      ->check(CLI::IsMember({"json", "tsv", "text"}));

  std::function<Output(int&)> action;
  Format default_format = Format::json;

  auto field_opt = [&](CLI::App* c) { c->add_option("--field", o.field, "Q or Q(sqrt:D)"); };
  auto algebra_opt = [&](CLI::App* c) {
    c->add_option("--algebra", o.algebra, "split, or a list like 11:0,11:1");
  };
  auto table_opt = [&](CLI::App* c) { c->add_option("--zeta-table", o.zeta_table, "file of D, i, value lines"); };

  auto* classical = app.add_subcommand("classical", "mass of principally polarized superspecial varieties");
  classical->add_option("--g", o.g)->required();
  classical->add_option("--p", o.p)->required();
  classical->callback([&] { action = [&](int&) { return cmd_classical(o); }; });

  auto* quaternionic = app.add_subcommand("quaternionic", "mass with O_B-action");
  field_opt(quaternionic);
  algebra_opt(quaternionic);
  table_opt(quaternionic);
  quaternionic->add_option("--p", o.p)->required();
  quaternionic->add_option("--m", o.m)->required();
  quaternionic->callback([&] { action = [&](int&) { return cmd_quaternionic(o); }; });

  auto* shimura = app.add_subcommand("shimura", "quaternion-Hermitian mass of a definite algebra");
  field_opt(shimura);
  algebra_opt(shimura);
  table_opt(shimura);
  shimura->add_option("--m", o.m)->required();
  shimura->add_flag("--definite", o.definite, "ramify every infinite place");
  shimura->callback([&] { action = [&](int&) { return cmd_shimura(o); }; });

  auto* count = app.add_subcommand("count", "superspecial points with level-N structure");
  field_opt(count);
  algebra_opt(count);
  table_opt(count);
  count->add_option("--p", o.p)->required();
  count->add_option("--m", o.m)->required();
  count->add_option("--N", o.n)->required();
  count->callback([&] { action = [&](int&) { return cmd_count(o); }; });

  auto* group = app.add_subcommand("group", "finite group orders");
  group->require_subcommand(1);
  for (const char* name : {"sp-order", "gl-order", "parabolic", "cosets"}) {
    auto* sub = group->add_subcommand(name);
    sub->add_option("--m", o.m)->required();
    sub->add_option("--q", o.q)->required();
    std::string which = name;
    sub->callback([&, which] { action = [&, which](int&) { return cmd_group(which, o); }; });
  }
  auto* mod_n = group->add_subcommand("mod-n", "|Sp_2m(O_F/N)|");
  mod_n->add_option("--m", o.m)->required();
  field_opt(mod_n);
  mod_n->add_option("--N", o.n)->required();
  mod_n->add_option("--p", o.p_opt, "characteristic that N must avoid");
  mod_n->callback([&] { action = [&](int&) { return cmd_group("mod-n", o); }; });

  auto* local = app.add_subcommand("local-index", "index of the Siegel parabolic at p");
  field_opt(local);
  algebra_opt(local);
  local->add_option("--p", o.p)->required();
  local->add_option("--m", o.m)->required();
  local->callback([&] { action = [&](int&) { return cmd_local_index(o); }; });

  auto* check = app.add_subcommand("check", "identity checks");
  check->require_subcommand(1);
  auto* decomposition = check->add_subcommand("decomposition");
  field_opt(decomposition);
  algebra_opt(decomposition);
  table_opt(decomposition);
  decomposition->add_option("--p", o.p)->required();
  decomposition->add_option("--m", o.m)->required();
  decomposition->callback([&] {
    default_format = Format::text;
    action = [&](int& code) { return cmd_check_decomposition(o, code); };
  });
  auto* functional = check->add_subcommand("functional");
  field_opt(functional);
  functional->add_option("--i", o.i)->required();
  functional->add_option("--rel-tol", o.rel_tol);
  functional->callback([&] {
    default_format = Format::text;
    action = [&](int& code) { return cmd_check_functional(o, code); };
  });

  auto* dieu = app.add_subcommand("dieudonne", "good basis of a scrambled standard module");
  dieu->add_option("--p", o.p)->required();
  dieu->add_option("--f", o.f)->required();
  dieu->add_option("--m", o.m)->required();
  dieu->add_option("--seed", o.seed, "omit to use the unscrambled module");
  dieu->callback([&] {
    default_format = Format::text;
    action = [&](int& code) { return cmd_dieudonne(o, code); };
  });

  auto* orc = app.add_subcommand("oracle", "brute-force enumerations");
  orc->require_subcommand(1);
  for (const char* name : {"sp", "isotropic", "parabolic"}) {
    auto* sub = orc->add_subcommand(name);
    sub->add_option("--m", o.m)->required();
    sub->add_option("--q", o.q)->required();
    std::string which = name;
    sub->callback([&, which] { action = [&, which](int&) { return cmd_oracle(which, o); }; });
  }
  auto* sp_mod = orc->add_subcommand("sp-mod");
  sp_mod->add_option("--m", o.m);
  sp_mod->add_option("--modulus", o.modulus)->required();
  sp_mod->callback([&] { action = [&](int&) { return cmd_oracle("sp-mod", o); }; });
  auto* b_alt = orc->add_subcommand("bernoulli");
  b_alt->add_option("--n", o.n)->required();
  b_alt->callback([&] { action = [&](int&) { return cmd_oracle("bernoulli", o); }; });

  auto* table = app.add_subcommand("table", "grid of classical masses");
  table->add_option("--p-max", o.p_max);
  table->add_option("--g-max", o.g_max);
  table->callback([&] { action = [&](int&) { return cmd_table(o); }; });

  auto* zeta = app.add_subcommand("zeta", "zeta_F(1-2i)");
  field_opt(zeta);
  zeta->add_option("--i", o.i)->required();
  zeta->callback([&] { action = [&](int&) { return cmd_zeta(o); }; });

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli number B_n");
  bern->add_option("--n", o.n)->required();
  bern->callback([&] { action = [&](int&) { return cmd_bernoulli(o); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_line("usage", e.what());
    return 1;
  }

  try {
    int code = 0;
    Output result = action(code);
    Format format = default_format;
    if (o.format == "json") format = Format::json;
    if (o.format == "tsv") format = Format::tsv;
    if (o.format == "text") format = Format::text;
    render(result, format, out);
    return code;
  } catch (const InternalConsistencyError& e) {
    err << error_line("internal", e.what());
    return 2;
  } catch (const InvalidInput& e) {
    err << error_line("invalid-input", e.what());
    return 1;
  } catch (const ConvergenceError& e) {
    err << error_line("convergence", e.what());
    return 1;
  } catch (const std::exception& e) {
    err << error_line("invalid-input", e.what());
    return 1;
  }
}

}  // namespace ssmass::cli
