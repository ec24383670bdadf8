#include "ssmass/quatalg.hpp"

#include <sstream>

#include "ssmass/common.hpp"

namespace ssmass::quatalg {

using numfield::PlaceData;

namespace {

bool place_exists(const numfield::FieldSpec& field, const FinitePlaceRef& ref) {
  if (!is_prime(ref.first) || ref.second < 0) return false;
  return ref.second < static_cast<int>(numfield::places_above(field, ref.first).size());
}

long parse_long(const std::string& s, const std::string& context) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw InvalidAlgebra("malformed algebra marker '" + context + "'");
  return value;
}

}  // namespace

QuaternionRamification QuaternionRamification::split(const numfield::FieldSpec& field) {
  QuaternionRamification out;
  out.field = field;
  return out;
}

QuaternionRamification QuaternionRamification::definite_over_q(long p) {
  if (!is_prime(p)) throw InvalidInput("B_{p,inf} needs a prime p, got " + std::to_string(p));
  QuaternionRamification out;
  out.ramified_finite.insert({p, 0});
  out.ramified_infinite.insert(0);
  return out;
}

QuaternionRamification QuaternionRamification::parse(const numfield::FieldSpec& field,
                                                     const std::string& spec) {
  QuaternionRamification out = split(field);
  if (spec == "split") return out;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw InvalidAlgebra("algebra marker needs 'p:idx' or 'inf:k', got '" + item + "'");
    std::string head = item.substr(0, colon);
    long index = parse_long(item.substr(colon + 1), item);
    if (head == "inf") {
      if (index < 0 || index >= field.degree())
        throw InvalidAlgebra("no infinite place " + std::to_string(index) + " in " +
                             field.to_string());
      out.ramified_infinite.insert(static_cast<int>(index));
      continue;
    }
    FinitePlaceRef ref{parse_long(head, item), static_cast<int>(index)};
    if (!place_exists(field, ref))
      throw InvalidAlgebra("no finite place '" + item + "' in " + field.to_string());
    out.ramified_finite.insert(ref);
  }
  return out;
}

std::string QuaternionRamification::to_string() const {
  if (ramified_finite.empty() && ramified_infinite.empty()) return "split";
  std::string out;
  for (const auto& [p, idx] : ramified_finite) {
    if (!out.empty()) out += ',';
    out += std::to_string(p) + ":" + std::to_string(idx);
  }
  for (int k : ramified_infinite) {
    if (!out.empty()) out += ',';
    out += "inf:" + std::to_string(k);
  }
  return out;
}

ValidationReport validate(const QuaternionRamification& algebra) {
  ValidationReport report;
  report.valid = true;
  for (const auto& ref : algebra.ramified_finite) {
    if (!place_exists(algebra.field, ref)) {
      report.valid = false;
      report.diagnostics.push_back("finite place " + std::to_string(ref.first) + ":" +
                                   std::to_string(ref.second) + " does not exist");
    }
  }
  for (int k : algebra.ramified_infinite) {
    if (k < 0 || k >= algebra.field.degree()) {
      report.valid = false;
      report.diagnostics.push_back("infinite place " + std::to_string(k) + " does not exist");
    }
  }
  std::size_t parity = algebra.ramified_finite.size() + algebra.ramified_infinite.size();
  if (parity % 2 != 0) {
    report.valid = false;
    report.diagnostics.push_back("odd number of ramified places (" + std::to_string(parity) +
                                 ") violates reciprocity");
  }
  report.totally_indefinite = algebra.ramified_infinite.empty();
  report.totally_definite =
      static_cast<int>(algebra.ramified_infinite.size()) == algebra.field.degree();
  if (report.valid && report.totally_definite && algebra.ramified_finite.empty())
    report.diagnostics.push_back("totally definite with trivial finite discriminant: not a "
                                 "division algebra");
  return report;
}

void require_valid(const QuaternionRamification& algebra) {
  ValidationReport report = validate(algebra);
  if (report.valid) return;
  std::string msg = "invalid quaternion algebra " + algebra.to_string() + ":";
  for (const auto& d : report.diagnostics) msg += " " + d + ";";
  throw InvalidAlgebra(msg);
}

QuaternionRamification tensor_with_Bp_infty(const QuaternionRamification& algebra, long p) {
  QuaternionRamification out = algebra;
  // Every real place picks up invariant 1/2.
  for (int k = 0; k < algebra.field.degree(); ++k) {
    if (!out.ramified_infinite.erase(k)) out.ramified_infinite.insert(k);
  }
  // At v | p the invariant is [F_v : Q_p]/2 = e_v f_v / 2 mod 1.
  for (const PlaceData& v : numfield::places_above(algebra.field, p)) {
    if ((v.ram_index * v.residue_degree) % 2 == 0) continue;
    FinitePlaceRef ref{p, v.index};
    if (!out.ramified_finite.erase(ref)) out.ramified_finite.insert(ref);
  }
  return out;
}

QuaternionRamification twist_by_Bp_infty(const QuaternionRamification& algebra, long p) {
  require_valid(algebra);
  if (!is_prime(p)) throw InvalidInput("twist needs a prime p, got " + std::to_string(p));
  if (!algebra.ramified_infinite.empty())
    throw InvalidInput("twist needs a totally indefinite algebra; " + algebra.to_string() +
                       " ramifies at an infinite place");
  if (!numfield::is_unramified(algebra.field, p))
    throw InvalidInput("p = " + std::to_string(p) + " ramifies in " + algebra.field.to_string());
  for (const auto& ref : algebra.ramified_finite) {
    if (ref.first == p)
      throw InvalidInput("p = " + std::to_string(p) + " ramifies in the algebra at place " +
                         std::to_string(ref.first) + ":" + std::to_string(ref.second));
  }
  return tensor_with_Bp_infty(algebra, p);
}

std::vector<PlaceData> discriminant(const QuaternionRamification& algebra) {
  std::vector<PlaceData> out;
  for (const auto& [p, idx] : algebra.ramified_finite) {
    auto places = numfield::places_above(algebra.field, p);
    if (idx < 0 || idx >= static_cast<int>(places.size()))
      throw InvalidAlgebra("finite place " + std::to_string(p) + ":" + std::to_string(idx) +
                           " does not exist");
    out.push_back(places[idx]);
  }
  return out;
}

bool divides_discriminant(const QuaternionRamification& algebra, const PlaceData& v) {
  return algebra.ramified_finite.count({v.residue_char, v.index}) > 0;
}

LocalGroupType local_group_type(const QuaternionRamification& bprime, const PlaceData& v) {
  auto places = numfield::places_above(bprime.field, v.residue_char);
  if (v.index < 0 || v.index >= static_cast<int>(places.size()) || places[v.index] != v)
    throw InvalidInput("place " + numfield::to_string(v) + " is not a place of " +
                       bprime.field.to_string());
  return {v, divides_discriminant(bprime, v) ? GroupKind::quaternion_unitary
                                             : GroupKind::symplectic};
}

std::string to_string(GroupKind kind) {
  return kind == GroupKind::symplectic ? "symplectic" : "quaternion-unitary";
}

}  // namespace ssmass::quatalg
