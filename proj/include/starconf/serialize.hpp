#pragma once

#include "starconf/symbolic.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace starconf {

using Json = nlohmann::ordered_json;

inline Json vec_json(const Vec3& v) { return Json::array({v[0], v[1], v[2]}); }

inline Vec3 vec_from_json(const Json& j, const PrimeField& f) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected three coordinates");
  Vec3 v{};
  for (int i = 0; i < 3; ++i) {
    const auto x = j.at(i).get<std::int64_t>();
    v[i] = f.from_int(x);
  }
  return v;
}

inline Json to_json(const GenericityCertificate& c) {
  Json checks = Json::array();
  for (const auto& ch : c.checks) checks.push_back({{"description", ch.description}, {"pass", ch.pass}});
  return {{"seed", c.seed}, {"checks", checks}, {"notes", c.notes}};
}

inline Json to_json(const Configuration& cfg) {
  Json j;
  j["kind"] = to_string(cfg.kind);
  j[cfg.kind == ConfigKind::GenericPoints || cfg.kind == ConfigKind::Custom ? "n" : "d"] = cfg.parameter;
  j["seed"] = cfg.seed;
  j["prime"] = cfg.ring->prime();
  Json pts = Json::array();
  for (const auto& p : cfg.points)
    pts.push_back({{"label", p.label}, {"coords", vec_json(p.point.coords())}, {"multiplicity", p.multiplicity}});
  j["points"] = pts;
  Json lines = Json::array(), aux = Json::array();
  for (const auto& L : cfg.lines) lines.push_back(vec_json(L.coeffs()));
  for (const auto& L : cfg.aux_lines) aux.push_back(vec_json(L.coeffs()));
  j["lines"] = lines;
  j["aux_lines"] = aux;
  j["extra_points"] = cfg.extra_points;
  j["certificate"] = to_json(cfg.certificate);
  return j;
}

// Reads a configuration and re-checks the structural invariants that do not
// depend on how it was sampled.
inline Configuration configuration_from_json(const Json& j) {
  Configuration cfg;
  cfg.kind = parse_config_kind(j.at("kind").get<std::string>());
  cfg.parameter = j.contains("d") ? j["d"].get<unsigned>() : j.value("n", 0u);
  cfg.seed = j.value("seed", std::uint64_t{0});
  cfg.ring = make_ring(j.value("prime", std::uint64_t{PrimeField::kDefaultPrime}));
  const auto& f = cfg.field();
  for (const auto& p : j.at("points")) {
    ConfigPoint cp{ProjectivePoint(vec_from_json(p.at("coords"), f), f), p.value("multiplicity", 1u),
                   p.value("label", std::string("p_") + std::to_string(cfg.points.size() + 1))};
    if (cp.multiplicity == 0) throw std::invalid_argument("multiplicity must be positive");
    for (const auto& q : cfg.points)
      if (q.point == cp.point) throw std::invalid_argument("configuration points must be distinct");
    cfg.points.push_back(std::move(cp));
  }
  if (cfg.points.empty()) throw std::invalid_argument("configuration has no points");
  if (j.contains("lines"))
    for (const auto& l : j["lines"]) cfg.lines.emplace_back(vec_from_json(l, f), f);
  if (j.contains("aux_lines"))
    for (const auto& l : j["aux_lines"]) cfg.aux_lines.emplace_back(vec_from_json(l, f), f);
  if (j.contains("extra_points")) cfg.extra_points = j["extra_points"].get<std::vector<std::size_t>>();
  for (auto i : cfg.extra_points)
    if (i >= cfg.points.size()) throw std::invalid_argument("extra point index out of range");
  if (j.contains("certificate")) {
    const auto& c = j["certificate"];
    cfg.certificate.seed = c.value("seed", std::uint64_t{0});
    for (const auto& ch : c.value("checks", Json::array()))
      cfg.certificate.add(ch.at("description").get<std::string>(), ch.at("pass").get<bool>());
    cfg.certificate.notes = c.value("notes", std::vector<std::string>{});
  }
  if (cfg.kind == ConfigKind::Star && cfg.points.size() != binomial2(cfg.parameter))
    throw std::invalid_argument("star configuration must have binom(d,2) points");
  if (cfg.kind == ConfigKind::QuasiStar) {
    if (cfg.points.size() != binomial2(cfg.parameter + 1) || cfg.extra_points.size() != cfg.parameter ||
        cfg.lines.size() != cfg.parameter)
      throw std::invalid_argument("quasi star configuration must have d lines and d(d+1)/2 points");
  }
  return cfg;
}

// 64-bit FNV-1a of the canonical configuration JSON.
inline std::string config_hash(const Configuration& cfg) {
  const std::string text = to_json(cfg).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

inline Json to_json(const BettiTable& b) {
  Json entries = Json::array();
  for (const auto& [key, v] : b.entries) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
  return {{"entries", entries}, {"truncation_degree", b.truncation_degree}, {"complete", b.complete}};
}

inline Json to_json(const HilbertProfile& h) {
  Json j{{"values", h.values}};
  j["stabilized_at"] = h.stabilized_at ? Json(*h.stabilized_at) : Json(nullptr);
  j["stable_value"] = h.stable_value ? Json(*h.stable_value) : Json(nullptr);
  j["generic"] = h.is_generic();
  return j;
}

inline Json degree_multiset_json(const std::map<unsigned, std::size_t>& degrees) {
  Json out = Json::array();
  for (const auto& [deg, c] : degrees)
    for (std::size_t k = 0; k < c; ++k) out.push_back(deg);
  return out;
}

inline Json to_json(const InvariantReport& r) {
  Json j;
  j["alpha"] = r.alpha;
  j["regularity"] = r.regularity;
  j["minimal_generator_degrees"] = degree_multiset_json(r.minimal_generator_degrees);
  j["multiplicity"] = r.multiplicity ? Json(*r.multiplicity) : Json(nullptr);
  j["hilbert"] = to_json(r.hilbert);
  j["betti"] = to_json(r.betti);
  return j;
}

inline Json to_json(const CertificateRecord& c) {
  return {{"route", c.route},
          {"m", c.m},
          {"symbolic_order", c.symbolic_order},
          {"degree", c.degree},
          {"interpolant_degree", c.interpolant_degree},
          {"interpolant_target", c.interpolant_target},
          {"bound_implied", to_string(c.bound_implied)},
          {"membership_verified", c.membership_verified},
          {"interpolant", to_string(c.interpolant)}};
}

inline Json to_json(const WaldschmidtEstimate& w) {
  Json alphas = Json::object();
  for (const auto& [m, a] : w.alpha_values) alphas[std::to_string(m)] = a;
  Json certs = Json::array();
  for (const auto& c : w.certificates) certs.push_back(to_json(c));
  return {{"alpha_values", alphas},
          {"lower_bound", to_string(w.lower)},
          {"lower_source", w.lower_source},
          {"upper_bound", to_string(w.upper)},
          {"upper_source", w.upper_source},
          {"certificates", certs},
          {"truncated", w.truncated}};
}

inline Json to_json(const ContainmentReport& r) {
  Json rows = Json::array();
  for (const auto& c : r.rows) {
    Json row{{"m", c.m}, {"r", c.r}, {"status", to_string(c.status)}};
    if (c.witness) row["witness"] = to_string(*c.witness);
    if (!c.note.empty()) row["note"] = c.note;
    rows.push_back(row);
  }
  Json chain = Json::array();
  for (const auto& c : r.chain) chain.push_back({{"relation", c.relation}, {"status", to_string(c.status)}});
  Json j{{"m_max", r.m_max}, {"r_max", r.r_max}, {"rows", rows}, {"chain", chain}};
  j["max_failing_ratio"] = r.max_failing_ratio ? Json(to_string(*r.max_failing_ratio)) : Json(nullptr);
  j["all_resolved"] = r.all_resolved();
  j["violations"] = r.violations;
  return j;
}

inline std::string containment_csv(const ContainmentReport& r) {
  std::ostringstream os;
  os << "m,r,status,witness\n";
  for (const auto& c : r.rows)
    os << c.m << ',' << c.r << ',' << to_string(c.status) << ',' << (c.witness ? to_string(*c.witness) : "")
       << '\n';
  return os.str();
}

// Rows m, columns r; "⊆" holds, "⊄" fails, "?" unknown.
inline std::string containment_grid(const ContainmentReport& r) {
  std::ostringstream os;
  os << "m\\r";
  for (unsigned c = 1; c <= r.r_max; ++c) os << ' ' << c;
  os << '\n';
  for (unsigned m = 1; m <= r.m_max; ++m) {
    os << (m < 10 ? "  " : " ") << m;
    for (unsigned c = 1; c <= r.r_max; ++c) {
      const auto s = r.cell(m, c).status;
      os << ' ' << (s == CellStatus::Holds ? "⊆" : s == CellStatus::Fails ? "⊄" : "?");
      if (c >= 10) os << ' ';
    }
    os << '\n';
  }
  return os.str();
}

inline Json to_json(const ResurgenceBounds& rb) {
  Json lower = Json::array(), upper = Json::array();
  for (const auto& c : rb.lower_candidates) lower.push_back({{"bound", to_string(c.value)}, {"source", c.source}});
  for (const auto& c : rb.upper_candidates) upper.push_back({{"bound", to_string(c.value)}, {"source", c.source}});
  Json j{{"lower", to_string(rb.lower)},
         {"upper", to_string(rb.upper)},
         {"alpha", rb.alpha},
         {"regularity", rb.regularity},
         {"lower_provenance", lower},
         {"upper_provenance", upper},
         {"waldschmidt", to_json(rb.waldschmidt)}};
  if (rb.equality_interval)
    j["equality_interval"] = {to_string(rb.equality_interval->first), to_string(rb.equality_interval->second)};
  if (rb.containment) j["containment"] = to_json(*rb.containment);
  return j;
}

inline Json to_json(const ResurgenceRange& b) {
  Json j{{"lower_rational", to_string(b.lower_rational)}, {"lower_value", b.lower_value}, {"upper", to_string(b.upper)}};
  j["lower_exact"] = b.lower_exact ? Json(to_string(*b.lower_exact)) : Json(nullptr);
  return j;
}

inline Json to_json(const CorollaryResult& c) {
  return {{"mode", c.mode},
          {"d", c.d},
          {"predicted_interval", {to_string(c.predicted_lower), to_string(c.predicted_upper)}},
          {"predicted_interval_closed", {true, false}},
          {"interval_for_d", to_json(c.range)}};
}

}  // namespace starconf
