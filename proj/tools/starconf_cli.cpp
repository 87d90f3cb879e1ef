// starconf: construct point configurations in P^2 and analyse their ideals.
#include "starconf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

using namespace starconf;

namespace {

struct RunConfig {
  std::uint64_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  unsigned budget_degree = 0;
  double budget_seconds = 0;
  std::string format = "json";
  bool second_prime_check = false;
  std::string out;
};

struct Source {
  std::string config_file;
  std::string kind;
  unsigned d = 0;
  unsigned n = 0;
};

enum Exit { kOk = 0, kFail = 1, kPartial = 2, kUsage = 3 };

std::uint64_t other_prime(std::uint64_t p) {
  return p == PrimeField::kSecondPrime ? PrimeField::kDefaultPrime : PrimeField::kSecondPrime;
}

Configuration build(const std::string& kind, unsigned d, unsigned n, std::uint64_t seed, std::uint64_t prime) {
  switch (parse_config_kind(kind)) {
    case ConfigKind::Star:
      if (d < 2) throw std::invalid_argument("star needs --d >= 2");
      return star_configuration(d, seed, prime);
    case ConfigKind::QuasiStar:
      if (d < 2) throw std::invalid_argument("quasi-star needs --d >= 2");
      return quasi_star(d, seed, prime);
    case ConfigKind::GenericPoints:
      if (n < 1) throw std::invalid_argument("generic needs --n >= 1");
      return generic_points(n, seed, prime);
    case ConfigKind::Custom:
      break;
  }
  throw std::invalid_argument("custom configurations are read with --config");
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

// Loads the configuration at `prime`; a file keeps its own prime unless a
// re-run at another prime is requested.
Configuration load(const Source& src, const RunConfig& rc, std::optional<std::uint64_t> prime = std::nullopt) {
  if (!src.config_file.empty()) {
    Json j = read_json(src.config_file);
    if (prime) j["prime"] = *prime;
    return configuration_from_json(j);
  }
  if (src.kind.empty()) throw std::invalid_argument("give --config FILE or --kind with --d/--n");
  return build(src.kind, src.d, src.n, rc.seed, prime.value_or(rc.prime));
}

void require_margin(std::uint64_t prime, unsigned long multiplicity) {
  if (prime <= 2 * multiplicity)
    throw std::invalid_argument("prime must exceed twice the largest multiplicity used");
}

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--config", src.config_file, "configuration JSON written by construct");
  cmd->add_option("--kind", src.kind, "star | quasi-star | generic (inline construction)");
  cmd->add_option("--d", src.d, "number of lines");
  cmd->add_option("--n", src.n, "number of generic points");
}

std::string text_of(const Json& j, int indent = 0) {
  std::ostringstream os;
  const std::string pad(indent, ' ');
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      os << pad << k << ":\n" << text_of(v, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << k << ":\n";
      for (const auto& e : v) os << pad << "  - " << e.dump() << '\n';
    } else {
      os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
  return os.str();
}

std::string csv_of(const Json& j) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [k, v] : j.items())
    if (!v.is_structured()) os << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  return os.str();
}

std::string betti_csv(const BettiTable& b) {
  std::ostringstream os;
  os << "i,j,beta\n";
  for (const auto& [key, v] : b.entries) os << key.first << ',' << key.second << ',' << v << '\n';
  return os.str();
}

void emit(const RunConfig& rc, const std::string& text) {
  if (rc.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(rc.out);
  if (!f) throw std::runtime_error("cannot write " + rc.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

// A verb produces a JSON report, a comparable summary for the second-prime
// re-run, and optional text/csv renderings.
struct Rendered {
  Json report;
  Json summary;
  std::string text;
  std::string csv;
  int code = kOk;
};

int finish(const RunConfig& rc, Rendered r, const std::function<Rendered(std::uint64_t)>& rerun) {
  if (rc.second_prime_check) {
    const std::uint64_t p2 = other_prime(rc.prime);
    const Rendered again = rerun(p2);
    const bool agree = again.summary == r.summary;
    r.report["second_prime_check"] = {{"prime", p2}, {"agree", agree}};
    if (!agree) {
      r.report["second_prime_check"]["summary"] = again.summary;
      r.text += "second prime " + std::to_string(p2) + ": results differ\n";
      r.code = kFail;
    } else {
      r.text += "second prime " + std::to_string(p2) + ": results agree\n";
    }
  }
  if (rc.format == "json")
    emit(rc, r.report.dump(2));
  else if (rc.format == "csv")
    emit(rc, r.csv.empty() ? csv_of(r.report) : r.csv);
  else
    emit(rc, r.text.empty() ? text_of(r.report) : r.text);
  return r.code;
}

Deadline budget(const RunConfig& rc) { return Deadline::after_seconds(rc.budget_seconds); }

Rendered run_invariants(const Configuration& cfg, const RunConfig& rc) {
  const Ideal I = configuration_ideal(cfg, 1, budget(rc));
  const auto rep = compute_invariants(I, cfg.is_reduced(), rc.budget_degree, budget(rc));
  Rendered r;
  r.report = {{"configuration_hash", config_hash(cfg)}, {"kind", to_string(cfg.kind)}, {"points", cfg.size()}};
  r.report.update(to_json(rep));
  r.summary = {{"alpha", rep.alpha}, {"regularity", rep.regularity}, {"betti", to_json(rep.betti)}};
  r.summary["multiplicity"] = r.report["multiplicity"];
  std::ostringstream os;
  os << "alpha: " << rep.alpha << "\nregularity: " << rep.regularity << "\nmultiplicity: "
     << (rep.multiplicity ? std::to_string(*rep.multiplicity) : std::string("unknown"))
     << "\nminimal generator degrees: " << degree_multiset_json(rep.minimal_generator_degrees).dump()
     << "\nhilbert function: " << Json(rep.hilbert.values).dump() << "\nbetti diagram:\n"
     << betti_diagram(rep.betti);
  r.text = os.str();
  r.csv = betti_csv(rep.betti);
  return r;
}

Rendered run_betti(const Configuration& cfg, const RunConfig& rc, unsigned power, bool symbolic) {
  const Ideal I = symbolic ? configuration_ideal(cfg, power, budget(rc))
                           : ideal_power(configuration_ideal(cfg, 1, budget(rc)), power);
  const auto res = rc.budget_degree ? RegularityResult{-1, graded_betti(I, rc.budget_degree, budget(rc))}
                                    : regularity_with_table(I, 0, 0, budget(rc));
  Rendered r;
  r.report = {{"configuration_hash", config_hash(cfg)},
              {"ideal", (symbolic ? "I^(" : "I^") + std::to_string(power) + (symbolic ? ")" : "")},
              {"betti", to_json(res.betti)}};
  r.report["regularity"] = res.betti.complete ? Json(res.betti.regularity()) : Json(nullptr);
  r.summary = r.report["betti"];
  r.text = betti_diagram(res.betti);
  r.csv = betti_csv(res.betti);
  if (!res.betti.complete) r.code = kPartial;
  return r;
}

Rendered run_symbolic(const Configuration& cfg, const RunConfig& rc, unsigned m) {
  unsigned top = 0;
  for (const auto& p : cfg.points) top = std::max(top, p.multiplicity * m);
  require_margin(cfg.ring->prime(), top);
  const auto sp = symbolic_power(cfg, m, budget(rc));
  const auto by_rank = alpha_fat_points(cfg.ring, cfg.projective_points(), scaled_multiplicities(cfg, m),
                                        sp.ideal.max_basis_degree() + 1);
  const unsigned a = alpha(sp.ideal);
  Json gens = Json::array();
  for (const auto& g : sp.ideal.groebner_basis()) gens.push_back(to_string(g));
  Rendered r;
  r.report = {{"configuration_hash", config_hash(cfg)},
              {"m", m},
              {"alpha", a},
              {"alpha_by_interpolation", by_rank ? Json(by_rank->degree) : Json(nullptr)},
              {"minimal_generator_degrees", degree_multiset_json(minimal_generator_degrees(sp.ideal))},
              {"groebner_basis", gens}};
  r.summary = {{"alpha", a}, {"minimal_generator_degrees", r.report["minimal_generator_degrees"]}};
  if (!by_rank || by_rank->degree != a) {
    r.report["oracle_mismatch"] = true;
    r.code = kFail;
  }
  return r;
}

Rendered run_containment(const Configuration& cfg, const RunConfig& rc, unsigned m_max, unsigned r_max) {
  ContainmentOptions co{rc.budget_seconds, rc.budget_degree};
  const auto rep = containment_table(cfg, m_max, r_max, co);
  Rendered r;
  r.report = {{"configuration_hash", config_hash(cfg)}};
  r.report.update(to_json(rep));
  Json statuses = Json::array();
  for (const auto& c : rep.rows) statuses.push_back(to_string(c.status));
  r.summary = statuses;
  std::ostringstream os;
  os << containment_grid(rep);
  if (rep.max_failing_ratio)
    os << "largest failing m/r: " << to_string(*rep.max_failing_ratio) << " at (" << rep.max_failing_pair->first << ','
       << rep.max_failing_pair->second << ")\n";
  for (const auto& v : rep.violations) os << "violation: " << v << '\n';
  r.text = os.str();
  r.csv = containment_csv(rep);
  if (!rep.violations.empty())
    r.code = kFail;
  else if (!rep.all_resolved())
    r.code = kPartial;
  return r;
}

Rendered run_waldschmidt(const Configuration& cfg, const RunConfig& rc, const WaldschmidtOptions& w) {
  const auto est = waldschmidt_estimate(cfg, w);
  Rendered r;
  r.report = {{"configuration_hash", config_hash(cfg)}};
  r.report.update(to_json(est));
  r.summary = {{"lower", to_string(est.lower)}, {"upper", to_string(est.upper)}, {"alpha", r.report["alpha_values"]}};
  std::ostringstream os;
  os << "alpha-hat in " << suite::interval_text(est.lower, est.upper) << "\n  lower: " << est.lower_source
     << "\n  upper: " << est.upper_source << '\n';
  for (const auto& [m, a] : est.alpha_values) os << "  alpha(I^(" << m << ")) = " << a << '\n';
  for (const auto& c : est.certificates)
    os << "  certificate (" << c.route << ", m=" << c.m << "): degree " << c.degree << " in I^(" << c.symbolic_order
       << "), bound " << to_string(c.bound_implied) << '\n';
  r.text = os.str();
  (void)rc;
  return r;
}

Rendered run_resurgence(const Configuration& cfg, const ResurgenceOptions& ro) {
  const auto rb = resurgence_bounds(cfg, ro);
  Rendered r;
  r.report = {{"configuration_hash", config_hash(cfg)}};
  r.report.update(to_json(rb));
  r.summary = {{"lower", to_string(rb.lower)}, {"upper", to_string(rb.upper)}};
  std::ostringstream os;
  os << "rho in " << suite::interval_text(rb.lower, rb.upper) << '\n';
  for (const auto& c : rb.lower_candidates) os << "  lower " << to_string(c.value) << ": " << c.source << '\n';
  for (const auto& c : rb.upper_candidates) os << "  upper " << to_string(c.value) << ": " << c.source << '\n';
  r.text = os.str();
  return r;
}

std::string claims_csv(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  os << "criterion,claim_id,status,expected,computed\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + '"';
  };
  for (const auto& r : results)
    for (const auto& c : r.claims)
      os << r.id << ',' << c.id << ',' << to_string(c.status) << ',' << quote(c.expected) << ',' << quote(c.computed)
         << '\n';
  return os.str();
}

int run_verify(const RunConfig& rc, const std::vector<std::string>& scope) {
  SuiteOptions o;
  o.prime = rc.prime;
  o.seed = rc.seed;
  o.cell_seconds = rc.budget_seconds;
  std::vector<std::string> ids;
  std::set<std::string> claim_filter;
  for (const auto& s : scope) {
    if (s == "all") {
      ids = all_criterion_ids();
      break;
    }
    bool is_criterion = false;
    for (const auto& [key, fn] : criteria()) is_criterion |= key == s;
    if (is_criterion || s == "8")
      ids.push_back(s);
    else
      claim_filter.insert(s);
  }
  if (scope.empty()) ids = all_criterion_ids();
  if (!claim_filter.empty() && ids.empty()) ids = all_criterion_ids();
  auto results = run_criteria(ids, o);
  if (!claim_filter.empty()) {
    for (auto& r : results)
      std::erase_if(r.claims, [&](const ClaimResult& c) { return !claim_filter.count(c.id); });
    std::erase_if(results, [](const CriterionResult& r) { return r.claims.empty(); });
    if (results.empty()) throw std::invalid_argument("no claim matches the requested scope");
  }
  if (rc.second_prime_check) {
    o.prime = other_prime(rc.prime);
    const auto again = run_criteria(ids, o);
    CriterionResult check{"second-prime", "statuses reproduce at p=" + std::to_string(o.prime), {}};
    for (std::size_t k = 0; k < results.size(); ++k) {
      const auto it = std::find_if(again.begin(), again.end(), [&](const auto& a) { return a.id == results[k].id; });
      for (const auto& c : results[k].claims) {
        ClaimStatus other = ClaimStatus::Skipped;
        std::size_t rank_here = 0, rank_there = 0;
        for (const auto& x : results[k].claims) {
          if (&x == &c) break;
          rank_here += x.id == c.id;
        }
        for (const auto& x : it->claims)
          if (x.id == c.id && rank_there++ == rank_here) {
            other = x.status;
            break;
          }
        check.claims.push_back(suite::make_claim(c.id, c.statement, to_string(c.status), to_string(other),
                                                 other == c.status));
      }
    }
    results.push_back(std::move(check));
  }
  const int code = exit_code(results);
  if (rc.format == "csv") {
    emit(rc, claims_csv(results));
  } else if (rc.format == "text") {
    std::ostringstream os;
    for (const auto& r : results) {
      os << "[" << to_string(r.status()) << "] " << r.id << ": " << r.title << '\n';
      for (const auto& c : r.claims) {
        os << "    " << to_string(c.status) << "  " << c.id << "  expected " << c.expected << "; computed "
           << c.computed;
        if (!c.reason.empty()) os << " (" << c.reason << ")";
        os << '\n';
      }
    }
    emit(rc, os.str());
  } else {
    Json out = Json::array();
    for (const auto& r : results)
      for (const auto& c : r.claims) {
        Json j = to_json(c);
        j["criterion"] = r.id;
        out.push_back(j);
      }
    emit(rc, Json{{"prime", rc.prime}, {"seed", rc.seed}, {"exit_code", code}, {"claims", out}}.dump(2));
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star and quasi star configurations of points in P^2"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  app.add_option("--prime", rc.prime, "field characteristic")->capture_default_str();
  app.add_option("--seed", rc.seed, "sampling seed")->capture_default_str();
  app.add_option("--budget-degree", rc.budget_degree, "degree bound for Betti and containment work (0: automatic)");
  app.add_option("--budget-seconds", rc.budget_seconds, "wall-clock budget per computation (0: none)");
  app.add_option("--format", rc.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_flag("--second-prime-check", rc.second_prime_check, "repeat at a second prime and compare");
  app.add_option("--out", rc.out, "write the report here instead of stdout");

  std::string kind;
  unsigned d = 0, n = 0;
  auto* construct = app.add_subcommand("construct", "sample a configuration and write it as JSON");
  construct->add_option("kind", kind, "star | quasi-star | generic")->required();
  construct->add_option("--d", d, "number of lines");
  construct->add_option("--n", n, "number of generic points");

  Source src;
  auto* invariants = app.add_subcommand("invariants", "alpha, regularity, Betti table, Hilbert profile, multiplicity");
  add_source(invariants, src);

  unsigned power = 1;
  bool symbolic_flag = false;
  auto* betti = app.add_subcommand("betti", "graded Betti numbers of I^m or I^(m)");
  add_source(betti, src);
  betti->add_option("--m", power, "power")->capture_default_str();
  betti->add_flag("--symbolic", symbolic_flag, "use the symbolic power");

  unsigned m = 2;
  auto* symbolic = app.add_subcommand("symbolic", "symbolic power I^(m) with an interpolation cross-check");
  add_source(symbolic, src);
  symbolic->add_option("--m", m, "order")->capture_default_str();

  unsigned m_max = 6, r_max = 4;
  auto* containment = app.add_subcommand("containment", "grid of I^(m) in I^r tests");
  add_source(containment, src);
  containment->add_option("--m-max", m_max)->capture_default_str();
  containment->add_option("--r-max", r_max)->capture_default_str();

  WaldschmidtOptions wopt;
  bool no_certificates = false;
  auto* waldschmidt = app.add_subcommand("waldschmidt", "interval for the Waldschmidt constant");
  add_source(waldschmidt, src);
  waldschmidt->add_option("--m-max", wopt.m_max)->capture_default_str();
  waldschmidt->add_option("--certificate-m", wopt.certificate_m)->capture_default_str();
  waldschmidt->add_flag("--no-certificates", no_certificates);

  ResurgenceOptions ropt;
  auto* resurgence = app.add_subcommand("resurgence", "interval for the resurgence with provenance");
  add_source(resurgence, src);
  resurgence->add_option("--m-max", ropt.waldschmidt.m_max, "symbolic orders used for alpha-hat")->capture_default_str();
  resurgence->add_option("--containment-m-max", ropt.containment_m_max, "0 skips the containment sweep");
  resurgence->add_option("--containment-r-max", ropt.containment_r_max);

  std::string epsilon;
  unsigned long failure_r = 0;
  auto* corollary = app.add_subcommand("corollary-params", "least d for a target resurgence bound");
  auto* eps_opt = corollary->add_option("--epsilon", epsilon, "rational in (0, 1)");
  auto* r_opt = corollary->add_option("--r", failure_r, "failure order r >= 1");
  eps_opt->excludes(r_opt);

  std::vector<std::string> scope;
  auto* verify = app.add_subcommand("verify-paper", "run the claim suite");
  verify->add_option("scope", scope, "all, criterion numbers, or claim ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!is_prime(rc.prime)) throw std::invalid_argument("--prime must be prime");
    PrimeField check(rc.prime);
    (void)check;
    const auto rerun_with = [&](auto&& fn) {
      return [&, fn](std::uint64_t p) { return fn(load(src, rc, p)); };
    };

    if (*construct) {
      const auto cfg = build(kind, d, n, rc.seed, rc.prime);
      emit(rc, to_json(cfg).dump(2));
      if (!cfg.certificate.all_pass()) {
        std::cerr << "genericity certificate failed\n";
        return kFail;
      }
      return kOk;
    }
    if (*invariants) {
      auto fn = [&](const Configuration& c) { return run_invariants(c, rc); };
      return finish(rc, fn(load(src, rc)), rerun_with(fn));
    }
    if (*betti) {
      auto fn = [&](const Configuration& c) { return run_betti(c, rc, power, symbolic_flag); };
      return finish(rc, fn(load(src, rc)), rerun_with(fn));
    }
    if (*symbolic) {
      auto fn = [&](const Configuration& c) { return run_symbolic(c, rc, m); };
      return finish(rc, fn(load(src, rc)), rerun_with(fn));
    }
    if (*containment) {
      auto fn = [&](const Configuration& c) { return run_containment(c, rc, m_max, r_max); };
      return finish(rc, fn(load(src, rc)), rerun_with(fn));
    }
    if (*waldschmidt) {
      wopt.certificates = !no_certificates;
      wopt.deadline = budget(rc);
      require_margin(rc.prime, wopt.m_max);
      auto fn = [&](const Configuration& c) { return run_waldschmidt(c, rc, wopt); };
      return finish(rc, fn(load(src, rc)), rerun_with(fn));
    }
    if (*resurgence) {
      ropt.waldschmidt.deadline = budget(rc);
      ropt.containment = {rc.budget_seconds, rc.budget_degree};
      require_margin(rc.prime, ropt.waldschmidt.m_max);
      auto fn = [&](const Configuration& c) { return run_resurgence(c, ropt); };
      return finish(rc, fn(load(src, rc)), rerun_with(fn));
    }
    if (*corollary) {
      if (epsilon.empty() && failure_r == 0) throw std::invalid_argument("give --epsilon or --r");
      const auto res = epsilon.empty() ? corollary_from_failure_order(failure_r)
                                       : corollary_from_epsilon(parse_rational(epsilon));
      Rendered r;
      r.report = to_json(res);
      std::ostringstream os;
      os << "d = " << res.d << "\npredicted rho in [" << to_string(res.predicted_lower) << ", "
         << to_string(res.predicted_upper) << ")\n";
      r.text = os.str();
      RunConfig plain = rc;
      plain.second_prime_check = false;
      return finish(plain, r, {});
    }
    if (*verify) return run_verify(rc, scope);
  } catch (const RejectionExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kPartial;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
