#pragma once

#include "starconf/serialize.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace starconf {

enum class ClaimStatus { Pass, Fail, Skipped };

inline std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "skipped";
}

struct ClaimResult {
  std::string id;
  std::string statement;  // the mathematical statement under test
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::Skipped;
  std::string reason;
};

inline ClaimStatus combine(const std::vector<ClaimResult>& claims) {
  bool skipped = claims.empty();
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::Fail) return ClaimStatus::Fail;
    if (c.status == ClaimStatus::Skipped) skipped = true;
  }
  return skipped ? ClaimStatus::Skipped : ClaimStatus::Pass;
}

struct SuiteOptions {
  std::uint64_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  double cell_seconds = 0;
};

struct CriterionResult {
  std::string id;
  std::string title;
  std::vector<ClaimResult> claims;
  ClaimStatus status() const { return combine(claims); }
};

inline Json to_json(const ClaimResult& c) {
  Json j{{"claim_id", c.id},
         {"statement", c.statement},
         {"expected", c.expected},
         {"computed", c.computed},
         {"status", to_string(c.status)}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

inline std::vector<CriterionResult> run_criteria(const std::vector<std::string>& ids, const SuiteOptions& o);

namespace suite {

inline ClaimResult make_claim(std::string id, std::string statement, std::string expected, std::string computed,
                              bool ok, std::string reason = {}) {
  return {std::move(id), std::move(statement), std::move(expected), std::move(computed),
          ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(reason)};
}

inline std::string betti_text(const BettiTable& b) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [key, v] : b.entries) {
    os << (first ? "" : ", ") << '(' << key.first << ',' << key.second << "):" << v;
    first = false;
  }
  os << '}' << (b.complete ? "" : " incomplete");
  return os.str();
}

inline std::string interval_text(const Rational& lo, const Rational& hi) {
  return "[" + to_string(lo) + ", " + to_string(hi) + "]";
}

inline std::string tag(unsigned d, std::uint64_t seed) {
  return "d=" + std::to_string(d) + " seed=" + std::to_string(seed);
}

// Runs body, turning budget exhaustion into a skipped claim and falsification
// events into a failed claim.
inline void guarded(std::vector<ClaimResult>& out, const std::string& id, const std::string& statement,
                    const std::function<void()>& body) {
  try {
    body();
  } catch (const BudgetExhausted& e) {
    out.push_back({id, statement, "", "", ClaimStatus::Skipped, e.what()});
  } catch (const std::exception& e) {
    out.push_back({id, statement, "", "", ClaimStatus::Fail, e.what()});
  }
}

inline constexpr const char* kResolution = "0 -> R^d(-d-1) -> R^{d+1}(-d) -> I(Z_d) -> 0";
inline constexpr const char* kDeterminantal = "I(Z_d) equals the ideal of maximal minors I(A)";
inline constexpr const char* kMultiplicity = "e(R/I(Z_d)) = d(d+1)/2";

inline CriterionResult resolution_shape(const SuiteOptions& o) {
  CriterionResult r{"1", "resolution shape of quasi star ideals", {}};
  for (unsigned d = 3; d <= 5; ++d)
    for (std::uint64_t s = o.seed; s < o.seed + 3; ++s)
      guarded(r.claims, "Zd-betti", kResolution, [&] {
        const auto cfg = quasi_star(d, s, o.prime);
        const auto reg = regularity_with_table(configuration_ideal(cfg));
        BettiTable expect;
        expect.entries = {{{0, d}, d + 1}, {{1, d + 1}, d}};
        expect.complete = true;
        r.claims.push_back(make_claim("Zd-betti", kResolution, tag(d, s) + " " + betti_text(expect),
                                      tag(d, s) + " " + betti_text(reg.betti),
                                      reg.betti.complete && reg.betti == expect));
      });
  return r;
}

inline CriterionResult determinantal_equality(const SuiteOptions& o) {
  CriterionResult r{"2", "determinantal ideal equals the ideal of points", {}};
  for (unsigned d = 3; d <= 5; ++d)
    for (std::uint64_t s = o.seed; s < o.seed + 3; ++s)
      guarded(r.claims, "Zd-determinantal", kDeterminantal, [&] {
        const auto cfg = quasi_star(d, s, o.prime);
        const Ideal I = configuration_ideal(cfg);
        const Ideal A = determinantal_ideal(cfg);
        const bool same = same_ideal(I, A);
        r.claims.push_back(make_claim("Zd-determinantal", kDeterminantal, tag(d, s) + " equal reduced bases",
                                      tag(d, s) + (same ? " equal reduced bases" : " reduced bases differ"),
                                      same));
      });
  return r;
}

inline CriterionResult multiplicity_claim(const SuiteOptions& o) {
  CriterionResult r{"3", "multiplicity of quasi star configurations", {}};
  for (unsigned d = 3; d <= 5; ++d)
    for (std::uint64_t s = o.seed; s < o.seed + 3; ++s)
      guarded(r.claims, "Zd-multiplicity", kMultiplicity, [&] {
        const auto cfg = quasi_star(d, s, o.prime);
        const std::size_t e = multiplicity(configuration_ideal(cfg));
        r.claims.push_back(make_claim("Zd-multiplicity", kMultiplicity,
                                      tag(d, s) + " " + std::to_string(d * (d + 1) / 2),
                                      tag(d, s) + " " + std::to_string(e), e == d * (d + 1) / 2));
      });
  return r;
}

inline std::string bits(const EquivalenceReport& e) {
  std::string s;
  for (bool b : e.conditions) s += b ? 'T' : 'F';
  return s;
}

inline CriterionResult equivalences(const SuiteOptions& o) {
  CriterionResult r{"4", "seven equivalent conditions", {}};
  struct Case {
    std::string name;
    std::function<Configuration()> make;
    bool expect;
  };
  const std::vector<Case> cases{
      {"quasi-star d=3", [&] { return quasi_star(3, o.seed, o.prime); }, true},
      {"quasi-star d=4", [&] { return quasi_star(4, o.seed, o.prime); }, true},
      {"generic n=6", [&] { return generic_points(6, o.seed, o.prime); }, true},
      {"star d=4", [&] { return star_configuration(4, o.seed, o.prime); }, true},
      {"generic n=7", [&] { return generic_points(7, o.seed, o.prime); }, false},
      {"generic n=5", [&] { return generic_points(5, o.seed, o.prime); }, false},
  };
  const std::string statement = "conditions (i)-(vii) on reduced points are equivalent";
  for (const auto& c : cases)
    guarded(r.claims, "equivalences", statement, [&] {
      const auto rep = verify_equivalences(c.make());
      const std::string want(7, c.expect ? 'T' : 'F');
      r.claims.push_back(make_claim("equivalences", statement, c.name + " " + want, c.name + " " + bits(rep),
                                    bits(rep) == want,
                                    rep.falsification() ? "mixed condition vector (falsification event)" : ""));
    });
  return r;
}

inline CriterionResult powers_linear(const SuiteOptions& o) {
  CriterionResult r{"5", "ordinary powers of I(Z_3) have linear resolutions", {}};
  const std::string statement = "reg(I^m) = m alpha(I) and I^m has a linear resolution when reg(I) = alpha(I)";
  guarded(r.claims, "Z3-powers-linear", statement, [&] {
    const auto cfg = quasi_star(3, o.seed, o.prime);
    const Ideal I = configuration_ideal(cfg);
    for (unsigned m = 1; m <= 3; ++m) {
      const Ideal Im = ideal_power(I, m);
      const auto reg = regularity_with_table(Im);
      const auto gens = minimal_generator_degrees(Im);
      std::ostringstream got;
      got << "m=" << m << " reg=" << reg.regularity << " generator degrees {";
      const char* sep = "";
      for (const auto& [deg, c] : gens) got << std::exchange(sep, ", ") << deg << ':' << c;
      got << '}';
      const bool ok = reg.regularity == int(3 * m) && gens.size() == 1 && gens.begin()->first == 3 * m;
      r.claims.push_back(make_claim("Z3-powers-linear", statement,
                                    "m=" + std::to_string(m) + " reg=" + std::to_string(3 * m) +
                                        " single generator degree " + std::to_string(3 * m),
                                    got.str(), ok));
      if (m == 2) {
        BettiTable expect;
        expect.entries = {{{0, 6}, 10}, {{1, 7}, 12}, {{2, 8}, 3}};
        expect.complete = true;
        r.claims.push_back(make_claim("Z3-square-betti",
                                      "0 -> R^3(-8) -> R^12(-7) -> R^10(-6) -> I(Z_3)^2 -> 0",
                                      betti_text(expect), betti_text(reg.betti),
                                      reg.betti.complete && reg.betti == expect));
      }
    }
  });
  return r;
}

inline CriterionResult z3_resurgence(const SuiteOptions& o) {
  CriterionResult r{"6", "Waldschmidt constant and resurgence of I(Z_3)", {}};
  const auto cfg = quasi_star(3, o.seed, o.prime);
  guarded(r.claims, "Z3-alpha4", "alpha(I(Z_3)^(4)) = 9", [&] {
    const auto by_rank = alpha_fat_points(cfg.ring, cfg.projective_points(), scaled_multiplicities(cfg, 4), 40);
    const unsigned by_gb = alpha(symbolic_power(cfg, 4).ideal);
    const bool agree = by_rank && by_rank->degree == by_gb;
    r.claims.push_back(make_claim("Z3-alpha4", "alpha(I(Z_3)^(4)) = 9", "9 (rank and intersection oracles agree)",
                                  "rank " + (by_rank ? std::to_string(by_rank->degree) : std::string("none")) +
                                      ", intersection " + std::to_string(by_gb),
                                  agree && by_gb == 9,
                                  agree && by_gb != 9 ? "falsification event: oracles contradict alpha = 9" : ""));
  });
  guarded(r.claims, "Z3-waldschmidt", "alpha-hat(I(Z_3)) = 9/4", [&] {
    WaldschmidtOptions w;
    w.m_max = 8;
    const auto est = waldschmidt_estimate(cfg, w);
    const Rational target = make_rational(9, 4);
    r.claims.push_back(make_claim("Z3-waldschmidt", "alpha-hat(I(Z_3)) = 9/4",
                                  "interval containing 9/4 with upper bound 9/4",
                                  interval_text(est.lower, est.upper), est.contains(target) && est.upper == target));
  });
  guarded(r.claims, "Z3-resurgence", "rho(I(Z_3)) = 4/3", [&] {
    ResurgenceOptions ro;
    ro.waldschmidt.m_max = 8;
    ro.containment_m_max = 8;
    ro.containment_r_max = 6;
    ro.containment.cell_seconds = o.cell_seconds;
    const auto rb = resurgence_bounds(cfg, ro);
    r.claims.push_back(make_claim("Z3-resurgence", "rho(I(Z_3)) = 4/3", "interval containing 4/3",
                                  interval_text(rb.lower, rb.upper), rb.contains(make_rational(4, 3))));
  });
  return r;
}

inline CriterionResult certificate_bounds(const SuiteOptions& o) {
  CriterionResult r{"7", "certificates for alpha-hat(I(Z_d)) <= (d + c_d)/2", {}};
  for (unsigned d = 4; d <= 9; ++d) {
    const std::string statement = "alpha-hat(I(Z_d)) <= (d + c_d)/2 via F*D in I^(2bm)";
    guarded(r.claims, "certificate-bound", statement, [&] {
      const auto cfg = quasi_star(d, o.seed, o.prime);
      const auto cert = waldschmidt_certificate(cfg, 1);
      const Rational target = (Rational(BigInt(d)) + *c_d(d)) / 2;
      r.claims.push_back(make_claim("certificate-bound", statement, "d=" + std::to_string(d) + " <= " + to_string(target),
                                    "d=" + std::to_string(d) + " " + to_string(cert.bound_implied) + " (degree " +
                                        std::to_string(cert.degree) + " in I^(" +
                                        std::to_string(cert.symbolic_order) + "), membership " +
                                        (cert.membership_verified ? "verified)" : "unverified)"),
                                    cert.membership_verified && cert.bound_implied <= target));
    });
  }
  return r;
}

// x >= 2 - 2/(sqrt(d) + 1), decided in exact arithmetic.
inline bool at_least_sqrt_bound(const Rational& x, unsigned long d) {
  if (x >= 2) return true;
  const Rational y = make_rational(2) / (make_rational(2) - x) - 1;  // need sqrt(d) <= y
  if (y < 0) return false;
  return Rational(BigInt(d)) <= y * y;
}

inline CriterionResult resurgence_range_small(const SuiteOptions& o) {
  CriterionResult r{"8a", "resurgence interval for d = 4, 5", {}};
  for (unsigned d = 4; d <= 5; ++d) {
    const std::string statement = "2 - 2c_d/(d+c_d) <= rho(I(Z_d)) <= 2 - 2/(d+1)";
    guarded(r.claims, "Zd-resurgence-interval", statement, [&] {
      const auto cfg = quasi_star(d, o.seed, o.prime);
      ResurgenceOptions ro;
      ro.waldschmidt.m_max = 6;
      const auto rb = resurgence_bounds(cfg, ro);
      const auto b = resurgence_range(d);
      const bool inside = *b.lower_exact <= rb.lower && rb.upper <= b.upper;
      r.claims.push_back(make_claim("Zd-resurgence-interval", statement,
                                    "d=" + std::to_string(d) + " within " + interval_text(*b.lower_exact, b.upper),
                                    "d=" + std::to_string(d) + " " + interval_text(rb.lower, rb.upper), inside));
    });
  }
  return r;
}

inline CriterionResult resurgence_range_large(const SuiteOptions& o) {
  CriterionResult r{"8b", "certificate lower bound on rho for d = 10, 16", {}};
  for (unsigned d : {10u, 16u}) {
    const std::string statement = "rho(I(Z_d)) >= 2 - 2/(sqrt(d)+1) from certificates";
    guarded(r.claims, "Zd-resurgence-sqrt", statement, [&] {
      const auto cfg = quasi_star(d, o.seed, o.prime);
      const auto a = alpha_fat_points(cfg.ring, cfg.projective_points(), scaled_multiplicities(cfg, 1), 2 * d);
      std::ostringstream got;
      got << "d=" << d << " alpha=" << a->degree;
      Rational best = 0;
      for (unsigned m = 1; m <= 4; ++m) {
        const auto cert = waldschmidt_certificate(cfg, m);
        const Rational implied = make_rational(a->degree) / cert.bound_implied;
        got << " m=" << m << ":" << to_string(implied) << "~" << to_double(implied);
        best = std::max(best, implied);
      }
      const auto b = resurgence_range(d);
      std::ostringstream want;
      want << "d=" << d << " >= " << (b.lower_exact ? to_string(*b.lower_exact) : std::string("2-2/(sqrt(d)+1)"))
           << "~" << b.lower_value;
      r.claims.push_back(make_claim("Zd-resurgence-sqrt", statement, want.str(), got.str(),
                                    at_least_sqrt_bound(best, d)));
    });
  }
  return r;
}

inline CriterionResult example_triple(const SuiteOptions& o) {
  CriterionResult r{"9", "generic, star and quasi star sextuples are distinguished", {}};
  const std::string statement = "rho(X) = 5/4, rho(Y) = 3/2, rho(W) = 4/3 for six points";
  guarded(r.claims, "example-triple", statement, [&] {
    struct Item {
      std::string name;
      Configuration cfg;
      unsigned m_max;
      Rational target;
      std::optional<ResurgenceBounds> rb;
    };
    std::vector<Item> items{{"X generic", generic_points(6, o.seed, o.prime), 16, make_rational(5, 4), {}},
                            {"Y star", star_configuration(4, o.seed, o.prime), 4, make_rational(3, 2), {}},
                            {"W quasi-star", quasi_star(3, o.seed, o.prime), 9, make_rational(4, 3), {}}};
    for (auto& it : items) {
      ResurgenceOptions ro;
      ro.waldschmidt.m_max = it.m_max;
      it.rb = resurgence_bounds(it.cfg, ro);
      r.claims.push_back(make_claim("example-triple", statement, it.name + " contains " + to_string(it.target),
                                    it.name + " " + interval_text(it.rb->lower, it.rb->upper),
                                    it.rb->contains(it.target)));
    }
    for (const auto& it : items) {
      int hits = 0;
      for (const auto& other : items) hits += other.rb->contains(it.target);
      r.claims.push_back(make_claim("example-triple-distinct", statement,
                                    to_string(it.target) + " in exactly one interval",
                                    to_string(it.target) + " in " + std::to_string(hits) + " interval(s)", hits == 1));
    }
  });
  return r;
}

inline CriterionResult containment_laws(const SuiteOptions& o) {
  CriterionResult r{"10", "containment laws on computed grids", {}};
  const std::string statement = "I^(m) in I^r for m >= 2r; I^m in I^(m); I^(m+1) in I^(m)";
  struct Grid {
    std::string name;
    std::function<Configuration()> make;
    unsigned m_max, r_max;
  };
  const std::vector<Grid> grids{
      {"quasi-star d=3", [&] { return quasi_star(3, o.seed, o.prime); }, 8, 6},
      {"star d=4", [&] { return star_configuration(4, o.seed, o.prime); }, 6, 4},
      {"generic n=6", [&] { return generic_points(6, o.seed, o.prime); }, 6, 4},
  };
  for (const auto& g : grids)
    guarded(r.claims, "containment-laws", statement, [&] {
      const auto cfg = g.make();
      ContainmentOptions co;
      co.cell_seconds = o.cell_seconds;
      const auto rep = containment_table(cfg, g.m_max, g.r_max, co);
      std::size_t unknown = 0;
      for (const auto& c : rep.rows) unknown += c.status == CellStatus::Unknown;
      for (const auto& c : rep.chain) unknown += c.status == CellStatus::Unknown;
      r.claims.push_back(make_claim("containment-laws", statement, g.name + " zero violations",
                                    g.name + " " + std::to_string(rep.violations.size()) + " violations, " +
                                        std::to_string(unknown) + " unknown",
                                    rep.violations.empty()));
      if (g.name == "quasi-star d=3") {
        const auto& c = rep.cell(3, 2);
        r.claims.push_back(make_claim("Z3-containment-3-2", "I^(m) in I^r when m/r > rho(I(Z_3)) = 4/3",
                                      "I^(3) in I^2 holds", "I^(3) in I^2 " + to_string(c.status),
                                      c.status == CellStatus::Holds));
        const bool bounded = rep.max_failing_ratio && *rep.max_failing_ratio <= make_rational(4, 3) &&
                             *rep.max_failing_ratio > 1;
        r.claims.push_back(make_claim(
            "Z3-max-failing-ratio", "rho(I(Z_3)) = 4/3 bounds every failing ratio",
            "largest failing m/r in (1, 4/3]",
            rep.max_failing_ratio ? to_string(*rep.max_failing_ratio) + " at (" +
                                        std::to_string(rep.max_failing_pair->first) + "," +
                                        std::to_string(rep.max_failing_pair->second) + ")"
                                  : std::string("no failing pair"),
            bounded));
      }
      if (g.name == "star d=4") {
        std::size_t disagree = 0, cells = 0;
        for (unsigned m = 1; m <= 4; ++m)
          for (unsigned rr = 1; rr <= 3; ++rr, ++cells)
            disagree += containment_by_rank(cfg, m, rr) != rep.cell(m, rr).status;
        r.claims.push_back(make_claim("containment-oracles", "Groebner and linear algebra containment tests agree",
                                      "star d=4, m <= 4, r <= 3: 0 disagreements",
                                      "star d=4: " + std::to_string(disagree) + " disagreements over " +
                                          std::to_string(cells) + " cells",
                                      disagree == 0));
      }
    });
  return r;
}

inline CriterionResult corollary_checks(const SuiteOptions&) {
  CriterionResult r{"11", "derived parameters for the corollaries", {}};
  guarded(r.claims, "eps-construction", "d >= (2/eps - 1)^2 gives rho in [2 - eps, 2)", [&] {
    const auto c = corollary_from_epsilon(make_rational(2, 5));
    const bool ok = c.d == 16 && c.predicted_lower == make_rational(8, 5) && c.range.lower_exact &&
                    *c.range.lower_exact >= make_rational(8, 5);
    r.claims.push_back(make_claim("eps-construction", "d >= (2/eps - 1)^2 gives rho in [2 - eps, 2)",
                                  "eps=2/5: d=16, lower bound 8/5",
                                  "eps=2/5: d=" + std::to_string(c.d) + ", lower bound " + to_string(c.predicted_lower) +
                                      ", interval bound at d " + to_string(c.range.lower_rational),
                                  ok));
  });
  guarded(r.claims, "failure-order", "d >= (2r - 1)^2 gives rho >= (2r-1)/r", [&] {
    const auto c = corollary_from_failure_order(2);
    const bool ok = c.d == 9 && c.predicted_lower == make_rational(3, 2) && c.range.lower_exact &&
                    *c.range.lower_exact == make_rational(3, 2);
    r.claims.push_back(make_claim("failure-order", "d >= (2r - 1)^2 gives rho >= (2r-1)/r",
                                  "r=2: d=9, lower bound 3/2",
                                  "r=2: d=" + std::to_string(c.d) + ", lower bound " + to_string(c.predicted_lower) +
                                      ", interval bound at d " + to_string(c.range.lower_rational),
                                  ok));
  });
  return r;
}

// Random homogeneous ideal with 2..4 generators of degree 1..4.
inline Ideal random_ideal(std::uint64_t seed, const RingPtr& ring) {
  CounterRng rng(seed, 77);
  const auto& f = ring->field();
  const unsigned count = 2 + unsigned(rng.uniform(3));
  std::vector<Polynomial> gens;
  while (gens.size() < count) {
    const unsigned deg = 1 + unsigned(rng.uniform(4));
    const bool sparse = rng.uniform(2) == 0;
    std::vector<Term> terms;
    for (Monomial m : plane_monomials(deg)) {
      if (sparse && rng.uniform(3) != 0) continue;
      const Coeff c = rng.uniform(f.modulus());
      if (c) terms.push_back({m, c});
    }
    if (!terms.empty()) gens.push_back(Polynomial::from_sorted(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(gens));
}

inline bool s_polynomials_reduce(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  const auto ptrs = basis_pointers(I);
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j)
      if (!detail::reduce_any(s_polynomial(gb[i], gb[j]), ptrs).is_zero()) return false;
  for (const auto& g : I.generators())
    if (!detail::reduce_any(g, ptrs).is_zero()) return false;
  return true;
}

inline CriterionResult property_suites(const SuiteOptions& o) {
  CriterionResult r{"12", "property suites and two-prime reproducibility", {}};
  const auto ring = make_ring(o.prime);
  guarded(r.claims, "gb-s-polynomials", "every S-polynomial of a reduced basis reduces to zero", [&] {
    std::size_t checked = 0, bad = 0;
    for (std::uint64_t k = 0; k < 20; ++k, ++checked) bad += !s_polynomials_reduce(random_ideal(o.seed * 1000 + k, ring));
    for (unsigned d = 3; d <= 5; ++d, ++checked) bad += !s_polynomials_reduce(configuration_ideal(quasi_star(d, o.seed, o.prime)));
    for (unsigned m = 2; m <= 4; ++m, ++checked) bad += !s_polynomials_reduce(symbolic_power(quasi_star(3, o.seed, o.prime), m).ideal);
    r.claims.push_back(make_claim("gb-s-polynomials", "every S-polynomial of a reduced basis reduces to zero",
                                  "0 failures", std::to_string(bad) + " failures in " + std::to_string(checked) + " ideals",
                                  bad == 0));
  });
  guarded(r.claims, "hilbert-rank-oracle", "standard monomial count equals binom(t+2,2) - rank", [&] {
    std::size_t bad = 0;
    for (std::uint64_t k = 0; k < 20; ++k) {
      const Ideal I = random_ideal(o.seed * 1000 + k, ring);
      for (unsigned t = 0; t <= 12; ++t) bad += hilbert_function(I, t) != hilbert_function_by_rank(I, t);
    }
    r.claims.push_back(make_claim("hilbert-rank-oracle", "standard monomial count equals binom(t+2,2) - rank",
                                  "0 disagreements over 20 ideals, t <= 12", std::to_string(bad) + " disagreements",
                                  bad == 0));
  });
  guarded(r.claims, "betti-hilbert-series", "Betti numbers and Hilbert series satisfy the alternating sum", [&] {
    std::size_t tables = 0, bad = 0;
    for (unsigned d = 3; d <= 5; ++d)
      for (std::uint64_t s = o.seed; s < o.seed + 3; ++s) {
        const Ideal I = configuration_ideal(quasi_star(d, s, o.prime));
        ++tables;
        bad += !betti_hilbert_consistent(regularity_with_table(I).betti);
      }
    const Ideal I3 = configuration_ideal(quasi_star(3, o.seed, o.prime));
    for (unsigned m = 2; m <= 3; ++m, ++tables) bad += !betti_hilbert_consistent(regularity_with_table(ideal_power(I3, m)).betti);
    for (auto cfg : {star_configuration(4, o.seed, o.prime), generic_points(6, o.seed, o.prime),
                     generic_points(7, o.seed, o.prime), generic_points(5, o.seed, o.prime)}) {
      ++tables;
      bad += !betti_hilbert_consistent(regularity_with_table(configuration_ideal(cfg)).betti);
    }
    for (std::uint64_t k = 0; k < 20; ++k, ++tables)
      bad += !betti_hilbert_consistent(graded_betti(random_ideal(o.seed * 1000 + k, ring), 12));
    r.claims.push_back(make_claim("betti-hilbert-series", "Betti numbers and Hilbert series satisfy the alternating sum",
                                  "0 inconsistent tables", std::to_string(bad) + " inconsistent of " + std::to_string(tables),
                                  bad == 0));
  });
  guarded(r.claims, "sandwich-nonempty", "alpha(I^(m))/(m+1) <= alpha-hat <= alpha(I^(m))/m over all m", [&] {
    std::size_t bad = 0, checked = 0;
    for (auto cfg : {quasi_star(3, o.seed, o.prime), star_configuration(4, o.seed, o.prime),
                     generic_points(6, o.seed, o.prime), quasi_star(4, o.seed, o.prime)}) {
      WaldschmidtOptions w;
      w.m_max = 8;
      w.certificates = false;
      const auto est = waldschmidt_estimate(cfg, w);
      Rational lo = 0, hi = 1000;
      for (const auto& [m, a] : est.alpha_values) {
        lo = std::max(lo, make_rational(a, m + 1));
        hi = std::min(hi, make_rational(a, m));
      }
      for (const auto& [m1, a1] : est.alpha_values)
        for (const auto& [m2, a2] : est.alpha_values)
          if (est.alpha_values.count(m1 + m2)) bad += est.alpha_values.at(m1 + m2) > a1 + a2;
      bad += lo > hi;
      ++checked;
    }
    r.claims.push_back(make_claim("sandwich-nonempty", "alpha(I^(m))/(m+1) <= alpha-hat <= alpha(I^(m))/m over all m",
                                  "nonempty intersections and subadditive alpha",
                                  std::to_string(bad) + " violations over " + std::to_string(checked) + " configurations",
                                  bad == 0));
  });
  guarded(r.claims, "two-prime", "statuses agree at two primes", [&] {
    const std::uint64_t other = o.prime == PrimeField::kSecondPrime ? PrimeField::kDefaultPrime : PrimeField::kSecondPrime;
    const std::vector<std::string> ids{"1", "2", "3", "4", "5", "6", "7", "8a", "8b", "9", "10", "11"};
    SuiteOptions o2 = o;
    o2.prime = other;
    const auto here = run_criteria(ids, o);
    const auto there = run_criteria(ids, o2);
    std::size_t mismatches = 0, compared = 0;
    std::string detail;
    for (std::size_t k = 0; k < here.size(); ++k) {
      const auto& a = here[k].claims;
      const auto& b = there[k].claims;
      if (a.size() != b.size()) {
        ++mismatches;
        detail += " criterion " + here[k].id + " claim counts differ;";
        continue;
      }
      for (std::size_t c = 0; c < a.size(); ++c, ++compared)
        if (a[c].status != b[c].status) {
          ++mismatches;
          detail += " " + a[c].id + ";";
        }
    }
    r.claims.push_back(make_claim("two-prime", "statuses agree at two primes",
                                  "identical statuses at p=" + std::to_string(o.prime) + " and p=" + std::to_string(other),
                                  std::to_string(mismatches) + " mismatches over " + std::to_string(compared) + " claims" +
                                      detail,
                                  mismatches == 0));
  });
  return r;
}

}  // namespace suite

inline const std::vector<std::pair<std::string, std::function<CriterionResult(const SuiteOptions&)>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<CriterionResult(const SuiteOptions&)>>> table{
      {"1", suite::resolution_shape},   {"2", suite::determinantal_equality}, {"3", suite::multiplicity_claim},
      {"4", suite::equivalences},       {"5", suite::powers_linear},          {"6", suite::z3_resurgence},
      {"7", suite::certificate_bounds}, {"8a", suite::resurgence_range_small},    {"8b", suite::resurgence_range_large},
      {"9", suite::example_triple},     {"10", suite::containment_laws},      {"11", suite::corollary_checks},
      {"12", suite::property_suites},
  };
  return table;
}

// Criterion "8" runs both of its parts.
inline CriterionResult run_criterion(const std::string& id, const SuiteOptions& o) {
  if (id == "8") {
    auto a = suite::resurgence_range_small(o);
    auto b = suite::resurgence_range_large(o);
    CriterionResult r{"8", "resurgence interval for quasi star configurations", std::move(a.claims)};
    r.claims.insert(r.claims.end(), b.claims.begin(), b.claims.end());
    return r;
  }
  for (const auto& [key, fn] : criteria())
    if (key == id) return fn(o);
  throw std::invalid_argument("unknown criterion: " + id);
}

inline std::vector<CriterionResult> run_criteria(const std::vector<std::string>& ids, const SuiteOptions& o) {
  std::vector<CriterionResult> out;
  for (const auto& id : ids) out.push_back(run_criterion(id, o));
  return out;
}

inline std::vector<std::string> all_criterion_ids() {
  return {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12"};
}

// 0 when everything passed, 1 on any failure, 2 when something was skipped.
inline int exit_code(const std::vector<CriterionResult>& results) {
  bool skipped = false;
  for (const auto& r : results) {
    const auto s = r.status();
    if (s == ClaimStatus::Fail) return 1;
    if (s == ClaimStatus::Skipped) skipped = true;
  }
  return skipped ? 2 : 0;
}

}  // namespace starconf
