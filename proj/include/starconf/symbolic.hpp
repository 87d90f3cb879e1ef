#pragma once

#include "starconf/invariants.hpp"
#include "starconf/rational.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starconf {

namespace detail {

// ff[n][a] = n (n-1) ... (n-a+1) mod p, for 0 <= a <= n <= top.
inline std::vector<std::vector<Coeff>> falling_factorials(unsigned top, const PrimeField& f) {
  std::vector<std::vector<Coeff>> ff(top + 1);
  for (unsigned n = 0; n <= top; ++n) {
    ff[n].resize(n + 1);
    ff[n][0] = 1;
    for (unsigned a = 1; a <= n; ++a) ff[n][a] = f.mul(ff[n][a - 1], f.from_int(n - a + 1));
  }
  return ff;
}

inline std::array<std::vector<Coeff>, 3> coordinate_powers(const ProjectivePoint& p, unsigned top,
                                                           const PrimeField& f) {
  std::array<std::vector<Coeff>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].resize(top + 1);
    pw[i][0] = 1;
    for (unsigned e = 1; e <= top; ++e) pw[i][e] = f.mul(pw[i][e - 1], p.coords()[i]);
  }
  return pw;
}

// Value at p of the partial derivative d^a/dx0^a d^b/dx1^b d^c/dx2^c applied
// to the monomial with exponents e.
inline Coeff derivative_entry(Monomial e, unsigned a, unsigned b, unsigned c,
                              const std::vector<std::vector<Coeff>>& ff,
                              const std::array<std::vector<Coeff>, 3>& pw, const PrimeField& f) {
  const unsigned e0 = e.exponent(0), e1 = e.exponent(1), e2 = e.exponent(2);
  if (e0 < a || e1 < b || e2 < c) return 0;
  Coeff v = f.mul(f.mul(ff[e0][a], ff[e1][b]), ff[e2][c]);
  if (v == 0) return 0;
  return f.mul(v, f.mul(f.mul(pw[0][e0 - a], pw[1][e1 - b]), pw[2][e2 - c]));
}

// By Euler's formula the partials of order k-1 of a form of degree t < p
// vanish at p exactly when all partials of order < k do.
inline void require_degree_below_characteristic(unsigned degree, const PrimeField& f) {
  if (degree >= f.modulus())
    throw std::domain_error("degree must stay below the characteristic for derivative conditions");
}

}  // namespace detail

// Derivative conditions expressing that a degree-t form vanishes to order
// mults[i] at points[i]; binom(m+1, 2) rows per point.
inline Matrix fat_point_conditions(const std::vector<ProjectivePoint>& points,
                                   const std::vector<unsigned>& mults, unsigned t, const PrimeField& f) {
  detail::require_degree_below_characteristic(t, f);
  const auto& monos = detail::monomial_table(t);
  // Only the zero form of degree t vanishes to order k > t.
  if (std::any_of(mults.begin(), mults.end(), [&](unsigned k) { return k > t; })) {
    Matrix I(monos.size(), monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c) I(c, c) = 1;
    return I;
  }
  const auto ff = detail::falling_factorials(t, f);
  std::size_t rows = 0;
  for (unsigned k : mults) rows += std::size_t{k} * (k + 1) / 2;
  Matrix M(rows, monos.size());
  std::size_t r = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const unsigned k = mults[i];
    if (k == 0) continue;
    const auto pw = detail::coordinate_powers(points[i], t, f);
    for (unsigned a = 0; a < k; ++a)
      for (unsigned b = 0; a + b < k; ++b) {
        const unsigned c = k - 1 - a - b;
        for (std::size_t col = 0; col < monos.size(); ++col)
          M(r, col) = detail::derivative_entry(monos[col], a, b, c, ff, pw, f);
        ++r;
      }
  }
  return M;
}

inline bool vanishing_order_at_least(const Polynomial& g, const ProjectivePoint& p, unsigned k) {
  if (k == 0 || g.is_zero()) return true;
  const auto& f = g.ring()->field();
  const unsigned deg = g.degree();
  if (!g.is_homogeneous()) throw std::invalid_argument("vanishing order needs a form");
  if (deg < k) return false;
  detail::require_degree_below_characteristic(deg, f);
  const auto ff = detail::falling_factorials(deg, f);
  const auto pw = detail::coordinate_powers(p, deg, f);
  for (unsigned a = 0; a < k; ++a)
    for (unsigned b = 0; a + b < k; ++b) {
      const unsigned c = k - 1 - a - b;
      Coeff acc = 0;
      for (const auto& t : g.terms())
        acc = f.add(acc, f.mul(t.coeff, detail::derivative_entry(t.mono, a, b, c, ff, pw, f)));
      if (acc != 0) return false;
    }
  return true;
}

struct FatPointSolution {
  unsigned degree = 0;
  Polynomial form;
};

inline bool fat_points_solvable(const std::vector<ProjectivePoint>& points, const std::vector<unsigned>& mults,
                                unsigned t, const PrimeField& f) {
  const std::size_t cols = count_monomials(t);
  Matrix M = fat_point_conditions(points, mults, t, f);
  if (M.rows() < cols) return true;
  return rank(std::move(M), f) < cols;
}

// Least t <= t_max admitting a nonzero form of degree t vanishing to order
// mults[i] at points[i], together with one such form. `lower` is a known lower
// bound and `upper` a degree known to be solvable, when available.
inline std::optional<FatPointSolution> alpha_fat_points(const RingPtr& ring,
                                                        const std::vector<ProjectivePoint>& points,
                                                        const std::vector<unsigned>& mults, unsigned t_max,
                                                        unsigned lower = 0,
                                                        std::optional<unsigned> upper = std::nullopt,
                                                        const Deadline& deadline = {}) {
  if (points.size() != mults.size()) throw std::invalid_argument("one multiplicity per point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw std::invalid_argument("points must be distinct");
  const auto& f = ring->field();
  std::size_t conditions = 0;
  unsigned top = 0;
  for (unsigned k : mults) {
    if (k >= f.modulus()) throw std::domain_error("multiplicity must stay below the characteristic");
    conditions += std::size_t{k} * (k + 1) / 2;
    top = std::max(top, k);
  }
  unsigned lo = std::max({lower, top, 1u});
  // A degree with more monomials than conditions always has a solution.
  unsigned free_degree = 0;
  while (count_monomials(free_degree) <= conditions) ++free_degree;
  unsigned hi = free_degree;
  if (upper) hi = std::min(hi, *upper);
  if (hi > t_max) {
    hi = t_max;
    if (hi < lo || !fat_points_solvable(points, mults, hi, f)) return std::nullopt;
  }
  if (lo > hi) lo = hi;
  while (lo < hi) {
    deadline.check("fat point interpolation");
    const unsigned mid = lo + (hi - lo) / 2;
    if (fat_points_solvable(points, mults, mid, f))
      hi = mid;
    else
      lo = mid + 1;
  }
  auto kernel = kernel_basis(fat_point_conditions(points, mults, hi, f), f, 1);
  if (kernel.empty()) throw std::logic_error("interpolation search lost its solution");
  const auto& monos = detail::monomial_table(hi);
  std::vector<Term> terms;
  for (std::size_t c = 0; c < monos.size(); ++c)
    if (kernel[0][c]) terms.push_back({monos[c], kernel[0][c]});
  return FatPointSolution{hi, Polynomial::from_sorted(ring, std::move(terms)).monic()};
}

// The symbolic power as an intersection of powers of point ideals.
struct SymbolicPower {
  unsigned m = 1;
  Ideal ideal;
};

inline SymbolicPower symbolic_power(const Configuration& cfg, unsigned m, const Deadline& deadline = {}) {
  if (m == 0) throw std::invalid_argument("symbolic power needs m >= 1");
  return {m, configuration_ideal(cfg, m, deadline)};
}

// c_d for 4 <= d <= 9.
inline std::optional<Rational> c_d(unsigned d) {
  switch (d) {
    case 4: return make_rational(2);
    case 5: return make_rational(2);
    case 6: return make_rational(12, 5);
    case 7: return make_rational(21, 8);
    case 8: return make_rational(48, 17);
    case 9: return make_rational(3);
    default: return std::nullopt;
  }
}

struct CertificateRecord {
  Polynomial element;        // F * D
  Polynomial interpolant;    // F
  unsigned m = 1;
  unsigned symbolic_order = 0;
  unsigned degree = 0;
  unsigned interpolant_degree = 0;
  unsigned interpolant_target = 0;
  Rational bound_implied;
  std::string route;  // "c_d" or "sqrt"
  bool membership_verified = false;
};

inline std::vector<ProjectivePoint> extra_points(const Configuration& cfg) {
  std::vector<ProjectivePoint> out;
  for (auto i : cfg.extra_points) out.push_back(cfg.points[i].point);
  return out;
}

// Element F*D of I^(2bm) with D = (L_1...L_d)^(bm) and F vanishing to order bm
// on T_d (c_d = a/b for d <= 9; b = 1 and deg F <= floor((m+1) sqrt d) for
// d >= 10). Membership is checked point by point.
inline CertificateRecord waldschmidt_certificate(const Configuration& cfg, unsigned m,
                                                 const Deadline& deadline = {}) {
  if (cfg.kind != ConfigKind::QuasiStar) throw std::invalid_argument("certificates need a quasi star configuration");
  const unsigned d = cfg.parameter;
  if (d < 4) throw std::invalid_argument("certificates need d >= 4");
  if (m == 0) throw std::invalid_argument("m must be positive");
  CertificateRecord rec;
  rec.m = m;
  unsigned b = 1;
  if (auto c = c_d(d)) {
    const unsigned a = boost::multiprecision::numerator(*c).convert_to<unsigned>();
    b = boost::multiprecision::denominator(*c).convert_to<unsigned>();
    rec.route = "c_d";
    rec.interpolant_target = a * m;
  } else {
    rec.route = "sqrt";
    const BigInt s = isqrt_floor(BigInt(m + 1) * (m + 1) * d);
    rec.interpolant_target = s.convert_to<unsigned>();
  }
  const unsigned order_on_t = b * m;
  rec.symbolic_order = 2 * order_on_t;

  const auto T = extra_points(cfg);
  const auto F = alpha_fat_points(cfg.ring, T, std::vector<unsigned>(T.size(), order_on_t),
                                  rec.interpolant_target, 0, std::nullopt, deadline);
  if (!F)
    throw std::logic_error("falsification: no form of degree " + std::to_string(rec.interpolant_target) +
                           " vanishes to order " + std::to_string(order_on_t) + " on T_d");
  rec.interpolant = F->form;
  rec.interpolant_degree = F->degree;

  std::vector<Polynomial> lines;
  for (const auto& L : cfg.lines) lines.push_back(L.polynomial(cfg.ring));
  const Polynomial D = poly_pow(product(cfg.ring, lines), order_on_t);
  rec.element = poly_mul(F->form, D);
  rec.degree = rec.element.degree();
  rec.bound_implied = make_rational(rec.degree, rec.symbolic_order);

  for (const auto& p : cfg.points) {
    deadline.check("certificate membership");
    if (!vanishing_order_at_least(rec.element, p.point, rec.symbolic_order * p.multiplicity))
      throw std::logic_error("falsification: certificate element fails to vanish to order " +
                             std::to_string(rec.symbolic_order) + " at " + p.label);
  }
  rec.membership_verified = true;
  return rec;
}

struct WaldschmidtOptions {
  unsigned m_max = 8;
  bool certificates = true;
  unsigned certificate_m = 1;
  Deadline deadline;
};

struct WaldschmidtEstimate {
  std::map<unsigned, unsigned> alpha_values;  // m -> alpha(I^(m))
  Rational lower;
  Rational upper;
  std::string lower_source;
  std::string upper_source;
  std::vector<CertificateRecord> certificates;
  bool truncated = false;

  bool contains(const Rational& q) const { return lower <= q && q <= upper; }
};

inline std::vector<unsigned> scaled_multiplicities(const Configuration& cfg, unsigned m) {
  std::vector<unsigned> out;
  for (const auto& p : cfg.points) out.push_back(m * p.multiplicity);
  return out;
}

// Sandwich bounds alpha(I^(m))/(m+1) <= alpha-hat <= alpha(I^(m))/m over the
// computed m, the bound (alpha+1)/2 for reduced plane points, and any
// certificate bounds.
inline WaldschmidtEstimate waldschmidt_estimate(const Configuration& cfg, const WaldschmidtOptions& opt = {}) {
  if (opt.m_max == 0) throw std::invalid_argument("m_max must be positive");
  WaldschmidtEstimate est;
  const auto pts = cfg.projective_points();
  unsigned a1 = 0;
  for (unsigned m = 1; m <= opt.m_max; ++m) {
    try {
      std::optional<unsigned> upper;
      unsigned lower = 0;
      if (m > 1) {
        lower = est.alpha_values[m - 1] + 1;
        upper = est.alpha_values[m - 1] + a1;
      }
      const auto sol = alpha_fat_points(cfg.ring, pts, scaled_multiplicities(cfg, m), ~0u >> 1, lower, upper,
                                        opt.deadline);
      est.alpha_values[m] = sol->degree;
      if (m == 1) a1 = sol->degree;
    } catch (const BudgetExhausted&) {
      est.truncated = true;
      break;
    }
  }
  if (est.alpha_values.empty()) throw BudgetExhausted("no symbolic power finished within the budget");

  bool have_lower = false, have_upper = false;
  auto offer_lower = [&](const Rational& v, std::string src) {
    if (!have_lower || v > est.lower) {
      est.lower = v;
      est.lower_source = std::move(src);
      have_lower = true;
    }
  };
  auto offer_upper = [&](const Rational& v, std::string src) {
    if (!have_upper || v < est.upper) {
      est.upper = v;
      est.upper_source = std::move(src);
      have_upper = true;
    }
  };
  for (const auto& [m, a] : est.alpha_values) {
    offer_lower(make_rational(a, m + 1), "alpha(I^(" + std::to_string(m) + "))/" + std::to_string(m + 1));
    offer_upper(make_rational(a, m), "alpha(I^(" + std::to_string(m) + "))/" + std::to_string(m));
  }
  if (cfg.is_reduced() && est.alpha_values.count(1))
    offer_lower(make_rational(est.alpha_values[1] + 1, 2), "(alpha+1)/2 for reduced points in the plane");
  if (opt.certificates && cfg.kind == ConfigKind::QuasiStar && cfg.parameter >= 4) {
    try {
      est.certificates.push_back(waldschmidt_certificate(cfg, opt.certificate_m, opt.deadline));
      const auto& c = est.certificates.back();
      offer_upper(c.bound_implied, "certificate of degree " + std::to_string(c.degree) + " in I^(" +
                                       std::to_string(c.symbolic_order) + ")");
    } catch (const BudgetExhausted&) {
      est.truncated = true;
    }
  }
  if (est.lower > est.upper) throw std::logic_error("falsification: empty Waldschmidt interval");
  return est;
}

enum class CellStatus { Holds, Fails, Unknown };

inline std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Holds: return "holds";
    case CellStatus::Fails: return "fails";
    case CellStatus::Unknown: return "unknown";
  }
  return "unknown";
}

struct ContainmentCell {
  unsigned m = 0, r = 0;
  CellStatus status = CellStatus::Unknown;
  std::optional<Polynomial> witness;
  std::string note;
};

struct ChainCheck {
  std::string relation;  // e.g. "I^2 in I^(2)"
  CellStatus status = CellStatus::Unknown;
};

struct ContainmentOptions {
  double cell_seconds = 0;   // 0 means unlimited
  unsigned max_degree = 0;   // 0 means unlimited
};

struct ContainmentReport {
  unsigned m_max = 0, r_max = 0;
  std::vector<ContainmentCell> rows;
  std::optional<Rational> max_failing_ratio;
  std::optional<std::pair<unsigned, unsigned>> max_failing_pair;
  std::vector<ChainCheck> chain;
  std::vector<std::string> violations;

  const ContainmentCell& cell(unsigned m, unsigned r) const { return rows.at((m - 1) * r_max + (r - 1)); }
  bool all_resolved() const {
    for (const auto& c : rows)
      if (c.status == CellStatus::Unknown) return false;
    for (const auto& c : chain)
      if (c.status == CellStatus::Unknown) return false;
    return true;
  }
};

// Tests I^(m) in I^r for 1 <= m <= m_max, 1 <= r <= r_max, plus the chains
// I^m in I^(m) and I^(m+1) in I^(m). Cells that exceed a budget stay unknown.
inline ContainmentReport containment_table(const Configuration& cfg, unsigned m_max, unsigned r_max,
                                           const ContainmentOptions& opt = {}) {
  if (m_max == 0 || r_max == 0) throw std::invalid_argument("grid dimensions must be positive");
  ContainmentReport rep;
  rep.m_max = m_max;
  rep.r_max = r_max;
  auto budget = [&] { return Deadline::after_seconds(opt.cell_seconds); };
  auto within_degree = [&](unsigned deg) { return opt.max_degree == 0 || deg <= opt.max_degree; };

  const Ideal I = configuration_ideal(cfg, 1, budget());
  std::vector<std::optional<Ideal>> sym(m_max + 1), ord(std::max(m_max, r_max) + 1);
  std::vector<std::string> sym_note(m_max + 1), ord_note(ord.size());
  for (unsigned m = 1; m <= m_max; ++m) {
    try {
      Ideal S = m == 1 ? I : configuration_ideal(cfg, m, budget());
      if (!within_degree(S.max_basis_degree())) {
        sym_note[m] = "symbolic power exceeds the degree budget";
        continue;
      }
      sym[m] = S;
    } catch (const BudgetExhausted& e) {
      sym_note[m] = e.what();
    }
  }
  for (unsigned r = 1; r < ord.size(); ++r) {
    try {
      if (r > 1 && !ord[r - 1]) {
        ord_note[r] = ord_note[r - 1];
        continue;
      }
      Ideal P = r == 1 ? I : ideal_product(*ord[r - 1], I);
      if (!within_degree(r * I.max_basis_degree())) {
        ord_note[r] = "ordinary power exceeds the degree budget";
        continue;
      }
      P.groebner_basis(budget());
      ord[r] = P;
    } catch (const BudgetExhausted& e) {
      ord_note[r] = e.what();
    }
  }

  auto subideal = [&](const Ideal& A, const Ideal& B, CellStatus& status, std::optional<Polynomial>* witness,
                      std::string& note) {
    try {
      const Deadline dl = budget();
      B.groebner_basis(dl);
      for (const auto& g : A.generators()) {
        dl.check("containment test");
        if (!normal_form(g, B).is_zero()) {
          status = CellStatus::Fails;
          if (witness) *witness = g;
          return;
        }
      }
      status = CellStatus::Holds;
    } catch (const BudgetExhausted& e) {
      status = CellStatus::Unknown;
      note = e.what();
    }
  };

  for (unsigned m = 1; m <= m_max; ++m)
    for (unsigned r = 1; r <= r_max; ++r) {
      ContainmentCell c;
      c.m = m;
      c.r = r;
      if (!sym[m])
        c.note = sym_note[m];
      else if (!ord[r])
        c.note = ord_note[r];
      else
        subideal(*sym[m], *ord[r], c.status, &c.witness, c.note);
      if (c.status == CellStatus::Fails) {
        const Rational ratio = make_rational(m, r);
        if (!rep.max_failing_ratio || ratio > *rep.max_failing_ratio) {
          rep.max_failing_ratio = ratio;
          rep.max_failing_pair = {m, r};
        }
        if (m >= 2 * r)
          rep.violations.push_back("I^(" + std::to_string(m) + ") not in I^" + std::to_string(r) +
                                   " although m >= 2r");
      }
      rep.rows.push_back(std::move(c));
    }

  for (unsigned m = 1; m <= m_max; ++m) {
    ChainCheck ordinary{"I^" + std::to_string(m) + " in I^(" + std::to_string(m) + ")"};
    std::string note;
    if (ord[m] && sym[m]) subideal(*ord[m], *sym[m], ordinary.status, nullptr, note);
    if (ordinary.status == CellStatus::Fails) rep.violations.push_back(ordinary.relation + " fails");
    rep.chain.push_back(ordinary);
    if (m < m_max) {
      ChainCheck nested{"I^(" + std::to_string(m + 1) + ") in I^(" + std::to_string(m) + ")"};
      if (sym[m + 1] && sym[m]) subideal(*sym[m + 1], *sym[m], nested.status, nullptr, note);
      if (nested.status == CellStatus::Fails) rep.violations.push_back(nested.relation + " fails");
      rep.chain.push_back(nested);
    }
  }
  return rep;
}

// I^(m) in I^r decided with linear algebra alone, as an oracle independent of
// Groebner bases. I^(m)_t is the kernel of the derivative conditions and
// I^r_t is spanned by products I_d * I^(r-1)_(t-d). Once the fat point scheme
// imposes independent conditions in degree t0, I^(m) is generated in degrees
// at most t0 + 1, so no higher degree needs checking.
inline CellStatus containment_by_rank(const Configuration& cfg, unsigned m, unsigned r,
                                      const Deadline& deadline = {}) {
  const auto& f = cfg.field();
  const auto points = cfg.projective_points();
  const auto mults = scaled_multiplicities(cfg, m);
  const auto ones = scaled_multiplicities(cfg, 1);
  auto settled = [&](const std::vector<unsigned>& ks) {
    std::size_t conditions = 0;
    for (unsigned k : ks) conditions += std::size_t{k} * (k + 1) / 2;
    for (unsigned t = 0;; ++t) {
      const std::size_t cols = count_monomials(t);
      if (cols >= conditions && rank(fat_point_conditions(points, ks, t, f), f) == conditions) return t;
    }
  };
  auto forms = [&](const std::vector<unsigned>& ks, unsigned t) {
    std::vector<Polynomial> out;
    const auto& monos = detail::monomial_table(t);
    for (const auto& v : kernel_basis(fat_point_conditions(points, ks, t, f), f)) {
      std::vector<Term> terms;
      for (std::size_t c = 0; c < monos.size(); ++c)
        if (v[c]) terms.push_back({monos[c], v[c]});
      out.push_back(Polynomial::from_sorted(cfg.ring, std::move(terms)));
    }
    return out;
  };
  const unsigned top = settled(mults) + 1;
  const unsigned gen_top = settled(ones) + 1;
  std::vector<std::vector<Polynomial>> base(top + 1);
  for (unsigned d = 1; d <= std::min(top, gen_top); ++d) base[d] = forms(ones, d);
  // power[t] spans I^k_t for the current k.
  std::vector<std::vector<Polynomial>> power(top + 1);
  for (unsigned t = 1; t <= top; ++t) power[t] = t <= gen_top ? base[t] : forms(ones, t);
  for (unsigned k = 2; k <= r; ++k) {
    std::vector<std::vector<Polynomial>> next(top + 1);
    for (unsigned t = 0; t <= top; ++t) {
      RowSpace span(count_monomials(t), f);
      for (unsigned d = 1; d <= t; ++d)
        for (const auto& g : base[d])
          for (const auto& h : power[t - d]) {
            deadline.check("rank containment");
            const Polynomial p = poly_mul(g, h);
            if (span.insert(coefficient_vector(p, t))) next[t].push_back(p);
          }
    }
    power = std::move(next);
  }
  for (unsigned t = 0; t <= top; ++t) {
    RowSpace span(count_monomials(t), f);
    for (const auto& h : power[t]) span.insert(coefficient_vector(h, t));
    for (const auto& g : forms(mults, t)) {
      auto v = coefficient_vector(g, t);
      span.reduce(v);
      for (Coeff c : v)
        if (c) return CellStatus::Fails;
    }
  }
  return CellStatus::Holds;
}

struct ResurgenceOptions {
  WaldschmidtOptions waldschmidt;
  unsigned containment_m_max = 0;  // 0 skips the sweep
  unsigned containment_r_max = 0;
  ContainmentOptions containment;
};

struct BoundRecord {
  Rational value;
  std::string source;
};

struct ResurgenceBounds {
  Rational lower;
  Rational upper;
  std::vector<BoundRecord> lower_candidates;
  std::vector<BoundRecord> upper_candidates;
  unsigned alpha = 0;
  int regularity = -1;
  WaldschmidtEstimate waldschmidt;
  std::optional<ContainmentReport> containment;
  // [alpha/alpha-hat upper, alpha/alpha-hat lower], valid when reg = alpha.
  std::optional<std::pair<Rational, Rational>> equality_interval;

  bool contains(const Rational& q) const { return lower <= q && q <= upper; }
};

// alpha/alpha-hat <= rho <= reg/alpha-hat, sharpened by failing containments
// and the general bounds 1 <= rho <= 2 for points in the plane.
inline ResurgenceBounds resurgence_bounds(const Configuration& cfg, const ResurgenceOptions& opt = {}) {
  ResurgenceBounds rb;
  const Ideal I = configuration_ideal(cfg, 1, opt.waldschmidt.deadline);
  rb.alpha = alpha(I);
  rb.regularity = regularity_with_table(I, 0, 0, opt.waldschmidt.deadline).regularity;
  rb.waldschmidt = waldschmidt_estimate(cfg, opt.waldschmidt);
  const auto& w = rb.waldschmidt;

  rb.lower_candidates.push_back({make_rational(1), "rho >= 1"});
  rb.lower_candidates.push_back({make_rational(rb.alpha) / w.upper,
                                 "alpha/alpha-hat with alpha = " + std::to_string(rb.alpha) +
                                     " and alpha-hat <= " + to_string(w.upper) + " (" + w.upper_source + ")"});
  rb.upper_candidates.push_back({make_rational(2), "rho <= 2 for ideals of points in the plane"});
  rb.upper_candidates.push_back({make_rational(rb.regularity) / w.lower,
                                 "reg/alpha-hat with reg = " + std::to_string(rb.regularity) +
                                     " and alpha-hat >= " + to_string(w.lower) + " (" + w.lower_source + ")"});
  if (opt.containment_m_max && opt.containment_r_max) {
    rb.containment = containment_table(cfg, opt.containment_m_max, opt.containment_r_max, opt.containment);
    if (!rb.containment->violations.empty())
      throw std::logic_error("falsification: " + rb.containment->violations.front());
    if (rb.containment->max_failing_ratio) {
      const auto [m, r] = *rb.containment->max_failing_pair;
      rb.lower_candidates.push_back({*rb.containment->max_failing_ratio,
                                     "I^(" + std::to_string(m) + ") not in I^" + std::to_string(r)});
    }
  }
  rb.lower = rb.lower_candidates.front().value;
  for (const auto& c : rb.lower_candidates) rb.lower = std::max(rb.lower, c.value);
  rb.upper = rb.upper_candidates.front().value;
  for (const auto& c : rb.upper_candidates) rb.upper = std::min(rb.upper, c.value);
  if (rb.regularity == int(rb.alpha))
    rb.equality_interval = std::make_pair(make_rational(rb.alpha) / w.upper, make_rational(rb.alpha) / w.lower);
  if (rb.lower > rb.upper) throw std::logic_error("falsification: empty resurgence interval");
  return rb;
}

struct ResurgenceRange {
  std::optional<Rational> lower_exact;  // exact when d <= 9 or d is a square
  Rational lower_rational;              // always a valid lower bound
  double lower_value = 0;
  Rational upper;                       // 2 - 2/(d+1)
};

// Resurgence interval for quasi star configurations with d >= 4.
inline ResurgenceRange resurgence_range(unsigned long d) {
  if (d < 4) throw std::invalid_argument("interval is stated for d >= 4");
  ResurgenceRange b;
  b.upper = make_rational(2) - make_rational(2, std::int64_t(d) + 1);
  if (auto c = c_d(unsigned(d))) {
    b.lower_exact = make_rational(2) - 2 * *c / (Rational(BigInt(d)) + *c);
    b.lower_rational = *b.lower_exact;
    b.lower_value = to_double(*b.lower_exact);
    return b;
  }
  const BigInt s = isqrt_floor(BigInt(d));
  b.lower_rational = make_rational(2) - Rational(BigInt(2), s + 1);
  if (s * s == BigInt(d)) b.lower_exact = b.lower_rational;
  b.lower_value = 2.0 - 2.0 / (std::sqrt(double(d)) + 1.0);
  return b;
}

struct CorollaryResult {
  std::string mode;
  unsigned long d = 0;
  Rational predicted_lower;
  Rational predicted_upper = make_rational(2);  // open end
  ResurgenceRange range;
};

// Smallest d >= (2/eps - 1)^2; the resurgence then lies in [2 - eps, 2).
inline CorollaryResult corollary_from_epsilon(const Rational& eps) {
  if (eps <= 0 || eps >= make_rational(1, 2)) throw std::domain_error("epsilon must lie in (0, 1/2)");
  const Rational x = make_rational(2) / eps - 1;
  CorollaryResult r;
  r.mode = "epsilon";
  r.d = ceil_rational(x * x).convert_to<unsigned long>();
  r.predicted_lower = make_rational(2) - eps;
  r.range = resurgence_range(r.d);
  return r;
}

// d = (2r - 1)^2 forces resurgence >= (2r - 1)/r.
inline CorollaryResult corollary_from_failure_order(unsigned long r) {
  if (r < 2) throw std::domain_error("r must be at least 2");
  CorollaryResult out;
  out.mode = "failure-order";
  out.d = (2 * r - 1) * (2 * r - 1);
  out.predicted_lower = make_rational(std::int64_t(2 * r - 1), std::int64_t(r));
  out.range = resurgence_range(out.d);
  return out;
}

}  // namespace starconf
