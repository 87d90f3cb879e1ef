#pragma once

#include "starconf/geometry.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace starconf {

inline std::size_t binomial2(std::size_t n) { return n * (n - 1) / 2; }

namespace detail {

inline bool is_standard(Monomial m, const std::vector<Polynomial>& gb) {
  for (const auto& g : gb)
    if (g.leading_monomial().divides(m)) return false;
  return true;
}

}  // namespace detail

// Degree-t standard monomials of R/I in decreasing grevlex order.
inline std::vector<Monomial> standard_monomials(const Ideal& I, unsigned t) {
  const auto& gb = I.groebner_basis();
  std::vector<Monomial> out;
  for (Monomial m : detail::monomial_table(t))
    if (detail::is_standard(m, gb)) out.push_back(m);
  return out;
}

inline std::size_t hilbert_function(const Ideal& I, unsigned t) {
  const auto& gb = I.groebner_basis();
  std::size_t n = 0;
  for (Monomial m : detail::monomial_table(t)) n += detail::is_standard(m, gb);
  return n;
}

// dim I_t from the span of all monomial multiples of the generators, with no
// Groebner basis involved.
inline std::size_t ideal_dimension_by_rank(const Ideal& I, unsigned t) {
  Matrix m(0, count_monomials(t));
  for (const auto& g : I.generators()) {
    if (g.degree() > t) continue;
    for (Monomial u : plane_monomials(t - g.degree()))
      m.append_row(coefficient_vector(g.times_monomial(u), t));
  }
  return rank(std::move(m), I.ring()->field());
}

inline std::size_t hilbert_function_by_rank(const Ideal& I, unsigned t) {
  return count_monomials(t) - ideal_dimension_by_rank(I, t);
}

struct HilbertProfile {
  std::vector<std::size_t> values;  // H(R/I, t) for t = 0..values.size()-1
  std::optional<unsigned> stabilized_at;
  std::optional<std::size_t> stable_value;

  bool is_generic() const {
    if (!stable_value) return false;
    for (std::size_t t = 0; t < values.size(); ++t)
      if (values[t] != std::min(count_monomials(static_cast<unsigned>(t)), *stable_value)) return false;
    return true;
  }
};

// Values up to at least `through`. Standard monomial counts agree with the
// Hilbert polynomial of the initial ideal from degree 3*D on (D the largest
// basis degree: every lcm of leading monomials has degree at most 3*D), so
// comparing degrees 3D and 3D+1 decides stabilization.
inline HilbertProfile hilbert_profile(const Ideal& I, unsigned through = 0) {
  const unsigned D = I.max_basis_degree();
  const unsigned last = std::max(through, 3 * D + 1);
  HilbertProfile p;
  for (unsigned t = 0; t <= last; ++t) p.values.push_back(hilbert_function(I, t));
  if (p.values[3 * D] == p.values[3 * D + 1]) {
    p.stable_value = p.values[last];
    unsigned s = last;
    while (s > 0 && p.values[s - 1] == *p.stable_value) --s;
    p.stabilized_at = s;
  }
  return p;
}

inline unsigned alpha(const Ideal& I) {
  unsigned a = ~0u;
  for (const auto& g : I.groebner_basis()) a = std::min(a, g.degree());
  return a;
}

// Degree -> number of minimal generators: dim I_j - dim (R_1 I_{j-1})_j.
inline std::map<unsigned, std::size_t> minimal_generator_degrees(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  const auto& field = I.ring()->field();
  std::map<unsigned, std::size_t> out;
  const unsigned lo = alpha(I), hi = I.max_basis_degree();
  for (unsigned j = lo; j <= hi; ++j) {
    const std::size_t dim_j = count_monomials(j) - hilbert_function(I, j);
    Matrix m(0, count_monomials(j));
    for (const auto& g : gb) {
      if (g.degree() >= j) continue;
      for (Monomial u : plane_monomials(j - g.degree()))
        m.append_row(coefficient_vector(g.times_monomial(u), j));
    }
    const std::size_t below = m.rows() ? rank(std::move(m), field) : 0;
    if (dim_j > below) out[j] = dim_j - below;
  }
  return out;
}

inline std::size_t generator_count(const std::map<unsigned, std::size_t>& degrees) {
  std::size_t n = 0;
  for (const auto& [deg, c] : degrees) n += c;
  return n;
}

// Stable value of the Hilbert function of a zero-dimensional scheme.
inline std::size_t multiplicity(const Ideal& I) {
  const auto p = hilbert_profile(I);
  if (!p.stable_value)
    throw std::domain_error("Hilbert function does not stabilize: not a zero-dimensional scheme");
  return *p.stable_value;
}

struct BettiTable {
  // (i, j) -> beta_{i,j}(I); i is the homological index of the resolution of I.
  std::map<std::pair<unsigned, unsigned>, std::size_t> entries;
  unsigned truncation_degree = 0;
  bool complete = false;
  // Hilbert function of R/I on 0..truncation_degree, kept for consistency checks.
  std::vector<std::size_t> hilbert;

  std::size_t at(unsigned i, unsigned j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  int regularity() const {
    int r = -1;
    for (const auto& [key, b] : entries) r = std::max(r, int(key.second) - int(key.first));
    return r;
  }
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }
};

namespace detail {

// Graded pieces of R/I with multiplication-by-variable maps in the standard
// monomial bases.
class QuotientSlices {
 public:
  explicit QuotientSlices(const Ideal& I) : ideal_(I), reducers_(basis_pointers(I)) {}

  const std::vector<Monomial>& basis(unsigned s) {
    ensure(s);
    return bases_[s];
  }
  std::size_t dim(unsigned s) { return basis(s).size(); }

  // Matrix of x_k : (R/I)_s -> (R/I)_{s+1}; column c is the image of the
  // c-th basis monomial of degree s.
  const Matrix& multiplication(int k, unsigned s) {
    ensure(s + 1);
    if (mult_.size() <= s) mult_.resize(s + 1);
    auto& slot = mult_[s];
    if (slot.empty()) {
      const auto& src = bases_[s];
      const auto& dst = bases_[s + 1];
      const std::size_t span = count_monomials(s + 1);
      std::vector<long> position(span, -1);
      for (std::size_t r = 0; r < dst.size(); ++r) position[plane_index(dst[r])] = long(r);
      for (int v = 0; v < 3; ++v) {
        Matrix m(dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
          const Monomial u = src[c] * Monomial::variable(v);
          if (position[plane_index(u)] >= 0) {
            m(position[plane_index(u)], c) = 1;
            continue;
          }
          const Polynomial nf =
              reduce_homogeneous(Polynomial::monomial(ideal_.ring(), u), reducers_);
          for (const auto& t : nf.terms()) m(position[plane_index(t.mono)], c) = t.coeff;
        }
        slot.push_back(std::move(m));
      }
    }
    return slot[k];
  }

 private:
  void ensure(unsigned s) {
    while (bases_.size() <= s) bases_.push_back(standard_monomials(ideal_, unsigned(bases_.size())));
  }

  Ideal ideal_;
  std::vector<const Polynomial*> reducers_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::vector<Matrix>> mult_;
};

// Writes x_k * (block) into rows [row0, ...) and columns [col0, ...) of m,
// scaled by sign.
inline void place_block(Matrix& m, std::size_t row0, std::size_t col0, const Matrix& block,
                        bool negate, const PrimeField& f) {
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) {
      const Coeff v = block(r, c);
      if (v) m(row0 + r, col0 + c) = negate ? f.neg(v) : v;
    }
}

}  // namespace detail

// Graded Betti numbers of I from the Koszul homology of R/I, one internal
// degree at a time: K_i in degree j is wedge^i(R_1) (x) (R/I)_{j-i}.
inline BettiTable graded_betti(const Ideal& I, unsigned degree_bound, const Deadline& deadline = {}) {
  const auto& field = I.ring()->field();
  detail::QuotientSlices Q(I);
  BettiTable table;
  table.truncation_degree = degree_bound;
  std::vector<std::array<std::size_t, 4>> homology(degree_bound + 1);

  // Index pairs for wedge^2 in the order (0,1), (0,2), (1,2).
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};

  for (unsigned j = 0; j <= degree_bound; ++j) {
    deadline.check("Koszul homology");
    std::array<std::size_t, 4> dims{};
    for (unsigned i = 0; i <= 3; ++i) {
      const std::size_t wedge = (i == 0 || i == 3) ? 1 : 3;
      dims[i] = j >= i ? wedge * Q.dim(j - i) : 0;
    }
    std::array<std::size_t, 5> ranks{};  // ranks[i] = rank of d_i : K_i -> K_{i-1}
    if (j >= 1 && dims[1] && dims[0]) {
      const std::size_t h = Q.dim(j - 1);
      Matrix d1(dims[0], dims[1]);
      for (int k = 0; k < 3; ++k) detail::place_block(d1, 0, k * h, Q.multiplication(k, j - 1), false, field);
      ranks[1] = rank(std::move(d1), field);
    }
    if (j >= 2 && dims[2] && dims[1]) {
      const std::size_t h1 = Q.dim(j - 1), h2 = Q.dim(j - 2);
      Matrix d2(dims[1], dims[2]);
      // e_k ^ e_l  ->  x_k e_l - x_l e_k
      for (std::size_t p = 0; p < 3; ++p) {
        const auto [k, l] = pairs[p];
        detail::place_block(d2, l * h1, p * h2, Q.multiplication(k, j - 2), false, field);
        detail::place_block(d2, k * h1, p * h2, Q.multiplication(l, j - 2), true, field);
      }
      ranks[2] = rank(std::move(d2), field);
    }
    if (j >= 3 && dims[3] && dims[2]) {
      const std::size_t h2 = Q.dim(j - 2);
      Matrix d3(dims[2], dims[3]);
      // e_0 ^ e_1 ^ e_2  ->  x_0 e_12 - x_1 e_02 + x_2 e_01
      detail::place_block(d3, 2 * h2, 0, Q.multiplication(0, j - 3), false, field);
      detail::place_block(d3, 1 * h2, 0, Q.multiplication(1, j - 3), true, field);
      detail::place_block(d3, 0 * h2, 0, Q.multiplication(2, j - 3), false, field);
      ranks[3] = rank(std::move(d3), field);
    }
    for (unsigned i = 0; i <= 3; ++i) homology[j][i] = dims[i] - ranks[i] - ranks[i + 1];
    table.hilbert.push_back(Q.dim(j));
    // beta_{i,j}(I) = beta_{i+1,j}(R/I)
    for (unsigned i = 1; i <= 3; ++i)
      if (homology[j][i]) table.entries[{i - 1, j}] = homology[j][i];
  }

  auto zero_at = [&](unsigned j) {
    for (unsigned i = 1; i <= 3; ++i)
      if (homology[j][i]) return false;
    return true;
  };
  const unsigned need = I.max_basis_degree() + 2;
  table.complete = degree_bound >= need && degree_bound >= 1 && zero_at(degree_bound) &&
                   zero_at(degree_bound - 1);
  return table;
}

// Checks sum_j sum_i (-1)^i beta_{i,j}(R/I) t^j == (1-t)^3 * sum_t H(R/I,t) t^t
// through the truncation degree.
inline bool betti_hilbert_consistent(const BettiTable& b) {
  const unsigned D = b.truncation_degree;
  for (unsigned j = 0; j <= D; ++j) {
    long lhs = j == 0 ? 1 : 0;  // beta_{0,0}(R/I)
    for (unsigned i = 0; i <= 2; ++i) {
      const long sign = (i % 2 == 0) ? -1 : 1;  // homological index i+1 for R/I
      lhs += sign * long(b.at(i, j));
    }
    static constexpr long kCube[4] = {1, -3, 3, -1};
    long rhs = 0;
    for (unsigned k = 0; k <= 3 && k <= j; ++k) rhs += kCube[k] * long(b.hilbert[j - k]);
    if (lhs != rhs) return false;
  }
  return true;
}

struct RegularityResult {
  int regularity = -1;
  BettiTable betti;
};

// Regularity with the degree bound raised until the Betti table certifies
// itself complete.
inline RegularityResult regularity_with_table(const Ideal& I, unsigned start_bound = 0,
                                              unsigned max_bound = 0, const Deadline& deadline = {}) {
  const unsigned D = I.max_basis_degree();
  unsigned bound = std::max(start_bound, D + 2);
  if (max_bound == 0) max_bound = 3 * D + 4;
  for (;;) {
    BettiTable t = graded_betti(I, bound, deadline);
    if (t.complete) return {t.regularity(), std::move(t)};
    if (bound >= max_bound)
      throw BudgetExhausted("Betti table not certified complete up to degree " + std::to_string(bound));
    bound = std::min(max_bound, bound + 2);
  }
}

inline int regularity(const Ideal& I) { return regularity_with_table(I).regularity; }

struct InvariantReport {
  unsigned alpha = 0;
  int regularity = -1;
  std::map<unsigned, std::size_t> minimal_generator_degrees;
  std::optional<std::size_t> multiplicity;
  HilbertProfile hilbert;
  BettiTable betti;
};

// For an ideal of reduced points, reg(I) equals one more than the degree at
// which the Hilbert function reaches the number of points.
inline InvariantReport compute_invariants(const Ideal& I, bool reduced_points, unsigned degree_bound = 0,
                                          const Deadline& deadline = {}) {
  InvariantReport r;
  I.groebner_basis(deadline);
  r.alpha = alpha(I);
  r.minimal_generator_degrees = minimal_generator_degrees(I);
  auto reg = regularity_with_table(I, degree_bound, std::max(degree_bound, 3 * I.max_basis_degree() + 4), deadline);
  r.regularity = reg.regularity;
  r.betti = std::move(reg.betti);
  r.hilbert = hilbert_profile(I, r.betti.truncation_degree);
  r.multiplicity = r.hilbert.stable_value;
  if (reduced_points && r.hilbert.stabilized_at &&
      r.regularity != int(*r.hilbert.stabilized_at) + 1)
    throw std::logic_error("regularity disagrees with Hilbert stabilization");
  return r;
}

// Conventional Betti diagram: rows j - i, columns i.
inline std::string betti_diagram(const BettiTable& b) {
  if (b.entries.empty()) return "(zero table)\n";
  unsigned top_row = 0, bottom_row = ~0u, max_i = 0;
  for (const auto& [key, v] : b.entries) {
    const unsigned row = key.second - key.first;
    top_row = std::max(top_row, row);
    bottom_row = std::min(bottom_row, row);
    max_i = std::max(max_i, key.first);
  }
  std::size_t width = 6;
  for (const auto& [key, v] : b.entries) width = std::max(width, std::to_string(v).size() + 1);
  std::ostringstream os;
  auto pad = [&](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };
  os << pad("") << ' ';
  for (unsigned i = 0; i <= max_i; ++i) os << pad(std::to_string(i));
  os << '\n' << pad("total:") << ' ';
  for (unsigned i = 0; i <= max_i; ++i) {
    std::size_t s = 0;
    for (const auto& [key, v] : b.entries)
      if (key.first == i) s += v;
    os << pad(std::to_string(s));
  }
  os << '\n';
  for (unsigned row = bottom_row; row <= top_row; ++row) {
    os << pad(std::to_string(row) + ":") << ' ';
    for (unsigned i = 0; i <= max_i; ++i) {
      const std::size_t v = b.at(i, row + i);
      os << pad(v ? std::to_string(v) : "-");
    }
    os << '\n';
  }
  return os.str();
}

// Ideal of a configuration as the folded intersection of point ideal powers.
inline Ideal configuration_ideal(const Configuration& cfg, unsigned m = 1, const Deadline& deadline = {}) {
  std::optional<Ideal> acc;
  for (const auto& p : cfg.points) {
    const unsigned k = m * p.multiplicity;
    Ideal P = point_ideal(p.point, cfg.ring);
    if (k > 1) P = ideal_power(P, k);
    acc = acc ? ideal_intersection(*acc, P, deadline) : P;
  }
  if (!acc) throw std::invalid_argument("empty configuration");
  return *acc;
}

struct EquivalenceReport {
  unsigned alpha = 0;
  std::array<bool, 7> conditions{};
  std::array<std::string, 7> details;
  bool consistent() const {
    for (bool c : conditions)
      if (c != conditions[0]) return false;
    return true;
  }
  bool falsification() const { return !consistent(); }
};

inline bool has_linear_shape(const BettiTable& b, const std::map<std::pair<unsigned, unsigned>, std::size_t>& expect) {
  return b.complete && b.entries == expect;
}

// Evaluates each of the seven conditions on its own.
inline EquivalenceReport verify_equivalences(const Configuration& cfg, const Deadline& deadline = {}) {
  if (!cfg.is_reduced()) throw std::invalid_argument("equivalences apply to reduced points");
  EquivalenceReport rep;
  const Ideal I = configuration_ideal(cfg, 1, deadline);
  const unsigned a = alpha(I);
  rep.alpha = a;
  const auto gens = minimal_generator_degrees(I);
  auto describe = [](const std::map<unsigned, std::size_t>& g) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, c] : g) {
      os << (first ? "" : ", ") << c << " in degree " << deg;
      first = false;
    }
    return os.str();
  };

  rep.conditions[0] = gens == std::map<unsigned, std::size_t>{{a, a + 1}};
  rep.details[0] = "minimal generators: " + describe(gens);

  const auto profile = hilbert_profile(I);
  const std::size_t n = cfg.size();
  rep.conditions[1] = profile.is_generic() && profile.stable_value == n && n == binomial2(a + 1);
  rep.details[1] = std::string("generic Hilbert function: ") + (profile.is_generic() ? "yes" : "no") +
                   ", |X| = " + std::to_string(n) + ", binom(alpha+1,2) = " + std::to_string(binomial2(a + 1));

  const auto reg1 = regularity_with_table(I, 0, 0, deadline);
  rep.conditions[2] = has_linear_shape(reg1.betti, {{{0, a}, a + 1}, {{1, a + 1}, a}});
  rep.details[2] = "reg = " + std::to_string(reg1.regularity) + ", table entries " +
                   std::to_string(reg1.betti.entries.size());

  rep.conditions[3] = reg1.regularity == int(a);
  rep.details[3] = "reg(I) = " + std::to_string(reg1.regularity) + ", alpha = " + std::to_string(a);

  bool powers_ok = true;
  std::string power_text;
  std::optional<RegularityResult> square;
  std::optional<Ideal> I2;
  for (unsigned m = 1; m <= 3; ++m) {
    const Ideal Im = m == 1 ? I : ideal_power(I, m);
    const auto r = m == 1 ? reg1 : regularity_with_table(Im, 0, 0, deadline);
    powers_ok = powers_ok && r.regularity == int(m * a);
    power_text += (m > 1 ? ", " : "") + std::string("reg(I^") + std::to_string(m) + ") = " +
                  std::to_string(r.regularity);
    if (m == 2) {
      square = r;
      I2 = Im;
    }
  }
  rep.conditions[4] = powers_ok;
  rep.details[4] = power_text + " (checked for m <= 3)";

  const auto gens2 = minimal_generator_degrees(*I2);
  rep.conditions[5] = gens2 == std::map<unsigned, std::size_t>{{2 * a, binomial2(a + 2)}};
  rep.details[5] = "minimal generators of I^2: " + describe(gens2);

  std::map<std::pair<unsigned, unsigned>, std::size_t> shape2{{{0, 2 * a}, binomial2(a + 2)},
                                                               {{1, 2 * a + 1}, 2 * binomial2(a + 1)}};
  if (binomial2(a)) shape2[{2, 2 * a + 2}] = binomial2(a);
  rep.conditions[6] = has_linear_shape(square->betti, shape2);
  rep.details[6] = "I^2 table entries " + std::to_string(square->betti.entries.size());
  return rep;
}

}  // namespace starconf
