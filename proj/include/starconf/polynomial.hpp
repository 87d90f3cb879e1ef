#pragma once

#include "starconf/field.hpp"
#include "starconf/monomial.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starconf {

class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("operands live in different rings") {}
};

// Coordinate ring context: the plane ring F_p[x0,x1,x2] under grevlex, or
// its extension F_p[x0,x1,x2,t] under the t-eliminating block order.
class Ring {
 public:
  explicit Ring(std::uint64_t prime = PrimeField::kDefaultPrime,
                MonomialOrder order = MonomialOrder::GRevLex)
      : field_(prime), order_(order) {}

  const PrimeField& field() const { return field_; }
  std::uint64_t prime() const { return field_.modulus(); }
  MonomialOrder order() const { return order_; }
  int num_vars() const { return order_ == MonomialOrder::GRevLex ? 3 : 4; }

  static std::string variable_name(int i) { return i == kElimVar ? "t" : "x" + std::to_string(i); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field_ == b.field_ && a.order_ == b.order_;
  }

 private:
  PrimeField field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::uint64_t prime = PrimeField::kDefaultPrime) {
  return std::make_shared<const Ring>(prime, MonomialOrder::GRevLex);
}

inline RingPtr make_elimination_ring(const Ring& base) {
  return std::make_shared<const Ring>(base.prime(), MonomialOrder::Elimination);
}

struct Term {
  Monomial mono;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {

// Plane monomials of degree D in decreasing grevlex order, cached per thread.
inline const std::vector<Monomial>& monomial_table(unsigned degree) {
  thread_local std::vector<std::vector<Monomial>> tables;
  if (tables.size() <= degree) tables.resize(degree + 1);
  auto& table = tables[degree];
  if (table.empty()) table = plane_monomials(degree);
  return table;
}

}  // namespace detail

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  // Terms in any order; equal monomials are combined and zeros dropped.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    const auto order = ring->order();
    const auto& f = ring->field();
    for (auto& t : terms) t.coeff = f.reduce(t.coeff);
    std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
      return order_key(a.mono, order) > order_key(b.mono, order);
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = f.add(out.back().coeff, t.coeff);
      else
        out.push_back(t);
      if (out.back().coeff == 0) out.pop_back();
    }
    Polynomial p(std::move(ring));
    p.terms_ = std::move(out);
    return p;
  }

  // Caller guarantees strictly decreasing monomials and nonzero coefficients.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial monomial(RingPtr ring, Monomial m, Coeff c = 1) {
    Polynomial p(ring);
    c = ring->field().reduce(c);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  static Polynomial variable(RingPtr ring, int i) {
    return monomial(std::move(ring), Monomial::variable(i));
  }

  static Polynomial constant(RingPtr ring, Coeff c) {
    return monomial(std::move(ring), Monomial{}, c);
  }

  // a*x0 + b*x1 + c*x2
  static Polynomial linear(RingPtr ring, const std::array<Coeff, 3>& coeffs) {
    std::vector<Term> terms;
    for (int i = 0; i < 3; ++i)
      if (coeffs[i] % ring->prime() != 0) terms.push_back({Monomial::variable(i), coeffs[i]});
    return from_terms(std::move(ring), std::move(terms));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const { return terms_.front(); }
  Monomial leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  // Largest x-degree of a term (the elimination variable has weight 0).
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.x_degree());
    return d;
  }

  unsigned max_t_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.t_degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.x_degree() != terms_.front().mono.x_degree()) return false;
    return true;
  }

  Coeff coefficient(Monomial m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return 0;
  }

  Polynomial scaled(Coeff c) const {
    const auto& f = ring_->field();
    c = f.reduce(c);
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, f.mul(t.coeff, c)});
    return r;
  }

  Polynomial times_monomial(Monomial m, Coeff c = 1) const {
    Polynomial r = scaled(c);
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }

  Polynomial monic() const {
    if (is_zero() || leading_coeff() == 1) return *this;
    return scaled(ring_->field().inv(leading_coeff()));
  }

  Polynomial operator-() const { return scaled(ring_->field().modulus() - 1); }

  // Homogeneous components keyed by x-degree, in increasing degree.
  std::vector<Polynomial> homogeneous_components() const {
    std::vector<Polynomial> parts;
    std::vector<std::vector<Term>> buckets(degree() + 1);
    for (const auto& t : terms_) buckets[t.mono.x_degree()].push_back(t);
    for (auto& b : buckets)
      if (!b.empty()) parts.push_back(from_sorted(ring_, std::move(b)));
    return parts;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

inline void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring() && !(*a.ring() == *b.ring()))
    throw RingMismatch();
}

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring() ? a.ring() : b.ring();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto order = ring->order();
  const auto& f = ring->field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin(), j = b.terms().begin();
  while (i != a.terms().end() && j != b.terms().end()) {
    const auto ki = order_key(i->mono, order), kj = order_key(j->mono, order);
    if (ki > kj) {
      out.push_back(*i++);
    } else if (kj > ki) {
      out.push_back(*j++);
    } else {
      const Coeff c = f.add(i->coeff, j->coeff);
      if (c != 0) out.push_back({i->mono, c});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, a.terms().end());
  out.insert(out.end(), j, b.terms().end());
  return Polynomial::from_sorted(ring, std::move(out));
}

inline Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) return a;
  return poly_add(a, -b);
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const RingPtr& ring = a.ring() ? a.ring() : b.ring();
  if (a.is_zero() || b.is_zero()) return Polynomial(ring);
  const auto& f = ring->field();
  if (!a.is_homogeneous() || !b.is_homogeneous()) {
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms())
      for (const auto& t : b.terms()) prod.push_back({s.mono * t.mono, f.mul(s.coeff, t.coeff)});
    return Polynomial::from_terms(ring, std::move(prod));
  }
  // Dense accumulation over (t-degree, plane monomial index) slots.
  const unsigned degree = a.leading_monomial().x_degree() + b.leading_monomial().x_degree();
  const unsigned tmax = a.max_t_degree() + b.max_t_degree();
  const std::size_t width = count_monomials(degree);
  std::vector<Coeff> acc((tmax + 1) * width, 0);
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      const Monomial m = s.mono * t.mono;
      Coeff& slot = acc[m.t_degree() * width + plane_index(m)];
      slot = f.add(slot, f.mul(s.coeff, t.coeff));
    }
  }
  const auto& table = detail::monomial_table(degree);
  std::vector<Term> out;
  for (unsigned tt = tmax + 1; tt-- > 0;) {
    const Monomial tpow(0, 0, 0, tt);
    for (std::size_t k = 0; k < width; ++k) {
      const Coeff c = acc[tt * width + k];
      if (c != 0) out.push_back({table[k] * tpow, c});
    }
  }
  return Polynomial::from_sorted(ring, std::move(out));
}

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return poly_add(a, b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return poly_sub(a, b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

inline Polynomial poly_pow(const Polynomial& base, unsigned k) {
  Polynomial result = Polynomial::constant(base.ring(), 1);
  Polynomial b = base;
  while (k) {
    if (k & 1) result = poly_mul(result, b);
    k >>= 1;
    if (k) b = poly_mul(b, b);
  }
  return result;
}

inline Polynomial product(const RingPtr& ring, const std::vector<Polynomial>& factors) {
  Polynomial result = Polynomial::constant(ring, 1);
  for (const auto& g : factors) result = poly_mul(result, g);
  return result;
}

// Value at an affine representative of a plane point.
inline Coeff evaluate(const Polynomial& f, std::span<const Coeff, 3> point) {
  if (f.is_zero()) return 0;
  const auto& field = f.ring()->field();
  const unsigned maxdeg = f.degree();
  std::array<std::vector<Coeff>, 3> powers;
  for (int i = 0; i < 3; ++i) {
    powers[i].resize(maxdeg + 1);
    powers[i][0] = 1;
    for (unsigned e = 1; e <= maxdeg; ++e) powers[i][e] = field.mul(powers[i][e - 1], point[i]);
  }
  Coeff acc = 0;
  for (const auto& t : f.terms()) {
    Coeff v = t.coeff;
    for (int i = 0; i < 3; ++i) v = field.mul(v, powers[i][t.mono.exponent(i)]);
    acc = field.add(acc, v);
  }
  return acc;
}

inline std::string to_string(Monomial m) {
  std::string out;
  for (int i = 0; i < kMaxVars; ++i) {
    const unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += Ring::variable_name(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

// Canonical text form: terms in decreasing monomial order, coefficients as
// residues, e.g. "3*x0^2*x1 + 1*x2^3".
inline std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff;
    if (!t.mono.is_one()) os << '*' << to_string(t.mono);
  }
  return os.str();
}

}  // namespace starconf
