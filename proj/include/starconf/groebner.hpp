#pragma once

#include "starconf/linalg.hpp"
#include "starconf/polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace starconf {

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Optional wall-clock limit threaded through long computations.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after_seconds(double seconds) {
    Deadline d;
    if (seconds > 0)
      d.when_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(seconds));
    return d;
  }
  bool expired() const { return when_ && std::chrono::steady_clock::now() > *when_; }
  void check(const char* what) const {
    if (expired()) throw BudgetExhausted(std::string("time budget exhausted during ") + what);
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> when_;
};

namespace detail {

// Dense workspace for one x-homogeneous degree: slot (t, k) holds the
// coefficient of t^t times the k-th plane monomial of that degree.
class DenseSlice {
 public:
  DenseSlice(unsigned degree, unsigned tmax)
      : degree_(degree), tmax_(tmax), width_(count_monomials(degree)),
        data_((tmax + 1) * width_, 0) {}

  unsigned degree() const { return degree_; }

  Coeff& at(Monomial m) { return data_[m.t_degree() * width_ + plane_index(m)]; }

  void add(const Polynomial& f, Monomial shift, Coeff scale, const PrimeField& field) {
    for (const auto& t : f.terms()) {
      Coeff& slot = at(t.mono * shift);
      slot = field.add(slot, field.mul(t.coeff, scale));
    }
  }

  // Visits slots in decreasing monomial order (t-degree first, then grevlex).
  template <typename Fn>
  void for_each_descending(Fn&& fn) {
    const auto& table = monomial_table(degree_);
    for (unsigned t = tmax_ + 1; t-- > 0;) {
      const Monomial tpow(0, 0, 0, t);
      Coeff* row = data_.data() + t * width_;
      for (std::size_t k = 0; k < width_; ++k)
        if (row[k] != 0) fn(table[k] * tpow, row[k]);
    }
  }

 private:
  unsigned degree_;
  unsigned tmax_;
  std::size_t width_;
  std::vector<Coeff> data_;
};

// Fully reduces the contents of `slice` by monic reducers.
inline Polynomial reduce_slice(const RingPtr& ring, DenseSlice& slice,
                               const std::vector<const Polynomial*>& reducers) {
  const auto& field = ring->field();
  std::vector<Term> remainder;
  slice.for_each_descending([&](Monomial m, Coeff& c) {
    for (const Polynomial* g : reducers) {
      const Monomial lead = g->leading_monomial();
      if (!lead.divides(m)) continue;
      const Monomial q = m / lead;
      const Coeff factor = field.neg(c);
      const auto& terms = g->terms();
      for (std::size_t i = 1; i < terms.size(); ++i) {
        Coeff& slot = slice.at(terms[i].mono * q);
        slot = field.add(slot, field.mul(factor, terms[i].coeff));
      }
      c = 0;
      return;
    }
    remainder.push_back({m, c});
    c = 0;
  });
  return Polynomial::from_sorted(ring, std::move(remainder));
}

inline Polynomial reduce_homogeneous(const Polynomial& f,
                                     const std::vector<const Polynomial*>& reducers) {
  if (f.is_zero()) return f;
  DenseSlice slice(f.leading_monomial().x_degree(), f.max_t_degree());
  slice.add(f, Monomial{}, 1, f.ring()->field());
  return reduce_slice(f.ring(), slice, reducers);
}

inline Polynomial reduce_any(const Polynomial& f, const std::vector<const Polynomial*>& reducers) {
  if (f.is_homogeneous()) return reduce_homogeneous(f, reducers);
  Polynomial out(f.ring());
  for (const auto& part : f.homogeneous_components())
    out = poly_add(out, reduce_homogeneous(part, reducers));
  return out;
}

}  // namespace detail

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const auto& field = f.ring()->field();
  const Polynomial a = f.times_monomial(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  const Polynomial b = g.times_monomial(l / g.leading_monomial(), field.inv(g.leading_coeff()));
  return poly_sub(a, b);
}

// Buchberger's algorithm for x-homogeneous input. Pairs are processed in
// order of increasing sugar (the x-degree of their lcm, which coincides with
// the sugar for homogeneous input); useless pairs are discarded with the
// Gebauer-Moeller installation of both Buchberger criteria. Returns the
// reduced Groebner basis sorted by increasing leading monomial.
class GroebnerEngine {
 public:
  explicit GroebnerEngine(RingPtr ring, Deadline deadline = {})
      : ring_(std::move(ring)), deadline_(deadline) {}

  std::vector<Polynomial> run(std::vector<Polynomial> input) {
    for (auto& g : input) {
      if (g.is_zero()) continue;
      if (!g.is_homogeneous())
        throw std::invalid_argument("Groebner input must be homogeneous: " + to_string(g));
      queue_.push_back(g.monic());
    }
    std::stable_sort(queue_.begin(), queue_.end(), [](const Polynomial& a, const Polynomial& b) {
      return a.degree() < b.degree();
    });
    std::size_t next_input = 0;
    while (next_input < queue_.size() || !pairs_.empty()) {
      deadline_.check("Groebner basis computation");
      const std::size_t best = select_pair();
      const bool take_input =
          next_input < queue_.size() &&
          (best == pairs_.size() || queue_[next_input].degree() <= pairs_[best].sugar);
      Polynomial h(ring_);
      if (take_input) {
        h = detail::reduce_homogeneous(queue_[next_input++], active_reducers());
      } else {
        const Pair p = pairs_[best];
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
        h = reduce_pair(p);
      }
      if (!h.is_zero()) install(h.monic());
    }
    return finalize();
  }

  std::size_t pairs_reduced() const { return pairs_reduced_; }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
    std::uint64_t key;
  };

  std::size_t select_pair() const {
    std::size_t best = pairs_.size();
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (best == pairs_.size()) {
        best = k;
        continue;
      }
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar ? a.sugar < b.sugar
                             : (a.key != b.key ? a.key < b.key
                                               : (a.i != b.i ? a.i < b.i : a.j < b.j)))
        best = k;
    }
    return best;
  }

  std::vector<const Polynomial*> active_reducers() const {
    std::vector<const Polynomial*> r;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) r.push_back(&basis_[k]);
    return r;
  }

  Polynomial reduce_pair(const Pair& p) {
    ++pairs_reduced_;
    const Polynomial& f = basis_[p.i];
    const Polynomial& g = basis_[p.j];
    const Monomial qf = p.lcm / f.leading_monomial();
    const Monomial qg = p.lcm / g.leading_monomial();
    const unsigned tmax =
        std::max(f.max_t_degree() + qf.t_degree(), g.max_t_degree() + qg.t_degree());
    detail::DenseSlice slice(p.lcm.x_degree(), tmax);
    const auto& field = ring_->field();
    slice.add(f, qf, 1, field);
    slice.add(g, qg, field.neg(1), field);
    return detail::reduce_slice(ring_, slice, active_reducers());
  }

  Pair make_pair(std::size_t i, std::size_t j) const {
    const Monomial l = lcm(basis_[i].leading_monomial(), basis_[j].leading_monomial());
    return {i, j, l, l.x_degree(), order_key(l, ring_->order())};
  }

  // Gebauer-Moeller update for a new basis element h.
  void install(Polynomial h) {
    const std::size_t hi = basis_.size();
    const Monomial lh = h.leading_monomial();
    basis_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) candidates.push_back(make_pair(g, hi));

    std::vector<bool> kept(candidates.size(), false), consumed(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      consumed[a] = true;
      const Monomial lg = basis_[candidates[a].i].leading_monomial();
      bool keep = lh.coprime(lg);
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < candidates.size() && keep; ++b) {
          if (b == a || (consumed[b] && !kept[b])) continue;
          if (candidates[b].lcm.divides(candidates[a].lcm)) keep = false;
        }
      }
      kept[a] = keep;
    }

    std::vector<Pair> survivors;
    for (const Pair& p : pairs_) {
      const Monomial l_ih = lcm(basis_[p.i].leading_monomial(), lh);
      const Monomial l_jh = lcm(basis_[p.j].leading_monomial(), lh);
      if (!lh.divides(p.lcm) || l_ih == p.lcm || l_jh == p.lcm) survivors.push_back(p);
    }
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Monomial lg = basis_[candidates[a].i].leading_monomial();
      if (kept[a] && !lh.coprime(lg)) survivors.push_back(candidates[a]);
    }
    pairs_ = std::move(survivors);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
  }

  std::vector<Polynomial> finalize() {
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) members.push_back(k);
    std::vector<Polynomial> reduced;
    reduced.reserve(members.size());
    for (std::size_t k : members) {
      std::vector<const Polynomial*> others;
      for (std::size_t o : members)
        if (o != k) others.push_back(&basis_[o]);
      reduced.push_back(detail::reduce_homogeneous(basis_[k], others).monic());
    }
    const auto order = ring_->order();
    std::sort(reduced.begin(), reduced.end(), [order](const Polynomial& a, const Polynomial& b) {
      return order_key(a.leading_monomial(), order) < order_key(b.leading_monomial(), order);
    });
    return reduced;
  }

  RingPtr ring_;
  Deadline deadline_;
  std::vector<Polynomial> queue_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t pairs_reduced_ = 0;
};

inline std::vector<Polynomial> groebner_basis(const RingPtr& ring, std::vector<Polynomial> gens,
                                              const Deadline& deadline = {}) {
  return GroebnerEngine(ring, deadline).run(std::move(gens));
}

// Homogeneous ideal with a write-once cache of its reduced Groebner basis.
// Copies share the cache.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators)
      : ring_(std::move(ring)), generators_(std::move(generators)),
        cache_(std::make_shared<Cache>()) {
    if (generators_.empty()) throw std::invalid_argument("ideal needs at least one generator");
    for (const auto& g : generators_) {
      if (g.is_zero()) throw std::invalid_argument("zero generator");
      if (g.ring() && !(*g.ring() == *ring_)) throw RingMismatch();
      if (!g.is_homogeneous()) throw std::invalid_argument("generator not homogeneous");
      if (g.degree() == 0) throw std::invalid_argument("unit ideals are out of scope");
    }
  }

  // Trusted constructor for a list already known to be a reduced basis.
  static Ideal from_reduced_basis(RingPtr ring, std::vector<Polynomial> basis) {
    Ideal I(std::move(ring), basis);
    std::call_once(I.cache_->once, [&] {
      I.cache_->basis = std::move(basis);
      I.cache_->ready.store(true);
    });
    return I;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  const std::vector<Polynomial>& groebner_basis(const Deadline& deadline = {}) const {
    std::call_once(cache_->once, [&] {
      cache_->basis = starconf::groebner_basis(ring_, generators_, deadline);
      cache_->ready.store(true);
    });
    return cache_->basis;
  }

  bool has_groebner_basis() const { return cache_->ready.load(); }

  unsigned max_basis_degree() const {
    unsigned d = 0;
    for (const auto& g : groebner_basis()) d = std::max(d, g.degree());
    return d;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
    std::atomic<bool> ready{false};
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

inline void require_same_ring(const Ideal& I, const Ideal& J) {
  if (!(*I.ring() == *J.ring())) throw RingMismatch();
}

inline std::vector<const Polynomial*> basis_pointers(const Ideal& I) {
  std::vector<const Polynomial*> out;
  for (const auto& g : I.groebner_basis()) out.push_back(&g);
  return out;
}

// Remainder of f modulo the reduced basis of I; zero iff f lies in I.
inline Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  if (f.ring() && !(*f.ring() == *I.ring())) throw RingMismatch();
  return detail::reduce_any(f, basis_pointers(I));
}

inline bool contains(const Ideal& I, const Polynomial& f) { return normal_form(f, I).is_zero(); }

inline bool same_ideal(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  return I.groebner_basis() == J.groebner_basis();
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

// Coefficients of a degree-D plane form in the dense grevlex basis.
inline std::vector<Coeff> coefficient_vector(const Polynomial& f, unsigned degree) {
  std::vector<Coeff> v(count_monomials(degree), 0);
  for (const auto& t : f.terms()) v[plane_index(t.mono)] = t.coeff;
  return v;
}

// Drops every generator that lies in the ideal of the ones kept before it
// (processing degree by degree), leaving a minimal generating set.
inline std::vector<Polynomial> minimal_generating_subset(const RingPtr& ring,
                                                         std::vector<Polynomial> gens) {
  if (ring->order() != MonomialOrder::GRevLex)
    throw std::invalid_argument("minimal generators are computed in the plane ring");
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Polynomial> kept;
  std::size_t k = 0;
  while (k < gens.size()) {
    const unsigned degree = gens[k].degree();
    RowSpace space(count_monomials(degree), ring->field());
    for (const auto& g : kept)
      for (Monomial m : plane_monomials(degree - g.degree()))
        space.insert(coefficient_vector(g.times_monomial(m), degree));
    for (; k < gens.size() && gens[k].degree() == degree; ++k)
      if (space.insert(coefficient_vector(gens[k], degree))) kept.push_back(gens[k].monic());
  }
  return kept;
}

inline Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<Polynomial> prods;
  prods.reserve(I.generators().size() * J.generators().size());
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) prods.push_back(poly_mul(f, g));
  return Ideal(I.ring(), minimal_generating_subset(I.ring(), std::move(prods)));
}

inline Ideal ideal_power(const Ideal& I, unsigned m) {
  if (m == 0) throw std::invalid_argument("ideal_power needs m >= 1");
  Ideal result(I.ring(), minimal_generating_subset(I.ring(), I.generators()));
  const Ideal base = result;
  for (unsigned k = 1; k < m; ++k) result = ideal_product(result, base);
  return result;
}

// I ∩ J by eliminating t from t*I + (1 - t)*J.
inline Ideal ideal_intersection(const Ideal& I, const Ideal& J, const Deadline& deadline = {}) {
  require_same_ring(I, J);
  if (I.ring()->order() != MonomialOrder::GRevLex)
    throw std::invalid_argument("intersection operates on plane ideals");
  const RingPtr ext = make_elimination_ring(*I.ring());
  auto lift = [&](const Polynomial& f) { return Polynomial::from_sorted(ext, f.terms()); };
  const Monomial t(0, 0, 0, 1);
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(lift(f).times_monomial(t));
  for (const auto& g : J.generators()) {
    const Polynomial lg = lift(g);
    gens.push_back(poly_sub(lg, lg.times_monomial(t)));
  }
  const auto basis = starconf::groebner_basis(ext, std::move(gens), deadline);
  std::vector<Polynomial> eliminated;
  for (const auto& g : basis) {
    if (g.max_t_degree() != 0) continue;
    // Within the t-free part the block order restricts to grevlex, so the
    // term sequence is already sorted for the plane ring.
    eliminated.push_back(Polynomial::from_sorted(I.ring(), g.terms()));
  }
  return Ideal::from_reduced_basis(I.ring(), std::move(eliminated));
}

struct SubidealResult {
  bool holds = true;
  std::optional<Polynomial> witness;
};

// Tests I ⊆ J generator by generator.
inline SubidealResult is_subideal(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  for (const auto& g : I.generators())
    if (!normal_form(g, J).is_zero()) return {false, g};
  return {true, std::nullopt};
}

}  // namespace starconf
