#pragma once

#include "starconf/groebner.hpp"
#include "starconf/rng.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace starconf {

// Raised when seeded rejection sampling runs out of attempts; retry with a
// different seed.
class RejectionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Vec3 = std::array<Coeff, 3>;

inline Vec3 cross(const Vec3& a, const Vec3& b, const PrimeField& f) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
          f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

inline Coeff dot(const Vec3& a, const Vec3& b, const PrimeField& f) {
  return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

inline Coeff det3(const Vec3& a, const Vec3& b, const Vec3& c, const PrimeField& f) {
  return dot(a, cross(b, c, f), f);
}

inline bool is_zero_vec(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Scales so the first nonzero entry is 1.
inline Vec3 normalize(Vec3 v, const PrimeField& f) {
  for (int i = 0; i < 3; ++i) {
    if (v[i] == 0) continue;
    const Coeff inv = f.inv(v[i]);
    for (auto& x : v) x = f.mul(x, inv);
    return v;
  }
  throw std::invalid_argument("zero vector has no projective class");
}

// Point of P^2 with its first nonzero coordinate equal to 1.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  ProjectivePoint(const Vec3& coords, const PrimeField& f) : coords_(normalize(coords, f)) {}

  const Vec3& coords() const { return coords_; }
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  Vec3 coords_{1, 0, 0};
};

// Nonzero linear form a*x0 + b*x1 + c*x2, stored monic.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(const Vec3& coeffs, const PrimeField& f) : coeffs_(normalize(coeffs, f)) {}

  const Vec3& coeffs() const { return coeffs_; }
  Coeff at(const ProjectivePoint& p, const PrimeField& f) const { return dot(coeffs_, p.coords(), f); }
  bool vanishes_at(const ProjectivePoint& p, const PrimeField& f) const { return at(p, f) == 0; }
  Polynomial polynomial(const RingPtr& ring) const { return Polynomial::linear(ring, coeffs_); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  Vec3 coeffs_{1, 0, 0};
};

inline ProjectivePoint intersect_lines(const LinearForm& L, const LinearForm& M, const PrimeField& f) {
  const Vec3 p = cross(L.coeffs(), M.coeffs(), f);
  if (is_zero_vec(p)) throw std::invalid_argument("proportional lines have no unique intersection");
  return ProjectivePoint(p, f);
}

inline LinearForm line_through(const ProjectivePoint& p, const ProjectivePoint& q, const PrimeField& f) {
  const Vec3 l = cross(p.coords(), q.coords(), f);
  if (is_zero_vec(l)) throw std::invalid_argument("coincident points span no line");
  return LinearForm(l, f);
}

struct CertificateCheck {
  std::string description;
  bool pass = false;
};

struct GenericityCertificate {
  std::uint64_t seed = 0;
  std::vector<CertificateCheck> checks;
  // Observations recorded without affecting acceptance.
  std::vector<std::string> notes;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string description, bool pass) { checks.push_back({std::move(description), pass}); }
};

enum class ConfigKind { Star, QuasiStar, GenericPoints, Custom };

inline std::string to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::Star: return "star";
    case ConfigKind::QuasiStar: return "quasi-star";
    case ConfigKind::GenericPoints: return "generic";
    case ConfigKind::Custom: return "custom";
  }
  return "custom";
}

inline ConfigKind parse_config_kind(const std::string& s) {
  if (s == "star") return ConfigKind::Star;
  if (s == "quasi-star") return ConfigKind::QuasiStar;
  if (s == "generic") return ConfigKind::GenericPoints;
  if (s == "custom") return ConfigKind::Custom;
  throw std::invalid_argument("unknown configuration kind: " + s);
}

struct ConfigPoint {
  ProjectivePoint point;
  unsigned multiplicity = 1;
  std::string label;
};

// A labeled fat-point scheme in P^2 with the lines it was built from. For a
// quasi star configuration the star points come first (pairs i < j in
// lexicographic order) followed by q_1..q_d; `lines` holds L_1..L_d and
// `aux_lines` the lines L'_i through q_i.
struct Configuration {
  ConfigKind kind = ConfigKind::Custom;
  unsigned parameter = 0;  // d for star families, n for generic points
  std::uint64_t seed = 0;
  RingPtr ring;
  std::vector<ConfigPoint> points;
  std::vector<LinearForm> lines;
  std::vector<LinearForm> aux_lines;
  std::vector<std::size_t> extra_points;  // indices of q_i
  GenericityCertificate certificate;

  const PrimeField& field() const { return ring->field(); }
  std::size_t size() const { return points.size(); }
  bool is_reduced() const {
    for (const auto& p : points)
      if (p.multiplicity != 1) return false;
    return true;
  }
  // Degree of the scheme: sum of binom(m_i + 1, 2).
  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& p : points) d += std::size_t{p.multiplicity} * (p.multiplicity + 1) / 2;
    return d;
  }
  std::vector<ProjectivePoint> projective_points() const {
    std::vector<ProjectivePoint> out;
    for (const auto& p : points) out.push_back(p.point);
    return out;
  }
};

namespace detail {

inline Vec3 random_vector(CounterRng& rng, const PrimeField& f) {
  Vec3 v{};
  do {
    for (auto& x : v) x = rng.uniform(f.modulus());
  } while (is_zero_vec(v));
  return v;
}

// Seeded streams: one per sampled object kind and index.
enum Stream : std::uint64_t {
  kLineStream = 1,
  kExtraPointStream = 1000,
  kAuxLineStream = 2000,
  kGenericStream = 3000,
};

inline constexpr int kMaxAttempts = 10000;

}  // namespace detail

inline GenericityCertificate certify_general_lines(const std::vector<LinearForm>& lines,
                                                   const PrimeField& f) {
  GenericityCertificate cert;
  bool distinct = true, no_three = true;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (is_zero_vec(cross(lines[i].coeffs(), lines[j].coeffs(), f))) distinct = false;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      for (std::size_t k = j + 1; k < lines.size(); ++k)
        if (det3(lines[i].coeffs(), lines[j].coeffs(), lines[k].coeffs(), f) == 0) no_three = false;
  cert.add("lines pairwise distinct (pairwise intersections are points)", distinct);
  cert.add("no three lines concurrent (all triple determinants nonzero)", no_three);
  return cert;
}

struct GeneralLines {
  std::vector<LinearForm> lines;
  GenericityCertificate certificate;
};

inline GeneralLines make_general_lines(unsigned d, std::uint64_t seed, const PrimeField& f) {
  if (d < 3) throw std::invalid_argument("need at least 3 lines");
  CounterRng rng(seed, detail::kLineStream);
  std::vector<LinearForm> lines;
  while (lines.size() < d) {
    bool placed = false;
    for (int attempt = 0; attempt < detail::kMaxAttempts && !placed; ++attempt) {
      const LinearForm cand(detail::random_vector(rng, f), f);
      bool ok = true;
      for (std::size_t i = 0; i < lines.size() && ok; ++i) {
        if (is_zero_vec(cross(lines[i].coeffs(), cand.coeffs(), f))) ok = false;
        for (std::size_t j = i + 1; j < lines.size() && ok; ++j)
          if (det3(lines[i].coeffs(), lines[j].coeffs(), cand.coeffs(), f) == 0) ok = false;
      }
      if (ok) {
        lines.push_back(cand);
        placed = true;
      }
    }
    if (!placed) throw RejectionExhausted("could not place a general line; retry with another seed");
  }
  GeneralLines out{lines, certify_general_lines(lines, f)};
  out.certificate.seed = seed;
  if (!out.certificate.all_pass()) throw RejectionExhausted("general line certificate failed");
  return out;
}

inline Configuration star_configuration(unsigned d, std::uint64_t seed,
                                        std::uint64_t prime = PrimeField::kDefaultPrime) {
  Configuration cfg;
  cfg.kind = ConfigKind::Star;
  cfg.parameter = d;
  cfg.seed = seed;
  cfg.ring = make_ring(prime);
  const auto& f = cfg.field();
  auto general = make_general_lines(d, seed, f);
  cfg.lines = std::move(general.lines);
  cfg.certificate = std::move(general.certificate);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = i + 1; j < d; ++j)
      cfg.points.push_back({intersect_lines(cfg.lines[i], cfg.lines[j], f), 1,
                            "p_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)});
  bool two_lines_each = true;
  for (const auto& p : cfg.points) {
    int on = 0;
    for (const auto& L : cfg.lines) on += L.vanishes_at(p.point, f);
    two_lines_each = two_lines_each && on == 2;
  }
  bool distinct = true;
  for (std::size_t a = 0; a < cfg.points.size(); ++a)
    for (std::size_t b = a + 1; b < cfg.points.size(); ++b)
      if (cfg.points[a].point == cfg.points[b].point) distinct = false;
  cfg.certificate.add("each star point lies on exactly two lines", two_lines_each);
  cfg.certificate.add("star points pairwise distinct", distinct);
  if (!cfg.certificate.all_pass()) throw RejectionExhausted("star configuration certificate failed");
  return cfg;
}

// Lines L'_i through each q_i that miss every other point of the
// configuration.
inline std::vector<LinearForm> aux_lines(const Configuration& cfg) {
  if (cfg.kind != ConfigKind::QuasiStar) throw std::invalid_argument("aux_lines needs a quasi star configuration");
  const auto& f = cfg.field();
  std::vector<LinearForm> out;
  for (std::size_t i = 0; i < cfg.extra_points.size(); ++i) {
    const std::size_t qi = cfg.extra_points[i];
    const ProjectivePoint& q = cfg.points[qi].point;
    CounterRng rng(cfg.seed, detail::kAuxLineStream + i);
    bool placed = false;
    for (int attempt = 0; attempt < detail::kMaxAttempts && !placed; ++attempt) {
      const Vec3 l = cross(q.coords(), detail::random_vector(rng, f), f);
      if (is_zero_vec(l)) continue;
      const LinearForm cand(l, f);
      bool ok = true;
      for (std::size_t k = 0; k < cfg.points.size() && ok; ++k)
        if (k != qi && cand.vanishes_at(cfg.points[k].point, f)) ok = false;
      if (ok) {
        out.push_back(cand);
        placed = true;
      }
    }
    if (!placed) throw RejectionExhausted("could not place an auxiliary line; retry with another seed");
  }
  return out;
}

inline Configuration quasi_star(unsigned d, std::uint64_t seed,
                                std::uint64_t prime = PrimeField::kDefaultPrime) {
  Configuration cfg = star_configuration(d, seed, prime);
  cfg.kind = ConfigKind::QuasiStar;
  const auto& f = cfg.field();
  const std::size_t star_count = cfg.points.size();

  // Two points spanning each L_i: q_i ranges over a + s*b.
  std::vector<std::array<Vec3, 2>> spans;
  for (const auto& L : cfg.lines) {
    const Vec3& c = L.coeffs();
    Vec3 a = cross(c, Vec3{1, 0, 0}, f);
    if (is_zero_vec(a)) a = cross(c, Vec3{0, 1, 0}, f);
    Vec3 b = cross(c, a, f);
    spans.push_back({a, b});
  }

  std::vector<ProjectivePoint> extras;
  bool found = false;
  for (int attempt = 0; attempt < detail::kMaxAttempts && !found; ++attempt) {
    extras.clear();
    bool ok = true;
    for (unsigned i = 0; i < d && ok; ++i) {
      CounterRng rng(seed ^ (std::uint64_t(attempt) << 32), detail::kExtraPointStream + i);
      bool placed = false;
      for (int inner = 0; inner < detail::kMaxAttempts && !placed; ++inner) {
        const Coeff s = rng.uniform(f.modulus());
        Vec3 v;
        for (int k = 0; k < 3; ++k) v[k] = f.add(spans[i][0][k], f.mul(s, spans[i][1][k]));
        if (is_zero_vec(v)) continue;
        const ProjectivePoint q(v, f);
        bool good = true;
        for (unsigned j = 0; j < d && good; ++j)
          if (j != i && cfg.lines[j].vanishes_at(q, f)) good = false;
        for (std::size_t k = 0; k < star_count && good; ++k)
          if (cfg.points[k].point == q) good = false;
        if (good) {
          extras.push_back(q);
          placed = true;
        }
      }
      ok = placed;
    }
    if (!ok) continue;
    bool collinear = true;
    for (std::size_t a = 0; a < d && collinear; ++a)
      for (std::size_t b = a + 1; b < d && collinear; ++b)
        for (std::size_t c = b + 1; c < d && collinear; ++c)
          if (det3(extras[a].coords(), extras[b].coords(), extras[c].coords(), f) != 0)
            collinear = false;
    found = !collinear;
  }
  if (!found) throw RejectionExhausted("could not place a non-collinear T_d; retry with another seed");

  for (unsigned i = 0; i < d; ++i) {
    cfg.extra_points.push_back(cfg.points.size());
    cfg.points.push_back({extras[i], 1, "q_" + std::to_string(i + 1)});
  }

  bool on_own = true, off_others = true, off_star = true;
  std::size_t collinear_triples = 0;
  for (unsigned i = 0; i < d; ++i) {
    on_own = on_own && cfg.lines[i].vanishes_at(extras[i], f);
    for (unsigned j = 0; j < d; ++j)
      if (j != i && cfg.lines[j].vanishes_at(extras[i], f)) off_others = false;
    for (std::size_t k = 0; k < star_count; ++k)
      if (cfg.points[k].point == extras[i]) off_star = false;
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c)
        if (det3(extras[a].coords(), extras[b].coords(), extras[c].coords(), f) == 0)
          ++collinear_triples;
  cfg.certificate.add("q_i lies on L_i", on_own);
  cfg.certificate.add("q_i lies on no other line L_j", off_others);
  cfg.certificate.add("T_d is disjoint from the star points", off_star);
  cfg.certificate.add("T_d is not contained in a line", true);
  cfg.certificate.notes.push_back("collinear triples inside T_d: " + std::to_string(collinear_triples));

  cfg.aux_lines = aux_lines(cfg);
  bool aux_ok = true;
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t qi = cfg.extra_points[i];
    if (!cfg.aux_lines[i].vanishes_at(cfg.points[qi].point, f)) aux_ok = false;
    for (std::size_t k = 0; k < cfg.points.size(); ++k)
      if (k != qi && cfg.aux_lines[i].vanishes_at(cfg.points[k].point, f)) aux_ok = false;
  }
  cfg.certificate.add("each L'_i passes through q_i and misses all other points", aux_ok);
  if (!cfg.certificate.all_pass()) throw RejectionExhausted("quasi star certificate failed");
  return cfg;
}

// Rank of the evaluation matrix of degree-t monomials at the points, i.e.
// the Hilbert function of the reduced scheme in degree t.
inline std::size_t evaluation_rank(const std::vector<ProjectivePoint>& pts, unsigned t,
                                   const PrimeField& f) {
  const auto monos = plane_monomials(t);
  Matrix m(pts.size(), monos.size());
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c) {
      Coeff v = 1;
      for (int i = 0; i < 3; ++i) v = f.mul(v, f.pow(pts[r].coords()[i], monos[c].exponent(i)));
      m(r, c) = v;
    }
  return rank(std::move(m), f);
}

inline Configuration generic_points(unsigned n, std::uint64_t seed,
                                    std::uint64_t prime = PrimeField::kDefaultPrime) {
  if (n == 0) throw std::invalid_argument("need at least one point");
  Configuration cfg;
  cfg.kind = ConfigKind::GenericPoints;
  cfg.parameter = n;
  cfg.seed = seed;
  cfg.ring = make_ring(prime);
  const auto& f = cfg.field();
  for (int attempt = 0; attempt < detail::kMaxAttempts; ++attempt) {
    CounterRng rng(seed ^ (std::uint64_t(attempt) << 32), detail::kGenericStream);
    std::vector<ProjectivePoint> pts;
    for (unsigned i = 0; i < n; ++i) pts.emplace_back(detail::random_vector(rng, f), f);
    GenericityCertificate cert;
    cert.seed = seed;
    bool distinct = true, no_three = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (pts[a] == pts[b]) distinct = false;
        for (std::size_t c = b + 1; c < n; ++c)
          if (det3(pts[a].coords(), pts[b].coords(), pts[c].coords(), f) == 0) no_three = false;
      }
    cert.add("points pairwise distinct", distinct);
    cert.add("no three points collinear", no_three);
    for (unsigned t = 0;; ++t) {
      const std::size_t width = count_monomials(t);
      const std::size_t expect = std::min<std::size_t>(width, n);
      cert.add("evaluation matrix in degree " + std::to_string(t) + " has rank " +
                   std::to_string(expect),
               evaluation_rank(pts, t, f) == expect);
      if (width >= n) break;
    }
    if (!cert.all_pass()) continue;
    for (unsigned i = 0; i < n; ++i) cfg.points.push_back({pts[i], 1, "p_" + std::to_string(i + 1)});
    cfg.certificate = std::move(cert);
    return cfg;
  }
  throw RejectionExhausted("could not sample generic points; retry with another seed");
}

// Custom configuration from explicit points (all in the given ring's field).
inline Configuration custom_configuration(const RingPtr& ring, const std::vector<ProjectivePoint>& pts,
                                          const std::vector<unsigned>& multiplicities = {}) {
  Configuration cfg;
  cfg.kind = ConfigKind::Custom;
  cfg.parameter = static_cast<unsigned>(pts.size());
  cfg.ring = ring;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const unsigned m = multiplicities.empty() ? 1 : multiplicities.at(i);
    if (m == 0) throw std::invalid_argument("multiplicity must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (pts[j] == pts[i]) throw std::invalid_argument("configuration points must be distinct");
    cfg.points.push_back({pts[i], m, "p_" + std::to_string(i + 1)});
  }
  return cfg;
}

// Ideal of all forms vanishing at p, generated by two independent linear forms.
inline Ideal point_ideal(const ProjectivePoint& p, const RingPtr& ring) {
  const auto& f = ring->field();
  const Vec3& c = p.coords();
  std::vector<Polynomial> gens;
  if (c[0] != 0) {
    gens.push_back(Polynomial::linear(ring, {f.neg(c[1]), 1, 0}));
    gens.push_back(Polynomial::linear(ring, {f.neg(c[2]), 0, 1}));
  } else if (c[1] != 0) {
    gens.push_back(Polynomial::linear(ring, {1, 0, 0}));
    gens.push_back(Polynomial::linear(ring, {0, f.neg(c[2]), 1}));
  } else {
    gens.push_back(Polynomial::linear(ring, {1, 0, 0}));
    gens.push_back(Polynomial::linear(ring, {0, 1, 0}));
  }
  return Ideal(ring, std::move(gens));
}

// Generators L_1...L_d and the d products with L_i replaced by L'_i: the
// maximal minors of the (d+1) x d matrix with diag(L_i) on top and the row
// (L'_1, ..., L'_d) below.
inline Ideal determinantal_ideal(const Configuration& cfg) {
  if (cfg.kind != ConfigKind::QuasiStar) throw std::invalid_argument("determinantal ideal needs a quasi star configuration");
  const auto aux = cfg.aux_lines.empty() ? aux_lines(cfg) : cfg.aux_lines;
  const RingPtr& ring = cfg.ring;
  std::vector<Polynomial> L, Lp;
  for (const auto& l : cfg.lines) L.push_back(l.polynomial(ring));
  for (const auto& l : aux) Lp.push_back(l.polynomial(ring));
  std::vector<Polynomial> gens{product(ring, L)};
  for (std::size_t i = 0; i < L.size(); ++i) {
    auto factors = L;
    factors[i] = Lp[i];
    gens.push_back(product(ring, factors));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace starconf
