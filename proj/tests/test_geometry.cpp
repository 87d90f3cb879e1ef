#include "starconf/geometry.hpp"
#include "starconf/invariants.hpp"

#include <catch_amalgamated.hpp>

using namespace starconf;

namespace {

const PrimeField kF;

LinearForm line(std::int64_t a, std::int64_t b, std::int64_t c) {
  return LinearForm({kF.from_int(a), kF.from_int(b), kF.from_int(c)}, kF);
}

ProjectivePoint pt(Coeff a, Coeff b, Coeff c) { return ProjectivePoint({a, b, c}, kF); }

bool no_three_concurrent(const std::vector<LinearForm>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      for (std::size_t k = j + 1; k < lines.size(); ++k)
        if (det3(lines[i].coeffs(), lines[j].coeffs(), lines[k].coeffs(), kF) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("intersections of coordinate lines", "[geometry]") {
  REQUIRE(intersect_lines(line(0, 1, 0), line(0, 0, 1), kF) == pt(1, 0, 0));
  REQUIRE(intersect_lines(line(1, 0, 0), line(0, 1, 0), kF) == pt(0, 0, 1));
  REQUIRE(intersect_lines(line(1, 0, -1), line(0, 1, -1), kF) == pt(1, 1, 1));
  REQUIRE(line_through(pt(1, 0, 0), pt(0, 1, 0), kF) == line(0, 0, 1));
  REQUIRE(pt(2, 4, 6) == pt(1, 2, 3));
}

TEST_CASE("general lines", "[geometry]") {
  for (unsigned d = 3; d <= 6; ++d) {
    const auto g = make_general_lines(d, 11, kF);
    REQUIRE(g.lines.size() == d);
    REQUIRE(g.certificate.all_pass());
    REQUIRE(no_three_concurrent(g.lines));
  }
}

TEST_CASE("star configurations", "[geometry]") {
  for (unsigned d : {3u, 4u, 5u}) {
    const auto s = star_configuration(d, 1);
    REQUIRE(s.size() == binomial2(d));
    REQUIRE(s.lines.size() == d);
    REQUIRE(s.certificate.all_pass());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) REQUIRE_FALSE(s.points[i].point == s.points[j].point);
    // Each star point lies on exactly two of the lines.
    for (const auto& p : s.points) {
      int on = 0;
      for (const auto& L : s.lines) on += L.vanishes_at(p.point, kF);
      REQUIRE(on == 2);
    }
  }
  REQUIRE(alpha(configuration_ideal(star_configuration(4, 1))) == 3);
}

TEST_CASE("quasi star configurations", "[geometry]") {
  for (unsigned d : {3u, 4u, 5u}) {
    const auto z = quasi_star(d, 7);
    REQUIRE(z.size() == d * (d + 1) / 2);
    REQUIRE(z.extra_points.size() == d);
    REQUIRE(z.aux_lines.size() == d);
    REQUIRE(z.certificate.all_pass());
    for (unsigned i = 0; i < d; ++i) {
      const auto& q = z.points[z.extra_points[i]].point;
      for (unsigned j = 0; j < d; ++j) REQUIRE(z.lines[j].vanishes_at(q, kF) == (i == j));
      REQUIRE(z.aux_lines[i].vanishes_at(q, kF));
    }
    // The extra points are not all on one line.
    const auto& q0 = z.points[z.extra_points[0]].point;
    const auto& q1 = z.points[z.extra_points[1]].point;
    const auto through = line_through(q0, q1, kF);
    bool off = false;
    for (auto i : z.extra_points) off |= !through.vanishes_at(z.points[i].point, kF);
    REQUIRE(off);
  }
}

TEST_CASE("sampling is reproducible and seed dependent", "[geometry]") {
  const auto a = quasi_star(4, 3), b = quasi_star(4, 3), c = quasi_star(4, 4);
  for (std::size_t i = 0; i < a.size(); ++i) REQUIRE(a.points[i].point == b.points[i].point);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs |= !(a.points[i].point == c.points[i].point);
  REQUIRE(differs);
}

TEST_CASE("generic points", "[geometry]") {
  const auto one = generic_points(1, 5);
  REQUIRE(one.size() == 1);
  REQUIRE(one.certificate.all_pass());
  const auto six = generic_points(6, 2);
  REQUIRE(six.size() == 6);
  REQUIRE(six.certificate.all_pass());
  REQUIRE(hilbert_profile(configuration_ideal(six)).is_generic());
}

TEST_CASE("ideals of points", "[geometry]") {
  const auto ring = make_ring();
  const auto x = [&](int i) { return Polynomial::variable(ring, i); };
  REQUIRE(same_ideal(point_ideal(pt(1, 0, 0), ring), Ideal(ring, {x(1), x(2)})));
  REQUIRE(same_ideal(point_ideal(pt(0, 0, 1), ring), Ideal(ring, {x(0), x(1)})));
  REQUIRE(same_ideal(point_ideal(pt(1, 1, 1), ring), Ideal(ring, {x(0) - x(2), x(1) - x(2)})));
}

TEST_CASE("custom configurations reject repeated points", "[geometry]") {
  const auto ring = make_ring();
  REQUIRE_THROWS_AS(custom_configuration(ring, {pt(1, 2, 3), pt(2, 4, 6)}), std::invalid_argument);
  REQUIRE_THROWS_AS(custom_configuration(ring, {pt(1, 2, 3)}, {0}), std::invalid_argument);
}
