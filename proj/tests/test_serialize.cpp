#include "starconf/verify.hpp"

#include <catch_amalgamated.hpp>

using namespace starconf;

TEST_CASE("configurations round trip through JSON", "[serialize]") {
  for (auto cfg : {quasi_star(3, 7), star_configuration(5, 1), generic_points(6, 2)}) {
    const Json j = to_json(cfg);
    const auto back = configuration_from_json(Json::parse(j.dump()));
    REQUIRE(back.size() == cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i) REQUIRE(back.points[i].point == cfg.points[i].point);
    REQUIRE(to_json(back) == j);
    REQUIRE(config_hash(back) == config_hash(cfg));
    REQUIRE(same_ideal(configuration_ideal(back), configuration_ideal(cfg)));
  }
  REQUIRE(to_json(quasi_star(3, 7))["points"].size() == 6);
  REQUIRE(to_json(star_configuration(5, 1))["points"].size() == 10);
}

TEST_CASE("malformed configurations are rejected", "[serialize]") {
  Json j = to_json(quasi_star(3, 1));
  j["points"].push_back(j["points"][0]);
  REQUIRE_THROWS_AS(configuration_from_json(j), std::invalid_argument);
  j = to_json(quasi_star(3, 1));
  j["points"].erase(0);
  REQUIRE_THROWS_AS(configuration_from_json(j), std::invalid_argument);
  j = to_json(generic_points(2, 1));
  j["points"][0]["coords"] = Json::array({0, 0, 0});
  REQUIRE_THROWS(configuration_from_json(j));
}

TEST_CASE("reports are deterministic", "[serialize]") {
  const auto a = to_json(waldschmidt_estimate(quasi_star(4, 1))).dump();
  const auto b = to_json(waldschmidt_estimate(quasi_star(4, 1))).dump();
  REQUIRE(a == b);
  const auto rep = containment_table(quasi_star(3, 1), 3, 2);
  REQUIRE(containment_csv(rep).rfind("m,r,status,witness\n1,1,holds,", 0) == 0);
  REQUIRE(containment_grid(rep).find("⊄") != std::string::npos);
}

TEST_CASE("invariant reports serialize Betti tables as triples", "[serialize]") {
  const auto rep = compute_invariants(configuration_ideal(quasi_star(3, 1)), true);
  const Json j = to_json(rep);
  REQUIRE(j["alpha"] == 3);
  REQUIRE(j["minimal_generator_degrees"] == Json::array({3, 3, 3, 3}));
  REQUIRE(j["betti"]["entries"][0] == Json{{"i", 0}, {"j", 3}, {"beta", 4}});
}

TEST_CASE("claim statuses fold into exit codes", "[serialize]") {
  auto claim = [](ClaimStatus s) { return ClaimResult{"c", "", "", "", s, ""}; };
  CriterionResult pass{"1", "", {claim(ClaimStatus::Pass)}};
  CriterionResult skip{"2", "", {claim(ClaimStatus::Pass), claim(ClaimStatus::Skipped)}};
  CriterionResult fail{"3", "", {claim(ClaimStatus::Skipped), claim(ClaimStatus::Fail)}};
  REQUIRE(exit_code({pass}) == 0);
  REQUIRE(exit_code({pass, skip}) == 2);
  REQUIRE(exit_code({pass, skip, fail}) == 1);
  REQUIRE(to_json(claim(ClaimStatus::Fail))["status"] == "fail");
}

TEST_CASE("derived parameter reports", "[serialize]") {
  const Json j = to_json(corollary_from_epsilon(make_rational(2, 5)));
  REQUIRE(j["d"] == 16);
  REQUIRE(j["predicted_interval"] == Json::array({"8/5", "2"}));
}
