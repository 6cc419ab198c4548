#include "doctest.h"

#include <random>

#include "pullfan/io.hpp"
#include "support.hpp"

using namespace pullfan;
using namespace pullfan::testing;
using io::json;

TEST_CASE("scalars") {
  CHECK(io::to_json(make_rat(3, 2)) == json("3/2"));
  CHECK(io::to_json(Int(-4)) == json(-4));
  Int big("123456789012345678901234567890");
  CHECK(io::to_json(big) == json("123456789012345678901234567890"));
  CHECK(io::int_from_json(io::to_json(big)) == big);
  CHECK(io::rat_from_json(json("-6/4")) == make_rat(-3, 2));
  CHECK(io::rat_from_json(json(5)) == 5);
  CHECK_THROWS_AS(io::int_from_json(json("1/2")), io::FormatError);
  CHECK_THROWS_AS(io::int_from_json(json(1.5)), io::FormatError);
  CHECK_THROWS_AS(io::rat_from_json(json("one")), io::FormatError);
}

TEST_CASE("fan documents round trip") {
  Example ex;
  ConicalSubdivision sub = pull(ex.sigma, ex.tau, ex.plane);
  json j = io::fan_to_json(sub.fan, &sub.ray_heights);
  io::FanDocument doc = io::fan_from_json(json::parse(io::dump(j)));
  CHECK(fan_equal(doc.fan, sub.fan));
  REQUIRE(doc.ray_heights);
  CHECK(*doc.ray_heights == sub.ray_heights);
  CHECK(io::dump(io::fan_to_json(doc.fan, &*doc.ray_heights)) == io::dump(j));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    PullInstance inst = random_pull_instance(rng, 2 + trial % 2);
    Fan f = pull(inst.sigma, inst.tau).fan;
    CHECK(fan_equal(io::fan_from_json(io::fan_to_json(f)).fan, f));
  }
}

TEST_CASE("labels follow their cones") {
  json j = json::parse(R"({"rank": 2, "cones": [
      {"rays": [[1,1],[0,1]], "label": "upper"},
      {"rays": [[1,0],[1,1]], "label": "lower"}]})");
  io::FanDocument doc = io::fan_from_json(j);
  REQUIRE(doc.labels.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const Cone& c = doc.fan.maximal_cones()[i];
    CHECK(doc.labels[i] == (c.has_ray(iv({0, 1})) ? "upper" : "lower"));
  }
}

TEST_CASE("a cone document reads as a one-cone fan") {
  io::FanDocument doc = io::fan_from_json(json::parse(R"({"rays": [[1,0,0],[0,1,0],[0,0,1]]})"));
  CHECK(fan_equal(doc.fan, Fan({orthant(3)}, 3)));
  CHECK(io::cone_from_json(io::cone_to_json(orthant(3))) == orthant(3));
}

TEST_CASE("Cartier and ideal documents round trip") {
  Example ex;
  SupportFunction sf = support_from_heights(pull(ex.sigma, ex.tau, ex.plane));
  CartierData cd = integralize(sf);
  json j = io::cartier_to_json(cd, &sf);
  CHECK(j["cones"][0]["u"] == json::array({"3/2", "0", "3/2"}));
  CartierData back = io::cartier_from_json(j);
  CHECK(back.m == cd.m);
  CHECK(back.multiplier == 2);
  CHECK(fan_equal(back.fan, cd.fan));

  auto ideals = ideal_from_cartier(cd, Fan({ex.sigma}, 3));
  auto again = io::ideals_from_json(io::ideals_to_json(ideals));
  REQUIRE(again.size() == 1);
  CHECK(again[0].ambient == ideals[0].ambient);
  CHECK(again[0].generators == ideals[0].generators);
  CHECK(again[0].closure);
  CHECK(io::ideals_from_json(io::ideal_to_json(ideals[0])).size() == 1);
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(io::fan_from_json(json::parse(R"({"cones": []})")), io::FormatError);
  CHECK_THROWS_AS(io::fan_from_json(json::parse(R"({"rank": 2, "cones": [{"rays": [[1,0,0]]}]})")), io::FormatError);
  CHECK_THROWS_AS(io::cone_from_json(json::parse(R"({"rays": "x"})")), io::FormatError);
  CHECK_THROWS_AS(io::ideal_from_json(json::parse(R"({"ambient_rays": [[1,0]], "generators": [[1,0,0]]})")),
                  io::FormatError);
  CHECK_THROWS_AS(io::ideal_from_json(json::parse(R"({"ambient_rays": [[1,0],[0,1]], "generators": [], "closure": 1})")),
                  io::FormatError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), io::FileError);
  // Valid JSON describing invalid geometry is a domain error, not a format error.
  CHECK_THROWS_AS(io::cone_from_json(json::parse(R"({"rays": [[1,0],[-1,0]]})")), std::invalid_argument);
}

TEST_CASE("dump layout") {
  json j = json::parse(R"({"b": [1, 2], "a": {"c": [[1, 0], [0, 1]]}})");
  CHECK(io::dump(j) == "{\n  \"a\": {\n    \"c\": [\n      [1,0],\n      [0,1]\n    ]\n  },\n  \"b\": [1,2]\n}\n");
  CHECK(json::parse(io::dump(j)) == j);
}
