#include "doctest.h"

#include <random>

#include "pullfan/cartier.hpp"
#include "pullfan/pulling.hpp"
#include "support.hpp"

using namespace pullfan;
using namespace pullfan::testing;

TEST_CASE("admissible hyperplane") {
  Example ex;
  CHECK(admissible_hyperplane(ex.sigma, ex.tau) == ex.plane);
  CHECK(admissible_hyperplane(orthant(2), cone_from_rays({iv({1, 1})})) == Hyperplane{iv({1, 1}), Int(1)});
  CHECK_THROWS_AS(admissible_hyperplane(ex.sigma, cone_from_rays({iv({1, -1, 0})})), std::invalid_argument);
  CHECK_THROWS_AS(admissible_hyperplane(ex.tau, ex.tau), std::invalid_argument);
  CHECK_THROWS_AS(check_admissible(ex.sigma, ex.tau, Hyperplane{iv({1, -1, 1}), Int(1)}), std::invalid_argument);
  CHECK_THROWS_AS(check_admissible(ex.sigma, ex.tau, Hyperplane{iv({1, 1, 1}), Int(0)}), std::invalid_argument);
}

TEST_CASE("heighted configuration") {
  Example ex;
  HeightedConfig c = build_config(ex.sigma, ex.tau, ex.plane);
  REQUIRE(c.points.size() == 5);
  CHECK(c.points[0] == to_rat({1, 0, 0}));
  CHECK(c.points[1] == to_rat({0, 1, 0}));
  CHECK(c.points[2] == to_rat({0, 0, 1}));
  CHECK(c.points[3] == scaled(to_rat(ex.n4), make_rat(1, 3)));
  CHECK(c.points[4] == scaled(to_rat(ex.n5), make_rat(1, 3)));
  CHECK(c.heights == std::vector<Rat>{0, 0, 0, 1, 1});
  for (const RatVec& p : c.points) CHECK(dot(ex.plane.functional, p) == 1);

  HeightedConfig all = build_config(ex.sigma, ex.sigma, ex.plane);
  CHECK(all.points.size() == 3);
  CHECK(all.heights == std::vector<Rat>{1, 1, 1});

  HeightedConfig two = build_config(orthant(2), cone_from_rays({iv({1, 1})}), Hyperplane{iv({1, 1}), Int(1)});
  CHECK(two.points == std::vector<RatVec>{to_rat({1, 0}), to_rat({0, 1}), {make_rat(1, 2), make_rat(1, 2)}});
  CHECK(two.heights == std::vector<Rat>{0, 0, 1});
}

TEST_CASE("pulling the example") {
  Example ex;
  ConicalSubdivision sub = pull(ex.sigma, ex.tau, ex.plane);
  CHECK(fan_equal(sub.fan, Fan({ex.sigma1, ex.sigma2}, 3)));
  CHECK(sub.fan.maximal_cones()[0] == ex.sigma1);
  CHECK(sub.ray_heights.size() == 5);
  CHECK(sub.ray_heights.at(ex.n1) == 0);
  CHECK(sub.ray_heights.at(ex.n2) == 0);
  CHECK(sub.ray_heights.at(ex.n3) == 0);
  CHECK(sub.ray_heights.at(ex.n4) == 3);
  CHECK(sub.ray_heights.at(ex.n5) == 3);
  // Default hyperplane is the same one here.
  CHECK(fan_equal(pull(ex.sigma, ex.tau).fan, sub.fan));
}

TEST_CASE("pulling the rank-2 orthant towards (1,1)") {
  ConicalSubdivision sub = pull(orthant(2), cone_from_rays({iv({1, 1})}));
  Fan want({cone_from_rays({iv({1, 0}), iv({1, 1})}), cone_from_rays({iv({1, 1}), iv({0, 1})})}, 2);
  CHECK(fan_equal(sub.fan, want));
  CHECK(sub.ray_heights.at(iv({1, 0})) == 0);
  CHECK(sub.ray_heights.at(iv({0, 1})) == 0);
  CHECK(sub.ray_heights.at(iv({1, 1})) == 2);
}

TEST_CASE("pulling towards sigma itself is trivial") {
  Example ex;
  ConicalSubdivision sub = pull(ex.sigma, ex.sigma);
  CHECK(fan_equal(sub.fan, Fan({ex.sigma}, 3)));
  for (const auto& [ray, h] : sub.ray_heights) CHECK(h == Rat(dot(ex.plane.functional, ray)));

  Cone s = cone_from_rays({iv({1, 0}), iv({1, 3})});
  ConicalSubdivision sub2 = pull(s, s);
  Hyperplane hp = admissible_hyperplane(s, s);
  CHECK(sub2.fan.maximal_cones().size() == 1);
  for (const auto& [ray, h] : sub2.ray_heights) CHECK(h * Rat(hp.offset) == Rat(dot(hp.functional, ray)));
}

TEST_CASE("hyperplane choice (informational)") {
  Example ex;
  Fan reference = pull(ex.sigma, ex.tau, ex.plane).fan;
  int agree = 0, total = 0;
  for (const IntVec& a : {iv({1, 2, 3}), iv({3, 1, 1}), iv({2, 5, 1}), iv({1, 1, 4})}) {
    for (long c : {1L, 7L}) {
      ConicalSubdivision sub = pull(ex.sigma, ex.tau, Hyperplane{a, Int(c)});
      ++total;
      if (fan_equal(sub.fan, reference)) ++agree;
      CHECK(refines(sub.fan, Fan({ex.sigma}, 3)));
    }
  }
  MESSAGE("pull fan agreed with the reference hyperplane for " << agree << " of " << total << " choices");
}

TEST_CASE("random pulling instances") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    PullInstance inst = random_pull_instance(rng, 2 + trial % 2);
    CAPTURE(trial);
    ConicalSubdivision sub = pull(inst.sigma, inst.tau);
    const Fan& f = sub.fan;

    CHECK(refines(f, Fan({inst.sigma}, inst.sigma.ambient())));

    // Every ray of tau is a ray of the fan.
    std::vector<IntVec> rays = f.rays();
    for (const IntVec& r : inst.tau.rays()) CHECK(std::find(rays.begin(), rays.end(), r) != rays.end());

    // A maximal cone meeting the relative interior of tau contains tau.
    IntVec inner(inst.sigma.ambient(), Int(0));
    for (const IntVec& r : inst.tau.rays())
      for (std::size_t i = 0; i < inner.size(); ++i) inner[i] += r[i];
    for (const Cone& c : f.maximal_cones()) {
      if (cone_contains(c, inner)) CHECK(cone_contains(c, inst.tau));
    }

    // Concavity: each u_sigma is at least the height on every ray, with
    // equality exactly on the rays of its own cone.
    SupportFunction sf = support_from_heights(sub);
    for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) {
      const Cone& c = f.maximal_cones()[i];
      for (const auto& [ray, h] : sub.ray_heights) {
        Rat value = dot(ray, sf.functionals[i]);
        if (c.has_ray(ray)) CHECK(value == h);
        else CHECK(value > h);
      }
    }

    // Determinism.
    ConicalSubdivision again = pull(inst.sigma, inst.tau);
    CHECK(fan_equal(again.fan, f));
    CHECK(again.ray_heights == sub.ray_heights);
  }
}
