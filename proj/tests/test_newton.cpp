#include "doctest.h"

#include <random>

#include "pullfan/newton.hpp"
#include "support.hpp"

using namespace pullfan;
using namespace pullfan::testing;

namespace {

MonomialIdealData example_ideal() { return make_ideal(orthant(3), {iv({3, 0, 3}), iv({0, 6, 0})}, true); }

}  // namespace

TEST_CASE("Newton polyhedra") {
  NewtonPolyhedron np = newton(example_ideal());
  CHECK(np.vertices == std::vector<IntVec>{iv({0, 6, 0}), iv({3, 0, 3})});
  CHECK(np.recession == orthant(3));

  NewtonPolyhedron single = newton(make_ideal(orthant(2), {iv({1, 2})}, true));
  CHECK(single.vertices == std::vector<IntVec>{iv({1, 2})});

  NewtonPolyhedron three = newton(make_ideal(orthant(2), {iv({2, 0}), iv({1, 1}), iv({0, 2})}, true));
  CHECK(three.vertices == std::vector<IntVec>{iv({0, 2}), iv({2, 0})});

  // A generator above another is not a vertex.
  NewtonPolyhedron above = newton(make_ideal(orthant(2), {iv({1, 1}), iv({2, 3})}, true));
  CHECK(above.vertices == std::vector<IntVec>{iv({1, 1})});

  CHECK_THROWS_AS(newton(make_ideal(orthant(2), {}, true)), std::invalid_argument);
}

TEST_CASE("membership matches the two-generator interval oracle") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> d(0, 5);
  for (int trial = 0; trial < 20; ++trial) {
    IntVec a = {d(rng), d(rng), d(rng)}, b = {d(rng), d(rng), d(rng)};
    NewtonPolyhedron np = newton(make_ideal(orthant(3), {a, b}, true));
    HPolyhedron h = newton_hrep(np);
    for (int k = 0; k < 20; ++k) {
      IntVec x = {d(rng), d(rng), d(rng)};
      bool want = in_segment_plus_orthant(a, b, x);
      CHECK(newton_contains(np, to_rat(x)) == want);
      CHECK(contains(h, to_rat(x)) == want);
    }
  }
}

TEST_CASE("normal fans") {
  Example ex;
  Fan pull_fan({ex.sigma1, ex.sigma2}, 3);
  CHECK(fan_equal(normal_fan(newton(example_ideal())), pull_fan));

  Fan principal = normal_fan(newton(make_ideal(orthant(3), {iv({1, 2, 0})}, true)));
  CHECK(fan_equal(principal, Fan({orthant(3)}, 3)));

  Fan star = normal_fan(newton(make_ideal(orthant(2), {iv({2, 0}), iv({0, 2})}, true)));
  CHECK(fan_equal(star, star_subdivision(Fan({orthant(2)}, 2), iv({1, 1}))));
}

TEST_CASE("normal fans refine their ambient cone") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(0, 4);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<IntVec> gens;
    for (int k = 0; k < 3; ++k) gens.push_back({d(rng), d(rng), d(rng)});
    Fan f = normal_fan(newton(make_ideal(orthant(3), gens, true)));
    CHECK(refines(f, Fan({orthant(3)}, 3)));
  }
}

TEST_CASE("integral closure generators") {
  auto got = integral_closure_generators(example_ideal());
  CHECK(got == std::vector<IntVec>{iv({0, 6, 0}), iv({1, 4, 1}), iv({2, 2, 2}), iv({3, 0, 3})});
  CHECK(got == closure_oracle(iv({3, 0, 3}), iv({0, 6, 0})));

  auto two = integral_closure_generators(make_ideal(orthant(2), {iv({2, 0}), iv({0, 2})}, true));
  CHECK(two == std::vector<IntVec>{iv({0, 2}), iv({1, 1}), iv({2, 0})});
  CHECK(two == closure_oracle(iv({2, 0}), iv({0, 2})));

  CHECK(integral_closure_generators(make_ideal(orthant(3), {iv({1, 0, 2})}, true)) ==
        std::vector<IntVec>{iv({1, 0, 2})});

  // A unimodular but non-orthant ambient: coordinates change, answers map back.
  Cone skew = cone_from_rays({iv({1, 0}), iv({1, 1})});
  auto sk = integral_closure_generators(make_ideal(skew, {iv({0, 2}), iv({2, -2})}, true));
  for (const IntVec& m : sk)
    for (const IntVec& r : skew.rays()) CHECK(dot(m, r) >= 0);
  CHECK(sk.size() == 3);

  CHECK_THROWS_WITH_AS(integral_closure_generators(make_ideal(cone_from_rays({iv({1, 0}), iv({1, 2})}), {iv({0, 1})}, true)),
                       "unsupported ambient for minimal generators", std::invalid_argument);
}

TEST_CASE("closure generators are minimal and leave the fan unchanged") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(0, 4);
  for (int trial = 0; trial < 15; ++trial) {
    IntVec a = {d(rng), d(rng), d(rng)}, b = {d(rng), d(rng), d(rng)};
    MonomialIdealData ideal = make_ideal(orthant(3), {a, b}, true);
    auto gens = integral_closure_generators(ideal);
    CHECK(gens == closure_oracle(a, b));
    NewtonPolyhedron np = newton(ideal);
    for (const IntVec& m : gens) {
      CHECK(newton_contains(np, to_rat(m)));
      for (std::size_t i = 0; i < 3; ++i) {
        RatVec lower = to_rat(m);
        lower[i] -= 1;
        CHECK_FALSE(newton_contains(np, lower));
      }
    }
    Fan f1 = normal_fan(np);
    Fan f2 = normal_fan(newton(make_ideal(orthant(3), gens, true)));
    CHECK(fan_equal(f1, f2));
  }
}

TEST_CASE("verify_blowup") {
  Example ex;
  Fan pull_fan({ex.sigma1, ex.sigma2}, 3);
  Fan delta({ex.sigma}, 3);
  CHECK(verify_blowup(pull_fan, delta, {example_ideal()}));
  CHECK_FALSE(verify_blowup(pull_fan, delta, {make_ideal(orthant(3), {iv({1, 1, 1})}, true)}));
  CHECK_FALSE(verify_blowup(pull_fan, delta, {}));

  Fan d2({orthant(2)}, 2);
  CHECK(verify_blowup(star_subdivision(d2, iv({1, 1})), d2, {make_ideal(orthant(2), {iv({2, 0}), iv({0, 2})}, true)}));
}

TEST_CASE("blowup round trip on random pulling instances") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    PullInstance inst = random_pull_instance(rng, 2 + trial % 2);
    CAPTURE(trial);
    ConicalSubdivision sub = pull(inst.sigma, inst.tau);
    Fan delta({inst.sigma}, inst.sigma.ambient());
    CHECK(verify_blowup(sub.fan, delta, heights_path_ideals(sub, delta)));
  }
}
