#pragma once

// Shared fixtures and brute-force oracles for the unit and acceptance tests.
// The oracles deliberately avoid the library's solvers: they use closed-form
// reasoning that only works on the small cases they are written for.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "pullfan/cartier.hpp"
#include "pullfan/fans.hpp"
#include "pullfan/newton.hpp"
#include "pullfan/polyhedra.hpp"
#include "pullfan/pulling.hpp"

namespace pullfan::testing {

inline IntVec iv(std::initializer_list<long> xs) { return int_vec(xs); }

inline Cone orthant(std::size_t n) {
  std::vector<IntVec> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    rays.push_back(e);
  }
  return cone_from_rays(rays, n);
}

// The worked example: sigma the positive orthant in rank 3, tau spanned by
// n4 = (2,1,0) and n5 = (0,1,2).
struct Example {
  IntVec n1 = iv({1, 0, 0});
  IntVec n2 = iv({0, 1, 0});
  IntVec n3 = iv({0, 0, 1});
  IntVec n4 = iv({2, 1, 0});
  IntVec n5 = iv({0, 1, 2});
  Cone sigma = orthant(3);
  Cone tau = cone_from_rays({n4, n5});
  Cone sigma1 = cone_from_rays({n2, n4, n5});
  Cone sigma2 = cone_from_rays({n1, n3, n4, n5});
  Hyperplane plane{iv({1, 1, 1}), Int(1)};
};

struct PullInstance {
  Cone sigma;
  Cone tau;
};

// Random full-dimensional pointed sigma in rank n (2 or 3) with small entries,
// and tau generated by one or two nonnegative combinations of sigma's rays.
inline PullInstance random_pull_instance(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-1, 3);
  std::uniform_int_distribution<int> coeff(0, 2);
  for (;;) {
    std::size_t count = n + (n == 3 ? rng() % 2 : 0);
    std::vector<IntVec> gens;
    for (std::size_t k = 0; k < count; ++k) {
      IntVec v(n);
      for (auto& x : v) x = entry(rng);
      gens.push_back(v);
    }
    if (std::any_of(gens.begin(), gens.end(), [](const IntVec& v) { return is_zero(v); })) continue;
    Cone sigma = orthant(n);
    try {
      sigma = cone_from_rays(gens, n);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (!sigma.full_dimensional()) continue;

    std::size_t tau_gens = 1 + (n == 3 ? rng() % 2 : 0);
    std::vector<IntVec> tg;
    for (std::size_t k = 0; k < tau_gens; ++k) {
      IntVec v(n, Int(0));
      for (const IntVec& r : sigma.rays()) {
        Int c = coeff(rng);
        for (std::size_t i = 0; i < n; ++i) v[i] += c * r[i];
      }
      if (!is_zero(v)) tg.push_back(v);
    }
    if (tg.empty()) continue;
    return {sigma, cone_from_rays(tg, n)};
  }
}

// Conditions on Cartier data relative to Delta, checked by direct substitution:
// equal pairings on rays shared by two cones in the same Delta cone, strictly
// smaller pairing on a cone's own rays, nonnegativity on the Delta cone.
inline bool cartier_conditions_hold(const Fan& sigma, const Fan& delta, const std::vector<IntVec>& m) {
  const auto& cones = sigma.maximal_cones();
  for (const Cone& tau : delta.maximal_cones()) {
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < cones.size(); ++i) {
      if (cone_contains(tau, cones[i])) inside.push_back(i);
    }
    for (std::size_t i : inside) {
      for (const IntVec& r : tau.rays()) {
        if (dot(m[i], r) < 0) return false;
      }
    }
    for (std::size_t i : inside) {
      for (std::size_t j : inside) {
        if (i == j) continue;
        for (const IntVec& r : sigma.rays()) {
          bool in_i = cone_contains(cones[i], r);
          bool in_j = cone_contains(cones[j], r);
          if (in_i && in_j && dot(m[i], r) != dot(m[j], r)) return false;
          if (in_i && !in_j && !(dot(m[i], r) < dot(m[j], r))) return false;
        }
      }
    }
  }
  return true;
}

// Membership of x in conv{a, b} + R^n_{>=0}: x >= t a + (1-t) b for some
// t in [0,1]. Each coordinate bounds t on one side.
inline bool in_segment_plus_orthant(const IntVec& a, const IntVec& b, const IntVec& x) {
  Rat lo = 0, hi = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    // t (a_i - b_i) <= x_i - b_i
    Int d = a[i] - b[i];
    Int r = x[i] - b[i];
    if (d == 0) {
      if (r < 0) return false;
      continue;
    }
    Rat bound(r, d);
    bound.canonicalize();
    if (d > 0) {
      hi = std::min(hi, bound);
    } else {
      lo = std::max(lo, bound);
    }
  }
  return lo <= hi;
}

// Minimal lattice points of conv{a, b} + R^n_{>=0} inside the box spanned by
// the componentwise maximum, lexicographic order.
inline std::vector<IntVec> closure_oracle(const IntVec& a, const IntVec& b) {
  const std::size_t n = a.size();
  IntVec hi(n);
  for (std::size_t i = 0; i < n; ++i) hi[i] = std::max(a[i], b[i]);
  std::vector<IntVec> out;
  IntVec x(n, Int(0));
  for (;;) {
    if (in_segment_plus_orthant(a, b, x)) {
      bool minimal = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        IntVec y = x;
        y[i] -= 1;
        if (in_segment_plus_orthant(a, b, y)) minimal = false;
      }
      if (minimal) out.push_back(x);
    }
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (x[k] < hi[k]) {
        x[k] += 1;
        break;
      }
      x[k] = 0;
      if (k == 0) {
        std::sort(out.begin(), out.end(), [](const IntVec& p, const IntVec& q) { return lex_less(p, q); });
        return out;
      }
    }
  }
}

// The full heights path: pull, solve, integralize, one ideal per Delta cone.
inline std::vector<MonomialIdealData> heights_path_ideals(const ConicalSubdivision& sub, const Fan& delta) {
  return ideal_from_cartier(integralize(support_from_heights(sub)), delta);
}

}  // namespace pullfan::testing
