#pragma once

// Pulling subdivisions of a cone sigma towards a subcone tau.
//
// The rays of sigma and tau are cut by an affine hyperplane H; the points
// coming from tau are lifted to height one, the others stay at height zero,
// and the upper hull of the lifted configuration projects to a coherent
// subdivision of the cross-section. Coning over its cells gives the fan.

#include <map>
#include <optional>
#include <vector>

#include "pullfan/exactq.hpp"
#include "pullfan/fans.hpp"

namespace pullfan {

// The affine hyperplane <functional, x> = offset.
struct Hyperplane {
  IntVec functional;
  Int offset;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

struct HeightedConfig {
  std::vector<RatVec> points;   // on the hyperplane
  std::vector<IntVec> rays;     // primitive ray through each point
  std::vector<Rat> heights;     // 1 on points from tau, 0 on the rest
  Hyperplane hyperplane;
};

struct RayLess {
  bool operator()(const IntVec& a, const IntVec& b) const;
};

using RayHeights = std::map<IntVec, Rat, RayLess>;

struct ConicalSubdivision {
  Fan fan;
  RayHeights ray_heights;   // homogenized heights h(v) on every ray of the fan
};

// Primitive sum of the extreme rays of sigma's dual cone, offset 1.
// Throws std::invalid_argument when sigma is not full-dimensional or tau has a
// ray outside sigma.
Hyperplane admissible_hyperplane(const Cone& sigma, const Cone& tau);

// Throws std::invalid_argument unless h meets every ray of sigma on its
// positive side (offset / <functional, v> > 0) and tau lies in sigma.
void check_admissible(const Cone& sigma, const Cone& tau, const Hyperplane& h);

// Points for sigma's rays come first, in sigma's ray order, followed by the
// rays of tau that are not rays of sigma. A ray shared by both gets height 1.
HeightedConfig build_config(const Cone& sigma, const Cone& tau, const Hyperplane& h);

// The pulling subdivision pull_tau(sigma). Uses admissible_hyperplane() unless
// a hyperplane is supplied.
ConicalSubdivision pull(const Cone& sigma, const Cone& tau,
                        const std::optional<Hyperplane>& h = std::nullopt);

// Upper-hull cells of the configuration as point-index sets.
std::vector<std::vector<std::size_t>> pulling_cells(const HeightedConfig& config);

}  // namespace pullfan
