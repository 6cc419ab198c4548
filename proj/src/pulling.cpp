#include "pullfan/pulling.hpp"

#include <algorithm>
#include <stdexcept>

#include "pullfan/polyhedra.hpp"

namespace pullfan {

bool RayLess::operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }

void check_admissible(const Cone& sigma, const Cone& tau, const Hyperplane& h) {
  if (!sigma.full_dimensional()) throw std::invalid_argument("sigma is not full-dimensional");
  if (tau.ambient() != sigma.ambient()) throw std::invalid_argument("sigma and tau have different ranks");
  if (!cone_contains(sigma, tau)) throw std::invalid_argument("tau is not contained in sigma");
  if (h.functional.size() != sigma.ambient()) throw std::invalid_argument("hyperplane has the wrong rank");
  if (h.offset == 0) throw std::invalid_argument("hyperplane passes through the origin");
  for (const IntVec& v : sigma.rays()) {
    if (sgn(dot(h.functional, v)) != sgn(h.offset)) {
      throw std::invalid_argument("hyperplane does not meet the ray " + to_string(v));
    }
  }
}

Hyperplane admissible_hyperplane(const Cone& sigma, const Cone& tau) {
  if (!sigma.full_dimensional()) throw std::invalid_argument("sigma is not full-dimensional");
  if (tau.ambient() != sigma.ambient() || !cone_contains(sigma, tau)) {
    throw std::invalid_argument("tau is not contained in sigma");
  }
  IntVec sum(sigma.ambient(), Int(0));
  Cone dual = dual_cone(sigma);
  for (const IntVec& m : dual.rays()) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += m[i];
  }
  Hyperplane h{primitive(sum), Int(1)};
  check_admissible(sigma, tau, h);
  return h;
}

HeightedConfig build_config(const Cone& sigma, const Cone& tau, const Hyperplane& h) {
  check_admissible(sigma, tau, h);
  HeightedConfig config;
  config.hyperplane = h;
  auto add = [&](const IntVec& v, bool in_tau) {
    Rat scale(h.offset, dot(h.functional, v));
    scale.canonicalize();
    config.points.push_back(scaled(to_rat(v), scale));
    config.rays.push_back(v);
    config.heights.emplace_back(in_tau ? 1 : 0);
  };
  for (const IntVec& v : sigma.rays()) add(v, tau.has_ray(v));
  for (const IntVec& v : tau.rays()) {
    if (!sigma.has_ray(v)) add(v, true);
  }
  return config;
}

std::vector<std::vector<std::size_t>> pulling_cells(const HeightedConfig& config) {
  std::vector<RatVec> lifted;
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    RatVec p = config.points[i];
    p.push_back(config.heights[i]);
    lifted.push_back(std::move(p));
  }
  return upper_hull(lifted);
}

ConicalSubdivision pull(const Cone& sigma, const Cone& tau, const std::optional<Hyperplane>& h) {
  Hyperplane plane = h ? *h : admissible_hyperplane(sigma, tau);
  HeightedConfig config = build_config(sigma, tau, plane);

  std::vector<Cone> cones;
  for (const auto& cell : pulling_cells(config)) {
    std::vector<IntVec> gens;
    for (std::size_t i : cell) gens.push_back(config.rays[i]);
    Cone c = cone_from_rays(gens, sigma.ambient());
    // Vertical facets were already excluded; a cell that does not span the
    // cross-section would only arise from degenerate input.
    if (c.full_dimensional()) cones.push_back(std::move(c));
  }
  Fan fan(std::move(cones), sigma.ambient());

  RayHeights heights;
  for (std::size_t i = 0; i < config.rays.size(); ++i) {
    Rat factor(dot(plane.functional, config.rays[i]), plane.offset);
    factor.canonicalize();
    heights[config.rays[i]] = config.heights[i] * factor;
  }
  // Only rays that survive as rays of the fan carry a height.
  RayHeights on_fan;
  for (const IntVec& r : fan.rays()) on_fan[r] = heights.at(r);
  return {std::move(fan), std::move(on_fan)};
}

}  // namespace pullfan
