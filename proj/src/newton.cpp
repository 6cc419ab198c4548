#include "pullfan/newton.hpp"

#include <algorithm>
#include <stdexcept>

namespace pullfan {

namespace {

std::vector<RatVec> rat_rows(const std::vector<IntVec>& vs) {
  std::vector<RatVec> out;
  out.reserve(vs.size());
  for (const IntVec& v : vs) out.push_back(to_rat(v));
  return out;
}

}  // namespace

NewtonPolyhedron newton(const MonomialIdealData& ideal) {
  if (ideal.generators.empty()) throw std::invalid_argument("newton: empty generator list");
  if (!ideal.ambient.full_dimensional()) throw std::invalid_argument("newton: ambient cone is not full-dimensional");

  std::vector<IntVec> gens = ideal.generators;
  std::sort(gens.begin(), gens.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Cone recession = dual_cone(ideal.ambient);
  std::vector<RatVec> rays = rat_rows(recession.rays());

  std::vector<IntVec> vertices;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(to_rat(gens[j]));
    }
    if (others.empty() || !in_hull(others, rays, to_rat(gens[i]))) vertices.push_back(gens[i]);
  }
  return {ideal.generators, ideal.ambient, std::move(vertices), std::move(recession)};
}

HPolyhedron newton_hrep(const NewtonPolyhedron& np) {
  return polyhedron_hrep(rat_rows(np.vertices), rat_rows(np.recession.rays()));
}

bool newton_contains(const NewtonPolyhedron& np, const RatVec& x) {
  return in_hull(rat_rows(np.vertices), rat_rows(np.recession.rays()), x);
}

Fan normal_fan(const NewtonPolyhedron& np) {
  const std::size_t n = np.ambient.ambient();
  std::vector<Cone> cones;
  for (const IntVec& g : np.vertices) {
    std::vector<IntVec> ineqs = np.ambient.facet_normals();
    for (const IntVec& other : np.vertices) {
      if (other == g) continue;
      IntVec diff(n);
      for (std::size_t k = 0; k < n; ++k) diff[k] = other[k] - g[k];
      ineqs.push_back(std::move(diff));
    }
    Cone region = cone_from_rays(cone_extreme_rays(ineqs, np.ambient.equations(), n), n);
    if (region.full_dimensional()) cones.push_back(std::move(region));
  }
  std::sort(cones.begin(), cones.end(), cone_less);
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  return Fan(std::move(cones), n);
}

std::vector<IntVec> integral_closure_generators(const MonomialIdealData& ideal) {
  const Cone& tau = ideal.ambient;
  const std::size_t n = tau.ambient();
  if (!tau.full_dimensional() || !tau.simplicial()) {
    throw std::invalid_argument("unsupported ambient for minimal generators");
  }
  RatMatrix ray_matrix = rat_rows(tau.rays());
  // |det| = 1 iff the rays form a lattice basis.
  if (abs(determinant(ray_matrix)) != 1) throw std::invalid_argument("unsupported ambient for minimal generators");

  // Orthant coordinates: y_i = <m, ray_i>. Unimodularity makes this a lattice
  // isomorphism taking the dual cone to the nonnegative orthant.
  auto to_orthant = [&](const IntVec& m) {
    RatVec y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = Rat(dot(tau.rays()[i], m));
    return y;
  };

  NewtonPolyhedron np = newton(ideal);
  std::vector<RatVec> verts;
  IntVec hi(n, Int(0));
  for (const IntVec& v : np.vertices) {
    RatVec y = to_orthant(v);
    for (std::size_t i = 0; i < n; ++i) hi[i] = std::max(hi[i], Int(y[i].get_num()));
    verts.push_back(std::move(y));
  }
  std::vector<RatVec> units;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n);
    e[i] = 1;
    units.push_back(std::move(e));
  }
  HPolyhedron filter = polyhedron_hrep(verts, units);

  std::vector<IntVec> out;
  for (const IntVec& y : lattice_points_in_box(IntVec(n, Int(0)), hi, filter)) {
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (y[i] == 0) continue;
      RatVec lower = to_rat(y);
      lower[i] -= 1;
      if (contains(filter, lower)) minimal = false;
    }
    if (!minimal) continue;
    auto sol = solve_linear(ray_matrix, to_rat(y));
    if (!sol || !sol->kernel.empty()) throw std::logic_error("integral_closure_generators: singular ray matrix");
    IntVec m;
    for (const Rat& x : sol->particular) {
      if (x.get_den() != 1) throw std::logic_error("integral_closure_generators: non-integral preimage");
      m.push_back(x.get_num());
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  return out;
}

bool verify_blowup(const Fan& sigma, const Fan& delta, const std::vector<MonomialIdealData>& ideals) {
  if (!refines(sigma, delta)) return false;
  for (const Cone& tau : delta.maximal_cones()) {
    auto it = std::find_if(ideals.begin(), ideals.end(),
                           [&](const MonomialIdealData& ideal) { return ideal.ambient == tau; });
    if (it == ideals.end()) return false;
    if (!fan_equal(normal_fan(newton(*it)), restrict_to(sigma, tau))) return false;
  }
  return true;
}

}  // namespace pullfan
