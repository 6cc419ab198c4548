#include "pullfan/fans.hpp"

#include <algorithm>
#include <stdexcept>

#include "pullfan/polyhedra.hpp"

namespace pullfan {

namespace {

bool ray_greater(const IntVec& a, const IntVec& b) { return lex_less(b, a); }

void sort_rays(std::vector<IntVec>& rays) {
  std::sort(rays.begin(), rays.end(), ray_greater);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

}  // namespace

bool Cone::has_ray(const IntVec& ray) const {
  return std::find(rays_.begin(), rays_.end(), ray) != rays_.end();
}

Cone cone_from_rays(std::span<const IntVec> generators, std::size_t ambient) {
  std::vector<IntVec> prims;
  for (const IntVec& g : generators) {
    if (g.size() != ambient) throw std::invalid_argument("cone_from_rays: generator has wrong length");
    prims.push_back(primitive(g));
  }
  sort_rays(prims);

  std::vector<RatVec> gens;
  for (const IntVec& g : prims) gens.push_back(to_rat(g));
  ConeHRep h = cone_hrep(gens, ambient);

  RatMatrix lineality;
  for (const IntVec& e : h.equations) lineality.push_back(to_rat(e));
  for (const IntVec& f : h.facet_normals) lineality.push_back(to_rat(f));
  if (!kernel_basis(lineality, ambient).empty()) throw std::invalid_argument("cone not strictly convex");

  Cone c;
  c.ambient_ = ambient;
  c.dim_ = h.dim;
  for (const IntVec& g : prims) {
    RatMatrix tight;
    for (const IntVec& e : h.equations) tight.push_back(to_rat(e));
    for (const IntVec& f : h.facet_normals) {
      if (dot(f, g) == 0) tight.push_back(to_rat(f));
    }
    if (rank(tight, ambient) + 1 == ambient) c.rays_.push_back(g);
  }
  c.facet_normals_ = std::move(h.facet_normals);
  c.equations_ = std::move(h.equations);
  return c;
}

Cone cone_from_rays(std::span<const IntVec> generators) {
  if (generators.empty()) throw std::invalid_argument("cone_from_rays: no generators");
  return cone_from_rays(generators, generators.front().size());
}

Cone cone_from_rays(std::initializer_list<IntVec> generators) {
  return cone_from_rays(std::span<const IntVec>(generators.begin(), generators.size()));
}

Cone dual_cone(const Cone& c) {
  if (!c.full_dimensional()) throw std::invalid_argument("dual_cone: cone is not full-dimensional");
  std::vector<IntVec> rays = cone_extreme_rays(c.rays(), {}, c.ambient());
  return cone_from_rays(rays, c.ambient());
}

bool cone_contains(const Cone& c, const RatVec& v) {
  if (v.size() != c.ambient()) throw std::invalid_argument("cone_contains: dimension mismatch");
  for (const IntVec& e : c.equations()) {
    if (dot(e, v) != 0) return false;
  }
  for (const IntVec& f : c.facet_normals()) {
    if (dot(f, v) < 0) return false;
  }
  return true;
}

bool cone_contains(const Cone& c, const IntVec& v) { return cone_contains(c, to_rat(v)); }

bool cone_contains(const Cone& outer, const Cone& inner) {
  return std::all_of(inner.rays().begin(), inner.rays().end(),
                     [&](const IntVec& r) { return cone_contains(outer, r); });
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: dimension mismatch");
  std::vector<IntVec> ineqs = a.facet_normals();
  ineqs.insert(ineqs.end(), b.facet_normals().begin(), b.facet_normals().end());
  std::vector<IntVec> eqs = a.equations();
  eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
  return cone_from_rays(cone_extreme_rays(ineqs, eqs, a.ambient()), a.ambient());
}

Cone smallest_face_containing(const Cone& c, std::span<const IntVec> points) {
  std::vector<const IntVec*> tight;
  for (const IntVec& f : c.facet_normals()) {
    bool vanishes = std::all_of(points.begin(), points.end(), [&](const IntVec& p) { return dot(f, p) == 0; });
    if (vanishes) tight.push_back(&f);
  }
  std::vector<IntVec> rays;
  for (const IntVec& r : c.rays()) {
    bool on = std::all_of(tight.begin(), tight.end(), [&](const IntVec* f) { return dot(*f, r) == 0; });
    if (on) rays.push_back(r);
  }
  return cone_from_rays(rays, c.ambient());
}

bool is_face(const Cone& face, const Cone& c) {
  if (face.ambient() != c.ambient() || !cone_contains(c, face)) return false;
  return smallest_face_containing(c, face.rays()) == face;
}

std::vector<Cone> triangulate(const Cone& c) {
  if (c.simplicial()) return {c};
  const IntVec& apex = c.rays().front();
  std::vector<Cone> out;
  for (const IntVec& f : c.facet_normals()) {
    if (dot(f, apex) == 0) continue;
    std::vector<IntVec> facet_rays;
    for (const IntVec& r : c.rays()) {
      if (dot(f, r) == 0) facet_rays.push_back(r);
    }
    for (const Cone& s : triangulate(cone_from_rays(facet_rays, c.ambient()))) {
      std::vector<IntVec> rays = s.rays();
      rays.push_back(apex);
      out.push_back(cone_from_rays(rays, c.ambient()));
    }
  }
  return out;
}

Rat normalized_volume(const Cone& c, const IntVec& height, std::span<const std::size_t> coords) {
  if (coords.size() != c.dim()) throw std::invalid_argument("normalized_volume: coordinate count must equal dim");
  Rat total = 0;
  for (const Cone& s : triangulate(c)) {
    RatMatrix m;
    for (const IntVec& r : s.rays()) {
      Int h = dot(height, r);
      if (h <= 0) throw std::invalid_argument("normalized_volume: height not positive on a ray");
      RatVec row;
      for (std::size_t k : coords) row.push_back(Rat(r[k], h));
      for (Rat& x : row) x.canonicalize();
      m.push_back(std::move(row));
    }
    total += abs(determinant(std::move(m)));
  }
  return total;
}

IntVec positive_functional(const Cone& c) {
  IntVec sum(c.ambient(), Int(0));
  for (const IntVec& f : c.facet_normals()) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += f[i];
  }
  return primitive(sum);
}

bool cone_less(const Cone& a, const Cone& b) {
  return std::lexicographical_compare(a.rays().begin(), a.rays().end(), b.rays().begin(), b.rays().end(),
                                      [](const IntVec& x, const IntVec& y) { return lex_less(x, y); });
}

Fan::Fan(std::vector<Cone> maximal_cones, std::size_t ambient)
    : cones_(std::move(maximal_cones)), ambient_(ambient) {
  for (const Cone& c : cones_) {
    if (c.ambient() != ambient_) throw std::invalid_argument("fan: cone has wrong ambient rank");
  }
  std::sort(cones_.begin(), cones_.end(), cone_less);
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    for (std::size_t j = i + 1; j < cones_.size(); ++j) {
      const Cone& a = cones_[i];
      const Cone& b = cones_[j];
      if (cone_contains(a, b) || cone_contains(b, a)) {
        throw std::invalid_argument("fan: a maximal cone lies inside another");
      }
      Cone common = intersect(a, b);
      if (!is_face(common, a) || !is_face(common, b)) {
        throw std::invalid_argument("fan: two cones do not meet in a common face");
      }
    }
  }
}

std::vector<IntVec> Fan::rays() const {
  std::vector<IntVec> out;
  for (const Cone& c : cones_) out.insert(out.end(), c.rays().begin(), c.rays().end());
  sort_rays(out);
  return out;
}

bool refines(const Fan& fine, const Fan& coarse) {
  if (fine.ambient() != coarse.ambient()) return false;
  for (const Cone& f : fine.maximal_cones()) {
    bool inside = std::any_of(coarse.maximal_cones().begin(), coarse.maximal_cones().end(),
                              [&](const Cone& c) { return cone_contains(c, f); });
    if (!inside) return false;
  }
  // Equal supports: each coarse cone is exactly covered by the fine cones of
  // the same dimension inside it, measured on a common cross-section.
  for (const Cone& c : coarse.maximal_cones()) {
    if (c.dim() == 0) continue;
    IntVec height = positive_functional(c);
    RatMatrix span;
    for (const IntVec& r : c.rays()) span.push_back(to_rat(r));
    std::vector<std::size_t> coords = row_echelon(span, c.ambient()).pivots;
    Rat covered = 0;
    for (const Cone& f : fine.maximal_cones()) {
      if (f.dim() == c.dim() && cone_contains(c, f)) covered += normalized_volume(f, height, coords);
    }
    if (covered != normalized_volume(c, height, coords)) return false;
  }
  return true;
}

bool fan_equal(const Fan& a, const Fan& b) { return a == b; }

Fan star_subdivision(const Fan& f, const IntVec& ray) {
  IntVec v = primitive(ray);
  if (v.size() != f.ambient()) throw std::invalid_argument("star_subdivision: dimension mismatch");
  bool in_support = std::any_of(f.maximal_cones().begin(), f.maximal_cones().end(),
                                [&](const Cone& c) { return cone_contains(c, v); });
  if (!in_support) throw std::invalid_argument("star_subdivision: ray is outside the support of the fan");

  std::vector<Cone> cones;
  for (const Cone& c : f.maximal_cones()) {
    if (!cone_contains(c, v)) {
      cones.push_back(c);
      continue;
    }
    for (const IntVec& normal : c.facet_normals()) {
      if (dot(normal, v) == 0) continue;
      std::vector<IntVec> gens;
      for (const IntVec& r : c.rays()) {
        if (dot(normal, r) == 0) gens.push_back(r);
      }
      gens.push_back(v);
      cones.push_back(cone_from_rays(gens, f.ambient()));
    }
  }
  std::sort(cones.begin(), cones.end(), cone_less);
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  return Fan(std::move(cones), f.ambient());
}

std::vector<std::size_t> cones_inside(const Fan& f, const Cone& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) {
    if (cone_contains(c, f.maximal_cones()[i])) out.push_back(i);
  }
  return out;
}

Fan restrict_to(const Fan& f, const Cone& c) {
  std::vector<Cone> cones;
  for (std::size_t i : cones_inside(f, c)) cones.push_back(f.maximal_cones()[i]);
  return Fan(std::move(cones), f.ambient());
}

}  // namespace pullfan
