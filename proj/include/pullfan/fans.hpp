#pragma once

// Pointed rational polyhedral cones and fans of them.

#include <cstddef>
#include <span>
#include <vector>

#include "pullfan/exactq.hpp"

namespace pullfan {

// A strictly convex rational polyhedral cone, stored canonically by its
// primitive extreme rays (sorted in decreasing lexicographic order) together
// with its inward facet normals and, when it is not full-dimensional, the
// equations of its linear span.
class Cone {
 public:
  const std::vector<IntVec>& rays() const { return rays_; }
  const std::vector<IntVec>& facet_normals() const { return facet_normals_; }
  const std::vector<IntVec>& equations() const { return equations_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == ambient_; }
  bool simplicial() const { return rays_.size() == dim_; }

  bool has_ray(const IntVec& ray) const;

  // Equality of pointed cones is equality of their extreme-ray sets.
  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_ == b.ambient_ && a.rays_ == b.rays_;
  }

 private:
  friend Cone cone_from_rays(std::span<const IntVec> generators, std::size_t ambient);

  std::vector<IntVec> rays_;
  std::vector<IntVec> facet_normals_;
  std::vector<IntVec> equations_;
  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
};

// Canonical cone generated by `generators`. Redundant generators are dropped.
// Throws std::domain_error for a zero generator and std::invalid_argument
// ("cone not strictly convex") when the cone contains a line.
Cone cone_from_rays(std::span<const IntVec> generators);

// As above; an empty generator list gives the zero cone in `ambient`.
Cone cone_from_rays(std::span<const IntVec> generators, std::size_t ambient);

Cone cone_from_rays(std::initializer_list<IntVec> generators);

// {m : <m,v> >= 0 for all v in c}. Requires c full-dimensional (otherwise the
// dual is not pointed) and throws std::invalid_argument if it is not.
Cone dual_cone(const Cone& c);

bool cone_contains(const Cone& c, const RatVec& v);
bool cone_contains(const Cone& c, const IntVec& v);
bool cone_contains(const Cone& outer, const Cone& inner);

Cone intersect(const Cone& a, const Cone& b);

// True when `face` is a face of `c`: the smallest face of c containing it is
// generated by exactly the same rays.
bool is_face(const Cone& face, const Cone& c);

// The face of c cut out by every facet of c that vanishes on all of `points`.
Cone smallest_face_containing(const Cone& c, std::span<const IntVec> points);

// Decomposition of c into simplicial cones using only the rays of c.
std::vector<Cone> triangulate(const Cone& c);

// Sum of |det| over a triangulation of c, after scaling each ray v to
// v / <height, v>. Measured in the coordinates `coords`, which must map the
// span of c injectively. Requires <height, v> > 0 on every ray.
Rat normalized_volume(const Cone& c, const IntVec& height, std::span<const std::size_t> coords);

// A finite set of maximal cones in a common ambient space. The constructor
// checks that no cone lies inside another and that any two cones meet in a
// common face, and throws std::invalid_argument otherwise.
class Fan {
 public:
  Fan(std::vector<Cone> maximal_cones, std::size_t ambient);

  const std::vector<Cone>& maximal_cones() const { return cones_; }
  std::size_t ambient() const { return ambient_; }

  // Union of the rays of all maximal cones, decreasing lexicographic order.
  std::vector<IntVec> rays() const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.ambient_ == b.ambient_ && a.cones_ == b.cones_;
  }

 private:
  std::vector<Cone> cones_;
  std::size_t ambient_;
};

// Cones are ordered by their (decreasing) ray lists, compared lexicographically.
bool cone_less(const Cone& a, const Cone& b);

bool refines(const Fan& fine, const Fan& coarse);
bool fan_equal(const Fan& a, const Fan& b);

// Each maximal cone containing `ray` is replaced by the cones spanned by `ray`
// and the facets of that cone not containing it. Throws std::invalid_argument
// when the ray is not in the support of f.
Fan star_subdivision(const Fan& f, const IntVec& ray);

// Indices of the maximal cones of f contained in c.
std::vector<std::size_t> cones_inside(const Fan& f, const Cone& c);

// The maximal cones of f contained in c, as a fan.
Fan restrict_to(const Fan& f, const Cone& c);

// <height, v> > 0 on every ray of c: the primitive sum of its facet normals.
IntVec positive_functional(const Cone& c);

}  // namespace pullfan
