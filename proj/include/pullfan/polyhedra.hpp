#pragma once

// Polytopes and polyhedra in vertex and halfspace form.
//
// Facet enumeration is exhaustive: every candidate hyperplane through an
// independent subset of generators is tried and kept if it supports the set.
// That is exponential in the dimension but exact, and the inputs this library
// handles have rank at most five.

#include <cstddef>
#include <span>
#include <vector>

#include "pullfan/exactq.hpp"

namespace pullfan {

// <normal, x> <= offset, with gcd(normal, offset) = 1.
struct HalfSpace {
  IntVec normal;
  Int offset;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

// <normal, x> = rhs.
struct AffineEquation {
  IntVec normal;
  Int rhs;

  friend bool operator==(const AffineEquation&, const AffineEquation&) = default;
};

// Intersection of halfspaces and affine equations. When equations are present
// each halfspace is stored reduced modulo them (pivot coordinates of the
// equations' echelon form are zero), which makes the representation unique.
struct HPolyhedron {
  std::size_t ambient = 0;
  std::vector<HalfSpace> halfspaces;     // sorted by (normal, offset)
  std::vector<AffineEquation> equations; // echelon basis, primitive rows

  std::size_t dim() const { return ambient - equations.size(); }

  friend bool operator==(const HPolyhedron&, const HPolyhedron&) = default;
};

// H-description of a polyhedral cone {x : <f,x> >= 0 for f in facets,
// <e,x> = 0 for e in equations}.
struct ConeHRep {
  std::size_t ambient = 0;
  std::size_t dim = 0;
  std::vector<IntVec> facet_normals;  // inward, primitive, reduced, sorted
  std::vector<IntVec> equations;      // echelon basis of span(generators)^perp
};

// Facets of the cone generated by `generators` (zero vectors are ignored).
ConeHRep cone_hrep(std::span<const RatVec> generators, std::size_t ambient);

// Extreme rays of the pointed cone {x : <f,x> >= 0, <e,x> = 0}, primitive and
// sorted in decreasing lexicographic order. Throws std::invalid_argument when
// the cone contains a line.
std::vector<IntVec> cone_extreme_rays(std::span<const IntVec> inequalities,
                                      std::span<const IntVec> equations,
                                      std::size_t ambient);

// Irredundant facet description of conv(points), with affine-hull equations
// when the hull is not full-dimensional.
HPolyhedron facets(std::span<const RatVec> points);

// H-description of conv(points) + cone(rays).
HPolyhedron polyhedron_hrep(std::span<const RatVec> points, std::span<const RatVec> rays);

// Vertices of a bounded HPolyhedron, sorted lexicographically.
std::vector<RatVec> polytope_vertices(const HPolyhedron& poly);

// Exact membership x in conv(points) + cone(rays), decided by a feasibility
// problem rather than a facet description.
bool in_hull(std::span<const RatVec> points, std::span<const RatVec> rays, const RatVec& x);

// The vertices of conv(points): points not in the hull of the others, with
// duplicates removed, sorted lexicographically.
std::vector<RatVec> hull_vertices(std::span<const RatVec> points);

// Cells of the upper hull of lifted points (last coordinate = height): the
// facets of conv(lifted) whose outward normal has positive last coordinate,
// each given as the sorted indices of the input points lying on it. When the
// heights are affine on the projected points the single cell is every point.
// Throws std::invalid_argument on empty or ragged input.
std::vector<std::vector<std::size_t>> upper_hull(std::span<const RatVec> lifted);

bool contains(const HPolyhedron& poly, const RatVec& x);

// Integer points of the box [lo, hi] inside `filter`, in lexicographic order.
std::vector<IntVec> lattice_points_in_box(const IntVec& lo, const IntVec& hi,
                                          const HPolyhedron& filter);

// True when <a,x> <= b describes the same halfspace as `h` on the affine
// subspace cut out by `equations`, i.e. (a,b) is a positive multiple of h
// plus a combination of the equations.
bool same_halfspace_on(const HalfSpace& h, const IntVec& a, const Int& b,
                       std::span<const AffineEquation> equations);

// Lexicographic comparisons used for canonical orders.
bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

}  // namespace pullfan
