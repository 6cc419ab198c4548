#pragma once

// Newton polyhedra of monomial ideals and their inward normal fans.

#include <vector>

#include "pullfan/cartier.hpp"
#include "pullfan/fans.hpp"
#include "pullfan/polyhedra.hpp"

namespace pullfan {

// conv(generators) + dual(ambient).
struct NewtonPolyhedron {
  std::vector<IntVec> generators;
  Cone ambient;
  std::vector<IntVec> vertices;  // lexicographic order
  Cone recession;                // dual(ambient)
};

// Throws std::invalid_argument for an empty generator list or an ambient cone
// that is not full-dimensional.
NewtonPolyhedron newton(const MonomialIdealData& ideal);

HPolyhedron newton_hrep(const NewtonPolyhedron& np);

// Exact membership, decided by feasibility against the generators.
bool newton_contains(const NewtonPolyhedron& np, const RatVec& x);

// For each vertex g, the cone {v in ambient : <g,v> <= <g',v> for all
// vertices g'}.
Fan normal_fan(const NewtonPolyhedron& np);

// Minimal generators of the integral closure, in lexicographic order. Only for
// smooth ambient cones (simplicial with unimodular rays); throws
// std::invalid_argument("unsupported ambient for minimal generators")
// otherwise.
std::vector<IntVec> integral_closure_generators(const MonomialIdealData& ideal);

// For every maximal cone of delta, the normal fan of its ideal's Newton
// polyhedron equals the part of sigma inside that cone.
bool verify_blowup(const Fan& sigma, const Fan& delta, const std::vector<MonomialIdealData>& ideals);

}  // namespace pullfan
