#pragma once

// Support functions, Cartier data and the monomial ideals they define.
//
// Two routes lead to Cartier data {m_sigma}, one integral M-vector per maximal
// cone of a subdivision Sigma of Delta:
//   * from the heights of a pulling subdivision, by solving for the linear
//     functional on each cone and clearing denominators;
//   * from the fan alone, by solving the linear system that asks the m_sigma
//     to agree on shared rays, to be strictly smaller than their neighbours'
//     on their own rays, and to be nonnegative on the enclosing Delta cone.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pullfan/exactq.hpp"
#include "pullfan/fans.hpp"
#include "pullfan/pulling.hpp"

namespace pullfan {

// Raised when no strictly convex support function exists on a subdivision.
class NotCoherentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SupportFunction {
  Fan fan;
  std::vector<RatVec> functionals;  // u_sigma, aligned with fan.maximal_cones()

  // min over the u_sigma; v must lie in the support of the fan.
  Rat evaluate(const RatVec& v) const;
};

struct CartierData {
  Fan fan;
  std::vector<IntVec> m;  // aligned with fan.maximal_cones()
  Int multiplier = 1;     // m_sigma = multiplier * u_sigma when from a SupportFunction
};

// Exponent data of a torus-invariant monomial ideal on the affine chart of
// `ambient`. With `closure` set the ideal meant is the integral closure of the
// one generated.
struct MonomialIdealData {
  Cone ambient;
  std::vector<IntVec> generators;
  bool closure = true;
};

// Validates generators against the ambient: each must pair nonnegatively with
// every ray. Throws std::invalid_argument otherwise.
MonomialIdealData make_ideal(Cone ambient, std::vector<IntVec> generators, bool closure);

SupportFunction support_from_heights(const ConicalSubdivision& sub);

CartierData integralize(const SupportFunction& sf);

// Solves the strict-convexity system relative to each maximal cone of Delta.
// Throws std::invalid_argument unless Sigma refines Delta and
// NotCoherentError when the system is infeasible.
CartierData cartier_from_subdivision(const Fan& sigma, const Fan& delta);

// The system solved by cartier_from_subdivision, with unknowns
// m_0[0..n), m_1[0..n), ... for the maximal cones of Sigma in order.
LinSystem cartier_system(const Fan& sigma, const Fan& delta);

// One ideal per maximal cone of Delta, generated by the m_sigma of the Sigma
// cones inside it (deduplicated, first-seen order).
std::vector<MonomialIdealData> ideal_from_cartier(const CartierData& cd, const Fan& delta);

// Index of the first maximal cone of delta containing c, or throws.
std::size_t enclosing_cone(const Fan& delta, const Cone& c);

}  // namespace pullfan
