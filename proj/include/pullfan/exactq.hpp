#pragma once

// Exact rational scalars, vectors and matrices, plus the two linear solvers the
// rest of the library is built on: Gaussian elimination for equation systems
// and Fourier-Motzkin elimination for mixed equality / weak / strict systems.
//
// Everything here is a value type or a pure function. There is no floating
// point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pullfan {

using Int = mpz_class;
using Rat = mpq_class;

// Coordinate vectors. Whether a vector lives in N (rays, points) or in the
// dual M (functionals) is a matter of how it is used, not of its type.
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Row-major.
using RatMatrix = std::vector<RatVec>;

Rat make_rat(long num, long den = 1);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text or
// a zero denominator.
Rat parse_rat(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rat& value);
std::string to_string(const Int& value);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

IntVec int_vec(std::initializer_list<long> values);
RatVec to_rat(const IntVec& v);
RatVec to_rat(std::initializer_list<long> values);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);

RatVec scaled(const RatVec& v, const Rat& factor);
RatVec added(const RatVec& a, const RatVec& b);

// The integer vector with coprime entries on the ray R>=0 * v.
// Throws std::domain_error("zero has no direction") for the zero vector.
IntVec primitive(const RatVec& v);
IntVec primitive(const IntVec& v);

struct ScaledIntVec {
  IntVec vec;   // scale * v
  Int scale;    // least positive integer making scale * v integral
};

ScaledIntVec clear_denominators(const RatVec& v);

// Reduced row echelon form. Pivots are chosen as the first nonzero entry when
// scanning columns left to right and rows top to bottom.
struct RowEchelon {
  RatMatrix rows;               // nonzero rows only, pivot entries equal 1
  std::vector<std::size_t> pivots;
  std::size_t cols = 0;
};

RowEchelon row_echelon(RatMatrix a, std::size_t cols);

std::size_t rank(const RatMatrix& a, std::size_t cols);

// Determinant of a square matrix.
Rat determinant(RatMatrix m);

// Basis of {x : a x = 0}, one vector per non-pivot column (that column set to
// one). Empty when the kernel is trivial.
std::vector<RatVec> kernel_basis(const RatMatrix& a, std::size_t cols);

// Representative of v modulo the row space of `basis`: the pivot coordinates
// are eliminated, so two vectors congruent modulo the row space reduce to the
// same vector.
RatVec reduce_modulo(const RowEchelon& basis, RatVec v);

struct LinearSolution {
  RatVec particular;             // free variables set to zero
  std::vector<RatVec> kernel;
};

// Solves a x = b exactly. Returns std::nullopt when inconsistent.
// Throws std::invalid_argument when row lengths disagree with b or each other.
std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatVec& b);

struct LinearConstraint {
  RatVec coeffs;
  Rat rhs;
};

// A conjunction of  <a,x> = b,  <a,x> <= b  and  <a,x> < b  over num_vars
// rational unknowns.
class LinSystem {
 public:
  explicit LinSystem(std::size_t num_vars) : num_vars_(num_vars) {}

  void add_equality(RatVec coeffs, Rat rhs);
  void add_weak(RatVec coeffs, Rat rhs);
  void add_strict(RatVec coeffs, Rat rhs);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<LinearConstraint>& equalities() const { return equalities_; }
  const std::vector<LinearConstraint>& weak() const { return weak_; }
  const std::vector<LinearConstraint>& strict() const { return strict_; }

  // Exact substitution check of every constraint.
  bool satisfied_by(const RatVec& x) const;

 private:
  void check_width(const RatVec& coeffs) const;

  std::size_t num_vars_;
  std::vector<LinearConstraint> equalities_;
  std::vector<LinearConstraint> weak_;
  std::vector<LinearConstraint> strict_;
};

// Feasibility by Fourier-Motzkin elimination.
//
// Equalities are eliminated first by substitution (row echelon form), then the
// remaining free variables are eliminated in increasing index order. The
// witness is built by back-substitution, taking for each variable
//   the midpoint of its interval when bounded on both sides,
//   lower + 1 when bounded only below,
//   upper - 1 when bounded only above,
//   0 when unbounded,
// so the output is a deterministic function of the system.
std::optional<RatVec> fm_feasible(const LinSystem& sys);

// Same algorithm run on the system with its variables permuted: variable
// order[i] of `sys` becomes variable i. The returned point is in the original
// coordinates.
std::optional<RatVec> fm_feasible(const LinSystem& sys,
                                  std::span<const std::size_t> order);

}  // namespace pullfan
