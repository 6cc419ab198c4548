#include "pullfan/polyhedra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace pullfan {

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Int& x, const Int& y) { return cmp(x, y) < 0; });
}

bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rat& x, const Rat& y) { return cmp(x, y) < 0; });
}

namespace {

struct IntVecLess {
  bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RatVec unit(std::size_t n, std::size_t i) {
  RatVec e(n);
  e[i] = 1;
  return e;
}

IntVec negated(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

std::vector<AffineEquation> affine_equations_from_homogeneous(const std::vector<IntVec>& eqs,
                                                              std::size_t n) {
  std::vector<AffineEquation> out;
  for (const IntVec& e : eqs) {
    AffineEquation eq;
    eq.normal.assign(e.begin(), e.begin() + static_cast<long>(n));
    eq.rhs = -e[n];
    out.push_back(std::move(eq));
  }
  return out;
}

// Facets of the homogenized cone become halfspaces of the dehomogenized
// polyhedron; the facet at infinity (zero normal) is dropped.
HPolyhedron dehomogenize(const ConeHRep& h, std::size_t n) {
  HPolyhedron poly;
  poly.ambient = n;
  poly.equations = affine_equations_from_homogeneous(h.equations, n);
  for (const IntVec& f : h.facet_normals) {
    HalfSpace hs;
    hs.normal.reserve(n);
    for (std::size_t i = 0; i < n; ++i) hs.normal.push_back(-f[i]);
    hs.offset = f[n];
    if (is_zero(hs.normal)) continue;
    poly.halfspaces.push_back(std::move(hs));
  }
  std::sort(poly.halfspaces.begin(), poly.halfspaces.end(), [](const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal) return lex_less(a.normal, b.normal);
    return a.offset < b.offset;
  });
  return poly;
}

}  // namespace

ConeHRep cone_hrep(std::span<const RatVec> generators, std::size_t ambient) {
  RatMatrix gens;
  for (const RatVec& g : generators) {
    if (g.size() != ambient) throw std::invalid_argument("cone_hrep: generator has wrong length");
    if (!is_zero(g)) gens.push_back(g);
  }

  ConeHRep out;
  out.ambient = ambient;

  // span(gens)^perp, in echelon form.
  RowEchelon perp = row_echelon(kernel_basis(gens, ambient), ambient);
  for (const RatVec& row : perp.rows) out.equations.push_back(primitive(row));
  out.dim = ambient - perp.pivots.size();
  if (out.dim == 0) return out;

  // Facet normals are taken from the complement of span(gens)^perp in which
  // the pivot coordinates vanish; this is the reduced representative.
  std::set<IntVec, IntVecLess> found;
  for_each_subset(gens.size(), out.dim - 1, [&](const std::vector<std::size_t>& subset) {
    RatMatrix rows;
    for (std::size_t i : subset) rows.push_back(gens[i]);
    for (std::size_t p : perp.pivots) rows.push_back(unit(ambient, p));
    std::vector<RatVec> ker = kernel_basis(rows, ambient);
    if (ker.size() != 1) return;
    const RatVec& f = ker.front();
    bool pos = false, neg = false;
    for (const RatVec& g : gens) {
      int s = sgn(dot(f, g));
      pos = pos || s > 0;
      neg = neg || s < 0;
    }
    if (pos && neg) return;
    IntVec normal = primitive(f);
    found.insert(neg ? negated(normal) : normal);
  });
  out.facet_normals.assign(found.begin(), found.end());
  return out;
}

std::vector<IntVec> cone_extreme_rays(std::span<const IntVec> inequalities,
                                      std::span<const IntVec> equations,
                                      std::size_t ambient) {
  RatMatrix eq_rows, all_rows, ineq_rows;
  for (const IntVec& e : equations) {
    if (e.size() != ambient) throw std::invalid_argument("cone_extreme_rays: wrong length");
    eq_rows.push_back(to_rat(e));
  }
  for (const IntVec& f : inequalities) {
    if (f.size() != ambient) throw std::invalid_argument("cone_extreme_rays: wrong length");
    ineq_rows.push_back(to_rat(f));
  }
  all_rows = eq_rows;
  all_rows.insert(all_rows.end(), ineq_rows.begin(), ineq_rows.end());
  if (!kernel_basis(all_rows, ambient).empty()) {
    throw std::invalid_argument("cone not strictly convex");
  }

  const std::size_t eq_rank = rank(eq_rows, ambient);
  if (eq_rank >= ambient) return {};
  const std::size_t need = ambient - 1 - eq_rank;

  std::set<IntVec, IntVecLess> found;
  for_each_subset(ineq_rows.size(), need, [&](const std::vector<std::size_t>& subset) {
    RatMatrix rows = eq_rows;
    for (std::size_t i : subset) rows.push_back(ineq_rows[i]);
    std::vector<RatVec> ker = kernel_basis(rows, ambient);
    if (ker.size() != 1) return;
    const RatVec& v = ker.front();
    bool pos = false, neg = false;
    for (const RatVec& f : ineq_rows) {
      int s = sgn(dot(f, v));
      pos = pos || s > 0;
      neg = neg || s < 0;
    }
    if (pos && neg) return;
    IntVec ray = primitive(v);
    found.insert(neg ? negated(ray) : ray);
  });
  std::vector<IntVec> rays(found.rbegin(), found.rend());
  return rays;
}

HPolyhedron facets(std::span<const RatVec> points) {
  if (points.empty()) throw std::invalid_argument("facets: no points");
  const std::size_t n = points.front().size();
  std::vector<RatVec> hom;
  for (const RatVec& p : points) {
    if (p.size() != n) throw std::invalid_argument("facets: ragged point set");
    RatVec h = p;
    h.push_back(1);
    hom.push_back(std::move(h));
  }
  return dehomogenize(cone_hrep(hom, n + 1), n);
}

HPolyhedron polyhedron_hrep(std::span<const RatVec> points, std::span<const RatVec> rays) {
  if (points.empty()) throw std::invalid_argument("polyhedron_hrep: no points");
  const std::size_t n = points.front().size();
  std::vector<RatVec> hom;
  for (const RatVec& p : points) {
    if (p.size() != n) throw std::invalid_argument("polyhedron_hrep: ragged input");
    RatVec h = p;
    h.push_back(1);
    hom.push_back(std::move(h));
  }
  for (const RatVec& r : rays) {
    if (r.size() != n) throw std::invalid_argument("polyhedron_hrep: ragged input");
    RatVec h = r;
    h.push_back(0);
    hom.push_back(std::move(h));
  }
  return dehomogenize(cone_hrep(hom, n + 1), n);
}

std::vector<RatVec> polytope_vertices(const HPolyhedron& poly) {
  const std::size_t n = poly.ambient;
  RatMatrix eq_rows;
  RatVec eq_rhs;
  for (const AffineEquation& e : poly.equations) {
    eq_rows.push_back(to_rat(e.normal));
    eq_rhs.emplace_back(e.rhs);
  }
  const std::size_t eq_rank = rank(eq_rows, n);
  const std::size_t need = n - eq_rank;

  std::set<RatVec, RatVecLess> found;
  for_each_subset(poly.halfspaces.size(), need, [&](const std::vector<std::size_t>& subset) {
    RatMatrix rows = eq_rows;
    RatVec rhs = eq_rhs;
    for (std::size_t i : subset) {
      rows.push_back(to_rat(poly.halfspaces[i].normal));
      rhs.emplace_back(poly.halfspaces[i].offset);
    }
    if (rows.empty()) {
      // Zero-dimensional ambient space: the single point.
      if (n == 0) found.insert(RatVec{});
      return;
    }
    auto sol = solve_linear(rows, rhs);
    if (!sol || !sol->kernel.empty()) return;
    if (contains(poly, sol->particular)) found.insert(sol->particular);
  });
  return {found.begin(), found.end()};
}

bool in_hull(std::span<const RatVec> points, std::span<const RatVec> rays, const RatVec& x) {
  const std::size_t n = x.size();
  const std::size_t np = points.size(), nr = rays.size();
  const std::size_t vars = np + nr;
  LinSystem sys(vars);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row(vars);
    for (std::size_t j = 0; j < np; ++j) row[j] = points[j].at(i);
    for (std::size_t j = 0; j < nr; ++j) row[np + j] = rays[j].at(i);
    sys.add_equality(std::move(row), x[i]);
  }
  if (np > 0) {
    RatVec sum(vars);
    for (std::size_t j = 0; j < np; ++j) sum[j] = 1;
    sys.add_equality(std::move(sum), 1);
  } else {
    // Pure cone membership; an empty cone holds only the origin.
    if (nr == 0) return is_zero(x);
  }
  for (std::size_t j = 0; j < vars; ++j) {
    RatVec row(vars);
    row[j] = -1;
    sys.add_weak(std::move(row), 0);
  }
  return fm_feasible(sys).has_value();
}

std::vector<RatVec> hull_vertices(std::span<const RatVec> points) {
  std::vector<RatVec> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), RatVecLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<RatVec> others;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.push_back(pts[j]);
    }
    if (others.empty() || !in_hull(others, {}, pts[i])) out.push_back(pts[i]);
  }
  return out;
}

std::vector<std::vector<std::size_t>> upper_hull(std::span<const RatVec> lifted) {
  if (lifted.empty()) throw std::invalid_argument("upper_hull: no points");
  const std::size_t n = lifted.front().size();
  if (n < 2) throw std::invalid_argument("upper_hull: points need a height coordinate");
  for (const RatVec& p : lifted) {
    if (p.size() != n) throw std::invalid_argument("upper_hull: ragged point set");
  }

  RatMatrix lifted_diffs, projected_diffs;
  for (const RatVec& p : lifted) {
    RatVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = p[i] - lifted.front()[i];
    RatVec dp(d.begin(), d.end() - 1);
    lifted_diffs.push_back(std::move(d));
    projected_diffs.push_back(std::move(dp));
  }
  if (rank(lifted_diffs, n) == rank(projected_diffs, n - 1)) {
    std::vector<std::size_t> all(lifted.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return {all};
  }

  HPolyhedron hull = facets(lifted);
  std::vector<std::vector<std::size_t>> cells;
  for (const HalfSpace& h : hull.halfspaces) {
    if (h.normal.back() <= 0) continue;
    std::vector<std::size_t> cell;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      if (dot(h.normal, lifted[i]) == Rat(h.offset)) cell.push_back(i);
    }
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

bool contains(const HPolyhedron& poly, const RatVec& x) {
  if (x.size() != poly.ambient) throw std::invalid_argument("contains: dimension mismatch");
  for (const AffineEquation& e : poly.equations) {
    if (dot(e.normal, x) != Rat(e.rhs)) return false;
  }
  for (const HalfSpace& h : poly.halfspaces) {
    if (dot(h.normal, x) > Rat(h.offset)) return false;
  }
  return true;
}

std::vector<IntVec> lattice_points_in_box(const IntVec& lo, const IntVec& hi,
                                          const HPolyhedron& filter) {
  if (lo.size() != hi.size()) throw std::invalid_argument("lattice_points_in_box: dimension mismatch");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) throw std::invalid_argument("lattice_points_in_box: lo > hi");
  }
  std::vector<IntVec> out;
  IntVec cur = lo;
  while (true) {
    if (contains(filter, to_rat(cur))) out.push_back(cur);
    std::size_t i = cur.size();
    while (i > 0 && cur[i - 1] == hi[i - 1]) {
      cur[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

bool same_halfspace_on(const HalfSpace& h, const IntVec& a, const Int& b,
                       std::span<const AffineEquation> equations) {
  const std::size_t n = h.normal.size();
  if (a.size() != n) return false;
  RatMatrix rows;
  for (const AffineEquation& e : equations) {
    RatVec row = to_rat(e.normal);
    row.emplace_back(e.rhs);
    rows.push_back(std::move(row));
  }
  RowEchelon ech = row_echelon(std::move(rows), n + 1);
  RatVec lhs = to_rat(h.normal);
  lhs.emplace_back(h.offset);
  RatVec rhs = to_rat(a);
  rhs.emplace_back(b);
  lhs = reduce_modulo(ech, std::move(lhs));
  rhs = reduce_modulo(ech, std::move(rhs));
  auto it = std::find_if(lhs.begin(), lhs.end(), [](const Rat& x) { return x != 0; });
  if (it == lhs.end()) return false;
  const std::size_t k = static_cast<std::size_t>(it - lhs.begin());
  if (rhs[k] == 0) return false;
  Rat factor = rhs[k] / lhs[k];
  if (factor <= 0) return false;
  for (std::size_t i = 0; i <= n; ++i) {
    if (rhs[i] != factor * lhs[i]) return false;
  }
  return true;
}

}  // namespace pullfan
