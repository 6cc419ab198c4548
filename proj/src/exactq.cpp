#include "pullfan/exactq.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pullfan {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

Int parse_int(std::string_view s) {
  if (!is_integer_text(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const IntVec& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i].get_str();
  out << ')';
  return out.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << to_string(v[i]);
  out << ')';
  return out.str();
}

IntVec int_vec(std::initializer_list<long> values) {
  IntVec out;
  out.reserve(values.size());
  for (long x : values) out.emplace_back(x);
  return out;
}

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

RatVec to_rat(std::initializer_list<long> values) {
  RatVec out;
  out.reserve(values.size());
  for (long x : values) out.emplace_back(x);
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Rat dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += Rat(a[i]) * b[i];
  return sum;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

RatVec scaled(const RatVec& v, const Rat& factor) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

RatVec added(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("added: length mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

ScaledIntVec clear_denominators(const RatVec& v) {
  Int k = 1;
  for (const Rat& x : v) {
    Int den = x.get_den();
    mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), den.get_mpz_t());
  }
  IntVec out;
  out.reserve(v.size());
  for (const Rat& x : v) out.emplace_back(x.get_num() * (k / x.get_den()));
  return {std::move(out), k};
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) throw std::domain_error("zero has no direction");
  IntVec out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x / g);
  return out;
}

IntVec primitive(const RatVec& v) { return primitive(clear_denominators(v).vec); }

RowEchelon row_echelon(RatMatrix a, std::size_t cols) {
  for (const RatVec& row : a) {
    if (row.size() != cols) throw std::invalid_argument("row_echelon: ragged matrix");
  }
  RowEchelon out;
  out.cols = cols;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < a.size(); ++c) {
    std::size_t pivot = next;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[next], a[pivot]);
    Rat inv = 1 / a[next][c];
    for (Rat& x : a[next]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == next || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[next][j];
    }
    out.pivots.push_back(c);
    ++next;
  }
  a.resize(next);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RatMatrix& a, std::size_t cols) {
  return row_echelon(a, cols).pivots.size();
}

Rat determinant(RatMatrix m) {
  const std::size_t n = m.size();
  for (const RatVec& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant: matrix is not square");
  }
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

std::vector<RatVec> kernel_basis(const RatMatrix& a, std::size_t cols) {
  RowEchelon ech = row_echelon(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec k(cols);
    k[f] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) k[ech.pivots[r]] = -ech.rows[r][f];
    basis.push_back(std::move(k));
  }
  return basis;
}

RatVec reduce_modulo(const RowEchelon& basis, RatVec v) {
  if (v.size() != basis.cols) throw std::invalid_argument("reduce_modulo: length mismatch");
  for (std::size_t r = 0; r < basis.pivots.size(); ++r) {
    Rat f = v[basis.pivots[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis.rows[r][j];
  }
  return v;
}

std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  RatMatrix aug;
  aug.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != cols) throw std::invalid_argument("solve_linear: dimension mismatch");
    RatVec row = a[r];
    row.push_back(b[r]);
    aug.push_back(std::move(row));
  }
  RowEchelon ech = row_echelon(std::move(aug), cols + 1);
  if (!ech.pivots.empty() && ech.pivots.back() == cols) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(cols, Rat(0));
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) sol.particular[ech.pivots[r]] = ech.rows[r][cols];
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec k(cols);
    k[f] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) k[ech.pivots[r]] = -ech.rows[r][f];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

// ---------------------------------------------------------------------------
// LinSystem

void LinSystem::check_width(const RatVec& coeffs) const {
  if (coeffs.size() != num_vars_) throw std::invalid_argument("LinSystem: constraint width mismatch");
}

void LinSystem::add_equality(RatVec coeffs, Rat rhs) {
  check_width(coeffs);
  equalities_.push_back({std::move(coeffs), std::move(rhs)});
}

void LinSystem::add_weak(RatVec coeffs, Rat rhs) {
  check_width(coeffs);
  weak_.push_back({std::move(coeffs), std::move(rhs)});
}

void LinSystem::add_strict(RatVec coeffs, Rat rhs) {
  check_width(coeffs);
  strict_.push_back({std::move(coeffs), std::move(rhs)});
}

bool LinSystem::satisfied_by(const RatVec& x) const {
  if (x.size() != num_vars_) return false;
  for (const auto& c : equalities_) {
    if (dot(c.coeffs, x) != c.rhs) return false;
  }
  for (const auto& c : weak_) {
    if (dot(c.coeffs, x) > c.rhs) return false;
  }
  for (const auto& c : strict_) {
    if (dot(c.coeffs, x) >= c.rhs) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

struct Row {
  RatVec coeffs;
  Rat rhs;
  bool strict = false;
};

// Positive rescaling so the first nonzero coefficient has absolute value one.
// Returns false when every coefficient is zero.
bool normalize(Row& row) {
  auto it = std::find_if(row.coeffs.begin(), row.coeffs.end(), [](const Rat& x) { return x != 0; });
  if (it == row.coeffs.end()) return false;
  Rat scale = abs(*it);
  if (scale != 1) {
    for (Rat& x : row.coeffs) x /= scale;
    row.rhs /= scale;
  }
  return true;
}

bool trivially_true(const Row& row) { return row.strict ? (row.rhs > 0) : (row.rhs >= 0); }

bool tighter(const Row& a, const Row& b) { return a.rhs < b.rhs || (a.rhs == b.rhs && a.strict && !b.strict); }

struct CoeffLess {
  bool operator()(const RatVec& a, const RatVec& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rat& x, const Rat& y) { return cmp(x, y) < 0; });
  }
};

// One row per normalized coefficient vector: the tightest seen so far.
using RowPool = std::map<RatVec, Row, CoeffLess>;

// Adds `row` to the pool; returns false when it is an infeasible constant row.
bool insert_row(RowPool& pool, Row row) {
  if (!normalize(row)) return trivially_true(row);
  auto it = pool.find(row.coeffs);
  if (it == pool.end()) {
    RatVec key = row.coeffs;
    pool.emplace(std::move(key), std::move(row));
  } else if (tighter(row, it->second)) {
    it->second = std::move(row);
  }
  return true;
}

std::optional<RatVec> fm_solve(const LinSystem& sys) {
  const std::size_t n = sys.num_vars();

  // Equalities: express pivot variables through the free ones.
  RatMatrix eq_aug;
  for (const auto& c : sys.equalities()) {
    RatVec row = c.coeffs;
    row.push_back(c.rhs);
    eq_aug.push_back(std::move(row));
  }
  RowEchelon ech = row_echelon(std::move(eq_aug), n + 1);
  if (!ech.pivots.empty() && ech.pivots.back() == n) return std::nullopt;

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < n; ++j) {
    if (!is_pivot[j]) free_vars.push_back(j);
  }
  const std::size_t nf = free_vars.size();

  // Substitute into the inequalities: coefficients over the free variables.
  std::vector<Row> initial;
  auto substitute = [&](const LinearConstraint& c, bool strict) {
    Row row;
    row.strict = strict;
    row.rhs = c.rhs;
    row.coeffs.assign(nf, Rat(0));
    for (std::size_t k = 0; k < nf; ++k) row.coeffs[k] = c.coeffs[free_vars[k]];
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      const Rat& a = c.coeffs[ech.pivots[r]];
      if (a == 0) continue;
      row.rhs -= a * ech.rows[r][n];
      for (std::size_t k = 0; k < nf; ++k) row.coeffs[k] -= a * ech.rows[r][free_vars[k]];
    }
    initial.push_back(std::move(row));
  };
  for (const auto& c : sys.weak()) substitute(c, false);
  for (const auto& c : sys.strict()) substitute(c, true);

  RowPool pool;
  for (Row& row : initial) {
    if (!insert_row(pool, std::move(row))) return std::nullopt;
  }

  // stages[k] holds the system in which free variables 0..k-1 are eliminated.
  std::vector<std::vector<Row>> stages;
  stages.reserve(nf + 1);
  auto flush = [&]() {
    std::vector<Row> rows;
    rows.reserve(pool.size());
    for (auto& [key, row] : pool) rows.push_back(std::move(row));
    pool.clear();
    return rows;
  };
  stages.push_back(flush());

  for (std::size_t k = 0; k < nf; ++k) {
    const std::vector<Row>& cur = stages.back();
    std::vector<const Row*> upper, lower;
    for (const Row& row : cur) {
      if (row.coeffs[k] > 0) {
        upper.push_back(&row);
      } else if (row.coeffs[k] < 0) {
        lower.push_back(&row);
      } else if (!insert_row(pool, row)) {
        return std::nullopt;
      }
    }
    for (const Row* up : upper) {
      for (const Row* lo : lower) {
        Rat fu = -lo->coeffs[k];  // > 0
        Rat fl = up->coeffs[k];   // > 0
        Row comb;
        comb.coeffs.assign(nf, Rat(0));
        for (std::size_t j = 0; j < nf; ++j) comb.coeffs[j] = fu * up->coeffs[j] + fl * lo->coeffs[j];
        comb.coeffs[k] = 0;
        comb.rhs = fu * up->rhs + fl * lo->rhs;
        comb.strict = up->strict || lo->strict;
        if (!insert_row(pool, std::move(comb))) return std::nullopt;
      }
    }
    stages.push_back(flush());
  }

  // Back-substitution, last eliminated variable first.
  RatVec free_values(nf);
  for (std::size_t kk = nf; kk-- > 0;) {
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const Row& row : stages[kk]) {
      const Rat& a = row.coeffs[kk];
      if (a == 0) continue;
      Rat rest = row.rhs;
      for (std::size_t j = kk + 1; j < nf; ++j) rest -= row.coeffs[j] * free_values[j];
      Rat bound = rest / a;
      if (a > 0) {
        if (!hi || bound < *hi) {
          hi = bound;
          hi_strict = row.strict;
        } else if (bound == *hi) {
          hi_strict = hi_strict || row.strict;
        }
      } else {
        if (!lo || bound > *lo) {
          lo = bound;
          lo_strict = row.strict;
        } else if (bound == *lo) {
          lo_strict = lo_strict || row.strict;
        }
      }
    }
    Rat value;
    if (lo && hi) {
      if (*lo > *hi || (*lo == *hi && (lo_strict || hi_strict))) {
        throw std::logic_error("fm_feasible: empty interval during back-substitution");
      }
      value = (*lo + *hi) / 2;
    } else if (lo) {
      value = *lo + 1;
    } else if (hi) {
      value = *hi - 1;
    } else {
      value = 0;
    }
    free_values[kk] = value;
  }

  RatVec x(n);
  for (std::size_t k = 0; k < nf; ++k) x[free_vars[k]] = free_values[k];
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    Rat v = ech.rows[r][n];
    for (std::size_t k = 0; k < nf; ++k) v -= ech.rows[r][free_vars[k]] * free_values[k];
    x[ech.pivots[r]] = v;
  }
  if (!sys.satisfied_by(x)) throw std::logic_error("fm_feasible: witness fails substitution check");
  return x;
}

}  // namespace

std::optional<RatVec> fm_feasible(const LinSystem& sys) { return fm_solve(sys); }

std::optional<RatVec> fm_feasible(const LinSystem& sys, std::span<const std::size_t> order) {
  const std::size_t n = sys.num_vars();
  if (order.size() != n) throw std::invalid_argument("fm_feasible: order has wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t v : order) {
    if (v >= n || seen[v]) throw std::invalid_argument("fm_feasible: order is not a permutation");
    seen[v] = true;
  }
  auto permute = [&](const RatVec& c) {
    RatVec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = c[order[i]];
    return out;
  };
  LinSystem permuted(n);
  for (const auto& c : sys.equalities()) permuted.add_equality(permute(c.coeffs), c.rhs);
  for (const auto& c : sys.weak()) permuted.add_weak(permute(c.coeffs), c.rhs);
  for (const auto& c : sys.strict()) permuted.add_strict(permute(c.coeffs), c.rhs);
  auto y = fm_solve(permuted);
  if (!y) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[order[i]] = (*y)[i];
  return x;
}

}  // namespace pullfan
