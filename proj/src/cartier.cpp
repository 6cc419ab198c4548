#include "pullfan/cartier.hpp"

#include <algorithm>

namespace pullfan {

Rat SupportFunction::evaluate(const RatVec& v) const {
  if (functionals.empty()) throw std::logic_error("SupportFunction: no cones");
  Rat best = dot(functionals.front(), v);
  for (const RatVec& u : functionals) best = std::min(best, Rat(dot(u, v)));
  return best;
}

MonomialIdealData make_ideal(Cone ambient, std::vector<IntVec> generators, bool closure) {
  for (const IntVec& g : generators) {
    if (g.size() != ambient.ambient()) throw std::invalid_argument("ideal generator has the wrong rank");
    for (const IntVec& r : ambient.rays()) {
      if (dot(g, r) < 0) {
        throw std::invalid_argument("generator " + to_string(g) + " is not regular on the ambient cone");
      }
    }
  }
  return {std::move(ambient), std::move(generators), closure};
}

SupportFunction support_from_heights(const ConicalSubdivision& sub) {
  SupportFunction sf{sub.fan, {}};
  for (const Cone& c : sub.fan.maximal_cones()) {
    RatMatrix a;
    RatVec b;
    for (const IntVec& r : c.rays()) {
      auto it = sub.ray_heights.find(r);
      if (it == sub.ray_heights.end()) throw std::logic_error("support_from_heights: ray without height " + to_string(r));
      a.push_back(to_rat(r));
      b.push_back(it->second);
    }
    auto sol = solve_linear(a, b);
    if (!sol) {
      throw std::logic_error("support_from_heights: heights are not linear on the cone over " +
                             to_string(c.rays().front()));
    }
    sf.functionals.push_back(std::move(sol->particular));
  }
  return sf;
}

CartierData integralize(const SupportFunction& sf) {
  Int k = 1;
  for (const RatVec& u : sf.functionals) {
    Int d = clear_denominators(u).scale;
    mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), d.get_mpz_t());
  }
  CartierData cd{sf.fan, {}, k};
  for (const RatVec& u : sf.functionals) {
    IntVec m;
    for (const Rat& x : u) {
      Rat y = x * Rat(k);
      m.push_back(y.get_num());
    }
    cd.m.push_back(std::move(m));
  }
  return cd;
}

std::size_t enclosing_cone(const Fan& delta, const Cone& c) {
  for (std::size_t i = 0; i < delta.maximal_cones().size(); ++i) {
    if (cone_contains(delta.maximal_cones()[i], c)) return i;
  }
  throw std::invalid_argument("cone is not inside any cone of the ambient fan");
}

LinSystem cartier_system(const Fan& sigma, const Fan& delta) {
  if (!refines(sigma, delta)) throw std::invalid_argument("the subdivision does not refine the ambient fan");
  const std::size_t n = sigma.ambient();
  const std::vector<Cone>& cones = sigma.maximal_cones();
  const std::size_t count = cones.size();
  LinSystem sys(n * count);

  std::vector<std::size_t> owner(count);
  for (std::size_t i = 0; i < count; ++i) owner[i] = enclosing_cone(delta, cones[i]);

  // <m_i, v> - <m_j, v> as a row over all unknowns.
  auto difference = [&](std::size_t i, std::size_t j, const IntVec& v) {
    RatVec row(n * count);
    for (std::size_t k = 0; k < n; ++k) {
      row[i * n + k] += v[k];
      row[j * n + k] -= v[k];
    }
    return row;
  };

  const std::vector<IntVec> rays = sigma.rays();
  for (std::size_t i = 0; i < count; ++i) {
    bool alone = true;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i || owner[j] != owner[i]) continue;
      alone = false;
      if (j < i) continue;
      for (const IntVec& v : rays) {
        bool in_i = cone_contains(cones[i], v);
        bool in_j = cone_contains(cones[j], v);
        if (in_i && in_j) {
          sys.add_equality(difference(i, j, v), 0);
        } else if (in_i) {
          // Strict inequality, normalized to slack one.
          sys.add_weak(difference(i, j, v), -1);
        } else if (in_j) {
          sys.add_weak(difference(j, i, v), -1);
        }
      }
    }
    if (alone) {
      // Nothing is subdivided here; pin m to zero so the chart gets the unit ideal.
      for (std::size_t k = 0; k < n; ++k) {
        RatVec row(n * count);
        row[i * n + k] = 1;
        sys.add_equality(std::move(row), 0);
      }
    }
    for (const IntVec& v : delta.maximal_cones()[owner[i]].rays()) {
      RatVec row(n * count);
      for (std::size_t k = 0; k < n; ++k) row[i * n + k] = -Rat(v[k]);
      sys.add_weak(std::move(row), 0);
    }
  }
  return sys;
}

CartierData cartier_from_subdivision(const Fan& sigma, const Fan& delta) {
  LinSystem sys = cartier_system(sigma, delta);
  auto x = fm_feasible(sys);
  if (!x) throw NotCoherentError("subdivision is not coherent relative to Delta");
  ScaledIntVec scaled_x = clear_denominators(*x);
  if (!sys.satisfied_by(to_rat(scaled_x.vec))) {
    throw std::logic_error("cartier_from_subdivision: scaled solution violates the system");
  }
  const std::size_t n = sigma.ambient();
  CartierData cd{sigma, {}, scaled_x.scale};
  for (std::size_t i = 0; i < sigma.maximal_cones().size(); ++i) {
    cd.m.emplace_back(scaled_x.vec.begin() + static_cast<long>(i * n),
                      scaled_x.vec.begin() + static_cast<long>((i + 1) * n));
  }
  return cd;
}

std::vector<MonomialIdealData> ideal_from_cartier(const CartierData& cd, const Fan& delta) {
  std::vector<std::vector<IntVec>> gens(delta.maximal_cones().size());
  for (std::size_t i = 0; i < cd.fan.maximal_cones().size(); ++i) {
    std::size_t t = enclosing_cone(delta, cd.fan.maximal_cones()[i]);
    const IntVec& m = cd.m[i];
    for (const IntVec& r : delta.maximal_cones()[t].rays()) {
      if (dot(m, r) < 0) {
        throw std::invalid_argument("Cartier vector " + to_string(m) + " is negative on the ambient ray " +
                                    to_string(r));
      }
    }
    if (std::find(gens[t].begin(), gens[t].end(), m) == gens[t].end()) gens[t].push_back(m);
  }
  std::vector<MonomialIdealData> out;
  for (std::size_t t = 0; t < gens.size(); ++t) {
    if (gens[t].empty()) throw std::invalid_argument("an ambient cone contains no cone of the subdivision");
    out.push_back(make_ideal(delta.maximal_cones()[t], std::move(gens[t]), true));
  }
  return out;
}

}  // namespace pullfan
