#include "example_report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "golden.hpp"
#include "pullfan/cartier.hpp"
#include "pullfan/newton.hpp"
#include "pullfan/polyhedra.hpp"
#include "pullfan/pulling.hpp"

namespace pullfan::report {

namespace {

json rat_rows(const std::vector<RatVec>& rows) {
  json out = json::array();
  for (const RatVec& r : rows) out.push_back(io::to_json(r));
  return out;
}

json int_rows(const std::vector<IntVec>& rows) {
  json out = json::array();
  for (const IntVec& r : rows) out.push_back(io::to_json(r));
  return out;
}

const json& at(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw io::FormatError(std::string("golden: missing \"") + key + "\"");
  return j.at(key);
}

// Golden rationals may be written in any equivalent form; reprint them.
json normalize_rats(const json& rows) {
  if (!rows.is_array()) throw io::FormatError("golden: expected an array of rational vectors");
  std::vector<RatVec> out;
  for (const json& r : rows) out.push_back(io::rat_vec_from_json(r));
  return rat_rows(out);
}

std::vector<IntVec> int_list(const json& rows) {
  if (!rows.is_array()) throw io::FormatError("golden: expected an array of integer vectors");
  std::vector<IntVec> out;
  for (const json& r : rows) out.push_back(io::int_vec_from_json(r));
  return out;
}

std::set<std::vector<RatVec>> point_sets(const json& cells) {
  if (!cells.is_array()) throw io::FormatError("golden: expected an array of cells");
  std::set<std::vector<RatVec>> out;
  for (const json& c : cells) {
    if (!c.is_array()) throw io::FormatError("golden: expected a cell as an array of points");
    std::vector<RatVec> pts;
    for (const json& p : c) pts.push_back(io::rat_vec_from_json(p));
    std::sort(pts.begin(), pts.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
    out.insert(std::move(pts));
  }
  return out;
}

std::set<std::set<IntVec>> ray_sets(const json& cones) {
  if (!cones.is_array()) throw io::FormatError("golden: expected an array of cones");
  std::set<std::set<IntVec>> out;
  for (const json& c : cones) {
    std::vector<IntVec> rays = int_list(c);
    out.insert(std::set<IntVec>(rays.begin(), rays.end()));
  }
  return out;
}

}  // namespace

json compute_example() {
  const IntVec n1 = int_vec({1, 0, 0}), n2 = int_vec({0, 1, 0}), n3 = int_vec({0, 0, 1});
  const IntVec n4 = int_vec({2, 1, 0}), n5 = int_vec({0, 1, 2});
  Cone sigma = cone_from_rays({n1, n2, n3});
  Cone tau = cone_from_rays({n4, n5});
  Hyperplane plane{int_vec({1, 1, 1}), Int(1)};
  json out;

  HeightedConfig config = build_config(sigma, tau, plane);
  std::vector<RatVec> a_pts, b_pts, lifted;
  for (std::size_t i = 0; i < config.points.size(); ++i) {
    // A: one point per ray of sigma. B: the points at height one.
    if (i < sigma.rays().size()) a_pts.push_back(config.points[i]);
    if (config.heights[i] == 1) b_pts.push_back(config.points[i]);
    RatVec p = config.points[i];
    p.push_back(config.heights[i]);
    lifted.push_back(std::move(p));
  }
  out["A"] = rat_rows(a_pts);
  out["B"] = rat_rows(b_pts);
  out["heights"] = json::array();
  for (const Rat& h : config.heights) out["heights"].push_back(io::to_json(h));

  HPolyhedron poly = facets(lifted);
  out["facets"] = json::array();
  for (const HalfSpace& h : poly.halfspaces)
    out["facets"].push_back({{"normal", io::to_json(h.normal)}, {"offset", io::to_json(h.offset)}});
  out["affine_hull"] = json::array();
  for (const AffineEquation& e : poly.equations)
    out["affine_hull"].push_back({{"normal", io::to_json(e.normal)}, {"rhs", io::to_json(e.rhs)}});

  out["cells"] = json::array();
  for (const auto& cell : pulling_cells(config)) {
    std::vector<RatVec> pts;
    for (std::size_t i : cell) pts.push_back(config.points[i]);
    out["cells"].push_back(rat_rows(pts));
  }

  ConicalSubdivision sub = pull(sigma, tau, plane);
  out["cones"] = json::array();
  for (const Cone& c : sub.fan.maximal_cones()) out["cones"].push_back(int_rows(c.rays()));

  SupportFunction sf = support_from_heights(sub);
  out["u"] = rat_rows(sf.functionals);
  CartierData cd = integralize(sf);
  out["multiplier"] = io::to_json(cd.multiplier);
  out["m"] = int_rows(cd.m);

  Fan delta({sigma}, 3);
  std::vector<MonomialIdealData> ideals = ideal_from_cartier(cd, delta);
  out["ideal"] = {{"generators", int_rows(ideals.at(0).generators)}, {"closure", ideals.at(0).closure}};
  out["closure_generators"] = int_rows(integral_closure_generators(ideals.at(0)));
  out["blowup_fan_equal"] = fan_equal(normal_fan(newton(ideals.at(0))), sub.fan);

  out["star_checks"] = json::array();
  for (const IntVec& r : tau.rays()) {
    Fan star = star_subdivision(delta, r);
    out["star_checks"].push_back({{"ray", io::to_json(r)},
                                  {"pull_refines_star", refines(sub.fan, star)},
                                  {"star_refines_pull", refines(star, sub.fan)}});
  }
  return out;
}

std::vector<std::string> compare(const json& computed, const json& golden) {
  std::vector<std::string> diffs;
  auto mismatch = [&](const std::string& key, const json& want) {
    diffs.push_back(key + ": expected " + want.dump() + ", got " + computed.at(key).dump());
  };

  for (const char* key : {"A", "B", "u"}) {
    if (normalize_rats(at(golden, key)) != computed.at(key)) mismatch(key, at(golden, key));
  }
  {
    const json& g = at(golden, "heights");
    if (!g.is_array()) throw io::FormatError("golden: \"heights\" must be an array");
    json norm = json::array();
    for (const json& h : g) norm.push_back(io::to_json(io::rat_from_json(h)));
    if (norm != computed.at("heights")) mismatch("heights", g);
  }

  // Facets of a polytope that is not full-dimensional are only defined modulo
  // its affine hull, so each golden row is matched on the hull.
  {
    const json& g = at(golden, "facets");
    if (!g.is_array()) throw io::FormatError("golden: \"facets\" must be an array");
    std::vector<AffineEquation> hull;
    for (const json& e : computed.at("affine_hull"))
      hull.push_back({io::int_vec_from_json(e.at("normal")), io::int_from_json(e.at("rhs"))});
    std::vector<HalfSpace> mine;
    for (const json& f : computed.at("facets"))
      mine.push_back({io::int_vec_from_json(f.at("normal")), io::int_from_json(f.at("offset"))});
    std::vector<bool> used(mine.size(), false);
    bool ok = g.size() == mine.size();
    for (const json& row : g) {
      IntVec a = io::int_vec_from_json(at(row, "normal"));
      Int b = io::int_from_json(at(row, "offset"));
      if (a.size() != 4) throw io::FormatError("golden: facet normal must have length 4");
      bool found = false;
      for (std::size_t i = 0; i < mine.size() && !found; ++i) {
        if (!used[i] && same_halfspace_on(mine[i], a, b, hull)) used[i] = found = true;
      }
      ok = ok && found;
    }
    if (!ok) mismatch("facets", g);
  }

  if (point_sets(at(golden, "cells")) != point_sets(computed.at("cells"))) mismatch("cells", at(golden, "cells"));
  if (ray_sets(at(golden, "cones")) != ray_sets(computed.at("cones"))) mismatch("cones", at(golden, "cones"));

  if (io::int_from_json(at(golden, "multiplier")) != io::int_from_json(computed.at("multiplier")))
    mismatch("multiplier", at(golden, "multiplier"));
  if (int_list(at(golden, "m")) != int_list(computed.at("m"))) mismatch("m", at(golden, "m"));

  {
    const json& g = at(golden, "ideal");
    std::vector<IntVec> want = int_list(at(g, "generators"));
    std::vector<IntVec> got = int_list(computed.at("ideal").at("generators"));
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    const json& flag = at(g, "closure");
    if (!flag.is_boolean()) throw io::FormatError("golden: \"closure\" must be a boolean");
    if (want != got || flag != computed.at("ideal").at("closure")) mismatch("ideal", g);
  }

  if (int_list(at(golden, "closure_generators")) != int_list(computed.at("closure_generators")))
    mismatch("closure_generators", at(golden, "closure_generators"));

  for (const char* key : {"blowup_fan_equal", "star_checks"}) {
    if (at(golden, key) != computed.at(key)) mismatch(key, at(golden, key));
  }
  return diffs;
}

std::string render(const json& c) {
  std::ostringstream out;
  auto points = [](const json& rows) {
    std::string s;
    for (const json& r : rows) {
      s += " (";
      for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + (r[i].is_string() ? r[i].get<std::string>() : r[i].dump());
      s += ")";
    }
    return s;
  };
  out << "A:" << points(c.at("A")) << "\n";
  out << "B:" << points(c.at("B")) << "\n";
  out << "lifted polytope, affine hull:\n";
  for (const json& e : c.at("affine_hull")) out << "  " << points(json::array({e.at("normal")})) << " . w = " << e.at("rhs").dump() << "\n";
  out << "lifted polytope, facets (reduced modulo the affine hull):\n";
  for (const json& f : c.at("facets")) out << "  " << points(json::array({f.at("normal")})) << " . w <= " << f.at("offset").dump() << "\n";
  out << "upper cells:\n";
  for (const json& cell : c.at("cells")) out << " " << points(cell) << "\n";
  out << "maximal cones:\n";
  for (const json& cone : c.at("cones")) out << " " << points(cone) << "\n";
  out << "u:" << points(c.at("u")) << "\n";
  out << "multiplier: " << c.at("multiplier").dump() << "\n";
  out << "m:" << points(c.at("m")) << "\n";
  out << "ideal generators:" << points(c.at("ideal").at("generators")) << "  closure: " << c.at("ideal").at("closure").dump() << "\n";
  out << "closure generators:" << points(c.at("closure_generators")) << "\n";
  out << "normal fan of newt(I) equals the pull fan: " << c.at("blowup_fan_equal").dump() << "\n";
  for (const json& s : c.at("star_checks")) {
    out << "star at" << points(json::array({s.at("ray")})) << ": pull refines star " << s.at("pull_refines_star").dump()
        << ", star refines pull " << s.at("star_refines_pull").dump() << "\n";
  }
  return out.str();
}

const char* embedded_golden() { return kEmbeddedGolden; }

}  // namespace pullfan::report
