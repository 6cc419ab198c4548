#include "pullfan/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pullfan::io {

json to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const Rat& x) { return json(to_string(x)); }

json to_json(const IntVec& v) {
  json arr = json::array();
  for (const Int& x : v) arr.push_back(to_json(x));
  return arr;
}

json to_json(const RatVec& v) {
  json arr = json::array();
  for (const Rat& x : v) arr.push_back(to_json(x));
  return arr;
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    Rat r;
    try {
      r = parse_rat(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    if (r.get_den() != 1) throw FormatError("expected an integer, got " + j.get<std::string>());
    return r.get_num();
  }
  throw FormatError("expected an integer, got " + j.dump());
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rat(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  throw FormatError("expected a rational string, got " + j.dump());
}

IntVec int_vec_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an integer array, got " + j.dump());
  IntVec out;
  for (const json& x : j) out.push_back(int_from_json(x));
  return out;
}

RatVec rat_vec_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected a rational array, got " + j.dump());
  RatVec out;
  for (const json& x : j) out.push_back(rat_from_json(x));
  return out;
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<IntVec> int_vecs_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of integer vectors");
  std::vector<IntVec> out;
  for (const json& v : j) out.push_back(int_vec_from_json(v));
  return out;
}

std::size_t rank_field(const json& j) {
  Int r = int_from_json(field(j, "rank"));
  if (r < 0 || !r.fits_ulong_p()) throw FormatError("rank must be a nonnegative integer");
  return r.get_ui();
}

Cone cone_with_rank(const std::vector<IntVec>& rays, std::optional<std::size_t> rank) {
  if (rays.empty()) {
    if (!rank) throw FormatError("a cone without rays needs a \"rank\"");
    return cone_from_rays(rays, *rank);
  }
  if (rank && rays.front().size() != *rank) throw FormatError("ray length does not match rank");
  return cone_from_rays(rays, rays.front().size());
}

}  // namespace

json cone_to_json(const Cone& c) {
  json j;
  j["rays"] = json::array();
  for (const IntVec& r : c.rays()) j["rays"].push_back(to_json(r));
  j["rank"] = c.ambient();
  return j;
}

Cone cone_from_json(const json& j) {
  std::optional<std::size_t> rank;
  if (j.is_object() && j.contains("rank")) rank = rank_field(j);
  return cone_with_rank(int_vecs_from_json(field(j, "rays")), rank);
}

json fan_to_json(const Fan& fan, const RayHeights* heights, const std::vector<std::string>* labels) {
  json j;
  j["rank"] = fan.ambient();
  j["cones"] = json::array();
  for (std::size_t i = 0; i < fan.maximal_cones().size(); ++i) {
    json c;
    c["rays"] = json::array();
    for (const IntVec& r : fan.maximal_cones()[i].rays()) c["rays"].push_back(to_json(r));
    if (labels && i < labels->size()) c["label"] = (*labels)[i];
    j["cones"].push_back(std::move(c));
  }
  if (heights) {
    j["ray_heights"] = json::array();
    for (const auto& [ray, h] : *heights) j["ray_heights"].push_back({{"ray", to_json(ray)}, {"height", to_json(h)}});
  }
  return j;
}

FanDocument fan_from_json(const json& j) {
  if (j.is_object() && !j.contains("cones") && j.contains("rays")) {
    Cone c = cone_from_json(j);
    std::size_t n = c.ambient();
    return {Fan({std::move(c)}, n), std::nullopt, {}};
  }
  const std::size_t n = rank_field(j);
  const json& cones = field(j, "cones");
  if (!cones.is_array()) throw FormatError("\"cones\" must be an array");

  // Labels follow the input order; the fan sorts its cones, so carry them along.
  std::vector<std::pair<Cone, std::string>> parsed;
  bool any_label = false;
  for (const json& c : cones) {
    std::string label;
    if (c.is_object() && c.contains("label")) {
      if (!c.at("label").is_string()) throw FormatError("\"label\" must be a string");
      label = c.at("label").get<std::string>();
      any_label = true;
    }
    parsed.emplace_back(cone_with_rank(int_vecs_from_json(field(c, "rays")), n), std::move(label));
  }
  std::vector<Cone> list;
  for (const auto& [c, l] : parsed) list.push_back(c);
  Fan fan(std::move(list), n);

  std::vector<std::string> labels;
  if (any_label) {
    for (const Cone& c : fan.maximal_cones()) {
      auto it = std::find_if(parsed.begin(), parsed.end(), [&](const auto& p) { return p.first == c; });
      labels.push_back(it->second);
    }
  }

  std::optional<RayHeights> heights;
  if (j.contains("ray_heights")) {
    const json& hs = j.at("ray_heights");
    if (!hs.is_array()) throw FormatError("\"ray_heights\" must be an array");
    heights.emplace();
    for (const json& h : hs) {
      IntVec ray = int_vec_from_json(field(h, "ray"));
      if (ray.size() != n) throw FormatError("ray height entry has the wrong rank");
      (*heights)[primitive(ray)] = rat_from_json(field(h, "height"));
    }
  }
  return {std::move(fan), std::move(heights), std::move(labels)};
}

json cartier_to_json(const CartierData& cd, const SupportFunction* sf) {
  json j;
  j["rank"] = cd.fan.ambient();
  j["multiplier"] = to_json(cd.multiplier);
  j["cones"] = json::array();
  for (std::size_t i = 0; i < cd.fan.maximal_cones().size(); ++i) {
    json c;
    c["rays"] = json::array();
    for (const IntVec& r : cd.fan.maximal_cones()[i].rays()) c["rays"].push_back(to_json(r));
    c["m"] = to_json(cd.m[i]);
    if (sf) c["u"] = to_json(sf->functionals[i]);
    j["cones"].push_back(std::move(c));
  }
  return j;
}

CartierData cartier_from_json(const json& j) {
  const std::size_t n = rank_field(j);
  const json& cones = field(j, "cones");
  if (!cones.is_array()) throw FormatError("\"cones\" must be an array");
  std::vector<std::pair<Cone, IntVec>> parsed;
  for (const json& c : cones) {
    Cone cone = cone_with_rank(int_vecs_from_json(field(c, "rays")), n);
    IntVec m = int_vec_from_json(field(c, "m"));
    if (m.size() != n) throw FormatError("Cartier vector has the wrong rank");
    parsed.emplace_back(std::move(cone), std::move(m));
  }
  std::vector<Cone> list;
  for (const auto& [c, m] : parsed) list.push_back(c);
  Fan fan(std::move(list), n);
  CartierData cd{fan, {}, Int(1)};
  if (j.contains("multiplier")) cd.multiplier = int_from_json(j.at("multiplier"));
  for (const Cone& c : fan.maximal_cones()) {
    auto it = std::find_if(parsed.begin(), parsed.end(), [&](const auto& p) { return p.first == c; });
    cd.m.push_back(it->second);
  }
  return cd;
}

json ideal_to_json(const MonomialIdealData& ideal) {
  json j;
  j["ambient_rays"] = json::array();
  for (const IntVec& r : ideal.ambient.rays()) j["ambient_rays"].push_back(to_json(r));
  j["generators"] = json::array();
  for (const IntVec& g : ideal.generators) j["generators"].push_back(to_json(g));
  j["closure"] = ideal.closure;
  return j;
}

MonomialIdealData ideal_from_json(const json& j) {
  std::vector<IntVec> rays = int_vecs_from_json(field(j, "ambient_rays"));
  if (rays.empty()) throw FormatError("ideal needs at least one ambient ray");
  Cone ambient = cone_from_rays(rays, rays.front().size());
  std::vector<IntVec> gens = int_vecs_from_json(field(j, "generators"));
  for (const IntVec& g : gens) {
    if (g.size() != ambient.ambient()) throw FormatError("generator has the wrong rank");
  }
  bool closure = true;
  if (j.contains("closure")) {
    if (!j.at("closure").is_boolean()) throw FormatError("\"closure\" must be a boolean");
    closure = j.at("closure").get<bool>();
  }
  return make_ideal(std::move(ambient), std::move(gens), closure);
}

json ideals_to_json(const std::vector<MonomialIdealData>& ideals) {
  json j;
  j["ideals"] = json::array();
  for (const MonomialIdealData& ideal : ideals) j["ideals"].push_back(ideal_to_json(ideal));
  return j;
}

std::vector<MonomialIdealData> ideals_from_json(const json& j) {
  if (j.is_object() && j.contains("ideals")) {
    if (!j.at("ideals").is_array()) throw FormatError("\"ideals\" must be an array");
    std::vector<MonomialIdealData> out;
    for (const json& i : j.at("ideals")) out.push_back(ideal_from_json(i));
    return out;
  }
  return {ideal_from_json(j)};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write " + path);
  out << dump(j);
  if (!out) throw FileError("error writing " + path);
}

namespace {

bool is_flat(const json& j) {
  if (j.is_array()) return std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
  return j.is_primitive();
}

// Objects and nested arrays one entry per line; arrays of scalars on one line.
void write(std::string& out, const json& j, int indent) {
  const std::string pad(indent + 2, ' ');
  if (is_flat(j)) {
    out += j.dump();
    return;
  }
  const bool object = j.is_object();
  if (j.empty()) {
    out += object ? "{}" : "[]";
    return;
  }
  out += object ? "{\n" : "[\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (object) out += json(it.key()).dump() + ": ";
    write(out, *it, indent + 2);
  }
  out += "\n" + std::string(indent, ' ') + (object ? "}" : "]");
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  write(out, j, 0);
  return out + "\n";
}

}  // namespace pullfan::io
