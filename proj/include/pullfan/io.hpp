#pragma once

// JSON documents read and written by the command-line tool.
//
//   cone    {"rays": [[1,0,0], ...], "rank": 3}            rank optional
//   fan     {"rank": 3, "cones": [{"rays": [...], "label": "s1"}, ...],
//            "ray_heights": [{"ray": [2,1,0], "height": "3"}, ...]}
//   cartier {"rank": 3, "multiplier": 2,
//            "cones": [{"rays": [...], "m": [3,0,3], "u": ["3/2","0","3/2"]}]}
//   ideal   {"ambient_rays": [...], "generators": [...], "closure": true}
//   ideals  {"ideals": [ideal, ...]}
//
// Integers are JSON numbers (strings when they do not fit in 64 bits);
// rationals are always strings "p/q" or "p".

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pullfan/cartier.hpp"
#include "pullfan/fans.hpp"
#include "pullfan/pulling.hpp"

namespace pullfan::io {

using nlohmann::json;

// Any malformed document raises this; the CLI reports it as an input error.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Int& x);
json to_json(const Rat& x);
json to_json(const IntVec& v);
json to_json(const RatVec& v);

Int int_from_json(const json& j);
Rat rat_from_json(const json& j);
IntVec int_vec_from_json(const json& j);
RatVec rat_vec_from_json(const json& j);

json cone_to_json(const Cone& c);
Cone cone_from_json(const json& j);

struct FanDocument {
  Fan fan;
  std::optional<RayHeights> ray_heights;
  std::vector<std::string> labels;  // empty, or one per maximal cone
};

json fan_to_json(const Fan& fan, const RayHeights* heights = nullptr,
                 const std::vector<std::string>* labels = nullptr);

// Accepts a fan document, or a cone document read as a one-cone fan.
FanDocument fan_from_json(const json& j);

json cartier_to_json(const CartierData& cd, const SupportFunction* sf = nullptr);
CartierData cartier_from_json(const json& j);

json ideal_to_json(const MonomialIdealData& ideal);
MonomialIdealData ideal_from_json(const json& j);

json ideals_to_json(const std::vector<MonomialIdealData>& ideals);
// Accepts {"ideals": [...]} or a single ideal document.
std::vector<MonomialIdealData> ideals_from_json(const json& j);

// Parses a file; throws FileError when it cannot be read and
// FormatError when it is not JSON.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

// Canonical text form: sorted keys, two-space indent, arrays of scalars kept
// on one line, trailing newline.
std::string dump(const json& j);

}  // namespace pullfan::io
