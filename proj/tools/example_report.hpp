#pragma once

// The worked example end to end: every value it quotes, computed afresh and
// compared against a golden document.

#include <string>
#include <vector>

#include "pullfan/io.hpp"

namespace pullfan::report {

using io::json;

// All computed values, keyed as in the golden document.
json compute_example();

// One message per key whose value disagrees with the golden document.
// Throws io::FormatError when the golden document is malformed.
std::vector<std::string> compare(const json& computed, const json& golden);

// Multi-line human-readable rendering of compute_example().
std::string render(const json& computed);

// The golden document compiled into the binary.
const char* embedded_golden();

}  // namespace pullfan::report
