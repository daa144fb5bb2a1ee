// report_io.hpp
// Stable text and JSON renderings of FixReport. Field names are frozen in
// docs/schema.md; output is deterministic for a fixed report (ordered
// keys, exact rationals as strings, trailing newline).
#pragma once

#include <string>

#include "fixlocus/theorems.hpp"

namespace fixlocus {

std::string report_to_json(const FixReport& r);
std::string report_to_text(const FixReport& r);

// Canonical polynomial rendering used in reports (same form the parser
// accepts).
std::string polynomial_text(const Polynomial& p, const std::vector<std::string>& names);

}  // namespace fixlocus
