#pragma once

// JSON and text rendering of bounds and theorem reports, and the run-level
// report the CLI emits.

#include <cstdint>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ccfusion/controlled.hpp"
#include "ccfusion/theorems.hpp"

namespace ccfusion {

inline constexpr const char* kToolVersion = "ccfusion 1.0.0";

using OrderedJson = nlohmann::ordered_json;

OrderedJson to_json(const FrameBounds& bounds);
OrderedJson to_json(const BoundsReport& report);
OrderedJson to_json(const TheoremReport& report);
OrderedJson to_json(const Tolerances& tol);

/// Shortest representation that round-trips (%.17g trimmed), for text output.
std::string format_double(double x);

std::string hex64(std::uint64_t x);

void write_text(std::ostream& out, const BoundsReport& report, const std::string& indent = "  ");
void write_text(std::ostream& out, const TheoremReport& report, const std::string& indent = "  ");

/// One CLI invocation. `entries` holds one object per processed input.
struct RunReport {
  std::string command;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  Tolerances tolerances;
  OrderedJson entries = OrderedJson::array();
  double timing_ms = 0.0;

  /// timing_ms is the last key, so callers comparing runs can drop it.
  OrderedJson to_json() const;
};

}  // namespace ccfusion
