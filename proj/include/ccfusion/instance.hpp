#pragma once

// Instance files: a controlled fusion frame, an optional second family for
// the two-frame verifiers, and optional parameters.
//
//   {
//     "format": "ccfusion-instance", "version": 1,
//     "field": "real" | "complex",
//     "dim": n,
//     "subspaces": [ {"basis": [[...n...], ...], "weight": v}, ... ],
//     "C": [[...], ...], "C_prime": [[...], ...],          row-major n x n
//     "second": {"subspaces": [...], "C"?: ..., "C_prime"?: ...},
//     "params": {"lambda1", "lambda2", "beta": [...], "epsilon", "seed",
//                "samples", "u": [[...]], "transform_mode"}
//   }
//
// Complex entries are [re, im] pairs. Bases need not be orthonormal; they
// are orthonormalized on load.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ccfusion/controlled.hpp"
#include "ccfusion/theorems.hpp"

namespace ccfusion {

inline constexpr int kInstanceVersion = 1;

struct InstanceParams {
  std::optional<double> lambda1;
  std::optional<double> lambda2;
  std::optional<std::vector<double>> beta;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<TransformMode> transform_mode;
};

template <FieldScalar Scalar>
struct Instance {
  ControlledFusionFrame<Scalar> frame;
  std::optional<ControlledFusionFrame<Scalar>> second;
  std::optional<Matrix<Scalar>> u;
  InstanceParams params;
};

using AnyInstance = std::variant<Instance<double>, Instance<Complex>>;

/// Throws ParseError naming the offending field.
AnyInstance parse_instance(const nlohmann::json& doc, const Tolerances& tol = {});

/// Throws ParseError with line/column context on malformed JSON.
AnyInstance parse_instance_text(const std::string& text, const Tolerances& tol = {});

AnyInstance load_instance(const std::string& path, const Tolerances& tol = {});

template <FieldScalar Scalar>
nlohmann::ordered_json instance_to_json(const Instance<Scalar>& instance);

extern template nlohmann::ordered_json instance_to_json(const Instance<double>&);
extern template nlohmann::ordered_json instance_to_json(const Instance<Complex>&);

/// 64-bit FNV-1a, used to fingerprint input files in reports.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace ccfusion
