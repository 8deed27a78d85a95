#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ccfusion {

/// Every numerical threshold used by the library, in one place.
///
/// The defaults are the values the test and acceptance suites are pinned to.
/// Each field can be overridden by name (see `set`), which is how the CLI's
/// `--tol name=value` flag works.
struct Tolerances {
  double orth = 1e-12;         ///< ||Q*Q - I|| per column for a SubspaceBasis
  double rank = 1e-10;         ///< relative singular-value cutoff for numerical rank
  double herm = 1e-10;         ///< relative Hermitian residual accepted as self-adjoint
  double psd = 1e-9;           ///< relative clip threshold for small negative eigenvalues
  double inv = 1e-12;          ///< sigma_min / sigma_max below this means not invertible
  double classify = 1e-9;      ///< relative slack for frame / tight / Parseval labels
  double hypothesis = 1e-9;    ///< relative residual for commutation, unitarity, C = C'
  double containment = 1e-7;   ///< absolute slack on predicted-vs-actual bounds
  double qdual = 1e-8;         ///< admissible Q-dual defect
  double reconstruct = 1e-9;   ///< relative residual of the reconstruction solve

  /// Overrides the named tolerance. Throws InvalidParams on an unknown name
  /// or a negative / non-finite value.
  void set(std::string_view name, double value);
  double get(std::string_view name) const;

  static const std::vector<std::string>& names();
};

}  // namespace ccfusion
