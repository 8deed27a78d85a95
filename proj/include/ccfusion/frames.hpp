#pragma once

// Classical discrete frames {f_i} in F^n.

#include <algorithm>
#include <vector>

#include "ccfusion/bounds.hpp"
#include "ccfusion/hilbert.hpp"

namespace ccfusion {

/// A finite frame, stored as the n x m synthesis matrix whose columns are f_i.
template <FieldScalar Scalar>
class VectorFrame {
 public:
  explicit VectorFrame(Matrix<Scalar> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.rows() == 0 || vectors_.cols() == 0) {
      throw InvalidInput("a frame needs at least one vector of positive dimension");
    }
    if (!vectors_.allFinite()) throw InvalidInput("frame vectors have non-finite entries");
  }

  static VectorFrame from_list(const std::vector<Vector<Scalar>>& list) {
    if (list.empty()) throw InvalidInput("a frame needs at least one vector");
    const auto n = list.front().size();
    Matrix<Scalar> m(n, static_cast<Eigen::Index>(list.size()));
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (list[j].size() != n) throw DimensionMismatch("frame vectors differ in dimension");
      m.col(static_cast<Eigen::Index>(j)) = list[j];
    }
    return VectorFrame(std::move(m));
  }

  Eigen::Index ambient_dim() const { return vectors_.rows(); }
  Eigen::Index size() const { return vectors_.cols(); }
  const Matrix<Scalar>& synthesis_matrix() const { return vectors_; }
  Matrix<Scalar> analysis_matrix() const { return vectors_.adjoint(); }

 private:
  Matrix<Scalar> vectors_;
};

/// S = T T* = sum_i f_i f_i*
template <FieldScalar Scalar>
Matrix<Scalar> frame_operator(const VectorFrame<Scalar>& frame) {
  const auto& t = frame.synthesis_matrix();
  return t * t.adjoint();
}

/// Optimal bounds: extremal eigenvalues of S. S is PSD, so rounding noise
/// below zero is clamped.
template <FieldScalar Scalar>
FrameBounds frame_bounds(const VectorFrame<Scalar>& frame, const Tolerances& tol = {}) {
  const auto eig = hermitian_eigen(frame_operator(frame), tol);
  return {std::max(0.0, eig.values(0)), std::max(0.0, eig.values(eig.values.size() - 1)), true};
}

/// {<f, f_i>}_i
template <FieldScalar Scalar>
Vector<Scalar> analyze(const VectorFrame<Scalar>& frame, const Vector<Scalar>& f) {
  if (f.size() != frame.ambient_dim()) {
    throw DimensionMismatch("vector dimension does not match the frame");
  }
  return frame.synthesis_matrix().adjoint() * f;
}

/// sum_i c_i f_i
template <FieldScalar Scalar>
Vector<Scalar> synthesize(const VectorFrame<Scalar>& frame, const Vector<Scalar>& coefficients) {
  if (coefficients.size() != frame.size()) {
    throw DimensionMismatch("coefficient count does not match the frame size");
  }
  return frame.synthesis_matrix() * coefficients;
}

/// Canonical dual {S^-1 f_i}; requires a frame (A > 0).
template <FieldScalar Scalar>
VectorFrame<Scalar> canonical_dual(const VectorFrame<Scalar>& frame, const Tolerances& tol = {}) {
  const FrameBounds b = frame_bounds(frame, tol);
  if (!is_frame(classify(b, tol))) throw NotAFrame("vectors do not span; no canonical dual");
  const Matrix<Scalar> s = frame_operator(frame);
  return VectorFrame<Scalar>(s.ldlt().solve(frame.synthesis_matrix()));
}

}  // namespace ccfusion
