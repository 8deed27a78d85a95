#pragma once

// Weighted subspace families and the fusion frame operator sum v_i^2 pi_{W_i}.

#include <algorithm>
#include <cmath>
#include <vector>

#include "ccfusion/bounds.hpp"
#include "ccfusion/hilbert.hpp"

namespace ccfusion {

template <FieldScalar Scalar>
struct WeightedSubspace {
  SubspaceBasis<Scalar> basis;
  double weight;  // v_i, unsquared
};

template <FieldScalar Scalar>
class WeightedSubspaceFamily {
 public:
  explicit WeightedSubspaceFamily(std::vector<WeightedSubspace<Scalar>> items)
      : items_(std::move(items)) {
    if (items_.empty()) throw InvalidInput("subspace family is empty");
    const auto n = items_.front().basis.ambient_dim();
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (items_[i].basis.ambient_dim() != n) {
        throw DimensionMismatch("subspace " + std::to_string(i) + " lives in dimension " +
                                std::to_string(items_[i].basis.ambient_dim()) + ", expected " +
                                std::to_string(n));
      }
      const double w = items_[i].weight;
      if (!std::isfinite(w) || !(w > 0.0)) {
        throw InvalidInput("weight " + std::to_string(i) + " must be positive and finite");
      }
    }
  }

  Eigen::Index ambient_dim() const { return items_.front().basis.ambient_dim(); }
  std::size_t size() const { return items_.size(); }
  const WeightedSubspace<Scalar>& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<WeightedSubspace<Scalar>>& items() const { return items_; }

  /// Same subspaces, weights replaced.
  WeightedSubspaceFamily with_weights(const std::vector<double>& weights) const {
    if (weights.size() != items_.size()) throw DimensionMismatch("weight count mismatch");
    auto copy = items_;
    for (std::size_t i = 0; i < copy.size(); ++i) copy[i].weight = weights[i];
    return WeightedSubspaceFamily(std::move(copy));
  }

 private:
  std::vector<WeightedSubspace<Scalar>> items_;
};

template <FieldScalar Scalar>
Matrix<Scalar> fusion_frame_operator(const WeightedSubspaceFamily<Scalar>& family) {
  const auto n = family.ambient_dim();
  Matrix<Scalar> s = Matrix<Scalar>::Zero(n, n);
  for (const auto& item : family.items()) {
    s += (item.weight * item.weight) * projection(item.basis);
  }
  return s;
}

/// sum_i v_i^2 ||pi_{W_i} h||^2, evaluated term by term.
template <FieldScalar Scalar>
double fusion_quadratic_form(const WeightedSubspaceFamily<Scalar>& family,
                             const Vector<Scalar>& h) {
  if (h.size() != family.ambient_dim()) throw DimensionMismatch("vector dimension mismatch");
  double total = 0.0;
  for (const auto& item : family.items()) {
    // ||QQ*h|| = ||Q*h|| for orthonormal Q
    total += item.weight * item.weight * (item.basis.columns().adjoint() * h).squaredNorm();
  }
  return total;
}

template <FieldScalar Scalar>
FrameBounds fusion_bounds(const WeightedSubspaceFamily<Scalar>& family,
                          const Tolerances& tol = {}) {
  const auto eig = hermitian_eigen(hermitian_part(fusion_frame_operator(family)), tol);
  return {std::max(0.0, eig.values(0)), std::max(0.0, eig.values(eig.values.size() - 1)), true};
}

}  // namespace ccfusion
