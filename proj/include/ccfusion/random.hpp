#pragma once

// Seeded generators for random instances.
//
// All randomness comes from std::mt19937_64 (whose output sequence is fixed
// by the C++ standard) combined with hand-written transforms: 53-bit uniform
// doubles and Box-Muller normals. std::normal_distribution is avoided since
// its output is implementation defined.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>
#include <vector>

#include "ccfusion/controlled.hpp"

namespace ccfusion {

inline constexpr std::string_view kRngName =
    "mt19937_64; uniform = (x >> 11) * 2^-53; normal = Box-Muller (cos branch)";

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<long>(x % span);
  }

  double normal() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  template <FieldScalar Scalar>
  Scalar normal_scalar() {
    if constexpr (is_complex_v<Scalar>) {
      const double re = normal();
      const double im = normal();
      return Complex(re, im) / std::sqrt(2.0);
    } else {
      return normal();
    }
  }

 private:
  std::mt19937_64 engine_;
};

template <FieldScalar Scalar>
Matrix<Scalar> random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Matrix<Scalar> m(rows, cols);
  // column-major fill order is part of the reproducibility contract
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.normal_scalar<Scalar>();
  return m;
}

template <FieldScalar Scalar>
Vector<Scalar> random_unit_vector(Eigen::Index n, Rng& rng) {
  Vector<Scalar> v = random_matrix<Scalar>(n, 1, rng);
  while (v.norm() == 0.0) v = random_matrix<Scalar>(n, 1, rng);
  return v / v.norm();
}

template <FieldScalar Scalar>
SubspaceBasis<Scalar> random_subspace(Eigen::Index n, Eigen::Index k, Rng& rng) {
  return orthonormalize<Scalar>(random_matrix<Scalar>(n, k, rng));
}

/// Haar-like unitary from the QR factor of a Gaussian matrix.
template <FieldScalar Scalar>
Matrix<Scalar> random_unitary(Eigen::Index n, Rng& rng) {
  return random_subspace<Scalar>(n, n, rng).columns();
}

/// Weight drawn log-uniformly from [0.5, 2].
inline double random_weight(Rng& rng) { return std::exp(rng.uniform(std::log(0.5), std::log(2.0))); }

/// Random family whose dimensions sum to at least n, so that it spans
/// generically. Subspace count is drawn from [2, n + 1].
template <FieldScalar Scalar>
WeightedSubspaceFamily<Scalar> random_family(Eigen::Index n, Rng& rng) {
  const long count = rng.integer(2, static_cast<long>(n) + 1);
  std::vector<Eigen::Index> dims;
  Eigen::Index total = 0;
  for (long i = 0; i < count; ++i) {
    const auto k = static_cast<Eigen::Index>(rng.integer(1, std::max<long>(1, n - 1)));
    dims.push_back(k);
    total += k;
  }
  for (std::size_t i = 0; total < n; i = (i + 1) % dims.size()) {
    if (dims[i] < n) {
      ++dims[i];
      ++total;
    }
  }
  std::vector<WeightedSubspace<Scalar>> items;
  for (const auto k : dims) items.push_back({random_subspace<Scalar>(n, k, rng), random_weight(rng)});
  return WeightedSubspaceFamily<Scalar>(std::move(items));
}

/// Replaces singular values below `floor` with `floor`.
template <FieldScalar Scalar>
Matrix<Scalar> lift_singular_values(const Matrix<Scalar>& m, double floor) {
  Eigen::JacobiSVD<Matrix<Scalar>> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RealVector sv = svd.singularValues().cwiseMax(floor);
  return svd.matrixU() * sv.template cast<Scalar>().asDiagonal() * svd.matrixV().adjoint();
}

/// Id + small Gaussian perturbation with smallest singular value >= 0.1.
template <FieldScalar Scalar>
Matrix<Scalar> random_control(Eigen::Index n, Rng& rng, double scale = 0.3) {
  Matrix<Scalar> m = Matrix<Scalar>::Identity(n, n) +
                     (scale / std::sqrt(static_cast<double>(n))) * random_matrix<Scalar>(n, n, rng);
  return lift_singular_values(m, 0.1);
}

/// Hermitian positive definite control, spectrum >= 0.1.
template <FieldScalar Scalar>
Matrix<Scalar> random_positive_control(Eigen::Index n, Rng& rng, double scale = 0.3) {
  const Matrix<Scalar> g = random_matrix<Scalar>(n, n, rng);
  const Matrix<Scalar> m = Matrix<Scalar>::Identity(n, n) +
                           (scale / std::sqrt(static_cast<double>(n))) * hermitian_part(g);
  const auto eig = hermitian_eigen(m);
  return spectral_map(eig, [](double x) { return std::max(x, 0.1); });
}

enum class GenConstraint {
  none,      // independent C and C'
  squared,   // C' = C
  identity,  // C = C' = Id
  gate,      // C' = C, C Hermitian positive definite: every C* pi C is PSD
};

template <FieldScalar Scalar>
ControlPair<Scalar> random_controls(Eigen::Index n, Rng& rng, GenConstraint constraint) {
  switch (constraint) {
    case GenConstraint::identity:
      return ControlPair<Scalar>::identity(n);
    case GenConstraint::squared: {
      Matrix<Scalar> c = random_control<Scalar>(n, rng);
      return ControlPair<Scalar>(c, c);
    }
    case GenConstraint::gate: {
      Matrix<Scalar> c = random_positive_control<Scalar>(n, rng);
      return ControlPair<Scalar>(c, c);
    }
    case GenConstraint::none:
      break;
  }
  Matrix<Scalar> c = random_control<Scalar>(n, rng);
  Matrix<Scalar> cp = random_control<Scalar>(n, rng);
  return ControlPair<Scalar>(std::move(c), std::move(cp));
}

template <FieldScalar Scalar>
ControlledFusionFrame<Scalar> random_controlled_frame(Eigen::Index n, Rng& rng,
                                                      GenConstraint constraint) {
  auto family = random_family<Scalar>(n, rng);
  auto controls = random_controls<Scalar>(n, rng, constraint);
  return ControlledFusionFrame<Scalar>(std::move(family), std::move(controls));
}

/// Each subspace replaced by the span of Q_i + delta * G_i, G_i Gaussian.
template <FieldScalar Scalar>
std::vector<SubspaceBasis<Scalar>> jitter_subspaces(const WeightedSubspaceFamily<Scalar>& family,
                                                    double delta, Rng& rng) {
  std::vector<SubspaceBasis<Scalar>> out;
  for (const auto& item : family.items()) {
    const auto& q = item.basis.columns();
    out.push_back(orthonormalize<Scalar>(
        (q + delta * random_matrix<Scalar>(q.rows(), q.cols(), rng)).eval()));
  }
  return out;
}

template <FieldScalar Scalar>
WeightedSubspaceFamily<Scalar> replace_subspaces(const WeightedSubspaceFamily<Scalar>& family,
                                                 const std::vector<SubspaceBasis<Scalar>>& subspaces) {
  if (subspaces.size() != family.size()) throw DimensionMismatch("subspace count mismatch");
  std::vector<WeightedSubspace<Scalar>> items;
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    items.push_back({subspaces[i], family[i].weight});
  }
  return WeightedSubspaceFamily<Scalar>(std::move(items));
}

}  // namespace ccfusion
