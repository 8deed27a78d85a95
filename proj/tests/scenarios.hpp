#pragma once

// Seeded constructions of instances that satisfy each verifier's hypothesis
// by design. Shared by the theorem unit tests and the acceptance suite.

#include <optional>
#include <utility>
#include <vector>

#include "ccfusion/random.hpp"
#include "ccfusion/theorems.hpp"

namespace ccfusion::scenarios {

template <FieldScalar Scalar>
struct TransformCase {
  ControlledFusionFrame<Scalar> frame;
  Matrix<Scalar> u;
};

/// C general invertible, C' = C, u* = a Id + b C so that u* commutes with C.
template <FieldScalar Scalar>
TransformCase<Scalar> adjoint_commuting_case(Eigen::Index n, Rng& rng) {
  auto frame = random_controlled_frame<Scalar>(n, rng, GenConstraint::squared);
  const Matrix<Scalar>& c = frame.controls().c();
  for (;;) {
    const double a = rng.uniform(0.5, 2.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    const Scalar b = rng.uniform(-1.0, 1.0) * rng.normal_scalar<Scalar>();
    const Matrix<Scalar> u_adj = a * Matrix<Scalar>::Identity(n, n) + b * c;
    const Matrix<Scalar> u = u_adj.adjoint();
    if (check_gl(u).condition_number < 1e4) return {std::move(frame), u};
  }
}

/// C diagonal with entries repeated across a few groups; u unitary acting
/// within each group (or a permutation within groups), so uC = Cu.
template <FieldScalar Scalar>
TransformCase<Scalar> unitary_commuting_case(Eigen::Index n, Rng& rng) {
  const long groups = rng.integer(1, std::max<long>(1, n / 2));
  std::vector<double> values;
  for (long g = 0; g < groups; ++g) values.push_back(rng.uniform(0.3, 3.0) * (rng.uniform() < 0.3 ? -1.0 : 1.0));
  std::vector<std::vector<Eigen::Index>> members(static_cast<std::size_t>(groups));
  Matrix<Scalar> c = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto g = static_cast<std::size_t>(rng.integer(0, groups - 1));
    members[g].push_back(i);
    c(i, i) = values[g];
  }
  const bool permutation = rng.uniform() < 0.3;
  Matrix<Scalar> u = Matrix<Scalar>::Zero(n, n);
  for (const auto& idx : members) {
    if (idx.empty()) continue;
    const auto k = static_cast<Eigen::Index>(idx.size());
    Matrix<Scalar> block;
    if (permutation) {
      block = Matrix<Scalar>::Zero(k, k);
      std::vector<Eigen::Index> perm(static_cast<std::size_t>(k));
      for (Eigen::Index i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
      for (Eigen::Index i = k - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(rng.integer(0, i))]);
      for (Eigen::Index i = 0; i < k; ++i) block(perm[static_cast<std::size_t>(i)], i) = 1.0;
    } else {
      block = random_unitary<Scalar>(k, rng);
    }
    for (Eigen::Index a = 0; a < k; ++a)
      for (Eigen::Index b = 0; b < k; ++b) u(idx[a], idx[b]) = block(a, b);
  }
  auto family = random_family<Scalar>(n, rng);
  ControlledFusionFrame<Scalar> frame(std::move(family), ControlPair<Scalar>(c, c));
  return {std::move(frame), std::move(u)};
}

template <FieldScalar Scalar>
struct FramePair {
  ControlledFusionFrame<Scalar> w;
  ControlledFusionFrame<Scalar> z;
};

/// F^{-1/2} for the fusion operator F of the family.
template <FieldScalar Scalar>
Matrix<Scalar> whitening_control(const WeightedSubspaceFamily<Scalar>& family) {
  const auto eig = hermitian_eigen(fusion_frame_operator(family));
  return spectral_map(eig, [](double x) { return 1.0 / std::sqrt(x); });
}

template <FieldScalar Scalar>
WeightedSubspaceFamily<Scalar> scaled(const WeightedSubspaceFamily<Scalar>& family, double factor) {
  std::vector<double> w;
  for (const auto& item : family.items()) w.push_back(item.weight * factor);
  return family.with_weights(w);
}

/// W and Z share C = C' close to F_W^{-1/2}, so T*_Z T_W is near the
/// identity. W's weights are multiplied by t and Z's divided by t, which
/// makes B_W and B_Z differ by t^4.
template <FieldScalar Scalar>
FramePair<Scalar> approximate_dual_pair(Eigen::Index n, Rng& rng) {
  const auto base = random_family<Scalar>(n, rng);
  Matrix<Scalar> c = whitening_control(base);
  c += (0.05 / std::sqrt(static_cast<double>(n))) * operator_norm(c) * random_matrix<Scalar>(n, n, rng);
  const ControlPair<Scalar> controls(c, c);
  const double t = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
  auto z_family = replace_subspaces(base, jitter_subspaces(base, 0.05, rng));
  std::vector<double> zw;
  for (const auto& item : z_family.items()) zw.push_back(item.weight * rng.uniform(0.95, 1.05) / t);
  return {ControlledFusionFrame<Scalar>(scaled(base, t), controls),
          ControlledFusionFrame<Scalar>(z_family.with_weights(zw), controls)};
}

/// T*_Z T_W = Id exactly: C = C' = F^{-1/2}, W weights t v_i, Z weights v_i / t.
template <FieldScalar Scalar>
FramePair<Scalar> exact_dual_pair(Eigen::Index n, Rng& rng, double t) {
  const auto base = random_family<Scalar>(n, rng);
  const Matrix<Scalar> c = whitening_control(base);
  const ControlPair<Scalar> controls(c, c);
  return {ControlledFusionFrame<Scalar>(scaled(base, t), controls),
          ControlledFusionFrame<Scalar>(scaled(base, 1.0 / t), controls)};
}

/// Gate-passing W and a nearby gate-passing W~ with the same controls.
template <FieldScalar Scalar>
FramePair<Scalar> q_dual_pair(Eigen::Index n, Rng& rng, double jitter = 0.2) {
  for (;;) {
    auto w = random_controlled_frame<Scalar>(n, rng, GenConstraint::gate);
    if (!is_frame(controlled_bounds(w).classification)) continue;
    auto zf = replace_subspaces(w.family(), jitter_subspaces(w.family(), jitter, rng));
    std::vector<double> weights;
    for (std::size_t i = 0; i < zf.size(); ++i) weights.push_back(random_weight(rng));
    auto z = w.with_family(zf.with_weights(weights));
    if (!is_frame(controlled_bounds(z).classification)) continue;
    return {std::move(w), std::move(z)};
  }
}

/// Z_i is W_i with one basis direction dropped (for some indices), so
/// pi_{Z_i} <= pi_{W_i} and the difference form is nonnegative. Redundant
/// families keep Z a frame.
template <FieldScalar Scalar>
FramePair<Scalar> nested_pair(Eigen::Index n, Rng& rng) {
  for (;;) {
    std::vector<WeightedSubspace<Scalar>> items;
    const long count = rng.integer(n + 1, 2 * n + 2);
    for (long i = 0; i < count; ++i) {
      const auto k = static_cast<Eigen::Index>(rng.integer(1, n));
      items.push_back({random_subspace<Scalar>(n, k, rng), random_weight(rng)});
    }
    WeightedSubspaceFamily<Scalar> family(std::move(items));
    const ControlledFusionFrame<Scalar> w(family, random_controls<Scalar>(n, rng, GenConstraint::gate));
    std::vector<SubspaceBasis<Scalar>> sub;
    bool changed = false;
    for (const auto& item : family.items()) {
      const auto k = item.basis.rank();
      if (k >= 2 && rng.uniform() < 0.3) {
        sub.push_back(SubspaceBasis<Scalar>::from_orthonormal(item.basis.columns().leftCols(k - 1)));
        changed = true;
      } else {
        sub.push_back(item.basis);
      }
    }
    if (!changed) continue;
    auto z = w.with_family(replace_subspaces(family, sub));
    if (!is_frame(controlled_bounds(z).classification)) continue;
    return {w, std::move(z)};
  }
}

/// Single-plane rotation by theta in span{p, q}.
template <FieldScalar Scalar>
Matrix<Scalar> plane_rotation(const Vector<Scalar>& p, const Vector<Scalar>& q, double theta) {
  const auto n = p.size();
  return Matrix<Scalar>::Identity(n, n) + (std::cos(theta) - 1.0) * (p * p.adjoint() + q * q.adjoint()) +
         std::sin(theta) * (q * p.adjoint() - p * q.adjoint());
}

template <FieldScalar Scalar>
std::vector<SubspaceBasis<Scalar>> rotated_subspaces(const WeightedSubspaceFamily<Scalar>& family,
                                                     const Matrix<Scalar>& rotation) {
  std::vector<SubspaceBasis<Scalar>> out;
  for (const auto& item : family.items()) {
    out.push_back(orthonormalize<Scalar>((rotation * item.basis.columns()).eval()));
  }
  return out;
}

}  // namespace ccfusion::scenarios
