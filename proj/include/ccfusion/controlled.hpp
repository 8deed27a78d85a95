#pragma once

// CC'-controlled fusion frames.
//
// For a weighted family {(W_i, v_i)} and invertible controls C, C' the
// controlled frame operator is
//
//     S_W = sum_i v_i^2 C* pi_{W_i} C'
//
// and its quadratic form <S_W f, f> equals sum_i v_i^2 <pi_i C' f, pi_i C f>.
// S_W need not be self-adjoint, so optimal bounds are taken from the
// Hermitian part (S_W + S_W*) / 2, which carries Re <S_W f, f>.
//
// The analysis operator T_W f = (v_i (C* pi_i C')^{1/2} f)_i needs a square
// root of every local operator C* pi_i C'. That only exists when the local
// operator is Hermitian PSD, so the square-root based routines are gated and
// throw SqrtGateFailed otherwise. The form-based routines always work.

#include <algorithm>
#include <cmath>
#include <vector>

#include "ccfusion/bounds.hpp"
#include "ccfusion/fusion.hpp"
#include "ccfusion/hilbert.hpp"

namespace ccfusion {

template <FieldScalar Scalar>
class ControlPair {
 public:
  ControlPair(Matrix<Scalar> c, Matrix<Scalar> c_prime, const Tolerances& tol = {})
      : c_(std::move(c)), c_prime_(std::move(c_prime)) {
    require_operator(c_, "C");
    require_operator(c_prime_, "C'");
    if (c_.rows() != c_prime_.rows()) throw DimensionMismatch("C and C' differ in dimension");
    c_report_ = check_gl(c_, tol);
    c_prime_report_ = check_gl(c_prime_, tol);
    if (!c_report_.is_invertible) throw NotInvertible("C is not invertible");
    if (!c_prime_report_.is_invertible) throw NotInvertible("C' is not invertible");
  }

  static ControlPair identity(Eigen::Index n) {
    return ControlPair(Matrix<Scalar>::Identity(n, n), Matrix<Scalar>::Identity(n, n));
  }

  Eigen::Index dim() const { return c_.rows(); }
  const Matrix<Scalar>& c() const { return c_; }
  const Matrix<Scalar>& c_prime() const { return c_prime_; }
  const InvertibilityReport& c_report() const { return c_report_; }
  const InvertibilityReport& c_prime_report() const { return c_prime_report_; }

  /// ||C - C'|| / max(1, ||C||)
  double squared_residual() const {
    return operator_norm((c_ - c_prime_).eval()) / std::max(1.0, operator_norm(c_));
  }

 private:
  Matrix<Scalar> c_;
  Matrix<Scalar> c_prime_;
  InvertibilityReport c_report_;
  InvertibilityReport c_prime_report_;
};

template <FieldScalar Scalar>
class ControlledFusionFrame {
 public:
  ControlledFusionFrame(WeightedSubspaceFamily<Scalar> family, ControlPair<Scalar> controls)
      : family_(std::move(family)), controls_(std::move(controls)) {
    if (family_.ambient_dim() != controls_.dim()) {
      throw DimensionMismatch("subspaces live in dimension " +
                              std::to_string(family_.ambient_dim()) + " but controls are " +
                              std::to_string(controls_.dim()) + "x" +
                              std::to_string(controls_.dim()));
    }
  }

  Eigen::Index dim() const { return family_.ambient_dim(); }
  std::size_t size() const { return family_.size(); }
  const WeightedSubspaceFamily<Scalar>& family() const { return family_; }
  const ControlPair<Scalar>& controls() const { return controls_; }

  ControlledFusionFrame with_family(WeightedSubspaceFamily<Scalar> family) const {
    return ControlledFusionFrame(std::move(family), controls_);
  }

 private:
  WeightedSubspaceFamily<Scalar> family_;
  ControlPair<Scalar> controls_;
};

/// Stacked per-index coefficient vectors; the finite stand-in for K_{2,W}.
template <FieldScalar Scalar>
struct BlockVector {
  std::vector<Vector<Scalar>> blocks;

  double squared_norm() const {
    double total = 0.0;
    for (const auto& b : blocks) total += b.squaredNorm();
    return total;
  }

  Vector<Scalar> stacked() const {
    if (blocks.empty()) return {};
    const auto n = blocks.front().size();
    Vector<Scalar> out(n * static_cast<Eigen::Index>(blocks.size()));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      out.segment(static_cast<Eigen::Index>(i) * n, n) = blocks[i];
    }
    return out;
  }

  static BlockVector from_stacked(const Vector<Scalar>& v, Eigen::Index n) {
    BlockVector out;
    for (Eigen::Index off = 0; off < v.size(); off += n) out.blocks.push_back(v.segment(off, n));
    return out;
  }
};

struct BoundsReport {
  FrameBounds bounds;
  double hermitian_residual = 0.0;
  bool form_is_real = true;
  Classification classification = Classification::bessel_only;
};

/// C* pi_{W_i} C' (unweighted).
template <FieldScalar Scalar>
Matrix<Scalar> local_operator(const ControlledFusionFrame<Scalar>& frame, std::size_t i) {
  const auto& ctl = frame.controls();
  return ctl.c().adjoint() * projection(frame.family()[i].basis) * ctl.c_prime();
}

template <FieldScalar Scalar>
Matrix<Scalar> controlled_frame_operator(const ControlledFusionFrame<Scalar>& frame) {
  const auto n = frame.dim();
  Matrix<Scalar> s = Matrix<Scalar>::Zero(n, n);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const double w = frame.family()[i].weight;
    s += (w * w) * local_operator(frame, i);
  }
  return s;
}

/// sum_i v_i^2 <pi_i C' f, pi_i C f>, evaluated term by term. Over the
/// complex field the imaginary part is returned as well.
template <FieldScalar Scalar>
Scalar controlled_quadratic_form(const ControlledFusionFrame<Scalar>& frame,
                                 const Vector<Scalar>& f) {
  if (f.size() != frame.dim()) throw DimensionMismatch("vector dimension mismatch");
  const Vector<Scalar> cf = frame.controls().c() * f;
  const Vector<Scalar> cpf = frame.controls().c_prime() * f;
  Scalar total(0.0);
  for (const auto& item : frame.family().items()) {
    const auto& q = item.basis.columns();
    // <pi C'f, pi Cf> = (Q*Cf)* (Q*C'f) since pi = QQ* and Q*Q = I
    const Vector<Scalar> a = q.adjoint() * cpf;
    const Vector<Scalar> b = q.adjoint() * cf;
    total += (item.weight * item.weight) * inner<Scalar>(a, b);
  }
  return total;
}

/// Optimal bounds from the Hermitian part of S_W, plus classification.
template <FieldScalar Scalar>
BoundsReport controlled_bounds(const ControlledFusionFrame<Scalar>& frame,
                               const Tolerances& tol = {}) {
  const Matrix<Scalar> s = controlled_frame_operator(frame);
  const auto eig = hermitian_eigen(hermitian_part(s), tol);
  BoundsReport report;
  report.bounds = {eig.values(0), eig.values(eig.values.size() - 1), true};
  report.hermitian_residual = hermitian_residual(s);
  // Over R the form only sees the symmetric part, so it is always real.
  report.form_is_real = !is_complex_v<Scalar> || report.hermitian_residual <= tol.herm;

  const double scale = std::max(1.0, std::abs(report.bounds.upper));
  if (!report.form_is_real || report.bounds.lower < -tol.classify * scale) {
    report.classification = Classification::not_bessel_form;
  } else {
    report.classification = classify(report.bounds, tol);
  }
  return report;
}

/// Extremal eigenpairs of H(S_W); the eigenvectors attain A and B.
template <FieldScalar Scalar>
HermitianEigen<Scalar> controlled_spectrum(const ControlledFusionFrame<Scalar>& frame,
                                           const Tolerances& tol = {}) {
  return hermitian_eigen(hermitian_part(controlled_frame_operator(frame)), tol);
}

/// v_i (C* pi_i C')^{1/2} for every index, or SqrtGateFailed naming the first
/// index whose local operator is not Hermitian PSD.
template <FieldScalar Scalar>
std::vector<Matrix<Scalar>> gated_factors(const ControlledFusionFrame<Scalar>& frame,
                                          const Tolerances& tol = {}) {
  std::vector<Matrix<Scalar>> factors;
  factors.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Matrix<Scalar> local = local_operator(frame, i);
    try {
      factors.push_back(frame.family()[i].weight * principal_sqrt_psd(local, tol));
    } catch (const NotHermitian& e) {
      throw SqrtGateFailed("local operator C* pi_W C' at index " + std::to_string(i) +
                               " (1-based " + std::to_string(i + 1) +
                               ") is not Hermitian, relative residual " +
                               std::to_string(e.residual()),
                           i, ErrorKind::NotHermitian, e.residual());
    } catch (const NotPSD& e) {
      throw SqrtGateFailed("local operator C* pi_W C' at index " + std::to_string(i) +
                               " (1-based " + std::to_string(i + 1) +
                               ") has negative eigenvalue " + std::to_string(e.eigenvalue()),
                           i, ErrorKind::NotPSD, e.eigenvalue());
    }
  }
  return factors;
}

/// True when every local operator passes the square-root gate.
template <FieldScalar Scalar>
bool passes_sqrt_gate(const ControlledFusionFrame<Scalar>& frame, const Tolerances& tol = {}) {
  try {
    gated_factors(frame, tol);
    return true;
  } catch (const SqrtGateFailed&) {
    return false;
  }
}

/// T_W as a stacked (m n) x n matrix.
template <FieldScalar Scalar>
Matrix<Scalar> analysis_matrix(const ControlledFusionFrame<Scalar>& frame,
                               const Tolerances& tol = {}) {
  const auto factors = gated_factors(frame, tol);
  const auto n = frame.dim();
  Matrix<Scalar> t(n * static_cast<Eigen::Index>(factors.size()), n);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    t.middleRows(static_cast<Eigen::Index>(i) * n, n) = factors[i];
  }
  return t;
}

/// T*_W as an n x (m n) matrix.
template <FieldScalar Scalar>
Matrix<Scalar> synthesis_matrix(const ControlledFusionFrame<Scalar>& frame,
                                const Tolerances& tol = {}) {
  return analysis_matrix(frame, tol).adjoint();
}

template <FieldScalar Scalar>
BlockVector<Scalar> controlled_analysis(const ControlledFusionFrame<Scalar>& frame,
                                        const Vector<Scalar>& f, const Tolerances& tol = {}) {
  if (f.size() != frame.dim()) throw DimensionMismatch("vector dimension mismatch");
  BlockVector<Scalar> out;
  for (const auto& factor : gated_factors(frame, tol)) out.blocks.push_back(factor * f);
  return out;
}

template <FieldScalar Scalar>
Vector<Scalar> controlled_synthesis(const ControlledFusionFrame<Scalar>& frame,
                                    const BlockVector<Scalar>& blocks,
                                    const Tolerances& tol = {}) {
  if (blocks.blocks.size() != frame.size()) {
    throw DimensionMismatch("block count " + std::to_string(blocks.blocks.size()) +
                            " does not match family size " + std::to_string(frame.size()));
  }
  const auto factors = gated_factors(frame, tol);
  Vector<Scalar> out = Vector<Scalar>::Zero(frame.dim());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (blocks.blocks[i].size() != frame.dim()) {
      throw DimensionMismatch("block " + std::to_string(i) + " has the wrong dimension");
    }
    // factors are Hermitian, so the adjoint of each block map is itself
    out += factors[i] * blocks.blocks[i];
  }
  return out;
}

/// Validates the frame and factors S_W once, for repeated solves of S_W x = g.
template <FieldScalar Scalar>
class Reconstructor {
 public:
  explicit Reconstructor(const ControlledFusionFrame<Scalar>& frame, const Tolerances& tol = {})
      : tol_(tol) {
    const BoundsReport report = controlled_bounds(frame, tol);
    if (!is_frame(report.classification)) {
      throw NotAFrame(std::string("family is not a controlled fusion frame (classification ") +
                      to_string(report.classification) + ", A = " +
                      std::to_string(report.bounds.lower) + ")");
    }
    s_ = controlled_frame_operator(frame);
    if (!check_gl(s_, tol).is_invertible) throw SingularOperator("S_W is numerically singular");
    qr_.compute(s_);
  }

  Eigen::Index dim() const { return s_.rows(); }

  Vector<Scalar> operator()(const Vector<Scalar>& g) const {
    if (g.size() != dim()) throw DimensionMismatch("vector dimension mismatch");
    const Vector<Scalar> x = qr_.solve(g);
    const double residual = (s_ * x - g).norm();
    if (residual > tol_.reconstruct * std::max(g.norm(), std::numeric_limits<double>::min())) {
      throw SingularOperator("reconstruction residual " + std::to_string(residual) +
                             " exceeds tolerance");
    }
    return x;
  }

 private:
  Tolerances tol_;
  Matrix<Scalar> s_;
  Eigen::ColPivHouseholderQR<Matrix<Scalar>> qr_;
};

/// Recovers f from g = S_W f by a dense solve.
template <FieldScalar Scalar>
Vector<Scalar> reconstruct(const ControlledFusionFrame<Scalar>& frame, const Vector<Scalar>& g,
                           const Tolerances& tol = {}) {
  if (g.size() != frame.dim()) throw DimensionMismatch("vector dimension mismatch");
  return Reconstructor<Scalar>(frame, tol)(g);
}

}  // namespace ccfusion
