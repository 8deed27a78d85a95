#pragma once

// Dense linear-algebra substrate. Every routine is templated on the scalar
// field (double or std::complex<double>) and works on Eigen dense types.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <string>
#include <vector>

#include "ccfusion/errors.hpp"
#include "ccfusion/tolerances.hpp"

namespace ccfusion {

using Complex = std::complex<double>;

template <typename Scalar>
concept FieldScalar = std::same_as<Scalar, double> || std::same_as<Scalar, Complex>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using RealVector = Eigen::VectorXd;

template <typename Scalar>
inline constexpr bool is_complex_v = std::same_as<Scalar, Complex>;

template <typename Scalar>
constexpr const char* field_name() {
  return is_complex_v<Scalar> ? "complex" : "real";
}

/// Largest singular value.
template <typename Derived>
double operator_norm(const Eigen::MatrixBase<Derived>& op) {
  if (op.size() == 0) return 0.0;
  using Plain = typename Derived::PlainObject;
  Eigen::JacobiSVD<Plain> svd(op.eval());
  return svd.singularValues()(0);
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

template <FieldScalar Scalar>
void require_operator(const Matrix<Scalar>& op, const char* what) {
  if (op.rows() != op.cols() || op.rows() == 0) {
    throw DimensionMismatch(std::string(what) + " must be a nonempty square matrix, got " +
                            std::to_string(op.rows()) + "x" + std::to_string(op.cols()));
  }
  if (!op.allFinite()) {
    throw InvalidInput(std::string(what) + " has non-finite entries");
  }
}

/// (M + M*) / 2
template <FieldScalar Scalar>
Matrix<Scalar> hermitian_part(const Matrix<Scalar>& op) {
  return (op + op.adjoint()) / 2.0;
}

/// ||M - M*|| / max(1, ||M||) in the operator norm.
template <FieldScalar Scalar>
double hermitian_residual(const Matrix<Scalar>& op) {
  const Matrix<Scalar> skew = op - op.adjoint();
  return operator_norm(skew) / std::max(1.0, operator_norm(op));
}

/// Orthonormal basis of a subspace of H = F^n, stored as the n x k matrix Q.
template <FieldScalar Scalar>
class SubspaceBasis {
 public:
  /// Wraps columns that are already orthonormal; throws InvalidInput if
  /// ||Q*Q - I_k|| exceeds tol.orth * k.
  static SubspaceBasis from_orthonormal(Matrix<Scalar> q, const Tolerances& tol = {}) {
    if (q.cols() == 0 || q.rows() == 0) throw ZeroSubspace("empty basis");
    if (q.cols() > q.rows()) {
      throw DimensionMismatch("basis has more columns than the ambient dimension");
    }
    if (!q.allFinite()) throw InvalidInput("basis has non-finite entries");
    const auto k = q.cols();
    const double defect =
        operator_norm((q.adjoint() * q - Matrix<Scalar>::Identity(k, k)).eval());
    if (defect > tol.orth * static_cast<double>(k)) {
      throw InvalidInput("basis columns are not orthonormal (||Q*Q - I|| = " +
                         std::to_string(defect) + ")");
    }
    return SubspaceBasis(std::move(q));
  }

  Eigen::Index ambient_dim() const { return q_.rows(); }
  Eigen::Index rank() const { return q_.cols(); }
  const Matrix<Scalar>& columns() const { return q_; }

 private:
  explicit SubspaceBasis(Matrix<Scalar> q) : q_(std::move(q)) {}
  Matrix<Scalar> q_;
};

/// Orthonormal basis for the column span of `vectors` (n x m).
///
/// Numerical rank is the number of singular values above
/// tol.rank * sigma_max. The basis itself comes from a column-pivoted
/// Householder QR, with each column's phase fixed so that diag(R) is real
/// and positive.
template <FieldScalar Scalar>
SubspaceBasis<Scalar> orthonormalize(const Matrix<Scalar>& vectors, const Tolerances& tol = {}) {
  if (vectors.rows() == 0) throw DimensionMismatch("vectors have dimension 0");
  if (vectors.cols() == 0) throw ZeroSubspace("no spanning vectors given");
  if (!vectors.allFinite()) throw InvalidInput("spanning vectors have non-finite entries");

  Eigen::JacobiSVD<Matrix<Scalar>> svd(vectors);
  const RealVector& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) throw ZeroSubspace("spanning vectors are all zero");
  const double cutoff = tol.rank * sv(0);
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;

  Eigen::ColPivHouseholderQR<Matrix<Scalar>> qr(vectors);
  const Eigen::Index n = vectors.rows();
  Matrix<Scalar> q = qr.householderQ() * Matrix<Scalar>::Identity(n, rank);
  const auto& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < rank; ++j) {
    const Scalar d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= (d / mag);
  }
  return SubspaceBasis<Scalar>::from_orthonormal(std::move(q), tol);
}

template <FieldScalar Scalar>
SubspaceBasis<Scalar> orthonormalize(const std::vector<Vector<Scalar>>& vectors,
                                     const Tolerances& tol = {}) {
  if (vectors.empty()) throw ZeroSubspace("no spanning vectors given");
  const auto n = vectors.front().size();
  Matrix<Scalar> m(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != n) {
      throw DimensionMismatch("spanning vector " + std::to_string(j) + " has dimension " +
                              std::to_string(vectors[j].size()) + ", expected " +
                              std::to_string(n));
    }
    m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return orthonormalize(m, tol);
}

/// Orthogonal projection QQ* onto the subspace.
template <FieldScalar Scalar>
Matrix<Scalar> projection(const SubspaceBasis<Scalar>& basis) {
  const auto& q = basis.columns();
  return q * q.adjoint();
}

template <FieldScalar Scalar>
struct HermitianEigen {
  RealVector values;       // ascending
  Matrix<Scalar> vectors;  // columns are orthonormal eigenvectors
};

/// Eigendecomposition of a Hermitian operator. Rejects inputs whose relative
/// Hermitian residual exceeds tol.herm; the decomposition is taken of the
/// Hermitian part so the result is exactly self-adjoint.
template <FieldScalar Scalar>
HermitianEigen<Scalar> hermitian_eigen(const Matrix<Scalar>& op, const Tolerances& tol = {}) {
  require_operator(op, "operator");
  const double residual = hermitian_residual(op);
  if (residual > tol.herm) {
    throw NotHermitian("operator is not Hermitian (relative residual " +
                           std::to_string(residual) + ")",
                       residual);
  }
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(hermitian_part(op));
  if (solver.info() != Eigen::Success) {
    throw InvalidInput("Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// V diag(f(lambda)) V*
template <FieldScalar Scalar, typename Fn>
Matrix<Scalar> spectral_map(const HermitianEigen<Scalar>& eig, Fn&& fn) {
  Vector<Scalar> mapped(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) mapped(i) = Scalar(fn(eig.values(i)));
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

/// |M| = V|Lambda|V* for Hermitian M.
template <FieldScalar Scalar>
Matrix<Scalar> spectral_abs(const Matrix<Scalar>& op, const Tolerances& tol = {}) {
  return spectral_map(hermitian_eigen(op, tol), [](double x) { return std::abs(x); });
}

/// Principal square root of a Hermitian PSD operator. Eigenvalues in
/// [-tol.psd * max(1, lambda_max), 0) are clipped to zero.
template <FieldScalar Scalar>
Matrix<Scalar> principal_sqrt_psd(const Matrix<Scalar>& op, const Tolerances& tol = {}) {
  const auto eig = hermitian_eigen(op, tol);
  const double lambda_min = eig.values(0);
  const double lambda_max = eig.values(eig.values.size() - 1);
  const double clip = tol.psd * std::max(1.0, lambda_max);
  if (lambda_min < -clip) {
    throw NotPSD("operator has negative eigenvalue " + std::to_string(lambda_min), lambda_min);
  }
  return spectral_map(eig, [](double x) { return std::sqrt(std::max(0.0, x)); });
}

/// Moore-Penrose pseudo-inverse of a (possibly rectangular) matrix with
/// relative singular-value cutoff tol.rank.
template <FieldScalar Scalar>
Matrix<Scalar> pseudo_inverse(const Matrix<Scalar>& m, const Tolerances& tol = {}) {
  if (m.size() == 0) return Matrix<Scalar>::Zero(m.cols(), m.rows());
  Eigen::JacobiSVD<Matrix<Scalar>> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  const double cutoff = tol.rank * sv(0);
  Vector<Scalar> inv(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    inv(i) = (sv(i) > cutoff && sv(i) > 0.0) ? Scalar(1.0 / sv(i)) : Scalar(0.0);
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

/// Numerical rank with relative cutoff tol.rank.
template <FieldScalar Scalar>
Eigen::Index numerical_rank(const Matrix<Scalar>& m, const Tolerances& tol = {}) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix<Scalar>> svd(m);
  const RealVector& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > tol.rank * sv(0)) ++rank;
  return rank;
}

struct InvertibilityReport {
  double smallest_singular_value = 0.0;
  double largest_singular_value = 0.0;
  double condition_number = std::numeric_limits<double>::infinity();
  bool is_invertible = false;
  bool is_positive = false;  // Hermitian with strictly positive spectrum
};

/// Membership test for GL(H), and GL+(H) through `is_positive`.
template <FieldScalar Scalar>
InvertibilityReport check_gl(const Matrix<Scalar>& op, const Tolerances& tol = {}) {
  require_operator(op, "operator");
  Eigen::JacobiSVD<Matrix<Scalar>> svd(op);
  const RealVector& sv = svd.singularValues();
  InvertibilityReport report;
  report.largest_singular_value = sv(0);
  report.smallest_singular_value = sv(sv.size() - 1);
  if (report.smallest_singular_value > 0.0) {
    report.condition_number = report.largest_singular_value / report.smallest_singular_value;
  }
  report.is_invertible = report.smallest_singular_value > tol.inv * report.largest_singular_value;
  if (report.is_invertible && hermitian_residual(op) <= tol.herm) {
    Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(hermitian_part(op),
                                                         Eigen::EigenvaluesOnly);
    const double lo = solver.eigenvalues()(0);
    const double hi = solver.eigenvalues()(solver.eigenvalues().size() - 1);
    report.is_positive = lo > 0.0 && lo > tol.inv * std::abs(hi);
  }
  return report;
}

/// Standard inner product <x, y> = y* x (linear in the first argument).
template <FieldScalar Scalar>
Scalar inner(const Vector<Scalar>& x, const Vector<Scalar>& y) {
  return y.dot(x);
}

}  // namespace ccfusion
