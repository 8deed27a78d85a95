#pragma once

// Numerical verifiers for the structural results on controlled fusion frames.
//
// Every verifier measures the result's hypothesis on a concrete instance,
// evaluates the bounds the result predicts, computes the actual optimal
// bounds, and records whether the actual bounds sit where the prediction
// says they must. The invariant the test suites enforce is
//
//     hypothesis_satisfied  =>  containment_ok

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ccfusion/controlled.hpp"
#include "ccfusion/random.hpp"

namespace ccfusion {

/// How actual bounds must relate to predicted ones.
enum class Relation {
  enclosing,  // predicted.lower <= actual.lower and actual.upper <= predicted.upper
  floors,     // actual.lower >= predicted.lower and actual.upper >= predicted.upper
};

struct BoundsCheck {
  std::string subject;
  FrameBounds predicted;
  FrameBounds actual;
  Relation relation = Relation::enclosing;
  bool ok = false;
};

struct TheoremReport {
  std::string theorem_id;
  bool hypothesis_satisfied = false;
  FrameBounds predicted_bounds;  // of the first check
  FrameBounds actual_bounds;
  bool containment_ok = false;   // all checks
  std::vector<BoundsCheck> checks;
  std::vector<std::pair<std::string, double>> diagnostics;
  std::vector<std::string> notes;

  bool passes() const { return !hypothesis_satisfied || containment_ok; }

  double diagnostic(const std::string& key) const {
    for (const auto& [k, v] : diagnostics)
      if (k == key) return v;
    return std::numeric_limits<double>::quiet_NaN();
  }
};

inline bool check_relation(const FrameBounds& predicted, const FrameBounds& actual,
                           Relation relation, double tau) {
  if (relation == Relation::enclosing) {
    return predicted.lower <= actual.lower + tau && actual.upper <= predicted.upper + tau;
  }
  return actual.lower >= predicted.lower - tau && actual.upper >= predicted.upper - tau;
}

namespace detail {

inline void add_check(TheoremReport& report, std::string subject, FrameBounds predicted,
                      FrameBounds actual, Relation relation, const Tolerances& tol) {
  BoundsCheck check{std::move(subject), predicted, actual, relation,
                    check_relation(predicted, actual, relation, tol.containment)};
  if (report.checks.empty()) {
    report.predicted_bounds = predicted;
    report.actual_bounds = actual;
  }
  report.checks.push_back(std::move(check));
  report.containment_ok = std::all_of(report.checks.begin(), report.checks.end(),
                                      [](const BoundsCheck& c) { return c.ok; });
}

template <FieldScalar Scalar>
double relative_norm(const Matrix<Scalar>& m, double scale) {
  return operator_norm(m) / std::max(1.0, scale);
}

template <FieldScalar Scalar>
void require_same_controls(const ControlledFusionFrame<Scalar>& a,
                           const ControlledFusionFrame<Scalar>& b, const Tolerances& tol) {
  if (a.dim() != b.dim()) throw DimensionMismatch("frames live in different dimensions");
  const auto& ca = a.controls();
  const auto& cb = b.controls();
  const double dc = relative_norm<Scalar>(ca.c() - cb.c(), operator_norm(ca.c()));
  const double dcp = relative_norm<Scalar>(ca.c_prime() - cb.c_prime(), operator_norm(ca.c_prime()));
  if (dc > tol.hypothesis || dcp > tol.hypothesis) {
    throw HypothesisViolated("both families must be controlled by the same C and C'");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Invertible transforms of C^2-controlled frames

enum class TransformMode {
  adjoint_commuting,  // u invertible, u* C = C u*
  unitary_commuting,  // u unitary, u C = C u
};

inline const char* to_string(TransformMode m) {
  return m == TransformMode::adjoint_commuting ? "adjoint_commuting" : "unitary_commuting";
}

/// {(u W_i, v_i)}: each basis is pushed through u and re-orthonormalized.
template <FieldScalar Scalar>
ControlledFusionFrame<Scalar> transform_frame(const ControlledFusionFrame<Scalar>& frame,
                                              const Matrix<Scalar>& u, const Tolerances& tol = {}) {
  std::vector<WeightedSubspace<Scalar>> items;
  for (const auto& item : frame.family().items()) {
    items.push_back({orthonormalize<Scalar>((u * item.basis.columns()).eval(), tol), item.weight});
  }
  return frame.with_family(WeightedSubspaceFamily<Scalar>(std::move(items)));
}

/// For a C^2-controlled frame with bounds A, B and an invertible u that
/// commutes with C (through u* or, for unitary u, directly), {(uW_i, v_i)}
/// has bounds A / (||u||^2 ||u^-1||^2) and B ||u||^2 ||u^-1||^2.
template <FieldScalar Scalar>
TheoremReport verify_transform(const ControlledFusionFrame<Scalar>& frame, const Matrix<Scalar>& u,
                               TransformMode mode, const Tolerances& tol = {}) {
  require_operator(u, "u");
  if (u.rows() != frame.dim()) throw DimensionMismatch("u does not match the frame dimension");
  const auto& ctl = frame.controls();
  const double c_residual = ctl.squared_residual();
  if (c_residual > tol.hypothesis) {
    throw NotCSquared("frame is not C^2-controlled: ||C - C'|| relative residual " +
                      std::to_string(c_residual));
  }
  const auto gl = check_gl(u, tol);
  if (!gl.is_invertible) throw HypothesisViolated("u is not invertible");

  const Matrix<Scalar>& c = ctl.c();
  const double scale = gl.largest_singular_value * operator_norm(c);
  const Eigen::Index n = frame.dim();
  double commutation = 0.0;
  double unitarity = 0.0;
  if (mode == TransformMode::adjoint_commuting) {
    commutation = detail::relative_norm<Scalar>(u.adjoint() * c - c * u.adjoint(), scale);
  } else {
    commutation = detail::relative_norm<Scalar>(u * c - c * u, scale);
    unitarity = operator_norm((u.adjoint() * u - Matrix<Scalar>::Identity(n, n)).eval());
  }
  if (commutation > tol.hypothesis) {
    throw HypothesisViolated(std::string("u does not commute with C as required by mode ") +
                             to_string(mode) + " (relative residual " +
                             std::to_string(commutation) + ")");
  }
  if (unitarity > tol.hypothesis) {
    throw HypothesisViolated("u is not unitary (||u*u - I|| = " + std::to_string(unitarity) + ")");
  }

  const double norm_u = gl.largest_singular_value;
  const double norm_u_inv = 1.0 / gl.smallest_singular_value;
  const double k = norm_u * norm_u * norm_u_inv * norm_u_inv;

  const BoundsReport original = controlled_bounds(frame, tol);
  const BoundsReport moved = controlled_bounds(transform_frame(frame, u, tol), tol);

  TheoremReport report;
  report.theorem_id = mode == TransformMode::adjoint_commuting ? "transform-adjoint-commuting"
                                                               : "transform-unitary-commuting";
  report.hypothesis_satisfied = is_frame(original.classification);
  if (!report.hypothesis_satisfied) report.notes.push_back("original family is not a frame");
  detail::add_check(report, "uW", {original.bounds.lower / k, original.bounds.upper * k, false},
                    moved.bounds, Relation::enclosing, tol);
  report.diagnostics = {{"norm_u", norm_u},
                        {"norm_u_inverse", norm_u_inv},
                        {"commutation_residual", commutation},
                        {"unitarity_residual", unitarity},
                        {"c_squared_residual", c_residual}};
  return report;
}

// ---------------------------------------------------------------------------
// Approximate duals: ||f - T*_Z T_W f|| <= eps ||f|| with eps < 1

/// W and Z are controlled frames when ||Id - T*_Z T_W|| = eps < 1. The
/// bounds follow from (1 - eps)||f|| <= ||T*_Z T_W f|| <= sqrt(B_Z) ||T_W f||,
/// so the lower bound of W is (1 - eps)^2 / B_Z, and symmetrically
/// (T*_W T_Z is the adjoint) the lower bound of Z is (1 - eps)^2 / B_W.
template <FieldScalar Scalar>
TheoremReport verify_approximate_dual(const ControlledFusionFrame<Scalar>& w,
                                      const ControlledFusionFrame<Scalar>& z,
                                      const Tolerances& tol = {}) {
  detail::require_same_controls(w, z, tol);
  if (w.size() != z.size()) throw DimensionMismatch("families have different index sets");
  const Matrix<Scalar> tw = analysis_matrix(w, tol);
  const Matrix<Scalar> tz = analysis_matrix(z, tol);
  const Eigen::Index n = w.dim();
  const Matrix<Scalar> defect = Matrix<Scalar>::Identity(n, n) - tz.adjoint() * tw;
  const double eps = operator_norm(defect);

  const BoundsReport bw = controlled_bounds(w, tol);
  const BoundsReport bz = controlled_bounds(z, tol);

  TheoremReport report;
  report.theorem_id = "approximate-dual";
  report.hypothesis_satisfied = eps < 1.0;
  const double gap = (1.0 - eps) * (1.0 - eps);
  detail::add_check(report, "W", {gap / bz.bounds.upper, bw.bounds.upper, false}, bw.bounds,
                    Relation::enclosing, tol);
  detail::add_check(report, "Z", {gap / bw.bounds.upper, bz.bounds.upper, false}, bz.bounds,
                    Relation::enclosing, tol);
  report.diagnostics = {{"epsilon", eps},
                        {"exact_dual", eps <= tol.qdual ? 1.0 : 0.0},
                        {"B_W", bw.bounds.upper},
                        {"B_Z", bz.bounds.upper}};
  return report;
}

// ---------------------------------------------------------------------------
// Subspace perturbation with the same weights and controls

template <FieldScalar Scalar>
struct SubspacePerturbation {
  double epsilon_eff = 0.0;      // sqrt(lambda_max(sum_i |H(D_i)|))
  bool differences_psd = true;   // every D_i Hermitian PSD: epsilon_eff is exact
};

/// D_i = v_i^2 (C* pi_{W_i} C' - C* pi_{Z_i} C'); returns the conservative
/// effective epsilon.
template <FieldScalar Scalar>
SubspacePerturbation<Scalar> subspace_perturbation_size(
    const ControlledFusionFrame<Scalar>& w, const std::vector<SubspaceBasis<Scalar>>& z_subspaces,
    const Tolerances& tol = {}) {
  if (z_subspaces.size() != w.size()) throw DimensionMismatch("subspace count mismatch");
  const Eigen::Index n = w.dim();
  const auto& ctl = w.controls();
  Matrix<Scalar> total = Matrix<Scalar>::Zero(n, n);
  SubspacePerturbation<Scalar> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (z_subspaces[i].ambient_dim() != n) throw DimensionMismatch("subspace dimension mismatch");
    const double v2 = w.family()[i].weight * w.family()[i].weight;
    const Matrix<Scalar> d =
        v2 * (local_operator(w, i) - ctl.c().adjoint() * projection(z_subspaces[i]) * ctl.c_prime());
    const Matrix<Scalar> h = hermitian_part(d);
    const auto eig = hermitian_eigen(h, tol);
    const double scale = std::max(1.0, operator_norm(d));
    if (hermitian_residual(d) > tol.herm || eig.values(0) < -tol.psd * scale) {
      out.differences_psd = false;
    }
    total += spectral_map(eig, [](double x) { return std::abs(x); });
  }
  const auto eig = hermitian_eigen(hermitian_part(total), tol);
  out.epsilon_eff = std::sqrt(std::max(0.0, eig.values(eig.values.size() - 1)));
  return out;
}

/// If the per-vector perturbation is bounded by eps ||f|| with eps < sqrt(A),
/// then {(Z_i, v_i)} has bounds A - eps^2 and B + eps^2.
template <FieldScalar Scalar>
TheoremReport verify_subspace_perturbation(const ControlledFusionFrame<Scalar>& w,
                                           const std::vector<SubspaceBasis<Scalar>>& z_subspaces,
                                           double epsilon, const Tolerances& tol = {}) {
  if (!std::isfinite(epsilon) || epsilon < 0.0) throw InvalidParams("epsilon must be >= 0");
  const auto size = subspace_perturbation_size(w, z_subspaces, tol);
  const auto z = w.with_family(replace_subspaces(w.family(), z_subspaces));
  const BoundsReport bw = controlled_bounds(w, tol);
  const BoundsReport bz = controlled_bounds(z, tol);

  TheoremReport report;
  report.theorem_id = "subspace-perturbation";
  const double sqrt_a = std::sqrt(std::max(0.0, bw.bounds.lower));
  report.hypothesis_satisfied = size.epsilon_eff <= epsilon && epsilon < sqrt_a;
  if (!size.differences_psd) {
    report.notes.push_back(
        "some C* pi_W C' - C* pi_Z C' is not Hermitian PSD; epsilon_eff is a conservative surrogate");
  }
  const double e2 = epsilon * epsilon;
  detail::add_check(report, "Z", {bw.bounds.lower - e2, bw.bounds.upper + e2, false}, bz.bounds,
                    Relation::enclosing, tol);
  report.diagnostics = {{"epsilon", epsilon},
                        {"epsilon_eff", size.epsilon_eff},
                        {"sqrt_A", sqrt_a},
                        {"differences_psd", size.differences_psd ? 1.0 : 0.0}};
  return report;
}

template <FieldScalar Scalar>
TheoremReport verify_subspace_perturbation(const ControlledFusionFrame<Scalar>& w,
                                           const ControlledFusionFrame<Scalar>& z, double epsilon,
                                           const Tolerances& tol = {}) {
  std::vector<SubspaceBasis<Scalar>> subspaces;
  for (const auto& item : z.family().items()) subspaces.push_back(item.basis);
  return verify_subspace_perturbation(w, subspaces, epsilon, tol);
}

// ---------------------------------------------------------------------------
// (lambda1, lambda2, beta, C, C')-perturbations

struct PerturbationParams {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::vector<double> beta;  // c_i > 0

  void validate() const {
    if (!(lambda1 >= 0.0 && lambda1 < 1.0)) throw InvalidParams("lambda1 must lie in [0, 1)");
    if (!(lambda2 >= 0.0 && lambda2 < 1.0)) throw InvalidParams("lambda2 must lie in [0, 1)");
    if (beta.empty()) throw InvalidParams("beta must be a nonempty sequence");
    for (double c : beta) {
      if (!std::isfinite(c) || !(c > 0.0)) throw InvalidParams("beta entries must be positive");
    }
  }

  double beta_norm() const {
    double s = 0.0;
    for (double c : beta) s += c * c;
    return std::sqrt(s);
  }

  /// beta with `count` equal entries and the given l2 norm.
  static std::vector<double> uniform_beta(double norm, std::size_t count) {
    return std::vector<double>(count, norm / std::sqrt(static_cast<double>(count)));
  }
};

namespace detail {

/// Test vectors for the per-vector inequality: `samples` seeded unit vectors,
/// followed by the extremal eigenvectors of H(S_W) and H(S_Z). The latter
/// make the sampled check sound at the points that determine the bounds.
template <FieldScalar Scalar>
std::vector<Vector<Scalar>> perturbation_probes(const Matrix<Scalar>& hw, const Matrix<Scalar>& hz,
                                                std::size_t samples, std::uint64_t seed,
                                                const Tolerances& tol) {
  const Eigen::Index n = hw.rows();
  std::vector<Vector<Scalar>> probes;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) probes.push_back(random_unit_vector<Scalar>(n, rng));
  for (const Matrix<Scalar>* h : {&hw, &hz}) {
    const auto eig = hermitian_eigen(*h, tol);
    probes.push_back(eig.vectors.col(0));
    probes.push_back(eig.vectors.col(n - 1));
  }
  return probes;
}

template <FieldScalar Scalar>
double real_form(const Matrix<Scalar>& h, const Vector<Scalar>& f) {
  return std::real(f.dot(h * f));
}

}  // namespace detail

/// Smallest ||beta||_2 making Z a (0, 0, beta, C, C')-perturbation of W on
/// the probe set used by verify_lambda_perturbation with the same seed.
template <FieldScalar Scalar>
double fit_perturbation_beta(const ControlledFusionFrame<Scalar>& w,
                             const ControlledFusionFrame<Scalar>& z, std::size_t samples,
                             std::uint64_t seed, const Tolerances& tol = {}) {
  const Matrix<Scalar> hw = hermitian_part(controlled_frame_operator(w));
  const Matrix<Scalar> hz = hermitian_part(controlled_frame_operator(z));
  double worst = 0.0;
  for (const auto& f : detail::perturbation_probes(hw, hz, samples, seed, tol)) {
    const double diff = detail::real_form(hw, f) - detail::real_form(hz, f);
    worst = std::max(worst, std::sqrt(std::max(0.0, diff)));
  }
  return worst;
}

/// Checks the per-vector perturbation inequality
///
///   ||T-difference f|| <= lambda1 ||T_W f|| + lambda2 ||T_Z f|| + ||beta|| ||f||
///
/// on seeded unit vectors, computing every block norm from quadratic forms
/// (||v_i(C* pi_i C')^{1/2} f||^2 = Re <S f, f>), and compares Z's actual
/// bounds with
///
///   (((1 - lambda1) sqrt(A) - ||beta||) / (1 + lambda2))^2,
///   (((1 + lambda1) sqrt(B) + ||beta||) / (1 - lambda2))^2.
template <FieldScalar Scalar>
TheoremReport verify_lambda_perturbation(const ControlledFusionFrame<Scalar>& w,
                                         const ControlledFusionFrame<Scalar>& z,
                                         const PerturbationParams& params, std::size_t samples,
                                         std::uint64_t seed, const Tolerances& tol = {}) {
  params.validate();
  detail::require_same_controls(w, z, tol);
  if (w.size() != z.size()) throw DimensionMismatch("families have different index sets");

  const Matrix<Scalar> hw = hermitian_part(controlled_frame_operator(w));
  const Matrix<Scalar> hz = hermitian_part(controlled_frame_operator(z));
  const double beta = params.beta_norm();
  const double l1 = params.lambda1;
  const double l2 = params.lambda2;

  std::size_t negative_forms = 0;
  std::size_t violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  const auto probes = detail::perturbation_probes(hw, hz, samples, seed, tol);
  for (const auto& f : probes) {
    const double fw = detail::real_form(hw, f);
    const double fz = detail::real_form(hz, f);
    const double diff = fw - fz;
    const double floor = -tol.hypothesis * std::max(1.0, std::abs(fw));
    if (fw < floor || fz < floor || diff < floor) {
      ++negative_forms;
      continue;
    }
    const double lhs = std::sqrt(std::max(0.0, diff));
    const double rhs = l1 * std::sqrt(std::max(0.0, fw)) + l2 * std::sqrt(std::max(0.0, fz)) + beta;
    const double slack = rhs - lhs;
    min_slack = std::min(min_slack, slack);
    if (slack < -tol.hypothesis * std::max(1.0, rhs)) ++violations;
  }

  const BoundsReport bw = controlled_bounds(w, tol);
  const BoundsReport bz = controlled_bounds(z, tol);
  const double sqrt_a = std::sqrt(std::max(0.0, bw.bounds.lower));
  const double sqrt_b = std::sqrt(std::max(0.0, bw.bounds.upper));
  const double lower_root = ((1.0 - l1) * sqrt_a - beta) / (1.0 + l2);
  const double upper_root = ((1.0 + l1) * sqrt_b + beta) / (1.0 - l2);
  const bool vacuous = !(lower_root > 0.0);

  TheoremReport report;
  report.theorem_id = "lambda-perturbation";
  report.hypothesis_satisfied = negative_forms == 0 && violations == 0 && !vacuous &&
                                is_frame(bw.classification);
  if (negative_forms > 0) report.notes.push_back("negative quadratic forms met on some probes");
  if (vacuous) report.notes.push_back("(1 - lambda1) sqrt(A) <= ||beta||: prediction is vacuous");
  const double predicted_lower = vacuous ? 0.0 : lower_root * lower_root;
  detail::add_check(report, "Z", {predicted_lower, upper_root * upper_root, false}, bz.bounds,
                    Relation::enclosing, tol);
  report.diagnostics = {{"beta_norm", beta},
                        {"lambda1", l1},
                        {"lambda2", l2},
                        {"probes", static_cast<double>(probes.size())},
                        {"negative_forms", static_cast<double>(negative_forms)},
                        {"violations", static_cast<double>(violations)},
                        {"min_slack", min_slack}};
  return report;
}

// ---------------------------------------------------------------------------
// Q-duals

template <FieldScalar Scalar>
struct QDual {
  Matrix<Scalar> q;          // maps stacked coefficients of W~ to those of W
  double defect = 0.0;       // ||T*_W Q T_W~ - Id||
  double adjoint_defect = 0.0;  // ||T*_W~ Q* T_W - Id||
  double inner_product_residual = 0.0;  // worst |<f,g> - <Q* T_W f, T_W~ g>| etc.
};

/// Q = (T*_W)^+ (T_W~)^+, after which T*_W Q T_W~ = Id whenever T*_W is onto
/// and T_W~ is one-to-one. Also measures the two equivalent forms of the
/// duality relation on `pairs` seeded (f, g).
template <FieldScalar Scalar>
QDual<Scalar> construct_q_dual(const ControlledFusionFrame<Scalar>& w,
                               const ControlledFusionFrame<Scalar>& w_tilde,
                               const Tolerances& tol = {}, std::size_t pairs = 100,
                               std::uint64_t seed = 0) {
  detail::require_same_controls(w, w_tilde, tol);
  const Matrix<Scalar> tw = analysis_matrix(w, tol);
  const Matrix<Scalar> tt = analysis_matrix(w_tilde, tol);
  const Eigen::Index n = w.dim();
  const Matrix<Scalar> synthesis = tw.adjoint();
  const auto rank = numerical_rank(synthesis, tol);
  if (rank < n) {
    throw NotSurjective("synthesis operator T*_W has rank " + std::to_string(rank) + " < " +
                        std::to_string(n) + "; W is not a controlled fusion frame");
  }

  QDual<Scalar> out;
  out.q = pseudo_inverse(synthesis, tol) * pseudo_inverse(tt, tol);
  const Matrix<Scalar> id = Matrix<Scalar>::Identity(n, n);
  out.defect = operator_norm((synthesis * out.q * tt - id).eval());
  out.adjoint_defect = operator_norm((tt.adjoint() * out.q.adjoint() * tw - id).eval());

  Rng rng(seed);
  for (std::size_t p = 0; p < pairs; ++p) {
    const Vector<Scalar> f = random_unit_vector<Scalar>(n, rng);
    const Vector<Scalar> g = random_unit_vector<Scalar>(n, rng);
    const Scalar expected = inner<Scalar>(f, g);
    const Scalar via_adjoint = inner<Scalar>((out.q.adjoint() * (tw * f)).eval(), (tt * g).eval());
    const Scalar via_q = inner<Scalar>((out.q * (tt * f)).eval(), (tw * g).eval());
    out.inner_product_residual = std::max({out.inner_product_residual,
                                           std::abs(expected - via_adjoint),
                                           std::abs(expected - via_q)});
  }
  return out;
}

/// For a Q-dual W~ of W: C_op >= 1 / (B_op ||Q||^2) and D_op >= 1 / (A_op ||Q||^2).
template <FieldScalar Scalar>
TheoremReport verify_q_dual_bounds(const ControlledFusionFrame<Scalar>& w,
                                   const ControlledFusionFrame<Scalar>& w_tilde,
                                   const QDual<Scalar>& q, const Tolerances& tol = {}) {
  if (!(q.defect <= tol.qdual)) {
    throw InvalidQDual("Q-dual defect " + std::to_string(q.defect) + " exceeds " +
                       std::to_string(tol.qdual));
  }
  const BoundsReport bw = controlled_bounds(w, tol);
  const BoundsReport bt = controlled_bounds(w_tilde, tol);
  const double qn = operator_norm(q.q);
  const double q2 = qn * qn;

  TheoremReport report;
  report.theorem_id = "q-dual";
  report.hypothesis_satisfied = true;
  const double lower_floor = 1.0 / (bw.bounds.upper * q2);
  const double upper_floor = bw.bounds.lower > 0.0 ? 1.0 / (bw.bounds.lower * q2) : 0.0;
  detail::add_check(report, "W_tilde", {lower_floor, upper_floor, false}, bt.bounds,
                    Relation::floors, tol);
  report.diagnostics = {{"norm_Q", qn},
                        {"defect", q.defect},
                        {"adjoint_defect", q.adjoint_defect},
                        {"inner_product_residual", q.inner_product_residual},
                        {"A_W", bw.bounds.lower},
                        {"B_W", bw.bounds.upper}};
  return report;
}

}  // namespace ccfusion
