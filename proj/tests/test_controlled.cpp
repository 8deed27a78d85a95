#include <doctest.h>

#include "ccfusion/controlled.hpp"
#include "ccfusion/random.hpp"
#include "support.hpp"

using namespace ccfusion;
using ccfusion::testing::mat;
using ccfusion::testing::max_abs_diff;
using ccfusion::testing::vec;

namespace {

SubspaceBasis<double> coords(std::initializer_list<int> idx, Eigen::Index n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(idx.size()));
  Eigen::Index j = 0;
  for (int i : idx) m(i, j++) = 1.0;
  return orthonormalize<double>(m);
}

ControlledFusionFrame<double> r3_example() {
  WeightedSubspaceFamily<double> family(
      {{coords({0, 1}, 3), 1.0}, {coords({0, 2}, 3), 1.0}, {coords({1, 2}, 3), 1.0}});
  return {family, ControlPair<double>(ccfusion::testing::example_c(), ccfusion::testing::example_c_prime())};
}

ControlledFusionFrame<double> parseval_example() {
  WeightedSubspaceFamily<double> family(
      {{coords({0}, 3), 1.0}, {coords({1}, 3), 1.0}, {coords({2}, 3), 1.0}});
  return {family, ControlPair<double>::identity(3)};
}

/// Oracle: S_W entry (j, k) = sum_i v_i^2 <pi_i C' e_k, pi_i C e_j>, built
/// from explicit projections and inner products rather than matrix products.
template <typename Scalar>
Matrix<Scalar> polarized_operator(const ControlledFusionFrame<Scalar>& frame) {
  const auto n = frame.dim();
  Matrix<Scalar> s = Matrix<Scalar>::Zero(n, n);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Matrix<Scalar>& q = frame.family()[i].basis.columns();
    const double v2 = frame.family()[i].weight * frame.family()[i].weight;
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index k = 0; k < n; ++k) {
        // pi x = sum_c <x, q_c> q_c
        auto project = [&](const Vector<Scalar>& x) {
          Vector<Scalar> out = Vector<Scalar>::Zero(n);
          for (Eigen::Index c = 0; c < q.cols(); ++c) out += q.col(c).dot(x) * q.col(c);
          return out;
        };
        const Vector<Scalar> a = project(frame.controls().c_prime().col(k));
        const Vector<Scalar> b = project(frame.controls().c().col(j));
        s(j, k) += v2 * b.dot(a);
      }
    }
  }
  return s;
}

}  // namespace

TEST_CASE("controlled_frame_operator on the R^3 example") {
  const auto frame = r3_example();
  const Eigen::MatrixXd expected = mat({{2, 2, 2}, {0, 2, 0}, {0, 2, 2}});
  CHECK(max_abs_diff(controlled_frame_operator(frame), expected) < 1e-14);
  CHECK(max_abs_diff(polarized_operator(frame), expected) < 1e-14);
}

TEST_CASE("controlled_frame_operator reductions") {
  const auto p = parseval_example();
  CHECK(max_abs_diff(controlled_frame_operator(p), fusion_frame_operator(p.family())) == 0.0);

  Rng rng(3);
  const Eigen::MatrixXd c = random_control<double>(4, rng);
  const Eigen::MatrixXd cp = random_control<double>(4, rng);
  const ControlledFusionFrame<double> whole(
      WeightedSubspaceFamily<double>({{orthonormalize<double>(Eigen::MatrixXd::Identity(4, 4)), 1.0}}),
      ControlPair<double>(c, cp));
  CHECK(max_abs_diff(controlled_frame_operator(whole), c.transpose() * cp) < 1e-13);
}

TEST_CASE("controlled_quadratic_form") {
  const auto frame = r3_example();
  // term by term for f = e2: 1 + 0 + 1
  CHECK(controlled_quadratic_form(frame, vec({0, 1, 0})) == doctest::Approx(2.0));
  CHECK(controlled_quadratic_form(frame, vec({0, 0, 0})) == 0.0);
  const Eigen::VectorXd f = vec({0.6, 0.0, 0.8});
  CHECK(controlled_quadratic_form(parseval_example(), f) == doctest::Approx(1.0));
  CHECK_THROWS_AS(controlled_quadratic_form(frame, vec({1, 0})), DimensionMismatch);
}

TEST_CASE("controlled_bounds") {
  const auto r = controlled_bounds(r3_example());
  CHECK(std::abs(r.bounds.lower - 1.0) <= 1e-9);
  CHECK(std::abs(r.bounds.upper - 4.0) <= 1e-9);
  CHECK(r.classification == Classification::frame);
  CHECK(r.form_is_real);
  CHECK(r.hermitian_residual > 0.1);

  const auto p = controlled_bounds(parseval_example());
  CHECK(p.classification == Classification::parseval);

  const ControlledFusionFrame<double> partial(
      WeightedSubspaceFamily<double>({{coords({0, 1}, 3), 1.0}}), ControlPair<double>::identity(3));
  const auto d = controlled_bounds(partial);
  CHECK(std::abs(d.bounds.lower) <= 1e-12);
  CHECK(d.classification == Classification::bessel_only);
}

TEST_CASE("complex non-Hermitian operator flags a non-real form") {
  Rng rng(9);
  const auto frame = random_controlled_frame<Complex>(4, rng, GenConstraint::none);
  const auto r = controlled_bounds(frame);
  CHECK_FALSE(r.form_is_real);
  CHECK(r.classification == Classification::not_bessel_form);
  const Vector<Complex> f = random_unit_vector<Complex>(4, rng);
  CHECK(std::abs(std::imag(controlled_quadratic_form(frame, f))) > 0.0);
}

TEST_CASE("controlled_analysis gate") {
  try {
    controlled_analysis(r3_example(), vec({1, 0, 0}));
    FAIL("expected SqrtGateFailed");
  } catch (const SqrtGateFailed& e) {
    CHECK(e.index() == 1);  // W2
    CHECK(e.cause() == ErrorKind::NotHermitian);
  }

  const auto p = parseval_example();
  const Eigen::VectorXd f = vec({1, -2, 3});
  const auto blocks = controlled_analysis(p, f);
  REQUIRE(blocks.blocks.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(max_abs_diff(blocks.blocks[i], projection(p.family()[i].basis) * f) < 1e-14);
  }

  const ControlledFusionFrame<double> doubled(
      WeightedSubspaceFamily<double>({{coords({0, 1}, 2), 1.0}}),
      ControlPair<double>(2.0 * Eigen::MatrixXd::Identity(2, 2), 2.0 * Eigen::MatrixXd::Identity(2, 2)));
  CHECK(max_abs_diff(controlled_analysis(doubled, vec({1, 5})).blocks[0], vec({2, 10})) < 1e-13);
}

TEST_CASE("controlled_synthesis") {
  const auto p = parseval_example();
  const Eigen::VectorXd f = vec({1, -2, 3});
  CHECK(max_abs_diff(controlled_synthesis(p, controlled_analysis(p, f)), f) < 1e-14);

  BlockVector<double> zero{{Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(3)}};
  CHECK(controlled_synthesis(p, zero).norm() == 0.0);
  BlockVector<double> short_blocks{{Eigen::VectorXd::Zero(3)}};
  CHECK_THROWS_AS(controlled_synthesis(p, short_blocks), DimensionMismatch);
}

TEST_CASE("reconstruct") {
  const auto frame = r3_example();
  const Eigen::VectorXd x = reconstruct(frame, vec({2, 0, 0}));
  CHECK(max_abs_diff(x, vec({1, 0, 0})) <= 1e-9);
  CHECK(max_abs_diff(reconstruct(parseval_example(), vec({4, 5, 6})), vec({4, 5, 6})) < 1e-14);

  const ControlledFusionFrame<double> partial(
      WeightedSubspaceFamily<double>({{coords({0, 1}, 3), 1.0}}), ControlPair<double>::identity(3));
  CHECK_THROWS_AS(reconstruct(partial, vec({1, 0, 0})), NotAFrame);
  CHECK_THROWS_AS(Reconstructor<double>{partial}, NotAFrame);
}

TEST_CASE_TEMPLATE("Reconstructor matches reconstruct", Scalar, double, Complex) {
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const auto n = rng.integer(2, 9);
    const auto frame = random_controlled_frame<Scalar>(n, rng, GenConstraint::squared);
    const Reconstructor<Scalar> solve(frame);
    CHECK(solve.dim() == n);
    const Matrix<Scalar> s = controlled_frame_operator(frame);
    for (int j = 0; j < 5; ++j) {
      const Vector<Scalar> f = random_matrix<Scalar>(n, 1, rng);
      const Vector<Scalar> g = s * f;
      CHECK((solve(g) - f).norm() <= 1e-9 * f.norm());
      CHECK((solve(g) - reconstruct(frame, g)).norm() <= 1e-12 * f.norm());
    }
    CHECK_THROWS_AS(solve(Vector<Scalar>::Zero(n + 1)), DimensionMismatch);
  }
}

TEST_CASE("control pair validation") {
  CHECK_THROWS_AS(ControlPair<double>(mat({{1, 0}, {0, 0}}), Eigen::MatrixXd::Identity(2, 2)),
                  NotInvertible);
  CHECK_THROWS_AS(ControlPair<double>(Eigen::MatrixXd::Identity(2, 2), Eigen::MatrixXd::Identity(3, 3)),
                  DimensionMismatch);
  CHECK_THROWS_AS(ControlledFusionFrame<double>(
                      WeightedSubspaceFamily<double>({{coords({0}, 2), 1.0}}), ControlPair<double>::identity(3)),
                  DimensionMismatch);
}

TEST_CASE_TEMPLATE("controlled operator matches the polarized oracle", Scalar, double, Complex) {
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = rng.integer(2, 7);
    const auto frame = random_controlled_frame<Scalar>(n, rng, GenConstraint::none);
    CHECK(operator_norm((controlled_frame_operator(frame) - polarized_operator(frame)).eval()) <= 1e-12);
  }
}

TEST_CASE_TEMPLATE("gated factorization S_W = T*_W T_W", Scalar, double, Complex) {
  Rng rng(45);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = rng.integer(2, 8);
    const auto frame = random_controlled_frame<Scalar>(n, rng, GenConstraint::gate);
    const Matrix<Scalar> t = analysis_matrix(frame);
    const Matrix<Scalar> s = controlled_frame_operator(frame);
    CHECK(operator_norm((t.adjoint() * t - s).eval()) <= 1e-8);
    const auto b = controlled_bounds(frame);
    const double sn = operator_norm(t.adjoint());
    CHECK(std::abs(sn * sn - b.bounds.upper) <= 1e-8);
    // surjectivity of T*_W and the pseudo-inverse lower bound
    CHECK(is_frame(b.classification) == (numerical_rank(Matrix<Scalar>(t.adjoint())) == n));
    const double pinv = operator_norm(pseudo_inverse(t));
    CHECK(1.0 / (pinv * pinv) <= b.bounds.lower + 1e-8);

    const Vector<Scalar> f = random_unit_vector<Scalar>(n, rng);
    const auto blocks = controlled_analysis(frame, f);
    CHECK(std::abs(blocks.squared_norm() - std::real(controlled_quadratic_form(frame, f))) <= 1e-8);
    CHECK((controlled_synthesis(frame, blocks) - s * f).norm() <= 1e-8);
  }
}
