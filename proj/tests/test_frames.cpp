#include <doctest.h>

#include "ccfusion/frames.hpp"
#include "ccfusion/fusion.hpp"
#include "ccfusion/random.hpp"
#include "support.hpp"

using namespace ccfusion;
using ccfusion::testing::mat;
using ccfusion::testing::max_abs_diff;
using ccfusion::testing::vec;

namespace {

VectorFrame<double> frame_of(std::initializer_list<Eigen::VectorXd> vs) {
  return VectorFrame<double>::from_list(std::vector<Eigen::VectorXd>(vs));
}

WeightedSubspaceFamily<double> coordinate_family(std::initializer_list<std::vector<int>> spans,
                                                 Eigen::Index n) {
  std::vector<WeightedSubspace<double>> items;
  for (const auto& span : spans) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(span.size()));
    for (std::size_t j = 0; j < span.size(); ++j) m(span[j], static_cast<Eigen::Index>(j)) = 1.0;
    items.push_back({orthonormalize<double>(m), 1.0});
  }
  return WeightedSubspaceFamily<double>(std::move(items));
}

}  // namespace

TEST_CASE("frame_operator") {
  CHECK(max_abs_diff(frame_operator(frame_of({vec({1, 0}), vec({0, 1})})),
                     Eigen::MatrixXd::Identity(2, 2)) == 0.0);
  CHECK(max_abs_diff(frame_operator(frame_of({vec({1, 0}), vec({1, 0}), vec({0, 1})})),
                     mat({{2, 0}, {0, 1}})) == 0.0);
  CHECK(max_abs_diff(frame_operator(frame_of({vec({1, 0})})), mat({{1, 0}, {0, 0}})) == 0.0);
}

TEST_CASE("frame_bounds and classification") {
  const auto onb = frame_bounds(frame_of({vec({1, 0}), vec({0, 1})}));
  CHECK(onb.lower == doctest::Approx(1.0));
  CHECK(onb.upper == doctest::Approx(1.0));
  CHECK(classify(onb) == Classification::parseval);

  const auto redundant = frame_bounds(frame_of({vec({1, 0}), vec({1, 0}), vec({0, 1})}));
  CHECK(redundant.lower == doctest::Approx(1.0));
  CHECK(redundant.upper == doctest::Approx(2.0));
  CHECK(classify(redundant) == Classification::frame);

  const auto bessel = frame_bounds(frame_of({vec({1, 0})}));
  CHECK(bessel.lower == 0.0);
  CHECK(bessel.upper == doctest::Approx(1.0));
  CHECK(classify(bessel) == Classification::bessel_only);

  CHECK(classify(frame_bounds(frame_of({vec({2, 0}), vec({0, 2})}))) == Classification::tight);
}

TEST_CASE("analyze and synthesize") {
  const auto onb = frame_of({vec({1, 0}), vec({0, 1})});
  CHECK(max_abs_diff(analyze(onb, vec({3, 4})), vec({3, 4})) == 0.0);
  CHECK(max_abs_diff(synthesize(onb, analyze(onb, vec({3, 4}))), vec({3, 4})) == 0.0);

  const auto red = frame_of({vec({1, 0}), vec({1, 0}), vec({0, 1})});
  CHECK(max_abs_diff(analyze(red, vec({1, 2})), vec({1, 1, 2})) == 0.0);
  CHECK(max_abs_diff(synthesize(red, analyze(red, vec({1, 2}))), vec({2, 2})) == 0.0);

  CHECK(synthesize(red, analyze(red, vec({0, 0}))).norm() == 0.0);
  CHECK_THROWS_AS(analyze(red, vec({1, 2, 3})), DimensionMismatch);
  CHECK_THROWS_AS(synthesize(red, vec({1, 2})), DimensionMismatch);
}

TEST_CASE("canonical dual reconstructs") {
  const auto red = frame_of({vec({1, 0}), vec({1, 1}), vec({0, 1})});
  const auto dual = canonical_dual(red);
  const Eigen::VectorXd f = vec({0.3, -1.7});
  CHECK(max_abs_diff(synthesize(dual, analyze(red, f)), f) < 1e-14);
  CHECK_THROWS_AS(canonical_dual(frame_of({vec({1, 0})})), NotAFrame);
}

TEST_CASE_TEMPLATE("random frames: sampled form stays within optimal bounds", Scalar, double, Complex) {
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = rng.integer(2, 8);
    const auto m = rng.integer(1, 2 * n);
    const VectorFrame<Scalar> frame(random_matrix<Scalar>(n, m, rng));
    const auto b = frame_bounds(frame);
    const Matrix<Scalar> s = frame_operator(frame);
    const Matrix<Scalar> composed = frame.synthesis_matrix() * frame.analysis_matrix();
    CHECK(operator_norm((s - composed).eval()) <= 1e-10);
    for (int k = 0; k < 1000; ++k) {
      const Vector<Scalar> f = random_unit_vector<Scalar>(n, rng);
      const double form = analyze(frame, f).squaredNorm();
      CHECK(form >= b.lower - 1e-9);
      CHECK(form <= b.upper + 1e-9);
    }
    const auto eig = hermitian_eigen(s);
    CHECK(std::abs(analyze(frame, Vector<Scalar>(eig.vectors.col(0))).squaredNorm() - b.lower) <= 1e-8);
    CHECK(std::abs(analyze(frame, Vector<Scalar>(eig.vectors.col(n - 1))).squaredNorm() - b.upper) <= 1e-8);
  }
}

TEST_CASE("fusion_frame_operator") {
  CHECK(max_abs_diff(fusion_frame_operator(coordinate_family({{0}, {1}, {2}}, 3)),
                     Eigen::MatrixXd::Identity(3, 3)) == 0.0);
  // each coordinate is covered twice
  CHECK(max_abs_diff(fusion_frame_operator(coordinate_family({{0, 1}, {1, 2}, {0, 2}}, 3)),
                     2.0 * Eigen::MatrixXd::Identity(3, 3)) == 0.0);
  CHECK(max_abs_diff(fusion_frame_operator(coordinate_family({{0, 1, 2}}, 3)),
                     Eigen::MatrixXd::Identity(3, 3)) == 0.0);
}

TEST_CASE("fusion_bounds") {
  const auto parseval = fusion_bounds(coordinate_family({{0}, {1}, {2}}, 3));
  CHECK(parseval.lower == doctest::Approx(1.0));
  CHECK(parseval.upper == doctest::Approx(1.0));
  const auto twice = fusion_bounds(coordinate_family({{0, 1}, {1, 2}, {0, 2}}, 3));
  CHECK(twice.lower == doctest::Approx(2.0));
  CHECK(twice.upper == doctest::Approx(2.0));
  const auto partial = fusion_bounds(coordinate_family({{0}}, 2));
  CHECK(partial.lower == 0.0);
  CHECK(partial.upper == doctest::Approx(1.0));
}

TEST_CASE("family validation") {
  const auto b = orthonormalize<double>(mat({{1}, {0}}));
  CHECK_THROWS_AS(WeightedSubspaceFamily<double>({{b, 0.0}}), InvalidInput);
  CHECK_THROWS_AS(WeightedSubspaceFamily<double>({{b, -1.0}}), InvalidInput);
  CHECK_THROWS_AS(WeightedSubspaceFamily<double>({}), InvalidInput);
  const auto b3 = orthonormalize<double>(mat({{1}, {0}, {0}}));
  CHECK_THROWS_AS(WeightedSubspaceFamily<double>({{b, 1.0}, {b3, 1.0}}), DimensionMismatch);
}

TEST_CASE_TEMPLATE("fusion form stays within bounds", Scalar, double, Complex) {
  Rng rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = rng.integer(2, 8);
    const auto family = random_family<Scalar>(n, rng);
    const auto b = fusion_bounds(family);
    const Matrix<Scalar> s = fusion_frame_operator(family);
    for (int k = 0; k < 500; ++k) {
      const Vector<Scalar> h = random_unit_vector<Scalar>(n, rng);
      const double form = fusion_quadratic_form(family, h);
      CHECK(std::abs(form - std::real(h.dot(s * h))) <= 1e-10);
      CHECK(form >= b.lower - 1e-9);
      CHECK(form <= b.upper + 1e-9);
    }
  }
}
