#pragma once

#include <initializer_list>

#include "ccfusion/hilbert.hpp"

namespace ccfusion::testing {

inline Eigen::MatrixXd mat(std::initializer_list<std::initializer_list<double>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  Eigen::MatrixXd m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

template <typename A, typename B>
double max_abs_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// The R^3 example: W1 = span{e1,e2}, W2 = span{e1,e3}, W3 = span{e2,e3},
/// unit weights, C(x) = (x1, x2, x1 + x3), C'(x) = (x1, x2, x2 + x3).
inline Eigen::MatrixXd example_c() { return mat({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}}); }
inline Eigen::MatrixXd example_c_prime() { return mat({{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}); }

}  // namespace ccfusion::testing
