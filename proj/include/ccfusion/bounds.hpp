#pragma once

#include <algorithm>
#include <string>

#include "ccfusion/tolerances.hpp"

namespace ccfusion {

/// Frame bounds A <= B. When `optimal` is set they are the extremal
/// eigenvalues of the relevant (Hermitian part of the) frame operator.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool optimal = false;
};

enum class Classification { not_bessel_form, bessel_only, frame, tight, parseval };

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::not_bessel_form: return "not_bessel_form";
    case Classification::bessel_only: return "bessel_only";
    case Classification::frame: return "frame";
    case Classification::tight: return "tight";
    case Classification::parseval: return "parseval";
  }
  return "unknown";
}

/// True for frame, tight and parseval.
inline bool is_frame(Classification c) {
  return c == Classification::frame || c == Classification::tight ||
         c == Classification::parseval;
}

/// Labels bounds of a real, nonnegative quadratic form.
///   frame    : A > tol.classify * max(1, B)
///   tight    : frame and B - A <= tol.classify * max(1, B)
///   parseval : tight and |A - 1|, |B - 1| <= tol.classify
inline Classification classify(const FrameBounds& b, const Tolerances& tol = {}) {
  const double scale = std::max(1.0, b.upper);
  if (!(b.lower > tol.classify * scale)) return Classification::bessel_only;
  if (b.upper - b.lower > tol.classify * scale) return Classification::frame;
  if (std::abs(b.lower - 1.0) <= tol.classify && std::abs(b.upper - 1.0) <= tol.classify) {
    return Classification::parseval;
  }
  return Classification::tight;
}

}  // namespace ccfusion
