#pragma once

#include <functional>
#include <string>

#include "gsg/linalg.hpp"

namespace gsg {

/// Axis-aligned box [lo, hi] on which Lipschitz constants are requested.
struct Box {
  Vector lo;
  Vector hi;

  static Box around_ball(const Vector& center, double radius);
  static Box from_corner(const Vector& corner, const Vector& sides);
};

/**
 * Scalar field f: R^n -> R with optional analytic derivatives.
 *
 * The Lipschitz callbacks return a constant for grad f (resp. the Hessian)
 * valid on the given box; they are how bounds obtain L_grad and L_H.
 * Fields whose evaluator is not safe to call concurrently must set
 * thread_safe = false.
 */
struct ScalarField {
  using Evaluator = std::function<double(const Vector&)>;
  using GradientFn = std::function<Vector(const Vector&)>;
  using HessianFn = std::function<Matrix(const Vector&)>;
  using LipschitzFn = std::function<double(const Box&)>;

  std::string name;
  Eigen::Index dim = 0;
  Evaluator value;
  GradientFn gradient;
  HessianFn hessian;
  LipschitzFn lipschitz_gradient;
  LipschitzFn lipschitz_hessian;
  bool thread_safe = true;

  bool has_gradient() const { return static_cast<bool>(gradient); }
  bool has_hessian() const { return static_cast<bool>(hessian); }
};

/// f(x) = c + g^T x.
ScalarField affine_field(std::string name, const Vector& g, double c = 0.0);

/// f(x) = c + b^T x + x^T H x / 2 for symmetric H.
ScalarField quadratic_field(std::string name, const Matrix& h, const Vector& b, double c = 0.0);

}  // namespace gsg
