#pragma once

#include <functional>
#include <vector>

#include "gsg/linalg.hpp"

namespace gsg {

/// Tensor-product Gauss-Legendre rule with `nodes` points on each of
/// `panels` equal pieces of every axis. Four panels put the kinks of |x_i|
/// on a ball at panel boundaries.
struct QuadratureSpec {
  int nodes = 32;
  int panels = 1;

  void validate() const;
};

/// Nodes and weights of the m-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int m);

using ScalarIntegrand = std::function<double(const Vector&)>;
/// Vector-valued integrand; must return the same length on every call.
using VectorIntegrand = std::function<Vector(const Vector&)>;

/// Integral over [0, d_1] x ... x [0, d_n].
double integrate_box(const ScalarIntegrand& g, const Vector& sides, const QuadratureSpec& spec = {});
Vector integrate_box(const VectorIntegrand& g, Eigen::Index components, const Vector& sides,
                     const QuadratureSpec& spec = {});

/// Integral over B_n(0; r), evaluated in spherical coordinates with the
/// Jacobian rho^{n-1} sin^{n-2}(phi_1) ... sin(phi_{n-2}).
double integrate_ball(const ScalarIntegrand& g, Eigen::Index n, double r,
                      const QuadratureSpec& spec = {});
Vector integrate_ball(const VectorIntegrand& g, Eigen::Index components, Eigen::Index n, double r,
                      const QuadratureSpec& spec = {});

/// Exact integral of x^alpha over B_n(0; r) (zero when any exponent is odd).
double monomial_ball_integral(const std::vector<int>& alpha, double r);

/// Exact integral of |x_1|^alpha_1 ... |x_n|^alpha_n over B_n(0; r).
double abs_monomial_ball_integral(const std::vector<int>& alpha, double r);

}  // namespace gsg
