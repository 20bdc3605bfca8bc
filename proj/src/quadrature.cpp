#include "gsg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gsg/csv.hpp"
#include "gsg/errors.hpp"
#include "gsg/regions.hpp"

namespace gsg {

namespace {

struct Axis {
  std::vector<double> x;
  std::vector<double> w;
};

// The rule repeated on `panels` equal pieces of [lo, hi].
Axis scaled_axis(const GaussLegendre& rule, double lo, double hi, int panels) {
  Axis axis;
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double half = 0.5 * width;
    const double mid = lo + (p + 0.5) * width;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      axis.x.push_back(mid + half * rule.nodes[k]);
      axis.w.push_back(half * rule.weights[k]);
    }
  }
  return axis;
}

std::string describe(const Vector& x) {
  return "node (" + csv::join(x) + ")";
}

// Visits every node of the tensor grid in a fixed order (last axis fastest).
template <typename Visit>
void for_each_node(Eigen::Index n, int m, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(idx);
    Eigen::Index k = n - 1;
    while (k >= 0 && ++idx[k] == m) {
      idx[k] = 0;
      --k;
    }
    if (k < 0) return;
  }
}

void accumulate(Vector& sum, const Vector& value, double weight, Eigen::Index components,
                const Vector& where) {
  if (value.size() != components) {
    throw InvalidInput("integrand returned a vector of the wrong length");
  }
  if (!value.allFinite()) throw EvaluationError("non-finite integrand at " + describe(where));
  sum.noalias() += weight * value;
}

VectorIntegrand lift(const ScalarIntegrand& g) {
  return [&g](const Vector& x) {
    Vector v(1);
    v(0) = g(x);
    return v;
  };
}

}  // namespace

void QuadratureSpec::validate() const {
  if (nodes < 2) throw InvalidInput("quadrature needs at least 2 nodes per axis");
  if (panels < 1) throw InvalidInput("quadrature needs at least 1 panel per axis");
}

GaussLegendre gauss_legendre(int m) {
  if (m < 1) throw InvalidInput("Gauss-Legendre rule needs m >= 1");
  GaussLegendre rule;
  rule.nodes.resize(static_cast<std::size_t>(m));
  rule.weights.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < (m + 1) / 2; ++i) {
    // Newton iteration on P_m from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= m; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = (m == 1) ? 1.0 : m * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[m - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  return rule;
}

Vector integrate_box(const VectorIntegrand& g, Eigen::Index components, const Vector& sides,
                     const QuadratureSpec& spec) {
  spec.validate();
  require_finite(sides, "sides");
  if (sides.size() < 1 || sides.minCoeff() <= 0.0) throw InvalidInput("box sides must be > 0");
  const Eigen::Index n = sides.size();
  const GaussLegendre rule = gauss_legendre(spec.nodes);
  std::vector<Axis> axes;
  for (Eigen::Index i = 0; i < n; ++i) axes.push_back(scaled_axis(rule, 0.0, sides(i), spec.panels));

  Vector sum = Vector::Zero(components);
  Vector x(n);
  for_each_node(n, spec.nodes * spec.panels, [&](const std::vector<int>& idx) {
    double w = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      x(i) = axes[i].x[idx[i]];
      w *= axes[i].w[idx[i]];
    }
    accumulate(sum, g(x), w, components, x);
  });
  return sum;
}

double integrate_box(const ScalarIntegrand& g, const Vector& sides, const QuadratureSpec& spec) {
  return integrate_box(lift(g), 1, sides, spec)(0);
}

Vector integrate_ball(const VectorIntegrand& g, Eigen::Index components, Eigen::Index n, double r,
                      const QuadratureSpec& spec) {
  spec.validate();
  if (n < 2) throw InvalidInput("ball integration needs n >= 2");
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidInput("ball radius must be > 0");
  const GaussLegendre rule = gauss_legendre(spec.nodes);
  // Axis order: rho, theta, phi_1 .. phi_{n-2}.
  std::vector<Axis> axes;
  axes.push_back(scaled_axis(rule, 0.0, r, spec.panels));
  axes.push_back(scaled_axis(rule, 0.0, 2.0 * std::numbers::pi, spec.panels));
  for (Eigen::Index k = 2; k < n; ++k) axes.push_back(scaled_axis(rule, 0.0, std::numbers::pi, spec.panels));

  Vector sum = Vector::Zero(components);
  std::vector<double> phis(static_cast<std::size_t>(n - 2));
  for_each_node(n, spec.nodes * spec.panels, [&](const std::vector<int>& idx) {
    const double rho = axes[0].x[idx[0]];
    const double theta = axes[1].x[idx[1]];
    double w = axes[0].w[idx[0]] * axes[1].w[idx[1]] * std::pow(rho, static_cast<double>(n - 1));
    for (Eigen::Index k = 2; k < n; ++k) {
      phis[k - 2] = axes[k].x[idx[k]];
      w *= axes[k].w[idx[k]] * std::pow(std::sin(phis[k - 2]), static_cast<double>(n - k));
    }
    const Vector x = spherical_to_cartesian(rho, theta, phis);
    accumulate(sum, g(x), w, components, x);
  });
  return sum;
}

double integrate_ball(const ScalarIntegrand& g, Eigen::Index n, double r,
                      const QuadratureSpec& spec) {
  return integrate_ball(lift(g), 1, n, r, spec)(0);
}

double abs_monomial_ball_integral(const std::vector<int>& alpha, double r) {
  if (alpha.empty()) throw InvalidInput("monomial needs at least one exponent");
  if (!(r > 0.0)) throw InvalidInput("ball radius must be > 0");
  int degree = 0;
  double gamma_product = 1.0;
  for (int a : alpha) {
    if (a < 0) throw InvalidInput("monomial exponents must be >= 0");
    degree += a;
    gamma_product *= gamma_half_integer(a + 1);  // Gamma(beta_i), beta_i = (a+1)/2
  }
  const int n = static_cast<int>(alpha.size());
  const int power = degree + n;
  // Gamma(sum beta_i) = Gamma((degree + n)/2)
  return 2.0 * std::pow(r, power) / power * gamma_product / gamma_half_integer(power);
}

double monomial_ball_integral(const std::vector<int>& alpha, double r) {
  for (int a : alpha) {
    if (a < 0) throw InvalidInput("monomial exponents must be >= 0");
    if (a % 2 != 0) return 0.0;
  }
  return abs_monomial_ball_integral(alpha, r);
}

}  // namespace gsg
