#include "gsg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "gsg/closed_forms.hpp"
#include "gsg/errors.hpp"

namespace gsg {

namespace {

void check_constant(double value, const char* what) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InvalidInput(std::string(what) + " must be finite and >= 0");
  }
}

// ||(M^T)^dagger|| for M with full row rank is 1 / sigma_min(M).
double transposed_pinv_norm(const Eigen::Ref<const Matrix>& m) {
  const Vector sigma = singular_values(m);
  const double cutoff = default_rcond(m.rows(), m.cols()) * sigma(0);
  if (sigma.size() < m.rows() || sigma(sigma.size() - 1) <= cutoff) {
    throw RankError("direction matrix does not have full row rank");
  }
  return 1.0 / sigma(sigma.size() - 1);
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Classical: return "classical";
    case BoundKind::ClassicalCentered: return "classical-centered";
    case BoundKind::AdinfRect: return "adinf-rect";
    case BoundKind::AdinfHypercube: return "adinf-hypercube";
    case BoundKind::AdinfBall: return "adinf-ball";
  }
  return "unknown";
}

BoundReport classical_bound(const Eigen::Ref<const Matrix>& s, double lipschitz_gradient) {
  check_constant(lipschitz_gradient, "L_grad");
  require_finite(s, "sample matrix");
  const double radius = sample_radius(s);
  if (!(radius > 0.0)) throw RankError("zero sample matrix");
  const double norm = transposed_pinv_norm(s / radius);
  BoundReport report;
  report.kind = BoundKind::Classical;
  report.value = std::sqrt(static_cast<double>(s.cols())) / 2.0 * lipschitz_gradient * norm * radius;
  report.lipschitz_gradient = lipschitz_gradient;
  report.radius = radius;
  report.columns = s.cols();
  return report;
}

BoundReport classical_bound(const SampleMatrix& samples, double lipschitz_gradient) {
  return classical_bound(samples.directions(), lipschitz_gradient);
}

BoundReport classical_centered_bound(const Eigen::Ref<const Matrix>& a, double lipschitz_hessian,
                                     double radius) {
  check_constant(lipschitz_hessian, "L_H");
  require_finite(a, "half stencil");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("Delta_S must be > 0");
  const double norm = transposed_pinv_norm(a / radius);
  const auto columns = 2 * a.cols();
  BoundReport report;
  report.kind = BoundKind::ClassicalCentered;
  report.value = std::sqrt(static_cast<double>(columns)) / 6.0 * lipschitz_hessian * norm *
                 radius * radius;
  report.lipschitz_hessian = lipschitz_hessian;
  report.radius = radius;
  report.columns = columns;
  return report;
}

BoundReport adinf_bound_rect(const Vector& sides, double lipschitz_gradient) {
  check_constant(lipschitz_gradient, "L_grad");
  require_finite(sides, "sides");
  if (sides.size() < 1 || sides.minCoeff() <= 0.0) throw InvalidInput("sides must be > 0");
  const double n = static_cast<double>(sides.size());
  const double radius = sides.norm();
  const double min_side = sides.minCoeff();

  BoundReport report;
  report.lipschitz_gradient = lipschitz_gradient;
  report.radius = radius;
  report.min_side = min_side;
  const double general = 1.5 * std::sqrt(n) * lipschitz_gradient * radius * radius / min_side;
  // Exact equality on purpose: the hypercube form is only claimed for equal sides.
  const bool hypercube = (sides.array() == sides(0)).all();
  if (hypercube) {
    report.kind = BoundKind::AdinfHypercube;
    report.value = 0.5 * (2.0 * n + 1.0) * lipschitz_gradient * radius;
    report.general_value = general;
  } else {
    report.kind = BoundKind::AdinfRect;
    report.value = general;
  }
  return report;
}

BoundReport adinf_bound_ball(int n, double radius, double lipschitz_hessian) {
  check_constant(lipschitz_hessian, "L_H");
  if (n < 2) throw DomainError("adinf_bound_ball: n must be >= 2");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("radius must be > 0");
  BoundReport report;
  report.kind = BoundKind::AdinfBall;
  report.eta = eta(n);
  report.value = std::sqrt(static_cast<double>(n)) / (3.0 * std::sqrt(std::numbers::pi)) *
                 lipschitz_hessian * *report.eta * radius * radius;
  report.lipschitz_hessian = lipschitz_hessian;
  report.radius = radius;
  return report;
}

std::optional<Matrix> antipodal_half(const Eigen::Ref<const Matrix>& s, double rel_tol) {
  if (s.cols() % 2 != 0) return std::nullopt;
  const double radius = sample_radius(s);
  if (!(radius > 0.0)) return std::nullopt;
  const double quantum = rel_tol * radius;

  using Key = std::vector<long long>;
  auto key = [&](Eigen::Index j, double sign) {
    Key k(static_cast<std::size_t>(s.rows()));
    for (Eigen::Index i = 0; i < s.rows(); ++i) k[i] = std::llround(sign * s(i, j) / quantum);
    return k;
  };
  std::map<Key, std::vector<Eigen::Index>> open;  // columns still waiting for a partner
  std::vector<Eigen::Index> firsts;
  for (Eigen::Index j = 0; j < s.cols(); ++j) {
    auto it = open.find(key(j, -1.0));
    if (it != open.end() && !it->second.empty()) {
      firsts.push_back(it->second.front());
      it->second.erase(it->second.begin());
      if (it->second.empty()) open.erase(it);
    } else {
      open[key(j, 1.0)].push_back(j);
    }
  }
  if (!open.empty()) return std::nullopt;
  std::sort(firsts.begin(), firsts.end());
  Matrix a(s.rows(), static_cast<Eigen::Index>(firsts.size()));
  for (std::size_t k = 0; k < firsts.size(); ++k) a.col(static_cast<Eigen::Index>(k)) = s.col(firsts[k]);
  return a;
}

}  // namespace gsg
