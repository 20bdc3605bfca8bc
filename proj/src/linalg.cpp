#include "gsg/linalg.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gsg/errors.hpp"

namespace gsg {

void require_finite(const Eigen::Ref<const Matrix>& a, const char* what) {
  if (!a.allFinite()) {
    throw InvalidInput(std::string(what) + " has non-finite entries");
  }
}

double default_rcond(Eigen::Index rows, Eigen::Index cols) {
  return static_cast<double>(std::max(rows, cols)) *
         std::numeric_limits<double>::epsilon();
}

Vector singular_values(const Eigen::Ref<const Matrix>& a) {
  require_finite(a, "matrix");
  if (a.size() == 0) return Vector();
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

Eigen::Index numerical_rank(const Eigen::Ref<const Matrix>& a,
                            std::optional<double> rcond) {
  const Vector sigma = singular_values(a);
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double cutoff = rcond.value_or(default_rcond(a.rows(), a.cols())) * sigma(0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) ++rank;
  }
  return rank;
}

Matrix pseudoinverse(const Eigen::Ref<const Matrix>& a, std::optional<double> rcond) {
  require_finite(a, "matrix");
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sigma = svd.singularValues();
  Vector inv = Vector::Zero(sigma.size());
  if (sigma.size() > 0 && sigma(0) > 0.0) {
    const double cutoff = rcond.value_or(default_rcond(a.rows(), a.cols())) * sigma(0);
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma(i) > cutoff) inv(i) = 1.0 / sigma(i);
    }
  }
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

double spectral_norm(const Eigen::Ref<const Matrix>& a) {
  const Vector sigma = singular_values(a);
  return sigma.size() == 0 ? 0.0 : sigma(0);
}

Matrix smw_rank1_inverse(const Eigen::Ref<const Matrix>& d_inv,
                         const Eigen::Ref<const Vector>& u,
                         const Eigen::Ref<const Vector>& v, double tol) {
  require_finite(d_inv, "D^{-1}");
  require_finite(u, "u");
  require_finite(v, "v");
  if (d_inv.rows() != d_inv.cols() || u.size() != d_inv.rows() ||
      v.size() != d_inv.rows()) {
    throw InvalidInput("smw_rank1_inverse: dimension mismatch");
  }
  const Vector d_inv_u = d_inv * u;
  const double denom = 1.0 + v.dot(d_inv_u);
  if (std::abs(denom) <= tol) {
    throw SingularUpdate("rank-one update is singular: 1 + v^T D^{-1} u = " +
                         std::to_string(denom));
  }
  const Vector vt_d_inv = d_inv.transpose() * v;
  return d_inv - (d_inv_u * vt_d_inv.transpose()) / denom;
}

double gamma_half_integer(int two_k) {
  if (two_k <= 0) {
    throw DomainError("gamma_half_integer: argument two_k must be >= 1, got " +
                      std::to_string(two_k));
  }
  // Walk up from Gamma(1/2) or Gamma(1) in unit steps.
  double x = (two_k % 2 == 0) ? 1.0 : 0.5;
  double g = (two_k % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
  const double target = 0.5 * two_k;
  while (x < target) {
    g *= x;
    x += 1.0;
  }
  return g;
}

}  // namespace gsg
