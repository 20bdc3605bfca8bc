#include "gsg/closed_forms.hpp"

#include <cmath>
#include <numbers>

#include "gsg/errors.hpp"

namespace gsg {

namespace {

void check_grid(const std::vector<int>& counts, const Vector& sublengths) {
  if (counts.empty() || static_cast<Eigen::Index>(counts.size()) != sublengths.size()) {
    throw InvalidInput("counts and sublengths must be non-empty and of equal length");
  }
  for (Eigen::Index i = 0; i < sublengths.size(); ++i) {
    if (counts[i] < 2) throw InvalidInput("counts must be >= 2");
    if (!(sublengths(i) > 0.0) || !std::isfinite(sublengths(i))) {
      throw InvalidInput("sublengths must be finite and > 0");
    }
  }
}

double count_product(const std::vector<int>& counts) {
  double total = 1.0;
  for (int c : counts) total *= c;
  return total;
}

}  // namespace

ClosedFormGram gram_closed_form(const std::vector<int>& counts, const Vector& sublengths) {
  check_grid(counts, sublengths);
  const auto n = sublengths.size();
  const double total = count_product(counts);
  Matrix u(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ni = counts[i];
    for (Eigen::Index j = 0; j < n; ++j) {
      const double nj = counts[j];
      u(i, j) = (i == j)
                    ? total * (ni + 1) * (2 * ni + 1) / 6.0 * sublengths(i) * sublengths(i)
                    : total * (ni + 1) * (nj + 1) / 4.0 * sublengths(i) * sublengths(j);
    }
  }
  return ClosedFormGram{counts, sublengths, u};
}

Matrix gram_inverse_closed_form(const std::vector<int>& counts, const Vector& sublengths) {
  check_grid(counts, sublengths);
  const auto n = sublengths.size();
  Vector e(n);
  Vector y(n);
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double ni = counts[i];
    e(i) = 1.0 / ((ni * ni - 1.0) * sublengths(i) * sublengths(i));
    y(i) = 1.0 / ((ni - 1.0) * sublengths(i));
    s += (ni + 1.0) / (ni - 1.0);
  }
  const Matrix inner = Matrix(e.asDiagonal()) - (3.0 / (1.0 + 3.0 * s)) * y * y.transpose();
  return (12.0 / count_product(counts)) * inner;
}

LimitMatrix limit_matrix_L(const Vector& sides) {
  const auto n = sides.size();
  if (n < 1) throw InvalidInput("limit_matrix_L: empty side vector");
  require_finite(sides, "sides");
  if (sides.minCoeff() <= 0.0) throw InvalidInput("limit_matrix_L: sides must be > 0");
  const double dn = static_cast<double>(n);
  Matrix l_ddot = Matrix::Constant(n, n, -36.0 / (3.0 * dn + 1.0));
  l_ddot.diagonal().setConstant(12.0 * (3.0 * dn - 2.0) / (3.0 * dn + 1.0));
  const Vector inv = sides.cwiseInverse();
  Matrix l = inv.asDiagonal() * l_ddot * inv.asDiagonal();
  return LimitMatrix{sides, l, l_ddot};
}

double lddot_norm(int n) {
  if (n < 2) throw DomainError("lddot_norm: n must be >= 2");
  return 12.0;
}

double ball_volume(int dim, double r) {
  if (dim < 1) throw DomainError("ball_volume: dim must be >= 1");
  if (!(r > 0.0)) throw DomainError("ball_volume: r must be > 0");
  // Gamma(dim/2 + 1) = Gamma((dim + 2)/2)
  return std::pow(std::numbers::pi, 0.5 * dim) * std::pow(r, dim) / gamma_half_integer(dim + 2);
}

double eta(int n) {
  if (n < 1) throw DomainError("eta: n must be >= 1");
  return gamma_half_integer(n + 4) / (std::sqrt(std::numbers::pi) * gamma_half_integer(n + 3));
}

Matrix m_matrix(int n, double r) {
  if (n < 2) throw DomainError("m_matrix: n must be >= 2");
  return Matrix::Identity(n, n) * (ball_volume(n + 2, r) / (2.0 * std::numbers::pi));
}

}  // namespace gsg
