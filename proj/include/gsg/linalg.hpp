#pragma once

#include <Eigen/Dense>
#include <optional>

namespace gsg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Throws InvalidInput naming `what` if any entry of `a` is NaN or infinite.
void require_finite(const Eigen::Ref<const Matrix>& a, const char* what);

/// Default relative cutoff for treating a singular value as zero:
/// max(rows, cols) * machine epsilon.
double default_rcond(Eigen::Index rows, Eigen::Index cols);

/// Singular values of `a` in decreasing order.
Vector singular_values(const Eigen::Ref<const Matrix>& a);

/// Number of singular values above rcond * sigma_max.
Eigen::Index numerical_rank(const Eigen::Ref<const Matrix>& a,
                            std::optional<double> rcond = std::nullopt);

/**
 * Moore-Penrose pseudoinverse computed from a thin SVD.
 *
 * Singular values at or below rcond * sigma_max are treated as zero; the
 * default rcond is default_rcond(rows, cols). The result is cols x rows and
 * satisfies the four Penrose identities up to rounding.
 */
Matrix pseudoinverse(const Eigen::Ref<const Matrix>& a,
                     std::optional<double> rcond = std::nullopt);

/// Induced 2-norm (largest singular value). Zero for the zero matrix.
double spectral_norm(const Eigen::Ref<const Matrix>& a);

/**
 * (D + u v^T)^{-1} from D^{-1} by the Sherman-Morrison formula.
 *
 * Throws SingularUpdate when |1 + v^T D^{-1} u| <= tol.
 */
Matrix smw_rank1_inverse(const Eigen::Ref<const Matrix>& d_inv,
                         const Eigen::Ref<const Vector>& u,
                         const Eigen::Ref<const Vector>& v, double tol = 1e-12);

/// Gamma(two_k / 2) for two_k >= 1, by the recurrence Gamma(x+1) = x Gamma(x)
/// from Gamma(1) = 1 or Gamma(1/2) = sqrt(pi). Throws DomainError otherwise.
double gamma_half_integer(int two_k);

}  // namespace gsg
