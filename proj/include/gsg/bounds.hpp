#pragma once

#include <optional>
#include <string_view>

#include "gsg/regions.hpp"

namespace gsg {

enum class BoundKind { Classical, ClassicalCentered, AdinfRect, AdinfHypercube, AdinfBall };

std::string_view to_string(BoundKind kind);

/// An error bound on ||GSG - grad f(x0)|| together with the constants used.
struct BoundReport {
  double value = 0.0;
  BoundKind kind = BoundKind::Classical;
  std::optional<double> lipschitz_gradient;
  std::optional<double> lipschitz_hessian;
  double radius = 0.0;                 ///< Delta_S
  std::optional<double> min_side;      ///< Delta_min
  std::optional<Eigen::Index> columns; ///< N
  std::optional<double> eta;
  /// For a hypercube, the general (looser) rectangle bound alongside `value`.
  std::optional<double> general_value;
};

/// (sqrt(N)/2) L_grad ||(Shat^T)^dagger|| Delta_S with Shat = S / Delta_S.
/// Throws RankError if S lacks full row rank.
BoundReport classical_bound(const Eigen::Ref<const Matrix>& s, double lipschitz_gradient);
BoundReport classical_bound(const SampleMatrix& samples, double lipschitz_gradient);

/// Centred variant for S = [A, -A]: (sqrt(N)/6) L_H ||(Ahat^T)^dagger|| Delta_S^2
/// with Ahat = A / Delta_S and N = 2 cols(A).
BoundReport classical_centered_bound(const Eigen::Ref<const Matrix>& a, double lipschitz_hessian,
                                     double radius);

/**
 * Bound for the limit GSG on R(x0; d):
 *   (3/2) sqrt(n) L_grad Delta_S^2 / Delta_min with Delta_S = ||d||.
 * When every side is exactly equal the tighter (1/2)(2n+1) L_grad Delta_S is
 * reported as `value` (kind AdinfHypercube) and the general form is kept in
 * `general_value`.
 */
BoundReport adinf_bound_rect(const Vector& sides, double lipschitz_gradient);

/// Bound for the limit GSG on B(x0; r): sqrt(n)/(3 sqrt(pi)) L_H eta(n) r^2.
BoundReport adinf_bound_ball(int n, double radius, double lipschitz_hessian);

/**
 * If the columns of S pair up as (s, -s), returns one column of every pair in
 * column order (so S is a column permutation of [A, -A]). Columns are matched
 * after rounding to a grid of rel_tol * Delta_S.
 */
std::optional<Matrix> antipodal_half(const Eigen::Ref<const Matrix>& s, double rel_tol = 1e-9);

}  // namespace gsg
