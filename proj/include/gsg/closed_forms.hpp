#pragma once

#include <vector>

#include "gsg/linalg.hpp"

namespace gsg {

/// Closed-form Gram matrix U_n = S_R S_R^T of the rightmost-endpoint grid.
struct ClosedFormGram {
  std::vector<int> counts;
  Vector sublengths;
  Matrix u;
};

/**
 * [U_n]_ii = N (N_i+1)(2N_i+1)/6 * dbar_i^2,
 * [U_n]_ij = N (N_i+1)(N_j+1)/4 * dbar_i dbar_j.
 */
ClosedFormGram gram_closed_form(const std::vector<int>& counts, const Vector& sublengths);

/**
 * (S_R S_R^T)^{-T} = (12/N) (E - 3/(1+3s) y y^T) with
 * E = diag(1/((N_i^2-1) dbar_i^2)), y_i = 1/((N_i-1) dbar_i),
 * s = sum (N_i+1)/(N_i-1).
 */
Matrix gram_inverse_closed_form(const std::vector<int>& counts, const Vector& sublengths);

/// Limit of N (S S^T)^{-T} as every N_i grows, and its side-length-free form.
struct LimitMatrix {
  Vector sides;
  Matrix l;        ///< L_n = D^{-1} Lddot_n D^{-1}, D = diag(sides)
  Matrix l_ddot;   ///< 12(3n-2)/(3n+1) on the diagonal, -36/(3n+1) off it
};

LimitMatrix limit_matrix_L(const Vector& sides);

/// ||Lddot_n||_2, which equals 12 for every n >= 2.
double lddot_norm(int n);

/// Volume of the dim-dimensional ball of radius r.
double ball_volume(int dim, double r);

/// Gamma((n+4)/2) / (sqrt(pi) Gamma((n+3)/2)).
double eta(int n);

/// lim of the Jacobian-weighted polar-grid Gram sum: V_{n+2}(r)/(2 pi) * I_n.
Matrix m_matrix(int n, double r);

}  // namespace gsg
