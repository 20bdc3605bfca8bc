#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsg/field.hpp"
#include "gsg/regions.hpp"

namespace gsg {

/// A generalized simplex gradient together with the data that produced it.
struct GradientEstimate {
  Vector estimate;
  Vector x0;
  double radius = 0.0;          ///< Delta_S of the sample matrix
  Eigen::Index columns = 0;     ///< N
  std::optional<Vector> true_gradient;
  std::optional<double> error;  ///< ||estimate - true_gradient||
  std::vector<std::pair<std::string, double>> bounds;

  /// Records the exact gradient and the resulting absolute error.
  void attach_truth(const Vector& gradient);
};

/// delta_f(x0; S): entry j is f(x0 + S e_j) - f(x0). f(x0) is evaluated once.
/// Throws EvaluationError naming the failing column.
Vector delta_f(const ScalarField& field, const Vector& x0, const SampleMatrix& samples);

/// (S^dagger)^T delta_f(x0; S). When the field has an analytic gradient the
/// true gradient and error are attached.
GradientEstimate simplex_gradient(const ScalarField& field, const Vector& x0, const SampleMatrix& samples);

/// Normal-equation form (S S^T)^{-T} S delta_f. Requires full row rank
/// (throws RankError otherwise).
Vector gsg_normal_equations(const ScalarField& field, const Vector& x0,
                            const SampleMatrix& samples);

/// Weighted least-squares variant (S W S^T)^{-1} S W delta_f with W = diag(weights).
/// With Jacobian weights on a polar grid each sample counts in proportion to
/// the volume of its cell.
GradientEstimate weighted_gsg(const ScalarField& field, const Vector& x0,
                              const SampleMatrix& samples, const Vector& weights);

/// Column header matching write_csv_row for an n-dimensional estimate with
/// the given bound names.
void write_csv_header(std::ostream& out, Eigen::Index n,
                      const std::vector<std::string>& bound_names = {});
void write_csv_row(std::ostream& out, const GradientEstimate& estimate);

}  // namespace gsg
