#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "gsg/linalg.hpp"

namespace gsg {

/// Column budget applied by the sample-matrix builders unless overridden.
inline constexpr std::int64_t kDefaultColumnBudget = 10'000'000;

/**
 * Axis-aligned box R(x0; d) with x0 at its minimal corner, side lengths d and
 * N_i equal subdivisions along axis i.
 */
struct HyperrectRegion {
  Vector x0;
  Vector sides;
  std::vector<int> counts;

  /// Throws InvalidInput unless n >= 2, all sides > 0 and all counts >= 2.
  void validate() const;
  Eigen::Index dim() const { return x0.size(); }
  /// Cell widths d_i / N_i.
  Vector sublengths() const;
  /// N = prod N_i.
  std::int64_t total_count() const;
  /// Product of the side lengths.
  double volume() const;
};

/**
 * Ball B(x0; r) partitioned on a polar grid. counts[0] subdivides the radius,
 * counts[1] the azimuth theta in [0, 2pi), counts[2..] the polar angles
 * phi_1..phi_{n-2} in [0, pi).
 */
struct BallRegion {
  Vector x0;
  double radius = 1.0;
  std::vector<int> counts;

  /// Throws InvalidInput unless n >= 2, radius > 0 and all counts >= 3.
  void validate() const;
  Eigen::Index dim() const { return x0.size(); }
  std::int64_t total_count() const;
};

enum class RegionTag { RectGrid, RectArbitrary, BallGrid, Custom };

std::string_view to_string(RegionTag tag);

/**
 * Direction matrix S (n x N, column j is x^j - x0) plus the partition
 * multi-index of every column. Multi-indices are 1-based: (j, z_2..z_n) for
 * rectangles and (y_1..y_n) for balls. Custom matrices carry no index.
 */
class SampleMatrix {
 public:
  SampleMatrix(Matrix directions, RegionTag tag, std::vector<int> indices = {});

  /// Wraps an arbitrary direction matrix (tag Custom).
  static SampleMatrix from_directions(Matrix directions);

  const Matrix& directions() const { return directions_; }
  RegionTag tag() const { return tag_; }
  Eigen::Index dim() const { return directions_.rows(); }
  Eigen::Index size() const { return directions_.cols(); }
  bool has_index() const { return !indices_.empty(); }
  std::span<const int> multi_index(Eigen::Index col) const;

 private:
  Matrix directions_;
  RegionTag tag_;
  std::vector<int> indices_;
};

/// Rightmost-endpoint grid S_R: column (j, z) equals diag(d_i/N_i) (j, z_2..z_n).
/// Blocks are ordered lexicographically in (z_2..z_n) with z_n fastest; j is
/// the inner index.
SampleMatrix build_rect_grid(const HyperrectRegion& region,
                             std::int64_t column_budget = kDefaultColumnBudget);

struct SeededOffsets {
  std::uint64_t seed = 0;
};

/// Either a seed for the deterministic generator or an explicit n x N matrix
/// of offsets in [0, 1] (column order matching build_rect_grid).
using OffsetSource = std::variant<SeededOffsets, Matrix>;

/// S = S_R - S_M with S_M = diag(d_i/N_i) * offsets: one arbitrary point in
/// each closed cell.
SampleMatrix build_rect_arbitrary(const HyperrectRegion& region, const OffsetSource& offsets,
                                  std::int64_t column_budget = kDefaultColumnBudget);

/// Offsets drawn by build_rect_arbitrary for a given seed (n x N, in [0, 1)).
Matrix seeded_offsets(Eigen::Index n, std::int64_t columns, std::uint64_t seed);

/// Polar grid on the ball: column y is spherical_to_cartesian(r y_1/N_1,
/// 2 pi y_2/N_2, pi y_3/N_3, ..., pi y_n/N_n). Columns lexicographic in y
/// with y_n fastest.
SampleMatrix build_ball_grid(const BallRegion& region,
                             std::int64_t column_budget = kDefaultColumnBudget);

/**
 * n-spherical coordinates to Cartesian:
 *   x_1 = rho cos phi_1, x_2 = rho sin phi_1 cos phi_2, ...,
 *   x_{n-1} = rho sin phi_1 ... sin phi_{n-2} cos theta,
 *   x_n     = rho sin phi_1 ... sin phi_{n-2} sin theta.
 * n = phis.size() + 2.
 */
Vector spherical_to_cartesian(double rho, double theta, std::span<const double> phis);

/// (r y_1/N_1)^{n-1} * prod_{k=3..n} sin^{n-k+1}(pi y_k / N_k).
double jacobian_det(const BallRegion& region, std::span<const int> y);

/// jacobian_det of every column of a ball-grid sample matrix, in column order.
Vector jacobian_weights(const BallRegion& region, const SampleMatrix& samples);

/// Largest column norm.
double sample_radius(const Eigen::Ref<const Matrix>& directions);
double sample_radius(const SampleMatrix& samples);

/// CSV dump: "n,N,tag" header and values, then one row per column with the
/// 1-based column index, multi-index and direction components.
void write_csv(std::ostream& out, const SampleMatrix& samples);

}  // namespace gsg
