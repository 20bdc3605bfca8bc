#include "gsg/regions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

#include "gsg/csv.hpp"
#include "gsg/errors.hpp"

namespace gsg {

namespace {

std::int64_t product(const std::vector<int>& counts) {
  std::int64_t total = 1;
  for (int c : counts) {
    if (c > 0 && total > std::numeric_limits<std::int64_t>::max() / c) {
      return std::numeric_limits<std::int64_t>::max();
    }
    total *= c;
  }
  return total;
}

void check_budget(std::int64_t columns, std::int64_t budget) {
  if (columns > budget) {
    throw BudgetExceeded("sample matrix needs " + std::to_string(columns) +
                         " columns, budget is " + std::to_string(budget));
  }
}

// Advances a 1-based odometer over [1, limits[k]] with the last digit fastest.
void advance(std::vector<int>& digits, const std::vector<int>& limits, std::size_t first) {
  for (std::size_t k = digits.size(); k-- > first;) {
    if (++digits[k] <= limits[k]) return;
    digits[k] = 1;
  }
}

}  // namespace

void HyperrectRegion::validate() const {
  const auto n = x0.size();
  if (n < 2) throw InvalidInput("hyperrectangle needs dimension n >= 2");
  if (sides.size() != n || static_cast<Eigen::Index>(counts.size()) != n) {
    throw InvalidInput("hyperrectangle: x0, sides and counts must have equal length");
  }
  require_finite(x0, "x0");
  require_finite(sides, "sides");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(sides(i) > 0.0)) throw InvalidInput("hyperrectangle sides must be > 0");
    if (counts[i] < 2) throw InvalidInput("hyperrectangle counts must be >= 2");
  }
}

Vector HyperrectRegion::sublengths() const {
  Vector out(sides.size());
  for (Eigen::Index i = 0; i < sides.size(); ++i) out(i) = sides(i) / counts[i];
  return out;
}

std::int64_t HyperrectRegion::total_count() const { return product(counts); }

double HyperrectRegion::volume() const { return sides.prod(); }

void BallRegion::validate() const {
  const auto n = x0.size();
  if (n < 2) throw InvalidInput("ball needs dimension n >= 2");
  if (static_cast<Eigen::Index>(counts.size()) != n) {
    throw InvalidInput("ball: counts must have one entry per dimension");
  }
  require_finite(x0, "x0");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("ball radius must be > 0");
  for (int c : counts) {
    if (c < 3) throw InvalidInput("ball counts must be >= 3");
  }
}

std::int64_t BallRegion::total_count() const { return product(counts); }

std::string_view to_string(RegionTag tag) {
  switch (tag) {
    case RegionTag::RectGrid: return "rect-grid";
    case RegionTag::RectArbitrary: return "rect-arbitrary";
    case RegionTag::BallGrid: return "ball-grid";
    case RegionTag::Custom: return "custom";
  }
  return "unknown";
}

SampleMatrix::SampleMatrix(Matrix directions, RegionTag tag, std::vector<int> indices)
    : directions_(std::move(directions)), tag_(tag), indices_(std::move(indices)) {
  if (directions_.rows() < 1 || directions_.cols() < 1) {
    throw InvalidInput("sample matrix must be non-empty");
  }
  if (!indices_.empty() &&
      indices_.size() != static_cast<std::size_t>(directions_.size())) {
    throw InvalidInput("sample matrix: multi-index table has the wrong size");
  }
}

SampleMatrix SampleMatrix::from_directions(Matrix directions) {
  return SampleMatrix(std::move(directions), RegionTag::Custom);
}

std::span<const int> SampleMatrix::multi_index(Eigen::Index col) const {
  if (indices_.empty()) return {};
  const auto n = static_cast<std::size_t>(dim());
  return std::span<const int>(indices_).subspan(static_cast<std::size_t>(col) * n, n);
}

SampleMatrix build_rect_grid(const HyperrectRegion& region, std::int64_t column_budget) {
  return build_rect_arbitrary(region, Matrix(), column_budget);
}

Matrix seeded_offsets(Eigen::Index n, std::int64_t columns, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix out(n, columns);
  for (std::int64_t j = 0; j < columns; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      // 53 random mantissa bits -> uniform on [0, 1), identical on every platform.
      out(i, j) = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
  }
  return out;
}

SampleMatrix build_rect_arbitrary(const HyperrectRegion& region, const OffsetSource& offsets,
                                  std::int64_t column_budget) {
  region.validate();
  const auto n = region.dim();
  const std::int64_t total = region.total_count();
  check_budget(total, column_budget);

  Matrix shift;
  RegionTag tag = RegionTag::RectArbitrary;
  if (const auto* seeded = std::get_if<SeededOffsets>(&offsets)) {
    shift = seeded_offsets(n, total, seeded->seed);
  } else {
    shift = std::get<Matrix>(offsets);
    if (shift.size() == 0) {
      tag = RegionTag::RectGrid;
    } else {
      if (shift.rows() != n || shift.cols() != total) {
        throw InvalidOffset("offset matrix must be n x N");
      }
      if (!shift.allFinite() || shift.minCoeff() < 0.0 || shift.maxCoeff() > 1.0) {
        throw InvalidOffset("offsets must lie in [0, 1]");
      }
    }
  }

  const Vector bar = region.sublengths();
  Matrix s(n, total);
  std::vector<int> indices(static_cast<std::size_t>(n * total));
  std::vector<int> digits(static_cast<std::size_t>(n), 1);
  for (std::int64_t col = 0; col < total; ++col) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double off = shift.size() == 0 ? 0.0 : shift(i, col);
      s(i, col) = bar(i) * (digits[i] - off);
      indices[col * n + i] = digits[i];
    }
    // j (digit 0) is the inner index; then z_n fastest among the block indices.
    if (++digits[0] > region.counts[0]) {
      digits[0] = 1;
      advance(digits, region.counts, 1);
    }
  }
  return SampleMatrix(std::move(s), tag, std::move(indices));
}

Vector spherical_to_cartesian(double rho, double theta, std::span<const double> phis) {
  const auto n = static_cast<Eigen::Index>(phis.size()) + 2;
  Vector x(n);
  double sines = rho;
  for (Eigen::Index i = 0; i < n - 2; ++i) {
    x(i) = sines * std::cos(phis[i]);
    sines *= std::sin(phis[i]);
  }
  x(n - 2) = sines * std::cos(theta);
  x(n - 1) = sines * std::sin(theta);
  return x;
}

SampleMatrix build_ball_grid(const BallRegion& region, std::int64_t column_budget) {
  region.validate();
  const auto n = region.dim();
  const std::int64_t total = region.total_count();
  check_budget(total, column_budget);

  Matrix s(n, total);
  std::vector<int> indices(static_cast<std::size_t>(n * total));
  std::vector<int> y(static_cast<std::size_t>(n), 1);
  std::vector<double> phis(static_cast<std::size_t>(n - 2));
  for (std::int64_t col = 0; col < total; ++col) {
    const double rho = region.radius * y[0] / region.counts[0];
    const double theta = 2.0 * std::numbers::pi * y[1] / region.counts[1];
    for (Eigen::Index k = 2; k < n; ++k) {
      phis[k - 2] = std::numbers::pi * y[k] / region.counts[k];
    }
    s.col(col) = spherical_to_cartesian(rho, theta, phis);
    for (Eigen::Index i = 0; i < n; ++i) indices[col * n + i] = y[i];
    advance(y, region.counts, 0);
  }
  return SampleMatrix(std::move(s), RegionTag::BallGrid, std::move(indices));
}

double jacobian_det(const BallRegion& region, std::span<const int> y) {
  const auto n = static_cast<int>(region.dim());
  if (static_cast<int>(y.size()) != n) throw InvalidInput("jacobian_det: index length != n");
  for (int k = 0; k < n; ++k) {
    if (y[k] < 1 || y[k] > region.counts[k]) throw InvalidInput("jacobian_det: index out of range");
  }
  double j = std::pow(region.radius * y[0] / region.counts[0], n - 1);
  for (int k = 2; k < n; ++k) {
    j *= std::pow(std::sin(std::numbers::pi * y[k] / region.counts[k]), n - k);
  }
  return j;
}

Vector jacobian_weights(const BallRegion& region, const SampleMatrix& samples) {
  if (samples.tag() != RegionTag::BallGrid || samples.dim() != region.dim()) {
    throw InvalidInput("jacobian_weights needs a ball-grid sample matrix of the region");
  }
  Vector w(samples.size());
  for (Eigen::Index j = 0; j < samples.size(); ++j) {
    w(j) = jacobian_det(region, samples.multi_index(j));
  }
  return w;
}

double sample_radius(const Eigen::Ref<const Matrix>& directions) {
  if (directions.cols() == 0) throw InvalidInput("sample radius of an empty matrix");
  return directions.colwise().norm().maxCoeff();
}

double sample_radius(const SampleMatrix& samples) {
  return sample_radius(samples.directions());
}

void write_csv(std::ostream& out, const SampleMatrix& samples) {
  const auto n = samples.dim();
  out << "n,N,tag\n" << n << ',' << samples.size() << ',' << to_string(samples.tag()) << '\n';
  out << "column";
  if (samples.has_index()) {
    for (Eigen::Index i = 1; i <= n; ++i) out << ",idx" << i;
  }
  for (Eigen::Index i = 1; i <= n; ++i) out << ",s" << i;
  out << '\n';
  for (Eigen::Index j = 0; j < samples.size(); ++j) {
    out << (j + 1);
    for (int idx : samples.multi_index(j)) out << ',' << idx;
    for (Eigen::Index i = 0; i < n; ++i) out << ',' << csv::format(samples.directions()(i, j));
    out << '\n';
  }
}

}  // namespace gsg
