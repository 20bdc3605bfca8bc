#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsg/bounds.hpp"
#include "gsg/limits.hpp"

namespace gsg {

enum class RegionKind { Rect, Ball };
enum class Sampling { Grid, Arbitrary };

std::string_view to_string(RegionKind kind);
std::string_view to_string(Sampling sampling);

/// A convergence study: one GSG per schedule entry against the limit GSG.
struct ExperimentConfig {
  std::string field_id;
  RegionKind region = RegionKind::Rect;
  Vector x0;
  Vector sides;        ///< rect only
  double radius = 1.0; ///< ball only
  std::vector<std::vector<int>> schedule;
  int nodes = 64;
  std::uint64_t seed = 0;
  Sampling sampling = Sampling::Grid;  ///< Arbitrary is rect only

  /// Throws InvalidInput / UnknownId on an unusable config.
  void validate() const;
};

/// Config for the figure study on `field_id` with the field's default region
/// and N_1 = ... = N_n = 2^lo .. 2^hi.
ExperimentConfig figure_config(std::string_view field_id, RegionKind region, int lo, int hi);

/**
 * Parses an N-schedule for n axes. Entries are comma separated; each is
 * either a single count applied to every axis ("16", "2^4"), a per-axis
 * tuple ("4x8"), or a power range "2^a..2^b" expanding to one entry per
 * exponent. Throws InvalidInput on malformed text.
 */
std::vector<std::vector<int>> parse_schedule(std::string_view text, Eigen::Index n);

struct ConvergenceRow {
  std::vector<int> counts;
  Eigen::Index columns = 0;
  double gsg_error = 0.0;   ///< ||gsg - grad f(x0)||
  double limit_gap = 0.0;   ///< ||gsg - limit gsg||
  double classical = 0.0;
  std::optional<double> centered;
  double adinf = 0.0;
  double limit_error = 0.0; ///< ||limit gsg - grad f(x0)||
  bool dominated = true;
};

struct ConvergenceTable {
  ExperimentConfig config;
  LimitGsgResult limit;
  Vector true_gradient;
  BoundReport adinf;
  double lipschitz_gradient = 0.0;
  double lipschitz_hessian = 0.0;
  double slack = 0.0;  ///< absolute rounding allowance in the domination check
  std::vector<ConvergenceRow> rows;

  bool all_dominated() const;
};

/// Runs every schedule entry (concurrently), rows in schedule order.
ConvergenceTable run_convergence(const ExperimentConfig& config);

inline constexpr std::string_view kConvergenceSchema = "# gsg-convergence v1";

/// Schema tag line, a comment line describing the config, the header and one
/// row per schedule entry. Byte-identical for identical configs.
void write_csv(std::ostream& out, const ConvergenceTable& table);

}  // namespace gsg
