#include "gsg/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <ostream>

#include "gsg/csv.hpp"
#include "gsg/errors.hpp"
#include "gsg/registry.hpp"
#include "gsg/simplex_gradient.hpp"

namespace gsg {

namespace {

int parse_count(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw InvalidInput("bad schedule entry '" + std::string(text) + "'");
    }
    return v;
  };
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    const int base = parse_int(text.substr(0, caret));
    const int exp = parse_int(text.substr(caret + 1));
    if (exp < 0 || exp > 30) throw InvalidInput("exponent out of range in '" + std::string(text) + "'");
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
      v *= base;
      if (v > (1 << 30)) throw InvalidInput("schedule entry too large: " + std::string(text));
    }
    return static_cast<int>(v);
  }
  return parse_int(text);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

Box region_box(const ExperimentConfig& c) {
  return c.region == RegionKind::Rect ? Box::from_corner(c.x0, c.sides)
                                      : Box::around_ball(c.x0, c.radius);
}

ConvergenceRow run_entry(const ExperimentConfig& c, const ScalarField& field,
                         const ConvergenceTable& table, const std::vector<int>& counts) {
  std::optional<SampleMatrix> samples;
  if (c.region == RegionKind::Rect) {
    HyperrectRegion region{c.x0, c.sides, counts};
    samples = c.sampling == Sampling::Grid ? build_rect_grid(region)
                                           : build_rect_arbitrary(region, SeededOffsets{c.seed});
  } else {
    samples = build_ball_grid(BallRegion{c.x0, c.radius, counts});
  }

  ConvergenceRow row;
  row.counts = counts;
  row.columns = samples->size();
  const GradientEstimate est = simplex_gradient(field, c.x0, *samples);
  row.gsg_error = (est.estimate - table.true_gradient).norm();
  row.limit_gap = (est.estimate - table.limit.estimate).norm();
  row.classical = classical_bound(*samples, table.lipschitz_gradient).value;
  if (c.region == RegionKind::Ball) {
    if (auto half = antipodal_half(samples->directions())) {
      row.centered =
          classical_centered_bound(*half, table.lipschitz_hessian, sample_radius(*samples)).value;
    }
  }
  row.adinf = table.adinf.value;
  row.limit_error = (table.limit.estimate - table.true_gradient).norm();
  row.dominated = row.gsg_error <= row.classical + table.slack &&
                  (!row.centered || row.gsg_error <= *row.centered + table.slack) &&
                  row.limit_error <= row.adinf + table.slack;
  return row;
}

}  // namespace

std::string_view to_string(RegionKind kind) { return kind == RegionKind::Rect ? "rect" : "ball"; }
std::string_view to_string(Sampling s) { return s == Sampling::Grid ? "grid" : "arbitrary"; }

void ExperimentConfig::validate() const {
  const FieldEntry& entry = find_field(field_id);
  const Eigen::Index n = entry.field.dim;
  if (x0.size() != n) throw InvalidInput("x0 must have " + std::to_string(n) + " components");
  if (schedule.empty()) throw InvalidInput("schedule is empty");
  for (const auto& counts : schedule) {
    if (static_cast<Eigen::Index>(counts.size()) != n) {
      throw InvalidInput("schedule entry has the wrong number of axes");
    }
  }
  if (region == RegionKind::Rect) {
    if (sides.size() != n) throw InvalidInput("sides must have " + std::to_string(n) + " components");
  } else if (sampling != Sampling::Grid) {
    throw InvalidInput("arbitrary sampling applies to rectangles only");
  }
  QuadratureSpec{nodes}.validate();
}

ExperimentConfig figure_config(std::string_view field_id, RegionKind region, int lo, int hi) {
  const FieldEntry& entry = find_field(field_id);
  ExperimentConfig c;
  c.field_id = std::string(field_id);
  c.region = region;
  if (region == RegionKind::Rect) {
    c.x0 = entry.rect.x0;
    c.sides = entry.rect.sides;
  } else {
    c.x0 = entry.ball.x0;
    c.radius = entry.ball.radius;
  }
  for (int k = lo; k <= hi; ++k) {
    c.schedule.emplace_back(static_cast<std::size_t>(entry.field.dim), 1 << k);
  }
  return c;
}

std::vector<std::vector<int>> parse_schedule(std::string_view text, Eigen::Index n) {
  if (n < 1) throw InvalidInput("schedule needs a positive dimension");
  std::vector<std::vector<int>> out;
  const auto axes = static_cast<std::size_t>(n);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) throw InvalidInput("empty schedule entry");

    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      const std::string_view a = trim(item.substr(0, dots));
      const std::string_view b = trim(item.substr(dots + 2));
      const auto ca = a.find('^');
      const auto cb = b.find('^');
      if (ca == std::string_view::npos || cb == std::string_view::npos ||
          a.substr(0, ca) != b.substr(0, cb)) {
        throw InvalidInput("ranges must look like 2^a..2^b");
      }
      const int base = parse_count(a.substr(0, ca));
      const int lo = parse_count(a.substr(ca + 1));
      const int hi = parse_count(b.substr(cb + 1));
      if (lo > hi) throw InvalidInput("empty schedule range");
      for (int k = lo; k <= hi; ++k) {
        out.emplace_back(axes, parse_count(std::to_string(base) + "^" + std::to_string(k)));
      }
    } else if (item.find('x') != std::string_view::npos) {
      std::vector<int> counts;
      std::string_view rest = item;
      while (true) {
        const auto x = rest.find('x');
        counts.push_back(parse_count(trim(rest.substr(0, x))));
        if (x == std::string_view::npos) break;
        rest = rest.substr(x + 1);
      }
      if (counts.size() != axes) throw InvalidInput("tuple entry needs one count per axis");
      out.push_back(std::move(counts));
    } else {
      out.emplace_back(axes, parse_count(item));
    }
  }
  if (out.empty()) throw InvalidInput("schedule is empty");
  return out;
}

bool ConvergenceTable::all_dominated() const {
  return std::all_of(rows.begin(), rows.end(), [](const ConvergenceRow& r) { return r.dominated; });
}

ConvergenceTable run_convergence(const ExperimentConfig& config) {
  config.validate();
  const FieldEntry& entry = find_field(config.field_id);
  const ScalarField& field = entry.field;
  const QuadratureSpec spec{config.nodes};

  ConvergenceTable table;
  table.config = config;
  table.true_gradient = field.gradient(config.x0);
  const Box box = region_box(config);
  table.lipschitz_gradient = field.lipschitz_gradient(box);
  table.lipschitz_hessian = field.lipschitz_hessian(box);
  if (config.region == RegionKind::Rect) {
    table.limit = limit_gsg_rect(field, RectDomain{config.x0, config.sides}, spec);
    table.adinf = adinf_bound_rect(config.sides, table.lipschitz_gradient);
  } else {
    table.limit = limit_gsg_ball(field, BallDomain{config.x0, config.radius}, spec);
    table.adinf = adinf_bound_ball(static_cast<int>(field.dim), config.radius,
                                   table.lipschitz_hessian);
  }
  table.slack = 1e-9 * std::max(1.0, table.true_gradient.norm());

  std::vector<std::future<ConvergenceRow>> pending;
  pending.reserve(config.schedule.size());
  for (const auto& counts : config.schedule) {
    pending.push_back(std::async(std::launch::async, [&, counts] {
      return run_entry(config, field, table, counts);
    }));
  }
  for (auto& p : pending) table.rows.push_back(p.get());
  return table;
}

void write_csv(std::ostream& out, const ConvergenceTable& table) {
  const ExperimentConfig& c = table.config;
  const auto n = c.x0.size();
  out << kConvergenceSchema << '\n';
  out << "# field=" << c.field_id << " region=" << to_string(c.region) << " x0=" << csv::join(c.x0, ' ');
  if (c.region == RegionKind::Rect) {
    out << " sides=" << csv::join(c.sides, ' ') << " sampling=" << to_string(c.sampling);
  } else {
    out << " radius=" << csv::format(c.radius);
  }
  out << " nodes=" << c.nodes << " seed=" << c.seed << " L_grad=" << csv::format(table.lipschitz_gradient)
      << " L_H=" << csv::format(table.lipschitz_hessian) << " adinf_kind=" << to_string(table.adinf.kind)
      << " limit=" << csv::join(table.limit.estimate, ' ') << '\n';
  for (Eigen::Index i = 1; i <= n; ++i) out << 'N' << i << ',';
  out << "N,gsg_error,limit_gap,classical_bound,centered_bound,adinf_bound,limit_error,dominated\n";
  for (const auto& r : table.rows) {
    for (int k : r.counts) out << k << ',';
    out << r.columns << ',' << csv::format(r.gsg_error) << ',' << csv::format(r.limit_gap) << ','
        << csv::format(r.classical) << ',';
    if (r.centered) out << csv::format(*r.centered);
    out << ',' << csv::format(r.adinf) << ',' << csv::format(r.limit_error) << ','
        << (r.dominated ? "yes" : "no") << '\n';
  }
}

}  // namespace gsg
