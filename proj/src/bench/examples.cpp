#include "gsg/examples.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "gsg/csv.hpp"
#include "gsg/errors.hpp"
#include "gsg/limits.hpp"
#include "gsg/regions.hpp"
#include "gsg/registry.hpp"

namespace gsg {

namespace {

constexpr std::string_view kRectGridCsv =
    "n,N,tag\n"
    "2,6,rect-grid\n"
    "column,idx1,idx2,s1,s2\n"
    "1,1,1,4,3\n"
    "2,2,1,8,3\n"
    "3,3,1,12,3\n"
    "4,1,2,4,6\n"
    "5,2,2,8,6\n"
    "6,3,2,12,6\n";

std::string flat(const Matrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i > 0) out += "; ";
    out += csv::join(m.row(i).transpose(), ' ');
  }
  return out;
}

ExampleCheck compare(std::string label, const Matrix& computed, const Matrix& expected, double tol) {
  ExampleCheck c;
  c.label = std::move(label);
  c.computed = flat(computed);
  c.expected = flat(expected);
  c.tolerance = tol;
  c.deviation = computed.rows() == expected.rows() && computed.cols() == expected.cols()
                    ? (computed - expected).cwiseAbs().maxCoeff()
                    : INFINITY;
  c.passed = c.deviation <= tol;
  return c;
}

ExampleCheck compare(std::string label, double computed, double expected, double tol) {
  return compare(std::move(label), Matrix::Constant(1, 1, computed), Matrix::Constant(1, 1, expected),
                 tol);
}

Matrix rows2(std::initializer_list<double> top, std::initializer_list<double> bottom) {
  Matrix m(2, static_cast<Eigen::Index>(top.size()));
  std::copy(top.begin(), top.end(), m.row(0).begin());
  std::copy(bottom.begin(), bottom.end(), m.row(1).begin());
  return m;
}

void rect_grid_matrix(ExampleReport& r) {
  HyperrectRegion region{Vector::Zero(2), rows2({12}, {6}), {3, 2}};
  const SampleMatrix s = build_rect_grid(region);
  r.checks.push_back(compare("S_R", s.directions(), rows2({4, 8, 12, 4, 8, 12}, {3, 3, 3, 6, 6, 6}), 0.0));
  std::ostringstream text;
  write_csv(text, s);
  ExampleCheck c;
  c.label = "csv bytes";
  c.computed = std::to_string(text.str().size()) + " bytes";
  c.expected = std::to_string(kRectGridCsv.size()) + " bytes";
  c.passed = text.str() == kRectGridCsv;
  c.deviation = c.passed ? 0.0 : 1.0;
  r.checks.push_back(c);
}

void rect_arbitrary_matrix(ExampleReport& r) {
  HyperrectRegion region{Vector::Zero(2), rows2({12}, {6}), {3, 2}};
  const Matrix offsets = rows2({0.5, 0.75, 1, 1, 0.5, 0}, {1.0 / 3, 2.0 / 3, 0, 1, 0.5, 0});
  const SampleMatrix s = build_rect_arbitrary(region, offsets);
  r.checks.push_back(
      compare("S", s.directions(), rows2({2, 5, 8, 0, 6, 12}, {2, 1, 3, 3, 4.5, 6}), 1e-12));
}

void ball_grid_matrix(ExampleReport& r) {
  const SampleMatrix s = build_ball_grid(BallRegion{Vector::Zero(2), 30.0, {3, 4}});
  const Matrix expected = rows2({0, -10, 0, 10, 0, -20, 0, 20, 0, -30, 0, 30},
                                {10, 0, -10, 0, 20, 0, -20, 0, 30, 0, -30, 0});
  r.checks.push_back(compare("S_R", s.directions(), expected, 1e-12 * 30));
}

void rect_limit_quadratic(ExampleReport& r) {
  const FieldEntry& quad = find_field("quad2");
  Vector x0(2);
  x0 << 3, 1;
  const LimitGsgResult res = limit_gsg_rect(quad.field, RectDomain{x0, Vector::Ones(2)}, {64});
  r.checks.push_back(compare("T_2", res.t_vector, rows2({35.0 / 12}, {31.0 / 12}), 1e-6));
  r.checks.push_back(compare("limit", res.estimate, rows2({47.0 / 7}, {19.0 / 7}), 1e-6));
  const double err = (res.estimate - quad.field.gradient(x0)).norm();
  r.checks.push_back(compare("error", err, 5.0 * std::sqrt(2.0) / 7.0, 1e-6));
}

void ball_limit_quadratic(ExampleReport& r) {
  const FieldEntry& quad = find_field("quad2");
  Vector x0(2);
  x0 << 3, 1;
  const LimitGsgResult res = limit_gsg_ball(quad.field, BallDomain{x0, 1.0}, {64});
  r.checks.push_back(compare("limit", res.estimate, rows2({6}, {2}), 1e-8));
}

}  // namespace

bool ExampleReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.passed; });
}

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids{"rect-grid-matrix", "rect-arbitrary-matrix",
                                            "ball-grid-matrix", "rect-limit-quadratic",
                                            "ball-limit-quadratic"};
  return ids;
}

std::string_view rect_grid_example_csv() { return kRectGridCsv; }

ExampleReport reproduce(std::string_view id) {
  ExampleReport r;
  r.id = std::string(id);
  const auto start = std::chrono::steady_clock::now();
  if (id == "rect-grid-matrix") {
    rect_grid_matrix(r);
  } else if (id == "rect-arbitrary-matrix") {
    rect_arbitrary_matrix(r);
  } else if (id == "ball-grid-matrix") {
    ball_grid_matrix(r);
  } else if (id == "rect-limit-quadratic") {
    rect_limit_quadratic(r);
  } else if (id == "ball-limit-quadratic") {
    ball_limit_quadratic(r);
  } else {
    throw UnknownId("unknown example id '" + std::string(id) + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void print(std::ostream& out, const ExampleReport& report) {
  out << (report.passed() ? "PASS " : "FAIL ") << report.id << '\n';
  for (const auto& c : report.checks) {
    out << "  " << (c.passed ? "ok   " : "FAIL ") << c.label << ": computed [" << c.computed
        << "] expected [" << c.expected << "] deviation " << csv::format(c.deviation)
        << " tol " << csv::format(c.tolerance) << '\n';
  }
}

}  // namespace gsg
