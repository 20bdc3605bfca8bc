#include "gsg/registry.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <ostream>
#include <random>

#include "gsg/csv.hpp"
#include "gsg/errors.hpp"

namespace gsg {

namespace {

Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  std::copy(values.begin(), values.end(), v.data());
  return v;
}

double max_abs(double lo, double hi) { return std::max(std::abs(lo), std::abs(hi)); }

// sup of |sin| (phase 0) or |cos| (phase pi/2) over [lo, hi].
double sup_abs_trig(double lo, double hi, double phase) {
  const double pi = std::numbers::pi;
  // Extremes of sin(x + phase) sit at x + phase = pi/2 + k pi.
  const double k = std::ceil((lo + phase - pi / 2) / pi);
  if (pi / 2 + k * pi - phase <= hi) return 1.0;
  return std::max(std::abs(std::sin(lo + phase)), std::abs(std::sin(hi + phase)));
}

std::vector<double> uniform_draws(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> out(count);
  for (auto& v : out) v = 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
  return out;
}

FieldEntry quad2() {
  FieldEntry e;
  e.id = "quad2";
  e.formula = "x1^2 + x2^2";
  e.field = quadratic_field(e.id, 2.0 * Matrix::Identity(2, 2), Vector::Zero(2));
  e.rect = {vec({3, 1}), Vector::Ones(2)};
  e.ball = {e.rect.x0, 1.0};
  return e;
}

FieldEntry cubic2() {
  FieldEntry e;
  e.id = "cubic2";
  e.formula = "x1^3 + x2^3";
  ScalarField& f = e.field;
  f.name = e.id;
  f.dim = 2;
  f.value = [](const Vector& x) { return x(0) * x(0) * x(0) + x(1) * x(1) * x(1); };
  f.gradient = [](const Vector& x) { return Vector(3.0 * x.array().square()); };
  f.hessian = [](const Vector& x) { return Matrix(Vector(6.0 * x).asDiagonal()); };
  f.lipschitz_gradient = [](const Box& b) {
    double m = 0.0;
    for (Eigen::Index i = 0; i < b.lo.size(); ++i) m = std::max(m, max_abs(b.lo(i), b.hi(i)));
    return 6.0 * m;
  };
  f.lipschitz_hessian = [](const Box&) { return 6.0; };
  e.rect = {Vector::Ones(2), Vector::Ones(2)};
  e.ball = {Vector::Ones(2), 1.0};
  return e;
}

FieldEntry affine(Eigen::Index n, std::uint64_t seed) {
  const auto draws = uniform_draws(static_cast<std::size_t>(n + 1), seed);
  Vector g(n);
  for (Eigen::Index i = 0; i < n; ++i) g(i) = 4.0 * draws[static_cast<std::size_t>(i)];
  FieldEntry e;
  e.id = "affine" + std::to_string(n);
  e.formula = "c + g^T x (seeded g, c)";
  e.field = affine_field(e.id, g, draws.back());
  e.rect = {Vector::LinSpaced(n, 0.5, -0.5), Vector::LinSpaced(n, 1.0, 2.0)};
  e.ball = {e.rect.x0, 0.75};
  return e;
}

FieldEntry quad3() {
  const auto draws = uniform_draws(12, kRegistrySeed + 3);
  Matrix a(3, 3);
  for (int i = 0; i < 9; ++i) a(i / 3, i % 3) = draws[static_cast<std::size_t>(i)];
  Vector b(3);
  for (int i = 0; i < 3; ++i) b(i) = 2.0 * draws[static_cast<std::size_t>(9 + i)];
  FieldEntry e;
  e.id = "quad3";
  e.formula = "b^T x + x^T H x / 2 (seeded symmetric H, b)";
  e.field = quadratic_field(e.id, a + a.transpose(), b);
  e.rect = {Vector::Zero(3), vec({1.0, 0.5, 2.0})};
  e.ball = {Vector::Zero(3), 1.0};
  return e;
}

FieldEntry expsin2() {
  FieldEntry e;
  e.id = "expsin2";
  e.formula = "exp(x1) + sin(x2)";
  ScalarField& f = e.field;
  f.name = e.id;
  f.dim = 2;
  f.value = [](const Vector& x) { return std::exp(x(0)) + std::sin(x(1)); };
  f.gradient = [](const Vector& x) {
    Vector g(2);
    g << std::exp(x(0)), std::cos(x(1));
    return g;
  };
  f.hessian = [](const Vector& x) {
    Matrix h = Matrix::Zero(2, 2);
    h(0, 0) = std::exp(x(0));
    h(1, 1) = -std::sin(x(1));
    return h;
  };
  // Hessian and third derivative are diagonal, so the norms are max |entry|.
  f.lipschitz_gradient = [](const Box& b) {
    return std::max(std::exp(b.hi(0)), sup_abs_trig(b.lo(1), b.hi(1), 0.0));
  };
  f.lipschitz_hessian = [](const Box& b) {
    return std::max(std::exp(b.hi(0)), sup_abs_trig(b.lo(1), b.hi(1), std::numbers::pi / 2));
  };
  e.rect = {vec({0.0, 0.5}), vec({0.5, 1.0})};
  e.ball = {e.rect.x0, 0.5};
  return e;
}

}  // namespace

const std::vector<FieldEntry>& field_registry() {
  static const std::vector<FieldEntry> registry{
      quad2(), cubic2(), affine(2, kRegistrySeed), affine(3, kRegistrySeed + 1), quad3(), expsin2()};
  return registry;
}

const FieldEntry& find_field(std::string_view id) {
  const auto& reg = field_registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const FieldEntry& e) { return e.id == id; });
  if (it == reg.end()) throw UnknownId("unknown field id '" + std::string(id) + "'");
  return *it;
}

void list_fields(std::ostream& out) {
  out << "id,n,formula,rect,ball,L_grad_rect,L_H_rect,L_grad_ball,L_H_ball\n";
  for (const auto& e : field_registry()) {
    const Box rect_box = Box::from_corner(e.rect.x0, e.rect.sides);
    const Box ball_box = Box::around_ball(e.ball.x0, e.ball.radius);
    const ScalarField& f = e.field;
    out << e.id << ',' << f.dim << ",\"" << e.formula << "\",\"" << describe(e.rect) << "\",\""
        << describe(e.ball) << "\"," << csv::format(f.lipschitz_gradient(rect_box)) << ','
        << csv::format(f.lipschitz_hessian(rect_box)) << ','
        << csv::format(f.lipschitz_gradient(ball_box)) << ','
        << csv::format(f.lipschitz_hessian(ball_box)) << '\n';
  }
}

}  // namespace gsg
