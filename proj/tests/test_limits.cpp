#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "gsg/closed_forms.hpp"
#include "gsg/errors.hpp"
#include "gsg/limits.hpp"
#include "gsg/registry.hpp"
#include "gsg/simplex_gradient.hpp"
#include "oracles.hpp"

using namespace gsg;

namespace {

const double pi = std::numbers::pi;

Vector v2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

const ScalarField& registry_field(const char* id) { return find_field(id).field; }

// L_n written out entrywise.
Matrix limit_matrix_oracle(const Vector& d) {
  const auto n = d.size();
  Matrix l(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      l(i, j) = (i == j ? 12.0 * (3 * n - 2) : -36.0) / ((3.0 * n + 1) * d(i) * d(j));
  return l;
}

// T_n of x1^3 + ... + xn^3 about a on R(0; d), from monomial box integrals:
// f(a + x) - f(a) = sum_i 3 a_i^2 x_i + 3 a_i x_i^2 + x_i^3.
Vector cubic_t_rect(const Vector& a, const Vector& d) {
  const auto n = a.size();
  Vector t = Vector::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double coeff[] = {3 * a(i) * a(i), 3 * a(i), 1.0};
      for (int p = 1; p <= 3; ++p) {
        std::vector<int> alpha(static_cast<std::size_t>(n), 0);
        alpha[static_cast<std::size_t>(i)] += p;
        alpha[static_cast<std::size_t>(k)] += 1;
        t(k) += coeff[p - 1] * oracle::box_monomial(alpha, d);
      }
    }
  }
  return t;
}

// Same on B(0; r) via the gamma-function monomial formula.
Vector cubic_t_ball(const Vector& a, double r) {
  const auto n = a.size();
  Vector t = Vector::Zero(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double coeff[] = {3 * a(i) * a(i), 3 * a(i), 1.0};
      for (int p = 1; p <= 3; ++p) {
        std::vector<int> alpha(static_cast<std::size_t>(n), 0);
        alpha[static_cast<std::size_t>(i)] += p;
        alpha[static_cast<std::size_t>(k)] += 1;
        t(k) += coeff[p - 1] * oracle::folland(alpha, r);
      }
    }
  }
  return t;
}

}  // namespace

TEST_CASE("T vectors of constant and linear fields") {
  const ScalarField c = affine_field("c", Vector::Zero(2), 3.0);
  CHECK(t_vector_rect(c, {v2(1, 1), v2(1, 2)}).norm() == 0.0);
  CHECK(t_vector_ball(c, {v2(1, 1), 1.0}).norm() == 0.0);

  const Vector g = v2(1.5, -0.5);
  const Vector d = v2(1, 1);
  const double s = d.dot(g);
  const Vector t = t_vector_rect(affine_field("lin", g), {v2(2, 3), d});
  for (int i = 0; i < 2; ++i) {
    CHECK(t(i) == doctest::Approx(d.prod() * d(i) * (d(i) * g(i) + 3 * s) / 12).epsilon(1e-12));
  }
}

TEST_CASE("T vector of an odd field on the ball keeps the even moment") {
  ScalarField f;
  f.name = "x1^3";
  f.dim = 2;
  f.value = [](const Vector& x) { return x(0) * x(0) * x(0); };
  const Vector t = t_vector_ball(f, {Vector::Zero(2), 1.0});
  CHECK(t(0) == doctest::Approx(oracle::folland({4, 0}, 1.0)).epsilon(1e-12));
  CHECK(std::abs(t(1)) < 1e-14);
}

TEST_CASE("rectangle limit of quad2 at (3, 1)") {
  const LimitGsgResult res = limit_gsg_rect(registry_field("quad2"), {v2(3, 1), v2(1, 1)}, {64});
  CHECK((res.t_vector - v2(35.0 / 12, 31.0 / 12)).norm() < 1e-12);
  CHECK((res.estimate - v2(47.0 / 7, 19.0 / 7)).norm() < 1e-6);
  CHECK((res.estimate - v2(6, 2)).norm() == doctest::Approx(5 * std::sqrt(2.0) / 7).epsilon(1e-10));
  CHECK(res.nodes == 64);
}

TEST_CASE("rectangle limit of cubic fields against monomial oracles") {
  for (const Vector& d : {v2(1, 1), v2(2, 0.5)}) {
    const Vector a = v2(1, 1);
    const Vector t = cubic_t_rect(a, d);
    const Vector expected = limit_matrix_oracle(d) * t / d.prod();
    const LimitGsgResult res = limit_gsg_rect(registry_field("cubic2"), {a, d}, {32});
    CHECK((res.t_vector - t).norm() < 1e-12);
    CHECK((res.estimate - expected).norm() < 1e-10);
  }
  const LimitGsgResult unit = limit_gsg_rect(registry_field("cubic2"), {v2(1, 1), v2(1, 1)});
  CHECK((unit.estimate - v2(5.7, 5.7)).norm() < 1e-10);
}

TEST_CASE("rectangle limit is exact on affine fields") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 4; ++n) {
    const Vector g = oracle::random_vector(rng, n, -2, 2);
    const RectDomain dom{oracle::random_vector(rng, n), oracle::random_vector(rng, n, 0.2, 3.0)};
    CHECK((limit_gsg_rect(affine_field("a", g, 0.3), dom, {8}).estimate - g).norm() < 1e-8);
  }
}

TEST_CASE("ball limits") {
  const LimitGsgResult quad = limit_gsg_ball(registry_field("quad2"), {v2(3, 1), 1.0});
  CHECK((quad.estimate - v2(6, 2)).norm() < 1e-8);

  const Vector expected = 2 * pi / ball_volume(4, 1.0) * cubic_t_ball(v2(1, 1), 1.0);
  CHECK((expected - v2(3.5, 3.5)).norm() < 1e-12);
  const LimitGsgResult cubic = limit_gsg_ball(registry_field("cubic2"), {v2(1, 1), 1.0});
  CHECK((cubic.estimate - expected).norm() < 1e-10);

  std::mt19937_64 rng(43);
  for (int n = 2; n <= 4; ++n) {
    const Matrix h = oracle::random_matrix(rng, n, n);
    const ScalarField q = quadratic_field("q", h + h.transpose(), oracle::random_vector(rng, n));
    const Vector x0 = oracle::random_vector(rng, n);
    const LimitGsgResult res = limit_gsg_ball(q, {x0, 0.8}, {12});
    CHECK((res.estimate - q.gradient(x0)).norm() < 1e-8);
  }
}

TEST_CASE("ball limit ignores added terms with zero gradient at x0") {
  const Vector x0 = v2(0.3, -0.2);
  const ScalarField& f = registry_field("expsin2");
  Matrix h(2, 2);
  h << 2.0, -0.7, -0.7, 1.1;
  ScalarField sum = f;
  sum.value = [f, h, x0](const Vector& x) {
    const Vector y = x - x0;
    return f.value(x) + 0.5 * y.dot(h * y) - 4.0;
  };
  sum.gradient = {};
  sum.hessian = {};
  const Vector a = limit_gsg_ball(f, {x0, 0.6}).estimate;
  const Vector b = limit_gsg_ball(sum, {x0, 0.6}).estimate;
  CHECK((a - b).norm() < 1e-12);
}

TEST_CASE("Taylor diagnostics") {
  for (const auto& entry : field_registry()) {
    const ScalarField& f = entry.field;
    const Vector g = f.gradient(entry.rect.x0);
    const TaylorDiagnostics rect = taylor_diagnostics(f, entry.rect);
    const Matrix l = limit_matrix_L(entry.rect.sides).l;
    CHECK((l * rect.v / entry.rect.sides.prod() - g).norm() < 1e-8);
    CHECK((rect.v + rect.w - t_vector_rect(f, entry.rect)).norm() < 1e-8);

    const TaylorDiagnostics ball = taylor_diagnostics(f, entry.ball);
    const double scale = 2 * pi / ball_volume(static_cast<int>(f.dim) + 2, entry.ball.radius);
    CHECK((scale * ball.v - f.gradient(entry.ball.x0)).norm() < 1e-8);
    CHECK((scale * ball.w).norm() < 1e-8);
    REQUIRE(ball.z);
  }
  const TaylorDiagnostics quad = taylor_diagnostics(registry_field("quad2"), BallDomain{v2(3, 1), 1.0});
  CHECK(quad.z->norm() < 1e-8);

  ScalarField bare;
  bare.dim = 2;
  bare.value = [](const Vector& x) { return x.squaredNorm(); };
  CHECK_THROWS_AS(taylor_diagnostics(bare, RectDomain{v2(0, 0), v2(1, 1)}), CapabilityError);
  CHECK_THROWS_AS(taylor_diagnostics(bare, BallDomain{v2(0, 0), 1.0}), CapabilityError);
  CHECK_FALSE(limit_gsg_rect(bare, {v2(0, 0), v2(1, 1)}).diagnostics);
}

TEST_CASE("Riemann moment converges to T_n at first order") {
  for (const char* id : {"quad2", "cubic2"}) {
    const FieldEntry& e = find_field(id);
    const Vector t = t_vector_rect(e.field, e.rect);
    for (bool arbitrary : {false, true}) {
      std::vector<double> errs;
      for (int k = 3; k <= 9; ++k) {
        HyperrectRegion region{e.rect.x0, e.rect.sides, {1 << k, 1 << k}};
        const SampleMatrix s = arbitrary ? build_rect_arbitrary(region, SeededOffsets{5})
                                         : build_rect_grid(region);
        errs.push_back((riemann_moment(e.field, e.rect, s) - t).norm());
      }
      CHECK(oracle::decreasing(errs));
      if (!arbitrary) {
        for (std::size_t i = 1; i < errs.size(); ++i) {
          CHECK(errs[i] / errs[i - 1] == doctest::Approx(0.5).epsilon(0.1));
        }
      }
    }
  }
}

TEST_CASE("finite-N rectangle GSG approaches the limit for cubic2") {
  const FieldEntry& e = find_field("cubic2");
  const Vector limit = limit_gsg_rect(e.field, e.rect).estimate;
  for (bool arbitrary : {false, true}) {
    std::vector<double> gaps;
    for (int k = 3; k <= 9; ++k) {
      HyperrectRegion region{e.rect.x0, e.rect.sides, {1 << k, 1 << k}};
      const SampleMatrix s = arbitrary ? build_rect_arbitrary(region, SeededOffsets{5})
                                       : build_rect_grid(region);
      gaps.push_back((simplex_gradient(e.field, e.rect.x0, s).estimate - limit).norm());
    }
    if (arbitrary) {
      // Random offsets average out faster than the grid but not monotonically.
      for (std::size_t i = 0; i < gaps.size(); ++i) CHECK(gaps[i] <= 4.0 / (1 << (i + 3)));
      CHECK(gaps.back() < 1e-3);
    } else {
      CHECK(oracle::decreasing(gaps));
    }
  }
}

// Equal weights on the polar grid sample the disc with density 1 / rho, so the
// plain GSG tends to the least-squares fit under d rho d theta. For cubic2 at
// (1, 1), r = 1, that fit is 3 + E[rho^4] E[cos^4] / (E[rho^2] E[cos^2]) =
// 3 + (1/5)(3/8) / ((1/3)(1/2)) = 3.45 per component. Jacobian weights restore
// area measure and the limit 3.5.
TEST_CASE("polar grid: plain and Jacobian-weighted GSG limits") {
  const FieldEntry& e = find_field("cubic2");
  const Vector limit = limit_gsg_ball(e.field, e.ball).estimate;
  std::vector<double> plain_gap, weighted_gap;
  for (int k = 4; k <= 9; ++k) {
    const BallRegion region{e.ball.x0, e.ball.radius, {1 << k, 1 << k}};
    const SampleMatrix s = build_ball_grid(region);
    plain_gap.push_back((simplex_gradient(e.field, e.ball.x0, s).estimate - v2(3.45, 3.45)).norm());
    const Vector w = jacobian_weights(region, s);
    weighted_gap.push_back((weighted_gsg(e.field, e.ball.x0, s, w).estimate - limit).norm());
  }
  CHECK(oracle::decreasing(plain_gap));
  CHECK(plain_gap.back() < 1e-2);
  CHECK(oracle::decreasing(weighted_gap));
  CHECK(weighted_gap.back() < 1e-2);
}

// The commutation S_R J = K S_R with K = S_R J S_R^dagger would make the plain
// and weighted limits coincide. It does not hold: J varies along the grid.
TEST_CASE("polar grid: S_R J = K S_R" * doctest::should_fail()) {
  const BallRegion region{v2(0, 0), 1.0, {6, 8}};
  const SampleMatrix s = build_ball_grid(region);
  const Matrix& sr = s.directions();
  const Matrix sj = sr * jacobian_weights(region, s).asDiagonal();
  const Matrix k = sj * pseudoinverse(sr);
  CHECK((sj - k * sr).norm() <= 1e-8 * sj.norm());
}

TEST_CASE("limit output formats") {
  const LimitGsgResult res = limit_gsg_ball(registry_field("quad2"), {v2(3, 1), 1.0}, {8});
  std::ostringstream json;
  write_json_line(json, res);
  const auto j = nlohmann::json::parse(json.str());
  CHECK(j["region"] == "ball x0=3 1 r=1");
  CHECK(j["nodes"] == 8);
  CHECK(j["estimate"].size() == 2);
  CHECK(j.contains("z"));

  std::ostringstream csv;
  write_csv_header(csv, res);
  write_csv_row(csv, res);
  CHECK(csv.str().rfind("region,nodes,t1,t2,est1,est2,v1,v2,w1,w2,z1,z2\nball x0=3 1 r=1,8,", 0) == 0);
}
