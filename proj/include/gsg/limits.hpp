#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "gsg/field.hpp"
#include "gsg/quadrature.hpp"
#include "gsg/regions.hpp"

namespace gsg {

/// R(x0; d): x0 is the minimal corner.
struct RectDomain {
  Vector x0;
  Vector sides;
};

/// B(x0; r): x0 is the centre.
struct BallDomain {
  Vector x0;
  double radius = 1.0;
};

std::string describe(const RectDomain& domain);
std::string describe(const BallDomain& domain);

/// Taylor split of T_n = v + w (+ z on the ball).
///   v_i = int x_i grad f(x0)^T x
///   rect: w_i = int x_i R_1(x0 + x)      (first-order remainder)
///   ball: w_i = int x_i x^T H(x0) x / 2, z = T_n - v - w
struct TaylorDiagnostics {
  Vector v;
  Vector w;
  std::optional<Vector> z;
};

struct LimitGsgResult {
  Vector estimate;
  Vector t_vector;
  std::string region;
  int nodes = 0;
  int panels = 1;
  std::optional<TaylorDiagnostics> diagnostics;
};

/// [T_n]_i = int_{R(0;d)} x_i (f(x0 + x) - f(x0)) dx.
Vector t_vector_rect(const ScalarField& field, const RectDomain& domain,
                     const QuadratureSpec& spec = {});

/// [T_n]_i = int_{B(0;r)} x_i (f(x0 + x) - f(x0)) dx.
Vector t_vector_ball(const ScalarField& field, const BallDomain& domain,
                     const QuadratureSpec& spec = {});

/// Limit of the GSG over ever finer grids on R(x0; d): Delta^{-1} L_n T_n.
LimitGsgResult limit_gsg_rect(const ScalarField& field, const RectDomain& domain,
                              const QuadratureSpec& spec = {});

/// Limit over ever finer polar partitions of B(x0; r): (2 pi / V_{n+2}) T_n.
LimitGsgResult limit_gsg_ball(const ScalarField& field, const BallDomain& domain,
                              const QuadratureSpec& spec = {});

/// Throws CapabilityError without an analytic gradient (and, on the ball,
/// an analytic Hessian).
TaylorDiagnostics taylor_diagnostics(const ScalarField& field, const RectDomain& domain,
                                     const QuadratureSpec& spec = {});
TaylorDiagnostics taylor_diagnostics(const ScalarField& field, const BallDomain& domain,
                                     const QuadratureSpec& spec = {});

/// (Delta / N) S delta_f(x0; S), the Riemann sum whose limit is T_n on R(x0; d).
Vector riemann_moment(const ScalarField& field, const RectDomain& domain,
                      const SampleMatrix& samples);

/// One JSON object per line: region, nodes, t, estimate and any diagnostics.
void write_json_line(std::ostream& out, const LimitGsgResult& result);

/// CSV row: region, nodes, T_n, estimate, then v, w, z when present.
void write_csv_header(std::ostream& out, const LimitGsgResult& result);
void write_csv_row(std::ostream& out, const LimitGsgResult& result);

}  // namespace gsg
