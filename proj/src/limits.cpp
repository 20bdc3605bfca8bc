#include "gsg/limits.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include <nlohmann/json.hpp>

#include "gsg/closed_forms.hpp"
#include "gsg/csv.hpp"
#include "gsg/errors.hpp"
#include "gsg/simplex_gradient.hpp"

namespace gsg {

namespace {

void check_field(const ScalarField& field, const Vector& x0) {
  if (!field.value) throw InvalidInput("field has no evaluator");
  if (field.dim != 0 && field.dim != x0.size()) throw InvalidInput("field/x0 dimension mismatch");
  require_finite(x0, "x0");
  if (x0.size() < 2) throw InvalidInput("limits need n >= 2");
}

double value_at(const ScalarField& field, const Vector& x) {
  const double v = field.value(x);
  if (!std::isfinite(v)) throw EvaluationError("non-finite field value at (" + csv::join(x) + ")");
  return v;
}

void check_rect(const ScalarField& field, const RectDomain& domain) {
  check_field(field, domain.x0);
  if (domain.sides.size() != domain.x0.size()) throw InvalidInput("sides/x0 dimension mismatch");
  require_finite(domain.sides, "sides");
  if (domain.sides.minCoeff() <= 0.0) throw InvalidInput("sides must be > 0");
}

void check_ball(const ScalarField& field, const BallDomain& domain) {
  check_field(field, domain.x0);
  if (!(domain.radius > 0.0) || !std::isfinite(domain.radius)) {
    throw InvalidInput("radius must be > 0");
  }
}

// x_i (f(x0 + x) - f(x0)) for every i.
VectorIntegrand moment_integrand(const ScalarField& field, const Vector& x0, double f0) {
  return [&field, &x0, f0](const Vector& x) -> Vector {
    return x * (value_at(field, x0 + x) - f0);
  };
}

std::string points(const Vector& v) { return csv::join(v, ' '); }

}  // namespace

std::string describe(const RectDomain& domain) {
  return "rect x0=" + points(domain.x0) + " d=" + points(domain.sides);
}

std::string describe(const BallDomain& domain) {
  return "ball x0=" + points(domain.x0) + " r=" + csv::format(domain.radius);
}

Vector t_vector_rect(const ScalarField& field, const RectDomain& domain,
                     const QuadratureSpec& spec) {
  check_rect(field, domain);
  const double f0 = value_at(field, domain.x0);
  return integrate_box(moment_integrand(field, domain.x0, f0), domain.x0.size(), domain.sides,
                       spec);
}

Vector t_vector_ball(const ScalarField& field, const BallDomain& domain,
                     const QuadratureSpec& spec) {
  check_ball(field, domain);
  const double f0 = value_at(field, domain.x0);
  const auto n = domain.x0.size();
  return integrate_ball(moment_integrand(field, domain.x0, f0), n, n, domain.radius, spec);
}

LimitGsgResult limit_gsg_rect(const ScalarField& field, const RectDomain& domain,
                              const QuadratureSpec& spec) {
  LimitGsgResult result;
  result.t_vector = t_vector_rect(field, domain, spec);
  const LimitMatrix lim = limit_matrix_L(domain.sides);
  result.estimate = lim.l * result.t_vector / domain.sides.prod();
  result.region = describe(domain);
  result.nodes = spec.nodes;
  result.panels = spec.panels;
  if (field.has_gradient()) result.diagnostics = taylor_diagnostics(field, domain, spec);
  return result;
}

LimitGsgResult limit_gsg_ball(const ScalarField& field, const BallDomain& domain,
                              const QuadratureSpec& spec) {
  LimitGsgResult result;
  result.t_vector = t_vector_ball(field, domain, spec);
  const auto n = static_cast<int>(domain.x0.size());
  result.estimate = (2.0 * std::numbers::pi / ball_volume(n + 2, domain.radius)) * result.t_vector;
  result.region = describe(domain);
  result.nodes = spec.nodes;
  result.panels = spec.panels;
  if (field.has_gradient() && field.has_hessian()) {
    result.diagnostics = taylor_diagnostics(field, domain, spec);
  }
  return result;
}

TaylorDiagnostics taylor_diagnostics(const ScalarField& field, const RectDomain& domain,
                                     const QuadratureSpec& spec) {
  check_rect(field, domain);
  if (!field.has_gradient()) throw CapabilityError("rect diagnostics need an analytic gradient");
  const auto n = domain.x0.size();
  const Vector& x0 = domain.x0;
  const double f0 = value_at(field, x0);
  const Vector g = field.gradient(x0);
  // Components [0, n) hold v, [n, 2n) hold w.
  const Vector parts = integrate_box(
      [&](const Vector& x) -> Vector {
        const double linear = g.dot(x);
        Vector out(2 * n);
        out.head(n) = x * linear;
        out.tail(n) = x * (value_at(field, x0 + x) - f0 - linear);
        return out;
      },
      2 * n, domain.sides, spec);
  return TaylorDiagnostics{parts.head(n), parts.tail(n), std::nullopt};
}

TaylorDiagnostics taylor_diagnostics(const ScalarField& field, const BallDomain& domain,
                                     const QuadratureSpec& spec) {
  check_ball(field, domain);
  if (!field.has_gradient() || !field.has_hessian()) {
    throw CapabilityError("ball diagnostics need an analytic gradient and Hessian");
  }
  const auto n = domain.x0.size();
  const Vector g = field.gradient(domain.x0);
  const Matrix h = field.hessian(domain.x0);
  const Vector parts = integrate_ball(
      [&](const Vector& x) -> Vector {
        Vector out(2 * n);
        out.head(n) = x * g.dot(x);
        out.tail(n) = x * (0.5 * x.dot(h * x));
        return out;
      },
      2 * n, n, domain.radius, spec);
  TaylorDiagnostics diag{parts.head(n), parts.tail(n), std::nullopt};
  diag.z = t_vector_ball(field, domain, spec) - diag.v - diag.w;
  return diag;
}

Vector riemann_moment(const ScalarField& field, const RectDomain& domain,
                      const SampleMatrix& samples) {
  check_rect(field, domain);
  const Vector delta = delta_f(field, domain.x0, samples);
  return (domain.sides.prod() / static_cast<double>(samples.size())) *
         (samples.directions() * delta);
}

void write_json_line(std::ostream& out, const LimitGsgResult& result) {
  auto vec = [](const Vector& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
  nlohmann::ordered_json j;
  j["region"] = result.region;
  j["nodes"] = result.nodes;
  j["panels"] = result.panels;
  j["t"] = vec(result.t_vector);
  j["estimate"] = vec(result.estimate);
  if (result.diagnostics) {
    j["v"] = vec(result.diagnostics->v);
    j["w"] = vec(result.diagnostics->w);
    if (result.diagnostics->z) j["z"] = vec(*result.diagnostics->z);
  }
  out << j.dump() << '\n';
}

void write_csv_header(std::ostream& out, const LimitGsgResult& result) {
  const auto n = result.estimate.size();
  auto names = [&](const char* prefix) {
    for (Eigen::Index i = 1; i <= n; ++i) out << ',' << prefix << i;
  };
  out << "region,nodes";
  names("t");
  names("est");
  if (result.diagnostics) {
    names("v");
    names("w");
    if (result.diagnostics->z) names("z");
  }
  out << '\n';
}

void write_csv_row(std::ostream& out, const LimitGsgResult& result) {
  out << result.region << ',' << result.nodes << ',' << csv::join(result.t_vector) << ','
      << csv::join(result.estimate);
  if (result.diagnostics) {
    out << ',' << csv::join(result.diagnostics->v) << ',' << csv::join(result.diagnostics->w);
    if (result.diagnostics->z) out << ',' << csv::join(*result.diagnostics->z);
  }
  out << '\n';
}

}  // namespace gsg
