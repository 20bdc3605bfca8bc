#include "gsg/field.hpp"

#include "gsg/errors.hpp"

namespace gsg {

Box Box::around_ball(const Vector& center, double radius) {
  return Box{center.array() - radius, center.array() + radius};
}

Box Box::from_corner(const Vector& corner, const Vector& sides) {
  return Box{corner, corner + sides};
}

ScalarField affine_field(std::string name, const Vector& g, double c) {
  ScalarField f;
  f.name = std::move(name);
  f.dim = g.size();
  f.value = [g, c](const Vector& x) { return c + g.dot(x); };
  f.gradient = [g](const Vector&) { return g; };
  f.hessian = [n = g.size()](const Vector&) { return Matrix::Zero(n, n).eval(); };
  f.lipschitz_gradient = [](const Box&) { return 0.0; };
  f.lipschitz_hessian = [](const Box&) { return 0.0; };
  return f;
}

ScalarField quadratic_field(std::string name, const Matrix& h, const Vector& b, double c) {
  if (h.rows() != h.cols() || h.rows() != b.size()) {
    throw InvalidInput("quadratic_field: dimension mismatch");
  }
  const Matrix sym = 0.5 * (h + h.transpose());
  ScalarField f;
  f.name = std::move(name);
  f.dim = b.size();
  f.value = [sym, b, c](const Vector& x) { return c + b.dot(x) + 0.5 * x.dot(sym * x); };
  f.gradient = [sym, b](const Vector& x) { return (b + sym * x).eval(); };
  f.hessian = [sym](const Vector&) { return sym; };
  const double norm = spectral_norm(sym);
  f.lipschitz_gradient = [norm](const Box&) { return norm; };
  f.lipschitz_hessian = [](const Box&) { return 0.0; };
  return f;
}

}  // namespace gsg
