#include "gsg/simplex_gradient.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

#include "gsg/csv.hpp"
#include "gsg/errors.hpp"

namespace gsg {

namespace {

constexpr Eigen::Index kParallelThreshold = 1 << 15;

void check_point(const ScalarField& field, const Vector& x0, const SampleMatrix& samples) {
  if (!field.value) throw InvalidInput("field has no evaluator");
  if (x0.size() != samples.dim() || (field.dim != 0 && field.dim != x0.size())) {
    throw InvalidInput("dimension mismatch between field, x0 and sample matrix");
  }
  require_finite(x0, "x0");
  require_finite(samples.directions(), "sample matrix");
}

// col < 0 denotes the reference point.
std::string location(Eigen::Index col) {
  return col < 0 ? std::string("reference point") : "column " + std::to_string(col + 1);
}

double evaluate(const ScalarField& field, const Vector& x, Eigen::Index col) {
  double v = 0.0;
  try {
    v = field.value(x);
  } catch (const std::exception& e) {
    throw EvaluationError("evaluation failed at " + location(col) + ": " + e.what());
  }
  if (!std::isfinite(v)) throw EvaluationError("non-finite value at " + location(col));
  return v;
}

void fill_range(const ScalarField& field, const Vector& x0, const Matrix& s, double f0,
                Eigen::Index begin, Eigen::Index end, Vector& out) {
  Vector x(x0.size());
  for (Eigen::Index j = begin; j < end; ++j) {
    x = x0 + s.col(j);
    out(j) = evaluate(field, x, j) - f0;
  }
}

}  // namespace

void GradientEstimate::attach_truth(const Vector& gradient) {
  true_gradient = gradient;
  error = (estimate - gradient).norm();
}

Vector delta_f(const ScalarField& field, const Vector& x0, const SampleMatrix& samples) {
  check_point(field, x0, samples);
  const Matrix& s = samples.directions();
  const double f0 = evaluate(field, x0, -1);
  const Eigen::Index total = s.cols();
  Vector out(total);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (!field.thread_safe || total < kParallelThreshold || hw == 1) {
    fill_range(field, x0, s, f0, 0, total, out);
    return out;
  }

  // Each worker owns a contiguous column range; results land in place.
  const Eigen::Index workers = std::min<Eigen::Index>(hw, 16);
  const Eigen::Index chunk = (total + workers - 1) / workers;
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    for (Eigen::Index w = 0; w < workers; ++w) {
      const Eigen::Index begin = w * chunk;
      const Eigen::Index end = std::min(total, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          fill_range(field, x0, s, f0, begin, end, out);
        } catch (...) {
          failures[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return out;
}

GradientEstimate simplex_gradient(const ScalarField& field, const Vector& x0, const SampleMatrix& samples) {
  const Vector delta = delta_f(field, x0, samples);
  GradientEstimate result;
  result.estimate = pseudoinverse(samples.directions()).transpose() * delta;
  result.x0 = x0;
  result.radius = sample_radius(samples);
  result.columns = samples.size();
  if (field.has_gradient()) result.attach_truth(field.gradient(x0));
  return result;
}

Vector gsg_normal_equations(const ScalarField& field, const Vector& x0,
                            const SampleMatrix& samples) {
  const Vector delta = delta_f(field, x0, samples);
  const Matrix& s = samples.directions();
  const Matrix gram = s * s.transpose();
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw RankError("S S^T is not positive definite; S lacks full row rank");
  }
  return llt.solve(s * delta);
}

GradientEstimate weighted_gsg(const ScalarField& field, const Vector& x0,
                              const SampleMatrix& samples, const Vector& weights) {
  if (weights.size() != samples.size()) throw InvalidInput("one weight per column required");
  require_finite(weights, "weights");
  if (weights.minCoeff() < 0.0) throw InvalidInput("weights must be non-negative");
  const Vector delta = delta_f(field, x0, samples);
  const Matrix& s = samples.directions();
  const Matrix sw = s * weights.asDiagonal();
  Eigen::LLT<Matrix> llt(sw * s.transpose());
  if (llt.info() != Eigen::Success) throw RankError("weighted Gram matrix is singular");

  GradientEstimate result;
  result.estimate = llt.solve(sw * delta);
  result.x0 = x0;
  result.radius = sample_radius(samples);
  result.columns = samples.size();
  if (field.has_gradient()) result.attach_truth(field.gradient(x0));
  return result;
}

void write_csv_header(std::ostream& out, Eigen::Index n,
                      const std::vector<std::string>& bound_names) {
  for (Eigen::Index i = 1; i <= n; ++i) out << "x0_" << i << ',';
  out << "N,radius";
  for (Eigen::Index i = 1; i <= n; ++i) out << ",g" << i;
  out << ",error";
  for (const auto& name : bound_names) out << ',' << name;
  out << '\n';
}

void write_csv_row(std::ostream& out, const GradientEstimate& est) {
  out << csv::join(est.x0) << ',' << est.columns << ',' << csv::format(est.radius) << ','
      << csv::join(est.estimate) << ',';
  if (est.error) out << csv::format(*est.error);
  for (const auto& [name, value] : est.bounds) out << ',' << csv::format(value);
  out << '\n';
}

}  // namespace gsg
