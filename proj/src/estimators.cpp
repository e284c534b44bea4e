#include "ridge/estimators.hpp"

#include <cmath>
#include <string>

namespace ridge {

std::string to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::ols: return "ols";
    case EstimatorKind::ridge: return "ridge";
    case EstimatorKind::surrogate: return "surrogate";
  }
  return "?";
}

void check_ridge_domain(const StandardizedModel& m, double lambda) {
  const double xk2 = m.svd.spectrum(m.k() - 1) * m.svd.spectrum(m.k() - 1);
  if (!(lambda > -xk2))
    throw LambdaOutOfDomain("lambda = " + std::to_string(lambda) +
                            " must exceed -xi_k^2 = " + std::to_string(-xk2));
}

void check_nonnegative_lambda(double lambda, const char* op) {
  if (!(lambda >= 0.0))
    throw LambdaOutOfDomain(std::string(op) + ": lambda = " + std::to_string(lambda) +
                            " must be nonnegative");
}

Vector canonical_response(const StandardizedModel& m) {
  return m.svd.left.transpose() * m.y_centered;
}

Vector canonical_ols(const Vector& spectrum, const Vector& u) {
  return u.cwiseQuotient(spectrum);
}

Vector canonical_ridge(const Vector& spectrum, const Vector& u, double lambda) {
  return (spectrum.array() * u.array() / (spectrum.array().square() + lambda)).matrix();
}

Vector canonical_surrogate(const Vector& spectrum, const Vector& u, double lambda) {
  return (u.array() / (spectrum.array().square() + lambda).sqrt()).matrix();
}

namespace {

CoefficientVector rotate(const StandardizedModel& m, const Vector& theta) {
  CoefficientVector c;
  c.values = m.svd.right * theta;
  c.space = Space::standardized;
  return c;
}

}  // namespace

CoefficientVector fit_ols(const StandardizedModel& m) {
  return rotate(m, canonical_ols(m.svd.spectrum, canonical_response(m)));
}

CoefficientVector fit_ridge(const StandardizedModel& m, RidgeParam p) {
  check_ridge_domain(m, p.lambda);
  return rotate(m, canonical_ridge(m.svd.spectrum, canonical_response(m), p.lambda));
}

CoefficientVector fit_surrogate(const StandardizedModel& m, RidgeParam p) {
  check_nonnegative_lambda(p.lambda, "fit_surrogate");
  return rotate(m, canonical_surrogate(m.svd.spectrum, canonical_response(m), p.lambda));
}

CoefficientVector fit_generalized_ridge(const StandardizedModel& m,
                                        const GeneralizedRidgeParams& g, GrBasis basis) {
  if (g.lambdas.size() != m.k())
    throw ShapeMismatch("fit_generalized_ridge: need one lambda per coefficient");
  for (Eigen::Index i = 0; i < g.lambdas.size(); ++i)
    if (!(g.lambdas(i) >= 0.0))
      throw NegativeLambda("fit_generalized_ridge: lambda_" + std::to_string(i + 1) +
                           " = " + std::to_string(g.lambdas(i)));
  if (basis == GrBasis::canonical) {
    const Vector u = canonical_response(m);
    const auto& xi = m.svd.spectrum;
    Vector theta(m.k());
    for (Eigen::Index i = 0; i < m.k(); ++i)
      theta(i) = xi(i) * u(i) / (xi(i) * xi(i) + g.lambdas(i));
    return rotate(m, theta);
  }
  // raw basis: solve (z'z + Diag(lambda)) beta = z'y directly
  Matrix a = m.z.transpose() * m.z;
  a.diagonal() += g.lambdas;
  CoefficientVector c;
  c.values = solve_spd(a, m.z.transpose() * m.y_centered);
  c.space = Space::standardized;
  return c;
}

Matrix surrogate_design(const StandardizedModel& m, RidgeParam p) {
  check_nonnegative_lambda(p.lambda, "surrogate_design");
  const Vector widened = (m.svd.spectrum.array().square() + p.lambda).sqrt().matrix();
  return m.svd.left * widened.asDiagonal() * m.svd.right.transpose();
}

EstimatorMoments moments(EstimatorKind kind, const StandardizedModel& m, RidgeParam p) {
  const auto& xi = m.svd.spectrum;
  const auto& q = m.svd.right;
  Vector mean_w(m.k()), disp_w(m.k());
  switch (kind) {
    case EstimatorKind::ols:
      mean_w.setOnes();
      disp_w = xi.array().square().inverse();
      break;
    case EstimatorKind::ridge: {
      check_ridge_domain(m, p.lambda);
      const auto d = xi.array().square() + p.lambda;
      mean_w = (xi.array().square() / d).matrix();
      disp_w = (xi.array().square() / d.square()).matrix();
      break;
    }
    case EstimatorKind::surrogate: {
      check_nonnegative_lambda(p.lambda, "moments");
      const auto d = xi.array().square() + p.lambda;
      mean_w = (xi.array() / d.sqrt()).matrix();
      disp_w = d.inverse().matrix();
      break;
    }
  }
  EstimatorMoments out;
  out.mean_map = q * mean_w.asDiagonal() * q.transpose();
  out.dispersion = q * disp_w.asDiagonal() * q.transpose();
  return out;
}

double residual_norm(const StandardizedModel& m, const CoefficientVector& standardized) {
  if (standardized.space != Space::standardized)
    throw SpaceMismatch("residual_norm: expected standardized coefficients");
  return (m.y_centered - m.z * standardized.values).norm();
}

}  // namespace ridge
