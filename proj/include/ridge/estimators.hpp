#pragma once

#include "ridge/dataset.hpp"

namespace ridge {

// Ridge parameter, in squared-singular-value units. Must stay above
// -xi_k^2 to keep z'z + lambda*I positive definite; negative values are
// admitted only by fit_ridge (the equality-constraint branch needs them).
struct RidgeParam {
  double lambda = 0.0;
};

struct GeneralizedRidgeParams {
  Vector lambdas;  // k nonnegative entries
};

// Basis in which the generalized-ridge Diag(lambda_i) penalty is applied.
enum class GrBasis { canonical, raw };

enum class EstimatorKind { ols, ridge, surrogate };

std::string to_string(EstimatorKind kind);

// Mean map M with E(beta_hat) = M * beta, and dispersion V(beta_hat)/sigma^2,
// both in standardized coefficient space.
struct EstimatorMoments {
  Matrix mean_map;
  Matrix dispersion;
};

// Projected response U = P'y_centered.
Vector canonical_response(const StandardizedModel& m);

// Per-coordinate canonical solutions theta_i(U).
Vector canonical_ols(const Vector& spectrum, const Vector& u);
Vector canonical_ridge(const Vector& spectrum, const Vector& u, double lambda);
Vector canonical_surrogate(const Vector& spectrum, const Vector& u, double lambda);

CoefficientVector fit_ols(const StandardizedModel& m);
CoefficientVector fit_ridge(const StandardizedModel& m, RidgeParam p);
CoefficientVector fit_surrogate(const StandardizedModel& m, RidgeParam p);
CoefficientVector fit_generalized_ridge(const StandardizedModel& m,
                                        const GeneralizedRidgeParams& g,
                                        GrBasis basis = GrBasis::canonical);

// The modified design X_lambda = P Diag(sqrt(xi_i^2 + lambda)) Q', whose
// Gram matrix is z'z + lambda I.
Matrix surrogate_design(const StandardizedModel& m, RidgeParam p);

EstimatorMoments moments(EstimatorKind kind, const StandardizedModel& m, RidgeParam p);

// ||y_centered - z * beta_std||, the square root of the residual sum of
// squares, in response units.
double residual_norm(const StandardizedModel& m, const CoefficientVector& standardized);

// Throws LambdaOutOfDomain unless lambda > -xi_k^2 (ridge) or >= 0.
void check_ridge_domain(const StandardizedModel& m, double lambda);
void check_nonnegative_lambda(double lambda, const char* op);

}  // namespace ridge
