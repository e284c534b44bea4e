#pragma once

#include <vector>

#include "ridge/estimators.hpp"

namespace ridge {

// Trace and leverages of the intercept-augmented hat matrix at one lambda.
struct HatSummary {
  RidgeParam lambda;
  double trace = 0.0;      // tr H_lambda = sum xi_i^2/(xi_i^2+lambda), in (0, k]
  Vector leverages;        // n entries: 1/n + [Z (Z'Z+lambda I)^-1 Z']_ii
};

enum class Criterion { df, gcv, cp, press, hkb };

std::string to_string(Criterion c);
Criterion criterion_from_string(const std::string& name);

struct SelectionResult {
  Criterion criterion = Criterion::gcv;
  RidgeParam chosen_lambda;
  double objective_value = 0.0;
  double grid_lo = 0.0;
  double grid_hi = 1.0;
  double grid_step = 1e-3;
};

struct TracePoint {
  RidgeParam lambda;
  CoefficientVector coefficients;  // original space ("rates of change")
  double length = 0.0;             // ||beta_orig||
  double residual_root = 0.0;      // R(lambda), response units
};

HatSummary hat_summary(const StandardizedModel& m, RidgeParam p);

// sigma_hat^2 = OLS residual sum of squares / (n - k - 1).
double sigma2_hat(const StandardizedModel& m);

// df      : tr H_lambda (a reporting curve, not a selector)
// gcv     : SS_res(lambda) / (n - (1 + tr H_lambda))^2
// cp      : SS_res(lambda)/sigma_hat^2 - n + 2 + 2 tr H_lambda
// press   : leave-one-out prediction sum of squares; each fold re-centers
//           and re-scales the remaining rows before the ridge solve
// hkb     : (k+1) sigma_hat^2 / (intercept^2 + ||beta_orig||^2), closed form
double criterion_value(Criterion c, const StandardizedModel& m, RidgeParam p);

// Grid scan over [lo, hi] with the given step, then golden-section
// refinement around the best grid point to a 1e-6 lambda tolerance.
SelectionResult select_lambda(Criterion c, const StandardizedModel& m, double grid_lo = 0.0,
                              double grid_hi = 1.0, double grid_step = 1e-3);

std::vector<TracePoint> ridge_trace(const StandardizedModel& m,
                                    const std::vector<double>& lambdas);

}  // namespace ridge
