#pragma once

#include <optional>

#include "ridge/estimators.hpp"

namespace ridge {

// One variance inflation factor per coefficient. Each entry is the ratio of
// the coefficient's actual variance to its ideal (orthogonal-design)
// variance: Sigma_jj * (Sigma^-1)_jj for the estimator's dispersion Sigma.
// That inverse-correlation form reduces to diag((z'z)^-1) for OLS in
// correlation form and is bounded below by 1 (Cauchy-Schwarz).
struct VifVector {
  Vector values;
};

// Condition-number battery for one estimator at one lambda.
struct ConditioningReport {
  RidgeParam lambda;
  EstimatorKind kind = EstimatorKind::ridge;
  double data_transform_cond = 1.0;   // c1 of the map Y -> beta_hat
  double param_transform_cond = 1.0;  // c1 of the mean map E(beta_hat) = T(beta)
  double dispersion_cond = 1.0;       // c1 of V(beta_hat)
  double correlation_cond = 1.0;      // c1 of the correlation matrix of beta_hat
  double max_vif = 1.0;
  VifVector vifs;
  std::optional<double> surrogate_distance;  // ||Z - Z_lambda||_F
};

struct BerkBounds {
  double lower = 1.0;  // V_1, the maximal OLS VIF
  double upper = 1.0;  // k * (V_1 + ... + V_k)
  double c1 = 1.0;     // c1(z'z)
};

// Scalar fields of a ConditioningReport that can be compared across
// estimator kinds.
enum class Metric { data_transform_cond, param_transform_cond, dispersion_cond,
                    correlation_cond, max_vif };

std::string to_string(Metric metric);

VifVector vif(EstimatorKind kind, const StandardizedModel& m, RidgeParam p);

ConditioningReport conditioning_report(EstimatorKind kind, const StandardizedModel& m,
                                       RidgeParam p);

BerkBounds berk_bounds(const StandardizedModel& m);

double metric_value(Metric metric, EstimatorKind kind, const StandardizedModel& m,
                    RidgeParam p);

// Lambda where the ridge and surrogate curves of `metric` cross, located by
// bisection to 1e-7. Throws NoSignChange when the difference keeps its sign
// over the bracket.
RidgeParam crossing_lambda(Metric metric, const StandardizedModel& m, double bracket_lo,
                           double bracket_hi);

// Interior minimum of a metric curve over [lo, hi]: coarse grid scan plus
// golden-section refinement to 1e-5.
struct MetricMinimum {
  RidgeParam lambda;
  double value = 0.0;
};
MetricMinimum metric_minimum(Metric metric, EstimatorKind kind, const StandardizedModel& m,
                             double lo, double hi);

}  // namespace ridge
