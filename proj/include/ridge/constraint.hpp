#pragma once

#include <vector>

#include "ridge/estimators.hpp"

namespace ridge {

struct ConstraintRadius {
  double c = 1.0;
  double c_squared() const { return c * c; }
};

// g(lambda) = ||beta_hat_R(lambda)||^2 in a chosen coefficient space,
// evaluated through the canonical form. In standardized (and canonical)
// space g is strictly decreasing on (-xi_k^2, inf); in original space the
// scale weights make it non-monotone ("down-up-down" on real data).
class LengthFunction {
 public:
  LengthFunction(const StandardizedModel& m, Space space);

  // Raw-design canonical system: theta and beta share the Euclidean norm,
  // so this behaves like the standardized branch. Used for simulation
  // scenarios that have no centering step.
  static LengthFunction from_canonical(const SvdFactors& svd, const Vector& y);

  double length_sq(RidgeParam p) const;
  double length(RidgeParam p) const;

  // Closed form -2 sum U_i^2 xi_i^2 (xi_i^2+lambda)^-3; standardized or
  // canonical space only.
  double length_sq_derivative(RidgeParam p) const;

  // Ridge solution at lambda, reported in this function's space.
  CoefficientVector coefficients(RidgeParam p) const;

  // R(lambda) = sqrt(residual sum of squares); independent of space.
  double residual_norm(RidgeParam p) const;

  Space space() const { return space_; }
  double lambda_lower_bound() const { return -xi_min_sq_; }
  const Vector& spectrum() const { return xi_; }
  const Vector& projected_response() const { return u_; }

 private:
  LengthFunction() = default;
  void check_domain(double lambda) const;

  Vector xi_;        // singular values
  Vector u_;         // P'y
  Matrix map_;       // coefficient map beta = map_ * theta (k x k)
  bool identity_map_ = true;  // true when ||beta|| == ||theta|| exactly
  double sse_perp_ = 0.0;     // ||y_c||^2 - ||U||^2
  double xi_min_sq_ = 0.0;
  Space space_ = Space::standardized;
};

// The solution set of ||beta_hat_R(lambda)|| = c on [0, lambda_max].
struct EquivalenceClass {
  double target_length = 0.0;
  std::vector<double> members;  // ascending
  double minimizing = 0.0;      // members.front()
};

struct FeasibleInterval {
  bool admissible = false;
  double lower = 0.0;
  double upper = 0.0;
  bool unbounded_above = false;
};

struct ConstrainedFit {
  CoefficientVector coefficients;  // standardized space
  double multiplier = 0.0;         // the LaGrange lambda-hat
};

inline constexpr int kDefaultScanPoints = 10000;

EquivalenceClass equivalence_class(const LengthFunction& f, ConstraintRadius c,
                                   double lambda_max = 1.0,
                                   int scan_points = kDefaultScanPoints);

// min Lambda(c) and its fit; the class member with the smallest residual
// sum of squares (SS is increasing in lambda).
std::pair<RidgeParam, CoefficientVector> minimizing_solution(
    const LengthFunction& f, ConstraintRadius c, double lambda_max = 1.0,
    int scan_points = kDefaultScanPoints);

// Interior (or boundary) minimizer of ||beta_hat_R(lambda)|| on
// [0, lambda_max]: grid scan plus golden-section to 1e-6.
std::pair<RidgeParam, double> global_length_minimum(const LengthFunction& f,
                                                    double lambda_max = 1.0);

// Case analysis for which lambda can produce a minimizing solution of
// length c: [min g^-1(c^2), lambda_min] when g_min <= c^2 <= g(0), and
// (root beyond lambda_min, inf) when c^2 < g_min.
FeasibleInterval feasible_interval(const LengthFunction& f, ConstraintRadius c,
                                   double lambda_max = 1.0);

// Exact solution of min ||y - Z beta||^2 subject to ||beta|| = c, via the
// unique multiplier in (-xi_k^2, inf) with g(multiplier) = c^2. The
// multiplier is positive iff c < ||beta_OLS||.
ConstrainedFit equality_constrained_fit(const StandardizedModel& m, ConstraintRadius c);

// min ||y - Z beta||^2 subject to ||beta|| <= c: OLS when interior,
// otherwise the sphere solution with multiplier >= 0. KKT conditions are
// verified to 1e-8 before returning.
ConstrainedFit inequality_constrained_fit(const StandardizedModel& m, ConstraintRadius c);

// Shared root solver: the unique lambda in (-xi_min^2, inf) with
// g(lambda) = c^2 for a standardized/canonical length function.
double solve_sphere_multiplier(const LengthFunction& f, double c);

}  // namespace ridge
