#pragma once

#include <cstdint>

#include "ridge/constraint.hpp"

namespace ridge {

// Fixed-design Gaussian simulation scenario for the constrained estimators.
struct SimScenario {
  Matrix design;          // n x k, full rank, no centering
  Vector beta_true;       // k
  double sigma = 1.0;     // error standard deviation
  ConstraintRadius radius;
  std::int64_t replicates = 1000;
  std::uint64_t seed = 0;

  // Two-sample mixture test controls.
  int mixture_sample_cap = 256;  // per-group size cap
  int permutations = 999;
};

struct TwoSampleTest {
  double statistic = 0.0;  // energy distance between the two samples
  double p_value = 1.0;    // permutation p-value
  int n_first = 0;         // interior beta_0 draws used
  int n_second = 0;        // truncated beta_L draws used
};

struct KktSummary {
  double max_stationarity = 0.0;      // ||(X'X + lam I) b - X'y||
  double max_primal_violation = 0.0;  // max(0, ||b|| - c)
  double min_multiplier = 0.0;
  double max_complementarity = 0.0;   // |lam (c^2 - ||b||^2)|
};

struct MixtureReport {
  double alpha_hat = 0.0;              // fraction with ||beta_L|| < c
  double alpha_ci_halfwidth = 0.0;     // 1.96 sqrt(a(1-a)/N)
  double sphere_residency_max_err = 0.0;  // max | ||beta_c|| - c | / c
  Vector covariance_spectrum;          // eigenvalues of cov(beta_c), ascending
  TwoSampleTest mixture_consistency;
  KktSummary kkt;
  double max_boundary_branch_diff = 0.0;  // ||beta_0 - beta_c|| on boundary draws
  double max_interior_branch_diff = 0.0;  // ||beta_0 - beta_L|| on interior draws
  std::int64_t replicates = 0;
  std::int64_t interior_count = 0;
  std::uint64_t seed = 0;
  bool degenerate = false;  // alpha_hat is exactly 0 or 1 with >= 1000 draws

  bool operator==(const MixtureReport&) const = default;
};

struct RankCheck {
  bool rank_deficient = false;
  double smallest = 0.0;         // smallest covariance eigenvalue
  double second_smallest = 0.0;  // the (k-1)-th, for the ratio test
};

MixtureReport run_simulation(const SimScenario& s);

// Empirical rank-(k-1) signature: smallest covariance eigenvalue at most
// 1e-3 of the next one.
RankCheck rank_deficiency_check(const MixtureReport& report, Eigen::Index k);

// Energy-distance statistic between two multivariate samples (rows).
double energy_distance(const Matrix& a, const Matrix& b);

// Random full-rank Gaussian design with the given shape, seeded.
Matrix random_design(Eigen::Index n, Eigen::Index k, std::uint64_t seed);

}  // namespace ridge
