#include "ridge/constraint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ridge {

LengthFunction::LengthFunction(const StandardizedModel& m, Space space) {
  if (space == Space::canonical) space = Space::standardized;
  space_ = space;
  xi_ = m.svd.spectrum;
  u_ = canonical_response(m);
  xi_min_sq_ = xi_(xi_.size() - 1) * xi_(xi_.size() - 1);
  sse_perp_ = m.y_centered.squaredNorm() - u_.squaredNorm();
  if (space == Space::original) {
    map_ = m.scales.cwiseInverse().asDiagonal() * m.svd.right;
    identity_map_ = false;
  } else {
    map_ = m.svd.right;  // rotation only; norms unchanged
    identity_map_ = true;
  }
}

LengthFunction LengthFunction::from_canonical(const SvdFactors& svd, const Vector& y) {
  LengthFunction f;
  f.space_ = Space::standardized;
  f.xi_ = svd.spectrum;
  f.u_ = svd.left.transpose() * y;
  f.xi_min_sq_ = f.xi_(f.xi_.size() - 1) * f.xi_(f.xi_.size() - 1);
  f.sse_perp_ = y.squaredNorm() - f.u_.squaredNorm();
  f.map_ = svd.right;
  f.identity_map_ = true;
  return f;
}

void LengthFunction::check_domain(double lambda) const {
  if (!(lambda > -xi_min_sq_))
    throw LambdaOutOfDomain("length function: lambda = " + std::to_string(lambda) +
                            " must exceed " + std::to_string(-xi_min_sq_));
}

double LengthFunction::length_sq(RidgeParam p) const {
  check_domain(p.lambda);
  const auto theta = (xi_.array() * u_.array() / (xi_.array().square() + p.lambda)).eval();
  if (identity_map_) return theta.square().sum();
  return (map_ * theta.matrix()).squaredNorm();
}

double LengthFunction::length(RidgeParam p) const { return std::sqrt(length_sq(p)); }

double LengthFunction::length_sq_derivative(RidgeParam p) const {
  if (space_ == Space::original)
    throw SpaceMismatch(
        "length_sq_derivative: closed form exists in standardized/canonical space only");
  check_domain(p.lambda);
  return -2.0 * (u_.array().square() * xi_.array().square() /
                 (xi_.array().square() + p.lambda).cube())
                    .sum();
}

CoefficientVector LengthFunction::coefficients(RidgeParam p) const {
  check_domain(p.lambda);
  const Vector theta =
      (xi_.array() * u_.array() / (xi_.array().square() + p.lambda)).matrix();
  CoefficientVector c;
  c.values = map_ * theta;
  c.space = space_;
  return c;
}

double LengthFunction::residual_norm(RidgeParam p) const {
  check_domain(p.lambda);
  const double shrunk =
      (u_.array().square() * p.lambda * p.lambda / (xi_.array().square() + p.lambda).square())
          .sum();
  return std::sqrt(sse_perp_ + shrunk);
}

namespace {

// Bisection refinement of a sign-change bracket of h(lambda) = g - c^2,
// then a few Newton-style polish steps using the local secant.
double refine_root(const LengthFunction& f, double c2, double lo, double hi, double flo) {
  auto h = [&](double lam) { return f.length_sq(RidgeParam{lam}) - c2; };
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    const double fm = h(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  // secant polish for member-length precision well beyond the scan tol
  double a = lo, b = hi;
  double fa = h(a), fb = h(b);
  for (int it = 0; it < 60 && a != b; ++it) {
    if (fa == fb) break;
    const double x = b - fb * (b - a) / (fb - fa);
    if (!(x >= std::min(a, b) && x <= std::max(a, b))) break;
    const double fx = h(x);
    a = b;
    fa = fb;
    b = x;
    fb = fx;
    if (fx == 0.0) break;
  }
  return b;
}

}  // namespace

EquivalenceClass equivalence_class(const LengthFunction& f, ConstraintRadius c,
                                   double lambda_max, int scan_points) {
  if (!(c.c > 0.0)) throw DomainError("equivalence_class: radius must be positive");
  if (!(lambda_max > 0.0)) throw DomainError("equivalence_class: lambda_max must be positive");
  if (scan_points < 2) throw DomainError("equivalence_class: need at least 2 scan points");
  const double c2 = c.c_squared();
  auto h = [&](double lam) { return f.length_sq(RidgeParam{lam}) - c2; };

  EquivalenceClass out;
  out.target_length = c.c;
  double prev_lam = 0.0;
  double prev_h = h(0.0);
  if (prev_h == 0.0) out.members.push_back(0.0);
  for (int i = 1; i <= scan_points; ++i) {
    const double lam = lambda_max * static_cast<double>(i) / scan_points;
    const double cur = h(lam);
    if (cur == 0.0) {
      out.members.push_back(lam);
    } else if ((cur > 0.0) != (prev_h > 0.0) && prev_h != 0.0) {
      out.members.push_back(refine_root(f, c2, prev_lam, lam, prev_h));
    }
    prev_lam = lam;
    prev_h = cur;
  }
  if (out.members.empty())
    throw EmptyClass("no lambda in [0, " + std::to_string(lambda_max) + "] has ||beta|| = " +
                     std::to_string(c.c));
  std::sort(out.members.begin(), out.members.end());
  out.minimizing = out.members.front();
  return out;
}

std::pair<RidgeParam, CoefficientVector> minimizing_solution(const LengthFunction& f,
                                                             ConstraintRadius c,
                                                             double lambda_max,
                                                             int scan_points) {
  const EquivalenceClass cls = equivalence_class(f, c, lambda_max, scan_points);
  const RidgeParam lam{cls.minimizing};
  // SS(lambda) is increasing, so the smallest member is the minimizer; the
  // check below guards the refinement rather than the theory.
  const double r0 = f.residual_norm(lam);
  for (double other : cls.members)
    if (f.residual_norm(RidgeParam{other}) < r0 - 1e-9 * (1.0 + r0))
      throw DomainError("minimizing_solution: residual ordering violated");
  return {lam, f.coefficients(lam)};
}

std::pair<RidgeParam, double> global_length_minimum(const LengthFunction& f,
                                                    double lambda_max) {
  if (!(lambda_max > 0.0)) throw DomainError("global_length_minimum: lambda_max must be positive");
  auto g = [&](double lam) { return f.length_sq(RidgeParam{lam}); };
  constexpr int kGrid = 8192;
  double best = 0.0, best_v = g(0.0);
  for (int i = 1; i <= kGrid; ++i) {
    const double lam = lambda_max * static_cast<double>(i) / kGrid;
    const double v = g(lam);
    if (v < best_v) {
      best_v = v;
      best = lam;
    }
  }
  double a = std::max(0.0, best - lambda_max / kGrid);
  double b = std::min(lambda_max, best + lambda_max / kGrid);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = g(x1), f2 = g(x2);
  while (b - a > 1e-6) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - phi * (b - a); f1 = g(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + phi * (b - a); f2 = g(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  return {RidgeParam{xm}, std::sqrt(g(xm))};
}

FeasibleInterval feasible_interval(const LengthFunction& f, ConstraintRadius c,
                                   double lambda_max) {
  if (!(c.c > 0.0)) throw DomainError("feasible_interval: radius must be positive");
  const double c2 = c.c_squared();
  const auto [lam_min, len_min] = global_length_minimum(f, lambda_max);
  const double g_min = len_min * len_min;
  const double g0 = f.length_sq(RidgeParam{0.0});

  FeasibleInterval out;
  if (c2 > g0) {
    // No lambda >= 0 reaches this length on the shrinking branch.
    out.admissible = false;
    out.lower = out.upper = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  if (c2 >= g_min) {
    // Left endpoint: first crossing of g = c^2 on [0, lam_min].
    double lo = 0.0;
    if (c2 < g0) {
      double a = 0.0, b = lam_min.lambda;
      double fa = g0 - c2;
      // g decreases from g0 to g_min over [0, lam_min]
      lo = refine_root(f, c2, a, b, fa);
    }
    out.admissible = true;
    out.lower = lo;
    out.upper = lam_min.lambda;
    return out;
  }
  // c^2 < g_min: the only crossings lie beyond the interior minimum, on the
  // far shrinking branch. Expand until g drops below c^2, then bisect.
  double a = lam_min.lambda;
  double fa = g_min - c2;  // positive
  double b = std::max(2.0 * lambda_max, 2.0 * a + 1.0);
  int guard = 0;
  while (f.length_sq(RidgeParam{b}) > c2 && guard++ < 200) {
    a = b;
    fa = f.length_sq(RidgeParam{a}) - c2;
    b *= 2.0;
  }
  const double root = refine_root(f, c2, a, b, fa);
  out.admissible = root <= lambda_max;
  out.lower = root;
  out.upper = std::numeric_limits<double>::infinity();
  out.unbounded_above = true;
  return out;
}

double solve_sphere_multiplier(const LengthFunction& f, double c) {
  if (!(c > 0.0)) throw DomainError("solve_sphere_multiplier: radius must be positive");
  if (f.space() == Space::original)
    throw SpaceMismatch("solve_sphere_multiplier: needs the monotone standardized form");
  const double c2 = c * c;
  const double xi_min_sq = -f.lambda_lower_bound();
  const double eps = 1e-12 * xi_min_sq;
  double lo = -xi_min_sq + eps;

  auto g = [&](double lam) { return f.length_sq(RidgeParam{lam}); };
  double glo = g(lo);
  if (glo < c2)
    throw DomainError("solve_sphere_multiplier: radius unreachable (projected response "
                      "vanishes along the smallest singular direction)");
  // expand upper end until g < c^2
  double hi = std::max(1.0, 2.0 * std::abs(lo));
  int guard = 0;
  while (g(hi) >= c2 && guard++ < 400) hi *= 2.0;

  // bisection to a tight bracket, then Newton polish with the closed-form
  // derivative; g is strictly decreasing.
  for (int it = 0; it < 200 && (hi - lo) > 1e-15 * (1.0 + std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) >= c2)
      lo = mid;
    else
      hi = mid;
  }
  double lam = 0.5 * (lo + hi);
  for (int it = 0; it < 8; ++it) {
    const double h = g(lam) - c2;
    const double d = f.length_sq_derivative(RidgeParam{lam});
    if (d == 0.0) break;
    const double next = lam - h / d;
    if (!(next > -xi_min_sq)) break;
    lam = next;
  }
  return lam;
}

ConstrainedFit equality_constrained_fit(const StandardizedModel& m, ConstraintRadius c) {
  const LengthFunction f(m, Space::standardized);
  const double lam = solve_sphere_multiplier(f, c.c);
  ConstrainedFit fit;
  fit.multiplier = lam;
  fit.coefficients = f.coefficients(RidgeParam{lam});
  return fit;
}

ConstrainedFit inequality_constrained_fit(const StandardizedModel& m, ConstraintRadius c) {
  if (!(c.c > 0.0)) throw DomainError("inequality_constrained_fit: radius must be positive");
  const CoefficientVector ols = fit_ols(m);
  ConstrainedFit fit;
  if (ols.values.norm() < c.c) {
    fit.coefficients = ols;
    fit.multiplier = 0.0;
  } else {
    fit = equality_constrained_fit(m, c);
    if (fit.multiplier < 0.0)
      throw DomainError("inequality_constrained_fit: negative multiplier on boundary branch");
  }
  // Stuezle conditions (i)-(iv)
  const Vector& b = fit.coefficients.values;
  const double c2 = c.c_squared();
  const Vector stat = m.z.transpose() * (m.z * b) + fit.multiplier * b -
                      m.z.transpose() * m.y_centered;
  if (stat.norm() > 1e-8 * (1.0 + m.y_centered.norm()))
    throw DomainError("inequality_constrained_fit: stationarity residual " +
                      std::to_string(stat.norm()));
  if (b.squaredNorm() > c2 * (1.0 + 1e-9) + 1e-12)
    throw DomainError("inequality_constrained_fit: primal feasibility violated");
  const double slack = fit.multiplier * (c2 - b.squaredNorm());
  if (std::abs(slack) > 1e-8 * (1.0 + c2))
    throw DomainError("inequality_constrained_fit: complementary slackness " +
                      std::to_string(slack));
  return fit;
}

}  // namespace ridge
