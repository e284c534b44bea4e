#include "ridge/selection.hpp"

#include <algorithm>
#include <cmath>

namespace ridge {

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::df: return "df";
    case Criterion::gcv: return "gcv";
    case Criterion::cp: return "cp";
    case Criterion::press: return "press";
    case Criterion::hkb: return "hkb";
  }
  return "?";
}

Criterion criterion_from_string(const std::string& name) {
  if (name == "df") return Criterion::df;
  if (name == "gcv") return Criterion::gcv;
  if (name == "cp") return Criterion::cp;
  if (name == "press") return Criterion::press;
  if (name == "hkb") return Criterion::hkb;
  throw InputError("unknown criterion '" + name + "'");
}

HatSummary hat_summary(const StandardizedModel& m, RidgeParam p) {
  check_nonnegative_lambda(p.lambda, "hat_summary");
  const auto& xi = m.svd.spectrum;
  const auto shrink = (xi.array().square() / (xi.array().square() + p.lambda)).eval();
  HatSummary h;
  h.lambda = p;
  h.trace = shrink.sum();
  const double inv_n = 1.0 / static_cast<double>(m.n());
  h.leverages =
      (m.svd.left.array().square().matrix() * shrink.matrix().asDiagonal()).rowwise().sum();
  h.leverages.array() += inv_n;
  return h;
}

double sigma2_hat(const StandardizedModel& m) {
  const double r = residual_norm(m, fit_ols(m));
  return r * r / static_cast<double>(m.n() - m.k() - 1);
}

namespace {

double ss_res(const StandardizedModel& m, double lambda) {
  const double r = residual_norm(m, fit_ridge(m, RidgeParam{lambda}));
  return r * r;
}

// Leave-one-out prediction sum of squares. Each fold re-standardizes the
// remaining rows, solves the correlation-form ridge system at the same
// lambda, and predicts the held-out response in original units.
double press_loo(const StandardizedModel& m, const Dataset& d, double lambda) {
  const auto n = d.n();
  const auto k = d.k();
  double total = 0.0;
  Matrix x(n - 1, k);
  Vector y(n - 1);
  for (Eigen::Index hold = 0; hold < n; ++hold) {
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == hold) continue;
      x.row(r) = d.predictors.row(i);
      y(r) = d.response(i);
      ++r;
    }
    const Vector centers = x.colwise().mean();
    Matrix z = x.rowwise() - centers.transpose();
    Vector scales(k);
    for (Eigen::Index j = 0; j < k; ++j) {
      scales(j) = z.col(j).norm();
      z.col(j) /= scales(j);
    }
    const double ymean = y.mean();
    Matrix a = z.transpose() * z;
    a.diagonal().array() += lambda;
    const Vector beta = solve_spd(a, z.transpose() * (y.array() - ymean).matrix());
    const Vector zrow =
        ((d.predictors.row(hold).transpose() - centers).array() / scales.array()).matrix();
    const double pred = ymean + zrow.dot(beta);
    const double e = d.response(hold) - pred;
    total += e * e;
  }
  return total;
}

// The standardized model fully determines the dataset geometry needed by
// PRESS; rebuild the raw predictors from z, scales, and centers.
Dataset rebuild_dataset(const StandardizedModel& m) {
  Dataset d;
  d.predictors = (m.z * m.scales.asDiagonal()).rowwise() + m.centers.transpose();
  d.response = m.y_centered.array() + m.y_mean;
  d.names.resize(m.k());
  return d;
}

}  // namespace

double criterion_value(Criterion c, const StandardizedModel& m, RidgeParam p) {
  check_nonnegative_lambda(p.lambda, "criterion_value");
  const auto n = static_cast<double>(m.n());
  const auto k = static_cast<double>(m.k());
  switch (c) {
    case Criterion::df:
      return hat_summary(m, p).trace;
    case Criterion::gcv: {
      const double dof = n - (1.0 + hat_summary(m, p).trace);
      if (dof <= 0.0)
        throw DegenerateDenominator("gcv: n - (1 + tr H) = " + std::to_string(dof));
      return ss_res(m, p.lambda) / (dof * dof);
    }
    case Criterion::cp:
      return ss_res(m, p.lambda) / sigma2_hat(m) - n + 2.0 + 2.0 * hat_summary(m, p).trace;
    case Criterion::press:
      return press_loo(m, rebuild_dataset(m), p.lambda);
    case Criterion::hkb: {
      const CoefficientVector borig = to_original_space(fit_ols(m), m);
      const double b0 = intercept(borig, m);
      return (k + 1.0) * sigma2_hat(m) / (b0 * b0 + borig.values.squaredNorm());
    }
  }
  return 0.0;
}

SelectionResult select_lambda(Criterion c, const StandardizedModel& m, double grid_lo,
                              double grid_hi, double grid_step) {
  if (c == Criterion::df)
    throw InputError("select_lambda: df is a reporting curve, not a selector");
  if (c == Criterion::hkb) {
    SelectionResult r;
    r.criterion = c;
    r.chosen_lambda = RidgeParam{criterion_value(c, m, RidgeParam{0.0})};
    r.objective_value = r.chosen_lambda.lambda;
    return r;
  }
  if (!(grid_step > 0.0) || !(grid_hi > grid_lo))
    throw EmptyGrid("select_lambda: need grid_hi > grid_lo and a positive step");

  auto f = [&](double lam) { return criterion_value(c, m, RidgeParam{lam}); };
  double best = grid_lo;
  double best_v = f(grid_lo);
  const long steps = std::lround(std::floor((grid_hi - grid_lo) / grid_step));
  for (long i = 1; i <= steps; ++i) {
    const double lam = std::min(grid_lo + static_cast<double>(i) * grid_step, grid_hi);
    const double v = f(lam);
    if (v < best_v) {
      best_v = v;
      best = lam;
    }
  }
  double a = std::max(grid_lo, best - grid_step);
  double b = std::min(grid_hi, best + grid_step);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-6) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - phi * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + phi * (b - a); f2 = f(x2);
    }
  }
  SelectionResult r;
  r.criterion = c;
  r.chosen_lambda = RidgeParam{0.5 * (a + b)};
  r.objective_value = f(r.chosen_lambda.lambda);
  r.grid_lo = grid_lo;
  r.grid_hi = grid_hi;
  r.grid_step = grid_step;
  return r;
}

std::vector<TracePoint> ridge_trace(const StandardizedModel& m,
                                    const std::vector<double>& lambdas) {
  std::vector<double> sorted = lambdas;
  std::sort(sorted.begin(), sorted.end());
  std::vector<TracePoint> out;
  out.reserve(sorted.size());
  for (double lam : sorted) {
    check_nonnegative_lambda(lam, "ridge_trace");
    TracePoint t;
    t.lambda = RidgeParam{lam};
    const CoefficientVector std_fit = fit_ridge(m, t.lambda);
    t.coefficients = to_original_space(std_fit, m);
    t.length = t.coefficients.values.norm();
    t.residual_root = residual_norm(m, std_fit);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace ridge
