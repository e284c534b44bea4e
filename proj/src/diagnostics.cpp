#include "ridge/diagnostics.hpp"

#include <cmath>
#include <functional>

namespace ridge {

std::string to_string(Metric metric) {
  switch (metric) {
    case Metric::data_transform_cond: return "data_transform_cond";
    case Metric::param_transform_cond: return "param_transform_cond";
    case Metric::dispersion_cond: return "dispersion_cond";
    case Metric::correlation_cond: return "correlation_cond";
    case Metric::max_vif: return "max_vif";
  }
  return "?";
}

namespace {

// Canonical dispersion weights d_i with V(theta_hat)/sigma^2 = Diag(d_i).
Vector dispersion_weights(EstimatorKind kind, const Vector& xi, double lambda) {
  switch (kind) {
    case EstimatorKind::ols:
      return xi.array().square().inverse().matrix();
    case EstimatorKind::ridge:
      return (xi.array().square() / (xi.array().square() + lambda).square()).matrix();
    case EstimatorKind::surrogate:
      return (xi.array().square() + lambda).inverse().matrix();
  }
  return {};
}

// VIF_j = Sigma_jj * (Sigma^-1)_jj with Sigma = Q Diag(d) Q'.
Vector generalized_vifs(const Matrix& q, const Vector& d) {
  const Vector dinv = d.cwiseInverse();
  Vector out(q.rows());
  for (Eigen::Index j = 0; j < q.rows(); ++j) {
    const auto row = q.row(j).array();
    out(j) = (row.square() * d.transpose().array()).sum() *
             (row.square() * dinv.transpose().array()).sum();
  }
  return out;
}

double correlation_condition(const Matrix& q, const Vector& d) {
  const Matrix sigma = q * d.asDiagonal() * q.transpose();
  const Vector scale = sigma.diagonal().cwiseSqrt();
  Matrix corr = sigma.array() / (scale * scale.transpose()).array();
  Eigen::SelfAdjointEigenSolver<Matrix> es(corr, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return ev(ev.size() - 1) / ev(0);
}

void check_domain(EstimatorKind kind, const StandardizedModel& m, double lambda) {
  if (kind == EstimatorKind::ridge)
    check_ridge_domain(m, lambda);
  else if (kind == EstimatorKind::surrogate)
    check_nonnegative_lambda(lambda, "diagnostics");
}

}  // namespace

VifVector vif(EstimatorKind kind, const StandardizedModel& m, RidgeParam p) {
  check_domain(kind, m, p.lambda);
  const Vector d = dispersion_weights(kind, m.svd.spectrum, p.lambda);
  return VifVector{generalized_vifs(m.svd.right, d)};
}

ConditioningReport conditioning_report(EstimatorKind kind, const StandardizedModel& m,
                                       RidgeParam p) {
  check_domain(kind, m, p.lambda);
  const auto& xi = m.svd.spectrum;
  const double lam = p.lambda;
  const double x1 = xi(0), xk = xi(xi.size() - 1);

  ConditioningReport r;
  r.lambda = p;
  r.kind = kind;
  switch (kind) {
    case EstimatorKind::ols: {
      r.data_transform_cond = x1 / xk;
      r.param_transform_cond = 1.0;
      r.dispersion_cond = (x1 * x1) / (xk * xk);
      break;
    }
    case EstimatorKind::ridge: {
      const auto w = (xi.array() / (xi.array().square() + lam)).eval();
      r.data_transform_cond = w.maxCoeff() / w.minCoeff();
      r.param_transform_cond = (x1 * x1 * (xk * xk + lam)) / (xk * xk * (x1 * x1 + lam));
      const auto v = (xi.array().square() / (xi.array().square() + lam).square()).eval();
      r.dispersion_cond = v.maxCoeff() / v.minCoeff();
      break;
    }
    case EstimatorKind::surrogate: {
      r.data_transform_cond = std::sqrt((x1 * x1 + lam) / (xk * xk + lam));
      r.param_transform_cond = (x1 * std::sqrt(xk * xk + lam)) / (xk * std::sqrt(x1 * x1 + lam));
      r.dispersion_cond = (x1 * x1 + lam) / (xk * xk + lam);
      break;
    }
  }
  const Vector d = dispersion_weights(kind, xi, lam);
  r.correlation_cond = correlation_condition(m.svd.right, d);
  r.vifs = VifVector{generalized_vifs(m.svd.right, d)};
  r.max_vif = r.vifs.values.maxCoeff();
  if (lam >= 0.0)
    r.surrogate_distance =
        std::sqrt((xi.array() - (xi.array().square() + lam).sqrt()).square().sum());
  return r;
}

BerkBounds berk_bounds(const StandardizedModel& m) {
  const Vector v = vif(EstimatorKind::ols, m, RidgeParam{0.0}).values;
  BerkBounds b;
  b.lower = v.maxCoeff();
  b.upper = static_cast<double>(m.k()) * v.sum();
  const double c = spectral_condition(m.svd.spectrum);
  b.c1 = c * c;
  return b;
}

double metric_value(Metric metric, EstimatorKind kind, const StandardizedModel& m,
                    RidgeParam p) {
  const ConditioningReport r = conditioning_report(kind, m, p);
  switch (metric) {
    case Metric::data_transform_cond: return r.data_transform_cond;
    case Metric::param_transform_cond: return r.param_transform_cond;
    case Metric::dispersion_cond: return r.dispersion_cond;
    case Metric::correlation_cond: return r.correlation_cond;
    case Metric::max_vif: return r.max_vif;
  }
  return 0.0;
}

RidgeParam crossing_lambda(Metric metric, const StandardizedModel& m, double bracket_lo,
                           double bracket_hi) {
  auto diff = [&](double lam) {
    return metric_value(metric, EstimatorKind::ridge, m, RidgeParam{lam}) -
           metric_value(metric, EstimatorKind::surrogate, m, RidgeParam{lam});
  };
  double lo = bracket_lo, hi = bracket_hi;
  double flo = diff(lo), fhi = diff(hi);
  if (flo == 0.0) return RidgeParam{lo};
  if (fhi == 0.0) return RidgeParam{hi};
  if ((flo > 0.0) == (fhi > 0.0))
    throw NoSignChange("crossing_lambda(" + to_string(metric) + "): no sign change on [" +
                       std::to_string(bracket_lo) + ", " + std::to_string(bracket_hi) + "]");
  while (hi - lo > 1e-7) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = diff(mid);
    if (fmid == 0.0) return RidgeParam{mid};
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return RidgeParam{0.5 * (lo + hi)};
}

MetricMinimum metric_minimum(Metric metric, EstimatorKind kind, const StandardizedModel& m,
                             double lo, double hi) {
  auto f = [&](double lam) { return metric_value(metric, kind, m, RidgeParam{lam}); };
  constexpr int kGrid = 4096;
  double best = lo;
  double best_v = f(lo);
  for (int i = 1; i <= kGrid; ++i) {
    const double lam = lo + (hi - lo) * i / kGrid;
    const double v = f(lam);
    if (v < best_v) {
      best_v = v;
      best = lam;
    }
  }
  double a = std::max(lo, best - (hi - lo) / kGrid);
  double b = std::min(hi, best + (hi - lo) / kGrid);
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-5) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - phi * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + phi * (b - a); f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  return MetricMinimum{RidgeParam{xm}, f(xm)};
}

}  // namespace ridge
