#include "ridge/mixsim.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ridge/parallel.hpp"
#include "ridge/rng.hpp"

namespace ridge {

namespace {

// Stream-id tags keep replicate draws, rejection-sampling draws, and
// permutation shuffles on disjoint Philox streams for one seed.
constexpr std::uint64_t kRejectionTag = std::uint64_t{1} << 62;
constexpr std::uint64_t kPermutationTag = std::uint64_t{2} << 62;
constexpr std::uint64_t kDesignTag = (std::uint64_t{2} << 62) + (std::uint64_t{1} << 61);

Vector gaussian_vector(Philox& rng, Eigen::Index n, double sigma) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = sigma * rng.next_normal();
  return v;
}

}  // namespace

double energy_distance(const Matrix& a, const Matrix& b) {
  const auto n1 = a.rows();
  const auto n2 = b.rows();
  if (n1 == 0 || n2 == 0) return 0.0;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (Eigen::Index i = 0; i < n1; ++i)
    for (Eigen::Index j = 0; j < n2; ++j) sab += (a.row(i) - b.row(j)).norm();
  for (Eigen::Index i = 0; i < n1; ++i)
    for (Eigen::Index j = i + 1; j < n1; ++j) saa += (a.row(i) - a.row(j)).norm();
  for (Eigen::Index i = 0; i < n2; ++i)
    for (Eigen::Index j = i + 1; j < n2; ++j) sbb += (b.row(i) - b.row(j)).norm();
  return 2.0 * sab / (static_cast<double>(n1) * n2) -
         2.0 * saa / (static_cast<double>(n1) * n1) -
         2.0 * sbb / (static_cast<double>(n2) * n2);
}

Matrix random_design(Eigen::Index n, Eigen::Index k, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Philox rng(seed, kDesignTag + attempt);
    Matrix x(n, k);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < k; ++j) x(i, j) = rng.next_normal();
    try {
      svd_thin(x);
      return x;
    } catch (const RankDeficient&) {
      // vanishing probability; retry on the next stream
    }
  }
}

MixtureReport run_simulation(const SimScenario& s) {
  if (s.replicates < 1) throw DomainError("run_simulation: replicates must be >= 1");
  if (!(s.sigma > 0.0)) throw DomainError("run_simulation: sigma must be positive");
  if (!(s.radius.c > 0.0)) throw DomainError("run_simulation: radius must be positive");
  if (s.beta_true.size() != s.design.cols())
    throw ShapeMismatch("run_simulation: beta_true length must match design columns");

  const SvdFactors svd = svd_thin(s.design);  // throws RankDeficient when not full rank
  const auto n = s.design.rows();
  const auto k = s.design.cols();
  const Vector mu = s.design * s.beta_true;
  const double c = s.radius.c;
  const double c2 = s.radius.c_squared();
  const std::int64_t N = s.replicates;

  Matrix beta_c(N, k);
  Matrix beta_0(N, k);
  Vector stationarity(N), complementarity(N), primal_violation(N), multiplier(N),
      sphere_err(N);
  std::vector<char> interior(static_cast<std::size_t>(N));

  const Matrix gram = s.design.transpose() * s.design;

  parallel_batches(N, 1024, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t r = lo; r < hi; ++r) {
      Philox rng(s.seed, static_cast<std::uint64_t>(r));
      const Vector y = mu + gaussian_vector(rng, n, s.sigma);
      const LengthFunction f = LengthFunction::from_canonical(svd, y);

      const Vector theta_ols =
          f.projected_response().cwiseQuotient(f.spectrum());
      const Vector bl = svd.right * theta_ols;
      const double nl = bl.norm();

      const double lam_c = solve_sphere_multiplier(f, c);
      const Vector bc = f.coefficients(RidgeParam{lam_c}).values;
      beta_c.row(r) = bc;
      sphere_err(r) = std::abs(bc.norm() - c) / c;

      const bool inside = nl < c;
      interior[static_cast<std::size_t>(r)] = inside ? 1 : 0;
      const double lam0 = inside ? 0.0 : lam_c;
      const Vector b0 = inside ? bl : bc;
      beta_0.row(r) = b0;
      multiplier(r) = lam0;

      const Vector rhs = s.design.transpose() * y;
      stationarity(r) = (gram * b0 + lam0 * b0 - rhs).norm();
      complementarity(r) = std::abs(lam0 * (c2 - b0.squaredNorm()));
      primal_violation(r) = std::max(0.0, b0.norm() - c);
    }
  });

  MixtureReport rep;
  rep.replicates = N;
  rep.seed = s.seed;
  std::int64_t inside_count = 0;
  double max_boundary_diff = 0.0, max_interior_diff = 0.0;
  for (std::int64_t r = 0; r < N; ++r) {
    if (interior[static_cast<std::size_t>(r)]) {
      ++inside_count;
    } else {
      max_boundary_diff =
          std::max(max_boundary_diff, (beta_0.row(r) - beta_c.row(r)).norm());
    }
  }
  rep.interior_count = inside_count;
  rep.alpha_hat = static_cast<double>(inside_count) / static_cast<double>(N);
  rep.alpha_ci_halfwidth =
      1.959963984540054 *
      std::sqrt(rep.alpha_hat * (1.0 - rep.alpha_hat) / static_cast<double>(N));
  rep.sphere_residency_max_err = sphere_err.maxCoeff();
  rep.kkt.max_stationarity = stationarity.maxCoeff();
  rep.kkt.max_complementarity = complementarity.maxCoeff();
  rep.kkt.max_primal_violation = primal_violation.maxCoeff();
  rep.kkt.min_multiplier = multiplier.minCoeff();
  rep.max_boundary_branch_diff = max_boundary_diff;
  rep.max_interior_branch_diff = max_interior_diff;
  rep.degenerate = (inside_count == 0 || inside_count == N) && N >= 1000;

  // Empirical covariance of the sphere-constrained samples.
  {
    const Eigen::RowVectorXd mean = beta_c.colwise().mean();
    const Matrix centered = beta_c.rowwise() - mean;
    const Matrix cov = centered.transpose() * centered /
                       static_cast<double>(std::max<std::int64_t>(N - 1, 1));
    Eigen::SelfAdjointEigenSolver<Matrix> es(cov, Eigen::EigenvaluesOnly);
    rep.covariance_spectrum = es.eigenvalues();  // ascending
  }

  // Two-sample mixture check: interior beta_0 draws against independently
  // rejection-sampled beta_L draws truncated to the ball.
  if (!rep.degenerate && inside_count >= 2) {
    const int n1 = static_cast<int>(
        std::min<std::int64_t>(inside_count, s.mixture_sample_cap));
    Matrix first(n1, k);
    int got = 0;
    for (std::int64_t r = 0; r < N && got < n1; ++r)
      if (interior[static_cast<std::size_t>(r)]) first.row(got++) = beta_0.row(r);

    Matrix second(n1, k);
    int accepted = 0;
    const std::int64_t max_attempts = 2000ll * n1;
    std::int64_t attempt = 0;
    for (; attempt < max_attempts && accepted < n1; ++attempt) {
      Philox rng(s.seed, kRejectionTag + static_cast<std::uint64_t>(attempt));
      const Vector y = mu + gaussian_vector(rng, n, s.sigma);
      const Vector u = svd.left.transpose() * y;
      const Vector bl = svd.right * u.cwiseQuotient(svd.spectrum).eval();
      if (bl.squaredNorm() < c2) second.row(accepted++) = bl;
    }
    if (accepted == n1) {
      rep.mixture_consistency.n_first = n1;
      rep.mixture_consistency.n_second = n1;
      const double observed = energy_distance(first, second);
      rep.mixture_consistency.statistic = observed;

      const int m = 2 * n1;
      Matrix pooled(m, k);
      pooled.topRows(n1) = first;
      pooled.bottomRows(n1) = second;
      Matrix dist(m, m);
      for (int i = 0; i < m; ++i) {
        dist(i, i) = 0.0;
        for (int j = i + 1; j < m; ++j) {
          const double d = (pooled.row(i) - pooled.row(j)).norm();
          dist(i, j) = d;
          dist(j, i) = d;
        }
      }
      auto stat_for = [&](const std::vector<int>& label) {
        double sab = 0.0, saa = 0.0, sbb = 0.0;
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            const double d = dist(i, j);
            if (label[i] != label[j])
              sab += d;
            else if (label[i] == 0)
              saa += d;
            else
              sbb += d;
          }
        const double nn = static_cast<double>(n1);
        return 2.0 * sab / (nn * nn) - 2.0 * saa / (nn * nn) - 2.0 * sbb / (nn * nn);
      };
      std::vector<int> label(m);
      for (int i = 0; i < m; ++i) label[i] = i < n1 ? 0 : 1;
      int at_least = 0;
      Philox perm_rng(s.seed, kPermutationTag);
      for (int p = 0; p < s.permutations; ++p) {
        for (int i = m - 1; i > 0; --i) {
          const int j = static_cast<int>(perm_rng.next_uniform() * (i + 1));
          std::swap(label[i], label[std::min(j, i)]);
        }
        if (stat_for(label) >= observed) ++at_least;
      }
      rep.mixture_consistency.p_value =
          (1.0 + at_least) / (1.0 + static_cast<double>(s.permutations));
    }
  }
  return rep;
}

RankCheck rank_deficiency_check(const MixtureReport& report, Eigen::Index k) {
  RankCheck out;
  if (report.covariance_spectrum.size() != k || k < 2)
    throw ShapeMismatch("rank_deficiency_check: covariance spectrum size mismatch");
  out.smallest = report.covariance_spectrum(0);
  out.second_smallest = report.covariance_spectrum(1);
  out.rank_deficient = out.smallest <= 1e-3 * out.second_smallest;
  return out;
}

}  // namespace ridge
