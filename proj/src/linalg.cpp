#include "ridge/linalg.hpp"

#include <cmath>

namespace ridge {

SvdFactors svd_thin(const Matrix& m, double rank_tolerance) {
  if (m.rows() < 1 || m.cols() < 1) throw ShapeMismatch("svd_thin: empty matrix");
  if (m.rows() < m.cols())
    throw ShapeMismatch("svd_thin: need rows >= cols for a thin decomposition");
  if (!m.allFinite()) throw DomainError("svd_thin: matrix has non-finite entries");

  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SvdFactors f;
  f.left = svd.matrixU();
  f.spectrum = svd.singularValues();
  f.right = svd.matrixV();

  const auto k = m.cols();
  if (f.spectrum(k - 1) <= rank_tolerance * f.spectrum(0))
    throw RankDeficient("svd_thin: smallest singular value " +
                        std::to_string(f.spectrum(k - 1)) + " below tolerance " +
                        std::to_string(rank_tolerance * f.spectrum(0)));

  // Deterministic sign convention: largest-magnitude entry of each right
  // vector made positive.
  for (Eigen::Index j = 0; j < k; ++j) {
    Eigen::Index imax = 0;
    f.right.col(j).cwiseAbs().maxCoeff(&imax);
    if (f.right(imax, j) < 0.0) {
      f.right.col(j) = -f.right.col(j);
      f.left.col(j) = -f.left.col(j);
    }
  }
  return f;
}

double spectral_condition(const Vector& spectrum) {
  if (spectrum.size() < 1) throw ShapeMismatch("spectral_condition: empty spectrum");
  const double smallest = spectrum(spectrum.size() - 1);
  if (smallest <= 0.0) throw DomainError("spectral_condition: nonpositive singular value");
  return spectrum(0) / smallest;
}

double frobenius_norm(const Matrix& m) { return m.norm(); }

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("frobenius_distance: " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
  return (a - b).norm();
}

Vector solve_spd(const Matrix& a, const Vector& rhs) {
  if (a.rows() != a.cols()) throw ShapeMismatch("solve_spd: matrix not square");
  if (a.rows() != rhs.size()) throw ShapeMismatch("solve_spd: rhs size mismatch");
  const double scale = a.cwiseAbs().maxCoeff();
  if (!((a - a.transpose()).cwiseAbs().maxCoeff() <= 1e-10 * (scale > 0 ? scale : 1.0)))
    throw NotPositiveDefinite("solve_spd: matrix not symmetric");
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("solve_spd: Cholesky factorization failed");
  return llt.solve(rhs);
}

}  // namespace ridge
