#pragma once

#include <Eigen/Dense>

#include "ridge/errors.hpp"

namespace ridge {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Thin singular decomposition X = left * Diag(spectrum) * right', with
// orthonormal left (n x k), orthogonal right (k x k), and spectrum sorted
// descending. Signs are fixed so that the largest-magnitude entry of each
// right-singular vector is positive, making the factors deterministic.
struct SvdFactors {
  Matrix left;      // n x k, orthonormal columns (P)
  Vector spectrum;  // k, xi_1 >= ... >= xi_k > 0
  Matrix right;     // k x k, orthogonal (Q)

  Matrix reconstruct() const { return left * spectrum.asDiagonal() * right.transpose(); }
};

inline constexpr double kDefaultRankTolerance = 1e-12;

// Thin SVD of a full-column-rank matrix. Throws RankDeficient when the
// smallest singular value falls below rank_tolerance * largest.
SvdFactors svd_thin(const Matrix& m, double rank_tolerance = kDefaultRankTolerance);

// c1 = xi_1 / xi_k of an already-computed spectrum.
double spectral_condition(const Vector& spectrum);

// Frobenius norm and distance.
double frobenius_norm(const Matrix& m);
double frobenius_distance(const Matrix& a, const Matrix& b);

// Solves a*z = rhs for symmetric positive definite a (Cholesky). Throws
// NotPositiveDefinite when the factorization fails or a is not symmetric.
Vector solve_spd(const Matrix& a, const Vector& rhs);

}  // namespace ridge
