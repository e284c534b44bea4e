#pragma once

#include <string>
#include <vector>

#include "ridge/linalg.hpp"

namespace ridge {

enum class Space { original, standardized, canonical };

std::string to_string(Space s);

// A coefficient estimate tagged with the space its entries live in.
struct CoefficientVector {
  Vector values;
  Space space = Space::standardized;
};

// A raw regression dataset: response in original units, predictors in
// original units, one name per predictor.
struct Dataset {
  Vector response;                  // n
  Matrix predictors;                // n x k
  std::vector<std::string> names;   // k predictor labels
  std::string response_name;

  Eigen::Index n() const { return response.size(); }
  Eigen::Index k() const { return predictors.cols(); }
};

// Centered/scaled model: columns of z have mean 0 and unit Euclidean norm,
// so z'z is the predictor correlation matrix. The response is centered but
// never scaled; residual norms stay in response units.
struct StandardizedModel {
  Matrix z;          // n x k
  Vector y_centered; // n
  double y_mean = 0.0;
  Vector centers;    // k column means of the original predictors
  Vector scales;     // k centered-column Euclidean norms
  SvdFactors svd;    // of z

  Eigen::Index n() const { return z.rows(); }
  Eigen::Index k() const { return z.cols(); }
};

// Strict numeric CSV: header row, first column the response, remaining
// columns the predictors. Throws ParseError / TooFewRows.
Dataset load_csv(const std::string& path);

// Parses CSV content already in memory (used by load_csv and tests).
Dataset parse_csv(const std::string& content, const std::string& origin = "<memory>");

StandardizedModel standardize(const Dataset& d);

// values[j] / scales[j]; the "rates of change" per original predictor unit.
CoefficientVector to_original_space(const CoefficientVector& c, const StandardizedModel& m);

// values[j] * scales[j]; inverse of to_original_space.
CoefficientVector to_standardized_space(const CoefficientVector& c, const StandardizedModel& m);

// Intercept of the original-units model implied by original-space slopes.
double intercept(const CoefficientVector& original_coeffs, const StandardizedModel& m);

}  // namespace ridge
