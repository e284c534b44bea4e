#include "ridge/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ridge {

std::string to_string(Space s) {
  switch (s) {
    case Space::original: return "original";
    case Space::standardized: return "standardized";
    case Space::canonical: return "canonical";
  }
  return "?";
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, int row, int col) {
  const std::string s = trim(raw);
  if (s.empty()) throw ParseError(row, col, "empty cell");
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError(row, col, "not a number: '" + s + "'");
  if (!std::isfinite(v)) throw ParseError(row, col, "non-finite value");
  return v;
}

}  // namespace

Dataset parse_csv(const std::string& content, const std::string& origin) {
  std::stringstream in(content);
  std::string line;
  if (!std::getline(in, line))
    throw ParseError(0, 0, "empty file: " + origin);
  auto header = split_line(line);
  if (header.size() < 2)
    throw ParseError(1, 1, "need a response column and at least one predictor");
  const int k = static_cast<int>(header.size()) - 1;

  std::vector<std::vector<double>> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto cells = split_line(line);
    if (static_cast<int>(cells.size()) != k + 1)
      throw ParseError(lineno, static_cast<int>(cells.size()),
                       "expected " + std::to_string(k + 1) + " cells, got " +
                           std::to_string(cells.size()));
    std::vector<double> vals(k + 1);
    for (int j = 0; j <= k; ++j) vals[j] = parse_cell(cells[j], lineno, j + 1);
    rows.push_back(std::move(vals));
  }

  const long n = static_cast<long>(rows.size());
  if (n < k + 2) throw TooFewRows(n, k + 2);

  Dataset d;
  d.response_name = trim(header[0]);
  for (int j = 1; j <= k; ++j) d.names.push_back(trim(header[j]));
  d.response.resize(n);
  d.predictors.resize(n, k);
  for (long i = 0; i < n; ++i) {
    d.response(i) = rows[i][0];
    for (int j = 0; j < k; ++j) d.predictors(i, j) = rows[i][j + 1];
  }
  return d;
}

Dataset load_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_csv(buf.str(), path);
}

StandardizedModel standardize(const Dataset& d) {
  const auto n = d.n();
  const auto k = d.k();
  StandardizedModel m;
  m.centers = d.predictors.colwise().mean();
  m.z = d.predictors.rowwise() - m.centers.transpose();
  m.scales.resize(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double s = m.z.col(j).norm();
    if (s <= 0.0 || s < 1e-14 * d.predictors.col(j).cwiseAbs().maxCoeff())
      throw ConstantColumn(static_cast<int>(j) + 1);
    m.scales(j) = s;
    m.z.col(j) /= s;
  }
  m.y_mean = d.response.mean();
  m.y_centered = d.response.array() - m.y_mean;
  m.svd = svd_thin(m.z);
  (void)n;
  return m;
}

CoefficientVector to_original_space(const CoefficientVector& c, const StandardizedModel& m) {
  if (c.space != Space::standardized)
    throw SpaceMismatch("to_original_space: expected standardized input, got " +
                        to_string(c.space));
  if (c.values.size() != m.k())
    throw ShapeMismatch("to_original_space: coefficient length mismatch");
  CoefficientVector out;
  out.values = c.values.cwiseQuotient(m.scales);
  out.space = Space::original;
  return out;
}

CoefficientVector to_standardized_space(const CoefficientVector& c, const StandardizedModel& m) {
  if (c.space != Space::original)
    throw SpaceMismatch("to_standardized_space: expected original input, got " +
                        to_string(c.space));
  if (c.values.size() != m.k())
    throw ShapeMismatch("to_standardized_space: coefficient length mismatch");
  CoefficientVector out;
  out.values = c.values.cwiseProduct(m.scales);
  out.space = Space::standardized;
  return out;
}

double intercept(const CoefficientVector& original_coeffs, const StandardizedModel& m) {
  if (original_coeffs.space != Space::original)
    throw SpaceMismatch("intercept: expected original-space coefficients");
  return m.y_mean - m.centers.dot(original_coeffs.values);
}

}  // namespace ridge
