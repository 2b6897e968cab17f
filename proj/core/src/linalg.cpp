// Copyright 2026 The oam authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oam/linalg.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace oam {

bool is_finite(const Vector& x) { return x.allFinite(); }

namespace {

// Deterministic restart when the current iterate lands in the null space:
// walk the standard basis until a column with nonzero image is found.
Vector nonzero_start(const Matrix& a, Eigen::Index from) {
  for (Eigen::Index j = from; j < a.cols(); ++j) {
    if (a.col(j).norm() > 0) return Vector::Unit(a.cols(), j);
  }
  throw std::domain_error("norm_upper_bound: no nonzero column found");
}

}  // namespace

double norm_upper_bound(const Matrix& a, double rel_tol) {
  if (!(rel_tol > 0) || rel_tol > 1e-2) {
    throw std::domain_error("norm_upper_bound: rel_tol must lie in (0, 1e-2]");
  }
  if (a.size() == 0 || a.isZero(0.0)) {
    throw std::domain_error("Landweber transform requires nonzero A");
  }

  Vector q = Vector::Ones(a.cols());
  q.normalize();
  double mu = 0;  // Rayleigh quotient for A^T A, i.e. ||A q||^2
  Eigen::Index restart = 0;
  for (int iter = 0; iter < kNormMaxIters; ++iter) {
    Vector z = a.transpose() * (a * q);
    double nz = z.norm();
    if (nz == 0) {
      q = nonzero_start(a, restart++);
      mu = 0;
      continue;
    }
    double mu_next = q.dot(z);
    q = z / nz;
    if (iter > 0 && std::abs(mu_next - mu) <= 0.1 * rel_tol * mu_next) {
      mu = mu_next;
      break;
    }
    mu = mu_next;
  }
  return std::sqrt(std::max(mu, 0.0)) * (1.0 + rel_tol);
}

LinearMap::LinearMap(Matrix m, double rel_tol) : data(std::move(m)) {
  if (!data.allFinite()) {
    throw std::domain_error("LinearMap: entries must be finite");
  }
  norm_ub = (data.size() == 0 || data.isZero(0.0))
                ? 0.0
                : norm_upper_bound(data, rel_tol);
}

Vector apply(const LinearMap& a, const Vector& x) {
  if (x.size() != a.cols()) {
    throw ShapeError("apply: x has dim " + std::to_string(x.size()) +
                     ", expected " + std::to_string(a.cols()));
  }
  return a.data * x;
}

Vector adjoint_apply(const LinearMap& a, const Vector& y) {
  if (y.size() != a.rows()) {
    throw ShapeError("adjoint_apply: y has dim " + std::to_string(y.size()) +
                     ", expected " + std::to_string(a.rows()));
  }
  return a.data.transpose() * y;
}

LinearMap diagonal_map(const Vector& d) {
  Matrix m = Matrix::Zero(d.size(), d.size());
  m.diagonal() = d;
  return LinearMap(std::move(m));
}

bool is_diagonal(const LinearMap& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j && a.data(i, j) != 0.0) return false;
    }
  }
  return true;
}

LinearMap load_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix CSV file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) {
      size_t pos = 0;
      double v = 0;
      try {
        v = std::stod(field, &pos);
      } catch (const std::exception&) {
        throw ConfigError("malformed CSV field '" + field + "' in " + path);
      }
      while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
      if (pos != field.size()) {
        throw ConfigError("malformed CSV field '" + field + "' in " + path);
      }
      row.push_back(v);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ConfigError("ragged CSV rows in " + path);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("empty matrix CSV file: " + path);
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
  }
  return LinearMap(std::move(m));
}

}  // namespace oam
