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

#ifndef OAM_LINALG_HPP
#define OAM_LINALG_HPP

#include <Eigen/Dense>
#include <string>

#include "oam/errors.hpp"

namespace oam {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kNormRelTol = 1e-8;
inline constexpr int kNormMaxIters = 10000;

bool is_finite(const Vector& x);

/// Certified upper bound on the spectral norm: power iteration on A^T A with a
/// deterministic all-ones start, then a (1 + rel_tol) safety factor. The bound
/// must never underestimate ||A||; an underestimate would enlarge the Landweber
/// step beyond its admissible range.
///
/// Throws std::domain_error for the zero map or rel_tol outside (0, 1e-2].
double norm_upper_bound(const Matrix& a, double rel_tol = kNormRelTol);

/// Bounded linear map between the two spaces, with adjoint application and a
/// cached certified norm bound. The zero map is constructible (norm_ub == 0)
/// but rejected by every Landweber operation.
struct LinearMap {
  Matrix data;         // rows() x cols()
  double norm_ub = 0;  // certified: ||A v|| <= norm_ub * ||v||

  LinearMap() = default;
  explicit LinearMap(Matrix m, double rel_tol = kNormRelTol);

  Eigen::Index rows() const { return data.rows(); }
  Eigen::Index cols() const { return data.cols(); }
  bool is_zero() const { return norm_ub == 0; }
};

Vector apply(const LinearMap& a, const Vector& x);
Vector adjoint_apply(const LinearMap& a, const Vector& y);

LinearMap diagonal_map(const Vector& d);
bool is_diagonal(const LinearMap& a);

/// Row-major, header-free CSV: one matrix row per line.
LinearMap load_matrix_csv(const std::string& path);

}  // namespace oam

#endif  // OAM_LINALG_HPP
