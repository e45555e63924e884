// SPDX-License-Identifier: Apache-2.0
//
// decor: unimodular radar code design with an unfolded power-method network
// Copyright (C) 2026 The decor authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef DECOR_NUMERIC_HPP
#define DECOR_NUMERIC_HPP

#include <complex>

#include <Eigen/Dense>

namespace decor {

using cxd = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Max entrywise deviation from M = M^H.
double hermitian_deviation(const CMat &m);

bool is_hermitian(const CMat &m, double tol);

/// (M + M^H) / 2. The result is Hermitian exactly, not just up to rounding.
CMat hermitized(const CMat &m);

/// Smallest eigenvalue of a matrix assumed Hermitian (no symmetry check).
double hermitian_min_eigenvalue(const CMat &m);

} // namespace decor

#endif // DECOR_NUMERIC_HPP
