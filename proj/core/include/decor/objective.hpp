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

#ifndef DECOR_OBJECTIVE_HPP
#define DECOR_OBJECTIVE_HPP

#include "decor/types.hpp"

namespace decor {

/// Denominators at or below this are treated as physically degenerate
/// rather than numerically tiny; the criterion is then undefined.
inline constexpr double kDenominatorFloor = 1e-30;

/// Shift matrix J_k: entry (l, m) is 1 iff m - l = k. J_0 is the identity
/// and J_{-k} = J_k^H. Throws InvalidOffsetError for |k| >= n.
RMat shift_matrix(Eigen::Index n, Eigen::Index k);

/// J_k y without forming the matrix: out_l = y_{l+k}, zero outside the window.
CVec shifted(const CVec &y, Eigen::Index k);

/// The two quadratic forms behind the design criterion: A = y y^H carries the
/// matched-filter target power, B aggregates the 2N-2 shifted copies.
struct QuadraticPair {
    CMat A;
    CMat B;

    /// Throws DomainError unless A, B are Hermitian within 1e-12, A has
    /// rank <= 1 and B has min eigenvalue >= -1e-10.
    void validate() const;
};

/// A = y y^H, B = sum over k != 0 of (J_k y)(J_k y)^H. The accumulation runs
/// over shifted-vector outer products, O(N^2) per term; agreement with the
/// J_k A J_k^H triple-product route is a test target.
QuadraticPair build_quadratic_pair(const CVec &y);

/// Numerator and denominator of the criterion, via shifted inner products:
/// num = |s^H y|^2, den = sum over k != 0 of |s^H J_k y|^2.
struct SinrParts {
    double num;
    double den;
};
SinrParts sinr_parts(const UnimodularCode &s, const CVec &y);

/// f(s) = |s^H y|^2 / sum_{k != 0} |s^H J_k y|^2. Agrees with the quadratic
/// form ratio s^H A s / s^H B s to 1e-10 relative. Throws
/// DegenerateDenominatorError when the denominator hits the floor.
double sinr_objective(const UnimodularCode &s, const CVec &y);

} // namespace decor

#endif // DECOR_OBJECTIVE_HPP
