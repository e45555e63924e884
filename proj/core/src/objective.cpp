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

#include "decor/objective.hpp"

#include <cmath>
#include <string>

#include "decor/errors.hpp"

namespace decor {

RMat shift_matrix(Eigen::Index n, Eigen::Index k) {
    if (std::abs(k) >= n)
        throw InvalidOffsetError(k, n);
    RMat j = RMat::Zero(n, n);
    for (Eigen::Index l = 0; l < n; ++l) {
        const Eigen::Index m = l + k;
        if (m >= 0 && m < n)
            j(l, m) = 1.0;
    }
    return j;
}

CVec shifted(const CVec &y, Eigen::Index k) {
    const Eigen::Index n = y.size();
    if (std::abs(k) >= n)
        throw InvalidOffsetError(k, n);
    CVec out = CVec::Zero(n);
    if (k >= 0)
        out.head(n - k) = y.tail(n - k);
    else
        out.tail(n + k) = y.head(n + k);
    return out;
}

void QuadraticPair::validate() const {
    if (!is_hermitian(A, kHermitianTol) || !is_hermitian(B, kHermitianTol))
        throw DomainError("quadratic pair is not Hermitian within 1e-12");
    Eigen::SelfAdjointEigenSolver<CMat> solver(A, Eigen::EigenvaluesOnly);
    const RVec &ev = solver.eigenvalues(); // ascending
    const Eigen::Index last = ev.size() - 1;
    if (last >= 1 && std::abs(ev(last - 1)) > 1e-10 * std::max(1.0, ev(last)))
        throw DomainError("matrix A has rank > 1");
    if (hermitian_min_eigenvalue(B) < -1e-10)
        throw DomainError("matrix B has an eigenvalue below -1e-10");
}

QuadraticPair build_quadratic_pair(const CVec &y) {
    const Eigen::Index n = y.size();
    if (n < 2)
        throw DomainError("quadratic pair needs y of length >= 2");

    QuadraticPair pair;
    pair.A = y * y.adjoint();
    pair.B = CMat::Zero(n, n);
    for (Eigen::Index k = -(n - 1); k <= n - 1; ++k) {
        if (k == 0)
            continue;
        const CVec v = shifted(y, k);
        pair.B.noalias() += v * v.adjoint();
    }
    return pair;
}

SinrParts sinr_parts(const UnimodularCode &s, const CVec &y) {
    const Eigen::Index n = y.size();
    if (s.size() != n)
        throw DomainError("code length " + std::to_string(s.size()) + " does not match signal length " +
                          std::to_string(n));
    const CVec &code = s.vec();

    SinrParts parts{};
    parts.num = std::norm(code.dot(y));
    parts.den = 0.0;
    for (Eigen::Index k = -(n - 1); k <= n - 1; ++k) {
        if (k == 0)
            continue;
        // s^H (J_k y) over the overlapping window only.
        const cxd corr = k >= 0 ? code.head(n - k).dot(y.tail(n - k)) : code.tail(n + k).dot(y.head(n + k));
        parts.den += std::norm(corr);
    }
    return parts;
}

double sinr_objective(const UnimodularCode &s, const CVec &y) {
    const SinrParts parts = sinr_parts(s, y);
    if (parts.den <= kDenominatorFloor)
        throw DegenerateDenominatorError(parts.den);
    return parts.num / parts.den;
}

} // namespace decor
