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

#include "decor/uqp.hpp"

#include <cmath>
#include <limits>

#include "decor/errors.hpp"

namespace decor {

void UqpMatrix::validate() const {
    if (!is_hermitian(chi, kHermitianTol))
        throw DomainError("UQP matrix is not Hermitian within 1e-12");
    if (hermitian_min_eigenvalue(chi) < -1e-8)
        throw DomainError("UQP matrix has an eigenvalue below -1e-8");
}

double min_eigenvalue(const CMat &h) {
    if (h.rows() != h.cols())
        throw DomainError("min_eigenvalue needs a square matrix");
    if (!is_hermitian(h, 1e-10))
        throw DomainError("min_eigenvalue needs a Hermitian matrix (deviation above 1e-10)");
    return hermitian_min_eigenvalue(h);
}

UqpMatrix build_chi(const QuadraticPair &pair, double f_star) {
    if (f_star < 0.0)
        throw DomainError("build_chi needs f_star >= 0");
    CMat chi_tilde = hermitized(pair.A - f_star * pair.B);
    const double pad = kLoadingPadScale * std::max(1.0, chi_tilde.norm());
    const double lambda = std::max(0.0, -hermitian_min_eigenvalue(chi_tilde)) + pad;
    chi_tilde.diagonal().array() += lambda;
    return UqpMatrix{std::move(chi_tilde), lambda};
}

UnimodularCode pmli_step(const UqpMatrix &chi, const UnimodularCode &s) {
    if (chi.chi.cols() != s.size())
        throw DomainError("UQP matrix dimension does not match code length");
    return UnimodularCode(unit_modulus_projection(chi.chi * s.vec()));
}

namespace {

double quadratic_form(const CMat &m, const CVec &v) { return std::real(v.dot(m * v)); }

} // namespace

PmliResult pmli_solve(const UqpMatrix &chi, const UnimodularCode &s0, int max_iters, double tol) {
    if (max_iters < 1)
        throw DomainError("pmli_solve needs max_iters >= 1");

    UnimodularCode s = s0;
    double prev = quadratic_form(chi.chi, s.vec());
    PmliResult result{s, 0, {}};
    result.objective_trace.reserve(static_cast<std::size_t>(max_iters));

    for (int it = 0; it < max_iters; ++it) {
        s = pmli_step(chi, s);
        const double obj = quadratic_form(chi.chi, s.vec());
        result.objective_trace.push_back(obj);
        ++result.iterations;
        if (std::abs(obj - prev) < tol * std::max(1.0, std::abs(prev))) {
            prev = obj;
            break;
        }
        prev = obj;
    }
    result.code = s;
    return result;
}

DesignResult dinkelbach_design(const CVec &y, const UnimodularCode &s0, int outer_iters, int inner_iters) {
    if (outer_iters < 0 || inner_iters < 1)
        throw DomainError("dinkelbach_design needs outer_iters >= 0 and inner_iters >= 1");

    DesignResult result{s0, {sinr_objective(s0, y)}};
    if (outer_iters == 0)
        return result;

    const QuadraticPair pair = build_quadratic_pair(y);
    UnimodularCode s = s0;
    for (int outer = 0; outer < outer_iters; ++outer) {
        const double f_star = result.objective_trace.back();
        const UqpMatrix chi = build_chi(pair, f_star);
        s = pmli_solve(chi, s, inner_iters).code;
        result.objective_trace.push_back(sinr_objective(s, y));
    }
    result.code = s;
    return result;
}

DesignResult dinkelbach_design_multistart(const CVec &y, int restarts, int outer_iters, int inner_iters, Rng &rng) {
    if (restarts < 1)
        throw DomainError("multistart design needs restarts >= 1");

    DesignResult best{UnimodularCode::all_ones(y.size()), {}};
    double best_value = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        const UnimodularCode s0 = UnimodularCode::random_phases(y.size(), rng);
        try {
            DesignResult candidate = dinkelbach_design(y, s0, outer_iters, inner_iters);
            if (candidate.objective_trace.back() > best_value) {
                best_value = candidate.objective_trace.back();
                best = std::move(candidate);
            }
        } catch (const DegenerateDenominatorError &) {
            // Start landed on a degenerate point; try the next one.
        }
    }
    if (best.objective_trace.empty())
        throw DegenerateDenominatorError(0.0);
    return best;
}

} // namespace decor
