// Copyright 2026 The vnrank Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

/**
 * @file classify.hpp
 * Rank screens for zero quantum correlation.
 *
 * If a state is invariant under a von Neumann measurement on A, the lifted
 * measurement matrix M fixes R and every column of T, so (R | T) lies in
 * the (m-1)-dimensional range of M. The symmetric argument on B bounds
 * (S | T^T) by n-1, and both together bound [[1, S^T], [R, T]] by m.
 *
 * Every screen is one-directional. ruled_out == true proves the state is
 * not in the target class; ruled_out == false is inconclusive.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "vnrank/bloch.hpp"
#include "vnrank/linalg.hpp"

namespace vnrank {

enum class CorrelationClass { classical_quantum, quantum_classical, classical_classical };

[[nodiscard]] inline std::string to_string(CorrelationClass c) {
    switch (c) {
    case CorrelationClass::classical_quantum:
        return "classical-quantum";
    case CorrelationClass::quantum_classical:
        return "quantum-classical";
    case CorrelationClass::classical_classical:
        return "classical-classical";
    }
    return "unknown";
}

struct Verdict {
    CorrelationClass target_class = CorrelationClass::classical_quantum;
    bool ruled_out = false;
    int computed_rank = 0;
    int threshold = 0;
    RealMatrix evidence;

    [[nodiscard]] std::string status() const { return ruled_out ? "RULED-OUT" : "INCONCLUSIVE"; }
};

namespace detail {
inline Verdict rank_verdict(CorrelationClass target, RealMatrix evidence, int threshold, const Tolerance &tol) {
    const int rank = numerical_rank(evidence, tol);
    return Verdict{target, rank > threshold, rank, threshold, std::move(evidence)};
}

inline RealMatrix hconcat(const RealVector &v, const RealMatrix &m) {
    RealMatrix out(m.rows(), m.cols() + 1);
    out.col(0) = v;
    out.rightCols(m.cols()) = m;
    return out;
}
} // namespace detail

/// rank(R | T) > m - 1 rules out classical-quantum.
[[nodiscard]] inline Verdict check_classical_quantum(const BlochForm &bf, const Tolerance &tol = {}) {
    bf.check_shapes();
    return detail::rank_verdict(CorrelationClass::classical_quantum, detail::hconcat(bf.r, bf.t), bf.m - 1, tol);
}

/// rank(S | T^T) > n - 1 rules out quantum-classical.
[[nodiscard]] inline Verdict check_quantum_classical(const BlochForm &bf, const Tolerance &tol = {}) {
    bf.check_shapes();
    return detail::rank_verdict(CorrelationClass::quantum_classical, detail::hconcat(bf.s, bf.t.transpose()),
                                bf.n - 1, tol);
}

/// rank([[1, S^T], [R, T]]) > min(m, n) rules out classical-classical.
[[nodiscard]] inline Verdict check_classical_classical(const BlochForm &bf, const Tolerance &tol = {}) {
    if (bf.m > bf.n) {
        return check_classical_classical(swapped(bf), tol);
    }
    return detail::rank_verdict(CorrelationClass::classical_classical, correlation_matrix(bf), bf.m, tol);
}

/**
 * Baseline screen on the full correlation matrix: a classical-quantum state
 * has rank([[1, S^T], [R, T]]) <= m. Never rules out more than
 * check_classical_quantum does.
 */
[[nodiscard]] inline Verdict dakic_condition(const BlochForm &bf, const Tolerance &tol = {}) {
    return detail::rank_verdict(CorrelationClass::classical_quantum, correlation_matrix(bf), bf.m, tol);
}

struct BellDiagonalSpec {
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;

    /// The four Bell-basis weights; the state is valid iff all are >= 0.
    [[nodiscard]] std::array<double, 4> weights() const {
        return {(1.0 - t1 - t2 - t3) / 4.0, (1.0 - t1 + t2 + t3) / 4.0, (1.0 + t1 - t2 + t3) / 4.0,
                (1.0 + t1 + t2 - t3) / 4.0};
    }

    [[nodiscard]] bool in_tetrahedron(const Tolerance &tol = {}) const {
        const auto w = weights();
        return std::all_of(w.begin(), w.end(), [&](double x) { return x >= -tol.eq_abs(); });
    }

    [[nodiscard]] bool in_octahedron(const Tolerance &tol = {}) const {
        return std::abs(t1) + std::abs(t2) + std::abs(t3) <= 1.0 + tol.eq_abs();
    }
};

/// (I + sum_i t_i sigma_i (x) sigma_i) / 4.
[[nodiscard]] inline ComplexMatrix bell_diagonal_state(const BellDiagonalSpec &spec) {
    ComplexMatrix s1(2, 2), s2(2, 2), s3(2, 2);
    s1 << 0, 1, 1, 0;
    s2 << 0, -kI, kI, 0;
    s3 << 1, 0, 0, -1;
    ComplexMatrix rho = ComplexMatrix::Identity(4, 4);
    rho += spec.t1 * kron(s1, s1) + spec.t2 * kron(s2, s2) + spec.t3 * kron(s3, s3);
    return rho / 4.0;
}

struct BellDiagonalResult {
    bool verdict_qq = false;
    bool separable = false;
    int nonzero_count = 0;
};

/**
 * Exact classification of a Bell-diagonal state: quantum-quantum iff more
 * than one t_i is nonzero, separable iff |t1| + |t2| + |t3| <= 1. A t_i
 * counts as nonzero when it exceeds rank_rel * max|t|, matching
 * numerical_rank(diag(t)).
 */
[[nodiscard]] inline BellDiagonalResult classify_bell_diagonal(const BellDiagonalSpec &spec,
                                                               const Tolerance &tol = {}) {
    if (!std::isfinite(spec.t1) || !std::isfinite(spec.t2) || !std::isfinite(spec.t3) ||
        !spec.in_tetrahedron(tol)) {
        throw InvalidStateError("classify_bell_diagonal: (t1, t2, t3) lies outside the state tetrahedron");
    }
    const std::array<double, 3> t{std::abs(spec.t1), std::abs(spec.t2), std::abs(spec.t3)};
    const double tmax = *std::max_element(t.begin(), t.end());
    int count = 0;
    if (tmax > tol.eq_abs()) {
        count = static_cast<int>(std::count_if(t.begin(), t.end(), [&](double x) { return x > tol.rank_rel() * tmax; }));
    }
    return BellDiagonalResult{count > 1, spec.in_octahedron(tol), count};
}

struct OneSidedVerdicts {
    Verdict classical_quantum;
    Verdict quantum_classical;

    [[nodiscard]] bool ruled_out() const { return classical_quantum.ruled_out && quantum_classical.ruled_out; }
};

/**
 * The m (x) m family rho_2 = (I + sum_i t_i mu_i (x) mu_i) / m^2 in the
 * canonical basis: R = S = 0, T = diag(t). Both one-sided classes are ruled
 * out once more than m - 1 of the t_i are nonzero.
 */
[[nodiscard]] inline OneSidedVerdicts check_rho2_family(const RealVector &t, int m, const Tolerance &tol = {}) {
    if (t.size() != m * m - 1) {
        throw ShapeError("check_rho2_family: t must have m^2 - 1 entries");
    }
    BlochForm bf = zero_bloch_form(m, m);
    bf.t = t.asDiagonal();
    return {check_classical_quantum(bf, tol), check_quantum_classical(bf, tol)};
}

} // namespace vnrank
