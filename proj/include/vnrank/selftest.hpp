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

// Compact property corpus run by `vnrank selftest`.

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "vnrank/vnrank.hpp"

namespace vnrank::selftest {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The two-qubit state (I + (Z(x)I + I(x)Z)/x + (X(x)X + Z(x)Z)/x^2) / 4, valid for x >= sqrt2.
[[nodiscard]] inline ComplexMatrix rho0_state(double x) {
    ComplexMatrix sx(2, 2), sz(2, 2);
    sx << 0, 1, 1, 0;
    sz << 1, 0, 0, -1;
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    ComplexMatrix rho = kron(id, id) + (kron(sz, id) + kron(id, sz)) / x + (kron(sx, sx) + kron(sz, sz)) / (x * x);
    return rho / 4.0;
}

namespace detail {
inline const int kPairs[3][2] = {{2, 2}, {2, 3}, {3, 3}};

template <typename F> CheckResult run_check(std::string name, F &&body) {
    std::ostringstream detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception &e) {
        detail << "exception: " << e.what();
        ok = false;
    }
    return CheckResult{std::move(name), ok, detail.str()};
}
} // namespace detail

[[nodiscard]] inline std::vector<CheckResult> run(Seed seed, const Tolerance &tol = {}) {
    std::vector<CheckResult> out;

    out.push_back(detail::run_check("basis orthonormal m=2..5", [&](std::ostream &os) {
        for (int m = 2; m <= 5; ++m) {
            if (!verify_orthonormal(gell_mann_basis(m), tol)) {
                os << "m=" << m;
                return false;
            }
        }
        return true;
    }));

    out.push_back(detail::run_check("computational lift m=2, m=3", [&](std::ostream &os) {
        const RealMatrix m2 = lift_matrix(VonNeumannMeasurement::computational(2), pauli_basis(), tol).matrix;
        RealVector d3(8);
        d3 << 0, 0, 1, 0, 0, 0, 0, 1;
        const RealMatrix m3 =
            lift_matrix(VonNeumannMeasurement::computational(3), gell_mann_lambda_basis(), tol).matrix;
        const RealVector d2 = RealVector::Unit(3, 2);
        const double dev = std::max((m2 - RealMatrix(d2.asDiagonal())).cwiseAbs().maxCoeff(),
                                    (m3 - RealMatrix(d3.asDiagonal())).cwiseAbs().maxCoeff());
        os << "max deviation " << dev;
        return dev <= 1e-12 && numerical_rank(m2, tol) == 1 && numerical_rank(m3, tol) == 2;
    }));

    out.push_back(detail::run_check("lift idempotent, rank m-1, C/C0 rank (100 per m)", [&](std::ostream &os) {
        double worst = 0.0;
        for (int m = 2; m <= 4; ++m) {
            const HermitianBasis b = gell_mann_basis(m);
            for (int k = 0; k < 100; ++k) {
                const ComplexMatrix u = random_unitary(m, derive(seed, 1000 * m + k));
                const auto meas = VonNeumannMeasurement::from_unitary(u, tol);
                const auto lifted = lift_matrix(meas, b, tol);
                worst = std::max({worst, lifted.idempotency_defect(), consistency_check(meas, b).max_deviation});
                if (numerical_rank(lifted.matrix, tol) != m - 1 || numerical_rank(build_C(u, tol), tol) != m - 1 ||
                    numerical_rank(build_C0(u, tol), tol) != m - 1) {
                    os << "rank failure at m=" << m << " sample " << k;
                    return false;
                }
            }
        }
        os << "worst defect " << worst;
        return worst <= 1e-9;
    }));

    out.push_back(detail::run_check("rho0 separation at x = sqrt2, 2, 10", [&](std::ostream &os) {
        for (double x : {std::sqrt(2.0), 2.0, 10.0}) {
            const BlochForm bf = decompose(rho0_state(x), 2, 2, tol);
            const auto cq = check_classical_quantum(bf, tol);
            const auto qc = check_quantum_classical(bf, tol);
            const auto dk = dakic_condition(bf, tol);
            if (!(cq.ruled_out && qc.ruled_out && !dk.ruled_out && dk.computed_rank == 2)) {
                os << "x=" << x;
                return false;
            }
        }
        return true;
    }));

    out.push_back(detail::run_check("Bell-diagonal octahedron vertices and origin inconclusive", [&](std::ostream &os) {
        const double pts[7][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}, {0, 0, 0}};
        for (const auto &p : pts) {
            const BlochForm bf = decompose(bell_diagonal_state({p[0], p[1], p[2]}), 2, 2, tol);
            if (check_classical_quantum(bf, tol).ruled_out || check_quantum_classical(bf, tol).ruled_out ||
                check_classical_classical(bf, tol).ruled_out) {
                os << "(" << p[0] << "," << p[1] << "," << p[2] << ")";
                return false;
            }
        }
        return true;
    }));

    out.push_back(detail::run_check("decompose/reconstruct round trip (50 per pair)", [&](std::ostream &os) {
        double worst = 0.0;
        for (const auto &pr : detail::kPairs) {
            for (int k = 0; k < 50; ++k) {
                const ComplexMatrix rho = random_density(pr[0] * pr[1], derive(seed, 50000 + 100 * pr[0] + 10 * pr[1] + k));
                worst = std::max(worst, (reconstruct(decompose(rho, pr[0], pr[1], tol)) - rho).cwiseAbs().maxCoeff());
            }
        }
        os << "worst " << worst;
        return worst <= 1e-12;
    }));

    out.push_back(detail::run_check("soundness on constructed classical states (50 per class and pair)",
                                    [&](std::ostream &os) {
        for (const auto &pr : detail::kPairs) {
            const int m = pr[0];
            const int n = pr[1];
            for (int k = 0; k < 50; ++k) {
                const Seed s = derive(seed, 70000 + 100 * m + 10 * n + k);
                const BlochForm cq = decompose(random_classical_quantum(m, n, s), m, n, tol);
                const BlochForm qc = decompose(swap_subsystems(random_classical_quantum(m, n, s), m, n), n, m, tol);
                const BlochForm cc = decompose(random_classical_classical(m, n, s), m, n, tol);
                if (check_classical_quantum(cq, tol).ruled_out || dakic_condition(cq, tol).ruled_out ||
                    check_quantum_classical(qc, tol).ruled_out || check_classical_quantum(cc, tol).ruled_out ||
                    check_quantum_classical(cc, tol).ruled_out || check_classical_classical(cc, tol).ruled_out) {
                    os << "false rule-out at (" << m << "," << n << ") sample " << k;
                    return false;
                }
            }
        }
        return true;
    }));

    out.push_back(detail::run_check("oracle agreement (12 states, 200 trials)", [&](std::ostream &os) {
        for (int k = 0; k < 12; ++k) {
            const int m = detail::kPairs[k % 3][0];
            const int n = detail::kPairs[k % 3][1];
            const Seed s = derive(seed, 90000 + k);
            const bool classical = k % 2 == 0;
            const ComplexMatrix rho = classical ? random_classical_quantum(m, n, s) : random_density(m * n, s);
            const BlochForm bf = decompose(rho, m, n, tol);
            const auto left = invariance_search(rho, m, n, Side::left, 200, derive(s, 1));
            if (classical && left.best_residual > 1e-10) {
                os << "constructed state " << k << " residual " << left.best_residual;
                return false;
            }
            if (check_classical_quantum(bf, tol).ruled_out && left.best_residual <= 0.01) {
                os << "ruled-out state " << k << " residual " << left.best_residual;
                return false;
            }
        }
        return true;
    }));

    return out;
}

} // namespace vnrank::selftest
