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
 * @file sampler.hpp
 * Seeded generation of unitaries and states, including states that are
 * classical on one or both sides by construction, and a brute-force search
 * for a measurement leaving a state invariant.
 *
 * Every function is a pure function of its arguments and seed. Sub-streams
 * (per trial, per component) are derived from the seed with splitmix64, so
 * results do not depend on evaluation order.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "vnrank/linalg.hpp"
#include "vnrank/measurement.hpp"

namespace vnrank {

struct Seed {
    std::uint64_t value = 0;
};

[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent child seed for stream `index` of `seed`.
[[nodiscard]] constexpr Seed derive(Seed seed, std::uint64_t index) noexcept {
    return Seed{splitmix64(splitmix64(seed.value) ^ splitmix64(index + 0x632be59bd9b4e019ULL))};
}

namespace detail {
inline std::mt19937_64 engine(Seed seed) { return std::mt19937_64(splitmix64(seed.value)); }

inline ComplexMatrix ginibre(int rows, int cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    return g;
}

/// Uniform point on the probability simplex (normalized exponentials).
inline RealVector simplex_point(int k, std::mt19937_64 &rng) {
    std::exponential_distribution<double> expo(1.0);
    RealVector p(k);
    for (int i = 0; i < k; ++i) {
        p(i) = expo(rng);
    }
    return p / p.sum();
}

inline double min_gap(const RealVector &p) {
    std::vector<double> v(p.data(), p.data() + p.size());
    std::sort(v.begin(), v.end());
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < v.size(); ++i) {
        gap = std::min(gap, v[i] - v[i - 1]);
    }
    return gap;
}
} // namespace detail

/// Minimum spacing between the marginal weights of constructed classical states.
inline constexpr double kMinWeightGap = 0.02;

/**
 * Haar-distributed m x m unitary: QR of a complex Gaussian matrix with the
 * phases of R's diagonal folded back into Q.
 */
[[nodiscard]] inline ComplexMatrix random_unitary(int m, Seed seed) {
    if (m < 1) {
        throw DomainError("random_unitary: m must be positive");
    }
    auto rng = detail::engine(seed);
    const ComplexMatrix g = detail::ginibre(m, m, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < m; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) {
            q.col(j) *= r(j, j) / mag;
        }
    }
    return q;
}

/// Haar-distributed real orthogonal k x k matrix.
[[nodiscard]] inline RealMatrix random_orthogonal(int k, Seed seed) {
    if (k < 1) {
        throw DomainError("random_orthogonal: k must be positive");
    }
    auto rng = detail::engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    RealMatrix g(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            g(i, j) = normal(rng);
        }
    }
    Eigen::HouseholderQR<RealMatrix> qr(g);
    RealMatrix q = qr.householderQ();
    for (int j = 0; j < k; ++j) {
        if (qr.matrixQR()(j, j) < 0.0) {
            q.col(j) *= -1.0;
        }
    }
    return q;
}

/// G G^dagger / Tr(G G^dagger) for a complex Gaussian d x d matrix G.
[[nodiscard]] inline ComplexMatrix random_density(int d, Seed seed) {
    if (d < 1) {
        throw DomainError("random_density: d must be positive");
    }
    auto rng = detail::engine(seed);
    const ComplexMatrix g = detail::ginibre(d, d, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    // exact Hermitian symmetry
    return 0.5 * (rho + rho.adjoint());
}

/// A constructed classical state together with the measurements that leave it invariant.
struct ClassicalSample {
    ComplexMatrix rho;
    std::optional<ComplexMatrix> basis_a; // unitary of the invariant measurement on A
    std::optional<ComplexMatrix> basis_b; // unitary of the invariant measurement on B
};

namespace detail {
inline RealVector gapped_simplex_point(int k, std::mt19937_64 &rng) {
    for (;;) {
        RealVector p = simplex_point(k, rng);
        if (k == 1 || min_gap(p) >= kMinWeightGap) {
            return p;
        }
    }
}

inline ComplexMatrix projector_from_row(const ComplexMatrix &u, int i) {
    const Eigen::VectorXcd v = u.row(i).transpose();
    return v * v.adjoint();
}
} // namespace detail

/**
 * sum_i p_i |phi_i><phi_i| (x) rho_i with a Haar-random basis {phi_i},
 * weights p_i pairwise separated by at least kMinWeightGap, and random
 * conditional states rho_i.
 */
[[nodiscard]] inline ClassicalSample sample_classical_quantum(int m, int n, Seed seed) {
    if (m < 2 || n < 2) {
        throw DomainError("sample_classical_quantum: m and n must be at least 2");
    }
    auto rng = detail::engine(derive(seed, 0));
    const RealVector p = detail::gapped_simplex_point(m, rng);
    const ComplexMatrix u = random_unitary(m, derive(seed, 1));
    ComplexMatrix rho = ComplexMatrix::Zero(m * n, m * n);
    for (int i = 0; i < m; ++i) {
        const ComplexMatrix cond = random_density(n, derive(seed, 2 + static_cast<std::uint64_t>(i)));
        rho += p(i) * kron(detail::projector_from_row(u, i), cond);
    }
    return {0.5 * (rho + rho.adjoint()), u, std::nullopt};
}

[[nodiscard]] inline ComplexMatrix random_classical_quantum(int m, int n, Seed seed) {
    return sample_classical_quantum(m, n, seed).rho;
}

/**
 * sum_ij p_ij |phi_i><phi_i| (x) |psi_j><psi_j| with Haar-random bases and a
 * random joint distribution whose two marginals are each gapped.
 */
[[nodiscard]] inline ClassicalSample sample_classical_classical(int m, int n, Seed seed) {
    if (m < 2 || n < 2) {
        throw DomainError("sample_classical_classical: m and n must be at least 2");
    }
    auto rng = detail::engine(derive(seed, 0));
    RealVector joint;
    for (;;) {
        joint = detail::simplex_point(m * n, rng);
        const RealMatrix table = joint.reshaped(n, m).transpose(); // table(i, j) = joint(i * n + j)
        if (detail::min_gap(table.rowwise().sum()) >= kMinWeightGap &&
            detail::min_gap(table.colwise().sum().transpose()) >= kMinWeightGap) {
            break;
        }
    }
    const ComplexMatrix ua = random_unitary(m, derive(seed, 1));
    const ComplexMatrix ub = random_unitary(n, derive(seed, 2));
    ComplexMatrix rho = ComplexMatrix::Zero(m * n, m * n);
    for (int i = 0; i < m; ++i) {
        const ComplexMatrix pa = detail::projector_from_row(ua, i);
        for (int j = 0; j < n; ++j) {
            rho += joint(i * n + j) * kron(pa, detail::projector_from_row(ub, j));
        }
    }
    return {0.5 * (rho + rho.adjoint()), ua, ub};
}

[[nodiscard]] inline ComplexMatrix random_classical_classical(int m, int n, Seed seed) {
    return sample_classical_classical(m, n, seed).rho;
}

enum class Side { left, right };

/// sum_i (P_i (x) I) rho (P_i (x) I) for Side::left, or the mirrored map on B.
[[nodiscard]] inline ComplexMatrix dephase(const ComplexMatrix &rho, const VonNeumannMeasurement &meas, int m, int n,
                                           Side side) {
    detail::require_bipartite(rho, m, n, "dephase");
    const int local = side == Side::left ? m : n;
    if (meas.dim() != local) {
        throw ShapeError("dephase: measurement dimension does not match the measured subsystem");
    }
    ComplexMatrix out = ComplexMatrix::Zero(m * n, m * n);
    for (int i = 0; i < local; ++i) {
        const ComplexMatrix p = meas.projector(i);
        const ComplexMatrix big = side == Side::left ? kron(p, ComplexMatrix::Identity(n, n))
                                                     : kron(ComplexMatrix::Identity(m, m), p);
        out += big * rho * big;
    }
    return out;
}

/**
 * ||dephase(rho) - rho||_F, evaluated in the measurement frame where the
 * dephased state is the block (or entry) diagonal part.
 */
[[nodiscard]] inline double invariance_residual(const ComplexMatrix &rho, const VonNeumannMeasurement &meas, int m,
                                                int n, Side side) {
    detail::require_bipartite(rho, m, n, "invariance_residual");
    const int local = side == Side::left ? m : n;
    if (meas.dim() != local) {
        throw ShapeError("invariance_residual: measurement dimension does not match the measured subsystem");
    }
    const ComplexMatrix frame = side == Side::left ? kron(meas.frame(), ComplexMatrix::Identity(n, n))
                                                   : kron(ComplexMatrix::Identity(m, m), meas.frame());
    const ComplexMatrix rot = frame.adjoint() * rho * frame;
    double off = 0.0;
    for (int r = 0; r < m * n; ++r) {
        for (int c = 0; c < m * n; ++c) {
            const int lr = side == Side::left ? r / n : r % n;
            const int lc = side == Side::left ? c / n : c % n;
            if (lr != lc) {
                off += std::norm(rot(r, c));
            }
        }
    }
    return std::sqrt(off);
}

struct InvarianceReport {
    double best_residual = std::numeric_limits<double>::infinity();
    VonNeumannMeasurement best_measurement;
    int trials = 0;
    /// -1 when the reduced-state eigenbasis won, otherwise the random trial index.
    int best_trial = -1;
    /// Smallest spacing of the reduced-state spectrum.
    double reduced_spectral_gap = 0.0;
    /// Reduced spectrum is (numerically) degenerate, so its eigenbasis is not a reliable candidate.
    bool degenerate = false;
};

/// Reduced spectra with a spacing below this are flagged degenerate.
inline constexpr double kDegenerateGap = 1e-6;

/**
 * Smallest invariance residual over the reduced-state eigenbasis and
 * `trials` Haar-random measurements on the chosen side. An upper bound on
 * the true minimum; ties keep the earliest candidate.
 */
[[nodiscard]] inline InvarianceReport invariance_search(const ComplexMatrix &rho, int m, int n, Side side, int trials,
                                                        Seed seed) {
    detail::require_bipartite(rho, m, n, "invariance_search");
    if (trials < 1) {
        throw DomainError("invariance_search: trials must be at least 1");
    }
    const int local = side == Side::left ? m : n;
    const ComplexMatrix reduced = side == Side::left ? partial_trace_b(rho, m, n) : partial_trace_a(rho, m, n);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (reduced + reduced.adjoint()));
    const ComplexMatrix eig_unitary = es.eigenvectors().transpose();
    const auto eig_meas = VonNeumannMeasurement::from_unitary(eig_unitary);

    InvarianceReport report{invariance_residual(rho, eig_meas, m, n, side), eig_meas, trials, -1, 0.0, false};
    report.reduced_spectral_gap = local > 1 ? detail::min_gap(es.eigenvalues()) : 0.0;
    report.degenerate = local > 1 && report.reduced_spectral_gap < kDegenerateGap;

    for (int trial = 0; trial < trials; ++trial) {
        const auto meas =
            VonNeumannMeasurement::from_unitary(random_unitary(local, derive(seed, static_cast<std::uint64_t>(trial))));
        const double res = invariance_residual(rho, meas, m, n, side);
        if (res < report.best_residual) {
            report.best_residual = res;
            report.best_measurement = meas;
            report.best_trial = trial;
        }
    }
    return report;
}

} // namespace vnrank
