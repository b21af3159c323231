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
 * @file linalg.hpp
 * Dense complex matrix substrate: shape-checked products, tolerance-based
 * numerical rank, Hermiticity and density-matrix validation, and the few
 * bipartite tensor utilities (Kronecker product, partial traces, subsystem
 * swap) that the rest of the library needs.
 *
 * Matrices are plain Eigen dense types. Every function here is pure.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "vnrank/errors.hpp"

namespace vnrank {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/**
 * Numerical cutoffs.
 *
 * `rank_rel` is the relative singular-value cutoff used by numerical_rank;
 * `eq_abs` is the absolute cutoff for entrywise / Frobenius comparisons.
 */
class Tolerance {
  public:
    static constexpr double kDefaultRankRel = 1e-9;
    static constexpr double kDefaultEqAbs = 1e-10;

    Tolerance() = default;
    Tolerance(double rank_rel, double eq_abs) : rank_rel_(rank_rel), eq_abs_(eq_abs) {
        if (!(rank_rel > 0.0 && rank_rel < 1.0)) {
            throw DomainError("tolerance: rank_rel must lie in (0, 1)");
        }
        if (!(eq_abs > 0.0) || !std::isfinite(eq_abs)) {
            throw DomainError("tolerance: eq_abs must be positive and finite");
        }
    }

    [[nodiscard]] double rank_rel() const noexcept { return rank_rel_; }
    [[nodiscard]] double eq_abs() const noexcept { return eq_abs_; }

  private:
    double rank_rel_ = kDefaultRankRel;
    double eq_abs_ = kDefaultEqAbs;
};

template <typename Derived> void require_square(const Eigen::MatrixBase<Derived> &a, const char *what) {
    if (a.rows() != a.cols()) {
        std::ostringstream os;
        os << what << ": expected a square matrix, got " << a.rows() << "x" << a.cols();
        throw ShapeError(os.str());
    }
}

template <typename Derived> void require_finite(const Eigen::MatrixBase<Derived> &a, const char *what) {
    if (!a.allFinite()) {
        throw DomainError(std::string(what) + ": matrix has non-finite entries");
    }
}

/// Shape-checked matrix product.
template <typename A, typename B>
[[nodiscard]] auto matmul(const Eigen::MatrixBase<A> &a, const Eigen::MatrixBase<B> &b) {
    if (a.cols() != b.rows()) {
        std::ostringstream os;
        os << "matmul: inner dimensions differ (" << a.rows() << "x" << a.cols() << " * " << b.rows() << "x"
           << b.cols() << ")";
        throw ShapeError(os.str());
    }
    using Scalar = typename Eigen::ScalarBinaryOpTraits<typename A::Scalar, typename B::Scalar>::ReturnType;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out = a * b;
    return out;
}

/// Singular values in decreasing order.
template <typename Derived> [[nodiscard]] RealVector singular_values(const Eigen::MatrixBase<Derived> &a) {
    using Plain = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Eigen::JacobiSVD<Plain> svd(a.eval());
    return svd.singularValues();
}

/**
 * Number of singular values strictly above `rank_rel * sigma_max`.
 * A matrix whose largest singular value is at most `eq_abs` has rank 0.
 */
template <typename Derived>
[[nodiscard]] int numerical_rank(const Eigen::MatrixBase<Derived> &a, const Tolerance &tol = {}) {
    if (a.size() == 0) {
        throw ShapeError("numerical_rank: empty matrix");
    }
    const RealVector sv = singular_values(a);
    const double smax = sv(0);
    if (smax <= tol.eq_abs()) {
        return 0;
    }
    const double cut = tol.rank_rel() * smax;
    return static_cast<int>((sv.array() > cut).count());
}

/// Largest entrywise deviation from Hermiticity, max |a_ij - conj(a_ji)|.
template <typename Derived> [[nodiscard]] double hermiticity_defect(const Eigen::MatrixBase<Derived> &a) {
    require_square(a, "hermiticity_defect");
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
[[nodiscard]] bool is_hermitian(const Eigen::MatrixBase<Derived> &a, const Tolerance &tol = {}) {
    require_square(a, "is_hermitian");
    return hermiticity_defect(a) <= tol.eq_abs();
}

struct DensityReport {
    bool hermitian = false;
    bool unit_trace = false;
    bool psd = false;
    double min_eigenvalue = 0.0;

    [[nodiscard]] bool ok() const noexcept { return hermitian && unit_trace && psd; }

    /// Human-readable name of the first failed invariant, empty when ok().
    [[nodiscard]] std::string failure() const {
        std::ostringstream os;
        if (!hermitian) {
            os << "density matrix is not Hermitian";
        } else if (!unit_trace) {
            os << "density matrix does not have unit trace";
        } else if (!psd) {
            os << "density matrix is not positive semidefinite (min eigenvalue " << min_eigenvalue << ")";
        }
        return os.str();
    }
};

/// Eigenvalues of the Hermitian part (rho + rho^dagger) / 2, ascending.
[[nodiscard]] inline RealVector hermitian_eigenvalues(const ComplexMatrix &rho) {
    require_square(rho, "hermitian_eigenvalues");
    const ComplexMatrix sym = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

[[nodiscard]] inline DensityReport validate_density(const ComplexMatrix &rho, const Tolerance &tol = {}) {
    require_square(rho, "validate_density");
    DensityReport r;
    r.hermitian = is_hermitian(rho, tol);
    r.unit_trace = std::abs(rho.trace() - Complex(1.0, 0.0)) <= tol.eq_abs();
    r.min_eigenvalue = hermitian_eigenvalues(rho).minCoeff();
    r.psd = r.min_eigenvalue >= -tol.eq_abs();
    return r;
}

[[nodiscard]] inline bool is_unitary(const ComplexMatrix &a, const Tolerance &tol = {}) {
    if (a.rows() != a.cols()) {
        return false;
    }
    const auto n = a.rows();
    return (a * a.adjoint() - ComplexMatrix::Identity(n, n)).norm() <= tol.eq_abs();
}

/// Hilbert-Schmidt inner product Tr(a^dagger b).
[[nodiscard]] inline Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("hs_inner: operand shapes differ");
    }
    return (a.conjugate().array() * b.array()).sum();
}

template <typename A, typename B>
[[nodiscard]] auto kron(const Eigen::MatrixBase<A> &a, const Eigen::MatrixBase<B> &b) {
    using Scalar = typename Eigen::ScalarBinaryOpTraits<typename A::Scalar, typename B::Scalar>::ReturnType;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

namespace detail {
inline void require_bipartite(const ComplexMatrix &rho, int m, int n, const char *what) {
    if (m < 1 || n < 1 || rho.rows() != m * n || rho.cols() != m * n) {
        std::ostringstream os;
        os << what << ": expected a " << m * n << "x" << m * n << " matrix for m=" << m << ", n=" << n << ", got "
           << rho.rows() << "x" << rho.cols();
        throw ShapeError(os.str());
    }
}
} // namespace detail

// Subsystem A is the slower (left) tensor factor: row index = a * n + b.

/// Tr_B rho, an m x m matrix.
[[nodiscard]] inline ComplexMatrix partial_trace_b(const ComplexMatrix &rho, int m, int n) {
    detail::require_bipartite(rho, m, n, "partial_trace_b");
    ComplexMatrix out = ComplexMatrix::Zero(m, m);
    for (int a = 0; a < m; ++a) {
        for (int a2 = 0; a2 < m; ++a2) {
            out(a, a2) = rho.block(a * n, a2 * n, n, n).trace();
        }
    }
    return out;
}

/// Tr_A rho, an n x n matrix.
[[nodiscard]] inline ComplexMatrix partial_trace_a(const ComplexMatrix &rho, int m, int n) {
    detail::require_bipartite(rho, m, n, "partial_trace_a");
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (int a = 0; a < m; ++a) {
        out += rho.block(a * n, a * n, n, n);
    }
    return out;
}

/// Reorders an m (x) n operator into the equivalent n (x) m operator.
[[nodiscard]] inline ComplexMatrix swap_subsystems(const ComplexMatrix &rho, int m, int n) {
    detail::require_bipartite(rho, m, n, "swap_subsystems");
    ComplexMatrix out(m * n, m * n);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int a2 = 0; a2 < m; ++a2) {
                for (int b2 = 0; b2 < n; ++b2) {
                    out(b * m + a, b2 * m + a2) = rho(a * n + b, a2 * n + b2);
                }
            }
        }
    }
    return out;
}

} // namespace vnrank
