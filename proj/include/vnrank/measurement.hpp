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
 * @file measurement.hpp
 * Von Neumann measurements and their matrix representation on an operator
 * basis.
 *
 * A measurement on C^m is stored as the m x m unitary A whose row i holds
 * the coefficients of the i-th measurement vector, |phi_i> = sum_j a_ij |j>.
 * The dephasing map X -> sum_i <phi_i|X|phi_i> |phi_i><phi_i| acts linearly
 * on traceless Hermitian operators; in a basis {mu_i} it is represented by
 * the real matrix M with  M(mu_i) = sum_j mu_j M_ji.  M is idempotent with
 * rank m - 1 for every measurement.
 */

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "vnrank/basis.hpp"
#include "vnrank/linalg.hpp"

namespace vnrank {

class VonNeumannMeasurement {
  public:
    /// Validates unitarity of `a` (Frobenius norm of A A^dagger - I within eq_abs).
    static VonNeumannMeasurement from_unitary(const ComplexMatrix &a, const Tolerance &tol = {}) {
        require_square(a, "from_unitary");
        require_finite(a, "from_unitary");
        const double defect = (a * a.adjoint() - ComplexMatrix::Identity(a.rows(), a.rows())).norm();
        if (!(defect <= tol.eq_abs())) {
            std::ostringstream os;
            os << "from_unitary: ||A A^dagger - I||_F = " << defect << " exceeds eq_abs = " << tol.eq_abs();
            throw UnitarityError(os.str());
        }
        return VonNeumannMeasurement(a);
    }

    static VonNeumannMeasurement computational(int m) {
        return VonNeumannMeasurement(ComplexMatrix::Identity(m, m));
    }

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(unitary_.rows()); }
    [[nodiscard]] const ComplexMatrix &unitary() const noexcept { return unitary_; }

    /// |phi_i> as a column vector.
    [[nodiscard]] Eigen::VectorXcd vector(int i) const { return unitary_.row(i).transpose(); }

    [[nodiscard]] ComplexMatrix projector(int i) const {
        const Eigen::VectorXcd v = vector(i);
        return v * v.adjoint();
    }

    /// Matrix whose columns are the measurement vectors (A^T).
    [[nodiscard]] ComplexMatrix frame() const { return unitary_.transpose(); }

  private:
    explicit VonNeumannMeasurement(ComplexMatrix a) : unitary_(std::move(a)) {}

    ComplexMatrix unitary_;
};

/// sum_i <phi_i|x|phi_i> |phi_i><phi_i|.
[[nodiscard]] inline ComplexMatrix apply(const VonNeumannMeasurement &meas, const ComplexMatrix &x) {
    const int m = meas.dim();
    if (x.rows() != m || x.cols() != m) {
        throw ShapeError("apply: operator dimension does not match the measurement");
    }
    const ComplexMatrix f = meas.frame();
    const ComplexMatrix rotated = f.adjoint() * x * f;
    const Eigen::VectorXcd diag = rotated.diagonal();
    return f * diag.asDiagonal() * f.adjoint();
}

struct LiftedMeasurement {
    int dim = 0;
    RealMatrix matrix;
    std::vector<BasisLabel> basis_labels;

    /// ||M^2 - M||_F.
    [[nodiscard]] double idempotency_defect() const { return (matrix * matrix - matrix).norm(); }
};

namespace detail {
inline void require_same_dim(const VonNeumannMeasurement &meas, const HermitianBasis &b, const char *what) {
    if (b.dim() != meas.dim()) {
        std::ostringstream os;
        os << what << ": basis dimension " << b.dim() << " does not match measurement dimension " << meas.dim();
        throw ShapeError(os.str());
    }
}

// B_ji = Tr(mu_j^dagger M(mu_i)), complex.
inline ComplexMatrix projected_images(const VonNeumannMeasurement &meas, const HermitianBasis &b) {
    const int k = b.size();
    ComplexMatrix out(k, k);
    for (int i = 0; i < k; ++i) {
        const ComplexMatrix image = vnrank::apply(meas, b[i]);
        for (int j = 0; j < k; ++j) {
            out(j, i) = hs_inner(b[j], image);
        }
    }
    return out;
}

inline RealMatrix real_part_checked(const ComplexMatrix &c, const Tolerance &tol, const char *what) {
    const double imag = c.imag().cwiseAbs().maxCoeff();
    if (imag > tol.eq_abs()) {
        std::ostringstream os;
        os << what << ": imaginary residue " << imag << " exceeds eq_abs";
        throw DomainError(os.str());
    }
    return c.real();
}
} // namespace detail

/**
 * Matrix of the measurement in an orthonormal basis, via Hilbert-Schmidt
 * projection M_ji = Tr(mu_j^dagger M(mu_i)).
 */
[[nodiscard]] inline LiftedMeasurement lift_matrix(const VonNeumannMeasurement &meas, const HermitianBasis &b,
                                                   const Tolerance &tol = {}) {
    detail::require_same_dim(meas, b, "lift_matrix");
    if (!verify_orthonormal(b, tol)) {
        throw DomainError("lift_matrix: basis is not Hilbert-Schmidt orthonormal; use lift_matrix_general");
    }
    return {meas.dim(), detail::real_part_checked(detail::projected_images(meas, b), tol, "lift_matrix"),
            b.labels()};
}

/**
 * Matrix of the measurement in any linearly independent Hermitian basis.
 * Solves G M = B with G the Gram matrix and B the projected images.
 */
[[nodiscard]] inline LiftedMeasurement lift_matrix_general(const VonNeumannMeasurement &meas,
                                                           const HermitianBasis &b, const Tolerance &tol = {}) {
    detail::require_same_dim(meas, b, "lift_matrix_general");
    const ComplexMatrix g = b.gram();
    Eigen::FullPivLU<ComplexMatrix> lu(g);
    if (!lu.isInvertible()) {
        throw DomainError("lift_matrix_general: basis elements are linearly dependent");
    }
    const ComplexMatrix m = lu.solve(detail::projected_images(meas, b));
    return {meas.dim(), detail::real_part_checked(m, tol, "lift_matrix_general"), b.labels()};
}

namespace detail {
inline RealMatrix projector_coefficients(const ComplexMatrix &a) {
    const int m = static_cast<int>(a.rows());
    RealMatrix c = RealMatrix::Zero(m, m * m - 1);
    const double r2 = std::sqrt(2.0);
    const int pairs = m * (m - 1) / 2;
    for (int s = 0; s < m; ++s) {
        int col = 0;
        for (int p = 1; p < m; ++p, ++col) {
            double acc = 0.0;
            for (int j = 0; j < p; ++j) {
                acc += std::norm(a(s, j));
            }
            acc -= p * std::norm(a(s, p));
            c(s, col) = std::sqrt(1.0 / (p * (p + 1.0))) * acc;
        }
        int pair = 0;
        for (int k = 0; k < m; ++k) {
            for (int l = k + 1; l < m; ++l, ++pair) {
                const Complex z = std::conj(a(s, k)) * a(s, l);
                // (z + conj z)/sqrt2 and i(z - conj z)/sqrt2, both real
                c(s, col + pair) = r2 * z.real();
                c(s, col + pairs + pair) = -r2 * z.imag();
            }
        }
    }
    return c;
}
} // namespace detail

/**
 * The m x (m^2 - 1) real matrix C = (C1, C2, C3) expressing the images of
 * the canonical Gell-Mann generators as combinations of the measurement
 * projectors: M(w_c) = sum_s C(s, c) |phi_s><phi_s|. Columns follow the
 * canonical basis order. Rank is m - 1 for every unitary.
 */
[[nodiscard]] inline RealMatrix build_C(const ComplexMatrix &a, const Tolerance &tol = {}) {
    return detail::projector_coefficients(VonNeumannMeasurement::from_unitary(a, tol).unitary());
}

/**
 * The m x (m^2 - 1) complex matrix C0 with columns
 * alpha_i = (|a_s0|^2 - |a_si|^2)_s for i = 1..m-1, followed by
 * beta_kl = (conj(a_sk) a_sl)_s for all ordered k != l, lexicographic.
 * Same rank as build_C(a).
 */
[[nodiscard]] inline ComplexMatrix build_C0(const ComplexMatrix &a, const Tolerance &tol = {}) {
    const int m = VonNeumannMeasurement::from_unitary(a, tol).dim();
    ComplexMatrix c0 = ComplexMatrix::Zero(m, m * m - 1);
    for (int s = 0; s < m; ++s) {
        int col = 0;
        for (int i = 1; i < m; ++i, ++col) {
            c0(s, col) = std::norm(a(s, 0)) - std::norm(a(s, i));
        }
        for (int k = 0; k < m; ++k) {
            for (int l = 0; l < m; ++l) {
                if (k != l) {
                    c0(s, col++) = std::conj(a(s, k)) * a(s, l);
                }
            }
        }
    }
    return c0;
}

struct ConsistencyReport {
    double max_deviation = 0.0;
    int worst_column = -1;
};

/**
 * Compares M(w_c) with sum_s C(s, c) |phi_s><phi_s| for every element of
 * the canonical basis `b` and reports the largest entrywise deviation.
 */
[[nodiscard]] inline ConsistencyReport consistency_check(const VonNeumannMeasurement &meas, const HermitianBasis &b) {
    detail::require_same_dim(meas, b, "consistency_check");
    const RealMatrix c = detail::projector_coefficients(meas.unitary());
    std::vector<ComplexMatrix> projectors;
    for (int s = 0; s < meas.dim(); ++s) {
        projectors.push_back(meas.projector(s));
    }
    ConsistencyReport report;
    for (int col = 0; col < b.size(); ++col) {
        ComplexMatrix combo = ComplexMatrix::Zero(meas.dim(), meas.dim());
        for (int s = 0; s < meas.dim(); ++s) {
            combo += c(s, col) * projectors[static_cast<std::size_t>(s)];
        }
        const double dev = (vnrank::apply(meas, b[col]) - combo).cwiseAbs().maxCoeff();
        if (dev > report.max_deviation || report.worst_column < 0) {
            report.max_deviation = dev;
            report.worst_column = col;
        }
    }
    return report;
}

} // namespace vnrank
