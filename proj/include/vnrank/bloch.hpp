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
 * @file bloch.hpp
 * Bloch representation of bipartite m (x) n operators,
 *
 *   rho = 1/(mn) [ I(x)I + sum_i r_i mu_i(x)I + sum_j s_j I(x)nu_j
 *                  + sum_ij t_ij mu_i(x)nu_j ],
 *
 * for orthonormal traceless Hermitian bases {mu_i} and {nu_j}. Orthonormality
 * fixes the coefficients as
 *   r_i = m Tr(rho mu_i(x)I),  s_j = n Tr(rho I(x)nu_j),  t_ij = mn Tr(rho mu_i(x)nu_j).
 */

#include <sstream>
#include <utility>

#include "vnrank/basis.hpp"
#include "vnrank/linalg.hpp"

namespace vnrank {

struct BlochForm {
    int m = 0;
    int n = 0;
    RealVector r;
    RealVector s;
    RealMatrix t;
    HermitianBasis basis_a;
    HermitianBasis basis_b;

    /// Throws ShapeError when component sizes disagree with m, n or the bases.
    void check_shapes() const {
        const int ka = m * m - 1;
        const int kb = n * n - 1;
        if (basis_a.dim() != m || basis_b.dim() != n || r.size() != ka || s.size() != kb || t.rows() != ka ||
            t.cols() != kb) {
            std::ostringstream os;
            os << "BlochForm: inconsistent component sizes for m=" << m << ", n=" << n << " (R " << r.size()
               << ", S " << s.size() << ", T " << t.rows() << "x" << t.cols() << ")";
            throw ShapeError(os.str());
        }
    }
};

/// Bloch form with all-zero components (the maximally mixed state) in the canonical bases.
[[nodiscard]] inline BlochForm zero_bloch_form(int m, int n) {
    return BlochForm{m,
                     n,
                     RealVector::Zero(m * m - 1),
                     RealVector::Zero(n * n - 1),
                     RealMatrix::Zero(m * m - 1, n * n - 1),
                     gell_mann_basis(m),
                     gell_mann_basis(n)};
}

namespace detail {
inline double take_real(Complex z, const Tolerance &tol, const char *what) {
    if (std::abs(z.imag()) > tol.eq_abs()) {
        std::ostringstream os;
        os << "decompose: " << what << " coefficient has imaginary part " << z.imag()
           << "; input is not Hermitian";
        throw InvalidStateError(os.str());
    }
    return z.real();
}
} // namespace detail

/**
 * Bloch coefficients of `rho` in the given bases.
 *
 * Imaginary residue above eq_abs in any coefficient is reported as
 * InvalidStateError rather than discarded.
 */
[[nodiscard]] inline BlochForm decompose(const ComplexMatrix &rho, int m, int n, const HermitianBasis &basis_a,
                                         const HermitianBasis &basis_b, const Tolerance &tol = {}) {
    detail::require_bipartite(rho, m, n, "decompose");
    if (basis_a.dim() != m || basis_b.dim() != n) {
        throw ShapeError("decompose: basis dimensions do not match m, n");
    }
    if (!verify_orthonormal(basis_a, tol) || !verify_orthonormal(basis_b, tol)) {
        throw DomainError("decompose: bases must be Hilbert-Schmidt orthonormal");
    }
    if (!is_hermitian(rho, tol)) {
        throw InvalidStateError("decompose: input is not Hermitian");
    }
    const int ka = m * m - 1;
    const int kb = n * n - 1;
    const double mn = static_cast<double>(m) * n;

    BlochForm bf{m, n, RealVector(ka), RealVector(kb), RealMatrix(ka, kb), basis_a, basis_b};
    const ComplexMatrix rho_a = partial_trace_b(rho, m, n);
    const ComplexMatrix rho_b = partial_trace_a(rho, m, n);
    for (int i = 0; i < ka; ++i) {
        bf.r(i) = detail::take_real(static_cast<double>(m) * (rho_a * basis_a[i]).trace(), tol, "R");
    }
    for (int j = 0; j < kb; ++j) {
        bf.s(j) = detail::take_real(static_cast<double>(n) * (rho_b * basis_b[j]).trace(), tol, "S");
    }
    // x_j = Tr_B[rho (I (x) nu_j)], so t_ij = mn Tr(x_j mu_i).
    for (int j = 0; j < kb; ++j) {
        const ComplexMatrix &nu = basis_b[j];
        ComplexMatrix x(m, m);
        for (int a = 0; a < m; ++a) {
            for (int a2 = 0; a2 < m; ++a2) {
                x(a, a2) = (rho.block(a * n, a2 * n, n, n) * nu).trace();
            }
        }
        for (int i = 0; i < ka; ++i) {
            bf.t(i, j) = detail::take_real(mn * (x * basis_a[i]).trace(), tol, "T");
        }
    }
    return bf;
}

/// decompose() in the canonical generalized Gell-Mann bases.
[[nodiscard]] inline BlochForm decompose(const ComplexMatrix &rho, int m, int n, const Tolerance &tol = {}) {
    return decompose(rho, m, n, gell_mann_basis(m), gell_mann_basis(n), tol);
}

/// Operator assembled from Bloch components. Hermitian with unit trace; positivity is not guaranteed.
[[nodiscard]] inline ComplexMatrix reconstruct(const BlochForm &bf) {
    bf.check_shapes();
    const int m = bf.m;
    const int n = bf.n;
    const ComplexMatrix id_a = ComplexMatrix::Identity(m, m);
    const ComplexMatrix id_b = ComplexMatrix::Identity(n, n);
    ComplexMatrix acc = ComplexMatrix::Identity(m * n, m * n);
    ComplexMatrix mu_sum = ComplexMatrix::Zero(m, m);
    for (int i = 0; i < bf.r.size(); ++i) {
        mu_sum += bf.r(i) * bf.basis_a[i];
    }
    acc += kron(mu_sum, id_b);
    ComplexMatrix nu_sum = ComplexMatrix::Zero(n, n);
    for (int j = 0; j < bf.s.size(); ++j) {
        nu_sum += bf.s(j) * bf.basis_b[j];
    }
    acc += kron(id_a, nu_sum);
    for (int i = 0; i < bf.t.rows(); ++i) {
        ComplexMatrix row = ComplexMatrix::Zero(n, n);
        for (int j = 0; j < bf.t.cols(); ++j) {
            row += bf.t(i, j) * bf.basis_b[j];
        }
        acc += kron(bf.basis_a[i], row);
    }
    return acc / (static_cast<double>(m) * n);
}

/// The m^2 x n^2 block matrix [[1, S^T], [R, T]].
[[nodiscard]] inline RealMatrix correlation_matrix(const BlochForm &bf) {
    bf.check_shapes();
    RealMatrix c(bf.t.rows() + 1, bf.t.cols() + 1);
    c(0, 0) = 1.0;
    c.block(0, 1, 1, bf.s.size()) = bf.s.transpose();
    c.block(1, 0, bf.r.size(), 1) = bf.r;
    c.block(1, 1, bf.t.rows(), bf.t.cols()) = bf.t;
    return c;
}

/// Same state with the subsystems exchanged: (n, m, S, R, T^T).
[[nodiscard]] inline BlochForm swapped(const BlochForm &bf) {
    return BlochForm{bf.n, bf.m, bf.s, bf.r, bf.t.transpose(), bf.basis_b, bf.basis_a};
}

} // namespace vnrank
