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

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vnrank/linalg.hpp"

namespace vnrank {

/// Tag identifying a generalized Gell-Mann generator. `combination` marks
/// elements of a rotated basis that are not a single signed generator.
struct BasisLabel {
    enum class Kind { diagonal, symmetric, antisymmetric, combination };
    Kind kind = Kind::combination;
    int first = 0;  // p for diagonal, k for (anti)symmetric, column index for combination
    int second = 0; // l for (anti)symmetric

    [[nodiscard]] std::string to_string() const {
        std::ostringstream os;
        switch (kind) {
        case Kind::diagonal:
            os << "diagonal(" << first << ")";
            break;
        case Kind::symmetric:
            os << "symmetric(" << first << "," << second << ")";
            break;
        case Kind::antisymmetric:
            os << "antisymmetric(" << first << "," << second << ")";
            break;
        case Kind::combination:
            os << "combination(" << first << ")";
            break;
        }
        return os.str();
    }

    friend bool operator==(const BasisLabel &, const BasisLabel &) = default;
};

/**
 * Ordered set of m^2 - 1 traceless Hermitian m x m matrices.
 *
 * The constructor checks shape and count only. Orthonormality is a
 * property checked with verify_orthonormal(), so deliberately broken bases
 * can still be represented.
 */
class HermitianBasis {
  public:
    HermitianBasis(int dim, std::vector<ComplexMatrix> elements, std::vector<BasisLabel> labels)
        : dim_(dim), elements_(std::move(elements)), labels_(std::move(labels)) {
        if (dim < 2) {
            throw DomainError("HermitianBasis: dimension must be at least 2");
        }
        const auto expected = static_cast<std::size_t>(dim * dim - 1);
        if (elements_.size() != expected || labels_.size() != expected) {
            std::ostringstream os;
            os << "HermitianBasis: expected " << expected << " elements and labels for dim " << dim << ", got "
               << elements_.size() << " and " << labels_.size();
            throw ShapeError(os.str());
        }
        for (const auto &e : elements_) {
            if (e.rows() != dim || e.cols() != dim) {
                throw ShapeError("HermitianBasis: every element must be dim x dim");
            }
        }
    }

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(elements_.size()); }
    [[nodiscard]] const std::vector<ComplexMatrix> &elements() const noexcept { return elements_; }
    [[nodiscard]] const ComplexMatrix &operator[](int i) const { return elements_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] const std::vector<BasisLabel> &labels() const noexcept { return labels_; }

    /// Hilbert-Schmidt Gram matrix G_ij = Tr(e_i^dagger e_j).
    [[nodiscard]] ComplexMatrix gram() const {
        const int k = size();
        ComplexMatrix g(k, k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                g(i, j) = hs_inner(elements_[i], elements_[j]);
            }
        }
        return g;
    }

  private:
    int dim_;
    std::vector<ComplexMatrix> elements_;
    std::vector<BasisLabel> labels_;
};

/**
 * Generalized Gell-Mann basis of dimension m, Hilbert-Schmidt normalized.
 *
 * Order: diagonal generators w_p for p = 1..m-1, then symmetric
 * (|k><l| + |l><k|)/sqrt2 for k < l lexicographically, then antisymmetric
 * i(|k><l| - |l><k|)/sqrt2 in the same (k, l) order.
 */
[[nodiscard]] inline HermitianBasis gell_mann_basis(int m) {
    if (m < 2) {
        throw DomainError("gell_mann_basis: m must be at least 2");
    }
    std::vector<ComplexMatrix> elems;
    std::vector<BasisLabel> labels;
    elems.reserve(static_cast<std::size_t>(m * m - 1));

    for (int p = 1; p < m; ++p) {
        ComplexMatrix w = ComplexMatrix::Zero(m, m);
        const double c = std::sqrt(1.0 / (p * (p + 1.0)));
        for (int a = 0; a < p; ++a) {
            w(a, a) = c;
        }
        w(p, p) = -p * c;
        elems.push_back(std::move(w));
        labels.push_back({BasisLabel::Kind::diagonal, p, 0});
    }
    const double r = 1.0 / std::sqrt(2.0);
    for (int k = 0; k < m; ++k) {
        for (int l = k + 1; l < m; ++l) {
            ComplexMatrix w = ComplexMatrix::Zero(m, m);
            w(k, l) = r;
            w(l, k) = r;
            elems.push_back(std::move(w));
            labels.push_back({BasisLabel::Kind::symmetric, k, l});
        }
    }
    for (int k = 0; k < m; ++k) {
        for (int l = k + 1; l < m; ++l) {
            ComplexMatrix w = ComplexMatrix::Zero(m, m);
            w(k, l) = kI * r;
            w(l, k) = -kI * r;
            elems.push_back(std::move(w));
            labels.push_back({BasisLabel::Kind::antisymmetric, k, l});
        }
    }
    return HermitianBasis(m, std::move(elems), std::move(labels));
}

/// True iff every element is Hermitian and traceless and the Gram matrix is the identity, all within eq_abs.
[[nodiscard]] inline bool verify_orthonormal(const HermitianBasis &b, const Tolerance &tol = {}) {
    for (const auto &e : b.elements()) {
        if (!is_hermitian(e, tol) || std::abs(e.trace()) > tol.eq_abs()) {
            return false;
        }
    }
    const ComplexMatrix g = b.gram();
    const auto k = g.rows();
    return (g - ComplexMatrix::Identity(k, k)).cwiseAbs().maxCoeff() <= tol.eq_abs();
}

[[nodiscard]] inline bool is_orthogonal(const RealMatrix &o, const Tolerance &tol = {}) {
    if (o.rows() != o.cols()) {
        return false;
    }
    return (o * o.transpose() - RealMatrix::Identity(o.rows(), o.rows())).norm() <= tol.eq_abs();
}

/**
 * New basis with element j equal to sum_i b_i * o(i, j).
 *
 * Labels survive when column j of `o` is a signed unit vector; otherwise
 * the element is labelled combination(j).
 */
[[nodiscard]] inline HermitianBasis rotate_basis(const HermitianBasis &b, const RealMatrix &o,
                                                 const Tolerance &tol = {}) {
    const int k = b.size();
    if (o.rows() != k || o.cols() != k) {
        throw ShapeError("rotate_basis: rotation must be (m^2-1) x (m^2-1)");
    }
    if (!is_orthogonal(o, tol)) {
        throw DomainError("rotate_basis: matrix is not orthogonal within eq_abs");
    }
    std::vector<ComplexMatrix> elems;
    std::vector<BasisLabel> labels;
    for (int j = 0; j < k; ++j) {
        ComplexMatrix e = ComplexMatrix::Zero(b.dim(), b.dim());
        int nonzero = 0;
        int source = -1;
        for (int i = 0; i < k; ++i) {
            if (o(i, j) != 0.0) {
                e += o(i, j) * b[i];
                ++nonzero;
                source = i;
            }
        }
        elems.push_back(std::move(e));
        if (nonzero == 1) {
            labels.push_back(b.labels()[static_cast<std::size_t>(source)]);
        } else {
            labels.push_back({BasisLabel::Kind::combination, j, 0});
        }
    }
    return HermitianBasis(b.dim(), std::move(elems), std::move(labels));
}

/// Every element multiplied by `factor`. The result is orthogonal but not normalized unless |factor| = 1.
[[nodiscard]] inline HermitianBasis scaled(const HermitianBasis &b, double factor) {
    std::vector<ComplexMatrix> elems;
    elems.reserve(b.elements().size());
    for (const auto &e : b.elements()) {
        elems.push_back(factor * e);
    }
    return HermitianBasis(b.dim(), std::move(elems), b.labels());
}

/// Normalized Pauli operators (sigma_1, sigma_2, sigma_3) / sqrt2, in that order.
[[nodiscard]] inline HermitianBasis pauli_basis() {
    // Canonical m = 2 order is (sigma_3, sigma_1, -sigma_2) / sqrt2.
    RealMatrix o = RealMatrix::Zero(3, 3);
    o(1, 0) = 1.0;
    o(2, 1) = -1.0;
    o(0, 2) = 1.0;
    return rotate_basis(gell_mann_basis(2), o);
}

/// Normalized Gell-Mann matrices lambda_1 .. lambda_8 (each divided by sqrt2), in the conventional order.
[[nodiscard]] inline HermitianBasis gell_mann_lambda_basis() {
    // Canonical m = 3 order: lambda_3, lambda_8, lambda_1, lambda_4, lambda_6, -lambda_2, -lambda_5, -lambda_7.
    constexpr int source[8] = {2, 5, 0, 3, 6, 4, 7, 1};
    constexpr double sign[8] = {1, -1, 1, 1, -1, 1, -1, 1};
    RealMatrix o = RealMatrix::Zero(8, 8);
    for (int j = 0; j < 8; ++j) {
        o(source[j], j) = sign[j];
    }
    return rotate_basis(gell_mann_basis(3), o);
}

/// Coefficients c_i = Tr(b_i^dagger h) of `h` in an orthonormal basis.
[[nodiscard]] inline RealVector basis_coefficients(const HermitianBasis &b, const ComplexMatrix &h) {
    RealVector c(b.size());
    for (int i = 0; i < b.size(); ++i) {
        c(i) = hs_inner(b[i], h).real();
    }
    return c;
}

} // namespace vnrank
