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

#include "vnrank/measurement.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "vnrank/sampler.hpp"

using namespace vnrank;

namespace {

const double kSqrt2 = std::sqrt(2.0);

ComplexMatrix hadamard() {
    ComplexMatrix h(2, 2);
    h << 1, 1, 1, -1;
    return h / kSqrt2;
}

double max_diff(const ComplexMatrix &a, const ComplexMatrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

ComplexMatrix random_hermitian(int m, std::mt19937_64 &rng) {
    const ComplexMatrix g = oracle::random_complex(m, m, rng);
    return g + g.adjoint();
}

} // namespace

TEST(FromUnitary, ComputationalBasis) {
    const auto meas = VonNeumannMeasurement::from_unitary(ComplexMatrix::Identity(2, 2));
    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    ComplexMatrix p1 = ComplexMatrix::Zero(2, 2);
    p1(1, 1) = 1.0;
    EXPECT_LE(max_diff(meas.projector(0), p0), 1e-15);
    EXPECT_LE(max_diff(meas.projector(1), p1), 1e-15);
}

TEST(FromUnitary, HadamardGivesPlusMinus) {
    const auto meas = VonNeumannMeasurement::from_unitary(hadamard());
    ComplexMatrix plus(2, 2), minus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    minus << 0.5, -0.5, -0.5, 0.5;
    EXPECT_LE(max_diff(meas.projector(0), plus), 1e-15);
    EXPECT_LE(max_diff(meas.projector(1), minus), 1e-15);
}

TEST(FromUnitary, RejectsNonUnitary) {
    ComplexMatrix a(2, 2);
    a << 1, 1, 0, 1;
    EXPECT_THROW((void)VonNeumannMeasurement::from_unitary(a), UnitarityError);
    EXPECT_THROW((void)VonNeumannMeasurement::from_unitary(ComplexMatrix::Identity(2, 3)), ShapeError);
}

TEST(FromUnitaryProperty, ProjectorsResolveIdentity) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const int m = 2 + static_cast<int>(s % 3);
        const auto meas = VonNeumannMeasurement::from_unitary(random_unitary(m, Seed{s}));
        ComplexMatrix sum = ComplexMatrix::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                const double expect = i == j ? 1.0 : 0.0;
                EXPECT_LE((meas.projector(i) * meas.projector(j) - expect * meas.projector(i)).norm(), 1e-12);
            }
            sum += meas.projector(i);
        }
        EXPECT_LE(max_diff(sum, ComplexMatrix::Identity(m, m)), 1e-12);
    }
}

TEST(Apply, DiagonalFixedPoints) {
    ComplexMatrix d = ComplexMatrix::Zero(3, 3);
    d.diagonal() << 0.2, -1.0, 3.5;
    EXPECT_LE(max_diff(vnrank::apply(VonNeumannMeasurement::computational(3), d), d), 1e-15);
}

TEST(Apply, KillsOffDiagonal) {
    EXPECT_LE(vnrank::apply(VonNeumannMeasurement::computational(2), oracle::pauli(1)).norm(), 1e-15);
    EXPECT_LE(vnrank::apply(VonNeumannMeasurement::from_unitary(hadamard()), oracle::pauli(3)).norm(), 1e-15);
}

TEST(Apply, DimensionMismatchThrows) {
    EXPECT_THROW((void)vnrank::apply(VonNeumannMeasurement::computational(2), ComplexMatrix::Zero(3, 3)), ShapeError);
}

TEST(ApplyProperty, IdempotentTracePreservingCommuting) {
    std::mt19937_64 rng(5);
    for (std::uint64_t s = 0; s < 50; ++s) {
        const int m = 2 + static_cast<int>(s % 3);
        const auto meas = VonNeumannMeasurement::from_unitary(random_unitary(m, Seed{300 + s}));
        const ComplexMatrix x = random_hermitian(m, rng);
        const ComplexMatrix y = vnrank::apply(meas, x);
        EXPECT_LE(max_diff(vnrank::apply(meas, y), y), 1e-10);
        EXPECT_LE(std::abs(y.trace() - x.trace()), 1e-10);
        EXPECT_TRUE(is_hermitian(y));
        for (int i = 0; i < m; ++i) {
            const ComplexMatrix p = meas.projector(i);
            EXPECT_LE((p * y - y * p).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

TEST(Lift, PauliComputationalBasis) {
    const auto meas = VonNeumannMeasurement::computational(2);
    RealMatrix expected = RealMatrix::Zero(3, 3);
    expected(2, 2) = 1.0;
    const LiftedMeasurement normalized = lift_matrix(meas, pauli_basis());
    EXPECT_LE((normalized.matrix - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(numerical_rank(normalized.matrix), 1);
    // Unnormalized sigma_1, sigma_2, sigma_3 give the same matrix.
    const LiftedMeasurement raw = lift_matrix_general(meas, scaled(pauli_basis(), kSqrt2));
    EXPECT_LE((raw.matrix - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Lift, GellMannComputationalBasis) {
    const auto meas = VonNeumannMeasurement::computational(3);
    RealVector d(8);
    d << 0, 0, 1, 0, 0, 0, 0, 1;
    const RealMatrix expected = d.asDiagonal();
    const LiftedMeasurement normalized = lift_matrix(meas, gell_mann_lambda_basis());
    EXPECT_LE((normalized.matrix - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(numerical_rank(normalized.matrix), 2);
    const LiftedMeasurement raw = lift_matrix_general(meas, scaled(gell_mann_lambda_basis(), kSqrt2));
    EXPECT_LE((raw.matrix - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Lift, RandomQuartIsIdempotentRankThree) {
    const auto meas = VonNeumannMeasurement::from_unitary(random_unitary(4, Seed{77}));
    const LiftedMeasurement l = lift_matrix(meas, gell_mann_basis(4));
    EXPECT_LT(l.idempotency_defect(), 1e-10);
    EXPECT_EQ(numerical_rank(l.matrix), 3);
    EXPECT_EQ(oracle::elimination_rank(l.matrix), 3);
}

TEST(Lift, Errors) {
    const auto meas = VonNeumannMeasurement::computational(2);
    EXPECT_THROW((void)lift_matrix(meas, gell_mann_basis(3)), ShapeError);
    EXPECT_THROW((void)lift_matrix(meas, scaled(gell_mann_basis(2), 2.0)), DomainError);
}

TEST(Lift, ProjectionAndGramRoutesAgree) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const int m = 2 + static_cast<int>(s % 3);
        const auto meas = VonNeumannMeasurement::from_unitary(random_unitary(m, Seed{400 + s}));
        const HermitianBasis b = gell_mann_basis(m);
        EXPECT_LE((lift_matrix(meas, b).matrix - lift_matrix_general(meas, b).matrix).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Lift, NonOrthogonalBasisKeepsRank) {
    // mu' = mu Q for invertible Q gives M' = Q^-1 M Q.
    std::mt19937_64 rng(8);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const int m = 2 + static_cast<int>(s % 2);
        const int k = m * m - 1;
        RealMatrix q(k, k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                q(i, j) = normal(rng) + (i == j ? 3.0 : 0.0);
            }
        }
        const HermitianBasis b = gell_mann_basis(m);
        std::vector<ComplexMatrix> elems;
        for (int j = 0; j < k; ++j) {
            ComplexMatrix e = ComplexMatrix::Zero(m, m);
            for (int i = 0; i < k; ++i) {
                e += q(i, j) * b[i];
            }
            elems.push_back(e);
        }
        const HermitianBasis skew(m, elems, std::vector<BasisLabel>(static_cast<std::size_t>(k)));
        const auto meas = VonNeumannMeasurement::from_unitary(random_unitary(m, Seed{500 + s}));
        const RealMatrix mm = lift_matrix(meas, b).matrix;
        const LiftedMeasurement general = lift_matrix_general(meas, skew);
        EXPECT_LE((general.matrix - q.inverse() * mm * q).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_EQ(numerical_rank(general.matrix), m - 1);
        EXPECT_LT(general.idempotency_defect(), 1e-9);
    }
}

TEST(LiftProperty, BasisCovariance) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const int m = 2 + static_cast<int>(s % 3);
        const int k = m * m - 1;
        const auto meas = VonNeumannMeasurement::from_unitary(random_unitary(m, Seed{600 + s}));
        const RealMatrix o = random_orthogonal(k, Seed{700 + s});
        const HermitianBasis b = gell_mann_basis(m);
        const RealMatrix mw = lift_matrix(meas, b).matrix;
        const RealMatrix mmu = lift_matrix(meas, rotate_basis(b, o)).matrix;
        EXPECT_LE((mmu - o.transpose() * mw * o).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LE((mw - o * mmu * o.transpose()).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(LiftProperty, SymmetricProjector) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const int m = 2 + static_cast<int>(s % 3);
        const RealMatrix mm =
            lift_matrix(VonNeumannMeasurement::from_unitary(random_unitary(m, Seed{800 + s})), gell_mann_basis(m))
                .matrix;
        EXPECT_LE((mm - mm.transpose()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(mm.trace(), m - 1.0, 1e-12);
    }
}

TEST(BuildC, IdentityQubit) {
    RealMatrix expected(2, 3);
    expected << 1 / kSqrt2, 0, 0, -1 / kSqrt2, 0, 0;
    const RealMatrix c = build_C(ComplexMatrix::Identity(2, 2));
    EXPECT_LE((c - expected).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(numerical_rank(c), 1);
}

TEST(BuildC, QutritRankTwoAndColumnsSumToZero) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const ComplexMatrix a = random_unitary(3, Seed{900 + s});
        const RealMatrix c = build_C(a);
        EXPECT_EQ(numerical_rank(c), 2);
        EXPECT_EQ(oracle::elimination_rank(c), 2);
        EXPECT_LE(c.colwise().sum().norm(), 1e-12);
    }
}

TEST(BuildC, RejectsNonUnitary) {
    ComplexMatrix a(2, 2);
    a << 1, 1, 0, 1;
    EXPECT_THROW((void)build_C(a), UnitarityError);
    EXPECT_THROW((void)build_C0(a), UnitarityError);
}

TEST(BuildC0, IdentityQubit) {
    ComplexMatrix expected = ComplexMatrix::Zero(2, 3);
    expected(0, 0) = 1.0;
    expected(1, 0) = -1.0;
    const ComplexMatrix c0 = build_C0(ComplexMatrix::Identity(2, 2));
    EXPECT_LE(max_diff(c0, expected), 1e-15);
    EXPECT_EQ(numerical_rank(c0), 1);
}

TEST(BuildC0, RankMatchesBuildCAndRowsSumToZero) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const ComplexMatrix a = random_unitary(3, Seed{1000 + s});
        const ComplexMatrix c0 = build_C0(a);
        EXPECT_EQ(numerical_rank(c0), numerical_rank(build_C(a)));
        EXPECT_EQ(oracle::elimination_rank(c0), 2);
        EXPECT_LE(c0.colwise().sum().norm(), 1e-12);
    }
}

TEST(BuildC0, BlockDiagonalUnitaryStillRankMMinusOne) {
    // Direct sum 1 (+) U' exercises the zero-pattern branch of the rank argument.
    ComplexMatrix a = ComplexMatrix::Zero(4, 4);
    a(0, 0) = 1.0;
    a.bottomRightCorner(3, 3) = random_unitary(3, Seed{5});
    EXPECT_EQ(numerical_rank(build_C0(a)), 3);
    EXPECT_EQ(numerical_rank(build_C(a)), 3);
    // Permutation matrices have many exact zeros.
    ComplexMatrix perm = ComplexMatrix::Zero(3, 3);
    perm(0, 2) = perm(1, 0) = perm(2, 1) = 1.0;
    EXPECT_EQ(numerical_rank(build_C0(perm)), 2);
    EXPECT_EQ(numerical_rank(build_C(perm)), 2);
}

TEST(Consistency, WorkedCases) {
    EXPECT_LE(consistency_check(VonNeumannMeasurement::computational(2), gell_mann_basis(2)).max_deviation, 1e-12);
    EXPECT_LE(consistency_check(VonNeumannMeasurement::from_unitary(hadamard()), gell_mann_basis(2)).max_deviation,
              1e-12);
    EXPECT_LE(consistency_check(VonNeumannMeasurement::from_unitary(random_unitary(4, Seed{3})), gell_mann_basis(4))
                  .max_deviation,
              1e-10);
}

TEST(Consistency, DetectsWrongBasisOrder) {
    // The C columns follow the canonical order; a permuted basis must not match.
    const auto meas = VonNeumannMeasurement::from_unitary(random_unitary(2, Seed{4}));
    RealMatrix o = RealMatrix::Zero(3, 3);
    o(0, 1) = o(1, 0) = o(2, 2) = 1.0;
    EXPECT_GT(consistency_check(meas, rotate_basis(gell_mann_basis(2), o)).max_deviation, 1e-3);
}
