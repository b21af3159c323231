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

#include "vnrank/classify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "vnrank/sampler.hpp"
#include "vnrank/selftest.hpp"

using namespace vnrank;

namespace {

const std::pair<int, int> kPairs[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};

void expect_consistent(const Verdict &v) {
    EXPECT_EQ(v.ruled_out, v.computed_rank > v.threshold);
    EXPECT_EQ(v.status(), v.ruled_out ? "RULED-OUT" : "INCONCLUSIVE");
    EXPECT_GE(v.computed_rank, 0);
    EXPECT_LE(v.computed_rank, std::min(v.evidence.rows(), v.evidence.cols()));
}

} // namespace

TEST(Rho0, OneSidedRuledOutBaselineInconclusive) {
    for (const double x : {std::sqrt(2.0), 2.0, 10.0}) {
        const BlochForm bf = decompose(selftest::rho0_state(x), 2, 2);
        const Verdict cq = check_classical_quantum(bf);
        const Verdict qc = check_quantum_classical(bf);
        const Verdict dk = dakic_condition(bf);
        EXPECT_TRUE(cq.ruled_out);
        EXPECT_EQ(cq.computed_rank, 2);
        EXPECT_EQ(cq.threshold, 1);
        EXPECT_TRUE(qc.ruled_out);
        EXPECT_EQ(qc.computed_rank, 2);
        EXPECT_FALSE(dk.ruled_out);
        EXPECT_EQ(dk.computed_rank, 2);
        EXPECT_EQ(dk.threshold, 2);
        EXPECT_TRUE(check_classical_classical(bf).ruled_out == false);
    }
}

TEST(Rho0, AlsoSeparatedInPauliBasis) {
    const BlochForm bf = decompose(selftest::rho0_state(2.0), 2, 2, pauli_basis(), pauli_basis());
    EXPECT_TRUE(check_classical_quantum(bf).ruled_out);
    EXPECT_FALSE(dakic_condition(bf).ruled_out);
}

TEST(Classify, MaximallyMixedIsInconclusive) {
    for (const auto &[m, n] : kPairs) {
        const BlochForm bf = decompose(ComplexMatrix::Identity(m * n, m * n) / static_cast<double>(m * n), m, n);
        EXPECT_FALSE(check_classical_quantum(bf).ruled_out);
        EXPECT_FALSE(check_quantum_classical(bf).ruled_out);
        EXPECT_FALSE(check_classical_classical(bf).ruled_out);
        EXPECT_EQ(check_classical_quantum(bf).computed_rank, 0);
    }
}

TEST(Classify, ConstructedClassicalQuantumNeverRuledOut) {
    for (const auto &[m, n] : kPairs) {
        for (std::uint64_t s = 0; s < 50; ++s) {
            const ComplexMatrix rho = random_classical_quantum(m, n, derive(Seed{41}, 100 * m + 10 * n + s));
            const BlochForm bf = decompose(rho, m, n);
            EXPECT_FALSE(check_classical_quantum(bf).ruled_out);
            EXPECT_FALSE(dakic_condition(bf).ruled_out);
            // Swapping turns it into a quantum-classical state.
            EXPECT_FALSE(check_quantum_classical(decompose(swap_subsystems(rho, m, n), n, m)).ruled_out);
        }
    }
}

TEST(Classify, ConstructedClassicalClassicalNeverRuledOut) {
    for (const auto &[m, n] : kPairs) {
        for (std::uint64_t s = 0; s < 50; ++s) {
            const BlochForm bf = decompose(random_classical_classical(m, n, derive(Seed{43}, 100 * m + 10 * n + s)), m, n);
            EXPECT_FALSE(check_classical_quantum(bf).ruled_out);
            EXPECT_FALSE(check_quantum_classical(bf).ruled_out);
            EXPECT_FALSE(check_classical_classical(bf).ruled_out);
        }
    }
}

TEST(Classify, RandomStatesAreRuledOut) {
    for (const auto &[m, n] : kPairs) {
        const BlochForm bf = decompose(random_density(m * n, Seed{static_cast<std::uint64_t>(m * 10 + n)}), m, n);
        EXPECT_TRUE(check_classical_quantum(bf).ruled_out);
        EXPECT_TRUE(check_quantum_classical(bf).ruled_out);
        EXPECT_TRUE(check_classical_classical(bf).ruled_out);
    }
}

TEST(Classify, ClassicalClassicalUsesSmallerDimension) {
    const BlochForm bf = decompose(random_density(6, Seed{1}), 3, 2);
    const Verdict v = check_classical_classical(bf);
    EXPECT_EQ(v.threshold, 2);
    EXPECT_EQ(v.target_class, CorrelationClass::classical_classical);
    EXPECT_EQ(check_classical_classical(decompose(random_density(6, Seed{1}), 2, 3)).threshold, 2);
}

TEST(Classify, RankMatchesEliminationOracle) {
    const BlochForm bf = decompose(random_density(9, Seed{17}), 3, 3);
    const Verdict v = check_classical_classical(bf);
    EXPECT_EQ(v.computed_rank, oracle::elimination_rank(correlation_matrix(bf)));
    EXPECT_EQ(v.computed_rank, 9);
}

TEST(ClassifyProperty, VerdictInvariants) {
    for (const auto &[m, n] : kPairs) {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const Seed seed = derive(Seed{47}, 100 * m + 10 * n + s);
            const ComplexMatrix rho = s % 2 == 0 ? random_density(m * n, seed) : random_classical_quantum(m, n, seed);
            const BlochForm bf = decompose(rho, m, n);
            for (const Verdict &v : {check_classical_quantum(bf), check_quantum_classical(bf),
                                     check_classical_classical(bf), dakic_condition(bf)}) {
                expect_consistent(v);
            }
        }
    }
}

TEST(ClassifyProperty, BaselineNeverStrongerThanOneSided) {
    for (const auto &[m, n] : kPairs) {
        for (std::uint64_t s = 0; s < 30; ++s) {
            const Seed seed = derive(Seed{53}, 100 * m + 10 * n + s);
            ComplexMatrix rho = random_density(m * n, seed);
            if (s % 3 == 1) {
                rho = random_classical_quantum(m, n, seed);
            } else if (s % 3 == 2) {
                rho = selftest::rho0_state(1.5 + 0.1 * static_cast<double>(s));
                if (m * n != 4) {
                    continue;
                }
            }
            const BlochForm bf = decompose(rho, m, n);
            if (dakic_condition(bf).ruled_out) {
                EXPECT_TRUE(check_classical_quantum(bf).ruled_out);
            }
        }
    }
}

TEST(ClassifyProperty, LocalUnitaryCovariance) {
    for (const auto &[m, n] : kPairs) {
        for (std::uint64_t s = 0; s < 10; ++s) {
            const Seed seed = derive(Seed{59}, 100 * m + 10 * n + s);
            const ComplexMatrix rho =
                s % 2 == 0 ? random_classical_quantum(m, n, seed) : random_density(m * n, seed);
            const ComplexMatrix u = oracle::explicit_kron(random_unitary(m, derive(seed, 1)),
                                                          random_unitary(n, derive(seed, 2)));
            const BlochForm a = decompose(rho, m, n);
            const BlochForm b = decompose(u * rho * u.adjoint(), m, n);
            EXPECT_EQ(check_classical_quantum(a).computed_rank, check_classical_quantum(b).computed_rank);
            EXPECT_EQ(check_quantum_classical(a).computed_rank, check_quantum_classical(b).computed_rank);
            EXPECT_EQ(check_classical_classical(a).computed_rank, check_classical_classical(b).computed_rank);
        }
    }
}

TEST(BellDiagonal, Weights) {
    const auto w = BellDiagonalSpec{1, 1, -1}.weights();
    EXPECT_DOUBLE_EQ(w[0], 0.0);
    EXPECT_DOUBLE_EQ(w[1], 0.0);
    EXPECT_DOUBLE_EQ(w[2], 0.0);
    EXPECT_DOUBLE_EQ(w[3], 1.0);
    EXPECT_TRUE((BellDiagonalSpec{1, 1, -1}.in_tetrahedron()));
    EXPECT_FALSE((BellDiagonalSpec{1, 1, 1}.in_tetrahedron()));
    EXPECT_TRUE((BellDiagonalSpec{0.5, 0.3, 0.0}.in_octahedron()));
    EXPECT_FALSE((BellDiagonalSpec{1, 1, -1}.in_octahedron()));
}

TEST(BellDiagonal, TetrahedronVerticesArePureAndRuledOut) {
    // Pure Bell states: T has full rank, so every screen fires.
    for (const BellDiagonalSpec v : {BellDiagonalSpec{-1, -1, -1}, BellDiagonalSpec{-1, 1, 1},
                                     BellDiagonalSpec{1, -1, 1}, BellDiagonalSpec{1, 1, -1}}) {
        const ComplexMatrix rho = bell_diagonal_state(v);
        EXPECT_TRUE(validate_density(rho).ok());
        EXPECT_NEAR((rho * rho).trace().real(), 1.0, 1e-14);
        const BlochForm bf = decompose(rho, 2, 2);
        EXPECT_TRUE(check_classical_quantum(bf).ruled_out);
        EXPECT_TRUE(check_quantum_classical(bf).ruled_out);
        EXPECT_TRUE(check_classical_classical(bf).ruled_out);
        EXPECT_EQ(check_classical_classical(bf).computed_rank, 4);
    }
}

TEST(BellDiagonal, OctahedronVerticesAndOriginInconclusive) {
    for (const BellDiagonalSpec v :
         {BellDiagonalSpec{1, 0, 0}, BellDiagonalSpec{-1, 0, 0}, BellDiagonalSpec{0, 1, 0}, BellDiagonalSpec{0, -1, 0},
          BellDiagonalSpec{0, 0, 1}, BellDiagonalSpec{0, 0, -1}, BellDiagonalSpec{0, 0, 0}}) {
        const BlochForm bf = decompose(bell_diagonal_state(v), 2, 2);
        EXPECT_FALSE(check_classical_quantum(bf).ruled_out);
        EXPECT_FALSE(check_quantum_classical(bf).ruled_out);
        EXPECT_FALSE(check_classical_classical(bf).ruled_out);
        EXPECT_FALSE(classify_bell_diagonal(v).verdict_qq);
        EXPECT_TRUE(classify_bell_diagonal(v).separable);
    }
}

TEST(BellDiagonal, ClassificationExamples) {
    const BellDiagonalResult vertex = classify_bell_diagonal({1, 1, -1});
    EXPECT_TRUE(vertex.verdict_qq);
    EXPECT_FALSE(vertex.separable);
    EXPECT_EQ(vertex.nonzero_count, 3);

    const BellDiagonalResult qq = classify_bell_diagonal({0.5, 0.3, 0.0});
    EXPECT_TRUE(qq.verdict_qq);
    EXPECT_TRUE(qq.separable);
    EXPECT_EQ(qq.nonzero_count, 2);

    const BellDiagonalResult single = classify_bell_diagonal({0.0, 0.0, 0.7});
    EXPECT_FALSE(single.verdict_qq);
    EXPECT_EQ(single.nonzero_count, 1);

    const BellDiagonalResult origin = classify_bell_diagonal({0.0, 0.0, 0.0});
    EXPECT_FALSE(origin.verdict_qq);
    EXPECT_EQ(origin.nonzero_count, 0);
}

TEST(BellDiagonal, SeparableQuantumQuantumNotInvariant) {
    const ComplexMatrix rho = bell_diagonal_state({0.5, 0.3, 0.0});
    const InvarianceReport rep = invariance_search(rho, 2, 2, Side::left, 500, Seed{3});
    EXPECT_GT(rep.best_residual, 0.01);
}

TEST(BellDiagonal, OutsideTetrahedronThrows) {
    EXPECT_THROW((void)classify_bell_diagonal({1, 1, 1}), InvalidStateError);
    EXPECT_THROW((void)classify_bell_diagonal({0.9, 0.9, 0.9}), InvalidStateError);
    EXPECT_THROW((void)classify_bell_diagonal({std::nan(""), 0, 0}), InvalidStateError);
}

TEST(BellDiagonalProperty, TetrahedronMatchesDensityValidation) {
    const double step = 0.25;
    for (double t1 = -1.0; t1 <= 1.0 + 1e-12; t1 += step) {
        for (double t2 = -1.0; t2 <= 1.0 + 1e-12; t2 += step) {
            for (double t3 = -1.0; t3 <= 1.0 + 1e-12; t3 += step) {
                const BellDiagonalSpec spec{t1, t2, t3};
                EXPECT_EQ(spec.in_tetrahedron(), validate_density(bell_diagonal_state(spec)).ok())
                    << t1 << " " << t2 << " " << t3;
            }
        }
    }
}

TEST(BellDiagonalProperty, AgreesWithGeneralChecks) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int tested = 0;
    while (tested < 200) {
        BellDiagonalSpec spec{u(rng), u(rng), u(rng)};
        if (tested % 4 == 1) {
            spec.t2 = 0.0;
        } else if (tested % 4 == 2) {
            spec.t1 = spec.t3 = 0.0;
        }
        if (!spec.in_tetrahedron()) {
            continue;
        }
        ++tested;
        const BlochForm bf = decompose(bell_diagonal_state(spec), 2, 2);
        const bool general = check_classical_quantum(bf).ruled_out && check_quantum_classical(bf).ruled_out;
        EXPECT_EQ(classify_bell_diagonal(spec).verdict_qq, general);
    }
}

TEST(Rho2Family, Qubits) {
    RealVector two(3), one(3);
    two << 0.3, 0.3, 0.0;
    one << 0.0, 0.0, 0.5;
    EXPECT_TRUE(check_rho2_family(two, 2).ruled_out());
    EXPECT_FALSE(check_rho2_family(one, 2).ruled_out());
}

TEST(Rho2Family, Qutrits) {
    RealVector t = RealVector::Zero(8);
    t(0) = 0.1;
    t(5) = 0.2;
    EXPECT_FALSE(check_rho2_family(t, 3).ruled_out());
    EXPECT_EQ(check_rho2_family(t, 3).classical_quantum.computed_rank, 2);
    t(7) = 0.05;
    EXPECT_TRUE(check_rho2_family(t, 3).ruled_out());
    EXPECT_THROW((void)check_rho2_family(RealVector::Zero(3), 3), ShapeError);
}

TEST(Rho2Family, MatchesDecomposition) {
    // rho_2 = (I + sum t_i w_i (x) w_i) / m^2 with the canonical basis.
    RealVector t = RealVector::Zero(8);
    t << 0.05, 0.0, 0.1, 0.0, -0.05, 0.0, 0.0, 0.02;
    const HermitianBasis b = gell_mann_basis(3);
    ComplexMatrix rho = ComplexMatrix::Identity(9, 9);
    for (int i = 0; i < 8; ++i) {
        rho += t(i) * oracle::explicit_kron(b[i], b[i]);
    }
    rho /= 9.0;
    ASSERT_TRUE(validate_density(rho).ok());
    const BlochForm bf = decompose(rho, 3, 3);
    EXPECT_LE((bf.t - RealMatrix(t.asDiagonal())).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_EQ(check_classical_quantum(bf).ruled_out, check_rho2_family(t, 3).classical_quantum.ruled_out);
    EXPECT_TRUE(check_rho2_family(t, 3).ruled_out());
}

TEST(CorrelationClassNames, ToString) {
    EXPECT_EQ(to_string(CorrelationClass::classical_quantum), "classical-quantum");
    EXPECT_EQ(to_string(CorrelationClass::quantum_classical), "quantum-classical");
    EXPECT_EQ(to_string(CorrelationClass::classical_classical), "classical-classical");
}
