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

// Lifts a random qutrit measurement, then screens a classical-quantum state
// and a generic state built from it.

#include <iostream>

#include "vnrank/vnrank.hpp"

int main() {
    using namespace vnrank;

    const ComplexMatrix u = random_unitary(3, Seed{42});
    const auto meas = VonNeumannMeasurement::from_unitary(u);
    const LiftedMeasurement lifted = lift_matrix(meas, gell_mann_basis(3));
    std::cout << "lifted 8x8 matrix: rank " << numerical_rank(lifted.matrix) << ", ||M^2 - M||_F = "
              << lifted.idempotency_defect() << "\n";

    const ComplexMatrix cq = random_classical_quantum(3, 2, Seed{7});
    const ComplexMatrix generic = random_density(6, Seed{7});
    for (const auto &[name, rho] : {std::pair{"classical-quantum sample", cq}, std::pair{"random state", generic}}) {
        const BlochForm bf = decompose(rho, 3, 2);
        const Verdict v = check_classical_quantum(bf);
        std::cout << name << ": rank(R|T) = " << v.computed_rank << ", threshold " << v.threshold << " -> "
                  << v.status() << "\n";
    }
}
