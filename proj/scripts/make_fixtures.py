#!/usr/bin/env python3
# Copyright 2026 The vnrank Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the JSON state and unitary fixtures under fixtures/.

States are assembled from explicit Pauli-operator expressions (unnormalized
sigma matrices), so their Bloch coefficients in the normalized basis differ
from the expression's coefficients by sqrt2 for R, S and by 2 for T.
"""

import json
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

I2 = np.eye(2)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def flat(a):
    return [[float(z.real), float(z.imag)] for z in np.asarray(a, dtype=complex).reshape(-1)]


def write(name, obj):
    path = OUT / name
    path.write_text(json.dumps(obj, indent=1) + "\n")
    print("wrote", path)


def state(name, m, n, rho, description):
    rho = 0.5 * (rho + rho.conj().T)
    write(name, {"description": description, "m": m, "n": n, "rho": flat(rho)})


def rho0(x):
    return (np.kron(I2, I2) + (np.kron(SZ, I2) + np.kron(I2, SZ)) / x
            + (np.kron(SX, SX) + np.kron(SZ, SZ)) / x**2) / 4


def bell(t1, t2, t3):
    return (np.eye(4) + t1 * np.kron(SX, SX) + t2 * np.kron(SY, SY) + t3 * np.kron(SZ, SZ)) / 4


def haar(rng, m):
    g = rng.normal(size=(m, m)) + 1j * rng.normal(size=(m, m))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def density(rng, d):
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def main():
    OUT.mkdir(exist_ok=True)
    conv = ("coefficients above use unnormalized Pauli operators; "
            "normalized-basis coefficients are R' = sqrt2 R, S' = sqrt2 S, T' = 2 T")
    for label, x in (("sqrt2", np.sqrt(2.0)), ("2", 2.0), ("10", 10.0)):
        state(f"rho0_x_{label}.json", 2, 2, rho0(x),
              f"(II + (ZI + IZ)/x + (XX + ZZ)/x^2)/4 at x = {label}; R = S = (0,0,1/x), "
              f"T = diag(1/x^2, 0, 1/x^2); {conv}")
    state("maximally_mixed_2x2.json", 2, 2, np.eye(4) / 4, "I/4")
    state("bell_diagonal_vertex.json", 2, 2, bell(1, 1, -1),
          "Bell-diagonal t = (1, 1, -1), a tetrahedron vertex; " + conv)
    state("bell_diagonal_qq.json", 2, 2, bell(0.5, 0.3, 0.0),
          "Bell-diagonal t = (0.5, 0.3, 0); " + conv)

    rng = np.random.default_rng(20240601)
    u = haar(rng, 2)
    p = np.array([0.7, 0.3])
    cq = sum(p[i] * np.kron(np.outer(u[i], u[i].conj()), density(rng, 3)) for i in range(2))
    state("classical_quantum_2x3.json", 2, 3, cq,
          "sum_i p_i |phi_i><phi_i| (x) rho_i with p = (0.7, 0.3) and a random qubit basis")
    state("product_2x3.json", 2, 3, np.kron(density(rng, 2), density(rng, 3)), "rho_A (x) rho_B")
    state("random_3x3.json", 3, 3, density(rng, 9), "random two-qutrit state G G^dagger / Tr")

    write("invalid_not_psd.json", {"description": "diag(1.5, -0.5, 0, 0): unit trace, not PSD",
                                    "m": 2, "n": 2, "rho": flat(np.diag([1.5, -0.5, 0, 0]))})

    write("unitary_hadamard.json", {"m": 2, "u": flat(np.array([[1, 1], [1, -1]]) / np.sqrt(2))})
    write("unitary_identity3.json", {"m": 3, "u": flat(np.eye(3))})
    write("unitary_random4.json", {"m": 4, "u": flat(haar(rng, 4))})
    write("unitary_invalid.json", {"m": 2, "u": flat(np.array([[1, 1], [0, 1]]))})


if __name__ == "__main__":
    main()
