"""Shared test helpers.

``branch_amplitudes_bruteforce`` evolves a basis vector on the full
truncated space by eigendecomposition and reads the four amplitudes of one
evolution branch straight out of the state vector.  It shares no formula
with the closed-form coefficient code and is the reference every quad test
compares against.
"""

from __future__ import annotations

import numpy as np
import pytest

from tcsim.oracle import OracleConfig, Propagator, build_hamiltonian
from tcsim.states import Couplings


def full_index(q1: int, q2: int, m: int, n_max: int) -> int:
    # qubit1 slowest, oscillator fastest; qubit index 1 = excited
    return (q1 * 2 + q2) * (n_max + 1) + m


def basis_vector(q1: int, q2: int, m: int, n_max: int) -> np.ndarray:
    vec = np.zeros(4 * (n_max + 1), dtype=complex)
    vec[full_index(q1, q2, m, n_max)] = 1.0
    return vec


def branch_amplitudes_bruteforce(
    n: int, couplings: Couplings, t: float, primed: bool
) -> np.ndarray:
    """Four branch amplitudes at time t from dense evolution of the full
    Hamiltonian (interaction picture)."""
    n_max = n + 3
    prop = Propagator(build_hamiltonian(OracleConfig(n_max=n_max, couplings=couplings)))
    if primed:
        psi0 = basis_vector(1, 0, n, n_max)
        targets = [None if n == 0 else (1, 1, n - 1), (1, 0, n), (0, 1, n), (0, 0, n + 1)]
    else:
        psi0 = basis_vector(1, 1, n, n_max)
        targets = [(1, 1, n), (1, 0, n + 1), (0, 1, n + 1), (0, 0, n + 2)]
    psi_t = prop.evolve_state(psi0, [t])[:, 0]
    return np.array(
        [0.0 if tgt is None else psi_t[full_index(*tgt, n_max)] for tgt in targets],
        dtype=complex,
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
