"""Plücker coordinates of the three partition matrices and the q-vector change of variables."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .state import ThreeQubitState, _check_partition

SQRT2 = np.sqrt(2.0)

# (r, r') pairs with r < r' in the order of the six-vector (P12, P13, P14, P23, P24, P34)
PVEC_INDEX = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_BINARY = ((0, 0), (0, 1), (1, 0), (1, 1))

# Symmetric form with p^T OMEGA p = 2 (P12 P34 - P13 P24 + P14 P23).  The -1
# entries sit on the anti-diagonal at (2,5)/(5,2) in 1-based indexing; the
# Plücker identity fails with them at (2,4)/(4,2).
OMEGA = np.zeros((6, 6))
OMEGA[0, 5] = OMEGA[5, 0] = OMEGA[2, 3] = OMEGA[3, 2] = 1.0
OMEGA[1, 4] = OMEGA[4, 1] = -1.0
OMEGA.setflags(write=False)

# Unitary with U_PQ^T OMEGA U_PQ = 1, so that p^T OMEGA p' = q . q'.
U_PQ = np.array(
    [
        [1j, 1, 0, 0, 0, 0],
        [0, 0, 0, -1, 1j, 0],
        [0, 0, -1j, 0, 0, 1],
        [0, 0, 1j, 0, 0, 1],
        [0, 0, 0, 1, 1j, 0],
        [-1j, 1, 0, 0, 0, 0],
    ]
) / SQRT2
U_PQ.setflags(write=False)

# Magic Bell basis (rows are the phased Bell states Psi+, Psi-, Phi-, Phi+ in
# the |00>, |01>, |10>, |11> basis of the pair).
U_BELL = np.array(
    [
        [0, 1j, 1j, 0],
        [0, -1, 1, 0],
        [1j, 0, 0, -1j],
        [1, 0, 0, 1],
    ]
) / SQRT2
U_BELL.setflags(write=False)

PLUECKER_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class PVector:
    partition: int
    components: np.ndarray

    def omega_form(self) -> complex:
        return complex(self.components @ OMEGA @ self.components)


@dataclass(frozen=True, eq=False)
class QVector:
    partition: int
    components: np.ndarray

    @property
    def alpha(self) -> np.ndarray:
        return self.components[:3]

    @property
    def beta(self) -> np.ndarray:
        return self.components[3:]

    def dot(self) -> complex:
        """Unconjugated bilinear ``q . q``."""
        return complex(self.components @ self.components)

    def norm2(self) -> float:
        return float(np.vdot(self.components, self.components).real)


def _amp(state: ThreeQubitState, i: int, j: int, k: int) -> complex:
    return state.amplitudes[4 * i + 2 * j + k]


def pluecker_matrix(state: ThreeQubitState, s: int) -> np.ndarray:
    """Antisymmetric 4x4 matrix of 2x2 subdeterminants for partition ``s``.

    Written out per partition from the explicit index formulas rather than by
    permuting partition 1, so a relabelling slip cannot hide here.
    """
    _check_partition(s)
    c = lambda i, j, k: _amp(state, i, j, k)  # noqa: E731
    P = np.zeros((4, 4), dtype=complex)
    for r, (n, m) in enumerate(_BINARY):
        for rr, (k, l) in enumerate(_BINARY):
            if s == 1:
                P[r, rr] = c(0, n, m) * c(1, k, l) - c(1, n, m) * c(0, k, l)
            elif s == 2:
                P[r, rr] = c(m, 0, n) * c(l, 1, k) - c(m, 1, n) * c(l, 0, k)
            else:
                P[r, rr] = c(n, m, 0) * c(k, l, 1) - c(n, m, 1) * c(k, l, 0)
    return P


def antisym_to_vec(P: np.ndarray) -> np.ndarray:
    return np.array([P[r, rr] for r, rr in PVEC_INDEX])


def vec_to_antisym(p: np.ndarray) -> np.ndarray:
    P = np.zeros((4, 4), dtype=complex)
    for val, (r, rr) in zip(p, PVEC_INDEX):
        P[r, rr] = val
        P[rr, r] = -val
    return P


def pluecker_pvector(state: ThreeQubitState, s: int) -> PVector:
    return PVector(s, antisym_to_vec(pluecker_matrix(state, s)))


def to_qvector(p: PVector) -> QVector:
    violation = abs(p.omega_form())
    if violation > PLUECKER_TOL:
        raise ValidationError(f"p-vector violates the Plücker relation by {violation:.3e}")
    return QVector(p.partition, U_PQ.conj().T @ p.components)


def from_qvector(q: QVector) -> PVector:
    return PVector(q.partition, U_PQ @ q.components)


def qvector(state: ThreeQubitState, s: int) -> QVector:
    return to_qvector(pluecker_pvector(state, s))


def qvectors(state: ThreeQubitState) -> tuple[QVector, QVector, QVector]:
    return tuple(qvector(state, s) for s in (1, 2, 3))


def bell_basis_pvector(state: ThreeQubitState) -> np.ndarray:
    """Six independent entries of ``U_BELL P U_BELL^T`` for partition 1."""
    P = pluecker_matrix(state, 1)
    return antisym_to_vec(U_BELL @ P @ U_BELL.T)


def bell_three_tangle(state: ThreeQubitState) -> float:
    """``4 |p_B . p_B|`` from the Bell-basis Plücker vector."""
    pb = bell_basis_pvector(state)
    return 4.0 * abs(pb @ pb)
