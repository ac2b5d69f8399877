"""The alpha/beta halves of q-vectors and the canonical A, B, C vectors."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError
from .pluecker import QVector, qvectors
from .state import ThreeQubitState

RELATION_TOL = 1e-9
DEGENERATE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class AlphaBeta:
    partition: int
    alpha: np.ndarray
    beta: np.ndarray


@dataclass(frozen=True, eq=False)
class VectorTriple:
    """A rotates with qubit a, B with qubit b, C with qubit c."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray

    def __iter__(self):
        return iter((self.A, self.B, self.C))

    def to_json(self, phase: float | None = None) -> dict:
        from .state import complex_pairs

        out = {"A": complex_pairs(self.A), "B": complex_pairs(self.B), "C": complex_pairs(self.C)}
        if phase is not None:
            out["phase"] = float(phase)
        return out


@dataclass(frozen=True, eq=False)
class GaugedTriple:
    phase: float
    A_R: np.ndarray
    A_I: np.ndarray
    B_R: np.ndarray
    B_I: np.ndarray
    C_R: np.ndarray
    C_I: np.ndarray
    degenerate: bool = False

    def parts(self, name: str) -> tuple[np.ndarray, np.ndarray]:
        return getattr(self, f"{name}_R"), getattr(self, f"{name}_I")


def split(q: QVector) -> AlphaBeta:
    return AlphaBeta(q.partition, q.components[:3].copy(), q.components[3:].copy())


def relation_residuals(qs) -> tuple[float, float, float]:
    """Max deviation of beta^(s) = -i alpha^(s+1) for s = 1, 2, 3 (cyclic)."""
    ab = [split(q) for q in qs]
    return tuple(float(np.abs(ab[s].beta + 1j * ab[(s + 1) % 3].alpha).max()) for s in range(3))


def triple_from_qvectors(qs) -> VectorTriple:
    res = relation_residuals(qs)
    if max(res) > RELATION_TOL:
        raise ConsistencyError(f"inter-partition relations violated: residuals {res}")
    q1, q2, q3 = qs
    return VectorTriple(A=q3.alpha.copy(), B=q1.alpha.copy(), C=q2.alpha.copy())


def extract_triple(state: ThreeQubitState) -> VectorTriple:
    return triple_from_qvectors(qvectors(state))


def fix_gauge(t: VectorTriple) -> GaugedTriple:
    """Choose phi so the real and imaginary parts of e^{2i phi} A are orthogonal.

    phi = -arg(A.A)/4, shifted by pi/4 if that leaves the imaginary part the
    longer one.  When A.A vanishes the phase is undefined and phi = 0.
    """
    AA = complex(t.A @ t.A)
    if abs(AA) < DEGENERATE_TOL:
        phi, degenerate = 0.0, True
    else:
        phi, degenerate = -0.25 * np.angle(AA), False
        gA = np.exp(2j * phi) * t.A
        if np.linalg.norm(gA.imag) > np.linalg.norm(gA.real):
            phi += np.pi / 4
    g = np.exp(2j * phi)
    A, B, C = (g * v for v in t)
    return GaugedTriple(phi, A.real, A.imag, B.real, B.imag, C.real, C.imag, degenerate)


def _frame(v: np.ndarray) -> np.ndarray:
    R, I = v.real, v.imag
    return np.column_stack([R, I, np.cross(R, I)])


def induced_rotation(before: np.ndarray, after: np.ndarray) -> np.ndarray:
    """Real 3x3 map R with after = R before, read off the frames (X_R, X_I, X_R x X_I).

    Needs X_R and X_I linearly independent.
    """
    F = _frame(before)
    if abs(np.linalg.det(F)) < DEGENERATE_TOL:
        raise ConsistencyError("real and imaginary parts are parallel; rotation is not determined")
    return _frame(after) @ np.linalg.inv(F)
