"""Three-qubit pure states, partition rearrangements and reduced density matrices.

Amplitudes are stored in linear-index order ``4*i + 2*j + k`` where ``i``, ``j``
and ``k`` are the computational-basis values of qubits a, b and c.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

NORM_TOL = 1e-9
UNITARY_TOL = 1e-10

QUBITS = ("a", "b", "c")

# partition id -> (single qubit, ordered pair); the pair order follows the
# cyclic relabelling ijk -> jki -> kij
PARTITIONS = {1: ("a", ("b", "c")), 2: ("b", ("c", "a")), 3: ("c", ("a", "b"))}
PAIR_PARTITION = {"bc": 1, "ca": 2, "ab": 3}

PAULI = {
    "I": np.eye(2, dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli_pair(label: str) -> np.ndarray:
    """4x4 operator ``sigma_label[0] (x) sigma_label[1]``; ``I`` is the identity."""
    if len(label) != 2 or any(ch not in PAULI for ch in label):
        raise ValidationError(f"invalid Pauli pair label {label!r}")
    return np.kron(PAULI[label[0]], PAULI[label[1]])


@dataclass(frozen=True, eq=False)
class ThreeQubitState:
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (8,):
            raise ValidationError(f"expected 8 amplitudes, got {amps.size}")
        if not np.all(np.isfinite(amps)):
            raise ValidationError("amplitudes must be finite")
        norm = np.vdot(amps, amps).real
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(f"state is not normalized: <psi|psi> = {norm!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    def __getitem__(self, ijk: tuple[int, int, int]) -> complex:
        i, j, k = ijk
        return self.amplitudes[4 * i + 2 * j + k]

    @property
    def tensor(self) -> np.ndarray:
        """Amplitudes as a (2, 2, 2) array indexed [i, j, k]."""
        return self.amplitudes.reshape(2, 2, 2)

    def with_phase(self, phi: float) -> "ThreeQubitState":
        return ThreeQubitState(np.exp(1j * phi) * self.amplitudes)

    def overlap(self, other: "ThreeQubitState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def fidelity(self, other: "ThreeQubitState") -> float:
        return abs(self.overlap(other)) ** 2

    def to_json(self) -> dict:
        return {"amplitudes": [[float(z.real), float(z.imag)] for z in self.amplitudes]}

    @classmethod
    def from_json(cls, obj: dict) -> "ThreeQubitState":
        try:
            pairs = obj["amplitudes"]
        except (KeyError, TypeError):
            raise ValidationError("state JSON needs an 'amplitudes' list") from None
        return cls(complex_list(pairs, 8))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[complex, str]], scale: complex = 1.0) -> "ThreeQubitState":
        """Build ``scale * sum(coef |bits>)`` from ``(coef, "011")`` pairs."""
        amps = np.zeros(8, dtype=complex)
        for coef, bits in terms:
            amps[int(bits, 2)] += coef
        return cls(scale * amps)


def complex_list(pairs: Sequence, n: int) -> np.ndarray:
    """Parse ``[[re, im], ...]`` of length ``n`` into a complex array."""
    if not isinstance(pairs, (list, tuple)) or len(pairs) != n:
        raise ValidationError(f"expected a list of {n} [re, im] pairs")
    out = np.empty(n, dtype=complex)
    for idx, pair in enumerate(pairs):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ValidationError(f"entry {idx} is not a [re, im] pair")
        try:
            re, im = float(pair[0]), float(pair[1])
        except (TypeError, ValueError):
            raise ValidationError(f"entry {idx} is not numeric") from None
        if not (np.isfinite(re) and np.isfinite(im)):
            raise ValidationError(f"entry {idx} is not finite")
        out[idx] = complex(re, im)
    return out


def complex_pairs(values) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in np.asarray(values, dtype=complex).reshape(-1)]


def normalize(amplitudes) -> ThreeQubitState:
    amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
    norm = np.linalg.norm(amps)
    if norm == 0 or not np.isfinite(norm):
        raise ValidationError("cannot normalize a zero or non-finite vector")
    return ThreeQubitState(amps / norm)


def random_state(rng: np.random.Generator) -> ThreeQubitState:
    """Haar-uniform state (up to phase) from 16 standard normals."""
    x = rng.standard_normal(16)
    return normalize(x[:8] + 1j * x[8:])


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


@dataclass(frozen=True, eq=False)
class PartitionMatrix:
    partition: int
    c0: np.ndarray
    c1: np.ndarray

    @property
    def matrix(self) -> np.ndarray:
        """The 4x2 arrangement ``(c0, c1)``."""
        return np.stack([self.c0, self.c1], axis=1)


def _check_partition(s: int) -> int:
    if s not in PARTITIONS:
        raise ValidationError(f"partition must be 1, 2 or 3, got {s!r}")
    return s


def _partition_axes(s: int) -> tuple[int, int, int]:
    # axis order (single, pair first, pair second) within the [i, j, k] tensor
    single, (p, q) = PARTITIONS[s]
    return tuple(QUBITS.index(x) for x in (single, p, q))


def partition_matrix(state: ThreeQubitState, s: int) -> PartitionMatrix:
    """Columns ``c_x`` hold the amplitudes with the partition's single qubit equal to x.

    Rows run over the ordered pair (bc, ca or ab) in binary order, so for
    partition 1 ``c0 = (c000, c001, c010, c011)``.
    """
    _check_partition(s)
    arranged = state.tensor.transpose(_partition_axes(s)).reshape(2, 4)
    return PartitionMatrix(s, arranged[0].copy(), arranged[1].copy())


def from_partition_matrix(pm: PartitionMatrix) -> ThreeQubitState:
    """Inverse of :func:`partition_matrix`."""
    axes = _partition_axes(_check_partition(pm.partition))
    arranged = np.stack([pm.c0, pm.c1]).reshape(2, 2, 2)
    return ThreeQubitState(arranged.transpose(np.argsort(axes)).reshape(8))


def parse_target(target: str) -> tuple[str, ...]:
    qubits = tuple(target)
    if not qubits or len(qubits) > 2 or any(q not in QUBITS for q in qubits) or len(set(qubits)) != len(qubits):
        raise ValidationError(f"target must be a qubit or an ordered pair of distinct qubits, got {target!r}")
    return qubits


def embed(u: np.ndarray, target: str) -> np.ndarray:
    """Lift a 2x2 (single qubit) or 4x4 (ordered pair) operator to the 8-dim space."""
    qubits = parse_target(target)
    u = np.asarray(u, dtype=complex)
    dim = 2 ** len(qubits)
    if u.shape != (dim, dim):
        raise ValidationError(f"operator on {target!r} must be {dim}x{dim}, got {u.shape}")
    rest = [q for q in QUBITS if q not in qubits]
    full = np.kron(u, np.eye(2 ** len(rest))).reshape((2,) * 6)
    order = list(qubits) + rest
    perm = [order.index(q) for q in QUBITS]
    return full.transpose(perm + [3 + p for p in perm]).reshape(8, 8)


def check_unitary(u: np.ndarray, tol: float = UNITARY_TOL) -> None:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValidationError(f"operator must be square, got shape {u.shape}")
    err = np.abs(u.conj().T @ u - np.eye(u.shape[0])).max()
    if err > tol:
        raise ValidationError(f"operator is not unitary (max |U^dag U - 1| = {err:.3e})")


def apply_unitary(state: ThreeQubitState, u: np.ndarray, target: str) -> ThreeQubitState:
    check_unitary(u)
    return ThreeQubitState(embed(u, target) @ state.amplitudes)


def apply_operator(state: ThreeQubitState, op: np.ndarray, target: str) -> np.ndarray:
    """Apply any (possibly non-unitary) local operator; returns raw amplitudes."""
    return embed(op, target) @ state.amplitudes


@dataclass(frozen=True, eq=False)
class ReducedDensity:
    """Reduced density matrix together with a factor ``M`` such that ``matrix = M M^dag``.

    The factor's columns are the unnormalized conditional states of the kept
    subsystem, one per basis state of the traced-out part.
    """

    subsystem: str
    matrix: np.ndarray
    factor: np.ndarray


SUBSYSTEMS = ("a", "b", "c", "bc", "ca", "ab")


def reduced_density(state: ThreeQubitState, subsystem: str) -> ReducedDensity:
    if subsystem not in SUBSYSTEMS:
        raise ValidationError(f"subsystem must be one of {SUBSYSTEMS}, got {subsystem!r}")
    keep = list(subsystem)
    traced = [q for q in QUBITS if q not in keep]
    axes = [QUBITS.index(q) for q in keep + traced]
    factor = state.tensor.transpose(axes).reshape(2 ** len(keep), 2 ** len(traced))
    rho = factor @ factor.conj().T
    return ReducedDensity(subsystem, rho, factor)


def bloch_vector(state: ThreeQubitState, qubit: str) -> np.ndarray:
    """``m_n = Tr(rho_qubit sigma_n)`` for n = x, y, z."""
    rho = reduced_density(state, qubit).matrix
    return np.array([np.trace(rho @ PAULI[n]).real for n in "xyz"])


def load_state(path) -> ThreeQubitState:
    from .io import read_json

    return ThreeQubitState.from_json(read_json(path))


def bloch_rotation(u: np.ndarray) -> np.ndarray:
    """SO(3) matrix R_ij = Tr(s_i u s_j u^dag) / 2 of a 2x2 unitary."""
    s = [PAULI[k] for k in "xyz"]
    return np.array([[0.5 * np.trace(si @ u @ sj @ u.conj().T).real for sj in s] for si in s])
