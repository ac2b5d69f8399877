"""The su(4) <-> so(6) correspondence acting on q-vectors.

Generators are labelled by index pairs (n, m) of a 6x6 antisymmetric array,
``tau[n, m] = -tau[m, n]`` Hermitian, ``t = i tau``.  A pair Hamiltonian
``H = sum_{m<n} f[n, m] tau[n, m]`` moves the q-vector of the matching
partition by ``dq/dt = 2 f q``.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import ConsistencyError, ValidationError
from .pluecker import OMEGA, U_PQ, QVector, qvector, qvectors
from .state import PAIR_PARTITION, ThreeQubitState, embed, pauli_pair

PAIRS = ("bc", "ca", "ab")
LABELS = ("xI", "yI", "zI", "Ix", "Iy", "Iz", "xx", "xy", "xz", "yx", "yy", "yz", "zx", "zy", "zz")
INDEX_PAIRS = tuple((n, m) for n in range(2, 7) for m in range(1, n))  # 15 pairs, n > m, 1-based

HERMITIAN_TOL = 1e-12
TRACK_TOL = 1e-8

# Upper triangle (n < m) of the Hermitian 6x6 table, as (sign, label).
TRANSCRIBED_TABLE = {
    (1, 2): (-1, "zI"), (1, 3): (1, "yI"), (1, 4): (1, "xx"), (1, 5): (1, "xy"), (1, 6): (1, "xz"),
    (2, 3): (-1, "xI"), (2, 4): (1, "yx"), (2, 5): (1, "yy"), (2, 6): (1, "yz"),
    (3, 4): (1, "zx"), (3, 5): (1, "zy"), (3, 6): (1, "zz"),
    (4, 5): (-1, "Iz"), (4, 6): (1, "Iy"),
    (5, 6): (-1, "Ix"),
}


@dataclass(frozen=True)
class PauliPairOp:
    pair: str
    label: str
    sign: int = 1

    @property
    def matrix(self) -> np.ndarray:
        return self.sign * pauli_pair(self.label)


def clifford_vectors() -> dict[int, np.ndarray]:
    """Five mutually anticommuting 4x4 elements with e_i^2 = -1."""
    return {
        1: -1j * pauli_pair("xz"),
        2: -1j * pauli_pair("yz"),
        3: -1j * pauli_pair("zz"),
        4: -1j * pauli_pair("Iy"),
        5: 1j * pauli_pair("Ix"),
    }


def clifford_generators() -> dict[tuple[int, int], np.ndarray]:
    """t[6, i] = e_i and t[n, m] = e_n e_m for 5 >= n > m."""
    e = clifford_vectors()
    gens = {}
    for n, m in INDEX_PAIRS:
        gens[(n, m)] = e[m] if n == 6 else e[n] @ e[m]
    return gens


def _identify(tau: np.ndarray) -> tuple[int, str]:
    coeffs = {lab: np.trace(tau @ pauli_pair(lab)) / 4 for lab in LABELS}
    label = max(coeffs, key=lambda k: abs(coeffs[k]))
    c = coeffs[label]
    if abs(abs(c) - 1) > 1e-12 or abs(c.imag) > 1e-12 or not np.allclose(tau, c.real * pauli_pair(label)):
        raise ConsistencyError(f"generator is not a signed Pauli product: coefficients {coeffs}")
    return int(np.sign(c.real)), label


@dataclass(frozen=True)
class GeneratorTable:
    pair: str
    ops: dict  # (n, m) with n > m -> PauliPairOp for tau[n, m]
    disagreements: tuple = field(default=())

    def tau(self, n: int, m: int) -> np.ndarray:
        if n == m:
            return np.zeros((4, 4), dtype=complex)
        if n > m:
            return self.ops[(n, m)].matrix
        return -self.ops[(m, n)].matrix

    def t(self, n: int, m: int) -> np.ndarray:
        return 1j * self.tau(n, m)


def build_generator_table(pair: str = "bc") -> GeneratorTable:
    """Generator table from Clifford products, cross-checked against the transcribed table.

    Raises ConsistencyError if the commutation relations fail.  Cells where the
    transcription differs are kept in ``disagreements`` as
    ``((n, m), transcribed, constructed)``.
    """
    if pair not in PAIRS:
        raise ValidationError(f"pair must be one of {PAIRS}, got {pair!r}")
    ops, diffs = {}, []
    for (n, m), t in clifford_generators().items():
        sign, label = _identify(-1j * t)
        ops[(n, m)] = PauliPairOp(pair, label, sign)
        tsign, tlabel = TRANSCRIBED_TABLE[(m, n)]
        if (tlabel, -tsign) != (label, sign):
            diffs.append(((n, m), (-tsign, tlabel), (sign, label)))
    table = GeneratorTable(pair, ops, tuple(diffs))
    bad = commutation_violations(table.t)
    if bad:
        raise ConsistencyError(f"commutation relations fail for {len(bad)} generator pairs, e.g. {bad[:3]}")
    return table


def _delta(a: int, b: int) -> int:
    return int(a == b)


def _bracket_rhs(t, n, m, k, p, shape):
    out = np.zeros(shape, dtype=complex)
    for coef, (x, y) in (
        (_delta(m, p), (n, k)),
        (_delta(n, k), (m, p)),
        (-_delta(m, k), (n, p)),
        (-_delta(n, p), (m, k)),
    ):
        if coef and x != y:
            out = out + coef * t(x, y)
    return 2 * out


def commutation_violations(t, tol: float = 1e-12) -> list:
    """Unordered generator pairs violating
    [t_nm, t_kp] = 2 (d_mp t_nk + d_nk t_mp - d_mk t_np - d_np t_mk)."""
    bad = []
    for (n, m), (k, p) in itertools.combinations(INDEX_PAIRS, 2):
        a, b = t(n, m), t(k, p)
        if np.abs(a @ b - b @ a - _bracket_rhs(t, n, m, k, p, a.shape)).max() > tol:
            bad.append(((n, m), (k, p)))
    return bad


def so6_basis(n: int, m: int) -> np.ndarray:
    """Real antisymmetric I_nm with (I_nm)_ij = -d_in d_jm + d_im d_jn (1-based)."""
    out = np.zeros((6, 6))
    if n != m:
        out[n - 1, m - 1] = -1.0
        out[m - 1, n - 1] = 1.0
    return out


def structure_constants(gen, inner) -> np.ndarray:
    """c[a, b, c] with [X_a, X_b] = sum_c c[a, b, c] X_c over INDEX_PAIRS order."""
    basis = [gen(n, m) for n, m in INDEX_PAIRS]
    out = np.zeros((15, 15, 15))
    for a, b in itertools.product(range(15), repeat=2):
        comm = basis[a] @ basis[b] - basis[b] @ basis[a]
        for c in range(15):
            out[a, b, c] = inner(basis[c], comm).real
    return out


def su4_structure_constants(table: GeneratorTable) -> np.ndarray:
    # Tr(t_c^dag t_c) = 4
    return structure_constants(table.t, lambda x, y: np.trace(x.conj().T @ y) / 4)


def so6_structure_constants() -> np.ndarray:
    # Tr((2 I_c)^T 2 I_c) = 8
    return structure_constants(lambda n, m: 2 * so6_basis(n, m), lambda x, y: np.trace(x.T @ y) / 8)


_TABLES: dict[str, GeneratorTable] = {}


def generator_table(pair: str) -> GeneratorTable:
    if pair not in _TABLES:
        _TABLES[pair] = build_generator_table(pair)
    return _TABLES[pair]


def _check_hermitian(H: np.ndarray, what: str = "Hamiltonian") -> np.ndarray:
    H = np.asarray(H, dtype=complex)
    if H.shape != (4, 4):
        raise ValidationError(f"{what} must be 4x4, got {H.shape}")
    if not np.all(np.isfinite(H)):
        raise ValidationError(f"{what} has non-finite entries")
    if np.abs(H - H.conj().T).max() > HERMITIAN_TOL * max(1.0, np.abs(H).max()):
        raise ValidationError(f"{what} is not Hermitian")
    return H


@dataclass(frozen=True, eq=False)
class PairHamiltonian:
    """Hermitian operator on an ordered qubit pair; the 4x4 indexes (first, second)."""

    pair: str
    matrix: np.ndarray

    def __post_init__(self):
        if self.pair not in PAIRS:
            raise ValidationError(f"pair must be one of {PAIRS}, got {self.pair!r}")
        object.__setattr__(self, "matrix", _check_hermitian(self.matrix))

    @classmethod
    def from_coeffs(cls, pair: str, coeffs: dict) -> "PairHamiltonian":
        H = np.zeros((4, 4), dtype=complex)
        for label, value in coeffs.items():
            if label not in LABELS and label != "II":
                raise ValidationError(f"unknown Pauli label {label!r}")
            H = H + float(value) * pauli_pair(label)
        return cls(pair, H)

    @classmethod
    def from_json(cls, obj: dict) -> "PairHamiltonian":
        try:
            return cls.from_coeffs(obj["pair"], obj["coeffs"])
        except (KeyError, TypeError):
            raise ValidationError("Hamiltonian JSON needs 'pair' and 'coeffs'") from None

    @property
    def partition(self) -> int:
        return PAIR_PARTITION[self.pair]

    @property
    def traceless(self) -> np.ndarray:
        return self.matrix - np.trace(self.matrix) / 4 * np.eye(4)

    @property
    def f(self) -> np.ndarray:
        return f_coefficients(self.matrix, generator_table(self.pair))

    def reconstruct(self) -> np.ndarray:
        """sum_{m<n} f[n, m] tau[n, m]; equals the traceless part."""
        table = generator_table(self.pair)
        f = self.f
        return sum(f[n - 1, m - 1] * table.tau(n, m) for n, m in INDEX_PAIRS)


def f_coefficients(H: np.ndarray, table: GeneratorTable) -> np.ndarray:
    """Antisymmetric real f[n, m] = Tr(H tau[n, m]) / 4 (0-based array)."""
    f = np.zeros((6, 6))
    for n, m in INDEX_PAIRS:
        val = np.trace(H @ table.tau(n, m)).real / 4
        f[n - 1, m - 1] = val
        f[m - 1, n - 1] = -val
    return f


@dataclass(frozen=True, eq=False)
class LiftedHamiltonian:
    matrix: np.ndarray


def lift_matrix(H: np.ndarray) -> np.ndarray:
    """6x6 action of ``P -> H P + P H^T`` on the six-vector of an antisymmetric P."""
    h = lambda i, j: H[i - 1, j - 1]  # noqa: E731
    return np.array(
        [
            [h(1, 1) + h(2, 2), h(2, 3), h(2, 4), -h(1, 3), -h(1, 4), 0],
            [h(3, 2), h(1, 1) + h(3, 3), h(3, 4), h(1, 2), 0, -h(1, 4)],
            [h(4, 2), h(4, 3), h(1, 1) + h(4, 4), 0, h(1, 2), h(1, 3)],
            [-h(3, 1), h(2, 1), 0, h(2, 2) + h(3, 3), h(3, 4), -h(2, 4)],
            [-h(4, 1), 0, h(2, 1), h(4, 3), h(2, 2) + h(4, 4), h(2, 3)],
            [0, -h(4, 1), h(3, 1), -h(4, 2), h(3, 2), h(3, 3) + h(4, 4)],
        ],
        dtype=complex,
    )


def lift(h: PairHamiltonian) -> LiftedHamiltonian:
    H = h.matrix
    tr = np.trace(H)
    if abs(tr) > HERMITIAN_TOL:
        warnings.warn("stripping the trace of H; it only adds a global phase", stacklevel=2)
        H = h.traceless
    return LiftedHamiltonian(lift_matrix(H))


def q_generator(h: PairHamiltonian) -> np.ndarray:
    """-i U_PQ^dag H~ U_PQ; real antisymmetric and equal to 2 f for Hermitian H."""
    return -1j * U_PQ.conj().T @ lift(h).matrix @ U_PQ


def expm_hermitian(H: np.ndarray, t: float = 1.0) -> np.ndarray:
    """exp(-i H t) by eigendecomposition."""
    w, V = np.linalg.eigh(H)
    return (V * np.exp(-1j * w * t)) @ V.conj().T


def expm_antisymmetric(X: np.ndarray) -> np.ndarray:
    """exp(X) for real antisymmetric X (scaling and squaring with Padé)."""
    return scipy.linalg.expm(np.asarray(X, dtype=float))


def q_propagator(h: PairHamiltonian, t: float) -> np.ndarray:
    return expm_antisymmetric(2 * h.f * t)


@dataclass(frozen=True, eq=False)
class DualStep:
    state: ThreeQubitState
    qvectors: tuple
    propagated: QVector
    disagreement: float


def evolve_dual(state: ThreeQubitState, h: PairHamiltonian, t: float, tol: float = TRACK_TOL) -> DualStep:
    """Evolve by exp(-i H t) on the pair and, separately, rotate the pair's q-vector."""
    U = expm_hermitian(h.matrix, t)
    new_state = ThreeQubitState(embed(U, h.pair) @ state.amplitudes)
    s = h.partition
    propagated = QVector(s, q_propagator(h, t) @ qvector(state, s).components)
    qs = qvectors(new_state)
    gap = float(np.abs(qs[s - 1].components - propagated.components).max())
    if gap > tol:
        raise ConsistencyError(f"state and q-space tracks disagree by {gap:.3e} on partition {s}")
    return DualStep(new_state, qs, propagated, gap)


def _check_antisymmetric(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (6, 6) or np.abs(x + x.T).max() > 1e-12:
        raise ValidationError("expected a real antisymmetric 6x6 matrix")
    return x


def rotation_hamiltonian(x, pair: str) -> PairHamiltonian:
    """Hamiltonian H with exp(-i H) inducing exp(x) on q-vectors (so 2 f = x)."""
    x = _check_antisymmetric(x)
    table = generator_table(pair)
    H = sum(0.5 * x[n - 1, m - 1] * table.tau(n, m) for n, m in INDEX_PAIRS)
    return PairHamiltonian(pair, H)


def so6_to_su4(x, pair: str = "bc") -> np.ndarray:
    """Unitary on the pair whose q-space action is exp(x)."""
    return expm_hermitian(rotation_hamiltonian(x, pair).matrix)


def plane_rotation(plane, angle: float) -> np.ndarray:
    """Generator angle * I_{n,m} for plane (n, m), 1-based."""
    n, m = plane
    if not (1 <= n <= 6 and 1 <= m <= 6) or n == m:
        raise ValidationError(f"invalid rotation plane {plane!r}")
    return angle * so6_basis(n, m)


def rotation_from_json(obj: dict) -> tuple[str, np.ndarray]:
    try:
        pair, plane, angle = obj["pair"], obj["plane"], float(obj["angle"])
    except (KeyError, TypeError, ValueError):
        raise ValidationError("rotation JSON needs 'pair', 'plane' and 'angle'") from None
    if pair not in PAIRS:
        raise ValidationError(f"pair must be one of {PAIRS}, got {pair!r}")
    return pair, plane_rotation(tuple(plane), angle)


def omega_defect(Ht: np.ndarray) -> float:
    return float(np.abs(Ht.T @ OMEGA + OMEGA @ Ht).max())
