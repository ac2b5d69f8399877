"""Control sequences run on both the state and the q-vectors, with per-step expectations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import catalog
from .errors import ConsistencyError, ValidationError, VerificationError
from .pluecker import QVector, qvectors
from .so6 import PAIRS, PairHamiltonian, expm_antisymmetric
from .state import PAULI, QUBITS, PARTITIONS, ThreeQubitState, complex_list, complex_pairs, embed, pauli_pair
from .tangles import MEASURES, TangleReport, tangle_report

VERIFY_TOL = 1e-9
KINDS = ("coupling", "local", "global_phase")
AXES = ("x", "y", "z")

S2 = np.sqrt(2.0)
# rotation angle in the 2-4 plane that carries the W2 q-vector of partition 2 onto the W3 one
XI = float(np.arctan(1 / (2 * S2)))


@dataclass(frozen=True)
class ControlStep:
    """One exponential: exp(i half_angle sigma_label) on a pair, exp(i angle sigma_axis)
    on a qubit, or a global phase exp(i phase)."""

    kind: str
    pair: Optional[str] = None
    label: Optional[str] = None
    half_angle: Optional[float] = None
    qubit: Optional[str] = None
    axis: Optional[str] = None
    angle: Optional[float] = None
    phase: Optional[float] = None
    optional: bool = False
    note: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"step kind must be one of {KINDS}, got {self.kind!r}")
        if self.kind == "coupling":
            if self.pair not in PAIRS:
                raise ValidationError(f"coupling pair must be one of {PAIRS}, got {self.pair!r}")
            pauli_pair(self.label or "")
            _finite(self.half_angle, "half_angle")
        elif self.kind == "local":
            if self.qubit not in QUBITS or self.axis not in AXES:
                raise ValidationError(f"local step needs qubit in {QUBITS} and axis in {AXES}")
            _finite(self.angle, "angle")
        else:
            _finite(self.phase, "phase")

    @classmethod
    def coupling(cls, pair: str, label: str, half_angle: float, **kw) -> "ControlStep":
        return cls("coupling", pair=pair, label=label, half_angle=float(half_angle), **kw)

    @classmethod
    def local(cls, qubit: str, axis: str, angle: float, **kw) -> "ControlStep":
        return cls("local", qubit=qubit, axis=axis, angle=float(angle), **kw)

    @classmethod
    def global_phase(cls, phase: float, **kw) -> "ControlStep":
        return cls("global_phase", phase=float(phase), **kw)

    def unitary(self) -> np.ndarray:
        """The step as an 8x8 unitary."""
        if self.kind == "coupling":
            return embed(_exp_i(self.half_angle, pauli_pair(self.label)), self.pair)
        if self.kind == "local":
            return embed(_exp_i(self.angle, PAULI[self.axis]), self.qubit)
        return np.exp(1j * self.phase) * np.eye(8)

    def pair_hamiltonian(self, pair: str) -> Optional[PairHamiltonian]:
        """H on ``pair`` with exp(-i H) equal to this step, if the step acts inside the pair."""
        if self.kind == "coupling" and self.pair == pair:
            return PairHamiltonian(pair, -self.half_angle * pauli_pair(self.label))
        if self.kind == "local" and self.qubit in pair:
            label = self.axis + "I" if pair[0] == self.qubit else "I" + self.axis
            return PairHamiltonian(pair, -self.angle * pauli_pair(label))
        return None

    def q_action(self, s: int) -> Optional[np.ndarray]:
        """Linear map this step induces on q^(s), or None when it is not a rotation of q^(s)."""
        single, pair = PARTITIONS[s]
        if self.kind == "global_phase":
            return np.exp(2j * self.phase) * np.eye(6)
        if self.kind == "local" and self.qubit == single:
            return np.eye(6)
        h = self.pair_hamiltonian("".join(pair))
        if h is None:
            return None
        return expm_antisymmetric(2 * h.f)

    def to_json(self) -> dict:
        keys = {
            "coupling": ("pair", "label", "half_angle"),
            "local": ("qubit", "axis", "angle"),
            "global_phase": ("phase",),
        }[self.kind]
        out = {"kind": self.kind, **{k: getattr(self, k) for k in keys}}
        if self.optional:
            out["optional"] = True
        if self.note:
            out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "ControlStep":
        if not isinstance(obj, dict) or "kind" not in obj:
            raise ValidationError("each step needs a 'kind'")
        allowed = {"kind", "pair", "label", "half_angle", "qubit", "axis", "angle", "phase", "optional", "note"}
        unknown = set(obj) - allowed
        if unknown:
            raise ValidationError(f"unknown step fields {sorted(unknown)}")
        return cls(**obj)


def _finite(value, name):
    if value is None or not np.isfinite(float(value)):
        raise ValidationError(f"{name} must be a finite number")


def _exp_i(angle: float, P: np.ndarray) -> np.ndarray:
    # P squares to the identity
    return np.cos(angle) * np.eye(P.shape[0]) + 1j * np.sin(angle) * P


@dataclass(frozen=True, eq=False)
class Expectation:
    """What should hold after ``after`` steps (0 = the input)."""

    after: int
    state: Optional[ThreeQubitState] = None
    compare: str = "exact"
    q: dict = field(default_factory=dict)
    tangles: dict = field(default_factory=dict)

    def check(self, state: ThreeQubitState, qs, report: TangleReport, tol: float, where: str) -> None:
        if self.state is not None:
            if self.compare == "exact":
                gap = float(np.abs(state.amplitudes - self.state.amplitudes).max())
                if gap > tol:
                    raise VerificationError(f"{where}: amplitudes differ from expectation by {gap:.3e}")
            else:
                loss = 1.0 - state.fidelity(self.state)
                if loss > tol:
                    raise VerificationError(f"{where}: fidelity short of 1 by {loss:.3e}")
        for s, vec in self.q.items():
            gap = float(np.abs(qs[s - 1].components - vec).max())
            if gap > tol:
                raise VerificationError(f"{where}: q-vector of partition {s} off by {gap:.3e}")
        values = report.measures()
        for name, val in self.tangles.items():
            if abs(values[name] - val) > tol:
                raise VerificationError(f"{where}: {name} = {values[name]!r}, expected {val!r}")

    def to_json(self) -> dict:
        out: dict = {"after": self.after}
        if self.state is not None:
            out["state"] = complex_pairs(self.state.amplitudes)
            out["compare"] = self.compare
        if self.q:
            out["q"] = {str(s): complex_pairs(v) for s, v in self.q.items()}
        if self.tangles:
            out["tangles"] = {k: float(v) for k, v in self.tangles.items()}
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Expectation":
        try:
            after = int(obj["after"])
        except (KeyError, TypeError, ValueError):
            raise ValidationError("each expectation needs an integer 'after'") from None
        state = ThreeQubitState(complex_list(obj["state"], 8)) if "state" in obj else None
        compare = obj.get("compare", "exact")
        if compare not in ("exact", "fidelity"):
            raise ValidationError(f"compare must be 'exact' or 'fidelity', got {compare!r}")
        q = {int(s): complex_list(v, 6) for s, v in obj.get("q", {}).items()}
        if any(s not in PARTITIONS for s in q):
            raise ValidationError("q expectations are keyed by partition 1, 2 or 3")
        tangles = {k: float(v) for k, v in obj.get("tangles", {}).items()}
        unknown = set(tangles) - set(MEASURES)
        if unknown:
            raise ValidationError(f"unknown tangle names {sorted(unknown)}")
        return cls(after, state, compare, q, tangles)


@dataclass(frozen=True, eq=False)
class Recipe:
    name: str
    steps: tuple
    expect: tuple = ()
    input: Optional[ThreeQubitState] = None
    target: Optional[ThreeQubitState] = None

    def active_steps(self, skip_optional: bool = False) -> list:
        return [st for st in self.steps if not (skip_optional and st.optional)]

    def unitary(self, skip_optional: bool = False) -> np.ndarray:
        U = np.eye(8, dtype=complex)
        for st in self.active_steps(skip_optional):
            U = st.unitary() @ U
        return U

    def prefix(self, n: int) -> "Recipe":
        return Recipe(self.name, self.steps[:n], tuple(e for e in self.expect if e.after <= n), self.input)

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "steps": [st.to_json() for st in self.steps]}
        if self.input is not None:
            out["input"] = complex_pairs(self.input.amplitudes)
        if self.target is not None:
            out["target"] = complex_pairs(self.target.amplitudes)
        out["expect"] = [e.to_json() for e in self.expect]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Recipe":
        if not isinstance(obj, dict) or "steps" not in obj:
            raise ValidationError("recipe JSON needs 'steps'")
        steps = tuple(ControlStep.from_json(s) for s in obj["steps"])
        expect = tuple(Expectation.from_json(e) for e in obj.get("expect", []))
        inp = ThreeQubitState(complex_list(obj["input"], 8)) if "input" in obj else None
        tgt = ThreeQubitState(complex_list(obj["target"], 8)) if "target" in obj else None
        return cls(str(obj.get("name", "unnamed")), steps, expect, inp, tgt)


@dataclass(frozen=True, eq=False)
class TraceEntry:
    index: int
    step: Optional[ControlStep]
    state: ThreeQubitState
    qvectors: tuple
    report: TangleReport
    track_gap: float

    def to_json(self) -> dict:
        return {
            "after": self.index,
            "step": None if self.step is None else self.step.to_json(),
            "state": complex_pairs(self.state.amplitudes),
            "q": {str(q.partition): complex_pairs(q.components) for q in self.qvectors},
            "tangles": self.report.to_json(),
            "track_gap": self.track_gap,
        }


def run(
    recipe: Recipe,
    state: ThreeQubitState,
    verify: bool = True,
    tol: float = VERIFY_TOL,
    skip_optional: bool = False,
) -> list[TraceEntry]:
    """Apply the steps in state space and, where the step is a rotation of a
    partition's q-vector, in q-space too; the two tracks must agree to ``tol``.

    With ``verify`` the input and every stored expectation are checked.
    """
    if verify and recipe.input is not None:
        gap = float(np.abs(state.amplitudes - recipe.input.amplitudes).max())
        if gap > tol:
            raise VerificationError(f"{recipe.name}: input differs from the declared input by {gap:.3e}")
    expectations: dict[int, list] = {}
    for e in recipe.expect:
        expectations.setdefault(e.after, []).append(e)

    qs = qvectors(state)
    trace = [TraceEntry(0, None, state, qs, tangle_report(state), 0.0)]
    steps = recipe.active_steps(skip_optional)
    for idx, step in enumerate(steps, start=1):
        new_state = ThreeQubitState(step.unitary() @ state.amplitudes)
        new_qs = qvectors(new_state)
        gap = 0.0
        for s in (1, 2, 3):
            R = step.q_action(s)
            if R is None:
                continue
            gap = max(gap, float(np.abs(R @ qs[s - 1].components - new_qs[s - 1].components).max()))
        if gap > tol:
            raise ConsistencyError(f"{recipe.name} step {idx}: q-space and state tracks differ by {gap:.3e}")
        state, qs = new_state, new_qs
        trace.append(TraceEntry(idx, step, state, qs, tangle_report(state), gap))

    if verify:
        for entry in trace:
            for e in expectations.get(entry.index, ()):
                e.check(entry.state, entry.qvectors, entry.report, tol, f"{recipe.name} after step {entry.index}")
    return trace


def final_fidelity(recipe: Recipe, trace: list[TraceEntry]) -> Optional[float]:
    if recipe.target is None:
        return None
    return trace[-1].state.fidelity(recipe.target)


# ---------------------------------------------------------------------------
# built-in recipes


def _q(*vals, scale=1.0) -> np.ndarray:
    return scale * np.array(vals, dtype=complex)


def _all(vec) -> dict:
    return {1: vec, 2: vec, 3: vec}


Q_W = _q(1j, -1, 0, 1, 1j, 0, scale=1 / (3 * S2))
Q_GHZ = _q(0, 0, 1, 0, 0, -1j, scale=1 / (2 * S2))
Q_W3 = _q(0, -1, 0, 0, 1j, 0, scale=1 / (2 * S2))
Q_W1_PARTITION1 = _q(0, -1, 0, 1, S2 * 1j, 0, scale=1 / (3 * S2))
Q_W2 = {
    1: _q(0, -1, 0, 0, 1j, 0, scale=1 / 3),
    2: _q(0, -2 * S2, 0, 1, 3j, 0, scale=1 / (6 * S2)),
    3: _q(1j, -3, 0, 0, 2j * S2, 0, scale=1 / (6 * S2)),
}
Q_BS = {
    1: np.zeros(6, dtype=complex),
    2: _q(0, 0, 0, -1, -1j, 0, scale=1 / (2 * S2)),
    3: _q(-1j, 1, 0, 0, 0, 0, scale=1 / (2 * S2)),
}
Q_BS1 = {
    1: _q(0, 0, 1, 0, 0, -1j, scale=1 / (2 * S2)),
    2: _q(0, 0, 1, 0, -1j, 0, scale=1 / (2 * S2)),
    3: _q(0, 1, 0, 0, 0, -1j, scale=1 / (2 * S2)),
}


def _tangles(abc, bc, ac, ab, a, b, c) -> dict:
    return dict(zip(MEASURES, (abc, bc, ac, ab, a, b, c)))


TANGLES_W = _tangles(0, 4 / 9, 4 / 9, 4 / 9, 8 / 9, 8 / 9, 8 / 9)
TANGLES_GHZ = _tangles(1, 0, 0, 0, 1, 1, 1)
TANGLES_W2 = _tangles(8 / 9, 1 / 9, 0, 0, 8 / 9, 1, 1)
TANGLES_BS = _tangles(0, 1, 0, 0, 0, 1, 1)


def _w_prefix_steps() -> tuple:
    return (
        ControlStep.coupling("bc", "xy", np.pi / 8, note="rotate q(1) by pi/4 in the 1-5 plane"),
        ControlStep.coupling("bc", "yx", np.pi / 8, note="rotate q(1) by pi/4 in the 2-4 plane"),
    )


def _w_prefix_expectations() -> tuple:
    return (
        Expectation(0, catalog.w_state(), q=_all(Q_W), tangles=TANGLES_W),
        Expectation(
            1,
            catalog.w1_state(),
            q={1: Q_W1_PARTITION1},
            tangles={"tau_abc": 4 / 9, "tau_ac": 0.0, "tau_ab": 4 / 9, "tau_a_bc": 8 / 9},
        ),
        Expectation(2, catalog.w2_state(), q=Q_W2, tangles=TANGLES_W2),
    )


def w_to_ghz() -> Recipe:
    steps = _w_prefix_steps() + (
        ControlStep.coupling("ca", "yx", XI / 2, note="rotate q(2) by xi in the 2-4 plane"),
        ControlStep.local("a", "x", np.pi / 4, note="x rotation on all three qubits"),
        ControlStep.local("b", "x", np.pi / 4),
        ControlStep.local("c", "x", np.pi / 4),
        ControlStep.local("a", "z", np.pi / 4, note="relative phase"),
        ControlStep.global_phase(-3 * np.pi / 4),
    )
    expect = _w_prefix_expectations() + (
        Expectation(3, catalog.w3_state(), q=_all(Q_W3), tangles=TANGLES_GHZ),
        Expectation(6, catalog.w4_state(), q=_all(Q_GHZ), tangles=TANGLES_GHZ),
        Expectation(8, catalog.ghz_canonical(), tangles=TANGLES_GHZ),
    )
    return Recipe("w_to_ghz", steps, expect, catalog.w_state(), catalog.ghz_canonical())


def bs_to_ghz() -> Recipe:
    steps = (
        ControlStep.coupling("ab", "xz", np.pi / 4, note="couple A and B"),
        ControlStep.local("a", "x", -np.pi / 4, note="y-z rotation of A"),
        ControlStep.local("a", "z", 3 * np.pi / 4, note="relative phase"),
        ControlStep.global_phase(-3 * np.pi / 4),
    )
    expect = (
        Expectation(0, catalog.bs_state(), q=Q_BS, tangles=TANGLES_BS),
        Expectation(1, catalog.bs1_state(), q=Q_BS1, tangles={"tau_abc": 1.0}),
        Expectation(2, catalog.bs2_state(), q=_all(Q_GHZ), tangles=TANGLES_GHZ),
        Expectation(3, catalog.bs3_state(), tangles=TANGLES_GHZ),
        Expectation(4, catalog.ghz_canonical(), tangles=TANGLES_GHZ),
    )
    return Recipe("bs_to_ghz", steps, expect, catalog.bs_state(), catalog.ghz_canonical())


def w_to_bs() -> Recipe:
    zeta = -(np.pi / 2 - XI)
    steps = _w_prefix_steps() + (
        ControlStep.coupling("ca", "yx", zeta / 2, note="rotate q(2) by zeta in the 2-4 plane"),
        ControlStep.local("b", "x", np.pi / 2, optional=True, note="bit flip on b"),
        ControlStep.global_phase(-np.pi / 2, optional=True),
    )
    expect = _w_prefix_expectations() + (
        Expectation(3, catalog.w_bs_state(), tangles=_tangles(0, 1, 0, 0, 0, 1, 1)),
        Expectation(5, catalog.bs_state(), q=Q_BS, tangles=TANGLES_BS),
    )
    return Recipe("w_to_bs", steps, expect, catalog.w_state(), catalog.bs_state())


def builtin_recipes() -> dict[str, Recipe]:
    return {"w_to_ghz": w_to_ghz(), "bs_to_ghz": bs_to_ghz(), "w_to_bs": w_to_bs()}
