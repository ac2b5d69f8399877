"""Seeded battery of invariant checks over random states, Hamiltonians and local unitaries.

Every case draws from its own generator ``default_rng([seed, suite, i])`` so the
outcome does not depend on the order or number of workers.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import oracle, so6
from .errors import TrivecError
from .pluecker import OMEGA, U_PQ, pluecker_pvector, qvectors
from .state import (
    QUBITS,
    apply_unitary,
    bloch_rotation,
    bloch_vector,
    random_state,
    random_unitary,
)
from .tangles import MEASURES, tangle_report
from .vectors import induced_rotation, relation_residuals, triple_from_qvectors


@dataclass(frozen=True)
class SelftestConfig:
    seed: int = 0
    count: int = 100
    workers: int = 1
    # cases for the Hamiltonian-driven and local-unitary suites
    isomorphism_count: int | None = None
    bloch_count: int | None = None


TOLERANCES = {
    "pluecker": 1e-10,
    "q_dot_q": 1e-10,
    "relations": 1e-9,
    "chain": 1e-10,
    "ckw": 1e-9,
    "oracle_ckw": 1e-9,
    "oracle": 1e-8,
    "isomorphism": 1e-9,
    "lift": 1e-12,
    "form_transfer": 1e-12,
    "bloch": 1e-9,
    "commutation": 1e-12,
    "structure_constants": 0.0,
    "z2_cover": 1e-12,
}

PER_STATE = ("pluecker", "q_dot_q", "relations", "chain", "ckw", "oracle_ckw", "oracle")
PER_CASE = {"isomorphism": 1, "lift": 2, "form_transfer": 3, "bloch": 4}


@dataclass
class SuiteResult:
    name: str
    tol: float
    checked: int = 0
    worst: float = 0.0
    failures: list = field(default_factory=list)

    def add(self, case, residual: float) -> None:
        self.checked += 1
        self.worst = max(self.worst, float(residual))
        if residual > self.tol or not np.isfinite(residual):
            self.failures.append({"case": case, "residual": float(residual)})

    def merge(self, other: "SuiteResult") -> None:
        self.checked += other.checked
        self.worst = max(self.worst, other.worst)
        self.failures.extend(other.failures)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "failed": len(self.failures),
            "worst": self.worst,
            "tol": self.tol,
            "failures": sorted(self.failures, key=lambda f: str(f["case"])),
        }


def state_residuals(state) -> dict:
    """Residual of each per-state invariant on one state."""
    out = {}
    out["pluecker"] = max(abs(pluecker_pvector(state, s).omega_form()) for s in (1, 2, 3))
    qs = qvectors(state)
    out["q_dot_q"] = max(abs(q.dot()) for q in qs)
    out["relations"] = max(relation_residuals(qs))
    dots = [complex(q.alpha @ q.alpha) for q in qs] + [-complex(q.beta @ q.beta) for q in qs]
    out["chain"] = max(abs(d - dots[0]) for d in dots)
    report = tangle_report(state)
    out["ckw"] = max(abs(r) for r in report.ckw_residuals)
    ref = oracle.oracle_report(state)
    out["oracle_ckw"] = max(abs(r) for r in ref.ckw_residuals)
    out["oracle"] = oracle.max_disagreement(report, ref)
    return out


def isomorphism_residual(rng: np.random.Generator) -> float:
    """Dual-track gap for a random (state, pair, traceless H, t in [0, 1])."""
    state = random_state(rng)
    pair = so6.PAIRS[rng.integers(3)]
    X = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    H = X + X.conj().T
    H = H - np.trace(H).real / 4 * np.eye(4)
    h = so6.PairHamiltonian(pair, H)
    step = so6.evolve_dual(state, h, float(rng.uniform()), tol=np.inf)
    return step.disagreement


def lift_residual(rng: np.random.Generator) -> float:
    """Defect of H~^T Omega + Omega H~ = 0 for a random traceless (not necessarily Hermitian) H."""
    H = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    H = H - np.trace(H) / 4 * np.eye(4)
    return so6.omega_defect(so6.lift_matrix(H))


def form_transfer_residual(rng: np.random.Generator) -> float:
    q, r = (rng.normal(size=6) + 1j * rng.normal(size=6) for _ in range(2))
    return abs((U_PQ @ q) @ OMEGA @ (U_PQ @ r) - q @ r)


def bloch_residual(rng: np.random.Generator) -> float:
    """A random SU(2) on a random qubit moves that qubit's vector and Bloch vector by the same rotation."""
    state = random_state(rng)
    k = int(rng.integers(3))
    u = random_unitary(rng, 2)
    u = u / np.sqrt(np.linalg.det(u))
    new = apply_unitary(state, u, QUBITS[k])
    before = triple_from_qvectors(qvectors(state))
    after = triple_from_qvectors(qvectors(new))
    R = induced_rotation(list(before)[k], list(after)[k])
    Rb = bloch_rotation(u)
    moved = bloch_vector(new, QUBITS[k]) - Rb @ bloch_vector(state, QUBITS[k])
    others = max(np.abs(list(before)[j] - list(after)[j]).max() for j in range(3) if j != k)
    return float(max(np.abs(R - Rb).max(), np.abs(moved).max(), others))


_CASE_FUNCS = {
    "isomorphism": isomorphism_residual,
    "lift": lift_residual,
    "form_transfer": form_transfer_residual,
    "bloch": bloch_residual,
}


def _chunk(seed: int, start: int, stop: int, kind: str) -> dict:
    results = {}
    names = PER_STATE if kind == "state" else (kind,)
    for name in names:
        results[name] = SuiteResult(name, TOLERANCES[name])
    for i in range(start, stop):
        try:
            if kind == "state":
                res = state_residuals(random_state(np.random.default_rng([seed, 0, i])))
            else:
                res = {kind: _CASE_FUNCS[kind](np.random.default_rng([seed, PER_CASE[kind], i]))}
        except TrivecError as exc:
            for name in names:
                results[name].failures.append({"case": i, "error": str(exc)})
                results[name].checked += 1
            continue
        for name in names:
            results[name].add(i, res[name])
    return results


def commutation_suite() -> SuiteResult:
    """Bracket relations over the 105 unordered generator pairs (residual 1 marks a violation)."""
    out = SuiteResult("commutation", TOLERANCES["commutation"])
    bad = set(so6.commutation_violations(so6.generator_table("bc").t, TOLERANCES["commutation"]))
    for combo in itertools.combinations(so6.INDEX_PAIRS, 2):
        out.add(combo, 1.0 if combo in bad else 0.0)
    return out


def structure_constant_suite() -> SuiteResult:
    """su(4) constants for t_nm equal so(6) constants for 2 I_nm, entry by entry."""
    out = SuiteResult("structure_constants", TOLERANCES["structure_constants"])
    so = so6.so6_structure_constants()
    for pair in so6.PAIRS:
        su = so6.su4_structure_constants(so6.generator_table(pair))
        out.add(pair, float(np.abs(su - so).max()))
    return out


def z2_suite() -> SuiteResult:
    """exp(pi t_nm) = -1 on the pair while exp(2 pi I_nm) = 1 on q-space."""
    out = SuiteResult("z2_cover", TOLERANCES["z2_cover"])
    table = so6.generator_table("bc")
    for n, m in so6.INDEX_PAIRS:
        su = so6.expm_hermitian(-table.tau(n, m), np.pi)  # exp(pi i tau) = exp(pi t)
        so_ = so6.expm_antisymmetric(2 * np.pi * so6.so6_basis(n, m))
        out.add((n, m), max(np.abs(su + np.eye(4)).max(), np.abs(so_ - np.eye(6)).max()))
    return out


def _split(count: int, workers: int) -> list[tuple[int, int]]:
    workers = max(1, min(workers, count)) if count else 1
    edges = np.linspace(0, count, workers + 1).astype(int)
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:])]


def run_selftest(config: SelftestConfig) -> dict:
    """Run every suite and return a JSON-ready summary (deterministic in seed and counts)."""
    if config.count < 0 or config.seed < 0:
        raise ValueError("seed and count must be non-negative")
    jobs = [("state", a, b) for a, b in _split(config.count, config.workers)]
    extra = {
        "isomorphism": config.isomorphism_count if config.isomorphism_count is not None else config.count,
        "lift": config.count,
        "form_transfer": config.count,
        "bloch": config.bloch_count if config.bloch_count is not None else config.count,
    }
    for kind, n in extra.items():
        jobs += [(kind, a, b) for a, b in _split(n, config.workers)]

    if config.workers > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            parts = list(pool.map(_chunk, *zip(*[(config.seed, a, b, k) for k, a, b in jobs])))
    else:
        parts = [_chunk(config.seed, a, b, k) for k, a, b in jobs]

    suites: dict[str, SuiteResult] = {}
    for part in parts:
        for name, res in part.items():
            if name in suites:
                suites[name].merge(res)
            else:
                suites[name] = res
    for res in (commutation_suite(), structure_constant_suite(), z2_suite()):
        suites[res.name] = res

    order = list(PER_STATE) + list(PER_CASE) + ["commutation", "structure_constants", "z2_cover"]
    body = {name: suites[name].to_json() for name in order}
    return {
        "seed": config.seed,
        "count": config.count,
        "passed": all(suites[n].passed for n in order),
        "suites": body,
        "measures": list(MEASURES),
    }
