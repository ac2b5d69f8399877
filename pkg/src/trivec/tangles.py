"""Three-tangle, two-tangles and one-vs-rest concurrences from A, B, C."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError
from .pluecker import qvectors
from .state import ThreeQubitState
from .vectors import GaugedTriple, VectorTriple, fix_gauge, triple_from_qvectors

AGREE_TOL = 1e-10
GAUGED_TOL = 1e-9
CLAMP_TOL = 1e-12

MEASURES = ("tau_abc", "tau_bc", "tau_ac", "tau_ab", "tau_a_bc", "tau_b_ca", "tau_c_ab")


def _clamp(value: float, name: str) -> float:
    if value < 0:
        if value < -CLAMP_TOL:
            raise ConsistencyError(f"{name} = {value:.3e} is negative beyond round-off")
        return 0.0
    return float(value)


def ckw_residuals(values: dict) -> tuple[float, float, float]:
    """tau_abc minus (tau_x(yz) - tau_xy - tau_xz) for x = a, b, c."""
    t = values
    return (
        t["tau_abc"] - (t["tau_a_bc"] - t["tau_ac"] - t["tau_ab"]),
        t["tau_abc"] - (t["tau_b_ca"] - t["tau_ab"] - t["tau_bc"]),
        t["tau_abc"] - (t["tau_c_ab"] - t["tau_ac"] - t["tau_bc"]),
    )


@dataclass(frozen=True)
class TangleReport:
    tau_abc: float
    tau_bc: float
    tau_ac: float
    tau_ab: float
    tau_a_bc: float
    tau_b_ca: float
    tau_c_ab: float
    ckw_residuals: tuple[float, float, float]

    def measures(self) -> dict:
        return {name: getattr(self, name) for name in MEASURES}

    def to_json(self) -> dict:
        out = self.measures()
        out["ckw_residuals"] = list(self.ckw_residuals)
        return out

    @classmethod
    def from_measures(cls, values: dict) -> "TangleReport":
        return cls(**{name: float(values[name]) for name in MEASURES}, ckw_residuals=ckw_residuals(values))


def three_tangle(t: VectorTriple) -> float:
    vals = [8.0 * abs(v @ v) for v in t]
    if max(vals) - min(vals) > AGREE_TOL:
        raise ConsistencyError(f"8|A.A|, 8|B.B|, 8|C.C| disagree: {vals}")
    return vals[0]


def concurrences(state: ThreeQubitState) -> tuple[float, float, float]:
    """(tau_a(bc), tau_b(ca), tau_c(ab)) as 4 <q|q> per partition."""
    qs = qvectors(state)
    direct = [4.0 * q.norm2() for q in qs]
    A, B, C = triple_from_qvectors(qs)
    n = lambda v: float(np.vdot(v, v).real)  # noqa: E731
    symmetric = [4 * (n(B) + n(C)), 4 * (n(C) + n(A)), 4 * (n(A) + n(B))]
    if max(abs(x - y) for x, y in zip(direct, symmetric)) > AGREE_TOL:
        raise ConsistencyError(f"concurrence routes disagree: {direct} vs {symmetric}")
    return tuple(direct)


def _two_tangle(v: np.ndarray) -> float:
    return 4.0 * (float(np.vdot(v, v).real) - abs(v @ v))


def two_tangles(t: VectorTriple, gauged: GaugedTriple | None = None) -> tuple[float, float, float]:
    """(tau_bc, tau_ac, tau_ab) from A, B, C respectively."""
    vals = tuple(_clamp(_two_tangle(v), name) for v, name in zip(t, ("tau_bc", "tau_ac", "tau_ab")))
    g = gauged if gauged is not None else fix_gauge(t)
    if not g.degenerate:
        imag = [8.0 * float(g.parts(n)[1] @ g.parts(n)[1]) for n in "ABC"]
        if max(abs(x - y) for x, y in zip(vals, imag)) > GAUGED_TOL:
            raise ConsistencyError(f"gauge-invariant and gauged two-tangles disagree: {vals} vs {imag}")
    return vals


def gauged_three_tangle(g: GaugedTriple) -> tuple[float, float, float]:
    """8 (X_R.X_R - X_I.X_I) for X = A, B, C."""
    return tuple(8.0 * float(R @ R - I @ I) for R, I in (g.parts(n) for n in "ABC"))


def real_part_identity(g: GaugedTriple, report: TangleReport) -> tuple[float, float, float]:
    """Residuals of 8 X_R.X_R = tau_abc + tau_pair for (A, bc), (B, ac), (C, ab)."""
    pairs = (("A", report.tau_bc), ("B", report.tau_ac), ("C", report.tau_ab))
    return tuple(
        float(8.0 * g.parts(n)[0] @ g.parts(n)[0] - (report.tau_abc + tau)) for n, tau in pairs
    )


def tangle_report(state: ThreeQubitState) -> TangleReport:
    t = triple_from_qvectors(qvectors(state))
    tau_abc = _clamp(three_tangle(t), "tau_abc")
    tau_bc, tau_ac, tau_ab = two_tangles(t)
    tau_a, tau_b, tau_c = (_clamp(v, "concurrence") for v in concurrences(state))
    return TangleReport.from_measures(
        dict(
            tau_abc=tau_abc, tau_bc=tau_bc, tau_ac=tau_ac, tau_ab=tau_ab,
            tau_a_bc=tau_a, tau_b_ca=tau_b, tau_c_ab=tau_c,
        )
    )
