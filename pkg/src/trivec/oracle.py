"""Entanglement measures straight from reduced density matrices and the amplitude tensor.

Imports nothing but ``trivec.state``: it is the independent check on the
q-vector formulas and must stay that way.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .state import PAULI, ReducedDensity, ThreeQubitState, reduced_density

_YY = np.kron(PAULI["y"], PAULI["y"])

CUT_SUBSYSTEM = {"a": "a", "b": "b", "c": "c"}
PAIR_SUBSYSTEM = {"bc": "bc", "ac": "ca", "ab": "ab", "ca": "ca", "ba": "ab", "cb": "bc"}


def oracle_concurrence_one_vs_rest(state: ThreeQubitState, cut: str) -> float:
    rho = reduced_density(state, CUT_SUBSYSTEM[cut]).matrix
    return max(0.0, 4.0 * np.linalg.det(rho).real)


def spin_flip_values(rd: ReducedDensity) -> np.ndarray:
    """Descending square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).

    With a factor ``rho = M M^dag`` these are the singular values of
    ``M^T (sy x sy) M`` padded with zeros; this avoids taking square roots of
    round-off-sized eigenvalues, which costs ~1e-8 in the concurrence.
    """
    M = rd.factor
    if M is not None:
        sv = np.linalg.svd(M.T @ _YY @ M, compute_uv=False)
        return np.concatenate([np.sort(sv)[::-1], np.zeros(4 - sv.size)])
    rho = rd.matrix
    ev = np.linalg.eigvals(rho @ _YY @ rho.conj() @ _YY).real
    return np.sort(np.sqrt(np.clip(ev, 0.0, None)))[::-1]


def wootters_concurrence(rd: ReducedDensity) -> float:
    lam = spin_flip_values(rd)
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def oracle_two_tangle(state: ThreeQubitState, pair: str) -> float:
    return wootters_concurrence(reduced_density(state, PAIR_SUBSYSTEM[pair])) ** 2


def cayley_hyperdeterminant(state: ThreeQubitState) -> complex:
    """Cayley's 2x2x2 hyperdeterminant of the amplitude tensor."""
    a = state.tensor
    d1 = (
        a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2
        + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
        + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2
        + a[1, 0, 0] ** 2 * a[0, 1, 1] ** 2
    )
    d2 = (
        a[0, 0, 0] * a[1, 1, 1] * a[0, 1, 1] * a[1, 0, 0]
        + a[0, 0, 0] * a[1, 1, 1] * a[1, 0, 1] * a[0, 1, 0]
        + a[0, 0, 0] * a[1, 1, 1] * a[1, 1, 0] * a[0, 0, 1]
        + a[0, 1, 1] * a[1, 0, 0] * a[1, 0, 1] * a[0, 1, 0]
        + a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 0] * a[0, 0, 1]
        + a[1, 0, 1] * a[0, 1, 0] * a[1, 1, 0] * a[0, 0, 1]
    )
    d3 = a[0, 0, 0] * a[1, 1, 0] * a[1, 0, 1] * a[0, 1, 1] + a[1, 1, 1] * a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0]
    return complex(d1 - 2 * d2 + 4 * d3)


def oracle_three_tangle(state: ThreeQubitState) -> float:
    return 4.0 * abs(cayley_hyperdeterminant(state))


@dataclass(frozen=True)
class OracleReport:
    tau_abc: float
    tau_bc: float
    tau_ac: float
    tau_ab: float
    tau_a_bc: float
    tau_b_ca: float
    tau_c_ab: float

    @property
    def ckw_residuals(self) -> tuple[float, float, float]:
        return (
            self.tau_abc - (self.tau_a_bc - self.tau_ac - self.tau_ab),
            self.tau_abc - (self.tau_b_ca - self.tau_ab - self.tau_bc),
            self.tau_abc - (self.tau_c_ab - self.tau_ac - self.tau_bc),
        )

    def measures(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}

    def to_json(self) -> dict:
        out = self.measures()
        out["ckw_residuals"] = list(self.ckw_residuals)
        return out


def oracle_report(state: ThreeQubitState) -> OracleReport:
    return OracleReport(
        tau_abc=oracle_three_tangle(state),
        tau_bc=oracle_two_tangle(state, "bc"),
        tau_ac=oracle_two_tangle(state, "ac"),
        tau_ab=oracle_two_tangle(state, "ab"),
        tau_a_bc=oracle_concurrence_one_vs_rest(state, "a"),
        tau_b_ca=oracle_concurrence_one_vs_rest(state, "b"),
        tau_c_ab=oracle_concurrence_one_vs_rest(state, "c"),
    )


def max_disagreement(a, b) -> float:
    """Largest absolute difference over the seven measures of two reports."""
    ma, mb = a.measures(), b.measures()
    return max(abs(ma[k] - mb[k]) for k in ma)
