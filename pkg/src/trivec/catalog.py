"""Named three-qubit states used by the recipes, fixtures and tests."""
from __future__ import annotations

import numpy as np

from .state import ThreeQubitState

S2, S3, S6 = np.sqrt(2.0), np.sqrt(3.0), np.sqrt(6.0)


def product_000() -> ThreeQubitState:
    return ThreeQubitState.from_terms([(1, "000")])


def w_state() -> ThreeQubitState:
    return ThreeQubitState.from_terms([(1, "001"), (1, "010"), (1, "100")], 1 / S3)


def ghz_state() -> ThreeQubitState:
    """GHZ with the e^{-i pi/4} phase that makes A, B, C real."""
    return ThreeQubitState.from_terms([(1, "000"), (1, "111")], np.exp(-1j * np.pi / 4) / S2)


def ghz_canonical() -> ThreeQubitState:
    return ThreeQubitState.from_terms([(1, "000"), (1, "111")], 1 / S2)


def bs_state() -> ThreeQubitState:
    """|0> (x) (|00> + |11>)/sqrt2."""
    return ThreeQubitState.from_terms([(1, "000"), (1, "011")], 1 / S2)


def w1_state() -> ThreeQubitState:
    return ThreeQubitState.from_terms(
        [
            (np.sqrt(2 - S2), "001"),
            (np.sqrt(2 + S2), "010"),
            (np.sqrt(1 + 1 / S2), "100"),
            (-np.sqrt(1 - 1 / S2), "111"),
        ],
        1 / S6,
    )


def w2_state() -> ThreeQubitState:
    """State after the two b-c couplings applied to |W>.

    The sqrt2 weights sit on |001> and |010>; this is what the couplings
    produce and what reproduces the q-vectors listed for this state.
    """
    return ThreeQubitState.from_terms([(S2, "001"), (S2, "010"), (1, "100"), (-1, "111")], 1 / S6)


def w3_state() -> ThreeQubitState:
    return ThreeQubitState.from_terms([(1, "001"), (1, "010"), (1, "100"), (-1, "111")], 0.5)


def w4_state() -> ThreeQubitState:
    return ThreeQubitState.from_terms([(1j, "000"), (-1, "111")], 1 / S2)


def bs1_state() -> ThreeQubitState:
    return ThreeQubitState.from_terms([(1, "000"), (1, "011"), (1j, "100"), (-1j, "111")], 0.5)


def bs2_state() -> ThreeQubitState:
    return ThreeQubitState.from_terms([(1, "000"), (-1j, "111")], 1 / S2)


def bs3_state() -> ThreeQubitState:
    return ThreeQubitState.from_terms([(1, "000"), (1, "111")], np.exp(3j * np.pi / 4) / S2)


def w_bs_state() -> ThreeQubitState:
    """|0> (x) (|01> + |10>)/sqrt2."""
    return ThreeQubitState.from_terms([(1, "001"), (1, "010")], 1 / S2)


NAMED = {
    "product": product_000,
    "w": w_state,
    "ghz": ghz_state,
    "ghz_canonical": ghz_canonical,
    "bs": bs_state,
    "w1": w1_state,
    "w2": w2_state,
    "w3": w3_state,
    "w4": w4_state,
    "bs1": bs1_state,
    "bs2": bs2_state,
    "bs3": bs3_state,
    "w_bs": w_bs_state,
}

# states shipped as JSON fixtures
FIXTURES = ("w", "ghz", "bs", "w2", "w3", "product")
