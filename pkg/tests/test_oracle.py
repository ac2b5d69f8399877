import numpy as np
from hypothesis import given

from conftest import random_states, states
from trivec import catalog
from trivec.oracle import (
    cayley_hyperdeterminant,
    max_disagreement,
    oracle_report,
    spin_flip_values,
    wootters_concurrence,
)
from trivec.state import ReducedDensity, ThreeQubitState, reduced_density
from trivec.tangles import tangle_report


def test_oracle_named_states():
    w = oracle_report(catalog.w_state())
    assert abs(w.tau_abc) < 1e-12 and abs(w.tau_bc - 4 / 9) < 1e-12 and abs(w.tau_a_bc - 8 / 9) < 1e-12
    g = oracle_report(catalog.ghz_canonical())
    assert abs(g.tau_abc - 1) < 1e-12 and abs(g.tau_ab) < 1e-12 and abs(g.tau_c_ab - 1) < 1e-12


def test_hyperdeterminant_of_ghz():
    assert abs(cayley_hyperdeterminant(catalog.ghz_canonical()) - 0.25) < 1e-15


def test_bell_pair_concurrence():
    rd = reduced_density(catalog.bs_state(), "bc")
    assert abs(wootters_concurrence(rd) - 1) < 1e-12


@given(states())
def test_oracle_ckw(s):
    assert max(abs(x) for x in oracle_report(s).ckw_residuals) < 1e-9


@given(states())
def test_factored_and_plain_spin_flip_agree(s):
    for pair in ("bc", "ca", "ab"):
        rd = reduced_density(s, pair)
        plain = spin_flip_values(ReducedDensity(rd.subsystem, rd.matrix, None))
        assert np.abs(plain - spin_flip_values(rd)).max() < 1e-6


@given(states())
def test_swap_b_c_covariance(s):
    swapped = ThreeQubitState(s.tensor.transpose(0, 2, 1).reshape(8))
    r, t = oracle_report(s), oracle_report(swapped)
    for x, y in (("tau_ab", "tau_ac"), ("tau_ac", "tau_ab"), ("tau_b_ca", "tau_c_ab"), ("tau_abc", "tau_abc"),
                 ("tau_bc", "tau_bc"), ("tau_a_bc", "tau_a_bc")):
        assert abs(getattr(r, x) - getattr(t, y)) < 1e-10


def test_agrees_with_qvector_measures():
    worst = max(max_disagreement(tangle_report(s), oracle_report(s)) for s in random_states(7, 200))
    assert worst < 1e-8
