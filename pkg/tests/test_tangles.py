import numpy as np
import pytest
from hypothesis import given

from conftest import seeds, states
from trivec import catalog
from trivec.errors import ConsistencyError
from trivec.state import apply_unitary, random_unitary
from trivec.tangles import (
    MEASURES,
    TangleReport,
    _clamp,
    concurrences,
    gauged_three_tangle,
    real_part_identity,
    tangle_report,
    three_tangle,
    two_tangles,
)
from trivec.vectors import VectorTriple, extract_triple, fix_gauge


def _close(report, expected, tol):
    got = report.measures()
    return max(abs(got[k] - v) for k, v in expected.items()) < tol


def test_w_table():
    r = tangle_report(catalog.w_state())
    assert _close(r, dict(zip(MEASURES, (0, 4 / 9, 4 / 9, 4 / 9, 8 / 9, 8 / 9, 8 / 9))), 1e-10)


def test_ghz_table():
    for s in (catalog.ghz_state(), catalog.ghz_canonical()):
        assert _close(tangle_report(s), dict(zip(MEASURES, (1, 0, 0, 0, 1, 1, 1))), 1e-10)


def test_product_is_all_zero():
    assert all(v == 0 for v in tangle_report(catalog.product_000()).measures().values())


def test_bs_table():
    assert _close(tangle_report(catalog.bs_state()), dict(zip(MEASURES, (0, 1, 0, 0, 0, 1, 1))), 1e-10)


@given(states())
def test_ckw(s):
    r = tangle_report(s)
    assert max(abs(x) for x in r.ckw_residuals) < 1e-9
    assert all(v >= 0 for v in r.measures().values())


@given(states())
def test_gauged_forms(s):
    t = extract_triple(s)
    g = fix_gauge(t)
    if g.degenerate:
        return
    r = tangle_report(s)
    assert max(abs(v - r.tau_abc) for v in gauged_three_tangle(g)) < 1e-9
    assert max(abs(v) for v in real_part_identity(g, r)) < 1e-9


@given(states(), seeds)
def test_one_vs_rest_invariant_under_pair_unitaries(s, seed):
    u = random_unitary(np.random.default_rng(seed), 4)
    a0 = tangle_report(s).tau_a_bc
    a1 = tangle_report(apply_unitary(s, u, "bc")).tau_a_bc
    assert abs(a0 - a1) < 1e-10


@given(states(), seeds)
def test_local_unitaries_preserve_all_measures(s, seed):
    rng = np.random.default_rng(seed)
    new = s
    for q in "abc":
        new = apply_unitary(new, random_unitary(rng, 2), q)
    m0, m1 = tangle_report(s).measures(), tangle_report(new).measures()
    assert max(abs(m0[k] - m1[k]) for k in m0) < 1e-10


def test_three_tangle_cross_check_fires():
    v = np.array([1, 0, 0], dtype=complex)
    with pytest.raises(ConsistencyError):
        three_tangle(VectorTriple(v, 0.5 * v, v))


def test_clamp():
    assert _clamp(-5e-13, "x") == 0.0
    assert _clamp(0.25, "x") == 0.25
    with pytest.raises(ConsistencyError):
        _clamp(-1e-9, "x")


def test_concurrences_and_two_tangles_of_w():
    s = catalog.w_state()
    assert np.allclose(concurrences(s), [8 / 9] * 3, atol=1e-12)
    assert np.allclose(two_tangles(extract_triple(s)), [4 / 9] * 3, atol=1e-12)


def test_report_from_measures_round_trip():
    r = tangle_report(catalog.w2_state())
    again = TangleReport.from_measures(r.to_json())
    assert again.measures() == r.measures()
    assert again.ckw_residuals == r.ckw_residuals
