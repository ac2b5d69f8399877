import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import states, su2
from trivec import catalog
from trivec.errors import ConsistencyError
from trivec.pluecker import QVector, qvectors
from trivec.state import apply_unitary, bloch_rotation, bloch_vector
from trivec.tangles import tangle_report
from trivec.vectors import extract_triple, fix_gauge, induced_rotation, relation_residuals, split, triple_from_qvectors


@given(states())
def test_inter_partition_relations(s):
    assert max(relation_residuals(qvectors(s))) < 1e-12


@given(states())
def test_dot_product_chain(s):
    qs = qvectors(s)
    vals = [q.alpha @ q.alpha for q in qs] + [-(q.beta @ q.beta) for q in qs]
    assert max(abs(v - vals[0]) for v in vals) < 1e-10
    for q in qs:
        ab = split(q)
        assert abs(ab.alpha @ ab.alpha + ab.beta @ ab.beta) < 1e-10


@given(states())
def test_triple_assignment(s):
    q1, q2, q3 = qvectors(s)
    t = extract_triple(s)
    assert np.array_equal(t.A, q3.alpha) and np.array_equal(t.B, q1.alpha) and np.array_equal(t.C, q2.alpha)
    assert abs(t.A @ t.A - t.B @ t.B) < 1e-10 and abs(t.B @ t.B - t.C @ t.C) < 1e-10


def test_broken_relation_raises():
    qs = list(qvectors(catalog.w_state()))
    qs[0] = QVector(1, qs[0].components + np.array([0, 0, 0, 1e-6, 0, 0]))
    with pytest.raises(ConsistencyError):
        triple_from_qvectors(qs)


@given(states())
def test_gauge_makes_parts_orthogonal(s):
    g = fix_gauge(extract_triple(s))
    if g.degenerate:
        return
    for name in "ABC":
        R, I = g.parts(name)
        assert abs(R @ I) < 1e-9
    R, I = g.parts("A")
    assert R @ R >= I @ I - 1e-12


def test_gauge_degenerate_for_w():
    g = fix_gauge(extract_triple(catalog.w_state()))
    assert g.degenerate and g.phase == 0.0


def test_ghz_vectors_real_in_its_phase_convention():
    t = extract_triple(catalog.ghz_state())
    for v in t:
        assert np.abs(v.imag).max() < 1e-15
    g = fix_gauge(t)
    assert abs(g.phase) < 1e-15


@given(states(), su2(), st.sampled_from([0, 1, 2]))
def test_locality(s, u, k):
    """A local unitary on one qubit moves only that qubit's vector."""
    t0 = list(extract_triple(s))
    t1 = list(extract_triple(apply_unitary(s, u, "abc"[k])))
    for j in range(3):
        if j != k:
            assert np.abs(t0[j] - t1[j]).max() < 1e-12


@given(states(), su2(), st.sampled_from([0, 1, 2]))
def test_bloch_mimicry(s, u, k):
    q = "abc"[k]
    new = apply_unitary(s, u, q)
    before, after = list(extract_triple(s))[k], list(extract_triple(new))[k]
    if abs(np.linalg.det(np.column_stack([before.real, before.imag, np.cross(before.real, before.imag)]))) < 1e-6:
        return
    R = induced_rotation(before, after)
    assert np.abs(R @ R.T - np.eye(3)).max() < 1e-9
    assert np.abs(R - bloch_rotation(u)).max() < 1e-9
    assert np.abs(R @ bloch_vector(s, q) - bloch_vector(new, q)).max() < 1e-9


@given(states(), st.floats(0, 2 * np.pi))
def test_global_phase_rotates_vectors(s, phi):
    t0, t1 = extract_triple(s), extract_triple(s.with_phase(phi))
    for a, b in zip(t0, t1):
        assert np.abs(np.exp(2j * phi) * a - b).max() < 1e-12
    m0, m1 = tangle_report(s).measures(), tangle_report(s.with_phase(phi)).measures()
    assert max(abs(m0[k] - m1[k]) for k in m0) < 1e-10


def test_induced_rotation_needs_independent_parts():
    with pytest.raises(ConsistencyError):
        induced_rotation(np.array([1, 0, 0], dtype=complex), np.array([0, 1, 0], dtype=complex))
