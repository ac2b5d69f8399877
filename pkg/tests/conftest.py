import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from trivec.state import ThreeQubitState, random_state, random_unitary

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def states(draw):
    """Haar-random states, with occasional product and GHZ-like members."""
    rng = np.random.default_rng(draw(seeds))
    kind = draw(st.sampled_from(["haar", "haar", "haar", "product", "ghz_like"]))
    if kind == "product":
        vs = [random_unitary(rng, 2)[:, 0] for _ in range(3)]
        return ThreeQubitState(np.kron(np.kron(vs[0], vs[1]), vs[2]))
    if kind == "ghz_like":
        th = rng.uniform(0, np.pi / 2)
        amps = np.zeros(8, dtype=complex)
        amps[0], amps[7] = np.cos(th), np.sin(th) * np.exp(1j * rng.uniform(0, 2 * np.pi))
        return ThreeQubitState(amps)
    return random_state(rng)


@st.composite
def su2(draw):
    u = random_unitary(np.random.default_rng(draw(seeds)), 2)
    return u / np.sqrt(np.linalg.det(u))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_states(seed, n):
    return [random_state(np.random.default_rng([seed, i])) for i in range(n)]


# one line per acceptance criterion, printed after the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
