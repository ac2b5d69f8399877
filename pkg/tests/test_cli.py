import json
import subprocess
import sys

import numpy as np
import pytest

from trivec import catalog
from trivec.cli import RunConfig, main
from trivec.errors import ValidationError
from trivec.io import dumps, fixture_path


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_invariants_w(capsys):
    code, out, _ = _run(capsys, "invariants", str(fixture_path("w")), "--oracle")
    assert code == 0
    t = out["tangles"]
    assert abs(t["tau_abc"]) < 1e-10 and abs(t["tau_ab"] - 4 / 9) < 1e-10 and abs(t["tau_b_ca"] - 8 / 9) < 1e-10
    assert out["max_disagreement"] < 1e-8


def test_invariants_product(capsys):
    code, out, _ = _run(capsys, "invariants", str(fixture_path("product")))
    assert code == 0 and all(v == 0 for k, v in out["tangles"].items() if k != "ckw_residuals")


def test_qvec_w2_partition_3(capsys):
    code, out, _ = _run(capsys, "qvec", str(fixture_path("w2")), "--partition", "3")
    q = np.array([complex(*z) for z in out["partitions"]["3"]["q"]])
    expected = np.array([1j, -3, 0, 0, 2j * np.sqrt(2), 0]) / (6 * np.sqrt(2))
    assert code == 0 and np.abs(q - expected).max() < 1e-10
    assert set(out["vectors"]) == {"A", "B", "C", "phase"}


def test_parse_error_has_line_context(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "amplitudes": [[1, 0],, [0, 0]]\n}\n')
    code, _, err = _run(capsys, "invariants", str(bad))
    assert code == 2 and ":2:" in err and '"amplitudes"' in err


def test_unnormalized_state_is_a_validation_error(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"amplitudes": [[1, 0]] * 8}))
    assert _run(capsys, "invariants", str(path))[0] == 2
    assert _run(capsys, "invariants", str(tmp_path / "missing.json"))[0] == 2


def test_evolve_tracks(tmp_path, capsys):
    ham = tmp_path / "h.json"
    ham.write_text(json.dumps({"pair": "bc", "coeffs": {"xy": -np.pi / 8}}))
    code, out, _ = _run(capsys, "evolve", str(fixture_path("w")), "--ham", str(ham), "--t", "1.0")
    assert code == 0 and out["track_gap"] < 1e-9
    q = np.array([complex(*z) for z in out["q_propagated"]["1"]])
    assert np.abs(q - np.array([0, -1, 0, 1, np.sqrt(2) * 1j, 0]) / (3 * np.sqrt(2))).max() < 1e-12
    code, out, _ = _run(capsys, "evolve", str(fixture_path("w")), "--ham", str(ham), "--track", "q")
    assert "state" not in out
    rot = tmp_path / "r.json"
    rot.write_text(json.dumps({"pair": "bc", "plane": [1, 5], "angle": np.pi / 4}))
    code, out2, _ = _run(capsys, "evolve", str(fixture_path("w")), "--rotation", str(rot))
    assert code == 0 and np.allclose(out2["q_propagated"]["1"], out["q_propagated"]["1"], atol=1e-12)
    assert _run(capsys, "evolve", str(fixture_path("w")))[0] == 2


def test_recipe_run_and_trace(tmp_path, capsys):
    trace = tmp_path / "trace.json"
    code, out, _ = _run(
        capsys, "recipe", "run", "bs_to_ghz", "--input", str(fixture_path("bs")), "--verify", "--trace", str(trace)
    )
    assert code == 0 and out["target_fidelity"] >= 1 - 1e-9
    steps = json.loads(trace.read_text())
    assert len(steps) == 5 and steps[0]["step"] is None


def test_recipe_from_file(tmp_path, capsys):
    from trivec.recipes import w_to_bs

    path = tmp_path / "r.json"
    path.write_text(dumps(w_to_bs().to_json()))
    code, out, _ = _run(capsys, "recipe", "run", str(path), "--verify")
    assert code == 0 and out["steps"] == 5


def test_recipe_verification_failure_exit_code(capsys):
    code, _, err = _run(capsys, "recipe", "run", "w_to_ghz", "--input", str(fixture_path("ghz")), "--verify")
    assert code == 3 and "input" in err
    assert _run(capsys, "recipe", "run", "no_such_recipe")[0] == 2


def test_tolerance_from_environment(monkeypatch, capsys):
    # round-off in the q-space track is caught first, as an internal inconsistency
    monkeypatch.setenv("TRIVEC_TOL", "1e-30")
    code, _, err = _run(capsys, "recipe", "run", "w_to_ghz", "--verify")
    assert code == 4 and "tracks" in err
    monkeypatch.setenv("TRIVEC_TOL", "-1")
    assert _run(capsys, "recipe", "run", "w_to_ghz")[0] == 2
    monkeypatch.setenv("TRIVEC_TOL", "1e-6")
    assert _run(capsys, "recipe", "run", "w_to_ghz", "--verify")[0] == 0


def test_selftest_is_deterministic(capsys):
    main(["selftest", "--seed", "3", "--count", "20"])
    first = capsys.readouterr().out
    main(["selftest", "--seed", "3", "--count", "20"])
    assert capsys.readouterr().out == first
    main(["selftest", "--seed", "3", "--count", "20", "--workers", "2"])
    assert capsys.readouterr().out == first


def test_selftest_zero_count(capsys):
    code, out, _ = _run(capsys, "selftest", "--count", "0")
    assert code == 0 and out["passed"] and out["suites"]["pluecker"]["checked"] == 0
    assert out["suites"]["commutation"]["checked"] == 105


def test_bad_arguments_exit_2(capsys):
    assert main(["qvec", str(fixture_path("w")), "--partition", "4"]) == 2
    assert main(["selftest", "--count", "-1"]) == 2


def test_run_config_validation():
    with pytest.raises(ValidationError):
        RunConfig("selftest", seed=-1)
    with pytest.raises(ValidationError):
        RunConfig("selftest", tol=0)


def test_console_script():
    out = subprocess.run(
        [sys.executable, "-m", "trivec.cli", "invariants", str(fixture_path("ghz"))],
        capture_output=True, text=True, check=True,
    )
    assert abs(json.loads(out.stdout)["tangles"]["tau_abc"] - 1) < 1e-10
