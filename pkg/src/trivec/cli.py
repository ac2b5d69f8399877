"""``trivec`` command line: thin wrappers over the library that print JSON.

Exit codes: 0 success, 2 bad input, 3 failed verification, 4 internal inconsistency.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import oracle, so6
from .checks import SelftestConfig, run_selftest
from .errors import ConsistencyError, TrivecError, ValidationError, VerificationError
from .io import dumps, read_json
from .pluecker import pluecker_pvector, qvectors
from .recipes import VERIFY_TOL, Recipe, builtin_recipes, final_fidelity, run
from .state import PARTITIONS, ThreeQubitState, complex_pairs
from .tangles import tangle_report
from .vectors import extract_triple, fix_gauge

TOL_ENV = "TRIVEC_TOL"


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[Path] = None
    output: Optional[Path] = None
    seed: int = 0
    count: int = 100
    tol: float = VERIFY_TOL

    def __post_init__(self):
        if self.seed < 0:
            raise ValidationError("seed must be a non-negative integer")
        if self.count < 0:
            raise ValidationError("count must be a non-negative integer")
        if not self.tol > 0:
            raise ValidationError("tolerance must be positive")


def tolerance_from_env(default: float = VERIFY_TOL) -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None or raw == "":
        return default
    try:
        tol = float(raw)
    except ValueError:
        raise ValidationError(f"{TOL_ENV}={raw!r} is not a number") from None
    if not tol > 0 or tol == float("inf"):
        raise ValidationError(f"{TOL_ENV} must be a positive finite number")
    return tol


def _load_json(path):
    try:
        return read_json(path)
    except OSError as exc:
        raise ValidationError(f"{path}: {exc.strerror}") from None


def _load_state(path) -> ThreeQubitState:
    return ThreeQubitState.from_json(_load_json(path))


def cmd_invariants(path, with_oracle: bool = False, tol: float = VERIFY_TOL) -> dict:
    state = _load_state(path)
    report = tangle_report(state)
    out = {"tangles": report.to_json()}
    worst_ckw = max(abs(r) for r in report.ckw_residuals)
    if with_oracle:
        ref = oracle.oracle_report(state)
        gap = oracle.max_disagreement(report, ref)
        out["oracle"] = ref.to_json()
        out["max_disagreement"] = gap
        if gap > oracle_tol(tol):
            raise VerificationError(f"oracle and q-vector measures differ by {gap:.3e}")
    if worst_ckw > tol:
        raise VerificationError(f"CKW residual {worst_ckw:.3e} exceeds {tol:.1e}")
    return out


def oracle_tol(tol: float) -> float:
    # the Wootters route carries more round-off than the verification default
    return max(tol, 1e-8)


def cmd_qvec(path, partition: Optional[int] = None) -> dict:
    state = _load_state(path)
    parts = (partition,) if partition else tuple(PARTITIONS)
    qs = qvectors(state)
    out = {"partitions": {}}
    for s in parts:
        q = qs[s - 1]
        out["partitions"][str(s)] = {
            "p": complex_pairs(pluecker_pvector(state, s).components),
            "q": complex_pairs(q.components),
            "alpha": complex_pairs(q.alpha),
            "beta": complex_pairs(q.beta),
        }
    triple = extract_triple(state)
    out["vectors"] = triple.to_json(phase=fix_gauge(triple).phase)
    return out


def _hamiltonian(ham_path, rotation_path) -> so6.PairHamiltonian:
    if (ham_path is None) == (rotation_path is None):
        raise ValidationError("give exactly one of --ham or --rotation")
    if ham_path is not None:
        return so6.PairHamiltonian.from_json(_load_json(ham_path))
    pair, x = so6.rotation_from_json(_load_json(rotation_path))
    return so6.rotation_hamiltonian(x, pair)


def cmd_evolve(path, ham=None, rotation=None, t: float = 1.0, track: str = "both", tol: float = VERIFY_TOL) -> dict:
    state = _load_state(path)
    h = _hamiltonian(ham, rotation)
    step = so6.evolve_dual(state, h, t, tol=float("inf"))
    s = h.partition
    out: dict = {"pair": h.pair, "partition": s, "t": t}
    if track in ("both", "state"):
        out["state"] = complex_pairs(step.state.amplitudes)
        out["q"] = {str(q.partition): complex_pairs(q.components) for q in step.qvectors}
    if track in ("both", "q"):
        out["q_propagated"] = {str(s): complex_pairs(step.propagated.components)}
    if track == "both":
        out["track_gap"] = step.disagreement
        if step.disagreement > tol:
            raise ConsistencyError(f"state and q-space tracks differ by {step.disagreement:.3e}")
    return out


def resolve_recipe(name_or_file: str) -> Recipe:
    recipes = builtin_recipes()
    if name_or_file in recipes:
        return recipes[name_or_file]
    if Path(name_or_file).is_file():
        return Recipe.from_json(_load_json(name_or_file))
    raise ValidationError(f"no built-in recipe or file named {name_or_file!r}; built-ins: {sorted(recipes)}")


def cmd_recipe_run(
    name_or_file: str,
    input_path=None,
    verify: bool = False,
    trace_path=None,
    skip_optional: bool = False,
    tol: float = VERIFY_TOL,
) -> dict:
    recipe = resolve_recipe(name_or_file)
    if input_path is not None:
        state = _load_state(input_path)
    elif recipe.input is not None:
        state = recipe.input
    else:
        raise ValidationError("recipe declares no input; pass --input")
    trace = run(recipe, state, verify=verify, tol=tol, skip_optional=skip_optional)
    final = trace[-1]
    out = {
        "recipe": recipe.name,
        "steps": len(trace) - 1,
        "verified": verify,
        "final_state": complex_pairs(final.state.amplitudes),
        "tangles": final.report.to_json(),
        "max_track_gap": max(e.track_gap for e in trace),
    }
    fid = final_fidelity(recipe, trace)
    if fid is not None:
        out["target_fidelity"] = fid
        if verify and 1.0 - fid > tol:
            raise VerificationError(f"{recipe.name}: final fidelity {fid!r} is short of 1 by more than {tol:.1e}")
    if trace_path is not None:
        Path(trace_path).write_text(dumps([e.to_json() for e in trace]) + "\n")
    return out


def cmd_selftest(seed: int = 0, count: int = 100, workers: int = 1) -> dict:
    cfg = RunConfig("selftest", seed=seed, count=count)
    return run_selftest(SelftestConfig(seed=cfg.seed, count=cfg.count, workers=workers))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trivec", description="Three-qubit entanglement via Pluecker q-vectors.")
    sub = p.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="three-tangle, two-tangles and concurrences of a state")
    inv.add_argument("state")
    inv.add_argument("--oracle", action="store_true", help="also compute from density matrices and compare")

    qv = sub.add_parser("qvec", help="p-vectors, q-vectors and the A, B, C vectors")
    qv.add_argument("state")
    qv.add_argument("--partition", type=int, choices=(1, 2, 3))

    ev = sub.add_parser("evolve", help="evolve under a pair Hamiltonian in state space and q-space")
    ev.add_argument("state")
    ev.add_argument("--ham")
    ev.add_argument("--rotation")
    ev.add_argument("--t", type=float, default=1.0)
    ev.add_argument("--track", choices=("both", "state", "q"), default="both")

    rc = sub.add_parser("recipe", help="control recipes")
    rsub = rc.add_subparsers(dest="recipe_command", required=True)
    rr = rsub.add_parser("run", help="run a built-in recipe or a recipe file")
    rr.add_argument("recipe")
    rr.add_argument("--input")
    rr.add_argument("--verify", action="store_true")
    rr.add_argument("--trace")
    rr.add_argument("--skip-optional", action="store_true")
    rsub.add_parser("list", help="names of the built-in recipes")

    st = sub.add_parser("selftest", help="seeded invariant battery")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--count", type=int, default=100)
    st.add_argument("--workers", type=int, default=1)
    return p


def dispatch(args) -> tuple[dict, int]:
    tol = tolerance_from_env()
    if args.command == "invariants":
        return cmd_invariants(args.state, args.oracle, tol), 0
    if args.command == "qvec":
        return cmd_qvec(args.state, args.partition), 0
    if args.command == "evolve":
        return cmd_evolve(args.state, args.ham, args.rotation, args.t, args.track, tol), 0
    if args.command == "recipe":
        if args.recipe_command == "list":
            return {"recipes": sorted(builtin_recipes())}, 0
        return cmd_recipe_run(args.recipe, args.input, args.verify, args.trace, args.skip_optional, tol), 0
    summary = cmd_selftest(args.seed, args.count, args.workers)
    return summary, 0 if summary["passed"] else VerificationError.exit_code


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else ValidationError.exit_code
    try:
        out, code = dispatch(args)
    except TrivecError as exc:
        print(f"trivec: error: {exc}", file=sys.stderr)
        return exc.exit_code
    print(dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
