"""Print the entanglement tables and q-vectors of the named states and of every recipe step."""
import argparse

import numpy as np

from trivec import catalog
from trivec.oracle import max_disagreement, oracle_report
from trivec.pluecker import qvectors
from trivec.recipes import builtin_recipes, run
from trivec.tangles import MEASURES, tangle_report

STATES = ("product", "w", "ghz", "bs", "w2", "w3")


def fmt_vec(v):
    return "(" + ", ".join(f"{z.real:+.4f}{z.imag:+.4f}i" for z in v) + ")"


def show(label, state, with_q=True):
    r = tangle_report(state)
    row = "  ".join(f"{k}={v:.6f}" for k, v in r.measures().items())
    print(f"{label:>14}  {row}  oracle_gap={max_disagreement(r, oracle_report(state)):.1e}")
    if with_q:
        for q in qvectors(state):
            print(f"{'':>14}  q{q.partition} = {fmt_vec(q.components)}")


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--no-q", action="store_true", help="omit the q-vectors")
    args = p.parse_args()
    np.set_printoptions(precision=6, suppress=True)

    print("named states:", ", ".join(MEASURES))
    for name in STATES:
        show(name, catalog.NAMED[name](), not args.no_q)

    for name, recipe in builtin_recipes().items():
        print(f"\nrecipe {name}")
        for entry in run(recipe, recipe.input):
            label = "input" if entry.step is None else f"{entry.index}:{entry.step.kind}"
            show(label, entry.state, not args.no_q)


if __name__ == "__main__":
    main()
