"""Scan the third W->GHZ coupling angle and report where the three-tangle peaks.

The peak should sit at the angle used by the built-in recipe.
"""
import argparse

import numpy as np

from trivec import catalog
from trivec.recipes import XI, ControlStep, Recipe, run, w_to_ghz
from trivec.tangles import tangle_report


def tau_after(state, angle):
    r = Recipe("scan", (ControlStep.coupling("ca", "yx", angle / 2),))
    return tangle_report(run(r, state, verify=False)[-1].state).tau_abc


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--points", type=int, default=2001)
    args = p.parse_args()

    w2 = run(w_to_ghz().prefix(2), catalog.w_state())[-1].state
    angles = np.linspace(-np.pi / 2, np.pi / 2, args.points)
    taus = np.array([tau_after(w2, a) for a in angles])
    k = int(np.argmax(taus))
    print(f"grid maximum {taus[k]:.9f} at angle {angles[k]:.6f}")
    print(f"recipe angle {XI:.6f} gives {tau_after(w2, XI):.12f}")


if __name__ == "__main__":
    main()
