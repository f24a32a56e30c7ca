#!/usr/bin/env python3
"""Round-trip demo of the conjugation pipeline.

Builds a hidden-rotation group phi0 {R(1/3), R(1/5)} phi0^{-1} from a seeded
random conjugator, forgets phi0, and asks smooth_group to recover a
conjugator from breakpoint data alone.  Prints the recovered rotations and,
for contrast, the exact obstruction produced by a map with a jump at its own
fixed point.
"""
import argparse
import json
from fractions import Fraction as F

from plcircle import (GroupPresentation, from_lift_vertices, random_pl,
                      rotation, smooth_group)
from plcircle import io as pio


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("-k", type=int, default=4, help="breakpoints of phi0")
    args = ap.parse_args()

    phi0 = random_pl(args.seed, args.k, 32)
    gens = GroupPresentation(tuple(
        (name, phi0.compose(rotation(a)).compose(phi0.inverse()))
        for name, a in (("a", F(1, 3)), ("b", F(1, 5)))))
    for name, g in gens.generators:
        print(f"generator {name}: {len(g.breakpoints)} breakpoints")
    outcome = smooth_group(gens)
    print(json.dumps(pio.outcome_to_json(outcome), indent=2))

    print("\n--- obstruction example ---")
    f = from_lift_vertices([(0, 0), (F(1, 2), F(1, 4)), (1, 1)])
    bad = smooth_group(GroupPresentation((("f", f),)))
    print(json.dumps(pio.outcome_to_json(bad), indent=2))


if __name__ == "__main__":
    main()
