#!/usr/bin/env python3
"""Sweep the built-in corpus and cross-validate checks against oracles.

For every instance this prints the controlled verdict from the decision
procedure next to the brute-force oracle's answer; on controlled instances
it also compares the subring correspondence with the subring oracle and
confirms that every ideal found by enumeration is graded.  Exit status is
nonzero if any comparison disagrees.
"""
import argparse
import sys
import time

from gradedrings.analysis import (
    check_controlled,
    check_strongly_graded,
    check_valid,
    subring_correspondence,
)
from gradedrings.bimodule import Verdict
from gradedrings.corpus import oracle_scale_corpus, standard_corpus
from gradedrings.oracle import controlled_oracle, ideal_oracle, subring_oracle


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--budget", type=int, default=65536)
    ap.add_argument("--include-m3", action="store_true", help="add the 9-dim matrix pin")
    args = ap.parse_args(argv)

    corpus = oracle_scale_corpus() if args.include_m3 else standard_corpus()
    t0 = time.time()
    disagreements = []
    n_controlled = 0

    for inst in corpus:
        alg = inst.alg
        assert check_valid(alg).holds(), inst.name
        rep = check_controlled(alg, seed=args.seed, budget=args.budget)
        orc = controlled_oracle(alg)
        agree = rep.verdict.decided and (rep.verdict is Verdict.TRUE) == orc
        line = (
            f"{inst.name:24s} dim={alg.dim:2d} "
            f"check={rep.verdict.value:6s} oracle={str(orc).lower():5s}"
        )
        if not agree:
            disagreements.append(inst.name)
            line += "  DISAGREE"
        print(line)

        if not orc:
            continue
        n_controlled += 1
        strong = check_strongly_graded(alg)
        if strong.holds():
            corr = subring_correspondence(alg, seed=args.seed, budget=args.budget)
            keyed = sorted(
                tuple(sorted(s.flat().basis.entries)) for _, s in corr.items
            )
            orc_keyed = sorted(
                tuple(sorted(s.basis.entries)) for s in subring_oracle(alg)
            )
            if keyed != orc_keyed:
                disagreements.append(inst.name + " (subrings)")
                print(f"    subring mismatch: {corr.count} vs {len(orc_keyed)}")
            else:
                print(f"    subrings: {corr.count} (both routes)")
        ungraded = [s.dim for s, graded in ideal_oracle(alg) if not graded]
        if ungraded:
            disagreements.append(inst.name + " (ungraded ideal)")
            print(f"    ungraded ideals of dims {ungraded} on a controlled instance")

    print(
        f"\n{len(corpus)} instances, {n_controlled} controlled, "
        f"{len(disagreements)} disagreements, {time.time() - t0:.1f}s"
    )
    if disagreements:
        print("disagreements: " + ", ".join(disagreements))
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
