"""Exhaustive checks of the two face-length inequalities from the appendix."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction

from _config import parse_config
from smallminors import oracle


@dataclass(frozen=True)
class SweepConfig:
    alpha_max: Fraction = Fraction(60)
    d_max: int = 10
    f_max: int = 40


def main(argv=None) -> int:
    cfg = parse_config(SweepConfig, __doc__, argv)
    ok = True
    for name, check in (("A1", oracle.check_lemma_A1), ("A2", oracle.check_lemma_A2)):
        res = check(cfg.alpha_max, cfg.d_max, cfg.f_max)
        status = "pass" if res.passed else f"counterexample {res.counterexample}"
        print(f"{name}\t{status}\tchecked {res.checked}\tpruned {res.vacuous_pruned}")
        ok &= res.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
