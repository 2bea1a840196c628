"""K4-model size against log2 n on random graphs of fixed average degree.

Writes a TSV table and reports the spread of size/log2 n; a spread
bounded by a constant is what logarithmic growth looks like.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from _config import parse_config
from smallminors.cli import bench_rows


@dataclass(frozen=True)
class BenchConfig:
    min_exp: int = 8
    max_exp: int = 16
    avg: Fraction = Fraction(5)
    eps: Fraction = Fraction(1)
    seed: int = 0
    op: str = "k4"
    out: str = "artifacts/bench_log_scaling.tsv"


def main(argv=None) -> int:
    cfg = parse_config(BenchConfig, __doc__.splitlines()[0], argv)
    Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
    ratios = []
    with open(cfg.out, "w") as fh:
        header = "n\tlog2n\tsize\tratio\tseconds"
        fh.write(header + "\n")
        print(header)
        for n, lg, size, ratio, secs in bench_rows(cfg.min_exp, cfg.max_exp, cfg.avg, cfg.eps, cfg.seed, cfg.op):
            row = f"{n}\t{lg:.0f}\t{size}\t{ratio:.4f}\t{secs:.3f}"
            fh.write(row + "\n")
            print(row, flush=True)
            ratios.append(ratio)
    if ratios:
        print(f"spread max/min ratio = {max(ratios) / min(ratios):.3f}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
