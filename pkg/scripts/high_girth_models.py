"""K_t-models in cubic graphs of large girth via the cell-contraction minor."""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

from _config import parse_config
from smallminors import bounds, dense, generators, oracle


@dataclass(frozen=True)
class HighGirthConfig:
    n: int = 2000
    degree: int = 3
    k: int = 1
    seed: int = 0


def main(argv=None) -> int:
    cfg = parse_config(HighGirthConfig, __doc__, argv)
    target = 8 * cfg.k + 3
    start = time.perf_counter()
    g = generators.high_girth_regular(cfg.n, cfg.degree, target, seed=cfg.seed)
    print(f"graph: n={g.n} m={g.m} girth={oracle.girth_exact(g)} ({time.perf_counter() - start:.1f}s)")
    minor = dense.high_girth_dense_minor(g, cfg.k)
    print(f"minor: {minor.graph.n} cells, min degree {minor.graph.min_degree()}")
    model = dense.high_girth_kt_model(g, cfg.k)
    t = bounds.high_girth_t(cfg.degree, cfg.k)
    print(f"K{model.t}-model (t={t}) of size {model.size}, sets {[len(b) for b in model.branch_sets]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
