"""Lower-bound instances next to what the finders return on them.

Squared cycles C^2_2n are compared against n. The snub dodecahedron
and the planar gadgets are compared against their known lower bounds.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from _config import parse_config
from smallminors import generators, oracle, surface


@dataclass(frozen=True)
class TightnessConfig:
    max_cycle_square: int = 14
    max_gadget_k: int = 2
    gadget_oracle: int = 1  # run the oracle on gadgets up to this k (k=2 takes ~25 s)


def cycle_square_rows(cfg: TightnessConfig):
    for n2 in range(8, cfg.max_cycle_square + 1, 2):
        start = time.perf_counter()
        size, _ = oracle.min_kt_model(generators.cycle_square(n2).graph, 4, n2)
        yield f"C2_{n2}\tn={n2 // 2}\toracle min {size}\t{time.perf_counter() - start:.2f}s"


def snub_row():
    snub = generators.snub_dodecahedron()
    sights = {len(snub.sees(v)) for v in snub.graph.vertices}
    model = surface.planar_3conn_k4(snub)
    none7 = oracle.min_kt_model(snub.graph, 4, 7) is None
    return f"snub\tsees {sorted(sights)}\tfinder {model.size}\tno model <= 7: {none7}"


def gadget_rows(cfg: TightnessConfig):
    for k in range(cfg.max_gadget_k + 1):
        e = generators.planar_4plus_eps_gadget(k)
        eps = Fraction(1, k + 1)
        model = surface.planar_general_k4(e, eps)
        row = f"gadget k={k}\tn={e.n}\teps={eps}\tfinder {model.size}\tlower bound > {5 * k}"
        if 1 <= k <= cfg.gadget_oracle:
            found = oracle.min_kt_model(e.graph, 4, 5 * k)
            row += f"\toracle none <= {5 * k}: {found is None}"
        yield row


def main(argv=None) -> int:
    cfg = parse_config(TightnessConfig, "tightness tables", argv)
    for row in cycle_square_rows(cfg):
        print(row, flush=True)
    print(snub_row(), flush=True)
    for row in gadget_rows(cfg):
        print(row, flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
