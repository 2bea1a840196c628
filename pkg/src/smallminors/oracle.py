"""Brute-force ground truth for testing the finders.

Minimum K_t-models come from two independent searches. Exact girth and
the appendix inequality sweeps live here as well.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, KtModel, series_parallel_reduce


# ---------------------------------------------------------------------------
# girth
# ---------------------------------------------------------------------------


def _shortest_cycle_through_bfs(g: Graph, root: int, limit: float) -> float:
    """Length of the shortest closed walk detected from ``root`` (>= girth), below ``limit``."""
    depth = {root: 0}
    parent = {root: None}
    queue = deque([root])
    best = limit
    while queue:
        x = queue.popleft()
        if 2 * depth[x] + 1 >= best:
            break
        for y in g.neighbors(x):
            if y not in depth:
                depth[y] = depth[x] + 1
                parent[y] = x
                queue.append(y)
            elif parent[x] != y:
                best = min(best, depth[x] + depth[y] + 1)
    return best


def girth_exact(g: Graph) -> float:
    """Exact girth (``math.inf`` for forests), by BFS from every vertex."""
    best = math.inf
    for v in g.vertices:
        best = _shortest_cycle_through_bfs(g, v, best)
    return best


def girth_at_least(g: Graph, target: int) -> bool:
    best = target
    for v in g.vertices:
        best = _shortest_cycle_through_bfs(g, v, best)
        if best < target:
            return False
    return True


# ---------------------------------------------------------------------------
# minimum K_t-models by connected-subset enumeration
# ---------------------------------------------------------------------------


def _spanning_partition(order: list[int], nbr: dict[int, int], t: int) -> list[list[int]] | None:
    """Partition ``order`` into t connected, pairwise adjacent parts (bitmask adjacency)."""
    s = len(order)
    bags = [0] * t
    members: list[list[int]] = [[] for _ in range(t)]

    def connected(bag_list: list[int], mask: int) -> bool:
        seen = 1 << bag_list[0]
        frontier = seen
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= nbr[low.bit_length() - 1]
                f ^= low
            grow &= mask & ~seen
            seen |= grow
            frontier = grow
        return seen == mask

    def finish() -> bool:
        for i in range(t):
            if not connected(members[i], bags[i]):
                return False
        for i in range(t):
            reach = 0
            for v in members[i]:
                reach |= nbr[v]
            for j in range(i + 1, t):
                if not reach & bags[j]:
                    return False
        return True

    def rec(i: int, used: int) -> bool:
        if s - i < t - used:
            return False
        if i == s:
            return finish()
        v = order[i]
        for b in range(min(used + 1, t)):
            bags[b] |= 1 << v
            members[b].append(v)
            if rec(i + 1, max(used, b + 1)):
                return True
            bags[b] &= ~(1 << v)
            members[b].pop()
        return False

    if rec(0, 0):
        return [list(m) for m in members]
    return None


def _has_minor_fast(sub_adj: dict[int, set[int]], t: int, edges: int, size: int) -> bool | None:
    """Quick decision for t <= 4; ``None`` means "run the partition search"."""
    if t == 2:
        return edges >= 1
    if t == 3:
        return edges >= size
    if t == 4:
        if edges < size + 2:
            return False
        return bool(series_parallel_reduce(sub_adj))
    if edges < size - t + t * (t - 1) // 2:
        return False
    return None


def min_kt_model(g: Graph, t: int, size_cap: int = 12) -> tuple[int, KtModel] | None:
    """Minimum total size of a K_t-model with at most ``size_cap`` vertices, plus a witness.

    The union of a minimum model is connected, so it suffices to enumerate
    connected vertex sets (each grown from its lowest vertex, never adding
    a smaller one) and test whether the induced subgraph has a K_t-minor.
    """
    if t < 1:
        raise ValueError("t >= 1 required")
    if t == 1:
        return (1, KtModel([[g.vertices[0]]])) if g.n else None
    index = {v: i for i, v in enumerate(g.vertices)}
    ids = list(g.vertices)
    nbr = [0] * g.n
    for v in g.vertices:
        mask = 0
        for u in g.neighbors(v):
            mask |= 1 << index[u]
        nbr[index[v]] = mask
    best: list = [size_cap + 1, None]

    def test(mask: int, size: int, edges: int) -> None:
        members = [i for i in range(g.n) if mask >> i & 1] if size > 64 else _bits(mask)
        adj = {i: {j for j in _bits(nbr[i] & mask)} for i in members}
        quick = _has_minor_fast(adj, t, edges, size)
        if quick is False:
            return
        parts = _spanning_partition(members, {i: nbr[i] & mask for i in members}, t)
        if parts is None:
            return
        best[0] = size
        best[1] = KtModel([[ids[i] for i in p] for p in parts])

    def extend(sub: int, closed: int, ext: int, anchor: int, size: int, edges: int) -> None:
        if size >= t:
            test(sub, size, edges)
        if size + 1 >= best[0]:
            return
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            new_edges = edges + (nbr[w] & sub).bit_count()
            excl = nbr[w] & ~closed & ~((1 << (anchor + 1)) - 1)
            extend(sub | low, closed | nbr[w] | low, ext | excl, anchor, size + 1, new_edges)
            if size + 1 >= best[0]:
                return

    for a in range(g.n):
        start = 1 << a
        extend(start, start | nbr[a], nbr[a] & ~((1 << (a + 1)) - 1), a, 1, 0)
    if best[1] is None:
        return None
    return best[0], best[1].canonical()


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def min_kt_model_by_contraction(g: Graph, t: int) -> int | None:
    """Second, independent oracle: contract edges of every induced subgraph until K_t appears.

    Exponential in every direction; meant for graphs with at most 7 vertices.
    """
    for size in range(t, g.n + 1):
        for subset in itertools.combinations(g.vertices, size):
            if _contracts_to_complete(g, subset, t):
                return size
    return None


def _contracts_to_complete(g: Graph, subset: tuple[int, ...], t: int) -> bool:
    start = frozenset(frozenset([v]) for v in subset)
    seen = {start}
    queue = deque([start])
    while queue:
        parts = queue.popleft()
        plist = list(parts)
        owner = {v: p for p in plist for v in p}
        quotient = {p: set() for p in plist}
        for p in plist:
            for v in p:
                for u in g.neighbors(v):
                    q = owner.get(u)
                    if q is not None and q != p:
                        quotient[p].add(q)
        if len(plist) == t:
            if all(len(quotient[p]) == t - 1 for p in plist):
                return True
            continue
        for p in plist:
            for q in quotient[p]:
                merged = (parts - {p, q}) | {p | q}
                if merged not in seen:
                    seen.add(merged)
                    queue.append(merged)
    return False


# ---------------------------------------------------------------------------
# appendix inequalities
# ---------------------------------------------------------------------------


@dataclass
class LemmaCheckResult:
    passed: bool
    checked: int
    vacuous_pruned: int
    counterexample: tuple[Fraction, tuple[int, ...]] | None = None


def _alpha_grid(alpha_max) -> list[Fraction]:
    top = int(Fraction(alpha_max) * 2)
    return [Fraction(i, 2) for i in range(1, top + 1)]


def _sweep(alpha_max, d_max: int, f_max: int, threshold, bound) -> LemmaCheckResult:
    checked = pruned = 0
    for alpha in _alpha_grid(alpha_max):
        cap = bound(alpha)
        for d in range(3, d_max + 1):
            thr = threshold(alpha, d)
            stack: list[tuple[tuple[int, ...], Fraction]] = [((), Fraction(0))]
            while stack:
                prefix, total = stack.pop()
                if len(prefix) == d:
                    checked += 1
                    if total > thr and sum(f - 2 for f in prefix) > cap:
                        return LemmaCheckResult(False, checked, pruned, (alpha, prefix))
                    continue
                lo = prefix[-1] if prefix else 3
                rest = d - len(prefix)
                for f in range(lo, f_max + 1):
                    # best possible completion repeats f; if even that fails the hypothesis, so does every larger f
                    if total + Fraction(rest, f) <= thr:
                        pruned += 1
                        break
                    stack.append((prefix + (f,), total + Fraction(1, f)))
    return LemmaCheckResult(True, checked, pruned)


_LEMMAS = {
    "A1": (lambda a, d: (Fraction(1, 3) + 1 / a) * d - Fraction(1, 3), lambda a: math.ceil(a / 3) - 1),
    "A2": (lambda a, d: (Fraction(1, 3) + 1 / a) * (d - 1), lambda a: math.ceil(a / 2) - 1),
}


def lemma_instance(which: str, alpha, faces) -> tuple[bool, bool]:
    """(hypothesis holds, conclusion holds) for one face-length tuple."""
    threshold, bound = _LEMMAS[which]
    alpha = Fraction(alpha)
    hyp = sum(Fraction(1, f) for f in faces) > threshold(alpha, len(faces))
    return hyp, sum(f - 2 for f in faces) <= bound(alpha)


def check_lemma_A1(alpha_max=60, d_max: int = 10, f_max: int = 40) -> LemmaCheckResult:
    """sum 1/f_i > (1/3 + 1/alpha) d - 1/3  implies  sum (f_i - 2) <= ceil(alpha/3) - 1."""
    return _sweep(alpha_max, d_max, f_max, *_LEMMAS["A1"])


def check_lemma_A2(alpha_max=60, d_max: int = 10, f_max: int = 40) -> LemmaCheckResult:
    """sum 1/f_i > (1/3 + 1/alpha)(d - 1)  implies  sum (f_i - 2) <= ceil(alpha/2) - 1."""
    return _sweep(alpha_max, d_max, f_max, *_LEMMAS["A2"])
