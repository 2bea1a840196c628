"""Guarantee functions for every finder.

Thresholds are exact rationals. The coefficients themselves involve
``log2`` and are floats; comparisons against them go through
:func:`within_log_bound` with a fixed 1e-9 slack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction | int

SLACK = 1e-9


def as_fraction(x: Rational | str | float) -> Fraction:
    if isinstance(x, float):
        # floats are only accepted when they are exact binary fractions
        return Fraction(x)
    return Fraction(x)


@dataclass(frozen=True)
class BoundProfile:
    """Ball-growth profile for extracting a subgraph of average degree ``d_prime`` from ``d``."""

    d: Fraction
    d_prime: Fraction

    def __post_init__(self):
        object.__setattr__(self, "d", as_fraction(self.d))
        object.__setattr__(self, "d_prime", as_fraction(self.d_prime))
        if not self.d > self.d_prime >= 2:
            raise ValueError(f"need d > d' >= 2, got d={self.d}, d'={self.d_prime}")

    @property
    def beta(self) -> Fraction:
        return self.d / self.d_prime

    @property
    def p(self) -> float:
        return 2 / math.log2(self.beta) + 2

    def diameter_bound(self, n: int) -> float:
        return self.p * math.log2(n)


def p_bound(d: Rational, d_prime: Rational) -> float:
    return BoundProfile(Fraction(d), Fraction(d_prime)).p


def girth_coefficient(eps: Rational) -> float:
    """Coefficient of log2|G| bounding the girth at average degree 2+eps."""
    eps = Fraction(eps)
    return 2 * p_bound(2 + eps, 2) + 1


def h_k4(eps: Rational) -> float:
    eps = Fraction(eps)
    return girth_coefficient(eps / 2) + 3 * p_bound(4 + eps, 4 + eps / 2)


def h_k3_nice(eps: Rational) -> float:
    # the K3 model is carved from a K4-model plus at most one extra vertex
    return h_k4(eps) + 1


@lru_cache(maxsize=None)
def _h_kt(t: int, eps: Fraction, variant: str) -> float:
    if t == 2:
        return 2.0
    if variant == "strong":
        if t == 3:
            return h_k3_nice(eps)
        top = Fraction(2) ** (t - 1)
    else:
        top = Fraction(2) ** t
    return 2 + (t - 1) * p_bound(top + eps, top + eps / 2) + _h_kt(t - 1, eps / 4, variant)


def h_kt(t: int, eps: Rational, variant: str = "strong") -> float:
    if t < 2:
        raise ValueError("t >= 2 required")
    if variant not in ("strong", "weak"):
        raise ValueError(f"unknown variant {variant!r}")
    return _h_kt(t, Fraction(eps), variant)


def kt_density_threshold(t: int, eps: Rational, variant: str = "strong") -> Fraction:
    """Average degree the K_t finder needs."""
    eps = Fraction(eps)
    if t == 2:
        return 2 + eps
    return Fraction(2) ** (t - 1 if variant == "strong" else t) + eps


def within_log_bound(size: float, coefficient: float, n: int, additive: float = 0.0) -> bool:
    return size <= coefficient * math.log2(n) + additive + SLACK


def planar_girth_bound(eps: Rational) -> int:
    return 1 + math.ceil(4 / Fraction(eps))


def surface_face_bound(eps: Rational, genus: int) -> Fraction:
    return (4 / Fraction(eps) + 2) * (genus + 1)


def surface_girth_coefficient(eps: Rational) -> float:
    """Coefficient of log2(g+2) for the girth of a graph of Euler genus g.

    Covers both branches: a facial cycle shorter than 6 + 12/eps, or
    a short cycle in a graph with at most 3(g-2)/eps vertices.
    """
    eps = Fraction(eps)
    facial = float(6 + 12 / eps)
    abstract = girth_coefficient(eps) * (1 + max(0.0, math.log2(3 / eps)))
    return max(facial, abstract)


def sees_bound_deg5() -> int:
    return 7


def sees_bound_avg4eps(eps: Rational) -> int:
    return 1 + math.ceil(8 / Fraction(eps))


def sees_bound_genus(eps: Rational) -> int:
    return 2 + math.ceil(12 / Fraction(eps))


def genus_order_threshold(eps: Rational, genus: int) -> Fraction:
    return (24 / Fraction(eps) + 6) * genus


def planar_general_bound(eps: Rational) -> int:
    eps = Fraction(eps)
    return math.ceil(8 / eps) + math.ceil(2 / eps)


def surface_k4_coefficient(eps: Rational) -> float:
    """Coefficient of log2(g+2) bounding the K4-model on a surface (constructed constant)."""
    eps = Fraction(eps)
    small = h_k4(eps) * (1 + math.log2(24 / eps + 6))
    return max(small, float(2 + math.ceil(12 / eps)))


def high_girth_t(r: int, k: int) -> int:
    """Largest t with r(r-1)^k >= 2^(t-1) + 1."""
    target = r * (r - 1) ** k
    t = 1
    while target >= 2 ** t + 1:
        t += 1
    return t


def high_girth_bound(t: int, k: int, h_order: int) -> float:
    return (4 * k + 2) * h_kt(t, 1) * math.log2(h_order) + math.comb(t, 2) * (4 * k + 2)
