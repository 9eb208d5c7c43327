"""Codimension-3 complete intersections: Hilbert function by polynomial product,
the closed piecewise form of its first difference, and closed forms for
lambda and the difference value at lambda."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import LefschetzError
from .hilbert_seq import HilbertFunction


@dataclass(frozen=True, order=True)
class CiTriple:
    a1: int
    a2: int
    a3: int

    def __post_init__(self):
        if not 1 <= self.a1 <= self.a2 <= self.a3:
            raise LefschetzError(f"CI degrees must satisfy 1 <= a1 <= a2 <= a3, got {tuple(self)}")

    def __iter__(self):
        return iter((self.a1, self.a2, self.a3))

    @property
    def theta(self) -> int:
        return self.a1 + self.a2 + self.a3

    def dominates(self, other) -> bool:
        """Componentwise ``self >= other``."""
        return all(x >= y for x, y in zip(self, other))


def as_triple(alpha) -> CiTriple:
    return alpha if isinstance(alpha, CiTriple) else CiTriple(*alpha)


@lru_cache(maxsize=None)
def _ci_values(a1, a2, a3):
    coeffs = [1]
    for a in (a1, a2, a3):
        nxt = [0] * (len(coeffs) + a - 1)
        for i, c in enumerate(coeffs):
            for j in range(a):
                nxt[i + j] += c
        coeffs = nxt
    return tuple(coeffs)


def ci_hf(alpha) -> HilbertFunction:
    """Coefficients of (1 + t + ... + t^(a1-1))(1 + ... + t^(a2-1))(1 + ... + t^(a3-1))."""
    alpha = as_triple(alpha)
    return HilbertFunction(_ci_values(*alpha))


def _branches(a1, a2, a3):
    # (lo, hi, value-at-i) on closed degree ranges. At a3 = a1+a2-1 the
    # second display's ranges collide (its -i+a3-1 piece would start at a3-1
    # with value 0, true value 1), so it only serves a3 >= a1+a2.
    s = a1 + a2 + a3
    head = [
        (0, a1 - 1, lambda i: i + 1),
        (a1 - 1, a2 - 1, lambda i: a1),
    ]
    tail = [
        (a1 + a3 - 1, a2 + a3 - 1, lambda i: -a1),
        (a2 + a3 - 1, s - 1, lambda i: i - s + 1),
    ]
    if a3 <= a1 + a2 - 1:
        return head + [
            (a2 - 1, a3 - 1, lambda i: -i + a1 + a2 - 1),
            (a3 - 1, a1 + a2 - 1, lambda i: -2 * i + s - 2),
            (a1 + a2 - 1, a1 + a3 - 1, lambda i: -i + a3 - 1),
        ] + tail
    return head + [
        (a2 - 1, a1 + a2 - 1, lambda i: -i + a1 + a2 - 1),
        (a1 + a2 - 1, a3 - 1, lambda i: 0),
        (a3 - 1, a1 + a3 - 1, lambda i: -i + a3 - 1),
    ] + tail


def ci_delta_piecewise(alpha, i: int) -> int:
    """First difference of the CI Hilbert function at degree i from the closed
    piecewise formulas.

    Every branch whose closed range contains ``i`` is evaluated; at shared
    endpoints the adjacent branches must agree.
    """
    alpha = as_triple(alpha)
    if i < 0 or i >= alpha.theta - 1:
        return 0
    values = {f(i) for lo, hi, f in _branches(*alpha) if lo <= i <= hi}
    if len(values) != 1:
        raise AssertionError(f"piecewise branches disagree at {tuple(alpha)}, i={i}: {values}")
    return values.pop()


def ci_lambda_stats(alpha):
    """Closed forms for lambda and the first difference at lambda.

    Returns ``(lambda, delta_at_lambda)``.
    """
    a1, a2, a3 = as_triple(alpha)
    t = a1 + a2 + a3
    candidates = set()
    if a2 <= a3 <= a1 + a2:
        candidates.add((t - 3) // 2)
    if a3 >= a1 + a2 - 1:
        candidates.add(a1 + a2 - 2)
    if len(candidates) != 1:
        raise AssertionError(f"lambda case split disagrees for {(a1, a2, a3)}: {candidates}")
    lam_z = candidates.pop()
    if a3 >= a1 + a2 - 1:
        at_lam = 1
    else:
        at_lam = 1 if t % 2 else 2
    return lam_z, at_lam
