"""Codimension-3 Gorenstein degree sequences.

A degree sequence ``(d_1, ..., d_{2m+1})`` is the list of minimal generator
degrees of a Gorenstein ideal. Indices in this module follow the 1-based
convention of the degree sequence itself: ``delta.d(i)`` reads ``d_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complete_intersection import CiTriple, as_triple
from .errors import (
    EvenLength,
    NonIntegerTheta,
    NonPositiveDegree,
    NotSorted,
    PairBound,
    TooShort,
    WouldEmptySequence,
)
from .hilbert_seq import HilbertFunction


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple
    m: int
    theta: int

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def d(self, i: int) -> int:
        return self.degrees[i - 1]


@dataclass(frozen=True)
class MciData:
    b_set: tuple
    c_set: tuple
    mci: CiTriple
    reduced: bool


def validate_gaeta(degrees) -> DegreeSequence:
    if isinstance(degrees, DegreeSequence):
        return degrees
    degrees = tuple(int(x) for x in degrees)
    if any(x <= 0 for x in degrees):
        raise NonPositiveDegree(f"degrees must be positive: {list(degrees)}")
    if any(a > b for a, b in zip(degrees, degrees[1:])):
        raise NotSorted(f"degrees must be nondecreasing: {list(degrees)}")
    if len(degrees) % 2 == 0:
        raise EvenLength(f"need an odd number of degrees, got {len(degrees)}")
    if len(degrees) < 3:
        raise TooShort(f"need at least 3 degrees, got {len(degrees)}")
    m = (len(degrees) - 1) // 2
    total = sum(degrees)
    if total % m:
        raise NonIntegerTheta(f"sum {total} not divisible by m = {m}")
    theta = total // m
    n = len(degrees)
    for i in range(2, m + 2):
        # theta > d_i + d_{2m+3-i}
        if theta <= degrees[i - 1] + degrees[n + 2 - i - 1]:
            raise PairBound(i, f"index {i}: theta = {theta} <= d_{i} + d_{n + 2 - i}")
    return DegreeSequence(degrees, m, theta)


def _binom2(n):
    return n * (n - 1) // 2 if n >= 2 else 0


@lru_cache(maxsize=None)
def _gor_values(degrees, theta):
    out = []
    for t in range(theta - 2):
        v = _binom2(t + 2)
        for d in degrees:
            v -= _binom2(t - d + 2)
            v += _binom2(t - (theta - d) + 2)
        v -= _binom2(t - theta + 2)
        out.append(v)
    return tuple(out)


def gorenstein_hf(delta) -> HilbertFunction:
    """Hilbert function read off the self-dual minimal free resolution
    ``0 -> R(-theta) -> sum R(d_i - theta) -> sum R(-d_i) -> R``."""
    delta = validate_gaeta(delta)
    return HilbertFunction(_gor_values(delta.degrees, delta.theta))


def mci_data(delta) -> MciData:
    delta = validate_gaeta(delta)
    m, theta, d = delta.m, delta.theta, delta.d
    b_set = tuple(i for i in range(3, m + 2) if theta <= d(i) + d(2 * m + 4 - i))
    c_set = tuple(i for i in range(4, m + 3) if theta <= d(i) + d(2 * m + 5 - i))
    if b_set:
        mci = (d(1), d(max(b_set)), d(2 * m + 4 - min(b_set)))
    elif c_set:
        mci = (d(1), d(2), d(max(c_set)))
    else:
        mci = (d(1), d(2), d(3))
    return MciData(b_set, c_set, CiTriple(*mci), _ghost_pair(delta) is None)


def _ghost_pair(delta):
    """Lexicographically smallest (h, k), h < k, with d_h + d_k = theta."""
    n = len(delta.degrees)
    for h in range(n):
        for k in range(h + 1, n):
            if delta.degrees[h] + delta.degrees[k] == delta.theta:
                return h + 1, k + 1
    return None


def reduce(delta) -> DegreeSequence:
    """Strip ghost pairs until none remains. Theta and the Hilbert function are unchanged."""
    delta = validate_gaeta(delta)
    while (pair := _ghost_pair(delta)) is not None:
        if len(delta) <= 3:
            raise WouldEmptySequence(f"ghost pair {pair} in {list(delta)} leaves fewer than 3 degrees")
        h, k = pair
        rest = [x for j, x in enumerate(delta.degrees, start=1) if j not in (h, k)]
        delta = validate_gaeta(rest)
    return delta


def regor_nonempty(alpha, delta) -> bool:
    """Whether a CI with degrees alpha fits inside a Gorenstein ideal with degrees delta:
    exactly when alpha dominates the minimal CI triple componentwise."""
    return as_triple(alpha).dominates(mci_data(delta).mci)
