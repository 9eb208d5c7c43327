"""Integer sequences indexed from degree 0: Hilbert functions, their
differences, Macaulay growth and the Weak Lefschetz sequence test.

Sequences are dense tuples; any degree outside the stored range reads as 0.
Both sequence types are callable, so ``h(i)`` works for every integer ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence, Union

from .errors import EmptyFunction, InvalidHilbertFunction, InvalidIndex, NegativeEntry


def _trim(values):
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class HilbertFunction:
    values: tuple

    def __post_init__(self):
        vals = _trim(int(v) for v in self.values)
        if not vals or vals[0] != 1:
            raise InvalidHilbertFunction(f"H(0) must be 1, got {list(self.values)}")
        if any(v < 0 for v in vals):
            raise InvalidHilbertFunction(f"negative entry in {list(self.values)}")
        object.__setattr__(self, "values", vals)

    def __call__(self, i: int) -> int:
        return self.values[i] if 0 <= i < len(self.values) else 0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def theta(self) -> int:
        return theta(self)

    @property
    def lam(self) -> int:
        return lam(self)


@dataclass(frozen=True)
class DifferenceSequence:
    values: tuple
    order: int = 1

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def __call__(self, i: int) -> int:
        return self.values[i] if 0 <= i < len(self.values) else 0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


SeqLike = Union[HilbertFunction, DifferenceSequence, Sequence[int]]


@dataclass(frozen=True)
class WlsVerdict:
    is_unimodal: bool
    unimodality_index: Optional[int]
    o_sequence_ok: bool
    first_violation_degree: Optional[int]
    is_wls: bool

    def as_dict(self):
        return {
            "is_unimodal": self.is_unimodal,
            "unimodality_index": self.unimodality_index,
            "o_sequence_ok": self.o_sequence_ok,
            "first_violation_degree": self.first_violation_degree,
            "is_wls": self.is_wls,
        }


def difference(h: SeqLike, order: int = 1) -> DifferenceSequence:
    """First or second difference, ``out(i) = h(i) - h(i-1)``.

    The result is stored up to its last nonzero entry, which for a Hilbert
    function with last support degree N is degree N+1 (order 1) or N+2 (order 2).
    """
    if order not in (1, 2):
        raise InvalidIndex(f"difference order must be 1 or 2, got {order}")
    vals = list(h)
    start = getattr(h, "order", 0)
    for _ in range(order):
        vals = [b - a for a, b in zip([0] + vals, vals + [0])]
    return DifferenceSequence(_trim(vals), order=start + order)


def positive_part(d: SeqLike) -> DifferenceSequence:
    return DifferenceSequence(tuple(max(v, 0) for v in d), order=getattr(d, "order", 1))


def _last_support(h: SeqLike) -> int:
    last = -1
    for i, v in enumerate(h):
        if v > 0:
            last = i
    if last < 0:
        raise EmptyFunction("sequence has no positive entry")
    return last


def theta(h: SeqLike) -> int:
    """Last degree with H > 0, plus 3 (the socle degree shifted by the codimension)."""
    return _last_support(h) + 3


def lam(h: SeqLike) -> int:
    """Largest degree where the first difference is strictly positive."""
    _last_support(h)
    d = difference(h, 1).values
    return max(i for i, v in enumerate(d) if v > 0)


def is_unimodal(h: SeqLike):
    """Strict increase on ``[0, u)`` then weak decrease from ``u`` on.

    Returns ``(True, u)`` with the witnessing ``u`` or ``(False, None)``.
    The witness is unique when it exists: ``u`` must be the first degree
    where strict increase stops.
    """
    vals = list(h) + [0]
    u = 0
    while u + 1 < len(vals) and vals[u] < vals[u + 1]:
        u += 1
    for i in range(u, len(vals) - 1):
        if vals[i] < vals[i + 1]:
            return False, None
    return True, u


def macaulay_bound(v: int, i: int) -> int:
    """Maximal value in degree i+1 allowed after value v in degree i.

    Uses the i-th binomial (Macaulay) representation
    ``v = C(m_i, i) + C(m_{i-1}, i-1) + ... + C(m_j, j)`` with
    ``m_i > m_{i-1} > ... > m_j >= j >= 1`` and shifts every term up by one.
    """
    if i < 1:
        raise InvalidIndex(f"Macaulay index must be >= 1, got {i}")
    if v < 0:
        raise NegativeEntry(f"negative value {v}")
    out = 0
    k = i
    rest = v
    while rest > 0:
        m = k
        while comb(m + 1, k) <= rest:
            m += 1
        rest -= comb(m, k)
        out += comb(m + 1, k + 1)
        k -= 1
    return out


def is_o_sequence(s: SeqLike):
    """Macaulay's criterion with s(0) = 1 and s(1) unconstrained.

    Returns ``(ok, first_violation_degree)``.
    """
    vals = list(s)
    if any(v < 0 for v in vals):
        raise NegativeEntry(f"negative entry in {vals}")
    if not vals or vals[0] != 1:
        return False, 0
    for i in range(1, len(vals) - 1):
        if vals[i + 1] > macaulay_bound(vals[i], i):
            return False, i + 1
    return True, None


def is_wls(h: SeqLike) -> WlsVerdict:
    unimodal, u = is_unimodal(h)
    ok, bad = is_o_sequence(positive_part(difference(h, 1)))
    return WlsVerdict(
        is_unimodal=unimodal,
        unimodality_index=u,
        o_sequence_ok=ok,
        first_violation_degree=bad,
        is_wls=unimodal and ok,
    )
