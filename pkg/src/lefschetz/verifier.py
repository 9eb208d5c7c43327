"""Exhaustive verification over bounded (alpha, delta) boxes.

Every pair (CI triple alpha inside Gorenstein degree sequence delta) is
linked, and the linked Hilbert function plus every supporting inequality is
checked. Check names:

    wls                     linked H_Q is a Weak Lefschetz sequence
    tau_bound               tau > theta_G - d_2 - 1
    delta_domination_low    dH_Z(n) >= dH_G(n) for 0 <= n <= theta_Z - 3 - lambda_Z
    theta_lambda_gap        theta_Z - theta_G >= lambda_Z - lambda_G
    tau_lower_bounds        tau > theta_Z - 3 - lambda_Z and tau > theta_G - 3 - lambda_G
    second_diff_c_empty     d2H_G <= -2 on [d_3, theta_G - d_3 - 1]   (B = C = {}, alpha = mci)
    second_diff_c_nonempty  d2H_G <= -1 on [d_2, d_gamma - 1]         (B = {} != C, alpha = mci)
    delta_domination_mci    dH_G(i) <= dH_Z(i) for 0 <= i <= theta_G - d_2 - 1 (alpha = mci)
    gorenstein_shape        symmetry, antisymmetry and the sign pattern of dH_G
    hf_containment          H_Z >= H_G pointwise

The two second-difference checks run only for m >= 2 and alpha = mci, and
delta_domination_mci only for alpha = mci. ``tau_bound`` and these three are
required only for normalized pairs (delta reduced, B-set empty,
theta_Z - theta_G <= a1); elsewhere they are recorded but never counted as
failures.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from functools import lru_cache
from typing import Optional

from .complete_intersection import CiTriple, as_triple, ci_hf
from .errors import RegorEmpty, TrivialLink
from .gorenstein import gorenstein_hf, mci_data, validate_gaeta
from .hilbert_seq import difference, is_wls, lam
from .liaison import first_excess

NORMALIZED_ONLY = frozenset({"tau_bound", "second_diff_c_empty", "second_diff_c_nonempty",
                             "delta_domination_mci"})


@dataclass(frozen=True)
class SweepConfig:
    d_max: int
    m_max: int
    alpha_offset: int = 3
    enforce_normalization: bool = True

    def __post_init__(self):
        if self.d_max < 1 or self.m_max < 1 or self.alpha_offset < 0:
            raise ValueError(f"invalid sweep config {self}")


@dataclass
class PairVerdict:
    alpha: tuple
    delta: tuple
    h_q: tuple
    wls: dict
    tau: int
    claim_ok: bool
    normalized: bool
    checks: dict
    failed: list

    @property
    def ok(self) -> bool:
        return not self.failed

    def as_dict(self):
        return asdict(self)


@dataclass
class SweepReport:
    config: SweepConfig
    deltas_enumerated: int = 0
    pairs_checked: int = 0
    failures: list = field(default_factory=list)
    distinct_hq: int = 0
    elapsed: float = 0.0
    rows: list = field(default_factory=list, repr=False)

    def as_dict(self):
        return {
            "config": asdict(self.config),
            "deltas_enumerated": self.deltas_enumerated,
            "pairs_checked": self.pairs_checked,
            "failures": [f.as_dict() for f in self.failures],
            "distinct_hq": self.distinct_hq,
            "elapsed": self.elapsed,
        }


class _Seq:
    """Dense list with zero reads outside its range."""

    __slots__ = ("v",)

    def __init__(self, values):
        self.v = list(values)

    def __call__(self, i):
        return self.v[i] if 0 <= i < len(self.v) else 0


@dataclass(frozen=True)
class _GorInfo:
    degrees: tuple
    theta: int
    lam: int
    h: _Seq
    dh: _Seq
    d2h: _Seq
    b_set: tuple
    c_set: tuple
    mci: CiTriple
    reduced: bool
    shape: tuple


@dataclass(frozen=True)
class _CiInfo:
    theta: int
    lam: int
    h: _Seq
    dh: _Seq


@lru_cache(maxsize=None)
def _gor_info(degrees):
    delta = validate_gaeta(degrees)
    h = gorenstein_hf(delta)
    data = mci_data(delta)
    info = _GorInfo(delta.degrees, delta.theta, lam(h), _Seq(h), _Seq(difference(h, 1)),
                    _Seq(difference(h, 2)), data.b_set, data.c_set, data.mci, data.reduced, ())
    return replace(info, shape=_gorenstein_shape(info))


@lru_cache(maxsize=None)
def _ci_info(alpha):
    h = ci_hf(alpha)
    return _CiInfo(alpha.theta, lam(h), _Seq(h), _Seq(difference(h, 1)))


def _gorenstein_shape(g):
    """(ok, first bad degree) for symmetry, antisymmetry and the sign pattern of dH_G."""
    t, lg, h, dh = g.theta, g.lam, g.h, g.dh
    for i in range(-1, t + 1):
        if h(i) != h(t - 3 - i) or dh(i) != -dh(t - 2 - i):
            return False, i
        if (dh(i) > 0) != (0 <= i <= lg):
            return False, i
        if (dh(i) < 0) != (t - 2 - lg <= i <= t - 2):
            return False, i
        if t >= 2 * lg + 4 and lg + 1 <= i <= t - 3 - lg and dh(i) != 0:
            return False, i
    if t < 2 * lg + 3:
        return False, None
    return True, None


def _first_failure(pred, lo, hi):
    for i in range(lo, hi + 1):
        if not pred(i):
            return i
    return None


def _range_check(pred, lo, hi):
    bad = _first_failure(pred, lo, hi)
    return bad is None, bad


def check_pair(alpha, delta) -> PairVerdict:
    """Link alpha into delta and run every check on the pair."""
    alpha = as_triple(alpha)
    g = _gor_info(tuple(validate_gaeta(delta).degrees))
    if not alpha.dominates(g.mci):
        raise RegorEmpty(f"{tuple(alpha)} does not dominate mci {tuple(g.mci)}")
    if alpha.theta <= g.theta:
        raise TrivialLink(f"theta_Z = {alpha.theta} <= theta_G = {g.theta}")
    z = _ci_info(alpha)
    tz, tg = z.theta, g.theta
    d = g.degrees
    d2, d3 = d[1], d[2]

    top = tz - 3
    h_q = tuple(z.h(top - i) - g.h(top - i) for i in range(top + 1))
    while h_q and h_q[-1] == 0:
        h_q = h_q[:-1]
    tau = first_excess(g.dh, z.dh, tz - 2)

    normalized = not g.b_set and g.reduced and tz - tg <= alpha.a1
    is_mci = alpha == g.mci
    checks = {}

    def record(name, ok, degree=None):
        checks[name] = {"ok": bool(ok), "degree": degree,
                        "required": normalized or name not in NORMALIZED_ONLY}

    verdict = is_wls(h_q)
    record("wls", verdict.is_wls, verdict.first_violation_degree)
    claim_ok = tau > tg - d2 - 1
    record("tau_bound", claim_ok)
    record("delta_domination_low",
           *_range_check(lambda n: z.dh(n) >= g.dh(n), 0, tz - 3 - z.lam))
    record("theta_lambda_gap", tz - tg >= z.lam - g.lam)
    record("tau_lower_bounds", tau > tz - 3 - z.lam and tau > tg - 3 - g.lam)
    if is_mci and len(d) >= 5:
        if not g.b_set and not g.c_set:
            record("second_diff_c_empty", *_range_check(lambda i: g.d2h(i) <= -2, d3, tg - d3 - 1))
        elif not g.b_set:
            d_gamma = d[max(g.c_set) - 1]
            record("second_diff_c_nonempty", *_range_check(lambda i: g.d2h(i) <= -1, d2, d_gamma - 1))
    if is_mci:
        record("delta_domination_mci",
               *_range_check(lambda i: g.dh(i) <= z.dh(i), 0, tg - d2 - 1))
    record("gorenstein_shape", *g.shape)
    record("hf_containment", *_range_check(lambda j: z.h(j) >= g.h(j), 0, tz))

    failed = sorted(name for name, c in checks.items() if c["required"] and not c["ok"])
    return PairVerdict(tuple(alpha), d, h_q, verdict.as_dict(), tau, claim_ok, normalized,
                       checks, failed)


def enumerate_deltas(d_max, m_max, normalized=True):
    """Gaeta-valid degree sequences with entries <= d_max and m <= m_max, in
    canonical (length, lexicographic) order."""
    out = []
    for m in range(1, m_max + 1):
        for degrees in itertools.combinations_with_replacement(range(1, d_max + 1), 2 * m + 1):
            try:
                validate_gaeta(degrees)
            except ValueError:
                continue
            if normalized:
                g = _gor_info(degrees)
                if g.b_set or not g.reduced:
                    continue
            out.append(degrees)
    return out


def alpha_box(delta, offset, normalized=True):
    """CI triples alpha with mci <= alpha <= mci + offset that link nontrivially."""
    g = _gor_info(tuple(delta))
    lo = tuple(g.mci)
    for a in itertools.product(*(range(x, x + offset + 1) for x in lo)):
        if not a[0] <= a[1] <= a[2]:
            continue
        tz = sum(a)
        if tz <= g.theta:
            continue
        if normalized and tz - g.theta > a[0]:
            continue
        yield CiTriple(*a)


def _sweep_chunk(args):
    deltas, offset, normalized, keep_rows = args
    pairs = 0
    failures = []
    hqs = set()
    rows = []
    for degrees in deltas:
        for alpha in alpha_box(degrees, offset, normalized):
            v = check_pair(alpha, degrees)
            pairs += 1
            hqs.add(v.h_q)
            if v.failed:
                failures.append(v)
            if keep_rows:
                rows.append(v)
    return pairs, failures, hqs, rows


def default_workers():
    env = os.environ.get("LEFSCHETZ_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def sweep(config: SweepConfig, workers: Optional[int] = None, keep_rows: bool = False) -> SweepReport:
    """Run check_pair over the whole configured box.

    With ``keep_rows`` every verdict is kept on ``report.rows`` (canonically
    sorted, never serialized into the JSON report).
    """
    start = time.perf_counter()
    workers = workers or default_workers()
    deltas = enumerate_deltas(config.d_max, config.m_max, config.enforce_normalization)
    chunks = [deltas[i::workers] for i in range(workers)] if workers > 1 else [deltas]
    jobs = [(c, config.alpha_offset, config.enforce_normalization, keep_rows) for c in chunks if c]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sweep_chunk, jobs))
    else:
        parts = [_sweep_chunk(j) for j in jobs]

    report = SweepReport(config, deltas_enumerated=len(deltas))
    hqs = set()
    for pairs, failures, part_hqs, part_rows in parts:
        report.pairs_checked += pairs
        report.failures.extend(failures)
        report.rows.extend(part_rows)
        hqs |= part_hqs
    key = lambda v: (len(v.delta), v.delta, v.alpha)
    report.failures.sort(key=key)
    report.rows.sort(key=key)
    report.distinct_hq = len(hqs)
    report.elapsed = round(time.perf_counter() - start, 3)
    return report
