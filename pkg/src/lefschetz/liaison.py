"""Hilbert-function arithmetic of linkage.

For a complete intersection I_Z contained in a Gorenstein ideal I_G, the
linked ideal I_Q = I_Z : I_G has

    H_Q(i) = H_Z(theta_Z - 3 - i) - H_G(theta_Z - 3 - i).
"""

from __future__ import annotations

from dataclasses import dataclass

from .complete_intersection import CiTriple, as_triple, ci_hf
from .errors import NegativeValue, RegorEmpty, TrivialLink
from .gorenstein import DegreeSequence, gorenstein_hf, mci_data, validate_gaeta
from .hilbert_seq import HilbertFunction, difference


@dataclass(frozen=True)
class LinkedPair:
    alpha: CiTriple
    delta: DegreeSequence
    h_z: HilbertFunction
    h_g: HilbertFunction
    h_q: HilbertFunction
    theta_z: int
    theta_g: int
    tau: int

    @property
    def e1(self) -> int:
        return self.theta_z - self.theta_g


@dataclass(frozen=True)
class AciDegrees:
    degrees: tuple
    normalized: bool


def _checked(alpha, delta):
    alpha = as_triple(alpha)
    delta = validate_gaeta(delta)
    mci = mci_data(delta).mci
    if not alpha.dominates(mci):
        raise RegorEmpty(f"{tuple(alpha)} does not dominate mci {tuple(mci)}")
    if alpha.theta <= delta.theta:
        raise TrivialLink(f"theta_Z = {alpha.theta} <= theta_G = {delta.theta}")
    return alpha, delta


def first_excess(dg, dz, stop):
    """Least n in [0, stop] with dg(n) > dz(n), else None."""
    for n in range(stop + 1):
        if dg(n) > dz(n):
            return n
    return None


def link_hf(alpha, delta) -> LinkedPair:
    alpha, delta = _checked(alpha, delta)
    h_z, h_g = ci_hf(alpha), gorenstein_hf(delta)
    tz, tg = alpha.theta, delta.theta
    top = tz - 3
    if any(h_z(j) < h_g(j) for j in range(top + 1)):
        raise NegativeValue(f"H_Z < H_G somewhere for {tuple(alpha)} in {list(delta)}")
    h_q = [h_z(top - i) - h_g(top - i) for i in range(top + 1)]
    t = first_excess(difference(h_g), difference(h_z), tz - 2)
    if t is None:
        raise AssertionError(f"no degree with dH_G > dH_Z for {tuple(alpha)}, {list(delta)}")
    return LinkedPair(alpha, delta, h_z, h_g, HilbertFunction(h_q), tz, tg, t)


def tau(alpha, delta) -> int:
    """Least n >= 0 where the Gorenstein first difference strictly exceeds the CI one."""
    return link_hf(alpha, delta).tau


def aci_degrees(alpha, delta) -> AciDegrees:
    """Generator degrees (e1, e2, e3, e4) of the linked almost complete
    intersection, with e1 = theta_Z - theta_G and (e2, e3, e4) = alpha.

    ``normalized`` holds when delta is reduced with empty B-set and e1 <= a1;
    only then is e1 guaranteed to be the smallest degree. The tuple is always
    returned sorted.
    """
    alpha, delta = _checked(alpha, delta)
    data = mci_data(delta)
    e1 = alpha.theta - delta.theta
    normalized = not data.b_set and data.reduced and e1 <= alpha.a1
    return AciDegrees(tuple(sorted((e1, *alpha))), normalized)
