"""Brute-force Hilbert functions of Artinian monomial quotients of k[x1, x2, x3].

Counts standard monomials degree by degree. Deliberately naive: it is the
independent check for the closed formulas elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DuplicateGenerator, NotArtinian, NegativeEntry
from .hilbert_seq import HilbertFunction


@dataclass(frozen=True)
class MonomialIdealSpec:
    generators: tuple

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        for g in gens:
            if len(g) != 3:
                raise ValueError(f"exponent vectors need 3 entries, got {g}")
            if any(x < 0 for x in g):
                raise NegativeEntry(f"negative exponent in {g}")
            if not any(g):
                raise ValueError("the zero exponent vector generates the unit ideal")
        if len(set(gens)) != len(gens):
            raise DuplicateGenerator(f"duplicate generator in {list(gens)}")
        object.__setattr__(self, "generators", gens)

    def pure_powers(self):
        """Smallest pure-power exponent for each variable."""
        out = []
        for pos in range(3):
            powers = [g[pos] for g in self.generators
                      if g[pos] > 0 and all(g[j] == 0 for j in range(3) if j != pos)]
            if not powers:
                raise NotArtinian(f"no pure power of x{pos + 1}")
            out.append(min(powers))
        return tuple(out)


def parse_generators(text: str) -> MonomialIdealSpec:
    """Parse ``"3:0:0,0:3:0,0:0:3,1:1:1"``."""
    gens = [tuple(int(x) for x in item.split(":")) for item in text.split(",") if item.strip()]
    return MonomialIdealSpec(tuple(gens))


def monomial_hf(spec) -> HilbertFunction:
    if not isinstance(spec, MonomialIdealSpec):
        spec = MonomialIdealSpec(tuple(spec))
    # past sum(p_j - 1) every monomial has some exponent u_j >= p_j
    bound = sum(spec.pure_powers()) - 3
    gens = spec.generators
    values = []
    for t in range(bound + 1):
        count = 0
        for u1 in range(t + 1):
            for u2 in range(t - u1 + 1):
                u3 = t - u1 - u2
                if not any(g1 <= u1 and g2 <= u2 and g3 <= u3 for g1, g2, g3 in gens):
                    count += 1
        values.append(count)
    return HilbertFunction(values)
