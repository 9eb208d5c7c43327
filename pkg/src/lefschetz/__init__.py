"""Hilbert functions of codimension-3 Artinian algebras from degree data,
Weak Lefschetz sequence tests, and exhaustive verification sweeps."""

from .complete_intersection import CiTriple, ci_delta_piecewise, ci_hf, ci_lambda_stats
from .gorenstein import DegreeSequence, MciData, gorenstein_hf, mci_data, reduce, regor_nonempty, validate_gaeta
from .hilbert_seq import (
    DifferenceSequence,
    HilbertFunction,
    WlsVerdict,
    difference,
    is_o_sequence,
    is_unimodal,
    is_wls,
    lam,
    macaulay_bound,
    positive_part,
    theta,
)
from .liaison import AciDegrees, LinkedPair, aci_degrees, link_hf, tau
from .monomial_oracle import MonomialIdealSpec, monomial_hf, parse_generators
from .verifier import PairVerdict, SweepConfig, SweepReport, check_pair, sweep

__version__ = "0.1.0"
