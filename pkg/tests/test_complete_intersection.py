from itertools import accumulate

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lefschetz.complete_intersection import CiTriple, ci_delta_piecewise, ci_hf, ci_lambda_stats
from lefschetz.errors import LefschetzError
from lefschetz.hilbert_seq import difference, lam, theta
from lefschetz.monomial_oracle import monomial_hf

from oracles import series_from_numerator

triples = st.lists(st.integers(1, 12), min_size=3, max_size=3).map(lambda t: CiTriple(*sorted(t)))


def all_triples(top=12):
    return [(a1, a2, a3) for a1 in range(1, top + 1) for a2 in range(a1, top + 1)
            for a3 in range(a2, top + 1)]


@pytest.mark.parametrize("alpha, expected", [
    ((1, 1, 1), (1,)),
    ((2, 2, 3), (1, 3, 4, 3, 1)),
    ((3, 3, 3), (1, 3, 6, 7, 6, 3, 1)),
])
def test_ci_hf_examples(alpha, expected):
    assert ci_hf(alpha).values == expected


def test_ci_hf_theta():
    assert theta(ci_hf((2, 3, 5))) == 10


def test_ci_triple_rejects_unsorted():
    with pytest.raises(LefschetzError):
        CiTriple(3, 2, 2)
    with pytest.raises(LefschetzError):
        CiTriple(0, 1, 1)


def test_piecewise_examples():
    assert ci_delta_piecewise((2, 2, 3), 3) == -1
    assert ci_delta_piecewise((3, 3, 3), 2) == 3
    assert ci_delta_piecewise((2, 2, 3), -1) == 0
    assert ci_delta_piecewise((2, 2, 3), 7) == 0


@pytest.mark.parametrize("alpha", [(2, 2, 3), (3, 4, 6), (5, 6, 10)])
def test_piecewise_at_regime_boundary(alpha):
    # a3 = a1 + a2 - 1 sits on both displays; only the first is consistent there
    h = difference(ci_hf(alpha))
    assert [ci_delta_piecewise(alpha, i) for i in range(len(h))] == list(h)


def test_ci_routes_agree_up_to_twelve():
    for a in all_triples():
        expected = ci_hf(a).values
        piecewise = tuple(accumulate(ci_delta_piecewise(a, i) for i in range(sum(a) - 2)))
        koszul = series_from_numerator(_koszul_numerator(a), sum(a) - 2)
        pure = monomial_hf([(a[0], 0, 0), (0, a[1], 0), (0, 0, a[2])]).values
        assert expected == piecewise == tuple(koszul) == pure, a


def _koszul_numerator(a):
    num = [0] * (sum(a) + 1)
    for mask in range(8):
        deg = sum(x for j, x in enumerate(a) if mask >> j & 1)
        num[deg] += (-1) ** bin(mask).count("1")
    return num


@pytest.mark.parametrize("alpha, expected", [
    ((2, 2, 2), (1, 2)),
    ((2, 2, 3), (2, 1)),
    ((1, 1, 1), (0, 1)),
    ((3, 3, 3), (3, 1)),
    ((2, 3, 3), (2, 2)),
])
def test_lambda_stats_examples(alpha, expected):
    assert ci_lambda_stats(alpha) == expected


def test_lambda_stats_match_direct_computation():
    for a in all_triples():
        h = ci_hf(a)
        lam_z = lam(h)
        assert ci_lambda_stats(a) == (lam_z, difference(h)(lam_z)), a


@given(triples)
def test_ci_symmetric(alpha):
    h = ci_hf(alpha)
    t = alpha.theta
    assert all(h(i) == h(t - 3 - i) for i in range(-2, t + 2))


@given(triples)
def test_second_difference_floor(alpha):
    assert min(difference(ci_hf(alpha), 2)) >= -2


@given(triples)
def test_last_difference_is_minus_one(alpha):
    assert difference(ci_hf(alpha))(alpha.theta - 2) == -1


@given(triples)
def test_lambda_bounded_by_two_smallest(alpha):
    assert ci_lambda_stats(alpha)[0] <= alpha.a1 + alpha.a2 - 2
