from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from ellalg.exact import (INF, UniMat, egcd, eval_cfrac, fmt_slope, is_unimodular_pair,
                          mobius, normalizing_matrix, parse_slope, slope_normalize, to_cfrac)

F = Fraction


@pytest.mark.parametrize("p,q,want", [(9, 2, F(9, 2)), (6, 4, F(3, 2)), (-4, -2, F(2))])
def test_slope_normalize(p, q, want):
    s = slope_normalize(p, q)
    assert s == want and s.denominator > 0


def test_zero_rank():
    with pytest.raises(ZeroDivisionError, match="zero rank"):
        slope_normalize(3, 0)


def test_parse_and_format():
    assert parse_slope("17/2") == F(17, 2)
    assert parse_slope(" -6/4 ") == F(-3, 2)
    assert fmt_slope(F(5, 1)) == "5"
    assert fmt_slope(F(-7, 3)) == "-7/3"
    assert fmt_slope(INF) == "inf"


@pytest.mark.parametrize("s,terms", [(F(5, 2), [3, 2]), (F(17, 2), [9, 2]), (F(7), [7]), (F(2), [2])])
def test_to_cfrac_examples(s, terms):
    assert to_cfrac(s) == terms
    assert eval_cfrac(terms) == s


@pytest.mark.parametrize("s", [F(1), F(1, 2), F(0), F(-3, 2)])
def test_to_cfrac_domain(s):
    with pytest.raises(ValueError):
        to_cfrac(s)


def test_eval_cfrac_truncations():
    assert eval_cfrac([3, 2]) == F(5, 2)
    assert eval_cfrac([3, 1]) == F(2)
    assert eval_cfrac([11]) == F(11)


def test_eval_cfrac_degenerate():
    # 2 - 1/(1 - 1/1): inner value hits zero
    with pytest.raises(ZeroDivisionError, match="degenerate truncation"):
        eval_cfrac([2, 1, 1])
    with pytest.raises(ValueError):
        eval_cfrac([])


def test_cfrac_round_trip_exhaustive():
    for n in range(2, 61):
        for k in range(1, n):
            if gcd(n, k) != 1:
                continue
            terms = to_cfrac(F(n, k))
            assert eval_cfrac(terms) == F(n, k)
            assert all(t >= 2 for t in terms)


def test_mobius_examples():
    g = UniMat(2, -5, 1, -2)
    assert mobius(UniMat.identity(), F(7, 3)) == F(7, 3)
    assert mobius(g, F(5, 2)) == 0
    assert mobius(g, F(4)) == F(3, 2)
    assert mobius(g, F(2)) is INF
    assert mobius(g, INF) == F(2)
    assert mobius(UniMat(1, 1, 0, 1), INF) is INF


def test_unimat_determinant():
    with pytest.raises(ValueError):
        UniMat(2, 0, 0, 1)
    g = UniMat(2, -5, 1, -2)
    assert g @ g.inverse() == UniMat.identity()


SL2_SMALL = [UniMat(a, b, c, d) for a in range(-5, 6) for b in range(-5, 6)
             for c in range(-5, 6) for d in range(-5, 6) if a * d - b * c == 1]
unimats = st.sampled_from(SL2_SMALL)
slopes = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 30))


@settings(max_examples=300, deadline=None)
@given(unimats, unimats, slopes)
def test_mobius_group_action(g, h, s):
    inner = mobius(h, s)
    rhs = mobius(g, inner)
    lhs = mobius(g @ h, s)
    if lhs is not INF and rhs is not INF and inner is not INF:
        assert lhs == rhs


@settings(max_examples=200, deadline=None)
@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_egcd(a, b):
    g, x, y = egcd(a, b)
    assert a * x + b * y == g


def _pairs(bound):
    vals = sorted({F(p, q) for p in range(-bound, bound + 1) for q in range(1, bound + 1)})
    for i, t1 in enumerate(vals):
        for t2 in vals[i + 1:]:
            yield t1, t2


def test_normalizing_matrix_examples():
    assert normalizing_matrix(F(0), F(5, 2)) == UniMat.identity()
    assert normalizing_matrix(F(5, 2), F(4)) == UniMat(2, -5, 1, -2)
    assert normalizing_matrix(F(1), F(8)) == UniMat(1, -1, 0, 1)


def test_normalizing_matrix_exhaustive():
    checked = 0
    for t1, t2 in _pairs(20):
        if is_unimodular_pair(t1, t2):
            # image of t2 would be infinite; the fast path handles these pairs
            with pytest.raises(ValueError):
                normalizing_matrix(t1, t2)
            continue
        g = normalizing_matrix(t1, t2)
        assert mobius(g, t1) == 0
        im = mobius(g, t2)
        assert im is not INF and im > 1
        checked += 1
    assert checked > 10000


def test_normalizing_matrix_order():
    with pytest.raises(ValueError):
        normalizing_matrix(F(3), F(2))
    with pytest.raises(ValueError):
        normalizing_matrix(F(3), F(3))
