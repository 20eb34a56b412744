from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from iitaka.baskets import (Basket, BasketEntry, BasketError, basket_sigma, chi_mK,
                            k_dot_c2, l_of_m, lambda_from_basket, local_contribution,
                            normalize, parse_entries, satisfies_e3)

from conftest import B_STAR, baskets
from oracles import chi_mK_direct, chi_mK_series


def flipped(basket: Basket) -> list[tuple[int, int]]:
    return [(r, r - b) for r, b in basket.points()]


# -- examples ----------------------------------------------------------------

def test_local_contribution_examples():
    assert local_contribution(BasketEntry(2, 1), 1) == Fraction(1, 4)
    assert local_contribution(BasketEntry(7, 3), 2) == Fraction(3, 7)
    assert local_contribution(BasketEntry(7, 3), 7) == 0


def test_l_of_m_extremal_basket():
    b = Basket.parse(B_STAR, chi_X=2)
    assert l_of_m(b, 2) == 6
    assert l_of_m(b, 2) == chi_mK_direct(list(b.points()), 0, 2)


def test_sigma_and_lambda_extremal_basket():
    b = Basket.parse(B_STAR, chi_X=2)
    assert basket_sigma(b) == Fraction(340, 7)
    assert k_dot_c2(b) == Fraction(4, 7)
    assert lambda_from_basket(b, 2) == 42
    assert satisfies_e3(b)
    assert b.period == 42


def test_single_half_point_fails_e3():
    b = Basket.from_pairs([(2, 1)], chi_X=1)
    assert chi_mK(b, 2) == Fraction(-11, 4)
    assert not satisfies_e3(b)


def test_parse_and_format():
    b = Basket.parse(" 2,1x8 ; 3,2x6;7,1 ;7,6")
    assert b.format() == "2,1x8;3,1x6;7,1x2"
    assert b.size == 16
    assert parse_entries("") == ()
    assert Basket.parse("").format() == ""


@pytest.mark.parametrize("text", ["4,2", "2,0", "1,1", "2,1x0", "2;1", "a,b", "3,4"])
def test_parse_rejects(text):
    with pytest.raises(BasketError):
        Basket.parse(text)


def test_lambda_domain_errors():
    with pytest.raises(BasketError):
        lambda_from_basket(Basket.from_pairs([(2, 1)], chi_X=1), 1)
    with pytest.raises(BasketError):
        lambda_from_basket(Basket.parse(B_STAR, chi_X=2), 3)
    with pytest.raises(BasketError):
        satisfies_e3(Basket((), 0, Fraction(1, 2)))


def test_empty_basket():
    b = Basket()
    assert l_of_m(b, 5) == 0
    assert basket_sigma(b) == 0
    assert satisfies_e3(b)
    assert not satisfies_e3(Basket((), 1))


def test_normalize_is_idempotent():
    b = Basket.from_pairs([(5, 3), (5, 2), (7, 4)])
    assert normalize(b) == b
    assert normalize(normalize(b)) == normalize(b)


# -- properties --------------------------------------------------------------

@settings(max_examples=500, deadline=None)
@given(baskets(), st.integers(1, 30))
def test_flip_invariance(basket, m):
    other = Basket.from_pairs(flipped(basket), chi_X=basket.chi_X)
    assert other == basket
    assert l_of_m(basket, m) == chi_mK_direct(flipped(basket), 0, m)
    assert satisfies_e3(basket) == satisfies_e3(other)


@settings(max_examples=200, deadline=None)
@given(baskets(), st.integers(1, 25))
def test_l_nondecreasing_and_matches_direct(basket, m):
    assert l_of_m(basket, m + 1) >= l_of_m(basket, m)
    assert chi_mK(basket, m) == chi_mK_direct(list(basket.points()), basket.chi_X, m)


@settings(max_examples=200, deadline=None)
@given(baskets(max_r=8, max_entries=4), st.integers(1, 12))
def test_period_identity(basket, m):
    L = basket.period
    assert l_of_m(basket, m + L) - l_of_m(basket, m) == L * basket_sigma(basket) / 12


@settings(max_examples=150, deadline=None)
@given(baskets(max_r=6, max_entries=4, chi=st.integers(0, 1)))
def test_one_period_e3_matches_long_brute_force(basket):
    L = basket.period
    pts = list(basket.points())
    brute = all(v >= 0 for v in chi_mK_series(pts, basket.chi_X, 10 * L)[1:])
    assert satisfies_e3(basket) == brute


@settings(max_examples=200, deadline=None)
@given(baskets(max_r=12, max_entries=8), st.sampled_from([1, 2]))
def test_lambda_consistency(basket, chi_F):
    if basket_sigma(basket) - 24 * basket.chi_X <= 0:
        return
    assert lambda_from_basket(basket, chi_F) * k_dot_c2(basket) == 12 * chi_F
