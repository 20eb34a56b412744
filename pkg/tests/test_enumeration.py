from fractions import Fraction

import pytest

from iitaka.baskets import Basket, satisfies_e3
from iitaka.enumeration import (SearchError, SearchWindow, brute_force_oracle,
                                enumerate_baskets, entry_types, make_result,
                                max_lambda, max_lambda_check, search_window,
                                verify_result)

from conftest import B_STAR


def within_caps(results, r_cap, count_cap):
    return [r for r in results if r.basket.size <= count_cap
            and all(e.r <= r_cap for e in r.basket.entries)]


def test_k3_strict_42_empty():
    assert enumerate_baskets(SearchWindow.for_fiber("k3", 42)) == []


def test_k3_closed_42_is_extremal_basket():
    found = enumerate_baskets(SearchWindow.for_fiber("k3", 42, "closed", [2]))
    top = [r for r in found if r.lam == 42]
    assert [r.basket.format() for r in top] == [B_STAR]
    assert top[0].sigma == Fraction(340, 7)


def test_enriques_strict_20_empty():
    assert enumerate_baskets(SearchWindow.for_fiber("enriques", 20)) == []


def test_enriques_closed_20_attained():
    found = enumerate_baskets(SearchWindow.for_fiber("enriques", 20, "closed"))
    assert found and max(r.lam for r in found) == 20


def test_k3_chi_zero_top_is_single_half_point():
    # sigma >= 3/2 for a non-empty basket, so lambda <= 24 / (3/2) = 16
    found = enumerate_baskets(SearchWindow.for_fiber("k3", 6, "closed", [0]))
    top = max(r.lam for r in found)
    assert top == 16
    assert [r.basket.format() for r in found if r.lam == top] == ["2,1"]
    assert enumerate_baskets(SearchWindow.for_fiber("k3", 16, "strict", [0])) == []


def test_max_lambda_values():
    assert max_lambda("k3")[0] == 42
    assert max_lambda("enriques")[0] == 20


def test_max_lambda_check():
    check = max_lambda_check("k3", 42)
    assert check.empty_above
    assert [w.basket.format() for w in check.witnesses_at_bound] == [B_STAR]
    assert not max_lambda_check("k3", 41).empty_above


def test_window_validation():
    with pytest.raises(SearchError):
        SearchWindow.for_fiber("k3", 0)
    with pytest.raises(SearchError):
        SearchWindow.for_fiber("elliptic", 5)
    with pytest.raises(SearchError):
        SearchWindow(3, (1,), Fraction(5))
    with pytest.raises(SearchError):
        SearchWindow(2, (), Fraction(5))
    with pytest.raises(SearchError):
        SearchWindow(2, (1,), Fraction(5), "open")
    with pytest.raises(SearchError):
        search_window(SearchWindow.for_fiber("k3", 42), jobs=0)


def test_window_membership_edges():
    w = SearchWindow.for_fiber("k3", 42)
    c = SearchWindow.for_fiber("k3", 42, "closed")
    edge = 48 + Fraction(24, 42)
    assert not w.contains(2, edge) and c.contains(2, edge)
    assert not w.contains(2, Fraction(48)) and not c.contains(2, Fraction(48))


def test_entry_types_cover_window():
    types = entry_types(Fraction(7))
    assert (7, 3) in types and (8, 1) not in types
    assert all(b <= r // 2 for r, b in types)


# thresholds stay >= 6 (K3) or >= 3 (Enriques) so that both sides run fast
ORACLE_WINDOWS = [
    ("k3", Fraction(n), comp, [1])
    for n in (6, 7, 8, 10, 12, 16, 24)
    for comp in ("strict", "closed")
] + [
    ("enriques", Fraction(n), comp, [1])
    for n in (3, 4, 5, 8)
    for comp in ("strict", "closed")
] + [
    ("k3", Fraction(13, 2), "closed", [0, 1]),
    ("k3", Fraction(20, 3), "strict", [1]),
    ("enriques", Fraction(7, 2), "closed", [1]),
]


@pytest.mark.parametrize("fiber,n,comp,chis", ORACLE_WINDOWS)
def test_pruned_walk_matches_brute_force(fiber, n, comp, chis):
    window = SearchWindow.for_fiber(fiber, n, comp, chis)
    r_cap, count_cap = 8, 5
    pruned = within_caps(enumerate_baskets(window), r_cap, count_cap)
    brute = brute_force_oracle(window, r_cap, count_cap)
    assert [r.to_dict() for r in pruned] == [r.to_dict() for r in brute]


def test_enough_oracle_windows():
    assert len(ORACLE_WINDOWS) >= 20


@pytest.mark.parametrize("n,chis", [(6, [0, 1]), (10, [1]), (42, None)])
def test_results_are_sound_and_canonical(n, chis):
    window = SearchWindow.for_fiber("k3", n, "closed", chis)
    results = enumerate_baskets(window)
    for r in results:
        assert verify_result(r, window)
        assert all(2 * e.b <= e.r for e in r.basket.entries)
        assert satisfies_e3(r.basket)
        assert r.lam >= n
    keys = [r.sort_key() for r in results]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_verify_result_rejects_tampering():
    window = SearchWindow.for_fiber("k3", 42, "closed")
    good = make_result(Basket.parse(B_STAR, chi_X=2), 2)
    assert verify_result(good, window)
    bad = make_result(Basket.from_pairs([(2, 1)] * 97, chi_X=2), 2)
    assert not verify_result(bad, window)
    wrong_lam = type(good)(good.basket, good.sigma, good.lam + 1)
    assert not verify_result(wrong_lam, window)


def test_jobs_do_not_change_output():
    window = SearchWindow.for_fiber("k3", 12, "closed", [1])
    one = [r.to_dict() for r in enumerate_baskets(window, jobs=1)]
    three = [r.to_dict() for r in enumerate_baskets(window, jobs=3)]
    assert one == three and one


@pytest.mark.parametrize("fiber", ["k3", "enriques"])
def test_windows_are_monotone(fiber):
    prev = None
    for n in (30, 20, 12, 8):
        window = SearchWindow.for_fiber(fiber, n, "closed", [1])
        keys = {r.sort_key() for r in enumerate_baskets(window)}
        if prev is not None:
            assert prev <= keys
        prev = keys


def test_oracle_caps():
    window = SearchWindow.for_fiber("k3", 10)
    with pytest.raises(SearchError):
        brute_force_oracle(window, 13, 3)
    with pytest.raises(SearchError):
        brute_force_oracle(window, 6, 9)
    with pytest.raises(SearchError):
        brute_force_oracle(window, 1, 3)
