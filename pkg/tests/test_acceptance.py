"""Acceptance gate: one test per criterion, summarized at the end of the run."""
import json
import time

import pytest

import test_baskets as tb
import test_enumeration as te
import test_moduli as tm
from iitaka.cli import run
from iitaka.enumeration import SearchWindow, brute_force_oracle, enumerate_baskets

from conftest import B_STAR


def cli(capsys, *argv):
    start = time.perf_counter()
    code, _ = run(list(argv))
    elapsed = time.perf_counter() - start
    return code, json.loads(capsys.readouterr().out), elapsed


@pytest.mark.acceptance(1, "K3 strict search at lambda > 42 over chi in {0,1,2} is empty")
def test_criterion_1(capsys):
    code, data, elapsed = cli(capsys, "search", "--fiber", "k3", "--lambda-gt", "42")
    assert data["inputs"]["chi_X_values"] == [0, 1, 2]
    assert data["results"]["results"] == []
    assert code == 0 and data["status"] == "reproduced"
    assert elapsed <= 600


@pytest.mark.acceptance(2, "extremal K3 basket at lambda = 42 with sigma 340/7, K.c2 4/7, e3")
def test_criterion_2(capsys):
    code, data, _ = cli(capsys, "search", "--fiber", "k3", "--lambda-ge", "42")
    assert code == 0
    assert {"chi_X": 2, "basket": B_STAR, "sigma": "340/7", "lambda": "42"} in \
        data["results"]["results"]
    code, data, _ = cli(capsys, "verify-basket", "--basket", B_STAR, "--chi", "2",
                        "--chi-f", "2")
    res = data["results"]
    assert code == 0
    assert (res["sigma"], res["k_dot_c2"], res["lambda"], res["e3"]) == \
        ("340/7", "4/7", "42", True)
    assert res["horizon"] == 43


@pytest.mark.acceptance(3, "Enriques strict search at lambda > 20 with chi = 1 is empty")
def test_criterion_3(capsys):
    code, data, elapsed = cli(capsys, "search", "--fiber", "enriques", "--lambda-gt", "20",
                              "--chi", "1")
    assert data["results"]["results"] == []
    assert code == 0 and elapsed <= 120


@pytest.mark.acceptance(4, "abelian deg A minimum 1/360 at (3,(12,10,8),4,1,1); cases 1/120, 1/6, 1/156")
def test_criterion_4(capsys):
    code, data, elapsed = cli(capsys, "min-dega", "--fiber", "abelian")
    res = data["results"]
    w = res["witness"]
    assert res["overall"] == "1/360"
    assert (w["u"], w["denoms"], w["alpha"], w["beta"], w["gamma"]) == (3, [12, 10, 8], 4, 1, 1)
    bounds = {c["bound"] for c in res["cases"]}
    assert {"1/120", "1/6", "1/156"} <= bounds
    assert code == 0 and elapsed <= 1


@pytest.mark.acceptance(5, "bielliptic deg A minimum 1/2160 at (b=6,u=3,(12,10,8),19,6,7); |I|=0 case 1/720")
def test_criterion_5(capsys):
    code, data, elapsed = cli(capsys, "min-dega", "--fiber", "bielliptic")
    res = data["results"]
    w = res["witness"]
    assert elapsed <= 5
    assert {"case": "|I|=0", "bound": "1/720", "witness": None} in res["cases"]
    assert res["overall"] == "1/2160"
    assert (w["b"], w["u"], w["denoms"], w["alpha"], w["beta"], w["gamma"]) == \
        (6, 3, [12, 10, 8], 19, 6, 7)
    assert code == 0


@pytest.mark.acceptance(6, "orbifold minimum 1/42 at (2,3,7), stable at order cap 200")
def test_criterion_6(capsys):
    for extra in ([], ["--order-cap", "200"]):
        code, data, _ = cli(capsys, "min-dega", "--hurwitz", *extra)
        assert code == 0
        assert data["results"]["overall"] == "1/42"
        assert data["results"]["signature"]["orders"] == [2, 3, 7]


@pytest.mark.acceptance(7, "theorem table 86, 42 (d=2), 722, 86, 96 (d=12), 4332 (d=12), 24 (d=12)")
def test_criterion_7(capsys):
    code, data, _ = cli(capsys, "bounds")
    certs = data["results"]["certificates"]
    table = [(c["m_min"], c["divisibility"]) for c in certs]
    # provenance shows each number came out of a search in this run
    for c in certs[:-1]:
        assert any(line.startswith(("max_lambda", "dega_lower_bound", "hurwitz_min_positive"))
                   for line in c["provenance"])
    assert table == [(86, 1), (42, 2), (722, 1), (86, 1), (96, 12), (4332, 12), (24, 12)]
    assert all(c["status"] == "reproduced" for c in certs)
    assert code == 0 and data["status"] == "reproduced"


@pytest.mark.acceptance(8, "property suite (a) to (f)")
def test_criterion_8():
    tb.test_flip_invariance()                          # (a) 500 baskets
    tb.test_one_period_e3_matches_long_brute_force()   # (b) 150 baskets
    tb.test_period_identity()                          # (c)
    assert len(te.ORACLE_WINDOWS) >= 20                # (d)
    for fiber, n, comp, chis in te.ORACLE_WINDOWS:
        window = SearchWindow.for_fiber(fiber, n, comp, chis)
        pruned = te.within_caps(enumerate_baskets(window), 8, 5)
        assert [r.to_dict() for r in pruned] == \
            [r.to_dict() for r in brute_force_oracle(window, 8, 5)]
    tm.test_strictly_increasing_in_each_coefficient()  # (e) 1000 points
    for b in (1, 4, 6):                                # (f)
        tm.test_min_positive_matches_numpy_grid(b)


@pytest.mark.acceptance(9, "JSON reports round-trip and contain no floating-point token")
def test_criterion_9(capsys):
    from iitaka.report import FLOAT_TOKEN, Report

    for argv in te_commands():
        for emit in ("json", "csv", "md"):
            code, _ = run(argv + ["--emit", emit])
            out = capsys.readouterr().out
            if emit == "json":
                data = json.loads(out)
                assert Report.from_dict(data).to_dict() == data
                data.pop("timing_ms")
                out = json.dumps(data)
            assert FLOAT_TOKEN.search(out) is None


def te_commands():
    return [
        ["search", "--fiber", "k3", "--lambda-ge", "42"],
        ["search", "--fiber", "enriques", "--lambda-ge", "20"],
        ["verify-basket", "--basket", B_STAR, "--chi", "2", "--chi-f", "2"],
        ["verify-basket", "--basket", "2,1", "--chi", "1", "--chi-f", "1"],
        ["min-dega", "--fiber", "abelian"],
        ["min-dega", "--fiber", "bielliptic"],
        ["min-dega", "--hurwitz"],
        ["bounds"],
        ["oracle", "--fiber", "k3", "--lambda-ge", "8", "--chi", "1"],
    ]
