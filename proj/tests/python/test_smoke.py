from fractions import Fraction

import pytest

import lpadic


def test_bernoulli():
    assert lpadic.bernoulli(12) == Fraction(-691, 2730)
    assert lpadic.bernoulli(1) == Fraction(-1, 2)
    assert lpadic.bernoulli(3) == 0


def test_genbernoulli_and_char_info():
    out = lpadic.genbernoulli(5, "omega^2", 4)
    assert out["rational"] == "-8"
    info = lpadic.char_info(7, "omega^3")
    assert info["parity"] == "odd"
    assert info["conductor"] == 7


def test_measure_check():
    assert lpadic.measure_check(3, samples=20, max_level=2)["pass"]
    bad = lpadic.measure_check(3, samples=5, max_level=2, variant="division")
    assert not bad["pass"]
    assert bad["compatibility"]["failure_count"] > 0


def test_lp_eval_and_verify():
    ev = lpadic.lp_eval(5, "omega^2", 1, prec=12)
    assert ev["converged"]
    assert ev["tail_valuation"] >= 4
    for n in (2, 4):
        report = lpadic.verify(5, "omega^2", n, prec=12)
        assert report["pass"]
        assert report["sign"] == "+"
    assert not lpadic.verify(5, "omega^2", 2, prec=12, sign="-")["pass"]


def test_errors():
    with pytest.raises(lpadic.LpadicError, match="odd prime"):
        lpadic.verify(4, "triv", 2)
    with pytest.raises(lpadic.LpadicError, match="even"):
        lpadic.verify(5, "omega^1", 2)
    with pytest.raises(ValueError):
        lpadic.run(["bernoulli", "--bogus"])


def test_suite_fast():
    report = lpadic.suite("fast")
    assert report["pass"]
    assert len(report["criteria"]) == 11
