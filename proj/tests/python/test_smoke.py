import math

import pytest

import gaborform as gf


def test_parse_and_autocorrelation():
    terms, shift = gf.parse_polynomial("z^2 + z^3 + z^5")
    assert terms == [(0, 1.0), (1, 1.0), (3, 1.0)]
    assert shift == 2
    assert gf.autocorrelation("-2+z+z^3") == [6.0, -2.0, 1.0, -2.0]
    assert gf.autocorrelation([(0, 2.0), (2, 3.0), (3, 4.0)]) == [29.0, 12.0, 6.0, 8.0]


def test_extrema_and_verdict():
    b = gf.circle_extrema("1+z+z^3")
    assert b["c2"] == pytest.approx(9.0, abs=1e-9)
    assert b["c1"] == pytest.approx(0.3689, abs=1e-3)
    v = gf.spd_verdict("-2+z+z^3")
    assert not v["spd"]
    assert len(v["unit_roots"]) == 1
    assert gf.frame_verdict("5") == (True, 25.0, 25.0)


def test_roots_and_symbol():
    roots = gf.polynomial_roots("-2+z+z^3")
    assert min(abs(r - 1) for r in roots) < 1e-10
    assert gf.symbol_eval("3,1,1,1", 0.0) == pytest.approx(9.0)


def test_blocks():
    assert gf.block_eigenvalues("1+z+z^3", 2) == pytest.approx([2.0, 4.0])
    assert gf.symmetric_eigenvalues([[4.0, -2.0], [-2.0, 4.0]]) == pytest.approx([2.0, 6.0])


def test_quadratic_forms_and_frames():
    assert gf.apply_quadratic_form("1+z+z^3", [1.0, 1.0]) == pytest.approx(8.0)
    assert gf.matrix_quadratic_form([3, 1, 1, 1], [1.0, 1.0]) == pytest.approx(8.0)
    assert gf.frame_sum_lemma("1+z+z^3", {0: 1.0}) == pytest.approx(6 * math.pi)
    assert gf.h0_inner_product({0: 1.0, 1: 1.0}, [0, 1]) == pytest.approx(8 * math.pi)
    lo, hi = gf.empirical_frame_ratio("1+z+z^3", trials=50, support=20)
    assert 0.3688 <= lo <= hi <= 9.0 + 1e-6


def test_factor():
    f = gf.factor("3,1,1,1")
    assert gf.autocorrelation(f["terms"]) == pytest.approx([3, 1, 1, 1], abs=1e-9)
    with pytest.raises(gf.NotFactorableError):
        gf.factor([1.0, 1.0])


def test_errors_and_report():
    with pytest.raises(gf.ParseError):
        gf.parse_polynomial("1+2i")
    report = gf.analyze("1+z+z^3", dims=[2, 3])
    assert report["spd"]["strongly_positive_definite"] is True
    assert report["blocks"][0]["eigenvalues"] == [2.0, 4.0]
    assert all(item["pass"] for item in gf.reproduce_examples())
