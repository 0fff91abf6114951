import pytest

from fareyrec.farey import Fraction
from fareyrec.poly import parse_poly
from fareyrec.engine import riley_poly
from fareyrec.verify import (_is_squarefree, run_suite, suite_monic,
                             suite_multiplicity, suite_section8, suite_traces)

X_ = ("X",)


def test_is_squarefree_paths():
    assert _is_squarefree(parse_poly("X^2 - 3 X + 1", X_))
    assert _is_squarefree(parse_poly("7", X_))
    # repeated factors force the exact fallback and a negative verdict
    assert not _is_squarefree(parse_poly("(X - 1)^2 (X + 2)", X_))
    assert not _is_squarefree(riley_poly(Fraction(7, 24)))


def test_section8_suite_is_green():
    assert all(r.ok for r in suite_section8())


def test_monic_suite_reports_no_even_degree_drops():
    results = suite_monic(max_den=40)
    assert results[0].ok and results[0].detail == ""


def test_multiplicity_suite_reports_observed_factors():
    results = suite_multiplicity()
    assert [r.ok for r in results] == [False, False, False]
    assert "(X - 1)^3" in results[0].detail
    assert "(X - 1)^2" in results[1].detail and "(X + 1)^0" in results[1].detail


def test_traces_suite_is_deterministic():
    a = suite_traces(trials=20, seed=99)
    b = suite_traces(trials=20, seed=99)
    assert a[0].ok == b[0].ok == True  # noqa: E712


def test_run_suite_rejects_unknown_names():
    with pytest.raises(ValueError):
        run_suite("no-such-suite")
