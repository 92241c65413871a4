import math

import pytest

import cesaro


def test_measure_parsing_and_moments():
    m = cesaro.Measure("lebesgue")
    assert m == cesaro.Measure.lebesgue()
    assert m.densities == [(1.0, 0.0, 0.0)]
    assert m.moments(4) == pytest.approx([1.0, 1 / 2, 1 / 3, 1 / 4], rel=1e-13)
    assert m.tail(0.25) == pytest.approx(0.75)
    atom = cesaro.Measure("atom(0.5,1.0)")
    assert atom.moment(10) == pytest.approx(2.0**-10)
    assert abs(atom.moment_by_parts(4) - 1 / 16) < 1e-8
    assert str(atom + m) == "atom(0.5,1) + powlaw(c=1,gamma=0,delta=0)"


def test_errors_map_to_value_error():
    with pytest.raises(cesaro.SemanticError):
        cesaro.Measure("atom(1.0,1.0)")
    with pytest.raises(ValueError):
        cesaro.Measure("atom(0.5")
    with pytest.raises(ValueError):
        cesaro.log_gamma(0.0)


def test_special_functions():
    assert cesaro.log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)
    assert cesaro.beta(4.0, 2.0) == pytest.approx(1 / 20, rel=1e-13)
    assert cesaro.carleson_exponent(1.5, 0.5) == 1.5


def test_operator_norms():
    leb = cesaro.Measure.lebesgue()
    assert cesaro.apply(leb, 1.0, 1.0, 3, [1.0]) == pytest.approx([1.0, 0.5, 1 / 3])
    dense = cesaro.section_norm(leb, 1.0, 1.0, 200, method="dense")
    power = cesaro.section_norm(leb, 1.0, 1.0, 200, method="power")
    assert power["value"] == pytest.approx(dense["value"], rel=1e-8)
    profile = cesaro.norm_growth_profile(leb, 1.0, 1.0, [64, 256, 1024])
    values = [row["value"] for row in profile]
    assert values == sorted(values)
    assert values[-1] <= math.sqrt(6.0)


def test_verdicts():
    leb = cesaro.Measure.lebesgue()
    assert cesaro.classify_carleson(leb, 1.0)["verdict"] == "bounded_carleson"
    assert cesaro.classify_moments(leb, 1.25)["verdict"] == "unbounded"
    report = cesaro.check_equivalence("atom(0.5,1)", 1.0, 1.0)
    assert report["verdicts"]["norm"] == "bounded"
    assert report["verdicts"]["compactness"] == "compact"
    assert report["agreement"]["boundedness"] is True


def test_estimates():
    assert cesaro.est_ratio(1.0, 0.75, 10000) == pytest.approx(0.5625, abs=1e-9)
    check = cesaro.prop1_bound_check(1.0, 256)
    assert check["partial_sum_violations"] == 0
    assert check["section_norm"] <= check["bound"]
