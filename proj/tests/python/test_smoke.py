import pytest

import trivspec

F5 = {"field": "fp:5"}
F25 = {"field": "fp:5", "family": "extension", "degree": 2}
H = {"field": "q", "family": "quaternion", "params": ["-1", "-1"]}


def test_alpha():
    assert trivspec.alpha(2, 1) == 1
    assert trivspec.alpha(2, 2) == 4
    assert trivspec.alpha(3, 4) == 21


def test_algebra_round_trip():
    a = trivspec.algebra(F25)
    assert a["degree"] == 2
    assert trivspec.algebra(a) == a
    assert trivspec.verify_algebra(a)["verdict"] == "Certified"


def test_triangular_model_has_trivial_spectrum():
    s = trivspec.triangular_model(F25, 2)
    assert s["schema"] == trivspec.SCHEMA
    assert s["dim"] == trivspec.alpha(2, 2)
    assert trivspec.has_trivial_spectrum(s)["verdict"] == "Certified"
    report = trivspec.classify_optimal(s)
    assert report["partition"] == [1, 1]


def test_identity_is_refuted():
    s = {"algebra": F5, "rows": 2, "cols": 2, "basis": [[["1", "0"], ["0", "1"]]]}
    v = trivspec.has_trivial_spectrum(s)
    assert v["verdict"] == "Refuted"


def test_quaternion_sh():
    s = trivspec.sh(H, 2)
    assert s["dim"] == 10
    assert trivspec.has_trivial_spectrum(s)["verdict"] == "CertifiedByAlternator"
    assert trivspec.hermitian(H, 2)["dim"] == 6


def test_oracle_and_fuzzer():
    assert trivspec.max_trivspec({"field": "fp:3"}, 2)["max"] == 1
    a = trivspec.random_spaces(F5, 2, 2, 3, seed=7)
    b = trivspec.random_spaces(F5, 2, 2, 3, seed=7)
    assert a == b and len(a) == 3


def test_errors():
    with pytest.raises(trivspec.TrivspecError, match="InvalidInput"):
        trivspec.algebra({"field": "fp:4"})
    with pytest.raises(trivspec.TrivspecError, match="NotOptimalDim"):
        full = {"algebra": F5, "rows": 1, "cols": 1, "basis": [[["1"]]]}
        trivspec.classify_optimal(full)
