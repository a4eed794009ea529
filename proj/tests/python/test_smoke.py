"""Smoke tests for the python extension module."""
import agol3
import pytest

BETA = "s1^4 s2 s1^3 s2^4"
BETA_P = "s1^-4 s2^-4 s1^-3 s2^-1"
BETA_PP = "s1^-4 s2^-1 s1^-3 s2^-4"


def test_analyze_beta():
    a = agol3.analyze(BETA)
    assert a.trace == 15
    assert a.alpha == (19, -1, 14, 221)
    assert a.lam == (15, 1, 2, 221)
    assert a.n == 3
    assert a.primed is True
    assert a.lr_word(12) == "LRLRRLLRLRRL"
    assert a.type_word(6) == ["II'", "I'", "I", "I'", "II", "I"]


def test_cycle():
    c = agol3.analyze(BETA).cycle()
    assert c["preperiod"] == 1
    assert c["period"] == 6
    assert c["lambda_power"] == 1
    assert c["periodic_type_word"] == ["II'", "I'", "I", "I'", "II", "I"]


def test_compare_verdicts():
    assert agol3.compare(BETA, BETA_P)["verdict"] == "Equivalent"
    assert agol3.compare(BETA_PP, BETA_P)["verdict"] == "MirrorEquivalent"
    r = agol3.compare(BETA, "s1 s2^-1 s1 s2^-1")
    assert r["verdict"] == "Neither"
    assert "fields" in r["obstruction"]


def test_flype_and_kolee():
    f = agol3.flype("s1^5 s2^-1 s1^3 s2^4")
    assert f["flyped"] == "s1^5 s2^4 s1^3 s2^-1"
    assert f["nondegenerate"] is False
    assert agol3.kolee_nondegenerate(-4, -1, -3, -4) is True
    assert agol3.kolee_nondegenerate(4, -1, 4, 4) is False


def test_oracles_agree():
    a = agol3.analyze(BETA_P)
    assert a.lr_word(40) == agol3.lr_oracle(a.alpha, int(a.n), 40)


def test_farey_sequence():
    fs = agol3.farey_sequence(2)
    assert fs == [(0, 1), (1, 3), (1, 2), (2, 3), (1, 1)]


def test_nested_intervals():
    ivs = agol3.nested_intervals(BETA_P, 8)
    assert ivs[7] == ((18, 31), (25, 43))


def test_errors_raise():
    with pytest.raises(agol3.Agol3Error):
        agol3.analyze("s1 s2")
    with pytest.raises(agol3.Agol3Error):
        agol3.analyze("not a word")


def test_gamma_and_case_matrix():
    assert agol3.gamma_trace(4, 3, 4) == 67
    assert agol3.gamma_trace(-4, -3, -4) == 15
    m = agol3.case_matrix(1, 1, -1)
    assert m == ((2, 3), (3, 5))


def test_word_ops():
    assert agol3.mirror(BETA) == BETA_PP
    assert agol3.reverse("s1^2 s2^3") == "s2^3 s1^2"


def test_json_roundtrip():
    import json
    doc = json.loads(agol3.analyze(BETA).json())
    assert doc["schemaVersion"] == "1"
    assert doc["payload"]["trace"] == "15"
