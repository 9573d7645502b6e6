import pytest

import seqcm


def test_rp2_profile():
    report = seqcm.profile("rp2", wrt="Q")
    assert report["schema"] == "seqcm-report/1"
    assert report["command"] == "profile"
    result = report["result"]
    assert result["grade"] == 1
    assert result["cd"] == 3
    flags = [entry["nonvanishing"] for entry in result["indices"]]
    assert flags == [False, True, True, True]


def test_rp2_char2_depth_drops():
    result = seqcm.profile("rp2", wrt="m", characteristic=2)["result"]
    assert result["depth"] == 2
    assert result["dim"] == 3
    assert seqcm.profile("rp2", wrt="m")["result"]["depth"] == 3


def test_moebius_classify():
    result = seqcm.classify("moebius", wrt="Q")["result"]
    assert result["relative"]["grade"] == 1
    assert result["relative"]["cd"] == 2
    assert result["relative"]["seq_cm"] is True
    assert result["relative"]["approx_cm"] is True
    assert result["classical"]["approx_cm"] is False
    assert result["classical"]["depth"] == 2
    assert result["classical"]["dim"] == 3


def test_filtration_layers():
    result = seqcm.filtration("rp2", wrt="Q")["result"]
    assert result["r"] == 3
    assert result["q"] == [1, 2, 3]
    assert result["layers"][2]["primes"] == [["x1", "x2", "x3"]]


def test_document_text_input():
    text = "ring 2 2\ngen x1 y1\ngen x2 y2\n"
    result = seqcm.profile(text, wrt="Q")["result"]
    assert result["grade"] == 0
    assert result["cd"] == 2


def test_invariants_decline_in_band():
    report = seqcm.invariants("tensor01")
    assert report["result"]["declined"] is True
    assert "reason" in report["result"]


def test_errors_are_typed():
    with pytest.raises(ValueError):
        seqcm.profile("rp2", wrt="Z")
    with pytest.raises(seqcm.DeclinedError):
        seqcm.filtration("tensor01")


def test_examples_and_render():
    names = [entry["name"] for entry in seqcm.examples()["result"]]
    assert names == ["rp2", "moebius", "tensor01"]
    text = seqcm.render(seqcm.profile("rp2", wrt="Q"))
    assert "grade = 1" in text
    assert "cd = 3" in text


def test_canonical_text_roundtrip():
    text = seqcm.canonical_text("moebius")
    assert text.startswith("ring 3 3")
    assert "name moebius" in text
    again = seqcm.profile(text, wrt="Q")["result"]
    assert again["cd"] == 2
