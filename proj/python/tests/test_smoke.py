import pytest

import repbasis


def test_form_data():
    assert repbasis.seven_coefficients(2, 3) == [-4, -6, 6, 9, 5, 15, -10]
    assert repbasis.bezout(2, 3) == (-1, 1)
    with pytest.raises(repbasis.RepbasisError):
        repbasis.bezout(1, -2)
    with pytest.raises(ValueError):
        repbasis.seven_coefficients(2, 4)


def test_rep_table():
    assert repbasis.rep_table([-2, 3], 2, 3, -20, 20) == {-10: 1, 0: 1, 5: 1, 15: 1}
    assert repbasis.rep_count([-2, 3], 2, 3, 0) == 1


def test_construct_is_certified():
    c = repbasis.construct((2, 3), {"default": 1}, window=5)
    assert c["certificate"]["clean"]
    for n in range(-5, 6):
        assert repbasis.rep_count(c["set"], 2, 3, n) == 1


def test_construct_exhausted():
    blocked = [k * t for t in (-2, -1, 1, 2) for k in (5, 15, -10)]
    target = {"default": 1, "zero_set": {"kind": "finite-list", "values": blocked}}
    with pytest.raises(repbasis.RepbasisError, match="no admissible t"):
        repbasis.construct((2, 3), target, window=0, radius=2)


def test_lemma():
    assert repbasis.find_t((2, 3), [], 0) == (1, (3, -2))
    r = repbasis.explain_t((2, 3), [-2, 3], 0, -2)
    assert r["verdict"] == "rejected"
    assert r["case"] == "preserved-count"
    assert r["witness"] == -10


def test_gadic_and_sidon():
    assert repbasis.gadic_set(2, 2, 10) == [0, 1, 4, 5]
    assert repbasis.gadic_decode(2, 2, 6) == [4, 1]
    holds, witness, _ = repbasis.is_b_f_g(repbasis.gadic_set(2, 2, 100), [1, 2], 1, 0, 100)
    assert holds and witness is None
    assert repbasis.is_b_f_g([0, 1, 3], [1, 2], 1, 0, 9)[1] == 3


def test_density():
    p = repbasis.density_profile({"kind": "perfect-squares"})
    assert [row["count"] for row in p["profile"]] == [4, 11, 32]
    assert p["non_increasing"]
