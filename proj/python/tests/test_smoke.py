from fractions import Fraction

import pytest

import pyweingarten as wg


def test_integrate_exact():
    assert wg.integrate("O", "u[1,1]^4", 2) == Fraction(3, 8)
    assert wg.integrate("U", "u[1,1] ub[1,1]", 3) == Fraction(1, 3)
    assert wg.integrate("S", "u[1,1] u[2,2]", 3) == Fraction(1, 6)
    assert wg.rect([[2, 0], [0, 2]], 3) == Fraction(2, 15)


def test_partitions_canonical_order():
    assert wg.partitions("P2", k=4) == ["{1,2|3,4}", "{1,3|2,4}", "{1,4|2,3}"]
    assert len(wg.partitions("NC2", k=6)) == 5
    assert len(wg.partitions("U", word="oxox")) == 2


def test_gram_and_weingarten():
    g = wg.gram("P", 2, 3)
    assert g["index"] == ["{1|2}", "{1,2}"]
    assert g["entries"] == [[Fraction(9), Fraction(3)], [Fraction(3), Fraction(3)]]
    s = wg.gram_symbolic("P", 2)
    assert s["entries"] == [["N^2", "N"], ["N", "N"]]
    w = wg.weingarten("P", 2, 3)
    assert not w["reduced"]
    assert w["entries"] == [
        [Fraction(1, 6), Fraction(-1, 6)],
        [Fraction(-1, 6), Fraction(1, 2)],
    ]
    low = wg.weingarten("P", 3, 2)
    assert low["reduced"]
    assert len(low["basis"]) == 4


def test_char_moments_and_law():
    assert wg.char_moment("P", 2, N=3, s=3) == 2
    assert wg.char_moment("O", 4, t="1/2") == Fraction(3, 4)
    law = wg.sn_law(3, 3)
    assert law == [(0, Fraction(1, 3)), (1, Fraction(1, 2)), (3, Fraction(1, 6))]
    assert wg.law_moment("poisson", 3, t="1") == 5  # Bell number


def test_mc_seeded_determinism():
    a = wg.mc("O", 3, "u[1,1]^2", samples=2000, seed=7)
    b = wg.mc("O", 3, "u[1,1]^2", samples=2000, seed=7)
    assert a == b
    assert a["rng"] == wg.rng_name
    assert abs(a["estimate"] - 1 / 3) < 0.05
    assert wg.default_seed == 20240915


def test_errors_raise():
    with pytest.raises(Exception):
        wg.integrate("O", "u[1", 2)
    with pytest.raises(Exception):
        wg.partitions("Q7", k=2)
    with pytest.raises(Exception):
        wg.integrate("O", "u[3,3]^2", 2)
