import random
from fractions import Fraction as F

import pytest

from pecaff.errors import InputError
from pecaff.profiles import profile
from pecaff.rootdata import AffineType, AffineRoot, FiniteRoot, Shape
from pecaff.serialize import (
    char_from_json,
    char_to_json,
    jsonable,
    parse_rat,
    profile_from_json,
    profile_to_json,
    rat_to_str,
    root_from_json,
    root_to_json,
    weight_from_json,
    weight_to_json,
    weyl_from_json,
    weyl_to_json,
)
from pecaff.energy import char, weight
from pecaff.weyl import enumerate_elements

C1 = AffineType.from_tag("C1")


def test_rational_grammar():
    assert rat_to_str(F(3)) == "3"
    assert rat_to_str(F(-7, 2)) == "-7/2"
    assert parse_rat("3") == 3
    assert parse_rat("-7/2") == F(-7, 2)
    assert parse_rat(5) == 5
    for bad in ("x", "1/0", None, True, 1.5):
        with pytest.raises(InputError):
            parse_rat(bad)


def test_rational_roundtrip():
    rng = random.Random(103)
    for _ in range(200):
        x = F(rng.randint(-999, 999), rng.randint(1, 999))
        assert parse_rat(rat_to_str(x)) == x


def test_jsonable_nesting():
    out = jsonable({"a": F(1, 2), "b": [F(3), {"c": (F(-1, 4),)}]})
    assert out == {"a": "1/2", "b": ["3", {"c": ["-1/4"]}]}


def test_root_roundtrip():
    roots = [
        AffineRoot(FiniteRoot(Shape.DIFF, 0, 2, 1), -3),
        AffineRoot(FiniteRoot(Shape.SUM, 1, 2, -1), 4),
        AffineRoot(FiniteRoot(Shape.SHORT, 5, None, 1), 0),
        AffineRoot(FiniteRoot(Shape.LONG, 0, None, -1), 7),
    ]
    for g in roots:
        assert root_from_json(root_to_json(g)) == g
    with pytest.raises(InputError):
        root_from_json({"shape": "ei"})


def test_weyl_roundtrip():
    for X in (C1, AffineType.from_tag("A1"), AffineType.from_tag("D1")):
        for g in enumerate_elements(X, 3, 1):
            assert weyl_from_json(weyl_to_json(g)) == g


def test_weight_char_roundtrip():
    lam = weight(F(1, 2), (F(-3, 4), F(2)), 0)
    chi = char(0, (F(5, 6),), F(7))
    assert weight_from_json(weight_to_json(lam)) == lam
    assert char_from_json(char_to_json(chi)) == chi
    with pytest.raises(InputError):
        weight_from_json({"lc": "1"})


def test_profile_roundtrip():
    p = profile([(F(1, 4), F(-1, 4)), (0, 1)], [(F(2), F(-3, 2))],
                lc=F(1, 2), cd=2)
    assert profile_from_json(profile_to_json(p)) == p


def test_profile_defaults():
    p = profile_from_json({"cohorts": [{"lambda": "0", "d": "0"}]})
    assert p.lc == 1 and p.cd == 1 and p.cc == 0 and p.ld == 0
