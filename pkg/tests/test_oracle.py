import random
from fractions import Fraction as F

import pytest

from pecaff.cones import is_minimal_generic
from pecaff.energy import char, energy, infimum, weight
from pecaff.oracle import (
    OracleConfig,
    brute_infimum,
    brute_minimality,
    minimality_radius,
)
from pecaff.rootdata import AffineType

C1 = AffineType.from_tag("C1")

ALL_AFFINE = [AffineType.from_tag(t) for t in ("A1", "B1", "C1", "D1", "B2", "C2", "BC2")]


def rand_pair(rng, n):
    r = lambda: F(rng.randint(-8, 8), rng.randint(1, 6))
    return (
        weight(1, [r() for _ in range(n)], 0),
        char(0, [r() for _ in range(n)], 1),
    )


def test_zero_instance():
    for X in ALL_AFFINE:
        value, witness, _ = brute_infimum(
            weight(1, (0, 0), 0), char(0, (0, 0), 1), X
        )
        assert value == 0


def test_box_equals_enumeration():
    rng = random.Random(47)
    cfg = OracleConfig(lattice_radius=3)
    for X in ALL_AFFINE:
        for _ in range(5):
            lam, chi = rand_pair(rng, 2)
            a, _, _ = brute_infimum(lam, chi, X, cfg, method="box",
                                    radius_cap_extra=40)
            b, _, _ = brute_infimum(lam, chi, X, cfg, method="enumerate",
                                    radius_cap_extra=40)
            assert a == b


def test_agrees_with_closed_form():
    rng = random.Random(53)
    for X in ALL_AFFINE:
        for _ in range(25):
            lam, chi = rand_pair(rng, rng.randint(1, 3))
            value, witness, radius = brute_infimum(lam, chi, X,
                                                   radius_cap_extra=40)
            assert value == infimum(lam, chi, X)[0]
            assert energy(lam, chi, witness) == value
            assert max(abs(v) for v in witness.x) < radius


def test_boundary_minimality():
    lam = weight(1, (F(-1, 2),), 0)
    chi = char(0, (F(1),), 1)
    assert brute_minimality(lam, chi, C1)


def test_sign_violation_not_minimal():
    lam = weight(1, (F(1, 4),), 0)
    chi = char(0, (F(3, 4),), 1)
    assert not brute_minimality(lam, chi, C1)


def test_brute_minimality_matches_generic():
    rng = random.Random(59)
    for X in ALL_AFFINE:
        for _ in range(40):
            lam, chi = rand_pair(rng, rng.randint(1, 3))
            assert brute_minimality(lam, chi, X) == is_minimal_generic(lam, chi, X)


def test_minimality_radius_covers_data():
    lam = weight(1, (F(5), F(-3)), 0)
    assert minimality_radius(lam, 2) >= 10
