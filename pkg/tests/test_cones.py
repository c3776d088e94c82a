import random
from fractions import Fraction as F

import pytest

from pecaff.cones import (
    decompose,
    in_cmin_affine,
    in_cmin_finite,
    is_minimal_generic,
)
from pecaff.energy import char, frac, infimum, weight
from pecaff.errors import InputError
from pecaff.rootdata import AffineType, FiniteType

C1 = AffineType.from_tag("C1")
A1 = AffineType.from_tag("A1")
B2 = AffineType.from_tag("B2")

ALL_AFFINE = [AffineType.from_tag(t) for t in ("A1", "B1", "C1", "D1", "B2", "C2", "BC2")]


def rand_pair(rng, n):
    r = lambda: F(rng.randint(-8, 8), rng.randint(1, 6))
    return (
        weight(1, [r() for _ in range(n)], 0),
        char(0, [r() for _ in range(n)], 1),
    )


def test_finite_a_nonstrict():
    assert in_cmin_finite((0, 1), (5, 5), FiniteType.A).member


def test_finite_b_sign_condition():
    v = in_cmin_finite((0, 1), (0, 1), FiniteType.B)
    assert not v.member
    assert any("B-sign" in c for c in v.violated_conditions)


def test_finite_b_member():
    assert in_cmin_finite((1, -1), (-1, 1), FiniteType.B).member


def test_finite_collapse_c_bc_to_b():
    rng = random.Random(29)
    for _ in range(100):
        l0 = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)]
        c0 = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)]
        b = in_cmin_finite(l0, c0, FiniteType.B).member
        assert in_cmin_finite(l0, c0, FiniteType.C).member == b
        assert in_cmin_finite(l0, c0, FiniteType.BC).member == b


def test_frac_abs_facts():
    rng = random.Random(31)
    for _ in range(1000):
        x = F(rng.randint(-60, 60), rng.randint(1, 12))
        fx = frac(x)
        assert F(-1, 2) <= fx < F(1, 2)
        assert abs(fx) <= abs(x)
        if abs(x) >= 1:
            assert abs(x) - abs(fx) >= 1
        if abs(x) <= F(1, 2) and x != F(1, 2):
            assert fx == x


def test_affine_c1_interior_member():
    v = in_cmin_affine(weight(1, (F(1, 4),), 0), char(0, (F(-1, 4),), 1), C1)
    assert v.member


def test_affine_c1_half_boundary():
    v = in_cmin_affine(weight(1, (F(-1, 2),), 0), char(0, (F(1),), 1), C1)
    assert v.member


def test_affine_c1_sign_violation():
    v = in_cmin_affine(weight(1, (F(1, 4),), 0), char(0, (F(1, 4),), 1), C1)
    assert not v.member
    assert any(c.startswith("C3") for c in v.violated_conditions)


def test_affine_a1_shift_absorbed():
    lam = weight(1, (F(-1, 4), F(1, 4)), 0)
    chi = char(0, (F(52, 5), F(48, 5)), 1)
    assert in_cmin_affine(lam, chi, A1).member


def test_affine_degenerate_rejected():
    with pytest.raises(InputError):
        in_cmin_affine(weight(0, (0,), 0), char(0, (0,), 1), C1)


def test_affine_wrong_sign_not_member():
    v = in_cmin_affine(weight(1, (0,), 0), char(0, (0,), -1), C1)
    assert not v.member


def test_minimal_zero_instance():
    for X in ALL_AFFINE:
        assert is_minimal_generic(weight(1, (0, 0), 0), char(0, (0, 0), 1), X)


def test_minimal_a1_pair_conditions():
    # order violation: l_1 > l_2 but d_1 > d_2
    lam = weight(1, (F(1, 4), F(-1, 4)), 0)
    assert not is_minimal_generic(lam, char(0, (F(1, 2), F(0)), 1), A1)
    assert is_minimal_generic(lam, char(0, (F(0), F(1, 2)), 1), A1)
    # band violation: d_1 - d_2 > 1 with equal lambdas
    lam = weight(1, (0, 0), 0)
    assert not is_minimal_generic(lam, char(0, (F(3, 4), F(-3, 4)), 1), A1)
    assert is_minimal_generic(lam, char(0, (F(1, 2), F(-1, 2)), 1), A1)


def test_minimality_matches_cone_and_infimum():
    rng = random.Random(37)
    for X in ALL_AFFINE:
        for _ in range(60):
            lam, chi = rand_pair(rng, rng.randint(1, 3))
            cone = in_cmin_affine(lam, chi, X).member
            minimal = is_minimal_generic(lam, chi, X)
            inf0 = infimum(lam, chi, X)[0] == 0
            assert cone == minimal == inf0


def test_decompose_member_untouched():
    lam = weight(1, (F(1, 4),), 0)
    chi = char(0, (F(-1, 4),), 1)
    cmin, csum = decompose(lam, chi, C1)
    assert cmin == chi
    assert csum.c0 == (F(0),)


def test_decompose_c1_sign_correction():
    lam = weight(1, (F(1, 4),), 0)
    chi = char(0, (F(3, 4),), 1)
    cmin, csum = decompose(lam, chi, C1)
    assert cmin.c0 == (F(-1, 4),)
    assert csum.c0 == (F(1),)
    assert in_cmin_affine(lam, cmin, C1).member


def test_decompose_a1_constant_vector():
    lam = weight(1, (0, 0), 0)
    chi = char(0, (5, 5), 1)
    cmin, csum = decompose(lam, chi, A1)
    assert cmin == chi
    assert csum.c0 == (F(0), F(0))


def test_decompose_roundtrip_random():
    rng = random.Random(41)
    for X in ALL_AFFINE:
        for _ in range(60):
            lam, chi = rand_pair(rng, rng.randint(1, 3))
            cmin, csum = decompose(lam, chi, X)
            assert csum.cc == csum.cd == 0
            assert tuple(a + b for a, b in zip(cmin.c0, csum.c0)) == chi.c0
            assert cmin.cc == chi.cc and cmin.cd == chi.cd
            assert in_cmin_affine(lam, cmin, X).member


def test_b2_quarter_identity():
    rng = random.Random(43)
    for _ in range(40):
        n = rng.randint(1, 3)
        lam, chi = rand_pair(rng, n)
        whole = infimum(lam, chi, B2)[0]
        half = infimum(
            weight(1, [v / 2 for v in lam.l0], 0),
            char(0, [v / 2 for v in chi.c0], 1),
            C1,
        )[0]
        assert whole == 4 * half
