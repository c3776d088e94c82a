import random
from fractions import Fraction as F

import pytest

from pecaff.errors import InputError
from pecaff.rootdata import (
    AffineType,
    AffineRoot,
    FiniteRoot,
    Shape,
    Triple,
    kappa,
    roots_enumerate,
)
from pecaff.weyl import (
    WeylElement,
    act,
    compose,
    enumerate_elements,
    identity,
    inverse,
    reflect_triple,
    reflection,
    translation,
)

C1 = AffineType.from_tag("C1")
A1 = AffineType.from_tag("A1")
B2 = AffineType.from_tag("B2")
D1 = AffineType.from_tag("D1")

ALL_AFFINE = [AffineType.from_tag(t) for t in ("A1", "B1", "C1", "D1", "B2", "C2", "BC2")]


def rand_triple(rng, n):
    r = lambda: F(rng.randint(-6, 6), rng.randint(1, 4))
    return Triple(r(), tuple(r() for _ in range(n)), r())


def test_identity_acts_trivially():
    rng = random.Random(0)
    v = rand_triple(rng, 3)
    assert act(identity(C1, 3), v) == v


def test_translation_action():
    # tau_{e_1} on (0, 0, 1) = (1/2, e_1, 1)
    g = translation(C1, (1,))
    assert act(g, Triple(F(0), (F(0),), F(1))) == Triple(F(1, 2), (F(1),), F(1))


def test_sign_flip_action():
    g = WeylElement(C1, (0, 0), (-1, 1), (0, 1))
    v = Triple(F(0), (F(2), F(1)), F(0))
    assert act(g, v) == Triple(F(0), (F(-2), F(1)), F(0))


def test_lattice_validation():
    with pytest.raises(InputError):
        WeylElement(A1, (1, 0), (1, 1), (0, 1))
    with pytest.raises(InputError):
        WeylElement(B2, (1,), (1,), (0,))
    with pytest.raises(InputError):
        # D1 admits only an even number of flips
        WeylElement(D1, (0, 0), (-1, 1), (0, 1))
    with pytest.raises(InputError):
        # A1 has no sign action at all
        WeylElement(A1, (0, 0), (-1, -1), (0, 1))


def test_compose_translations():
    g = compose(translation(C1, (1, 2)), translation(C1, (-1, -2)))
    assert g == identity(C1, 2)


def test_compose_flip_translation():
    # sigma_1 tau_{e_1} = tau_{-e_1} sigma_1
    s1 = WeylElement(C1, (0,), (-1,), (0,))
    assert compose(s1, translation(C1, (1,))) == WeylElement(C1, (-1,), (-1,), (0,))


def test_compose_swap_translation():
    # (1 2) tau_{e_1} = tau_{e_2} (1 2)
    sw = WeylElement(C1, (0, 0), (1, 1), (1, 0))
    got = compose(sw, translation(C1, (1, 0)))
    assert got == WeylElement(C1, (0, 1), (1, 1), (1, 0))


def test_inverse():
    rng = random.Random(3)
    for X in ALL_AFFINE:
        for g in enumerate_elements(X, 2, 1):
            assert compose(g, inverse(g)) == identity(X, 2)
            assert compose(inverse(g), g) == identity(X, 2)


def test_action_homomorphism():
    rng = random.Random(5)
    count = 0
    for X in ALL_AFFINE:
        els = list(enumerate_elements(X, 2, 1))
        for _ in range(75):
            g1, g2 = rng.choice(els), rng.choice(els)
            v = rand_triple(rng, 2)
            assert act(compose(g1, g2), v) == act(g1, act(g2, v))
            count += 1
    assert count >= 500


def test_kappa_invariance():
    rng = random.Random(7)
    for X in ALL_AFFINE:
        n = 2 if X is not B2 else 2
        for g in enumerate_elements(X, n, 2):
            u = rand_triple(rng, n)
            v = rand_triple(rng, n)
            assert kappa(act(g, u), act(g, v)) == kappa(u, v)


def test_reflection_finite_swap():
    g = reflection(AffineRoot(FiniteRoot(Shape.DIFF, 0, 1, 1), 0), C1, 2)
    assert g == WeylElement(C1, (0, 0), (1, 1), (1, 0))


def test_reflection_finite_flip():
    g = reflection(AffineRoot(FiniteRoot(Shape.LONG, 0, None, 1), 0), C1, 1)
    assert g == WeylElement(C1, (0,), (-1,), (0,))


def test_reflection_matches_formula():
    rng = random.Random(9)
    for X in ALL_AFFINE:
        for gamma in roots_enumerate(X, range(2), range(-2, 3)):
            g = reflection(gamma, X, 2)
            for _ in range(3):
                v = rand_triple(rng, 2)
                assert act(g, v) == reflect_triple(gamma, v, 2)


def test_reflection_is_involution():
    for X in ALL_AFFINE:
        for gamma in roots_enumerate(X, range(2), range(-2, 3)):
            g = reflection(gamma, X, 2)
            assert compose(g, g) == identity(X, 2)


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_elements(C1, 1, 1)) == 6
    assert sum(1 for _ in enumerate_elements(A1, 2, 0)) == 2
    # the all-even lattice leaves only x = 0 within radius 1
    assert sum(1 for _ in enumerate_elements(B2, 1, 1)) == 2
    assert sum(1 for _ in enumerate_elements(D1, 2, 1)) == 20


def test_enumeration_no_duplicates():
    for X in ALL_AFFINE:
        els = list(enumerate_elements(X, 2, 1))
        assert len(els) == len(set(els))
