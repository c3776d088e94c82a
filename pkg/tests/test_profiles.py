import random
from fractions import Fraction as F

import pytest

from pecaff.energy import infimum
from pecaff.errors import InputError
from pecaff.profiles import (
    certify_unbounded,
    diagnostics_A,
    diagnostics_C,
    integrality_check,
    pec_decide,
    pec_finite_type,
    profile,
    profile_minimal,
    truncate,
    witness_lower_bound,
    zdiscrete,
)
from pecaff.rootdata import AffineType, FiniteType

C1 = AffineType.from_tag("C1")
A1 = AffineType.from_tag("A1")
B2 = AffineType.from_tag("B2")

ALL_AFFINE = [AffineType.from_tag(t) for t in ("A1", "B1", "C1", "D1", "B2", "C2", "BC2")]
C_FAMILY = [AffineType.from_tag(t) for t in ("B1", "D1", "C2", "BC2", "C1")]


def rand_profile(rng, lc=1, cd=1):
    r = lambda: F(rng.randint(-4, 4), rng.randint(1, 4))
    nc = rng.randint(1, 2)
    ne = rng.randint(0, 2)
    return profile(
        [(r(), r()) for _ in range(nc)],
        [(r(), r()) for _ in range(ne)],
        lc=lc, cd=cd,
    )


def test_zdiscrete():
    p = profile([(F(1, 3), 0)])
    assert zdiscrete(p)
    with pytest.raises(InputError):
        zdiscrete(profile([(0, 0)], lc=0))


def test_integrality():
    # long roots of C1 occur at every level, so lc must be even there
    assert integrality_check(profile([(1, 0), (-2, 0)], lc=2), C1)
    assert not integrality_check(profile([(1, 0), (-2, 0)]), C1)
    assert not integrality_check(profile([(F(1, 3), 0)], lc=2), C1)
    # half-integer lambda values work out for A1 (only differences appear)
    assert integrality_check(profile([(F(1, 2), 0), (F(3, 2), 0)]), A1)


def test_diagnostics_A():
    assert diagnostics_A(profile([(0, 0)]))["pass"]
    bad = diagnostics_A(profile([(0, F(-3, 4)), (0, F(3, 4))]))
    assert not bad["pass"] and bad["gap"] == F(3, 2)
    edge = diagnostics_A(profile([(0, F(-1, 2)), (0, F(1, 2))]))
    assert edge["pass"] and edge["boundary"]


def test_diagnostics_C():
    assert not diagnostics_C(profile([(F(1, 4), F(3, 4))]))["pass"]
    assert diagnostics_C(profile([(F(-1, 2), 1)]))["pass"]
    rep = diagnostics_C(profile([(F(1, 4), F(1, 4))]))
    assert {"item": 4, "cohort": 0} in rep["failures"]


def test_pec_yes_single_cohort():
    v = pec_decide(profile([(F(1, 4), F(-1, 4))]), C1)
    assert v.pec
    assert v.reason["case"] == "main"


def test_pec_no_sign_cohort():
    v = pec_decide(profile([(F(1, 4), F(1, 4))]), C1)
    assert not v.pec
    assert v.reason == {"condition": "C3-cohort", "cohort": 0}


def test_pec_no_mixed_scalars():
    v = pec_decide(profile([(0, 0)], cd=-1), C1)
    assert not v.pec
    assert v.reason == {"condition": "lc*cd<0"}


def test_pec_degenerate_lc_zero():
    # without the central scalar only A-type tolerates nonconstant lambda
    p = profile([(0, 0), (1, 0)], lc=0)
    assert not pec_decide(p, C1).pec
    assert pec_decide(profile([(2, 0), (2, 5)], lc=0), A1).pec
    assert not pec_decide(profile([(2, 0), (3, 0)], lc=0), A1).pec
    assert pec_decide(profile([(0, 7), (0, -1)], lc=0), C1).pec


def test_pec_degenerate_cd_zero():
    assert pec_decide(profile([(0, 3), (5, 3)], cd=0), A1).pec
    assert not pec_decide(profile([(0, 3), (5, 0)], cd=0), A1).pec
    assert not pec_decide(profile([(1, 1)], cd=0), C1).pec


def test_pec_finite_case():
    assert pec_finite_type([(0, 5), (1, 5)], [], FiniteType.A).pec
    assert pec_finite_type([(0, 1), (1, 0)], [], FiniteType.A).pec
    v = pec_finite_type([(1, 1)], [], FiniteType.B)
    assert not v.pec


def test_exceptions_impose_no_constraint():
    # a wild exception on an otherwise fine profile is absorbable
    p = profile([(F(1, 4), F(-1, 4))], [(F(1, 4), F(100))])
    assert pec_decide(p, C1).pec
    assert not profile_minimal(p, C1).member


def test_type_collapse_on_profiles():
    rng = random.Random(61)
    for _ in range(80):
        p = rand_profile(rng)
        verdicts = {X.tag: pec_decide(p, X).pec for X in C_FAMILY}
        assert len(set(verdicts.values())) == 1, verdicts


def test_b2_matches_halved_c1():
    rng = random.Random(67)
    for _ in range(60):
        p = rand_profile(rng)
        halved = profile(
            [(a / 2, b / 2) for a, b in p.cohorts],
            [(a / 2, b / 2) for a, b in p.exceptions],
        )
        assert pec_decide(p, B2).pec == pec_decide(halved, C1).pec


def test_truncate_layout():
    p = profile([(1, 2), (3, 4)], [(5, 6)])
    lam, chi = truncate(p, 2)
    assert lam.l0 == (1, 1, 3, 3, 5)
    assert chi.c0 == (2, 2, 4, 4, 6)


def test_witness_bound_holds_on_truncations():
    rng = random.Random(71)
    done = 0
    while done < 25:
        p = rand_profile(rng)
        X = rng.choice(ALL_AFFINE)
        if not pec_decide(p, X).pec:
            continue
        bound = witness_lower_bound(p, X)
        assert bound <= 0
        kmax = 3 if len(p.cohorts) == 1 else 2
        for k in range(1, kmax + 1):
            lam, chi = truncate(p, k)
            assert infimum(lam, chi, X)[0] >= bound
        done += 1


def test_certificates_decrease():
    rng = random.Random(73)
    done = 0
    while done < 25:
        scal = rng.choice([(1, 1), (1, 1), (0, 1), (1, 0), (0, 0), (1, -1)])
        p = rand_profile(rng, lc=scal[0], cd=scal[1])
        X = rng.choice(ALL_AFFINE)
        if pec_decide(p, X).pec:
            continue
        cert = certify_unbounded(p, X, kmax=5)
        energies = [e for _, _, e in cert]
        assert all(b <= a for a, b in zip(energies, energies[1:]))
        assert energies[4] < energies[2] < energies[0] <= 0
        done += 1


def test_certificates_match_exact_infima():
    rng = random.Random(79)
    done = 0
    while done < 10:
        p = profile(
            [(F(rng.randint(-4, 4), rng.randint(1, 4)),
              F(rng.randint(-4, 4), rng.randint(1, 4)))],
            [],
        )
        X = rng.choice(ALL_AFFINE)
        if pec_decide(p, X).pec:
            continue
        for k, g, e in certify_unbounded(p, X, kmax=3):
            lam, chi = truncate(p, k)
            assert infimum(lam, chi, X)[0] <= e
        done += 1


def test_certify_rejects_positive_profiles():
    with pytest.raises(InputError):
        certify_unbounded(profile([(F(1, 4), F(-1, 4))]), C1)
