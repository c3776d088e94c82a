"""The energy functional lam(g.chi - chi) and its exact minimization.

A weight is the dual triple lam = (lc, l0, ld), a character the triple
chi = (cc, c0, cd).  For a group element stored as tau_x sigma w (module
weyl convention) the indexed closed form of the energy reads, with
winv = w^{-1},

    lc*cd/2 * sum n_j^2  +  lc * sum n_j sigma_j d_{winv(j)}
      + cd * sum n_j l_j  +  sum l_j (sigma_j d_{winv(j)} - d_j),

the substitution w -> w^{-1} being the adapter between the stored
composite and the literal indexed formula.  Every energy evaluation runs
both this form and the direct action and insists they agree.

Under the normalization lc = cd = 1, ld = cc = 0 the energy is the
separable quadratic 1/2 * sum ((n_j + a_j)^2 - (l_j + d_j)^2) with
a_j = l_j + sigma_j d_{winv(j)}, minimized in closed form over the
translation lattice, stratum by stratum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError, InternalInconsistencyError
from .rootdata import AffineType, DualTriple, Rat, Triple, Vec, dot, kappa, sharp
from .weyl import (
    Permutation,
    SignVector,
    WeylElement,
    act,
    inverse,
    perm_inverse,
    sign_vectors,
)

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class WeightTriple:
    lc: Rat
    l0: Vec
    ld: Rat

    def as_dual(self) -> DualTriple:
        return DualTriple(self.lc, self.l0, self.ld)


@dataclass(frozen=True)
class CharTriple:
    cc: Rat
    c0: Vec
    cd: Rat

    def as_triple(self) -> Triple:
        return Triple(self.cc, self.c0, self.cd)


def weight(lc, l0, ld) -> WeightTriple:
    return WeightTriple(Fraction(lc), tuple(Fraction(v) for v in l0), Fraction(ld))


def char(cc, c0, cd) -> CharTriple:
    return CharTriple(Fraction(cc), tuple(Fraction(v) for v in c0), Fraction(cd))


def nearest_int(x: Rat) -> int:
    """[x]: the closest integer, rounding half-integers up."""
    x = Fraction(x)
    return (x + HALF).__floor__()


def frac(x: Rat) -> Rat:
    """<x> = x - [x], the signed fractional part in [-1/2, 1/2)."""
    x = Fraction(x)
    return x - nearest_int(x)


def _closed_form(lam: WeightTriple, chi: CharTriple, g: WeylElement) -> Rat:
    n = g.size
    l0 = list(lam.l0) + [ZERO] * (n - len(lam.l0))
    d = list(chi.c0) + [ZERO] * (n - len(chi.c0))
    winv = perm_inverse(g.w)
    total = ZERO
    for j in range(n):
        nj = g.x[j]
        dw = g.sigma[j] * d[winv[j]]
        total += (
            lam.lc * chi.cd * Fraction(nj * nj) / 2
            + lam.lc * nj * dw
            + chi.cd * nj * l0[j]
            + l0[j] * (dw - d[j])
        )
    return total


def energy(lam: WeightTriple, chi: CharTriple, g: WeylElement) -> Rat:
    """lam(g.chi - chi), evaluated along two independent paths."""
    n = g.size
    chit = Triple(chi.cc, tuple(chi.c0) + (ZERO,) * (n - len(chi.c0)), chi.cd)
    diff = act(g, chit) - chit
    direct = lam.as_dual()(diff)
    indexed = _closed_form(lam, chi, g)
    if direct != indexed:
        raise InternalInconsistencyError(
            f"energy paths disagree: action={direct}, closed form={indexed}"
        )
    return direct


def pairing_adjoint(
    lam: WeightTriple, chi: CharTriple, g: WeylElement
) -> tuple[Rat, Rat]:
    """(chi(g.lam - lam), lam(g^{-1}.chi - chi)); the two are equal."""
    n = g.size
    lam_sharp = sharp(
        DualTriple(lam.lc, tuple(lam.l0) + (ZERO,) * (n - len(lam.l0)), lam.ld)
    )
    moved = act(g, lam_sharp) - lam_sharp
    chit = Triple(chi.cc, tuple(chi.c0) + (ZERO,) * (n - len(chi.c0)), chi.cd)
    via_kappa = kappa(chit, moved)
    via_energy = energy(lam, chi, inverse(g))
    return via_kappa, via_energy


def normalize(
    lam: WeightTriple, chi: CharTriple
) -> tuple[WeightTriple, CharTriple, Rat]:
    """Rescale to lam_st = (1, l0/lc, 0), chi_st = (0, c0/cd, 1).

    energy(lam, chi, g) = scale * energy(lam_st, chi_st, g) with
    scale = lc * cd, which must be positive.
    """
    scale = lam.lc * chi.cd
    if scale <= 0:
        raise InputError(f"lc*cd = {scale} is not positive; cannot normalize")
    lam_st = WeightTriple(ONE, tuple(v / lam.lc for v in lam.l0), ZERO)
    chi_st = CharTriple(ZERO, tuple(v / chi.cd for v in chi.c0), ONE)
    return lam_st, chi_st, scale


def translate(
    lam: WeightTriple,
    chi: CharTriple,
    m: Sequence[int],
    X: AffineType | None = None,
) -> tuple[WeightTriple, CharTriple]:
    """(lam_m, chi_m) = ((1, l0 - m, 0), (0, c0 + m, 1)) for integer m.

    Requires normalized input.  For X = B2 every m_j must be even.
    """
    if lam.lc != 1 or chi.cd != 1:
        raise InputError("translate requires the normalized form lc = cd = 1")
    if any(int(v) != v for v in m):
        raise InputError("translation vector must be integral")
    if X is AffineType.B2 and any(int(v) % 2 != 0 for v in m):
        raise InputError("type B2 admits only even translation parameters")
    n = max(len(lam.l0), len(chi.c0), len(m))
    l0 = list(lam.l0) + [ZERO] * (n - len(lam.l0))
    c0 = list(chi.c0) + [ZERO] * (n - len(chi.c0))
    mm = list(m) + [0] * (n - len(m))
    lam_m = WeightTriple(ONE, tuple(a - b for a, b in zip(l0, mm)), ZERO)
    chi_m = CharTriple(ZERO, tuple(a + b for a, b in zip(c0, mm)), ONE)
    return lam_m, chi_m


def _quad(n: Sequence[int], a: Sequence[Rat]) -> Rat:
    return sum(((nj + aj) ** 2 for nj, aj in zip(n, a)), ZERO)


def _repair_parity(n: list[int], a: Sequence[Rat]) -> list[int]:
    """Cheapest single +-1 adjustment to make sum(n) even."""
    if sum(n) % 2 == 0:
        return n
    best = None
    for j in range(len(n)):
        for delta in (-1, 1):
            cost = (n[j] + delta + a[j]) ** 2 - (n[j] + a[j]) ** 2
            key = (cost, j, delta)
            if best is None or key < best:
                best = key
    _, j, delta = best
    n[j] += delta
    return n


def _repair_sum_zero(n: list[int], a: Sequence[Rat]) -> list[int]:
    """Greedy cheapest unit moves until sum(n) = 0; exact for separable
    convex quadratics under a single linear constraint."""
    s = sum(n)
    while s != 0:
        delta = -1 if s > 0 else 1
        best = None
        for j in range(len(n)):
            cost = (n[j] + delta + a[j]) ** 2 - (n[j] + a[j]) ** 2
            key = (cost, j)
            if best is None or key < best:
                best = key
        n[best[1]] += delta
        s += delta
    return n


def minimize_lattice(a: Sequence[Rat], X: AffineType) -> tuple[list[int], Rat]:
    """argmin and value of sum (n_j + a_j)^2 over n in T(X)."""
    if X is AffineType.B2:
        n = [-2 * nearest_int(aj / 2) for aj in a]
    elif X is AffineType.D1 and len(a) == 1:
        n = [0]
    else:
        n = [-nearest_int(aj) for aj in a]
        if X is AffineType.A1:
            n = _repair_sum_zero(n, a)
        elif X in (AffineType.B1, AffineType.D1, AffineType.C2):
            n = _repair_parity(n, a)
    return n, _quad(n, a)


def stratum_profile(
    lam: WeightTriple, chi: CharTriple, sigma: SignVector, w: Permutation
) -> tuple[list[Rat], list[Rat]]:
    """The (a_j) and constant terms c_j = (l_j + d_j)^2 of Eq.-(5) form."""
    n = len(w)
    l0 = list(lam.l0) + [ZERO] * (n - len(lam.l0))
    d = list(chi.c0) + [ZERO] * (n - len(chi.c0))
    winv = perm_inverse(w)
    a = [l0[j] + sigma[j] * d[winv[j]] for j in range(n)]
    c = [(l0[j] + d[j]) ** 2 for j in range(n)]
    return a, c


def min_over_translations(
    lam: WeightTriple,
    chi: CharTriple,
    sigma: SignVector,
    w: Permutation,
    X: AffineType,
) -> tuple[Rat, tuple[int, ...]]:
    """Exact stratum minimum of the normalized energy over x in T(X)."""
    if lam.lc != 1 or chi.cd != 1:
        raise InputError("min_over_translations requires the normalized form")
    a, c = stratum_profile(lam, chi, sigma, w)
    n, quad = minimize_lattice(a, X)
    value = (quad - sum(c, ZERO)) / 2
    return value, tuple(n)


def _distinct_arrangements(
    d: Sequence[Rat], n: int
) -> list[tuple[tuple[Rat, ...], Permutation]]:
    """Distinct tuples (d_{winv(j)})_j with one representative stored w each.

    Strata whose permutations arrange equal d-values identically have
    identical energies, so only distinct arrangements are visited.
    """
    seen: dict[tuple, Permutation] = {}
    order: list[tuple[tuple[Rat, ...], Permutation]] = []
    for w in itertools.permutations(range(n)):
        winv = perm_inverse(w)
        arr = tuple(d[winv[j]] for j in range(n))
        if arr not in seen:
            seen[arr] = w
            order.append((arr, w))
    return order


def infimum(
    lam: WeightTriple, chi: CharTriple, X: AffineType
) -> tuple[Rat, WeylElement]:
    """Exact minimum of lam(g.chi - chi) over the full affine Weyl group
    on the finite index set, with a minimizing witness.

    Requires lc*cd > 0; on a finite index set the infimum is attained.
    """
    lam_st, chi_st, scale = normalize(lam, chi)
    n = max(len(lam_st.l0), len(chi_st.c0))
    if n == 0:
        raise InputError("empty index set")
    l0 = list(lam_st.l0) + [ZERO] * (n - len(lam_st.l0))
    d = list(chi_st.c0) + [ZERO] * (n - len(chi_st.c0))
    cconst = sum(((lj + dj) ** 2 for lj, dj in zip(l0, d)), ZERO)
    best: tuple[Rat, WeylElement] | None = None
    for arr, w in _distinct_arrangements(d, n):
        for sigma in sign_vectors(X, n):
            a = [l0[j] + sigma[j] * arr[j] for j in range(n)]
            nvec, quad = minimize_lattice(a, X)
            value = (quad - cconst) / 2
            if best is None or value < best[0]:
                best = (value, WeylElement(X, tuple(nvec), sigma, w))
    value, witness = best
    return scale * value, witness
