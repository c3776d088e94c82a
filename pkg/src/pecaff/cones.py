"""Minimal-energy cone membership and the chi = chi_min + chi_sum splitting.

All cone tests for the affine families are phrased for normalized data
(lam_j in [-1/2, 1/2)); the general wrapper divides out lc and cd and
shifts by the nearest-integer vector of l0/lc.  Pairwise conditions are
factored out into helpers that take an explicit list of (index, index)
pairs so the profile module can reuse them with cohort pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .energy import CharTriple, WeightTriple, ZERO, frac, nearest_int
from .errors import InputError, InternalInconsistencyError
from .rootdata import AffineType, FiniteType, Rat, Shape, admissible_levels

Item = tuple[Rat, Rat]  # (lambda value, d value)
HALF = Fraction(1, 2)
ONE = Fraction(1)


@dataclass(frozen=True)
class ConeVerdict:
    member: bool
    violated_conditions: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.member


def _verdict(violations: list[str]) -> ConeVerdict:
    return ConeVerdict(not violations, tuple(violations))


def all_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n) if i != j]


# ---------------------------------------------------------------------------
# locally finite cones (Definition 2.7 plus the D-type generic criterion)

def violations_finite_A(items: Sequence[Item], pairs) -> list[str]:
    out = []
    for i, j in pairs:
        li, di = items[i]
        lj, dj = items[j]
        if li < lj and di < dj:
            out.append(f"A-order at ({i},{j})")
    return out


def violations_finite_B(items: Sequence[Item], pairs) -> list[str]:
    out = []
    for j, (lj, dj) in enumerate(items):
        if lj * dj > 0:
            out.append(f"B-sign at j={j}")
    for i, j in pairs:
        li, di = items[i]
        lj, dj = items[j]
        if abs(li) < abs(lj) and abs(di) > abs(dj):
            out.append(f"B-order at ({i},{j})")
    return out


def violations_finite_D(items: Sequence[Item], pairs) -> list[str]:
    """Level-0 specialization of the generic minimality criterion to D_J:
    for alpha in {e_i - e_j, +-(e_i + e_j)}, l0(alpha) > 0 forces
    alpha(chi0) <= 0."""
    out = []
    for i, j in pairs:
        li, di = items[i]
        lj, dj = items[j]
        if li - lj > 0 and di - dj > 0:
            out.append(f"D-diff at ({i},{j})")
        if i < j:
            if li + lj > 0 and di + dj > 0:
                out.append(f"D-sum at ({i},{j})")
            if -(li + lj) > 0 and -(di + dj) > 0:
                out.append(f"D-sum- at ({i},{j})")
    return out


def in_cmin_finite(
    l0: Sequence[Rat], c0: Sequence[Rat], X: FiniteType
) -> ConeVerdict:
    items = list(zip(l0, c0))
    pairs = all_pairs(len(items))
    if X is FiniteType.A:
        return _verdict(violations_finite_A(items, pairs))
    if X is FiniteType.D:
        return _verdict(violations_finite_D(items, pairs))
    return _verdict(violations_finite_B(items, pairs))


# ---------------------------------------------------------------------------
# normalized affine cones

def violations_A1(items: Sequence[Item], pairs) -> list[str]:
    out = []
    for i, j in pairs:
        li, di = items[i]
        lj, dj = items[j]
        if li > lj and di > dj:
            out.append(f"A1-order at ({i},{j})")
    return out


def a1_band_feasible(dvals: Sequence[Rat]) -> Rat | None:
    """A shift c with |d_j - c| <= 1/2 for all j, if one exists.

    Candidates are the d_j +- 1/2 endpoints and midpoints of the order
    statistics; for rational data the midpoint of the range suffices."""
    if not dvals:
        return ZERO
    lo, hi = min(dvals), max(dvals)
    if hi - lo > 1:
        return None
    return (lo + hi) / 2


def violations_A1_band(items: Sequence[Item]) -> list[str]:
    dvals = [d for _, d in items]
    if a1_band_feasible(dvals) is None:
        i = dvals.index(max(dvals))
        j = dvals.index(min(dvals))
        return [f"A1-band gap>1 at ({i},{j})"]
    return []


def violations_C1(items: Sequence[Item], pairs) -> list[str]:
    out = []
    for j, (lj, dj) in enumerate(items):
        if abs(lj) < HALF and abs(dj) > HALF:
            out.append(f"C1 at j={j}")
        if abs(lj) == HALF and abs(dj) > 1:
            out.append(f"C2 at j={j}")
        if lj * dj > 0:
            out.append(f"C3 at j={j}")
    for i, j in pairs:
        li, di = items[i]
        lj, dj = items[j]
        if abs(li) < abs(lj) and abs(frac(di)) > abs(frac(dj)):
            out.append(f"C4 at ({i},{j})")
    return out


def violations_D123(items: Sequence[Item], pairs) -> list[str]:
    out = []
    for i, j in pairs:
        if i > j:
            continue
        li, di = items[i]
        lj, dj = items[j]
        if abs(di - dj) > 1:
            out.append(f"D1 at ({i},{j})")
        if not -1 <= di + dj <= 2:
            out.append(f"D2 at ({i},{j})")
        if di + dj > 1 and not (li == -HALF and lj == -HALF):
            out.append(f"D3 at ({i},{j})")
    return out


def violations_D1_type(items: Sequence[Item], pairs) -> list[str]:
    return violations_finite_D(items, pairs) + violations_D123(items, pairs)


def violations_B1_type(items: Sequence[Item], pairs) -> list[str]:
    """The B1 (= C2) affine cone: the sign and window conditions bind
    through the single-index roots, the comparison and band conditions
    through the two-index ones.  (When every lam_j is -1/2 this reduces
    to the box 0 <= d_j <= 1 with the pair conditions vacuous or
    exempt.)"""
    out = []
    for j, (lj, dj) in enumerate(items):
        if lj * dj > 0:
            out.append(f"B-sign at j={j}")
        if abs(dj) > 1:
            out.append(f"B-window at j={j}")
    for i, j in pairs:
        li, di = items[i]
        lj, dj = items[j]
        if abs(li) < abs(lj) and abs(di) > abs(dj):
            out.append(f"B-order at ({i},{j})")
    return out + violations_D123(items, pairs)


def _normalized_items(
    lam: WeightTriple, chi: CharTriple
) -> tuple[list[Item], list[int]]:
    """Shifted normalized pairs (frac(l0/lc), c0/cd + [l0/lc]) and the
    integer shift vector."""
    n = max(len(lam.l0), len(chi.c0))
    l0 = list(lam.l0) + [ZERO] * (n - len(lam.l0))
    c0 = list(chi.c0) + [ZERO] * (n - len(chi.c0))
    mu = [v / lam.lc for v in l0]
    shift = [nearest_int(v) for v in mu]
    items = [
        (mu[j] - shift[j], c0[j] / chi.cd + shift[j]) for j in range(n)
    ]
    return items, shift


def violations_affine_normalized(
    items: Sequence[Item], pairs, X: AffineType
) -> list[str]:
    if X is AffineType.A1:
        return violations_A1(items, pairs) + violations_A1_band(items)
    if X in (AffineType.C1, AffineType.BC2):
        return violations_C1(items, pairs)
    if X in (AffineType.B1, AffineType.C2):
        return violations_B1_type(items, pairs)
    if X is AffineType.D1:
        return violations_D1_type(items, pairs)
    raise InputError(f"no normalized cone test for {X}")


def in_cmin_affine(
    lam: WeightTriple, chi: CharTriple, X: AffineType
) -> ConeVerdict:
    """Membership in C_min(lam, X) for general scalars.

    Requires lc != 0; lc*cd <= 0 is an immediate non-member.  B2 routes
    through the halved C1 instance (the quarter identity), which keeps
    the integer shift unconstrained.
    """
    if lam.lc == 0:
        raise InputError("lc = 0 is degenerate; no cone membership defined")
    if lam.lc * chi.cd <= 0:
        return _verdict(["lc*cd<=0"])
    if X is AffineType.B2:
        lam = WeightTriple(lam.lc, tuple(v / 2 for v in lam.l0), lam.ld)
        chi = CharTriple(chi.cc, tuple(v / 2 for v in chi.c0), chi.cd)
        X = AffineType.C1
    items, _ = _normalized_items(lam, chi)
    return _verdict(violations_affine_normalized(items, all_pairs(len(items)), X))


# ---------------------------------------------------------------------------
# generic minimality criterion: lam(coroot) > 0  =>  gamma(chi) <= 0

def _largest_level_below(bound: Rat, levels: str) -> int:
    """max admissible n with n < bound, for levels in {all, even, odd}."""
    top = math.ceil(bound) - 1  # largest integer strictly below bound
    if levels == "all":
        return top
    want = 0 if levels == "even" else 1
    return top if top % 2 == want else top - 1


def is_minimal_generic(
    lam: WeightTriple, chi: CharTriple, X: AffineType
) -> bool:
    """The convex-hull criterion, evaluated per finite-root class.

    After normalizing, lam(coroot(alpha, n)) > 0 iff n < l0(alpha_sharp);
    since gamma(chi) = alpha(chi0) + n grows with n, only the largest
    admissible level below the threshold can bind.
    """
    from .energy import normalize

    lam_st, chi_st, _ = normalize(lam, chi)
    n = max(len(lam_st.l0), len(chi_st.c0))
    l0 = list(lam_st.l0) + [ZERO] * (n - len(lam_st.l0))
    d = list(chi_st.c0) + [ZERO] * (n - len(chi_st.c0))

    def binds(threshold: Rat, value: Rat, shape: Shape) -> bool:
        try:
            levels = admissible_levels(X, shape)
        except InputError:
            return False
        nstar = _largest_level_below(threshold, levels)
        return value + nstar > 0

    for i in range(n):
        for s in (1, -1):
            if binds(s * l0[i], s * d[i], Shape.SHORT):
                return False
            if binds(2 * s * l0[i], 2 * s * d[i], Shape.LONG):
                return False
        for j in range(n):
            if i == j:
                continue
            if binds(l0[i] - l0[j], d[i] - d[j], Shape.DIFF):
                return False
            if i < j:
                for s in (1, -1):
                    if binds(s * (l0[i] + l0[j]), s * (d[i] + d[j]), Shape.SUM):
                        return False
    return True


# ---------------------------------------------------------------------------
# decomposition chi = chi_min + chi_sum

def _a1_pattern(items: Sequence[Item]) -> list[Rat]:
    """Corrected d-pattern for the A1 cone: a monotone envelope followed
    by clamping into the band around the range midpoint."""
    n = len(items)
    t = []
    for i in range(n):
        li, di = items[i]
        below = [items[j][1] for j in range(n) if items[j][0] < li]
        t.append(min([di] + below))
    r = (min(t) + max(t)) / 2
    lo, hi = r - HALF, r + HALF
    return [min(max(v, lo), hi) for v in t]


def _sgn(x: Rat) -> int:
    return (x > 0) - (x < 0)


def _c1_pattern(items: Sequence[Item]) -> list[Rat]:
    """The proof pipeline for the C1 cone: restore (C4) by shrinking
    fractional magnitudes to a monotone envelope, then the three
    per-index corrections keyed to (C1), (C2) and (C3).  Each stage
    preserves |frac(d_j)|, so (C4) survives to the end."""
    n = len(items)
    lams = [l for l, _ in items]
    fmag = [abs(frac(d)) for _, d in items]
    d = []
    for i in range(n):
        above = [fmag[k] for k in range(n) if abs(lams[k]) > abs(lams[i])]
        target = min([fmag[i]] + above)
        di = items[i][1]
        d.append(nearest_int(di) + _sgn(frac(di)) * target)
    for i in range(n):
        li = lams[i]
        if abs(li) < HALF:
            if d[i] > HALF:
                d[i] = abs(frac(d[i]))
            elif d[i] < -HALF:
                d[i] = -abs(frac(d[i]))
        if abs(li) == HALF:
            if d[i] > 1:
                d[i] = 1 - abs(frac(d[i]))
            elif d[i] < -1:
                d[i] = abs(frac(d[i])) - 1
        if li * d[i] > 0:
            d[i] = -d[i]
    return d


def decompose(
    lam: WeightTriple, chi: CharTriple, X: AffineType
) -> tuple[CharTriple, CharTriple]:
    """Split chi = chi_min + chi_sum with chi_min in C_min(lam, X) and
    chi_sum supported in the 0-slot, through the canonical corrections
    of the PEC characterization proofs."""
    if lam.lc == 0 or lam.lc * chi.cd <= 0:
        raise InputError("decompose requires lc*cd > 0")
    if in_cmin_affine(lam, chi, X).member:
        # members need no correction (the correction pipeline works in the
        # smaller C1 cone and could otherwise touch B1/C2/D1 members)
        return chi, CharTriple(ZERO, tuple(ZERO for _ in chi.c0), ZERO)
    if X is AffineType.B2:
        half_min, half_sum = decompose(
            WeightTriple(lam.lc, tuple(v / 2 for v in lam.l0), lam.ld),
            CharTriple(chi.cc, tuple(v / 2 for v in chi.c0), chi.cd),
            AffineType.C1,
        )
        chi_min = CharTriple(chi.cc, tuple(2 * v for v in half_min.c0), chi.cd)
        chi_sum = CharTriple(ZERO, tuple(2 * v for v in half_sum.c0), ZERO)
    else:
        items, shift = _normalized_items(lam, chi)
        if X is AffineType.A1:
            pattern = _a1_pattern(items)
        else:
            pattern = _c1_pattern(items)
        n = len(items)
        c0 = list(chi.c0) + [ZERO] * (n - len(chi.c0))
        min0 = tuple((pattern[j] - shift[j]) * chi.cd for j in range(n))
        chi_min = CharTriple(chi.cc, min0, chi.cd)
        chi_sum = CharTriple(ZERO, tuple(c0[j] - min0[j] for j in range(n)), ZERO)
    verdict = in_cmin_affine(lam, chi_min, X)
    if not verdict.member:
        raise InternalInconsistencyError(
            f"decompose produced a non-member: {verdict.violated_conditions}"
        )
    return chi_min, chi_sum
