"""Brute-force ground truth for the closed-form modules.

Two styles of exhaustive minimization over the radius-R truncation of the
affine Weyl group:

* ``method="enumerate"`` walks every element from weyl.enumerate_elements
  and evaluates energy(); transparent but exponential in the radius.
* ``method="box"`` (default) walks every (sigma, w) stratum and minimizes
  the separable quadratic over the boxed lattice exactly, handling the
  sum-zero / parity / all-even constraints by enumeration over per-
  coordinate candidates combined through a small dynamic program.  This
  visits the same feasible set as full enumeration, just without
  materializing group elements.

Radius sufficiency is verified, not assumed: if any stratum's closed-form
minimizer touches the boundary of the box, the radius is enlarged by 2
and the computation retried, up to a cap.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .energy import (
    CharTriple,
    WeightTriple,
    ZERO,
    energy,
    minimize_lattice,
    normalize,
    stratum_profile,
)
from .errors import InputError
from .rootdata import AffineType, alpha_eval, coroot, roots_enumerate
from .weyl import WeylElement, enumerate_elements, sign_vectors


class OracleInconclusive(RuntimeError):
    """The brute-force box could not be certified to contain the optimum."""


@dataclass(frozen=True)
class OracleConfig:
    lattice_radius: int = 5
    max_support: int = 4
    stratum_limit: int | None = None

    def __post_init__(self):
        if self.lattice_radius < 0:
            raise InputError("lattice_radius must be nonnegative")


def _box_min_free(a, radius, even_only=False):
    total = ZERO
    argmin = []
    candidates = [n for n in range(-radius, radius + 1) if not even_only or n % 2 == 0]
    for aj in a:
        best = min(candidates, key=lambda n: ((n + aj) ** 2, n))
        argmin.append(best)
        total += (best + aj) ** 2
    return total, argmin


def _box_min_parity(a, radius):
    # dp over the parity of the running sum
    dp = {0: (ZERO, [])}
    for aj in a:
        ndp = {}
        for par, (cost, path) in dp.items():
            for n in range(-radius, radius + 1):
                npar = (par + n) % 2
                ncost = cost + (n + aj) ** 2
                if npar not in ndp or ncost < ndp[npar][0]:
                    ndp[npar] = (ncost, path + [n])
        dp = ndp
    return dp[0]


def _box_min_sum_zero(a, radius):
    dp = {0: (ZERO, [])}
    for aj in a:
        ndp = {}
        for s, (cost, path) in dp.items():
            for n in range(-radius, radius + 1):
                ns = s + n
                ncost = cost + (n + aj) ** 2
                if ns not in ndp or ncost < ndp[ns][0]:
                    ndp[ns] = (ncost, path + [n])
        dp = ndp
    if 0 not in dp:
        raise OracleInconclusive("sum-zero lattice empty in box")
    return dp[0]


def _box_minimize(a, X: AffineType, radius: int):
    if X is AffineType.B2:
        return _box_min_free(a, radius, even_only=True)
    if X is AffineType.A1:
        return _box_min_sum_zero(a, radius)
    if X is AffineType.D1 and len(a) == 1:
        return a[0] ** 2, [0]
    if X in (AffineType.B1, AffineType.D1, AffineType.C2):
        return _box_min_parity(a, radius)
    return _box_min_free(a, radius)


def brute_infimum(
    lam: WeightTriple,
    chi: CharTriple,
    X: AffineType,
    cfg: OracleConfig = OracleConfig(),
    method: str = "box",
    radius_cap_extra: int = 6,
) -> tuple[Fraction, WeylElement, int]:
    """Exhaustive minimum over the truncated group.

    Returns (value, witness, certified_radius).  The radius grows by 2
    while some stratum's unconstrained closed-form minimizer is not
    strictly inside the box, up to cfg.lattice_radius + radius_cap_extra.
    """
    lam_st, chi_st, scale = normalize(lam, chi)
    n = max(len(lam_st.l0), len(chi_st.c0))
    if n == 0:
        raise InputError("empty index set")
    radius = cfg.lattice_radius
    cap = cfg.lattice_radius + radius_cap_extra
    while True:
        needed = 0
        for w in itertools.permutations(range(n)):
            for sigma in sign_vectors(X, n):
                a, _ = stratum_profile(lam_st, chi_st, sigma, w)
                nvec, _ = minimize_lattice(a, X)
                needed = max(needed, max(abs(v) for v in nvec))
        if needed < radius:
            break
        if radius >= cap:
            raise OracleInconclusive(
                f"box radius {radius} not certifiable (minimizer reaches {needed})"
            )
        radius += 2
    if method == "enumerate":
        best = None
        for g in enumerate_elements(X, n, radius):
            val = energy(lam_st, chi_st, g)
            if best is None or val < best[0]:
                best = (val, g)
        value, witness = best
        return scale * value, witness, radius
    if method != "box":
        raise InputError(f"unknown oracle method {method!r}")
    best = None
    for w in itertools.permutations(range(n)):
        for sigma in sign_vectors(X, n):
            a, c = stratum_profile(lam_st, chi_st, sigma, w)
            quad, nvec = _box_minimize(a, X, radius)
            value = (quad - sum(c, ZERO)) / 2
            if best is None or value < best[0]:
                best = (value, WeylElement(X, tuple(nvec), sigma, w))
    value, witness = best
    return scale * value, witness, radius


def minimality_radius(lam_st: WeightTriple, n: int) -> int:
    """A level window guaranteed to contain every binding constraint of
    the minimality criterion: past +-(|l0(alpha_sharp)| + 2) the sign of
    lam(coroot) and the slack of gamma(chi) are both monotone."""
    bound = Fraction(0)
    l0 = lam_st.l0
    for i in range(n):
        bound = max(bound, abs(2 * l0[i]))
        for j in range(n):
            if i != j:
                bound = max(bound, abs(l0[i] - l0[j]), abs(l0[i] + l0[j]))
    return math.ceil(bound) + 2


def brute_minimality(
    lam: WeightTriple,
    chi: CharTriple,
    X: AffineType,
    cfg: OracleConfig | None = None,
) -> bool:
    """Checks lam(coroot(gamma)) > 0 => gamma(chi) <= 0 root by root."""
    lam_st, chi_st, _ = normalize(lam, chi)
    n = max(len(lam_st.l0), len(chi_st.c0))
    l0 = list(lam_st.l0) + [ZERO] * (n - len(lam_st.l0))
    lam_st = WeightTriple(lam_st.lc, tuple(l0), lam_st.ld)
    c0 = list(chi_st.c0) + [ZERO] * (n - len(chi_st.c0))
    radius = cfg.lattice_radius if cfg is not None else minimality_radius(lam_st, n)
    lam_dual = lam_st.as_dual()
    for gamma in roots_enumerate(X, range(n), range(-radius, radius + 1)):
        if lam_dual(coroot(gamma, n)) > 0:
            if alpha_eval(gamma.alpha, c0) + gamma.n * chi_st.cd > 0:
                return False
    return True
