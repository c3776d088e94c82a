"""Affine Weyl group elements as canonical triples tau_x . sigma . w.

The stored triple (x, sigma, w) denotes the composite map
tau_x o sigma o w, applied right to left on a triple (z, h, t):
first the permutation (w(e_j) = e_{w(j)}), then the sign change, then the
lattice translation

    tau_x(z, h, t) = (z + <x, h> + t <x, x>/2, h + t x, t).

Sign vectors are stored densely as tuples of +-1, permutations as image
tuples over the active index set {0, ..., n-1}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import InputError
from .rootdata import (
    AffineRoot,
    AffineType,
    Shape,
    Triple,
    is_root,
    lattice_contains,
    squared_length,
)

SignVector = tuple[int, ...]
Permutation = tuple[int, ...]


def perm_inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for j, im in enumerate(w):
        inv[im] = j
    return tuple(inv)


def sign_admissible(X: AffineType, sigma: Sequence[int]) -> bool:
    if any(s not in (1, -1) for s in sigma):
        return False
    if X is AffineType.A1:
        return all(s == 1 for s in sigma)
    if X is AffineType.D1:
        return sum(1 for s in sigma if s == -1) % 2 == 0
    return True


@dataclass(frozen=True)
class WeylElement:
    X: AffineType
    x: tuple[int, ...]
    sigma: SignVector
    w: Permutation

    def __post_init__(self):
        n = len(self.w)
        if len(self.x) != n or len(self.sigma) != n:
            raise InputError("inconsistent component sizes in WeylElement")
        if sorted(self.w) != list(range(n)):
            raise InputError(f"not a permutation: {self.w}")
        if not lattice_contains(self.X, self.x):
            raise InputError(f"x={self.x} not in T({self.X.tag})")
        if not sign_admissible(self.X, self.sigma):
            raise InputError(f"sigma={self.sigma} inadmissible for {self.X.tag}")

    @property
    def size(self) -> int:
        return len(self.w)


def identity(X: AffineType, n: int) -> WeylElement:
    return WeylElement(X, (0,) * n, (1,) * n, tuple(range(n)))


def translation(X: AffineType, x: Sequence[int]) -> WeylElement:
    n = len(x)
    return WeylElement(X, tuple(x), (1,) * n, tuple(range(n)))


def act(g: WeylElement, v: Triple) -> Triple:
    n = g.size
    h = tuple(v.h) + (Fraction(0),) * (n - len(v.h))
    if len(h) != n:
        raise InputError("vector support exceeds the element's index set")
    winv = perm_inverse(g.w)
    h = tuple(h[winv[j]] for j in range(n))
    h = tuple(g.sigma[j] * h[j] for j in range(n))
    xh = sum((Fraction(a) * b for a, b in zip(g.x, h)), Fraction(0))
    xx = sum(Fraction(a * a) for a in g.x)
    z = v.z + xh + v.t * xx / 2
    h = tuple(h[j] + v.t * g.x[j] for j in range(n))
    return Triple(z, h, v.t)


def compose(g1: WeylElement, g2: WeylElement) -> WeylElement:
    """Product g1 * g2 in canonical form (translations pushed left).

    Uses tau_{x1} tau_{x2} = tau_{x1+x2} and (sigma w) tau_x (sigma w)^{-1}
    = tau_{sigma w (x)}.  Validity of the resulting triple is re-asserted:
    for D1 the sign-parity and lattice constraints are each preserved by
    the semidirect relations, and a violation here would be a bug.
    """
    if g1.X is not g2.X or g1.size != g2.size:
        raise InputError("type or size mismatch in compose")
    n = g1.size
    w1inv = perm_inverse(g1.w)
    w = tuple(g1.w[g2.w[j]] for j in range(n))
    sigma = tuple(g1.sigma[j] * g2.sigma[w1inv[j]] for j in range(n))
    x = tuple(g1.x[j] + g1.sigma[j] * g2.x[w1inv[j]] for j in range(n))
    return WeylElement(g1.X, x, sigma, w)


def inverse(g: WeylElement) -> WeylElement:
    n = g.size
    winv = perm_inverse(g.w)
    sigma = tuple(g.sigma[g.w[j]] for j in range(n))
    x = tuple(-g.sigma[g.w[j]] * g.x[g.w[j]] for j in range(n))
    return WeylElement(g.X, x, sigma, winv)


def reflection(gamma: AffineRoot, X: AffineType, n: int) -> WeylElement:
    """The reflection r_{(alpha,m)} as a canonical element on n indices.

    The level-0 part is the finite reflection in alpha (a transposition, a
    sign flip, or a signed transposition); the translation part comes from
    r_{(alpha,0)} r_{(alpha,m)} = tau_{m alpha_check}, which gives
    r_{(alpha,m)} = tau_{-m alpha_check} r_{(alpha,0)}.
    """
    if not is_root(X, gamma):
        raise InputError(f"{gamma} is not a root of {X.tag}")
    alpha, level = gamma.alpha, gamma.n
    sigma = [1] * n
    w = list(range(n))
    acheck = [0] * n
    s = alpha.sign
    if alpha.shape is Shape.DIFF:
        w[alpha.i], w[alpha.j] = alpha.j, alpha.i
        acheck[alpha.i], acheck[alpha.j] = 1, -1
    elif alpha.shape is Shape.SHORT:
        sigma[alpha.i] = -1
        acheck[alpha.i] = 2 * s
    elif alpha.shape is Shape.LONG:
        sigma[alpha.i] = -1
        acheck[alpha.i] = s
    else:  # SUM
        w[alpha.i], w[alpha.j] = alpha.j, alpha.i
        sigma[alpha.i] = sigma[alpha.j] = -1
        acheck[alpha.i] = acheck[alpha.j] = s
    x = tuple(-level * a for a in acheck)
    return WeylElement(X, x, tuple(sigma), tuple(w))


def reflect_triple(gamma: AffineRoot, v: Triple, size: int) -> Triple:
    """Direct evaluation of the reflection formula, for cross-checking:
    r_gamma(v) = v - (alpha(h) + n t) * coroot(gamma)."""
    from .rootdata import alpha_eval, coroot

    h = tuple(v.h) + (Fraction(0),) * (size - len(v.h))
    coeff = alpha_eval(gamma.alpha, h) + gamma.n * v.t
    cr = coroot(gamma, size)
    return Triple(
        v.z - coeff * cr.z,
        tuple(a - coeff * b for a, b in zip(h, cr.h)),
        v.t,
    )


def lattice_vectors(X: AffineType, n: int, radius: int) -> Iterator[tuple[int, ...]]:
    """All x in T(X) with |x_j| <= radius, lexicographically."""
    for x in itertools.product(range(-radius, radius + 1), repeat=n):
        if lattice_contains(X, x):
            yield x


def sign_vectors(X: AffineType, n: int) -> Iterator[SignVector]:
    if X is AffineType.A1:
        yield (1,) * n
        return
    for sigma in itertools.product((-1, 1), repeat=n):
        if sign_admissible(X, sigma):
            yield sigma


def enumerate_elements(X: AffineType, n: int, radius: int) -> Iterator[WeylElement]:
    """All tau_x sigma w with x in T(X), |x_j| <= radius, sigma admissible,
    w in Sym(n); lexicographic in (x, sigma, w)."""
    for x in lattice_vectors(X, n, radius):
        for sigma in sign_vectors(X, n):
            for w in itertools.permutations(range(n)):
                yield WeylElement(X, x, sigma, w)
