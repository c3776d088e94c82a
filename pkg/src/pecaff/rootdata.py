"""Root data for the five locally finite and seven locally affine families.

Finite roots live in the span of an orthonormal family (e_j) indexed by a
finite active index set {0, ..., n-1}.  The ambient double extension is the
space of triples (z, h, t); its dual pairs against it through the form kappa.
Everything is exact: all scalars are ``fractions.Fraction``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import InputError

Rat = Fraction
Vec = tuple[Fraction, ...]
IntVec = tuple[int, ...]


class FiniteType(enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    BC = "BC"


class AffineType(enum.Enum):
    """The seven locally affine families (tag, base finite type, twist)."""

    A1 = ("A1", FiniteType.A, 1)
    B1 = ("B1", FiniteType.B, 1)
    C1 = ("C1", FiniteType.C, 1)
    D1 = ("D1", FiniteType.D, 1)
    B2 = ("B2", FiniteType.B, 2)
    C2 = ("C2", FiniteType.C, 2)
    BC2 = ("BC2", FiniteType.BC, 2)

    def __init__(self, tag: str, base: FiniteType, twist: int):
        self.tag = tag
        self.base = base
        self.twist = twist

    @classmethod
    def from_tag(cls, tag: str) -> "AffineType":
        for t in cls:
            if t.tag == tag:
                return t
        raise InputError(f"unknown affine type tag {tag!r}")


class Shape(enum.Enum):
    DIFF = "diff"    # e_i - e_j
    SHORT = "short"  # sign * e_i
    LONG = "long"    # sign * 2 e_i
    SUM = "sum"      # sign * (e_i + e_j)


# Admissible shapes per finite type.
_FINITE_SHAPES = {
    FiniteType.A: {Shape.DIFF},
    FiniteType.B: {Shape.DIFF, Shape.SHORT, Shape.SUM},
    FiniteType.C: {Shape.DIFF, Shape.LONG, Shape.SUM},
    FiniteType.D: {Shape.DIFF, Shape.SUM},
    FiniteType.BC: {Shape.DIFF, Shape.SHORT, Shape.LONG, Shape.SUM},
}


@dataclass(frozen=True, order=True)
class FiniteRoot:
    """A root of one of the finite families, in canonical form.

    DIFF is e_i - e_j (its negative is the swapped pair, sign stays +1).
    SHORT/LONG carry a sign and a single index; SUM carries a sign and i < j.
    """

    shape: Shape
    i: int
    j: int | None = None
    sign: int = 1

    def __post_init__(self):
        if self.shape is Shape.DIFF:
            if self.j is None or self.i == self.j or self.sign != 1:
                raise InputError(f"malformed DIFF root {self}")
        elif self.shape is Shape.SUM:
            if self.j is None or not self.i < self.j or self.sign not in (1, -1):
                raise InputError(f"malformed SUM root {self}")
        else:
            if self.j is not None or self.sign not in (1, -1):
                raise InputError(f"malformed {self.shape} root {self}")

    def negate(self) -> "FiniteRoot":
        if self.shape is Shape.DIFF:
            return FiniteRoot(Shape.DIFF, self.j, self.i)
        return FiniteRoot(self.shape, self.i, self.j, -self.sign)


@dataclass(frozen=True)
class AffineRoot:
    alpha: FiniteRoot
    n: int

    def negate(self) -> "AffineRoot":
        return AffineRoot(self.alpha.negate(), -self.n)


@dataclass(frozen=True)
class Triple:
    """Element (z, h, t) of the doubly extended space, h finitely supported."""

    z: Rat
    h: Vec
    t: Rat

    def __add__(self, other: "Triple") -> "Triple":
        return Triple(self.z + other.z, vec_add(self.h, other.h), self.t + other.t)

    def __sub__(self, other: "Triple") -> "Triple":
        return Triple(self.z - other.z, vec_sub(self.h, other.h), self.t - other.t)


@dataclass(frozen=True)
class DualTriple:
    """Functional (c, f, d): evaluates as c*z + <f, h> + d*t."""

    c: Rat
    f: Vec
    d: Rat

    def __call__(self, v: Triple) -> Rat:
        return self.c * v.z + dot(self.f, v.h) + self.d * v.t


def _pad(u: Sequence[Rat], n: int) -> tuple:
    return tuple(u) + (Fraction(0),) * (n - len(u))


def vec_add(u: Sequence[Rat], v: Sequence[Rat]) -> Vec:
    n = max(len(u), len(v))
    u, v = _pad(u, n), _pad(v, n)
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Rat], v: Sequence[Rat]) -> Vec:
    n = max(len(u), len(v))
    u, v = _pad(u, n), _pad(v, n)
    return tuple(a - b for a, b in zip(u, v))


def dot(u: Sequence[Rat], v: Sequence[Rat]) -> Rat:
    n = max(len(u), len(v))
    u, v = _pad(u, n), _pad(v, n)
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def squared_length(alpha: FiniteRoot) -> Rat:
    """(alpha, alpha) under the standard scalar product (e_j, e_k) = delta_jk."""
    if alpha.shape in (Shape.DIFF, Shape.SUM):
        return Fraction(2)
    if alpha.shape is Shape.SHORT:
        return Fraction(1)
    return Fraction(4)


def alpha_sharp(alpha: FiniteRoot, n: int) -> Vec:
    """Coordinates of the metric dual of alpha in the (e_j) basis."""
    size = n
    v = [Fraction(0)] * size
    s = Fraction(alpha.sign)
    if alpha.shape is Shape.DIFF:
        v[alpha.i] = Fraction(1)
        v[alpha.j] = Fraction(-1)
    elif alpha.shape is Shape.SHORT:
        v[alpha.i] = s
    elif alpha.shape is Shape.LONG:
        v[alpha.i] = 2 * s
    else:  # SUM
        v[alpha.i] = s
        v[alpha.j] = s
    return tuple(v)


def alpha_eval(alpha: FiniteRoot, h: Sequence[Rat]) -> Rat:
    """alpha(h), i.e. the pairing of the root (as a functional) with h."""
    return dot(alpha_sharp(alpha, len(h)), h)


def support_size(alpha: FiniteRoot) -> int:
    return 1 if alpha.shape in (Shape.SHORT, Shape.LONG) else 2


def coroot(gamma: AffineRoot, size: int) -> Triple:
    """The coroot (alpha, n)^vee = (-2n/(alpha,alpha), alpha_check, 0)."""
    aa = squared_length(gamma.alpha)
    acheck = tuple(Fraction(2) / aa * x for x in alpha_sharp(gamma.alpha, size))
    return Triple(Fraction(-2 * gamma.n) / aa, acheck, Fraction(0))


def sharp(mu: DualTriple) -> Triple:
    """mu^sharp = (-mu_d, (mu^0)^sharp, -mu_c); the metric identification.

    On the middle slot the identification is coordinatewise since (e_j) is
    orthonormal.  It satisfies mu(v) = kappa(v, sharp(mu)) for all finitely
    supported v.
    """
    return Triple(-mu.d, tuple(mu.f), -mu.c)


def kappa(u: Triple, v: Triple) -> Rat:
    return dot(u.h, v.h) - u.z * v.t - v.z * u.t


def _level_ok(X: AffineType, shape: Shape, n: int) -> bool:
    even = n % 2 == 0
    if X.twist == 1:
        return True
    if X is AffineType.B2:
        # full B_J at even levels, only the short roots at odd levels
        return even or shape is Shape.SHORT
    if X is AffineType.C2:
        # C_J at even levels, D_J at odd levels
        return even or shape in (Shape.DIFF, Shape.SUM)
    # BC2: B_J at even levels, BC_J at odd levels; only the long roots
    # are missing from the even class
    if shape is Shape.LONG:
        return not even
    return True


def is_root(X: AffineType, gamma: AffineRoot) -> bool:
    shape = gamma.alpha.shape
    if X.twist == 2:
        # the finite shape only has to be admissible for the union of the
        # two level classes
        union = {
            AffineType.B2: FiniteType.B,
            AffineType.C2: FiniteType.C,
            AffineType.BC2: FiniteType.BC,
        }[X]
        if shape not in _FINITE_SHAPES[union]:
            return False
    elif shape not in _FINITE_SHAPES[X.base]:
        return False
    return _level_ok(X, shape, gamma.n)


def admissible_levels(X: AffineType, shape: Shape) -> str:
    """Which integer levels carry the given shape: 'all', 'even' or 'odd'.

    Raises InputError when the shape never occurs in type X.
    """
    if shape not in _FINITE_SHAPES[
        X.base if X.twist == 1 else {
            AffineType.B2: FiniteType.B,
            AffineType.C2: FiniteType.C,
            AffineType.BC2: FiniteType.BC,
        }[X]
    ]:
        raise InputError(f"shape {shape} does not occur in type {X.tag}")
    if X.twist == 1:
        return "all"
    if X is AffineType.B2:
        return "all" if shape is Shape.SHORT else "even"
    if X is AffineType.C2:
        return "even" if shape is Shape.LONG else "all"
    # BC2
    return "odd" if shape is Shape.LONG else "all"


def lattice_contains(X: AffineType, x: Sequence[int]) -> bool:
    """Membership in the translation lattice T(X)."""
    if any(int(v) != v for v in x):
        return False
    s = sum(x)
    if X is AffineType.A1:
        return s == 0
    if X is AffineType.D1:
        # the translations are generated by the coroots e_i +- e_j, which
        # span the even-sum sublattice once two indices exist and nothing
        # on a single index
        if len(x) == 1:
            return x[0] == 0
        return s % 2 == 0
    if X in (AffineType.B1, AffineType.C2):
        return s % 2 == 0
    if X is AffineType.B2:
        return all(v % 2 == 0 for v in x)
    return True  # C1, BC2


def finite_roots(ftype: FiniteType, indices: Sequence[int]) -> Iterator[FiniteRoot]:
    shapes = _FINITE_SHAPES[ftype]
    idx = list(indices)
    if Shape.DIFF in shapes:
        for i, j in itertools.permutations(idx, 2):
            yield FiniteRoot(Shape.DIFF, i, j)
    if Shape.SHORT in shapes:
        for i in idx:
            for s in (1, -1):
                yield FiniteRoot(Shape.SHORT, i, sign=s)
    if Shape.LONG in shapes:
        for i in idx:
            for s in (1, -1):
                yield FiniteRoot(Shape.LONG, i, sign=s)
    if Shape.SUM in shapes:
        for i, j in itertools.combinations(idx, 2):
            for s in (1, -1):
                yield FiniteRoot(Shape.SUM, i, j, sign=s)


def roots_enumerate(
    X: AffineType, indices: Sequence[int], n_range: Iterable[int]
) -> list[AffineRoot]:
    """All admissible affine roots with indices in the given set and level
    in n_range, without duplicates, in a deterministic order."""
    if not indices:
        raise InputError("empty index set")
    union_type = X.base if X.twist == 1 else {
        AffineType.B2: FiniteType.B,
        AffineType.C2: FiniteType.C,
        AffineType.BC2: FiniteType.BC,
    }[X]
    out = []
    for n in n_range:
        for alpha in finite_roots(union_type, indices):
            gamma = AffineRoot(alpha, n)
            if is_root(X, gamma):
                out.append(gamma)
    return out
