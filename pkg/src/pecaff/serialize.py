"""JSON (de)serialization: rationals as "p/q" strings, exact round-trips.

Schemas:
  rational      "p/q", "p", or a JSON integer
  root          {"shape": "eij-"|"eij+"|"ei"|"2ei", "i", "j"?, "sign"?, "n"}
  weyl element  {"type", "size", "x": {index: entry}, "sigma": [flipped
                indices], "w": [[cycle], ...]}
  weight / char {"lc","l0","ld"} / {"cc","c0","cd"}
  finite inst   {"type", "lambda": weight, "chi": char}
  profile       {"lc","ld","cc","cd","cohorts":[{"lambda","d"}],
                "exceptions":[...]}
  affinisation  {"N_phi","N_psi","X_std","lc","ld",
                "cohorts":[{"lambda","nu","mu","nu_prime"}],"exceptions":[...]}
"""

from __future__ import annotations

from fractions import Fraction

from .affinisation import AffinisationInstance
from .energy import CharTriple, WeightTriple
from .errors import InputError
from .profiles import CohortProfile
from .rootdata import AffineRoot, AffineType, FiniteRoot, Shape
from .weyl import WeylElement


def rat_to_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rat(v) -> Fraction:
    if isinstance(v, bool):
        raise InputError(f"not a rational: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational {v!r}: {exc}") from None
    raise InputError(f"not a rational: {v!r}")


def jsonable(obj):
    """Recursively convert Fractions to rational strings for JSON output."""
    if isinstance(obj, Fraction):
        return rat_to_str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


_SHAPE_TAGS = {Shape.DIFF: "eij-", Shape.SUM: "eij+",
               Shape.SHORT: "ei", Shape.LONG: "2ei"}
_TAG_SHAPES = {v: k for k, v in _SHAPE_TAGS.items()}


def root_to_json(gamma: AffineRoot) -> dict:
    alpha = gamma.alpha
    out = {"shape": _SHAPE_TAGS[alpha.shape], "i": alpha.i, "n": gamma.n}
    if alpha.j is not None:
        out["j"] = alpha.j
    if alpha.shape is not Shape.DIFF:
        out["sign"] = alpha.sign
    return out


def root_from_json(data: dict) -> AffineRoot:
    try:
        shape = _TAG_SHAPES[data["shape"]]
        alpha = FiniteRoot(shape, data["i"], data.get("j"),
                           data.get("sign", 1))
        return AffineRoot(alpha, int(data["n"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed root object: {exc}") from None


def weyl_to_json(g: WeylElement) -> dict:
    cycles = []
    seen = set()
    for start in range(g.size):
        if start in seen or g.w[start] == start:
            continue
        cyc, j = [], start
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = g.w[j]
        cycles.append(cyc)
    return {
        "type": g.X.tag,
        "size": g.size,
        "x": {str(j): v for j, v in enumerate(g.x) if v != 0},
        "sigma": [j for j, s in enumerate(g.sigma) if s == -1],
        "w": cycles,
    }


def weyl_from_json(data: dict) -> WeylElement:
    try:
        X = AffineType.from_tag(data["type"])
        size = int(data["size"])
        x = [0] * size
        for j, v in data.get("x", {}).items():
            x[int(j)] = int(v)
        sigma = [1] * size
        for j in data.get("sigma", []):
            sigma[int(j)] = -1
        w = list(range(size))
        for cyc in data.get("w", []):
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                w[int(a)] = int(b)
        return WeylElement(X, tuple(x), tuple(sigma), tuple(w))
    except (KeyError, TypeError, IndexError) as exc:
        raise InputError(f"malformed weyl element: {exc}") from None


def weight_to_json(lam: WeightTriple) -> dict:
    return {"lc": rat_to_str(lam.lc), "l0": [rat_to_str(v) for v in lam.l0],
            "ld": rat_to_str(lam.ld)}


def weight_from_json(data: dict) -> WeightTriple:
    try:
        return WeightTriple(parse_rat(data["lc"]),
                            tuple(parse_rat(v) for v in data["l0"]),
                            parse_rat(data["ld"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed weight: {exc}") from None


def char_to_json(chi: CharTriple) -> dict:
    return {"cc": rat_to_str(chi.cc), "c0": [rat_to_str(v) for v in chi.c0],
            "cd": rat_to_str(chi.cd)}


def char_from_json(data: dict) -> CharTriple:
    try:
        return CharTriple(parse_rat(data["cc"]),
                          tuple(parse_rat(v) for v in data["c0"]),
                          parse_rat(data["cd"]))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed character: {exc}") from None


def finite_instance_from_json(data: dict) -> tuple[AffineType, WeightTriple, CharTriple]:
    try:
        X = AffineType.from_tag(data["type"])
        return X, weight_from_json(data["lambda"]), char_from_json(data["chi"])
    except KeyError as exc:
        raise InputError(f"instance missing field {exc}") from None


def profile_to_json(p: CohortProfile) -> dict:
    return {
        "lc": rat_to_str(p.lc), "ld": rat_to_str(p.ld),
        "cc": rat_to_str(p.cc), "cd": rat_to_str(p.cd),
        "cohorts": [{"lambda": rat_to_str(l), "d": rat_to_str(d)}
                    for l, d in p.cohorts],
        "exceptions": [{"lambda": rat_to_str(l), "d": rat_to_str(d)}
                       for l, d in p.exceptions],
    }


def profile_from_json(data: dict) -> CohortProfile:
    try:
        pairs = lambda key: tuple(
            (parse_rat(e["lambda"]), parse_rat(e["d"]))
            for e in data.get(key, []))
        return CohortProfile(
            pairs("cohorts"), pairs("exceptions"),
            parse_rat(data.get("lc", 1)), parse_rat(data.get("ld", 0)),
            parse_rat(data.get("cc", 0)), parse_rat(data.get("cd", 1)))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed profile: {exc}") from None


def affinisation_from_json(data: dict) -> AffinisationInstance:
    try:
        quads = lambda key: tuple(
            (parse_rat(e["lambda"]), parse_rat(e["nu"]),
             parse_rat(e["mu"]), parse_rat(e["nu_prime"]))
            for e in data.get(key, []))
        return AffinisationInstance(
            int(data["N_phi"]), int(data["N_psi"]),
            AffineType.from_tag(data["X_std"]),
            quads("cohorts"), quads("exceptions"),
            parse_rat(data.get("lc", 1)), parse_rat(data.get("ld", 0)))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed affinisation instance: {exc}") from None
