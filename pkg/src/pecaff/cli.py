"""Batch front end: JSON instances in, JSON decisions with witnesses out.

Exit codes: 0 once a decision is rendered (yes or no alike), 2 for input
errors (bad JSON, bad schema, bad flags), 3 for internal inconsistencies
(a dual-path disagreement is a bug signal, never a data error).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import serialize
from .cones import decompose, in_cmin_affine
from .energy import infimum
from .errors import InputError, InternalInconsistencyError
from .oracle import OracleConfig, brute_infimum, brute_minimality
from .profiles import pec_decide
from .affinisation import reduce_to_standard
from .rootdata import AffineType

TYPE_TAGS = [t.tag for t in AffineType]


def _load(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(
            f"malformed JSON in {path} at line {exc.lineno}, "
            f"column {exc.colno}: {exc.msg}") from None


def _emit(payload) -> None:
    json.dump(serialize.jsonable(payload), sys.stdout, indent=2)
    sys.stdout.write("\n")


def _instance_type(data: dict, flag: str | None) -> AffineType:
    tag = flag or data.get("type")
    if tag is None:
        raise InputError("no type given (flag --type or instance field)")
    return AffineType.from_tag(tag)


def cmd_infimum(args) -> int:
    data = _load(args.instance)
    X, lam, chi = serialize.finite_instance_from_json(
        dict(data, type=(args.type or data.get("type"))))
    if args.oracle:
        cfg = OracleConfig(lattice_radius=args.radius)
        value, witness, radius = brute_infimum(lam, chi, X, cfg)
        _emit({"value": value, "witness": serialize.weyl_to_json(witness),
               "oracle": True, "certified_radius": radius})
    else:
        value, witness = infimum(lam, chi, X)
        _emit({"value": value, "witness": serialize.weyl_to_json(witness)})
    return 0


def cmd_min_energy(args) -> int:
    data = _load(args.instance)
    X, lam, chi = serialize.finite_instance_from_json(
        dict(data, type=(args.type or data.get("type"))))
    if args.oracle:
        member = brute_minimality(lam, chi, X)
        _emit({"member": member, "violated": [], "oracle": True})
        return 0
    verdict = in_cmin_affine(lam, chi, X)
    _emit({"member": verdict.member,
           "violated": list(verdict.violated_conditions)})
    return 0


def cmd_decompose(args) -> int:
    data = _load(args.instance)
    X, lam, chi = serialize.finite_instance_from_json(
        dict(data, type=(args.type or data.get("type"))))
    chi_min, chi_sum = decompose(lam, chi, X)
    _emit({"chi_min": serialize.char_to_json(chi_min),
           "chi_sum": serialize.char_to_json(chi_sum)})
    return 0


def cmd_check_pec(args) -> int:
    data = _load(args.profile)
    X = _instance_type(data, args.type)
    prof = serialize.profile_from_json(data)
    verdict = pec_decide(prof, X)
    _emit({"pec": verdict.pec, "reason": verdict.reason})
    return 0


def cmd_reduce(args) -> int:
    data = _load(args.instance)
    inst = serialize.affinisation_from_json(data)
    X, prof, scale = reduce_to_standard(inst)
    out = serialize.profile_to_json(prof)
    _emit({"type": X.tag, "profile": out, "scale": scale})
    return 0


def _random_instance(rng: random.Random, tag: str, nmax: int = 3,
                     denmax: int = 12):
    n = rng.randint(1, nmax)
    pick = lambda: Fraction(rng.randint(-denmax, denmax),
                            rng.randint(1, denmax))
    return {
        "type": tag,
        "lambda": {"lc": "1", "l0": [serialize.rat_to_str(pick())
                                     for _ in range(n)], "ld": "0"},
        "chi": {"cc": "0", "c0": [serialize.rat_to_str(pick())
                                  for _ in range(n)], "cd": "1"},
    }


def _sweep_one(payload):
    data, use_oracle, radius = payload
    X, lam, chi = serialize.finite_instance_from_json(data)
    value, witness = infimum(lam, chi, X)
    out = {"type": X.tag, "instance": data, "value": value,
           "witness": serialize.weyl_to_json(witness)}
    if use_oracle:
        oval, _, certified = brute_infimum(
            lam, chi, X, OracleConfig(lattice_radius=radius))
        out["oracle_value"] = oval
        out["certified_radius"] = certified
        if oval != value:
            raise InternalInconsistencyError(
                f"oracle disagrees on {data}: {oval} != {value}")
    return out


def cmd_sweep(args) -> int:
    rng = random.Random(args.seed)
    tags = [args.type] if args.type else TYPE_TAGS
    work = [(_random_instance(rng, tags[i % len(tags)]), args.oracle,
             args.radius) for i in range(args.count)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_one, work))
    else:
        results = [_sweep_one(item) for item in work]
    _emit(results)
    return 0


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    checked = 0
    for tag in TYPE_TAGS:
        for _ in range(args.count // len(TYPE_TAGS) or 1):
            data = _random_instance(rng, tag, nmax=2, denmax=6)
            X, lam, chi = serialize.finite_instance_from_json(data)
            value, _ = infimum(lam, chi, X)
            oval, _, _ = brute_infimum(
                lam, chi, X, OracleConfig(lattice_radius=args.radius))
            if value != oval:
                raise InternalInconsistencyError(
                    f"selftest disagreement on {data}: {value} != {oval}")
            if (value == 0) != brute_minimality(lam, chi, X):
                raise InternalInconsistencyError(
                    f"selftest minimality mismatch on {data}")
            checked += 1
    _emit({"ok": True, "instances": checked})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pecaff",
        description="exact energy infima, cone membership and "
                    "positive-energy decisions for affine instances")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, instance_arg="instance"):
        p.add_argument(instance_arg, help="instance JSON file")
        p.add_argument("--type", choices=TYPE_TAGS)
        p.add_argument("--radius", type=int, default=5)
        p.add_argument("--oracle", action="store_true")

    p = sub.add_parser("infimum", help="exact minimum energy with witness")
    common(p)
    p.set_defaults(func=cmd_infimum)

    p = sub.add_parser("min-energy", help="minimal-energy cone membership")
    common(p)
    p.set_defaults(func=cmd_min_energy)

    p = sub.add_parser("decompose", help="split chi into cone part and rest")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check-pec", help="positive-energy decision for a profile")
    p.add_argument("profile", help="profile JSON file")
    p.add_argument("--type", choices=TYPE_TAGS)
    p.set_defaults(func=cmd_check_pec)

    p = sub.add_parser("reduce", help="reduce an affinisation instance")
    p.add_argument("instance", help="affinisation JSON file")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("sweep", help="seeded random corpus run")
    p.add_argument("--type", choices=TYPE_TAGS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--radius", type=int, default=5)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="oracle-agreement smoke suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=21)
    p.add_argument("--radius", type=int, default=5)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
