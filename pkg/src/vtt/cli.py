"""Command-line front end.

Subcommands: count (the exact formula), classes (explicit orbit enumeration),
verify (triple-oracle agreement gate), recognize (vertex-transitivity and
Cayley recognition for a graph file), fixtures (the bundled order-9/order-25
cross-checks).  All output is deterministic; every flag can also be set
through a VTT_* environment variable.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import counting, enumeration, fixtures, graphs, perm
from .errors import InconsistencyError, SizeLimitError
from .groups import is_prime

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_RESOURCE_CAP = 3

ENV_PREFIX = "VTT_"


def _env_default(name: str, fallback, cast=str):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        print(f"error: bad value {raw!r} for {ENV_PREFIX}{name}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_INPUT)


def _env_flag(name: str) -> bool:
    return os.environ.get(ENV_PREFIX + name, "").lower() in ("1", "true", "yes", "on")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vtt",
        description="Isomorphism classes of vertex-transitive tournaments of prime order: "
                    "exact counts, explicit class enumeration, oracle verification, and "
                    "Cayley recognition.",
        epilog="Every flag has an environment override with the VTT_ prefix: "
               "VTT_FORMAT, VTT_BUDGET_BITS, VTT_AUT_CAP, VTT_WORKERS, VTT_MEMBERS. "
               "Flags take precedence over the environment.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "tsv", "json", "dot"),
                        default=_env_default("FORMAT", "text"),
                        help="output format (default: text)")
    common.add_argument("--budget-bits", type=int, metavar="B",
                        default=_env_default("BUDGET_BITS", enumeration.DEFAULT_BUDGET_BITS, int),
                        help="mask-bit budget for explicit enumeration (default: %(default)s)")
    common.add_argument("--aut-cap", type=int, metavar="N",
                        default=_env_default("AUT_CAP", perm.DEFAULT_AUT_CAP, int),
                        help="vertex cap for full automorphism enumeration (default: %(default)s)")
    common.add_argument("--workers", type=int, metavar="W",
                        default=_env_default("WORKERS", 1, int),
                        help="worker processes for enumeration (default: %(default)s)")

    p_count = sub.add_parser("count", parents=[common],
                             help="exact class count for a prime or a prime range")
    p_count.add_argument("prime", help="an odd prime P, or a range LO..HI")

    p_classes = sub.add_parser("classes", parents=[common],
                               help="enumerate the classes with canonical representatives")
    p_classes.add_argument("prime", type=int, help="an odd prime within the bit budget")
    p_classes.add_argument("--members", action="store_true",
                           default=_env_flag("MEMBERS"),
                           help="include the full member list of every class")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="check formula vs orbit enumeration vs Burnside count")
    p_verify.add_argument("prime", type=int, help="an odd prime within the bit budget")

    p_rec = sub.add_parser("recognize", parents=[common],
                           help="vertex-transitivity and Cayley recognition for a graph file")
    p_rec.add_argument("file", help="path to a graph file ('digraph n' or 'graph n' header)")

    sub.add_parser("fixtures", parents=[common],
                   help="run the bundled order-9 / order-25 cross-checks")

    return parser


def _positive(args) -> None:
    if args.budget_bits < 1 or args.aut_cap < 1 or args.workers < 1:
        raise ValueError("budget, cap and workers must be positive")


def _parse_prime_range(text: str) -> tuple[int, int] | int:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        try:
            return int(lo_text), int(hi_text)
        except ValueError:
            raise ValueError(f"bad range {text!r}: expected LO..HI")
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"bad prime {text!r}")


def cmd_count(args) -> int:
    if args.format == "dot":
        raise ValueError("format 'dot' is not supported for count")
    target = _parse_prime_range(args.prime)
    if isinstance(target, int):
        if target < 3 or target % 2 == 0 or not is_prime(target):
            raise ValueError(f"{target} is not an odd prime")
        rows = [(target, counting.class_count(target))]
    else:
        rows = counting.count_table(*target)
    sys.stdout.write(counting.format_count_table(rows, args.format))
    return EXIT_OK


def cmd_classes(args) -> int:
    if args.format in ("tsv", "dot"):
        raise ValueError(f"format {args.format!r} is not supported for classes")
    report = enumeration.equivalence_classes(
        args.prime, include_members=args.members,
        budget_bits=args.budget_bits, workers=args.workers)
    for line in report.json_lines():
        print(line)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.format == "dot" or args.format == "tsv":
        raise ValueError(f"format {args.format!r} is not supported for verify")
    formula = counting.class_count(args.prime)
    enumerated = enumeration.equivalence_classes(
        args.prime, budget_bits=args.budget_bits, workers=args.workers).count
    burnside = enumeration.burnside_count(args.prime)
    ok = formula == enumerated == burnside
    if args.format == "json":
        print(json.dumps({"p": args.prime, "formula": formula, "enumeration": enumerated,
                          "burnside": burnside, "ok": ok}, separators=(",", ":")))
    else:
        verdict = "OK" if ok else "MISMATCH"
        print(f"formula={formula} enumeration={enumerated} burnside={burnside} {verdict}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_recognize(args) -> int:
    try:
        text = Path(args.file).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read {args.file}: {exc}")
    g = graphs.parse_graph_text(text)
    if args.format == "dot":
        sys.stdout.write(graphs.to_dot(g))
        return EXIT_OK
    aut = perm.automorphisms(g, cap=args.aut_cap)
    transitive = len(perm.orbits(aut, g.n)) == 1
    regular = perm.find_regular_subgroup(aut, g.n)
    if args.format == "json":
        witness = [list(p) for p in regular] if regular is not None else None
        print(json.dumps({"n": g.n, "vertex_transitive": transitive,
                          "cayley": regular is not None, "witness": witness},
                         separators=(",", ":")))
    else:
        print(f"vertex-transitive: {'yes' if transitive else 'no'}, "
              f"cayley: {'yes' if regular is not None else 'no'}")
        if regular is not None:
            print("witness: " + "; ".join(perm.perm_str(p) for p in regular))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.format == "dot" or args.format == "tsv":
        raise ValueError(f"format {args.format!r} is not supported for fixtures")
    results = fixtures.run_all()
    failed = [r.name for r in results if not r.ok]
    if args.format == "json":
        payload = {r.name: {"ok": r.ok, "detail": r.detail, **r.data} for r in results}
        payload["ok"] = not failed
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for r in results:
            print(f"{r.name}: {r.detail}: {'PASS' if r.ok else 'FAIL'}")
        print("fixtures: all passed" if not failed
              else f"fixtures: FAILED ({', '.join(failed)})")
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


_HANDLERS = {
    "count": cmd_count,
    "classes": cmd_classes,
    "verify": cmd_verify,
    "recognize": cmd_recognize,
    "fixtures": cmd_fixtures,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _positive(args)
        return _HANDLERS[args.command](args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_CAP
    except InconsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
