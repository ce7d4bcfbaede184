"""Command-line front end.

Subcommands: size, bounds, curves, search, construct, verify, conjecture.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 enumeration
cap exceeded.  The global cap honours SWCODES_MAX_ENUM.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import bounds as bnd
from . import codes as cod
from . import compositions as cmp
from . import galois
from .limits import EnumerationCapError
from .spaces import bounded_space_size, constant_space_size

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        json.dump({"schema": 1, "rows": rows}, out, indent=2, default=str)
        out.write("\n")
    elif fmt == "csv":
        if rows:
            writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()))
            writer.writeheader()
            writer.writerows(rows)
    else:
        for row in rows:
            out.write("  ".join(f"{k}={v}" for k, v in row.items()) + "\n")


def _open_out(path):
    return open(path, "w") if path else sys.stdout


def cmd_size(args, out) -> int:
    if args.mode == "exact":
        size = constant_space_size(args.n, args.q, args.r)
    else:
        size = bounded_space_size(args.n, args.q, args.r)
    rate = math.log2(size) / (args.n * math.log2(args.q)) if size else float("-inf")
    _emit([{"n": args.n, "q": args.q, "r": args.r, "mode": args.mode,
            "size": size, "rate": rate}], args.format, out)
    return EXIT_OK


def _load_oracle(args) -> bnd.CCOracle | None:
    oracle = bnd.CCOracle()
    loaded = False
    for spec in args.ccc_oracle or []:
        comp_text, _, value = spec.rpartition(":")
        if not comp_text:
            raise ValueError(f"bad --ccc-oracle value {spec!r}, want 'composition:count'")
        oracle.add(comp_text, int(value), source="cli")
        loaded = True
    if getattr(args, "oracle_file", None):
        with open(args.oracle_file) as fh:
            data = json.load(fh)
        for e in data.get("entries", []):
            oracle.add(e["composition"], e["value"], e.get("d"),
                       e.get("source", "file"))
            loaded = True
    return oracle if loaded else None


def cmd_bounds(args, out) -> int:
    oracle = _load_oracle(args)
    limit = 1000 if args.audit_exhaustive else 0
    result = bnd.best_bounds(args.n, args.q, args.d, args.r, args.mode,
                             oracle, exhaustive_limit=limit)
    rows = []
    for b in result.lower_candidates + result.upper_candidates:
        rows.append({"provenance": b.provenance, "direction": b.direction,
                     "value": b.value, "exact": b.exact,
                     "inputs": json.dumps(b.inputs)})
    rows.append({"provenance": "best-lower", "direction": "lower",
                 "value": result.lower.value, "exact": result.lower.exact,
                 "inputs": result.lower.provenance})
    rows.append({"provenance": "best-upper", "direction": "upper",
                 "value": result.upper.value, "exact": result.upper.exact,
                 "inputs": result.upper.provenance})
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_curves(args, out) -> int:
    if (args.delta is None) == (args.rho is None):
        raise ValueError("give exactly one of --delta / --rho")
    if args.delta is not None:
        rows = bnd.rate_curves_fixed_delta(args.q, args.delta, args.grid,
                                           args.growing_q)
    else:
        rows = bnd.rate_curves_fixed_rho(args.q, args.rho, args.grid,
                                         args.growing_q)
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    family = cmp.search_anticode(args.n, args.q, args.r, args.d, args.strategy)
    rows = [{"composition": c.to_exponents(), "parts": json.dumps(list(c.parts))}
            for c in family]
    sep = family.pairwise_min_dplus()
    _emit(rows, args.format, out)
    print(f"anticode size {len(family)} min pairwise distance "
          f"{sep if sep is not None else 'n/a'}", file=sys.stderr)
    return EXIT_OK


def cmd_construct(args, out) -> int:
    if args.kind == "rs":
        F = galois.field(args.field_size)
        code = cod.rs_code(F, args.k)
    elif args.kind == "rs-csw":
        F = galois.field(args.field_size)
        size = cod.rs_csw_subcode_size(F, args.k, args.r)
        from .limits import check_cap
        check_cap("materialising constant-weight subcode", size, None)
        words = list(cod.iter_rs_csw_subcode(F, args.k, args.r))
        code = cod.Code(words, F.q)
        if code.symbol_weights() != {args.r}:
            print("audit failed: constructed words not of constant weight",
                  file=sys.stderr)
            return EXIT_VERIFY
    elif args.kind == "uv":
        base, _ = cod.Code.from_text(open(args.code).read())
        fpa, _ = cod.Code.from_text(open(args.fpa).read())
        code = cod.uv_construct(base, fpa)
    elif args.kind == "concat":
        outer, _ = cod.Code.from_text(open(args.outer).read())
        inner, _ = cod.Code.from_text(open(args.inner).read())
        code = cod.concat_construct(outer, inner)
    else:
        raise ValueError(f"unknown construction {args.kind!r}")
    text = code.to_text()  # header computation audits distance + weight
    out.write(text)
    print(f"constructed {len(code)} words, n={code.n} q={code.q} "
          f"d={code.min_distance() if len(code) > 1 else code.n} "
          f"weights={sorted(code.symbol_weights())}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    text = open(args.code).read()
    if not text.strip():
        print("empty code file", file=sys.stderr)
        return EXIT_USAGE
    code, claims = cod.Code.from_text(text)
    failures = []
    d = code.min_distance() if len(code) > 1 else None
    weights = code.symbol_weights()
    if "d" in claims and d is not None and d < claims["d"]:
        failures.append(f"claimed distance {claims['d']} but measured {d}")
    if "r" in claims and max(weights) != claims["r"]:
        failures.append(f"claimed weight {claims['r']} but measured {max(weights)}")
    if args.expect_d is not None and (d is None or d < args.expect_d):
        failures.append(f"expected distance >= {args.expect_d}, measured {d}")
    if args.expect_r is not None and weights != {args.expect_r}:
        failures.append(f"expected constant weight {args.expect_r}, "
                        f"measured {sorted(weights)}")
    report = {"schema": 1, "n": code.n, "q": code.q, "size": len(code),
              "min_distance": d, "symbol_weights": sorted(weights),
              "failures": failures}
    json.dump(report, out, indent=2)
    out.write("\n")
    return EXIT_VERIFY if failures else EXIT_OK


def cmd_conjecture(args, out) -> int:
    if args.sweep_max_q is not None:
        reports = []
        for q in range(4, args.sweep_max_q + 1):
            try:
                F = galois.field(q)
            except ValueError:
                continue
            for k, r in cod.conjecture_sweep_pairs(q):
                reports.append(cod.conjecture_check(F, k, r))
        payload = {"schema": 1, "sweep_max_q": args.sweep_max_q,
                   "counterexample": any(rep["counterexample"] for rep in reports),
                   "reports": reports}
    else:
        if args.q is None or args.k is None or args.r is None:
            raise ValueError("give --q --k --r or --sweep-max-q")
        payload = cod.conjecture_check(galois.field(args.q), args.k, args.r)
    json.dump(payload, out, indent=2)
    out.write("\n")
    return EXIT_VERIFY if payload["counterexample"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="swcodes",
        description="sizes, bounds, searches and constructions for "
                    "symbol-weight codes")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp):
        sp.add_argument("--format", choices=["text", "csv", "json"],
                        default="text")
        sp.add_argument("--out", help="output file (default stdout)")

    sp = sub.add_parser("size", help="exact space size and rate")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--mode", choices=["exact", "bounded"], default="exact")
    add_common(sp)

    sp = sub.add_parser("bounds", help="provenance-tagged bound table")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--mode", choices=["exact", "bounded"], default="exact")
    sp.add_argument("--ccc-oracle", action="append", metavar="COMP:COUNT",
                    help="known constant-composition code size, e.g. '1^4 5^4:4096'")
    sp.add_argument("--oracle-file", help="JSON file of oracle entries")
    sp.add_argument("--audit-exhaustive", action="store_true",
                    help="also brute-force the exact optimum on tiny instances")
    add_common(sp)

    sp = sub.add_parser("curves", help="rate-curve samples for figures")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--delta", type=float)
    sp.add_argument("--rho", type=float)
    sp.add_argument("--grid", type=int, default=200)
    sp.add_argument("--growing-q", action="store_true")
    add_common(sp)
    sp.set_defaults(format="csv")

    sp = sub.add_parser("search", help="anticode search over compositions")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--strategy", choices=["greedy", "exhaustive"],
                    default="greedy")
    add_common(sp)

    sp = sub.add_parser("construct", help="build a code and write it out")
    sp.add_argument("--kind", choices=["rs", "rs-csw", "uv", "concat"],
                    required=True)
    sp.add_argument("--field-size", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--code", help="constant-weight code file (uv)")
    sp.add_argument("--fpa", help="frequency permutation array file (uv)")
    sp.add_argument("--outer", help="outer code file (concat)")
    sp.add_argument("--inner", help="inner FPA file (concat)")
    add_common(sp)

    sp = sub.add_parser("verify", help="audit a code file")
    sp.add_argument("--code", required=True)
    sp.add_argument("--expect-d", type=int)
    sp.add_argument("--expect-r", type=int)
    add_common(sp)

    sp = sub.add_parser("conjecture", help="weight-r factorisation search")
    sp.add_argument("--q", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--sweep-max-q", type=int)
    add_common(sp)

    return p


COMMANDS = {
    "size": cmd_size,
    "bounds": cmd_bounds,
    "curves": cmd_curves,
    "search": cmd_search,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    out = _open_out(args.out)
    try:
        return COMMANDS[args.command](args, out)
    except EnumerationCapError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, FileNotFoundError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
