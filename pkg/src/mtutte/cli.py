"""``mtutte`` command-line front end.

Exit codes: 0 success, 1 parse or validation error, 2 failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys

from .matroid import MatroidError, subset_key
from .perspective import dawson_partition
from .poly import canonical_text
from .tables import table, table_csv
from .textio import ParseError, load, parse
from .tutte import (
    FAMILIES,
    VARIANTS,
    derivative_gf,
    expansion_family,
    five_var,
    tutte_corank_nullity,
)
from .verify import CHECKS, VerificationReport, random_instance, run_checks


class _Failure(Exception):
    """Verification ran but did not pass."""


def _read(path: str):
    if path == "-":
        return parse(sys.stdin.read())
    return load(path)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mtutte", description="Tutte polynomials of matroids and matroid perspectives.")
    ap.add_argument("--json", action="store_true", help="emit a JSON document {command, input, result}")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("tutte", help="Tutte polynomial (2 or 3 variables)")
    s.add_argument("file")
    s = sub.add_parser("derive", help="partial derivative as an activity generating function")
    s.add_argument("file")
    s.add_argument("-p", type=int, default=0, help="order in x")
    s.add_argument("-q", type=int, default=0, help="order in y")
    s.add_argument("--variant", choices=sorted(VARIANTS), default="cr-nl")
    s = sub.add_parser("expand", help="per-subset summands of one expansion family")
    s.add_argument("file")
    s.add_argument("--family", required=True, choices=FAMILIES)
    s = sub.add_parser("partition", help="Dawson intervals")
    s.add_argument("file")
    s = sub.add_parser("fivevar", help="five-variable expansion")
    s.add_argument("file")
    s = sub.add_parser("verify", help="run the brute-force checks")
    s.add_argument("file", nargs="?")
    s.add_argument("--checks", default="all", help="comma-separated check names, or 'all'")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--random", type=int, default=0, metavar="N", help="also check N random perspectives")
    s = sub.add_parser("table", help="CSV table reproduction")
    s.add_argument("file")
    s.add_argument("--which", type=int, required=True, choices=range(1, 6))
    return ap


def _execute(args) -> tuple[object, str]:
    """Return ``(json result, text output)`` for a parsed command line."""
    cmd = args.command
    if cmd == "verify":
        return _verify(args)
    p = _read(args.file).perspective()
    g = p.ground
    if cmd == "tutte":
        text = canonical_text(tutte_corank_nullity(p))
        return {"polynomial": text}, text
    if cmd == "derive":
        text = canonical_text(derivative_gf(p, args.p, args.q, args.variant))
        return {"p": args.p, "q": args.q, "variant": args.variant, "polynomial": text}, text
    if cmd == "fivevar":
        text = canonical_text(five_var(p))
        return {"polynomial": text}, text
    if cmd == "expand":
        summands, total = expansion_family(p, args.family)
        summands.sort(key=lambda s: subset_key(s.subset))
        items = [{"subset": g.fmt(s.subset), "summand": canonical_text(s.monomial)} for s in summands]
        lines = [f"{it['subset']}  {it['summand']}" for it in items]
        lines.append(f"total  {canonical_text(total)}")
        return {"family": args.family, "summands": items, "total": canonical_text(total)}, "\n".join(lines)
    if cmd == "partition":
        items = [
            {"witness": g.fmt(iv.witness), "bottom": g.fmt(iv.bottom), "top": g.fmt(iv.top), "size": len(iv)}
            for iv in dawson_partition(p)
        ]
        lines = [f"{it['witness']}  [{it['bottom']}, {it['top']}]" for it in items]
        return items, "\n".join(lines)
    if cmd == "table":
        header, rows = table(p, args.which)
        return {"which": args.which, "header": header, "rows": rows}, table_csv(p, args.which).rstrip("\n")
    raise AssertionError(cmd)


def _verify(args):
    names = list(CHECKS) if args.checks == "all" else [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check(s) {', '.join(unknown)}; known: {', '.join(CHECKS)}")
    if args.file is None and not args.random:
        raise ValueError("verify needs FILE, --random N, or both")
    report = VerificationReport()
    if args.file is not None:
        report.extend(run_checks(_read(args.file).perspective(), names, instance=args.file))
    for i in range(args.random):
        kind = "matroid" if i % 2 else "perspective"
        n = 1 + (args.seed + i) % 8
        p = random_instance(args.seed + i, n, kind)
        report.extend(run_checks(p, names, instance=f"random {kind} seed={args.seed + i} n={n}"))
    result, text = report.to_dict(), report.text()
    if not report.passed:
        raise _Failure(result, text)
    return result, text


def run(argv: list[str] | None = None, stderr=None) -> tuple[int, str]:
    """Run one command; returns ``(exit code, stdout text)``.  Diagnostics go to ``stderr``."""
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse already wrote its message
        return (0 if exc.code == 0 else 1), ""
    code = 0
    try:
        result, text = _execute(args)
    except _Failure as exc:
        result, text = exc.args
        code = 2
        n_fail = sum(not c["passed"] for c in result["checks"])
        print(f"mtutte: verification failed ({n_fail} failing checks)", file=stderr)
    except (ParseError, MatroidError, ValueError, OSError) as exc:
        print(f"mtutte: error: {exc}", file=stderr)
        return 1, ""
    if args.json:
        text = json.dumps({"command": args.command, "input": getattr(args, "file", None), "result": result}, indent=2, ensure_ascii=False)
    return code, text + "\n"


def main(argv: list[str] | None = None) -> int:
    code, out = run(argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
