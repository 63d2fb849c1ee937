"""Command-line front end.

Results go to stdout, logs and diagnostics to stderr.  Exit codes: 0 success
or property true, 1 property false or check failure, 2 usage or input error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import catalog as cat
from .feasibility import STRUCTURAL_FILTERS, ParamQuery, enumerate_candidates
from .formats import SgFormatError, encode_graph6, read_sg
from .generate import CENSUS_ENV, ParityError, gen_regular
from .graph import GraphError, is_connected, regularity
from .search import Budget, BudgetExceeded, Classification, SearchReport, classify_range, negative_regularity
from .srsg import CheckFailure, PreconditionError, check_srsg, classify_class, lemma2_check

log = logging.getLogger("sgsr")

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _default_jobs() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def _params_arg(text: str) -> tuple[int | None, int | None, int | None]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected a,b,c, got {text!r}")
    try:
        return tuple(None if p.strip().lower() in ("null", "none", "") else int(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-integer in {text!r}") from None


def _load(path: str):
    try:
        return read_sg(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except (SgFormatError, GraphError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_verify(args) -> int:
    g = _load(args.file)
    try:
        p = check_srsg(g)
    except CheckFailure as exc:
        if args.json:
            _emit({"ok": False, "failure": exc.to_json()})
        else:
            print(f"not strongly regular: {exc}")
        return EXIT_FALSE
    label = classify_class(p)
    _, rho = regularity(g)
    info = {"ok": True, "params": p.to_json(), "class": str(label),
            "connected": is_connected(g), "net_degree": rho}
    if args.json:
        _emit(info)
    else:
        print(f"{p} {label}")
        if not args.quiet:
            print(f"connected={info['connected']} net_degree={'null' if rho is None else rho}")
    return EXIT_OK


def cmd_params(args) -> int:
    g = _load(args.file)
    try:
        p = check_srsg(g)
    except CheckFailure as exc:
        log.error("%s", exc)
        if args.json:
            _emit({"failure": exc.to_json()})
        return EXIT_FALSE
    if args.json:
        _emit(p.to_json())
    else:
        print(p)
    return EXIT_OK


def cmd_lemma2(args) -> int:
    g = _load(args.file)
    try:
        holds, pair = lemma2_check(g)
    except PreconditionError as exc:
        log.error("precondition not met: %s", exc)
        if args.json:
            _emit({"applicable": False, "reason": str(exc)})
        return EXIT_FALSE
    if args.json:
        _emit({"applicable": True, "holds": holds, "pair": list(pair) if pair else None})
    else:
        print("holds" if holds else f"fails at pair {pair}")
    return EXIT_OK if holds else EXIT_FALSE


def cmd_feasible(args) -> int:
    nmin = args.nmin if args.nmin is not None else args.r + 1
    try:
        q = ParamQuery(
            args.r,
            args.net,
            (nmin, args.nmax),
            require_noncomplete=args.noncomplete,
            structural_filters=frozenset(STRUCTURAL_FILTERS) if args.paper_filters else frozenset(),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for c in enumerate_candidates(q):
        _emit(c.to_json())
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        graphs = list(gen_regular(args.n, args.r))
    except (ParityError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    lines = [encode_graph6(g) for g in graphs]
    if args.graph6_out:
        Path(args.graph6_out).write_text("".join(line + "\n" for line in lines))
        log.info("wrote %d graphs to %s", len(lines), args.graph6_out)
    if args.json:
        _emit({"n": args.n, "r": args.r, "count": len(lines), "graph6": lines})
    elif not args.graph6_out:
        for line in lines:
            print(line)
    else:
        print(len(lines))
    return EXIT_OK


def _table(reports: list[SearchReport]) -> str:
    rows = ["   n  mode         graphs  signings  survivors"]
    for rep in reports:
        under = "-" if rep.underlying_count is None else str(rep.underlying_count)
        found = ", ".join(f"{s.params} {s.label}" for s in rep.survivors) or "none"
        flag = "" if rep.complete else "  (incomplete)"
        rows.append(f"{rep.n:4d}  {rep.mode:<11s} {under:>6s}  {rep.signing_count:8d}  {found}{flag}")
    return "\n".join(rows)


def cmd_classify(args) -> int:
    try:
        negative_regularity(args.r, args.net)
    except ParityError as exc:
        raise UsageError(str(exc)) from None
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    if args.nmin is not None and args.nmin > args.nmax:
        raise UsageError("--nmin exceeds --nmax")
    if args.params is not None and not args.constrained:
        raise UsageError("--params requires --constrained")
    source = "census" if args.census or args.source == "census" else "generated"
    if source == "census" and not (args.census or os.environ.get(CENSUS_ENV)):
        raise UsageError(f"census source needs --census DIR or {CENSUS_ENV}")
    if args.census and not Path(args.census).is_dir():
        raise UsageError(f"census directory {args.census} does not exist")
    budget = None
    if args.max_nodes is not None or args.max_seconds is not None:
        budget = Budget(max_nodes=args.max_nodes, max_seconds=args.max_seconds)

    done: list[SearchReport] = []

    def progress(rep: SearchReport) -> None:
        done.append(rep)
        log.info("n=%d: %d survivors (%.1fs)", rep.n, len(rep.survivors), rep.elapsed)

    try:
        result = classify_range(
            args.r,
            args.net,
            args.nmax,
            nmin=args.nmin,
            progress=progress,
            source=source,
            census_dir=args.census,
            constrained=args.constrained,
            targets=[args.params] if args.params is not None else None,
            structural_filters=STRUCTURAL_FILTERS if args.paper_filters else (),
            jobs=args.jobs,
            budget=budget,
        )
        code = EXIT_OK
    except BudgetExceeded as exc:
        log.error("budget exhausted at n=%d; reporting partial results", exc.report.n)
        result = Classification(args.r, args.net, done + [exc.report], [])
        code = EXIT_BUDGET
    except FileNotFoundError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        _emit(result.to_json())
    else:
        print(_table(result.reports))
        print(f"total survivors: {len(result.survivors)}")
        if not args.quiet:
            for note in result.notes:
                print(f"note: {note}")
    return code


def cmd_catalog(args) -> int:
    try:
        entries = cat.build_catalog()
    except cat.FixtureMissingError as exc:
        log.error("%s", exc)
        return EXIT_FALSE
    verdicts = cat.verify_catalog(entries)
    if args.export:
        for path in cat.export_catalog(entries, args.export):
            log.info("wrote %s", path)
    if args.json:
        by_name = {v.name: v for v in verdicts}
        _emit([{**e.sidecar(), "verdict": by_name[e.name].to_json()} for e in entries])
    else:
        for e, v in zip(entries, verdicts):
            status = "pass" if v.ok else "FAIL"
            print(f"{e.name:6s} {str(e.expected):22s} {e.expected_class!s:12s} {e.provenance:15s} {status}")
            for f in v.failures:
                print(f"       {f}")
        print(f"{sum(v.ok for v in verdicts)}/{len(verdicts)} pass")
    return EXIT_OK if all(v.ok for v in verdicts) else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="errors only on stderr")

    ap = argparse.ArgumentParser(prog="sgsr", description="Strongly regular signed graphs: checks and searches.",
                                 parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a .sg file for strong regularity")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("params", parents=[common], help="print (n,r,a,b,c) of a .sg file")
    p.add_argument("file")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("lemma2", parents=[common], help="negative 2-walk parity check on a .sg file")
    p.add_argument("file")
    p.set_defaults(func=cmd_lemma2)

    p = sub.add_parser("feasible", parents=[common], help="candidate parameter tuples, one JSON line each")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--net", type=int, required=True, help="net-degree")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--nmin", type=int)
    p.add_argument("--noncomplete", action="store_true", help="drop the complete order n = r+1")
    p.add_argument("--paper-filters", action="store_true", help="apply the structural divisibility filters")
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("gen", parents=[common], help="connected r-regular graphs up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--graph6-out", metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("classify", parents=[common], help="exhaustive search for net-regular SRSGs")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--net", type=int, required=True, help="net-degree")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--nmin", type=int)
    p.add_argument("--source", choices=("generated", "census"), default="generated")
    p.add_argument("--census", metavar="DIR", help=f"graph6 census directory (default ${CENSUS_ENV})")
    p.add_argument("--constrained", action="store_true", help="build graphs for fixed (a,b,c) directly")
    p.add_argument("--params", type=_params_arg, metavar="A,B,C", help="single constrained target")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--paper-filters", action="store_true", help="apply the structural divisibility filters")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-seconds", type=float)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", parents=[common], help="verify the seven degree-5 graphs")
    p.add_argument("--export", metavar="DIR")
    p.set_defaults(func=cmd_catalog)
    return ap


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = getattr(args, "json", False)
    args.quiet = getattr(args, "quiet", False)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.INFO, format="%(levelname)s: %(message)s",
                        stream=sys.stderr, force=True)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sgsr {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
