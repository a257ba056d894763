"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 resource
cap exceeded.  Output is byte-deterministic for fixed inputs and flags; the
worker count only affects wall-clock time, never output.  Set ROTHE_WORKERS
to use a process pool for the avoider scan (absent means single-threaded).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .counting import (
    count_avoiders,
    gf_coefficients,
    srt_count_formula,
)
from .diagram import dots_of, rothe_diagram
from .eg import gamma_star_with_cells, gamma_with_cells, omega
from .errors import (
    InvalidInputError,
    NotApplicableError,
    ResourceCapError,
)
from .jdt import dual_promotion, promotion
from .lifting import inject_to_reduced_word, lift_full
from .perms import (
    Permutation,
    count_reduced_words,
    enumerate_reduced_words,
    lehmer_code,
)
from .render import diagram_text, tableau_text
from .tableau import (
    count_brt,
    count_srt,
    enumerate_brt,
    enumerate_srt,
    tableau_from_wire,
    tableau_to_wire,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_RESOURCE_CAP = 3


def _emit_json(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _word_text(word) -> str:
    return " ".join(str(a) for a in word)


def _read_tableau(source: str):
    if source == "-":
        text = sys.stdin.read()
    else:
        path = Path(source)
        if not path.exists():
            raise InvalidInputError(f"no such tableau file: {source}")
        text = path.read_text()
    return tableau_from_wire(text)


def _workers() -> int:
    raw = os.environ.get("ROTHE_WORKERS")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise InvalidInputError(f"ROTHE_WORKERS must be an integer, got {raw!r}")


def _cmd_diagram(args) -> int:
    w = Permutation.from_text(args.perm)
    D = rothe_diagram(w)
    if args.figure:
        from .render import render_diagram_figure

        render_diagram_figure(D, args.figure, dots=dots_of(w))
    if args.json:
        _emit_json(
            {
                "perm": str(w),
                "n": w.n,
                "cells": [list(c) for c in D.sorted_cells()],
            }
        )
    else:
        print(diagram_text(D, dots_of(w)))
    return EXIT_OK


def _cmd_code(args) -> int:
    w = Permutation.from_text(args.perm)
    code = lehmer_code(w)
    if args.json:
        _emit_json({"perm": str(w), "code": list(code)})
    else:
        print(_word_text(code))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    w = Permutation.from_text(args.perm)
    cap = {} if args.limit is None else {"cap": args.limit}
    if args.kind == "words":
        if args.count_only:
            result = count_reduced_words(w)
        else:
            items = enumerate_reduced_words(w, **cap)
    elif args.kind == "srt":
        if args.count_only:
            result = count_srt(w)
        else:
            items = enumerate_srt(w, **cap)
    else:
        if args.count_only:
            result = count_brt(w, cap_length=args.cap_length)
        else:
            items = enumerate_brt(w, cap_length=args.cap_length)
            if args.limit is not None and len(items) > args.limit:
                raise ResourceCapError(
                    f"{len(items)} balanced fillings exceed --limit {args.limit}"
                )
    if args.count_only:
        if args.json:
            _emit_json({"perm": str(w), "kind": args.kind, "count": result})
        else:
            print(result)
        return EXIT_OK
    if args.kind == "words":
        if args.json:
            _emit_json(
                {"perm": str(w), "kind": "words", "items": [list(x) for x in items]}
            )
        else:
            for word in items:
                print(_word_text(word))
    else:
        if args.json:
            _emit_json(
                {
                    "perm": str(w),
                    "kind": args.kind,
                    "items": [json.loads(tableau_to_wire(T)) for T in items],
                }
            )
        else:
            for T in items:
                print(tableau_to_wire(T, perm=w))
    return EXIT_OK


def _cmd_promote(args) -> int:
    T, _ = _read_tableau(args.tableau)
    step = dual_promotion if args.dual else promotion
    trace = []
    current = T
    for _ in range(args.steps):
        current, cell = step(current)
        trace.append((cell, current))
    if args.json:
        _emit_json(
            {
                "dual": args.dual,
                "steps": args.steps,
                "cells": [list(cell) for cell, _ in trace],
                "result": json.loads(tableau_to_wire(current)),
            }
        )
        return EXIT_OK
    if args.trace:
        for k, (cell, tab) in enumerate(trace, start=1):
            print(f"step {k}: cell {cell}")
            print(tableau_text(tab))
            print()
    print(tableau_text(current))
    return EXIT_OK


def _cmd_gamma(args, star: bool) -> int:
    T, _ = _read_tableau(args.tableau)
    reader = gamma_star_with_cells if star else gamma_with_cells
    word, cells = reader(T)
    if args.json:
        _emit_json(
            {
                "word": list(word),
                "cells": [list(c) for c in cells],
            }
        )
        return EXIT_OK
    if args.trace:
        step = dual_promotion if star else promotion
        current = T
        for k in range(len(word)):
            current, cell = step(current)
            print(f"step {k + 1}: letter {word[k]}, cell {cells[k]}")
            print(tableau_text(current))
            print()
    print(_word_text(word))
    return EXIT_OK


def _cmd_omega(args) -> int:
    T, _ = _read_tableau(args.tableau)
    word, w = omega(T)
    if args.json:
        _emit_json({"word": list(word), "perm": str(w)})
    else:
        print(f"{_word_text(word)}  ->  {w}")
    return EXIT_OK


def _cmd_lift(args) -> int:
    w = Permutation.from_text(args.perm)
    T, _ = _read_tableau(args.tableau)
    trace, lifted = lift_full(w, T)
    if args.json:
        _emit_json(
            {
                "perm": str(w),
                "suffix": list(trace.suffix),
                "target": str(trace.target),
                "steps": [
                    {
                        "ascent": s.ascent,
                        "added_cell": list(s.added_cell),
                        "path": [list(c) for c in s.path],
                        "result": str(s.result),
                    }
                    for s in trace.steps
                ],
                "result": json.loads(tableau_to_wire(lifted)),
            }
        )
        return EXIT_OK
    if args.trace:
        for k, s in enumerate(trace.steps, start=1):
            print(
                f"step {k}: ascent {s.ascent}, added cell {s.added_cell}, "
                f"path {list(s.path)}, now {s.result}"
            )
    print(f"suffix: {_word_text(trace.suffix) or '(empty)'}")
    print(f"target: {trace.target}")
    print(tableau_text(lifted))
    return EXIT_OK


def _cmd_inject(args) -> int:
    w = Permutation.from_text(args.perm)
    T, _ = _read_tableau(args.tableau)
    word = inject_to_reduced_word(w, T)
    if args.json:
        _emit_json({"perm": str(w), "word": list(word)})
    else:
        print(_word_text(word))
    return EXIT_OK


def _cmd_formula(args) -> int:
    w = Permutation.from_text(args.perm)
    try:
        value = srt_count_formula(w)
    except NotApplicableError as exc:
        if args.json:
            _emit_json({"perm": str(w), "applicable": False, "reason": str(exc)})
        else:
            print(f"not applicable: {exc}")
        return EXIT_OK
    if args.json:
        _emit_json({"perm": str(w), "applicable": True, "count": value})
    else:
        print(value)
    return EXIT_OK


def _cmd_count_avoiders(args) -> int:
    workers = _workers()
    cap = args.limit if args.limit is not None else 10
    series = gf_coefficients(args.max_n) if args.gf_check else None
    rows = []
    for n in range(1, args.max_n + 1):
        brute = count_avoiders(n, cap=cap, workers=workers)
        if series is not None:
            rows.append((n, brute, series[n - 1], brute == series[n - 1]))
        else:
            rows.append((n, brute))
    if args.json:
        if series is not None:
            doc = [
                {"n": n, "brute": b, "series": s, "match": m}
                for n, b, s, m in rows
            ]
        else:
            doc = [{"n": n, "brute": b} for n, b in rows]
        _emit_json(doc)
        return EXIT_OK
    header = ["n", "brute"] + (["series", "match"] if series is not None else [])
    print("\t".join(header))
    for row in rows:
        print("\t".join(str(v) for v in row))
    return EXIT_OK


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    workers = _workers()
    reports = []
    for name in names:
        report = run_suite(
            name,
            max_n=args.max_n,
            max_len_s5=args.cap_length,
            workers=workers if name == "avoiders" else None,
        )
        reports.append(report)
        if not args.json:
            print(report.text())
    ok = all(r.ok for r in reports)
    if args.json:
        _emit_json({"ok": ok, "suites": [r.to_doc() for r in reports]})
    else:
        print(f"verify: {'all suites passed' if ok else 'FAILURES detected'}")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_report(args) -> int:
    from .report import write_report

    paths = write_report(
        args.out_dir,
        max_n=args.max_n,
        avoider_n=args.avoider_n,
        workers=_workers(),
    )
    for path in paths:
        print(f"wrote {path}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rothe",
        description="Rothe diagrams, standard/balanced Rothe tableaux, "
        "jeu de taquin, and reduced-word verification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="structured output")

    p = sub.add_parser("diagram", help="print the Rothe diagram grid")
    p.add_argument("perm")
    p.add_argument("--figure", help="also render the diagram to this image file")
    add_json(p)
    p.set_defaults(func=_cmd_diagram)

    p = sub.add_parser("code", help="print the Lehmer code")
    p.add_argument("perm")
    add_json(p)
    p.set_defaults(func=_cmd_code)

    p = sub.add_parser("enumerate", help="standard/balanced fillings or reduced words")
    p.add_argument("perm")
    p.add_argument("--kind", choices=("srt", "brt", "words"), required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int, default=None, help="enumeration cap")
    p.add_argument(
        "--cap-length", type=int, default=10, help="balanced brute-force length cap"
    )
    add_json(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("promote", help="apply promotion (or dual promotion)")
    p.add_argument("tableau", help="wire-format file, or - for stdin")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--steps", type=int, default=1)
    p.add_argument("--trace", action="store_true")
    add_json(p)
    p.set_defaults(func=_cmd_promote)

    p = sub.add_parser("gamma", help="promotion reading word of a staircase tableau")
    p.add_argument("tableau")
    p.add_argument("--trace", action="store_true")
    add_json(p)
    p.set_defaults(func=lambda a: _cmd_gamma(a, star=False))

    p = sub.add_parser("gamma-star", help="dual-promotion reading word")
    p.add_argument("tableau")
    p.add_argument("--trace", action="store_true")
    add_json(p)
    p.set_defaults(func=lambda a: _cmd_gamma(a, star=True))

    p = sub.add_parser("omega", help="reduced word attached to a Young tableau")
    p.add_argument("tableau")
    add_json(p)
    p.set_defaults(func=_cmd_omega)

    p = sub.add_parser("lift", help="lift a standard Rothe tableau to dominant shape")
    p.add_argument("perm")
    p.add_argument("tableau")
    p.add_argument("--trace", action="store_true")
    add_json(p)
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("inject", help="map a standard Rothe tableau to a reduced word")
    p.add_argument("perm")
    p.add_argument("tableau")
    add_json(p)
    p.set_defaults(func=_cmd_inject)

    p = sub.add_parser("formula", help="closed-form tableau count (equality class)")
    p.add_argument("perm")
    add_json(p)
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("count-avoiders", help="count four-pattern avoiders")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--gf-check", action="store_true", help="compare with the series")
    p.add_argument("--limit", type=int, default=None, help="scan cap on n")
    add_json(p)
    p.set_defaults(func=_cmd_count_avoiders)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all", choices=["all"] + list(SUITES))
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument(
        "--cap-length", type=int, default=None, help="length bound for brt-words"
    )
    add_json(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("report", help="write summary tables and figures")
    p.add_argument("--out-dir", default="reports")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--avoider-n", type=int, default=8)
    p.set_defaults(func=_cmd_report)

    return parser


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE_CAP


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
