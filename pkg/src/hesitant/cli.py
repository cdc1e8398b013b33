"""Command-line front end.

Every operand that takes a hesitant fuzzy element accepts a JSON file path,
an inline JSON literal such as ``'[0.3, 0.4]'``, or the name of a bundled
fixture. Exit status is 0 on success, 1 on domain errors and 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from . import jsonio
from .decision import EvaluationConfig, bundled_fixture, evaluate, preference_matrix
from .dominance import DominanceKind, dominance, kernel_matrix
from .errors import HesitantError, ParseError
from .grades import THFE, strictly_below
from .lattice import join0, meet0
from .orders import OrderKind, compare
from .properties import (
    NAMED_SCORES,
    check_em,
    check_gardenfors,
    check_smu,
    check_wmu,
    grid_family,
    parse_grid,
)
from .scores import ScoreKind, score

ORDER_CHOICES = ["list", "pes", "opt", "right", "left", "sym"]

INTERVAL_SCORES: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "midpoint": lambda a, b: (a + b) / 2,
    "left": lambda a, b: a,
    "right": lambda a, b: b,
}
# set-score names map onto their natural interval counterparts
INTERVAL_ALIASES = {"mean": "midpoint", "min": "left", "max": "right"}


def _read(arg: str) -> Any:
    try:
        return jsonio.load_document(arg)
    except ParseError:
        name = Path(arg).name
        try:
            text = bundled_fixture(name)
        except HesitantError:
            raise ParseError(f"{arg!r} is neither a readable JSON file, an inline JSON literal, nor a bundled fixture")
        return jsonio.loads(text)


class _Out:
    def __init__(self, fmt: str, precision: int, stream):
        self.fmt = fmt
        self.precision = precision
        self.stream = stream

    def num(self, v: Any) -> str:
        if isinstance(v, Fraction):
            return jsonio.render(v, self.precision)
        if isinstance(v, float):
            return f"{v:.{self.precision}f}"
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v)

    def emit_json(self, doc: Any) -> None:
        print(jsonio.dumps(doc, self.precision), file=self.stream)

    def emit_rows(self, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
        cells = [[self.num(v) for v in row] for row in rows]
        if self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(header)
            w.writerows(cells)
            self.stream.write(buf.getvalue())
            return
        widths = [max(len(str(h)), *(len(r[i]) for r in cells)) if cells else len(str(h)) for i, h in enumerate(header)]
        print("  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip(), file=self.stream)
        print("  ".join("-" * w for w in widths), file=self.stream)
        for r in cells:
            print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip(), file=self.stream)


def _cmd_compare(args, out: _Out) -> None:
    a, b = jsonio.to_hfe(_read(args.a)), jsonio.to_hfe(_read(args.b))
    order = OrderKind(args.order)
    relation = compare(order, a, b)
    doc = {
        "order": order.value,
        "a": str(a),
        "b": str(b),
        "relation": relation,
        "leq": relation in ("leq", "equal"),
        "geq": relation in ("geq", "equal"),
    }
    if out.fmt == "json":
        out.emit_json(doc)
    else:
        out.emit_rows(list(doc), [list(doc.values())])


def _cmd_lattice(args, out: _Out) -> None:
    a, b = jsonio.to_thfe(_read(args.a)), jsonio.to_thfe(_read(args.b))
    result = join0(a, b) if args.op == "join" else meet0(a, b)
    if out.fmt == "json":
        out.emit_json({"op": args.op, "a": a, "b": b, "result": result})
    else:
        out.emit_rows(["op", "a", "b", "result"], [[args.op, str(a), str(b), str(result)]])


def _cmd_score(args, out: _Out) -> None:
    a = jsonio.to_thfe(_read(args.a))
    kind = ScoreKind(args.kind)
    value = score(kind, a)
    if out.fmt == "json":
        out.emit_json({"kind": kind.value, "set": a, "score": value})
    else:
        out.emit_rows(["kind", "set", "score"], [[kind.value, str(a), value]])


def _em_sample(grid: list[Fraction]) -> list[tuple]:
    sample = []
    for i, a in enumerate(grid):
        for j in range(i, len(grid)):
            b = grid[j]
            for b2 in grid[j + 1:]:
                sample.append(((a, b), (a, b2)))
            for a2 in grid[i + 1: j + 1]:
                sample.append(((a, b), (a2, b)))
    return sample


def _cmd_check(args, out: _Out) -> None:
    grid = parse_grid(args.grid)
    prop = args.property
    if prop == "em":
        name = INTERVAL_ALIASES.get(args.score, args.score)
        if name not in INTERVAL_SCORES:
            raise HesitantError(f"no interval score named {args.score!r}; choose from {sorted(INTERVAL_SCORES)}")
        report = check_em(INTERVAL_SCORES[name], _em_sample(grid))
        instances = None
    else:
        if args.score not in NAMED_SCORES:
            raise HesitantError(f"no score named {args.score!r}; choose from {sorted(NAMED_SCORES)}")
        s = NAMED_SCORES[args.score]
        family = grid_family(grid)
        if prop in ("smu", "wmu"):
            instances = [(x, y) for x in family for y in family if strictly_below(x, y)]
            report = (check_smu if prop == "smu" else check_wmu)(s, instances)
        else:
            instances = [(a, x) for a in family for x in grid if x not in a]
            report = check_gardenfors(s, instances, strict=(prop == "g"))
    doc = {
        "property": report.property.value,
        "score": args.score,
        "grid": [g for g in grid],
        "holds": report.holds_on_sample,
        "counterexample": None if report.counterexample is None else [
            str(c) if isinstance(c, THFE) else c for c in report.counterexample
        ],
    }
    if out.fmt == "json":
        out.emit_json(doc)
    else:
        ce = "" if doc["counterexample"] is None else " ; ".join(
            c if isinstance(c, str) else out.num(c) if not isinstance(c, tuple) else f"[{out.num(c[0])}, {out.num(c[1])}]"
            for c in doc["counterexample"]
        )
        out.emit_rows(["property", "score", "holds", "counterexample"], [[doc["property"], args.score, report.holds_on_sample, ce]])


def _cmd_dominance(args, out: _Out) -> None:
    x, y = jsonio.to_thfe(_read(args.control)), jsonio.to_thfe(_read(args.y))
    kind = DominanceKind(args.kind)
    value = dominance(kind, x, y)
    matrix = kernel_matrix(kind, x, y) if args.matrix else None
    if out.fmt == "json":
        doc: dict[str, Any] = {"kind": kind.value, "control": x, "set": y, "value": value}
        if matrix is not None:
            doc["matrix"] = {"rows": list(matrix.row_grades), "cols": list(matrix.col_grades), "entries": matrix.entries}
        out.emit_json(doc)
        return
    out.emit_rows(["kind", "control", "set", "value"], [[kind.value, str(x), str(y), value]])
    if matrix is not None:
        print(file=out.stream)
        header = ["x \\ y"] + [out.num(g) for g in matrix.col_grades]
        out.emit_rows(header, [[g, *row] for g, row in zip(matrix.row_grades, matrix.entries)])


def _cmd_prefmatrix(args, out: _Out) -> None:
    doc = _read(args.alts)
    if isinstance(doc, dict):
        doc = doc.get("alternatives")
    if not isinstance(doc, list) or not doc:
        raise ParseError("expected a nonempty array of alternatives (each an array of grades)")
    if all(isinstance(item, dict) and "values" in item for item in doc):
        labels = [str(item.get("id", i + 1)) for i, item in enumerate(doc)]
        alts = [jsonio.to_thfe(item["values"]) for item in doc]
    else:
        labels = [f"A{i + 1}" for i in range(len(doc))]
        alts = [jsonio.to_thfe(item) for item in doc]
    kind = DominanceKind(args.kind)
    pm = preference_matrix(kind, alts)
    if out.fmt == "json":
        out.emit_json({"kind": kind.value, "labels": labels, "alternatives": alts, "matrix": pm.entries})
    else:
        out.emit_rows([""] + labels, [[lab, *row] for lab, row in zip(labels, pm.entries)])


def _cmd_evaluate(args, out: _Out) -> None:
    kind = DominanceKind(args.kind) if args.kind else None
    config = EvaluationConfig.from_dict(_read(args.config), kind)
    report = evaluate(config)
    if out.fmt == "json":
        out.emit_json({
            "kind": report.kind.value,
            "criteria": list(report.criteria),
            "rows": [
                {"id": r.id, "values": dict(zip(report.criteria, r.values)), "aggregate": r.aggregate, "rank": r.rank, "tied": r.tied}
                for r in report.rows
            ],
            "ranking": [r.id for r in report.ranking],
            "ties": report.has_ties,
        })
        return
    label = report.kind.value.upper()
    if out.fmt == "csv":
        out.emit_rows(
            ["alternative", *(f"{label}({c})" for c in report.criteria), "aggregate", "rank"],
            [[r.id, *r.values, r.aggregate, r.rank] for r in report.rows],
        )
        return
    out.emit_rows(["Project", *(f"{label} ({c})" for c in report.criteria)], [[r.id, *r.values] for r in report.rows])
    print(file=out.stream)
    out.emit_rows(
        [f"Rank ({label})", "Project", f"Average ({label})"],
        [[r.rank, r.id + (" (tie)" if r.tied else ""), r.aggregate] for r in report.ranking],
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", choices=["table", "csv", "json"], default="table", help="output format")
    common.add_argument("--precision", type=int, default=None, help="decimal places shown (default: $HL_PRECISION or 4)")

    p = argparse.ArgumentParser(prog="hesitant", description="Orders, scores and dominance on hesitant fuzzy elements.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compare", parents=[common], help="compare two HFEs under an order")
    c.add_argument("--order", choices=ORDER_CHOICES, required=True)
    c.add_argument("a")
    c.add_argument("b")
    c.set_defaults(func=_cmd_compare)

    c = sub.add_parser("lattice", parents=[common], help="symmetric-order meet or join of two finite HFEs")
    c.add_argument("--op", choices=["meet", "join"], required=True)
    c.add_argument("a")
    c.add_argument("b")
    c.set_defaults(func=_cmd_lattice)

    c = sub.add_parser("score", parents=[common], help="score a finite HFE")
    c.add_argument("--kind", choices=[k.value for k in ScoreKind], required=True)
    c.add_argument("a")
    c.set_defaults(func=_cmd_score)

    c = sub.add_parser("check", parents=[common], help="check a normative property on all subsets of a grid")
    c.add_argument("--property", choices=["smu", "wmu", "g", "wg", "em"], required=True)
    c.add_argument("--score", required=True, help="mean, gmean, min, max, product, const; for em: midpoint, left, right")
    c.add_argument("--grid", default="0:1:0.25", help="start:stop:step or comma-separated grades")
    c.set_defaults(func=_cmd_check)

    c = sub.add_parser("dominance", parents=[common], help="dominance of a set relative to a control set")
    c.add_argument("--kind", choices=[k.value for k in DominanceKind], required=True)
    c.add_argument("--control", required=True)
    c.add_argument("--matrix", action="store_true", help="also print the kernel matrix")
    c.add_argument("y")
    c.set_defaults(func=_cmd_dominance)

    c = sub.add_parser("prefmatrix", parents=[common], help="fuzzy preference relation of a list of alternatives")
    c.add_argument("--kind", choices=[k.value for k in DominanceKind], required=True)
    c.add_argument("alts")
    c.set_defaults(func=_cmd_prefmatrix)

    c = sub.add_parser("evaluate", parents=[common], help="rank alternatives against per-criterion baselines")
    c.add_argument("--kind", choices=[k.value for k in DominanceKind], default=None)
    c.add_argument("config")
    c.set_defaults(func=_cmd_evaluate)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        precision = args.precision if args.precision is not None else jsonio.default_precision()
        if precision < 0:
            raise ParseError("precision must be nonnegative")
        args.func(args, _Out(args.out, precision, stdout))
    except (HesitantError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
