"""Command-line front end: analyze, gen-chordal, verify.

Text and JSON outputs carry the same numbers; JSON is schema-stable and
byte-deterministic, so the exit status plus the JSON report are safe to wire
into CI.  Exit codes: 0 all checks passed, 1 a verification check failed,
2 usage/parse/resource errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .betti import BettiTable
from .errors import EmptyInputError, ParseError, TooManyVerticesError
from .exactla import FieldSpec
from .graphs import gen_chordal, is_chordal, clique_complex, read_graph, write_graph
from .hilbert import multiplicity, series_from_f
from .simplicial import read_complex
from .verify import (
    VerificationReport,
    dumps_report,
    froberg_exhaustive,
    verify_chordal_corpus,
    verify_complex,
)

DEFAULT_FIELD = "32003"
DEFAULT_N_CAP = 20


@dataclass(frozen=True)
class CliConfig:
    field: FieldSpec
    n_cap: int
    out: str | None
    fmt: str
    seed: int

    def __post_init__(self):
        if not 1 <= self.n_cap <= 64:
            raise ValueError("--n-cap must be between 1 and 64")


def _parse_field(text: str) -> FieldSpec:
    if text.strip().upper() == "Q":
        return FieldSpec.rationals()
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--field must be a prime or 'Q', got {text!r}")
    try:
        return FieldSpec.prime(p)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _config(args) -> CliConfig:
    return CliConfig(
        field=args.field,
        n_cap=args.n_cap,
        out=args.out,
        fmt=args.format,
        seed=args.seed,
    )


def _emit(text: str, cfg: CliConfig) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_input(path: str, n_cap: int):
    """Load a .cplx complex or a .graph graph (which analyzes as its clique
    complex).  Returns (complex, source_kind, chordal_flag_or_None)."""
    suffix = Path(path).suffix
    if suffix == ".cplx":
        c = read_complex(path)
        chordal = None
        kind = "complex"
    elif suffix == ".graph":
        g = read_graph(path)
        chordal = is_chordal(g)[0]
        c = clique_complex(g)
        kind = "graph"
    else:
        raise ParseError(path, 1, f"unrecognized input extension {suffix!r} (want .cplx or .graph)")
    if c.n > n_cap:
        raise TooManyVerticesError(f"{c.n} vertices exceeds --n-cap {n_cap}")
    return c, kind, chordal


def betti_triangle(table: BettiTable) -> str:
    """Betti table in the standard triangle layout: column i, row j - i.

    A linear resolution shows up as a single nonzero row, which is the whole
    point of drawing it this way.
    """
    pdim = table.pdim
    cells = table.as_dict()
    max_row = max(j - i for (i, j) in cells)
    width = max(len(str(v)) for v in cells.values())
    width = max(width, len(str(pdim)), *(len(str(table.total(i))) for i in range(pdim + 1)))
    head = "       " + " ".join(f"{i:>{width}}" for i in range(pdim + 1))
    total = "total: " + " ".join(f"{table.total(i):>{width}}" for i in range(pdim + 1))
    lines = [head, total]
    for row in range(max_row + 1):
        body = " ".join(
            f"{cells.get((i, row + i), '.'):>{width}}" for i in range(pdim + 1)
        )
        lines.append(f"{row:>5}: {body}")
    return "\n".join(lines)


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def report_text(rep: VerificationReport, source: dict) -> str:
    lines = []
    lines.append(f"input: {source['path']} ({source['kind']}, n={rep.n})")
    if source.get("chordal") is not None:
        lines.append(f"graph chordal: {_yesno(source['chordal'])}")
    lines.append(f"field: {rep.field}")
    lines.append(f"f-vector: ({', '.join(map(str, rep.f.entries))})")
    lines.append(f"h-vector: ({', '.join(map(str, rep.h.entries))})")
    series = series_from_f(rep.f)
    lines.append(f"hilbert series: {series}")
    mc = rep.multiplicity_check
    lines.append(f"multiplicity: {mc.h_sum} (= f_(d-1) = {mc.f_top}: {_yesno(mc.equal)})")
    lines.append(f"betti table over {rep.field}:")
    lines.append(betti_triangle(rep.table))
    lines.append(f"pdim: {rep.pdim}, codim: {rep.codim} (pdim >= codim: {_yesno(rep.pdim >= rep.codim)})")
    if rep.shape.kind == "trivial":
        lines.append("classification: zero ideal (complex is a simplex)")
    elif rep.shape.kind == "general":
        lines.append("classification: general (not pure)")
    else:
        degrees = ", ".join(map(str, rep.shape.degrees))
        if rep.shape.kind == "linear":
            lines.append(f"classification: {rep.shape.t}-linear, degrees ({degrees})")
        else:
            lines.append(f"classification: pure, degrees ({degrees})")
        lines.append(
            f"resolution view: p={rep.resolution.p}, degrees=({degrees}), "
            f"betti=({', '.join(map(str, rep.resolution.betti))})"
        )
        if rep.formula_betti is not None:
            lines.append(f"formula betti: ({', '.join(map(str, rep.formula_betti))})")
        lines.append(f"formula match: {_yesno(all(rep.match))}")
        lines.append(f"series identity residual: {rep.series_residual}")
        lines.append(f"lower bound beta_i >= C(p,i): {_yesno(all(rep.bound_verdicts))}")
        if rep.relation_residuals is not None:
            shown = ", ".join(map(str, rep.relation_residuals)) or "none emitted"
            lines.append(f"h-relation residuals (j > p+t): {shown}")
    if rep.char_zero_agrees is not None:
        lines.append(f"betti table agrees with char 0: {_yesno(rep.char_zero_agrees)}")
        if not rep.char_zero_agrees:
            lines.append("note: field-dependent Betti numbers detected")
    lines.append(f"all identity checks hold: {_yesno(rep.all_identities_hold())}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    cfg = _config(args)
    c, kind, chordal = _load_input(args.path, cfg.n_cap)
    rep = verify_complex(c, cfg.field, cfg.n_cap)
    source = {"path": args.path, "kind": kind, "chordal": chordal}
    if cfg.fmt == "json":
        doc = rep.to_json_dict()
        series = series_from_f(rep.f)
        doc["hilbert_series"] = {
            "numerator": [str(a) for a in series.numerator.coeffs],
            "pole_order": series.pole_order,
        }
        doc["multiplicity"] = str(multiplicity(rep.h))
        doc["source"] = source
        _emit(dumps_report(doc), cfg)
    else:
        _emit(report_text(rep, source), cfg)
    return 0


def cmd_gen_chordal(args) -> int:
    cfg = _config(args)
    if args.n > cfg.n_cap:
        raise TooManyVerticesError(f"n={args.n} exceeds --n-cap {cfg.n_cap}")
    g = gen_chordal(args.n, args.density, args.seed_pos)
    if args.out:
        write_graph(g, args.out)
    else:
        sys.stdout.write("vertices " + " ".join(g.labels) + "\n")
        for u, v in g.edges():
            sys.stdout.write(f"{u} {v}\n")
    return 0


def cmd_verify(args) -> int:
    cfg = _config(args)
    if args.paths:
        reports = []
        texts = []
        ok = True
        for path in args.paths:
            c, kind, chordal = _load_input(path, cfg.n_cap)
            rep = verify_complex(c, cfg.field, cfg.n_cap)
            ok = ok and rep.all_identities_hold()
            reports.append((path, kind, chordal, rep))
            texts.append(report_text(rep, {"path": path, "kind": kind, "chordal": chordal}))
        if cfg.fmt == "json":
            doc = {
                "schema": "srbetti-verify-paths/1",
                "reports": [r.to_json_dict() | {"source": {"path": p, "kind": k, "chordal": ch}}
                            for p, k, ch, r in reports],
                "all_passed": ok,
            }
            _emit(dumps_report(doc), cfg)
        else:
            _emit("\n".join(texts) + f"verdict: {'pass' if ok else 'FAIL'}\n", cfg)
        return 0 if ok else 1

    summary = verify_chordal_corpus(args.count, args.n_max, cfg.seed, cfg.field)
    ok = summary.gate_passed()
    sweep = None
    if args.exhaustive_froberg:
        sweep = froberg_exhaustive(6, cfg.field)
        ok = ok and sweep.passed
    if cfg.fmt == "json":
        doc = summary.to_json_dict()
        if sweep is not None:
            doc["froberg_sweep"] = sweep.to_json_dict()
            doc["all_passed"] = ok
        _emit(dumps_report(doc), cfg)
    else:
        lines = [
            f"chordal corpus: count={summary.count} n_max={summary.n_max} "
            f"seed={summary.seed} field={summary.field}"
        ]
        for name, counts in summary.checks.items():
            lines.append(f"  {name:16s} pass={counts.passed:<4d} fail={counts.failed:<4d} n/a={counts.na}")
        for name, kind, flag in summary.converse:
            lines.append(f"  converse {name}: {kind} (not linear: {_yesno(flag)})")
        if summary.first_failure:
            lines.append(f"  first failing complex: {summary.first_failure}")
        if sweep is not None:
            lines.append(
                f"exhaustive sweep n={sweep.n}: {sweep.checked} graphs, "
                f"{len(sweep.mismatches)} mismatches"
            )
        lines.append(f"verdict: {'pass' if ok else 'FAIL'}")
        _emit("\n".join(lines) + "\n", cfg)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srbetti",
        description="Betti tables, Hilbert series and h-vector identities of face rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--field", type=_parse_field, default=_parse_field(DEFAULT_FIELD),
                       help="coefficient field: a prime p or Q (default 32003)")
        p.add_argument("--n-cap", type=int, default=DEFAULT_N_CAP,
                       help="vertex cap for the subset sweep (default 20, max 64)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=7)
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")

    p_an = sub.add_parser("analyze", help="full analysis of a .cplx complex or .graph clique complex")
    p_an.add_argument("path")
    common(p_an)
    p_an.set_defaults(func=cmd_analyze)

    p_gen = sub.add_parser("gen-chordal", help="write a seeded random chordal graph")
    p_gen.add_argument("n", type=int)
    p_gen.add_argument("density", type=float)
    p_gen.add_argument("seed_pos", type=int, metavar="seed")
    common(p_gen)
    p_gen.set_defaults(func=cmd_gen_chordal)

    p_ver = sub.add_parser("verify", help="verify identities on files or a seeded corpus")
    p_ver.add_argument("paths", nargs="*", help="explicit .cplx/.graph files; empty = corpus mode")
    p_ver.add_argument("--count", type=int, default=50, help="corpus size (default 50)")
    p_ver.add_argument("--n-max", type=int, default=9, help="max vertices per corpus graph (default 9)")
    p_ver.add_argument("--exhaustive-froberg", action="store_true",
                       help="also sweep all graphs on 6 vertices (minutes)")
    common(p_ver)
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, EmptyInputError, TooManyVerticesError, ValueError, OSError) as exc:
        print(f"srbetti: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
