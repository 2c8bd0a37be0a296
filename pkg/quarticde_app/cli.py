#!/usr/bin/env python3
#
###################################################################
# Project: QuarticDE
# File: quarticde_app/cli.py
# Purpose: Batch command line: solve, method2, search, survey, parametric,
#          families, verify, twist-scan, sweep, conjecture2.
#
# Description of code and how it works:
# - argparse front end; flags override QUARTICDE_* settings for one run and
#   are merged into a RunConfig (pydantic) before dispatch.
# - stdout carries records only: JSON lines by default, or one aligned
#   table with --output table. Logs go to stderr.
# - Every solution record is re-verified by exact substitution before it is
#   written.
# - Exit codes: 0 ok (empty results included), 1 verify on a non-solution,
#   2 invalid input, 3 resource refusal, 4 internal verification failure.
#
# Author: QuarticDE maintainers
# Created: 2026-10-17
#
# Version: 0.4.0
# Last Modified: 2026-10-17 by QuarticDE maintainers
#
# Revision History:
# - 0.4.0 (2026-10-17): sweep + conjecture2 subcommands; catalog defaults.
# - 0.3.0 (2026-10-17): --target / --twist / --integerize rescale records.
# - 0.2.0 (2026-10-17): search / survey with budgets and engines.
# - 0.1.0 (2026-10-17): solve / method2 / verify.
###################################################################
#
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from pydantic import BaseModel, ValidationError

from . import method_one, method_two, parametric, search
from .connectors.catalog import load_catalog, sweep_catalog
from .connectors.generators import load_generators
from .errors import (
    EXIT_INVALID_INPUT,
    DomainError,
    EXIT_NOT_VALID,
    EXIT_OK,
    InvalidInput,
    QuarticDEError,
    VerificationFailure,
)
from .exactnum import fourth_power_part, parse_pair, parse_rational, parse_rational_list
from .logging_config import setup_logging
from .models import Quadruple
from .schemas import (
    Conjecture2MatchOut,
    Conjecture2Out,
    FamilyOut,
    HValueOut,
    QuadrupleOut,
    RunConfig,
    SearchHitOut,
    SurveyRowOut,
    SweepEntryOut,
    TwistScanOut,
    VerifyOut,
)
from .settings import get_settings
from .weierstrass import Affine, CurveW, point_on

log = logging.getLogger("quarticde")

_NEGATIVE_VALUE_RE = re.compile(r"^-[0-9.]")

_GLOBAL_KEYS = ("command", "output", "log_level", "pair_budget", "threads", "segments")


# --------- Output -------------------------------------------------------------

class RecordWriter:
    def __init__(self, out: TextIO, mode: str = "json"):
        self.out = out
        self.mode = mode
        self.rows: List[Dict[str, object]] = []
        self.count = 0

    def emit(self, record: BaseModel) -> None:
        self.count += 1
        if self.mode == "json":
            self.out.write(record.json() + "\n")
        else:
            self.rows.append(record.dict())

    def close(self) -> None:
        if self.mode == "table" and self.rows:
            self.out.write(render_table(self.rows))
        self.out.flush()


def _cell(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "; ".join(_cell(v) if not isinstance(v, dict) else json.dumps(v) for v in value) or "-"
    return str(value)


def render_table(rows: Sequence[Dict[str, object]]) -> str:
    columns: List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells)
    return "\n".join(lines) + "\n"


def emit_quadruple(writer: RecordWriter, quad: Quadruple) -> None:
    if not search.verify(quad.h, *quad.coords):
        raise VerificationFailure(f"refusing to write invalid {quad}")
    writer.emit(QuadrupleOut.from_quadruple(quad))


# --------- Input helpers ------------------------------------------------------

def _generators(args: Dict[str, object], curve: CurveW) -> List[Affine]:
    if args.get("gen_file"):
        return load_generators(str(args["gen_file"]), curve)
    if args.get("gen"):
        return [point_on(curve, *parse_pair(str(args["gen"])))]
    raise InvalidInput("a generator is required: --gen x,y or --gen-file PATH")


def _parse_range(text: str, sep: str) -> Tuple[int, int]:
    lo, _, hi = (text or "").partition(sep)
    try:
        return int(lo), int(hi)
    except ValueError:
        raise InvalidInput(f"expected LO{sep}HI, got {text!r}") from None


def _rescaled(quad: Quadruple, args: Dict[str, object]) -> List[Quadruple]:
    """Extra records requested by --twist / --integerize / --target, plus auto descale."""
    out: List[Quadruple] = []
    if args.get("twist"):
        out.append(method_one.descale_twist(quad, parse_rational(str(args["twist"]))))
    elif quad.h.denominator == 1 and not args.get("target"):
        t = fourth_power_part(quad.h)
        if t > 1:
            out.append(method_one.descale_twist(quad, t))
    if args.get("integerize") and quad.h.denominator != 1:
        out.append(method_one.integerize(quad))
    if args.get("target"):
        out.append(method_one.retarget(quad, parse_rational(str(args["target"]))))
    return out


# --------- Commands -----------------------------------------------------------

def _cmd_solve(config: RunConfig, writer: RecordWriter) -> int:
    args = config.args
    h = parse_rational(str(args["h"]))
    curve = method_one.build_curve(h)
    for gen in _generators(args, curve):
        for quad in method_one.solve(h, gen, int(args["multiples"])):
            emit_quadruple(writer, quad)
            for extra in _rescaled(quad, args):
                emit_quadruple(writer, extra)
    return EXIT_OK


def _cmd_method2(config: RunConfig, writer: RecordWriter) -> int:
    args = config.args
    z = parse_rational(str(args["z"]))
    curve = method_two.build_eprime(z)
    for gen in _generators(args, curve):
        for hv in method_two.enumerate_HZ(z, gen, int(args["multiples"])):
            writer.emit(HValueOut(h=hv.h, Y=hv.Y, z=hv.Z, multiple_index=hv.multiple_index, point=hv.source_point))
            quad = method_two.h_to_quadruple(hv)
            if quad is None:
                continue
            emit_quadruple(writer, quad)
            for extra in _rescaled(quad, args):
                emit_quadruple(writer, extra)
    return EXIT_OK


def _cmd_search(config: RunConfig, writer: RecordWriter) -> int:
    args = config.args
    hits = search.mitm_search(
        parse_rational(str(args["h"])),
        int(args["bound"]),
        segments=config.segments,
        threads=config.threads,
        engine=str(args["engine"]),
        pair_budget=config.pair_budget,
    )
    for hit in hits:
        if not search.verify(hit.h, *hit.coords):
            raise VerificationFailure(f"refusing to write invalid hit {hit}")
        writer.emit(SearchHitOut.from_orm(hit))
    log.info("[CLI] search: %d hit(s)", len(hits))
    return EXIT_OK


def _cmd_survey(config: RunConfig, writer: RecordWriter) -> int:
    args = config.args
    lo, hi = _parse_range(str(args["h_range"]), ":")
    rows = search.survey(
        lo, hi, int(args["bound"]),
        segments=config.segments,
        threads=config.threads,
        engine=str(args["engine"]),
        pair_budget=config.pair_budget,
    )
    for row in rows:
        hit = row.smallest
        if hit is not None and not search.verify(hit.h, *hit.coords):
            raise VerificationFailure(f"refusing to write invalid hit {hit}")
        coords = hit.coords if hit is not None else (None, None, None, None)
        writer.emit(SurveyRowOut(h=row.h, found=hit is not None, hits=row.hits,
                                 A=coords[0], B=coords[1], C=coords[2], D=coords[3]))
    return EXIT_OK


def _parametric_points(args: Dict[str, object], arity: int) -> List[List[Fraction]]:
    if args.get("params"):
        return [parse_rational_list(str(args["params"]))]
    if args.get("sweep"):
        lo, hi = _parse_range(str(args["sweep"]), "..")
        grid: List[List[Fraction]] = [[]]
        for _ in range(arity):
            grid = [g + [Fraction(v)] for g in grid for v in range(lo, hi + 1)]
        return grid
    raise InvalidInput("parametric needs --params r1,r2,... or --sweep LO..HI")


def _cmd_parametric(config: RunConfig, writer: RecordWriter) -> int:
    args = config.args
    name = str(args["family"])
    family = parametric.get_family(name)
    sweeping = not args.get("params")
    for params in _parametric_points(args, family.arity):
        try:
            _, quad = parametric.eval_family(name, params, allow_correction=bool(args.get("allow_correction")))
        except DomainError as e:
            if not sweeping:
                raise
            log.debug("[CLI] skip %s at %s: %s", name, params, e)
            continue
        if quad is not None:
            emit_quadruple(writer, quad)
    return EXIT_OK


def _cmd_families(config: RunConfig, writer: RecordWriter) -> int:
    for info in parametric.list_families():
        v = info.verdict
        writer.emit(FamilyOut(
            name=info.name, arity=info.arity, params=list(info.param_names), h_degree=info.h_degree,
            note=info.note, valid=v.valid, samples=v.samples, failures=v.failures, correction=v.correction,
        ))
    return EXIT_OK


def _cmd_verify(config: RunConfig, writer: RecordWriter) -> int:
    args = config.args
    h = parse_rational(str(args["h"]))
    values = parse_rational_list(str(args["quad"]))
    if len(values) != 4 or any(v.denominator != 1 for v in values):
        raise InvalidInput("--quad takes four integers A,B,C,D")
    A, B, C, D = (int(v) for v in values)
    valid = search.verify(h, A, B, C, D)
    writer.emit(VerifyOut(h=h, A=A, B=B, C=C, D=D, valid=valid))
    log.info("[CLI] verify h=%s: %s", h, "valid" if valid else "not valid")
    return EXIT_OK if valid else EXIT_NOT_VALID


def _cmd_twist_scan(config: RunConfig, writer: RecordWriter) -> int:
    args = config.args
    h = parse_rational(str(args["h"]))
    ts = parse_rational_list(str(args["t_list"])) if args.get("t_list") else []
    report = method_one.twist_scan(h, ts, int(args["bound"]))
    hit = report.hit
    writer.emit(TwistScanOut(
        h=str(report.h),
        exhausted=report.exhausted,
        t=str(hit.t) if hit else None,
        twisted_h=str(hit.twisted_h) if hit else None,
        points=[str(p) for p in hit.points] if hit else [],
        general_points=[str(p) for p in hit.general_points] if hit else [],
        searched=[str(t) for t in report.searched],
        skipped_singular=[str(t) for t in report.skipped_singular],
    ))
    return EXIT_OK


def _cmd_sweep(config: RunConfig, writer: RecordWriter) -> int:
    catalog = load_catalog(config.args.get("catalog"))
    for r in sweep_catalog(catalog):
        writer.emit(SweepEntryOut(
            name=r.name, check=r.check, status=r.status, h=str(r.h) if r.h is not None else None,
            printed=list(r.printed) if r.printed is not None else None,
            recomputed=list(r.recomputed) if r.recomputed is not None else None,
            detail=r.detail,
        ))
    return EXIT_OK


def _conjecture2_entries(args: Dict[str, object]) -> List[Tuple[Fraction, Affine]]:
    entries: List[Tuple[Fraction, Affine]] = []
    for text in args.get("entry") or []:
        z_text, sep, point_text = str(text).partition(":")
        if not sep:
            raise InvalidInput(f"expected Z:x,y, got {text!r}")
        z = parse_rational(z_text)
        entries.append((z, method_two.load_generator(z, *parse_pair(point_text))))
    if entries:
        return entries
    catalog = load_catalog(args.get("catalog"))
    for e in catalog.method_two:
        z = parse_rational(e.z)
        entries.append((z, method_two.load_generator(z, *(parse_rational(v) for v in e.generator))))
    return entries


def _cmd_conjecture2(config: RunConfig, writer: RecordWriter) -> int:
    args = config.args
    report = method_two.conjecture2_scan(
        int(args["n"]), _conjecture2_entries(args), int(args["multiples"]), int(args["t_height"]),
    )
    writer.emit(Conjecture2Out(
        n=report.n, miss=report.miss, h_checked=report.h_checked, skipped=report.skipped,
        matches=[Conjecture2MatchOut.from_orm(m) for m in report.matches],
    ))
    return EXIT_OK


HANDLERS: Dict[str, Callable[[RunConfig, RecordWriter], int]] = {
    "solve": _cmd_solve,
    "method2": _cmd_method2,
    "search": _cmd_search,
    "survey": _cmd_survey,
    "parametric": _cmd_parametric,
    "families": _cmd_families,
    "verify": _cmd_verify,
    "twist-scan": _cmd_twist_scan,
    "sweep": _cmd_sweep,
    "conjecture2": _cmd_conjecture2,
}


# --------- Parser -------------------------------------------------------------

def _add_generator_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--gen", help="Generator point 'x,y' with rational components.")
    g.add_argument("--gen-file", help="File with one 'x,y' point per line.")
    p.add_argument("--multiples", type=int, default=1, help="Use multiples 1..N of each generator.")
    p.add_argument("--target", help="Also emit the solution moved to this h (h' t^4 chain).")
    p.add_argument("--integerize", action="store_true", help="Also emit the integer-h form for h = v/u.")


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--bound", type=int, required=True, help="Coordinate bound N.")
    p.add_argument("--engine", choices=search.ENGINES, default="auto")
    # SUPPRESS: a flag given after the subcommand overrides the global one
    p.add_argument("--segments", type=int, default=argparse.SUPPRESS, help="Index segments K.")
    p.add_argument("--threads", type=int, default=argparse.SUPPRESS, help="Worker processes T.")
    p.add_argument("--pair-budget", type=int, default=argparse.SUPPRESS, help="Max index pairs.")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quarticde",
        description="Solve A^4 + h B^4 = C^4 + h D^4 with elliptic curves, parametric families and search.",
    )
    ap.add_argument("--output", choices=["json", "table"], help="Record format on stdout (default: settings).")
    ap.add_argument("--log-level", help="DEBUG, INFO, WARNING, ERROR (default: settings).")
    ap.add_argument("--pair-budget", type=int, help="Max index pairs for search/survey.")
    ap.add_argument("--threads", type=int, help="Worker processes for search/survey.")
    ap.add_argument("--segments", type=int, help="Index segments for search/survey.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="First method: multiples of a generator on E(h).")
    p.add_argument("--h", required=True)
    _add_generator_flags(p)
    p.add_argument("--twist", help="Descale by t: emit the solution for h / t^4.")

    p = sub.add_parser("method2", help="Second method: H(Z) from E'(Z).")
    p.add_argument("--z", required=True)
    _add_generator_flags(p)

    p = sub.add_parser("search", help="Exhaustive meet-in-the-middle search up to N.")
    p.add_argument("--h", required=True)
    _add_search_flags(p)

    p = sub.add_parser("survey", help="Smallest solution per h over a range.")
    p.add_argument("--h-range", required=True, help="LO:HI")
    _add_search_flags(p)

    p = sub.add_parser("parametric", help="Evaluate a parametric family.")
    p.add_argument("--family", required=True)
    pg = p.add_mutually_exclusive_group(required=True)
    pg.add_argument("--params", help="r1,r2,... (rationals)")
    pg.add_argument("--sweep", help="LO..HI integer grid over every parameter")
    p.add_argument("--allow-correction", action="store_true",
                   help="Evaluate a quarantined family with its suspected correction.")

    sub.add_parser("families", help="List registered families and their verification verdicts.")

    p = sub.add_parser("verify", help="Check one quadruple exactly.")
    p.add_argument("--h", required=True)
    p.add_argument("--quad", required=True, help="A,B,C,D")

    p = sub.add_parser("twist-scan", help="Find t with a small point on the twist E(h t^4).")
    p.add_argument("--h", required=True)
    p.add_argument("--t-list", default="1,2,3,4,5,6,7,8", help="t1,t2,... tried in order")
    p.add_argument("--bound", type=int, required=True, help="Naive search height bound.")

    p = sub.add_parser("sweep", help="Re-verify the worked-example catalog.")
    p.add_argument("--catalog", help="Catalog YAML (default: settings.catalog_path).")

    p = sub.add_parser("conjecture2", help="Is n = t^4 h for an enumerated h in H(Z)?")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--entry", action="append", help="Z:x,y generator on E'(Z); repeatable. Default: catalog.")
    p.add_argument("--catalog", help="Catalog YAML used when no --entry is given.")
    p.add_argument("--multiples", type=int, default=3)
    p.add_argument("--t-height", type=int, default=10)
    return ap


def make_config(ns: argparse.Namespace) -> RunConfig:
    settings = get_settings()
    values = vars(ns)
    return RunConfig(
        command=ns.command,
        output=ns.output or settings.output,
        log_level=(ns.log_level or settings.log_level).upper(),
        pair_budget=ns.pair_budget if ns.pair_budget is not None else settings.pair_budget,
        threads=ns.threads if ns.threads is not None else settings.threads,
        segments=ns.segments if ns.segments is not None else settings.segments,
        args={k: v for k, v in values.items() if k not in _GLOBAL_KEYS},
    )


def run(config: RunConfig, out: Optional[TextIO] = None) -> int:
    writer = RecordWriter(out or sys.stdout, config.output)
    try:
        code = HANDLERS[config.command](config, writer)
    except QuarticDEError as e:
        log.error("[CLI] %s failed: %s", config.command, e)
        return e.exit_code
    finally:
        writer.close()
    log.info("[CLI] %s: %d record(s)", config.command, writer.count)
    return code


def attach_negative_values(argv: Sequence[str]) -> List[str]:
    """Rewrite "--flag -7/10" as "--flag=-7/10"; argparse reads a leading "-" as an option."""
    out: List[str] = []
    for token in argv:
        if out and _NEGATIVE_VALUE_RE.match(token) and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    ns = build_parser().parse_args(attach_negative_values(sys.argv[1:] if argv is None else argv))
    try:
        config = make_config(ns)
    except ValidationError as e:
        setup_logging()
        log.error("[CLI] invalid configuration: %s", e)
        return EXIT_INVALID_INPUT
    setup_logging(config.log_level)
    return run(config, out)


if __name__ == "__main__":
    sys.exit(main())
