"""Command-line entry point.

    pvmoduli verify [--suite S | --check ID ...] [--format text|structured]
    pvmoduli expr EXPRESSION
    pvmoduli limit --chart C --which W [--branch B]
    pvmoduli jets --pole P [--depth N]
    pvmoduli spectral --point P
    pvmoduli intersect CLASS [CLASS]
    pvmoduli symmetry
    pvmoduli normal-form [--k0 V --k1 V --kinf V --t V --q V --phat V]

Exit status: 0 when nothing failed, 1 when a check failed, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import configparser
import json
import sys
from collections import Counter
from typing import Iterable, Sequence

from . import __version__
from .suite import STATUSES, SUITES, CheckResult, UnknownCheckId, all_checks, run, select

SCHEMA = "pvmoduli.report"
SCHEMA_VERSION = 1

_DEFAULTS = {"suite": "all", "format": "text", "jobs": 1}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# report rendering


def _counts(results: Iterable[CheckResult]) -> dict[str, int]:
    c = Counter(r.status for r in results)
    return {s: c.get(s, 0) for s in STATUSES}


def report_document(results: Sequence[CheckResult]) -> dict:
    return {
        "schema": SCHEMA,
        "version": SCHEMA_VERSION,
        "stable": {
            "summary": {"total": len(results), **_counts(results)},
            "results": [r.stable() for r in results],
        },
        "unstable": {"runtimes": {r.id: round(r.runtime, 6) for r in results}},
    }


def results_from_document(doc: dict) -> list[CheckResult]:
    if doc.get("schema") != SCHEMA:
        raise ValueError("not a pvmoduli report")
    rt = doc.get("unstable", {}).get("runtimes", {})
    return [CheckResult(r["id"], r["status"], r["witness"], rt.get(r["id"], 0.0), r["anchor"])
            for r in doc["stable"]["results"]]


def _group(rid: str) -> str:
    head = rid.split(".", 1)[0]
    return "surface" if head == "pic" else head


def report_render(results: Sequence[CheckResult], fmt: str = "text") -> str:
    if fmt == "structured":
        return json.dumps(report_document(results), sort_keys=True, indent=2) + "\n"
    lines = []
    groups: dict[str, list[CheckResult]] = {}
    for r in results:
        groups.setdefault(_group(r.id), []).append(r)
    tag = {"pass": "PASS", "fail": "FAIL", "paper_discrepancy": "DISCREPANCY"}
    for g, rs in groups.items():
        n_pass = sum(r.status == "pass" for r in rs)
        lines.append(f"[{g}] {n_pass}/{len(rs)} pass")
        for r in rs:
            line = f"  {tag[r.status]:<11} {r.id}"
            if r.witness:
                line += f"\n      {r.witness}"
            lines.append(line)
    c = _counts(results)
    lines.append(f"{len(results)} checks: {c['pass']} pass, {c['fail']} fail, "
                 f"{c['paper_discrepancy']} paper_discrepancy")
    return "\n".join(lines) + "\n"


def exit_code(results: Iterable[CheckResult]) -> int:
    return 1 if any(r.status == "fail" for r in results) else 0


# ---------------------------------------------------------------------------
# subcommands


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    cp = configparser.ConfigParser()
    if not cp.read(path):
        raise UsageError(f"cannot read config file {path}")
    sec = cp["verify"] if cp.has_section("verify") else cp[cp.default_section]
    out: dict = {}
    for k in ("suite", "format"):
        if k in sec:
            out[k] = sec[k]
    if "jobs" in sec:
        out["jobs"] = sec.getint("jobs")
    if "check" in sec:
        out["check"] = [c.strip() for c in sec["check"].split(",") if c.strip()]
    return out


def _cmd_verify(a, out) -> int:
    cfg = _load_config(a.config)
    opts = dict(_DEFAULTS)
    opts.update(cfg)
    for k in ("suite", "format", "jobs", "check"):
        v = getattr(a, k)
        if v is not None:
            opts[k] = v
    if opts["format"] not in ("text", "structured"):
        raise UsageError(f"unknown format {opts['format']!r}")
    if a.list:
        for c in all_checks():
            out.write(f"{c.id}\t{c.paper_anchor}\t{c.description}\n")
        return 0
    try:
        ids = select(suite=opts["suite"], ids=opts.get("check"))
    except UnknownCheckId as e:
        raise UsageError(f"unknown check or suite: {e.args[0]}") from None
    results = run(ids, jobs=max(1, int(opts["jobs"])))
    out.write(report_render(results, opts["format"]))
    return exit_code(results)


def _cmd_expr(a, out) -> int:
    from .algebra import parse, pretty, to_text
    r = parse(a.expression)
    out.write((pretty(r) if a.pretty else to_text(r)) + "\n")
    return 0


def _print_matrix(m, out, fmt: str, extra: dict | None = None) -> None:
    from .algebra import to_text
    entries = [to_text(e) for e in m]
    if fmt == "structured":
        doc = {"e11": entries[0], "e12": entries[1], "e21": entries[2], "e22": entries[3]}
        doc.update(extra or {})
        out.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    else:
        for name, e in zip(("e11", "e12", "e21", "e22"), entries):
            out.write(f"{name} = {e}\n")


def _cmd_limit(a, out) -> int:
    from .boundary import boundary_connection, get_chart
    try:
        chart = get_chart(a.chart)
    except KeyError as e:
        raise UsageError(e.args[0]) from None
    if a.which not in chart.recipes:
        raise UsageError(f"chart {a.chart} has components {', '.join(chart.recipes)}")
    if a.branch is not None and a.branch not in chart.branches:
        raise UsageError(f"chart {a.chart} has branches {', '.join(chart.branches) or 'none'}")
    conn = boundary_connection(chart, a.which, a.branch)
    _print_matrix(conn.matrix, out, a.format,
                  {"chart": a.chart, "which": a.which, "branch": a.branch, "var": conn.var})
    return 0


def _params(a):
    from dataclasses import replace

    from .algebra import parse
    from .connection import ModuliPoint, SpectralParams
    p = SpectralParams()
    pt = ModuliPoint()
    sp = {k: parse(v) for k, v in (("kappa0", a.k0), ("kappa1", a.k1), ("kappaInf", a.kinf))
          if v is not None}
    mp = {k: parse(v) for k, v in (("t", a.t), ("q", a.q), ("p_hat", a.phat)) if v is not None}
    return replace(p, **sp), replace(pt, **mp)


def _cmd_jets(a, out) -> int:
    from .algebra import INF, parse_center
    from .connection import normal_form
    from .riccati import invariant_jets
    params, pt = _params(a)
    pole = parse_center(a.pole)
    # at ∞ the discriminant is only a square once ρ is expanded
    conn = normal_form(params, pt, expand=a.expand_rho or pole is INF)
    for j in invariant_jets(conn, pole, a.depth):
        out.write(f"{j}\n")
    return 0


def _cmd_spectral(a, out) -> int:
    from .algebra import parse_center, to_text
    from .connection import normal_form, spectral_difference, spectral_difference_squared
    params, pt = _params(a)
    point = parse_center(a.point)
    conn = normal_form(params, pt, expand=True)
    sq = spectral_difference_squared(conn, point)
    out.write(f"alpha1^2 = {to_text(sq)}\n")
    try:
        out.write(f"alpha1 = {to_text(spectral_difference(conn, point))}\n")
    except ArithmeticError as e:
        out.write(f"alpha1: {e}\n")
    return 0


def _cmd_intersect(a, out) -> int:
    from .surface import format_curve_basis, intersect, parse_class
    try:
        c1 = parse_class(a.classes[0])
        c2 = parse_class(a.classes[1]) if len(a.classes) > 1 else c1
    except ValueError as e:
        raise UsageError(str(e)) from None
    if len(a.classes) > 2:
        raise UsageError("intersect takes one or two classes")
    out.write(f"{intersect(c1, c2)}\n")
    if a.verbose:
        out.write(f"# {c1} = {format_curve_basis(c1)}\n")
        if len(a.classes) > 1:
            out.write(f"# {c2} = {format_curve_basis(c2)}\n")
    return 0


def _cmd_symmetry(a, out) -> int:
    from .symmetry import verify_symmetry_group
    rep = verify_symmetry_group()
    for e in rep.entries:
        out.write(f"{'ok ' if e.ok else 'no '} {e.name}" + (f"  [{e.witness}]" if e.witness else "")
                  + "\n")
    out.write(f"group order: {rep.order if rep.order is not None else f'> {rep.order_bound}'}\n")
    return 0


def _cmd_normal_form(a, out) -> int:
    from .connection import normal_form, serialize
    params, pt = _params(a)
    out.write(serialize(normal_form(params, pt, expand=a.expand_rho)))
    return 0


# ---------------------------------------------------------------------------


def _add_params(p: argparse.ArgumentParser) -> None:
    for flag in ("k0", "k1", "kinf", "t", "q", "phat"):
        p.add_argument(f"--{flag}", default=None, help=f"value for {flag} (expression)")
    p.add_argument("--expand-rho", action="store_true", help="replace rho by its value")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pvmoduli", description=__doc__.split("\n\n")[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("--suite", choices=("all",) + SUITES, default=None)
    v.add_argument("--check", action="append", default=None, metavar="ID")
    v.add_argument("--format", choices=("text", "structured"), default=None)
    v.add_argument("--jobs", type=int, default=None)
    v.add_argument("--config", default=None, help="INI file with a [verify] section")
    v.add_argument("--list", action="store_true", help="list check ids and exit")
    v.set_defaults(fn=_cmd_verify)

    e = sub.add_parser("expr", help="canonicalize an expression")
    e.add_argument("expression")
    e.add_argument("--pretty", action="store_true")
    e.set_defaults(fn=_cmd_expr)

    lm = sub.add_parser("limit", help="limit connection on a boundary chart")
    lm.add_argument("--chart", required=True)
    lm.add_argument("--which", required=True)
    lm.add_argument("--branch", default=None)
    lm.add_argument("--format", choices=("text", "structured"), default="text")
    lm.set_defaults(fn=_cmd_limit)

    j = sub.add_parser("jets", help="invariant-curve jets of the normal form")
    j.add_argument("--pole", required=True)
    j.add_argument("--depth", type=int, default=None)
    _add_params(j)
    j.set_defaults(fn=_cmd_jets)

    s = sub.add_parser("spectral", help="residual spectral data of the normal form")
    s.add_argument("--point", required=True)
    _add_params(s)
    s.set_defaults(fn=_cmd_spectral)

    i = sub.add_parser("intersect", help="intersection number on the Picard lattice")
    i.add_argument("classes", nargs="+")
    i.add_argument("-v", "--verbose", action="store_true")
    i.set_defaults(fn=_cmd_intersect)

    y = sub.add_parser("symmetry", help="involution and commutation report")
    y.set_defaults(fn=_cmd_symmetry)

    n = sub.add_parser("normal-form", help="print the normal form")
    _add_params(n)
    n.set_defaults(fn=_cmd_normal_form)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    from .algebra import AlgebraError, ExprSyntaxError, UnknownSymbol
    out = out or sys.stdout
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return a.fn(a, out)
    except (UsageError, ExprSyntaxError, UnknownSymbol) as e:
        ap.print_usage(sys.stderr)
        print(f"pvmoduli: error: {e}", file=sys.stderr)
        return 2
    except AlgebraError as e:
        print(f"pvmoduli: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
