"""Acceptance criteria 1-12, one PASS/FAIL line each.

Each criterion is a set of suite checks that must pass.  Some criteria allow
named checks to end as paper_discrepancy (the published display disagrees
with the computation; see the witness).  Criterion 12 runs the full suite
twice and compares the stable report sections byte for byte.

Run with pytest, or directly: python3 tests/test_acceptance.py
"""

import json
import sys

import pytest

from pvmoduli.cli import report_document
from pvmoduli.suite import run

LINES: list[str] = []

# number, title, required checks, checks allowed to end as paper_discrepancy
CRITERIA = [
    (1, "Euler residue at infinity", ["connection.euler-residue"], []),
    (2, "gauge conjugation at a double pole",
     ["connection.gauge-top", "connection.gauge-order1"], []),
    (3, "Moebius covariance", ["connection.moebius-covariance"], []),
    (4, "normal-form structure",
     ["connection.normal-form-structure", "connection.normal-form-principal",
      "connection.fuchs"], []),
    (5, "Riccati jets",
     ["riccati.jets-x0", "riccati.jets-x1", "riccati.jet-residuals"],
     ["riccati.display-x0", "riccati.display-x1"]),
    (6, "confluence oracle", ["boundary.confluence-q0", "boundary.confluence-q1"], []),
    (7, "boundary catalogue",
     ["boundary.A0.f_pullback", "boundary.Q0.direct-minus", "boundary.Q0.direct-plus",
      "boundary.Q0.f_pullback", "boundary.Q1.f_pullback", "boundary.Q1.direct-minus",
      "boundary.Q1.direct-plus", "boundary.B10.direct", "boundary.B10.f_pullback",
      "boundary.B0inf.f_pullback", "boundary.B0inf.g_pullback", "boundary.Ainf.f-plus",
      "boundary.Ainf.f-minus", "boundary.Ainf.g-plus", "boundary.Ainf.g-minus",
      "boundary.Ainf.h"], []),
    (8, "node spectral data",
     ["boundary.node.A0", "boundary.node.B10", "boundary.node.Q0", "boundary.node.Q1",
      "boundary.node.B0inf", "boundary.node.Ainf"],
     ["boundary.node.Ainf-f-minus"]),
    (9, "Picard suite",
     ["pic.self-intersection", "pic.K-squared", "pic.K-dot-Ainf", "pic.D.equal",
      "pic.D.trivial-on-boundary", "pic.discrepancy-base", "pic.discrepancy-total",
      "pic.census"], []),
    (10, "symmetry group",
     ["symmetry.psi-involutions", "symmetry.psi-commute", "symmetry.phi-involution",
      "symmetry.order"],
     ["symmetry.phi-commute"]),
    (11, "algebra property suites",
     ["algebra.random-identities", "algebra.field-identities", "algebra.laurent",
      "algebra.sqrt-exact"], []),
]

_cache: dict = {}


def _full():
    if "full" not in _cache:
        _cache["full"] = {r.id: r for r in run()}
    return _cache["full"]


def evaluate(n: int) -> tuple[bool, str]:
    if n == 12:
        a = json.dumps(report_document(run())["stable"], sort_keys=True, indent=2)
        b = json.dumps(report_document(run())["stable"], sort_keys=True, indent=2)
        return a == b, f"{len(a)} bytes, identical" if a == b else "stable sections differ"
    _, _, required, allowed = next(c for c in CRITERIA if c[0] == n)
    res = _full()
    bad = [f"{i}: {res[i].status} {res[i].witness}" for i in required if res[i].status != "pass"]
    bad += [f"{i}: {res[i].status} {res[i].witness}" for i in allowed if res[i].status == "fail"]
    if n == 5 and any(res[i].status != "pass" for i in allowed):
        # a discrepancy in the displays is tolerated only if criterion 6 holds
        ok6, _ = evaluate(6)
        if not ok6:
            bad.append("display discrepancy without a passing confluence cross-check")
    notes = [i for i in allowed if res[i].status == "paper_discrepancy"]
    detail = "; ".join(bad) if bad else (f"paper_discrepancy: {', '.join(notes)}" if notes else "")
    return not bad, detail


def _title(n):
    return "determinism" if n == 12 else next(c[1] for c in CRITERIA if c[0] == n)


def _line(n, ok, detail):
    s = f"ACCEPTANCE {n:>2} {'PASS' if ok else 'FAIL'}  {_title(n)}"
    return s + (f"  [{detail}]" if detail else "")


@pytest.mark.parametrize("n", range(1, 13))
def test_criterion(n):
    ok, detail = evaluate(n)
    line = _line(n, ok, detail)
    LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(n) for n in range(1, 13)]
    for n, (ok, detail) in enumerate(results, 1):
        print(_line(n, ok, detail))
    sys.exit(0 if all(ok for ok, _ in results) else 1)
