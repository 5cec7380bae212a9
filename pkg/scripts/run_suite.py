#!/usr/bin/env python3
"""Run the verification suite and write the structured report to a file."""
import argparse
import sys

from pvmoduli.cli import exit_code, report_render
from pvmoduli.suite import SUITES, run, select

ap = argparse.ArgumentParser()
ap.add_argument("--suite", default="all", choices=("all",) + SUITES)
ap.add_argument("--jobs", type=int, default=1)
ap.add_argument("-o", "--output", default="report.json")
a = ap.parse_args()

results = run(select(suite=a.suite), jobs=a.jobs)
with open(a.output, "w") as fh:
    fh.write(report_render(results, "structured"))
sys.stdout.write(report_render(results, "text"))
slowest = sorted(results, key=lambda r: -r.runtime)[:5]
print("slowest:", ", ".join(f"{r.id} {r.runtime:.2f}s" for r in slowest))
sys.exit(exit_code(results))
