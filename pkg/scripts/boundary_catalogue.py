#!/usr/bin/env python3
"""Print every boundary limit connection and its node spectral data."""
from pvmoduli.algebra import center_text, pretty
from pvmoduli.boundary import boundary_connection, chart_catalogue, node_value


def show(chart, which, branch, seen):
    c = boundary_connection(chart, which, branch)
    if c.matrix in seen:
        return
    seen.add(c.matrix)
    tag = f"{chart.name} {which}" + (f" [{branch}]" if branch else "")
    print(tag)
    for name, e in zip(("11", "12", "21", "22"), c.matrix):
        print(f"  {name}: {pretty(e)}")
    v = node_value(chart, which, branch)
    print(f"  node {center_text(v.point)}: alpha1^2 = {pretty(v.squared)}")


for chart in chart_catalogue():
    branches = list(chart.branches) or [None]
    for which in chart.recipes:
        seen = set()
        for b in branches:
            try:
                show(chart, which, b, seen)
            except ArithmeticError as e:
                # some direct limits exist only on an admissible branch
                print(f"{chart.name} {which} [{b}]: {type(e).__name__}: {e}")
    print()
