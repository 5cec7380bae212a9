#!/usr/bin/env python3
"""Invariant-curve jets of the normal form at its poles, to a chosen depth."""
import sys

from pvmoduli.algebra import INF, ONE, ZERO
from pvmoduli.connection import normal_form
from pvmoduli.riccati import invariant_jets, jet_residual

depth = int(sys.argv[1]) if len(sys.argv) > 1 else 2
conn = normal_form(expand=True)
for name, pole in (("0", ZERO), ("1", ONE), ("inf", INF)):
    print(f"x = {name}")
    for j in invariant_jets(conn, pole, depth):
        res = jet_residual(conn, j, depth) if pole is not INF else []
        ok = all(r.is_zero() for r in res)
        print(f"  {j}" + ("" if pole is INF else f"   residual zero to order {depth}: {ok}"))
