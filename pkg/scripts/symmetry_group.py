#!/usr/bin/env python3
"""Involution and commutation table of the four generators, and the group order."""
from pvmoduli.symmetry import GENERATORS, compose, group_closure, verify_symmetry_group

rep = verify_symmetry_group()
for e in rep.entries:
    print(f"{e.name:<18} {'ok' if e.ok else 'differs: ' + e.witness}")
print("Phi0inf Psi0 Phi0inf == PsiInf:", compose("Phi0inf", "Psi0", "Phi0inf") == compose("PsiInf"))
print("order of <Psi0, Psi1, PsiInf>:", group_closure(["Psi0", "Psi1", "PsiInf"]))
print(f"order of <{', '.join(GENERATORS)}>:", rep.order)
