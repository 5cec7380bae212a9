"""Birational symmetries of the (t, q, p̂, κ₀, κ₁, κ∞) coordinates.

A symmetry is stored as the images of the six coordinate symbols; applying
it to a point substitutes the point's values simultaneously.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import RatFunc, substitute_many, sym, to_text

COORDS = ("t", "q", "phat", "k0", "k1", "kinf")

t, q, p, k0, k1, kinf = (sym(n) for n in COORDS)

_PHI_P = (q / 2) * (-2 * p * q ** 3 + k0 * q ** 2 + kinf * q ** 2 + 4 * p * q ** 2
                    + (k1 - 1) * q ** 2 - 2 * k0 * q - 2 * kinf * q - 2 * p * q
                    - 2 * q * t + k0 + kinf + 2 * q - k1 - 1) / (q - 1) ** 2

GENERATORS: dict[str, tuple[RatFunc, ...]] = {
    "Phi0inf": (t, 1 / q, _PHI_P, kinf, -k1, k0),
    "Psi0": (t, q, p - k0 / q, -k0, k1, kinf),
    "Psi1": (-t, q, p + t / (q - 1) ** 2 - k1 / (q - 1), k0, -k1, kinf),
    "PsiInf": (t, q, p, k0, k1, -kinf),
}

IDENTITY: tuple[RatFunc, ...] = (t, q, p, k0, k1, kinf)


def apply_symmetry(name: str, point) -> tuple[RatFunc, ...]:
    """Image of a point given as a 6-tuple or a mapping keyed by COORDS."""
    if name not in GENERATORS:
        raise KeyError(f"unknown symmetry {name!r}")
    if isinstance(point, dict):
        point = tuple(point[c] for c in COORDS)
    vals = {c: RatFunc.coerce(v) for c, v in zip(COORDS, point)}
    return tuple(substitute_many(e, vals) for e in GENERATORS[name])


def compose(*names: str) -> tuple[RatFunc, ...]:
    """names[0] ∘ names[1] ∘ ... applied to the generic point."""
    pt = IDENTITY
    for n in reversed(names):
        pt = apply_symmetry(n, pt)
    return pt


def difference(a: tuple, b: tuple) -> tuple[RatFunc, ...]:
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class GroupEntry:
    name: str
    ok: bool
    witness: str = ""


@dataclass(frozen=True)
class GroupReport:
    involutions: tuple[GroupEntry, ...]
    commutations: tuple[GroupEntry, ...]
    order: int | None
    order_bound: int

    @property
    def entries(self) -> tuple[GroupEntry, ...]:
        return self.involutions + self.commutations


def _witness(diff: tuple) -> str:
    return "; ".join(f"{c}: {to_text(d)}" for c, d in zip(COORDS, diff) if not d.is_zero())


def group_closure(gens=None, bound: int = 64) -> int | None:
    """Order of the group generated (breadth first), or None past ``bound``."""
    gens = list(gens or GENERATORS)
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for el in frontier:
            for g in gens:
                img = apply_symmetry(g, el)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
                    if len(seen) > bound:
                        return None
        frontier = nxt
    return len(seen)


def verify_symmetry_group(bound: int = 64) -> GroupReport:
    inv = []
    for n in GENERATORS:
        d = difference(compose(n, n), IDENTITY)
        ok = all(e.is_zero() for e in d)
        inv.append(GroupEntry(f"{n}^2", ok, "" if ok else _witness(d)))
    com = []
    for a, b in combinations(GENERATORS, 2):
        d = difference(compose(a, b), compose(b, a))
        ok = all(e.is_zero() for e in d)
        com.append(GroupEntry(f"{a}*{b}", ok, "" if ok else _witness(d)))
    return GroupReport(tuple(inv), tuple(com), group_closure(bound=bound), bound)
