"""Picard lattice of P¹×P¹ blown up at (t,q) = (0,1), (∞,0), (∞,∞).

Classes are integer vectors in the geometric basis (f1, f2, E1, E2, E3):
f1 is the class of {t = const}, f2 of {q = const}, E_i the exceptional
curves.  The second basis used throughout is the curve basis
(A0, Q0, B10, B0inf, Binfinf).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

GEOMETRIC = ("f1", "f2", "E1", "E2", "E3")
CURVE_BASIS = ("A0", "Q0", "B10", "B0inf", "Binfinf")

_FORM = (
    (0, 1, 0, 0, 0),
    (1, 0, 0, 0, 0),
    (0, 0, -1, 0, 0),
    (0, 0, 0, -1, 0),
    (0, 0, 0, 0, -1),
)


class NotContractible(ValueError):
    pass


@dataclass(frozen=True)
class DivisorClass:
    coeffs: tuple[int, int, int, int, int]

    @staticmethod
    def of(*c: int) -> "DivisorClass":
        if len(c) != 5:
            raise ValueError("a class has five coordinates")
        return DivisorClass(tuple(int(v) for v in c))

    def __add__(self, o: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, o: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, n: int) -> "DivisorClass":
        return DivisorClass(tuple(n * a for a in self.coeffs))

    __mul__ = __rmul__

    def __matmul__(self, o: "DivisorClass") -> int:
        return intersect(self, o)

    def __str__(self) -> str:
        return format_class(self.coeffs, GEOMETRIC)

    def in_curve_basis(self) -> tuple[int, ...]:
        return to_curve_basis(self)


def _basis(i: int) -> DivisorClass:
    return DivisorClass(tuple(int(j == i) for j in range(5)))


f1, f2, E1, E2, E3 = (_basis(i) for i in range(5))

NAMED: dict[str, DivisorClass] = {
    "A0": f1 - E1,
    "Ainf": f1 - E2 - E3,
    "Q0": f2 - E2,
    "Q1": f2 - E1,
    "Qinf": f2 - E3,
    "B10": E1,
    "B0inf": E2,
    "Binfinf": E3,
}


def curve(name: str) -> DivisorClass:
    return NAMED[name]


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    return sum(a.coeffs[i] * _FORM[i][j] * b.coeffs[j] for i in range(5) for j in range(5))


def canonical_class() -> DivisorClass:
    return -2 * f1 - 2 * f2 + E1 + E2 + E3


def canonical_from_curves() -> DivisorClass:
    """K written through the boundary curves: -2(Q0 + A0) - B10 - B0inf + Binfinf."""
    n = NAMED
    return -2 * (n["Q0"] + n["A0"]) - n["B10"] - n["B0inf"] + n["Binfinf"]


def moduli_divisor_D() -> tuple[DivisorClass, DivisorClass]:
    n = NAMED
    d1 = -1 * n["B10"] + 2 * n["Qinf"] + 2 * n["Binfinf"] + n["Ainf"]
    d2 = n["A0"] + 2 * n["Q1"] + 2 * n["B10"] - n["B0inf"] - n["Binfinf"]
    return d1, d2


def line_bundle_degree(D: DivisorClass, name: str) -> int:
    """deg O(D) restricted to the named curve."""
    return intersect(D, NAMED[name])


def discrepancy(contracted: DivisorClass, canonical: DivisorClass | None = None) -> Fraction:
    """α with K = π*K' + α C, so α = (K·C)/(C·C).  A (-1)-curve gives +1."""
    K = canonical if canonical is not None else canonical_class()
    c2 = intersect(contracted, contracted)
    if c2 >= 0:
        raise NotContractible(f"self-intersection {c2} is not negative")
    return Fraction(intersect(K, contracted), c2)


@dataclass(frozen=True)
class TotalSpaceDiscrepancy:
    normal_self_intersection: int   # (𝒜∞·A∞) = -2 - (A∞)² inside 𝒜∞
    K_total_dot: int                # (K_X·A∞) = (K·A∞) - (base·A∞)
    discrepancy: Fraction


def discrepancy_total_space(self_int_in_fiber_surface: int = 0, base_dot: int = 0
                            ) -> TotalSpaceDiscrepancy:
    """Contraction of A∞ seen inside 𝒜∞ ≅ P¹×P¹ in the total space."""
    A = NAMED["Ainf"]
    normal = -2 - self_int_in_fiber_surface
    kx = intersect(canonical_class(), A) - base_dot
    return TotalSpaceDiscrepancy(normal, kx, Fraction(kx, normal))


@dataclass(frozen=True)
class Census:
    self_intersections: dict[str, int]
    minus_two: tuple[str, ...]
    minus_one: tuple[str, ...]


def curve_census() -> Census:
    si = {n: intersect(c, c) for n, c in NAMED.items()}
    return Census(si, tuple(n for n, v in si.items() if v == -2),
                  tuple(n for n, v in si.items() if v == -1))


def pic_relations() -> dict[str, bool]:
    n = NAMED
    fibre = {n["Q0"] + n["B0inf"], n["Q1"] + n["B10"], n["Qinf"] + n["Binfinf"]}
    return {
        "Q0+B0inf = Q1+B10 = Qinf+Binfinf": len(fibre) == 1,
        "A0+B10 = Ainf+B0inf+Binfinf": n["A0"] + n["B10"] == n["Ainf"] + n["B0inf"] + n["Binfinf"],
        "Ainf = A0+B10-B0inf-Binfinf": n["Ainf"] == n["A0"] + n["B10"] - n["B0inf"] - n["Binfinf"],
    }


# ---------------------------------------------------------------------------
# basis change

# columns: the curve basis written in geometric coordinates
_TO_GEOM = tuple(zip(*(NAMED[nm].coeffs for nm in CURVE_BASIS)))


def from_curve_basis(c: tuple[int, ...]) -> DivisorClass:
    return DivisorClass(tuple(sum(_TO_GEOM[i][j] * c[j] for j in range(5)) for i in range(5)))


def _det(m) -> Fraction:
    m = [[Fraction(v) for v in row] for row in m]
    n, det = len(m), Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if m[r][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        for r in range(i + 1, n):
            f = m[r][i] / m[i][i]
            for cidx in range(i, n):
                m[r][cidx] -= f * m[i][cidx]
    return det


def _inverse(m) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for i in range(n):
        piv = next(r for r in range(i, n) if a[r][i] != 0)
        a[i], a[piv] = a[piv], a[i]
        p = a[i][i]
        a[i] = [v / p for v in a[i]]
        for r in range(n):
            if r != i and a[r][i] != 0:
                f = a[r][i]
                a[r] = [v - f * w for v, w in zip(a[r], a[i])]
    return [row[n:] for row in a]


_TO_CURVE = _inverse(_TO_GEOM)


def change_of_basis_det() -> int:
    return int(_det(_TO_GEOM))


def to_curve_basis(d: DivisorClass) -> tuple[int, ...]:
    out = []
    for i in range(5):
        v = sum(_TO_CURVE[i][j] * d.coeffs[j] for j in range(5))
        if v.denominator != 1:
            raise ValueError("class is not integral in the curve basis")
        out.append(int(v))
    return tuple(out)


def signature() -> tuple[int, int]:
    """(positive, negative) counts from a congruence diagonalization over Q."""
    m = [[Fraction(v) for v in row] for row in _FORM]
    n = len(m)
    diag = []
    for i in range(n):
        if m[i][i] == 0:
            j = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
            if j is not None:
                # replace e_i by e_i + e_j to create a nonzero pivot
                for k in range(n):
                    m[i][k] += m[j][k]
                for k in range(n):
                    m[k][i] += m[k][j]
        p = m[i][i]
        diag.append(p)
        if p == 0:
            continue
        for r in range(i + 1, n):
            f = m[r][i] / p
            for k in range(n):
                m[r][k] -= f * m[i][k]
            for k in range(n):
                m[k][r] -= f * m[k][i]
    return sum(1 for d in diag if d > 0), sum(1 for d in diag if d < 0)


def format_class(coeffs, names) -> str:
    parts = []
    for c, nm in zip(coeffs, names):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        sign = "-" if c < 0 else "+"
        parts.append((sign, f"{mag}{nm}"))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return " ".join([head] + [f"{s} {t}" for s, t in parts[1:]])


def format_curve_basis(d: DivisorClass) -> str:
    return format_class(to_curve_basis(d), CURVE_BASIS)


def parse_class(text: str) -> DivisorClass:
    """Signed integer combination of f1..E3, named curves, or K / D."""
    table = dict(zip(GEOMETRIC, (f1, f2, E1, E2, E3)))
    table.update(NAMED)
    table["K"] = canonical_class()
    table["D"] = moduli_divisor_D()[0]
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty class")
    if s == "0":
        return DivisorClass((0,) * 5)
    if s[0] not in "+-":
        s = "+" + s
    total = DivisorClass((0,) * 5)
    pos = 0
    term = re.compile(r"([+-])(?:(\d+)\*?)?([A-Za-z][A-Za-z0-9]*)")
    while pos < len(s):
        m = term.match(s, pos)
        if m is None:
            raise ValueError(f"cannot parse divisor class at position {pos}: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        n = int(m.group(2)) if m.group(2) else 1
        name = m.group(3)
        if name not in table:
            raise ValueError(f"unknown class name {name!r}")
        total = total + (sign * n) * table[name]
        pos = m.end()
    return total
