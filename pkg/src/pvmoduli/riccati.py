"""Riccati equation of a connection and its formal invariant curves at poles.

Horizontal sections solve dY + ΩY = 0; in the affine coordinate y = Y₂/Y₁
this reads  dy/dx = ω₁₂ y² + (ω₁₁ - ω₂₂) y - ω₂₁.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    INF, ZERO, AlgebraError, RatFunc, center_text, laurent, pole_order, sqrt_exact,
    sym, to_text,
)
from .connection import Connection, _local


class ResonantJet(AlgebraError):
    pass


class NotAPole(AlgebraError):
    pass


@dataclass(frozen=True)
class RiccatiRHS:
    coeff_y2: RatFunc
    coeff_y1: RatFunc
    coeff_y0: RatFunc
    var: str = "x"


@dataclass(frozen=True)
class Jet:
    """y = Σ c_k (x - center)^k, or Σ c_k x^(-k) at ∞ (coordinate 1/x)."""

    center: object
    coefficients: tuple[RatFunc, ...]
    var: str = "x"
    multiplicity: int = 1
    resonant_at: int | None = None

    @property
    def depth(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        return jet_text(self)


def riccati_rhs(conn: Connection) -> RiccatiRHS:
    m = conn.matrix
    return RiccatiRHS(m.e12, m.e11 - m.e22, -m.e21, conn.var)


def _series(r: RatFunc, var: str, center, shift: int, upto: int) -> list[RatFunc]:
    """Coefficients 0..upto of (local parameter)^shift · r, which must be holomorphic."""
    exp = laurent(r, var, center, upto - shift)
    out = []
    for n in range(upto + 1):
        k = n - shift
        out.append(exp.coeff(k) if k >= exp.min_order else ZERO)
    if not r.is_zero() and exp.min_order + shift < 0:
        raise AlgebraError("pole order larger than the clearing power")
    return out


def invariant_jets(conn: Connection, pole, depth: int | None = None) -> list[Jet]:
    """Formal branches at a pole, solved up to ``depth``.

    The equation is multiplied by u^m (m the maximal pole order of the three
    coefficients); the order-0 part is the quadratic for c₀ and the order-n
    part is linear in c_n with coefficient 2a₀c₀ + b₀ - n·[m = 1].
    """
    m_loc, c = _local(conn, pole)
    local = Connection(m_loc, conn.var, conn.degree, ())
    rhs = riccati_rhs(local)
    v = conn.var
    coeffs = (rhs.coeff_y2, rhs.coeff_y1, rhs.coeff_y0)
    m = max(pole_order(e, v, c) for e in coeffs)
    if m == 0:
        raise NotAPole(f"{center_text(pole)} is not a pole of the Riccati equation")
    if depth is None:
        depth = m - 1
    a, b, cc = (_series(e, v, c, m, depth + m) for e in coeffs)

    roots: list[tuple[RatFunc, int]]
    if not a[0].is_zero():
        disc = b[0] ** 2 - 4 * a[0] * cc[0]
        s = sqrt_exact(disc)
        if s.is_zero():
            roots = [(-b[0] / (2 * a[0]), 2)]
        else:
            roots = [((-b[0] - s) / (2 * a[0]), 1), ((-b[0] + s) / (2 * a[0]), 1)]
    elif not b[0].is_zero():
        roots = [(-cc[0] / b[0], 1)]
    elif cc[0].is_zero():
        raise ResonantJet("leading equation vanishes identically")
    else:
        roots = []

    jets = []
    for c0, mult in roots:
        cs = [c0]
        resonant = None
        for n in range(1, depth + 1):
            # known part of the order-n equation, c_n set to zero
            known = cc[n]
            for i in range(0, n + 1):
                known = known + b[i] * (cs[n - i] if n - i < n else ZERO)
            for i in range(0, n + 1):
                for j in range(0, n - i + 1):
                    k = n - i - j
                    if j == n or k == n:
                        continue
                    known = known + a[i] * cs[j] * cs[k]
            lhs_k = n - m + 1
            lhs = lhs_k * cs[lhs_k] if 1 <= lhs_k < n else ZERO
            lin = 2 * a[0] * c0 + b[0] - (n if m == 1 else 0)
            if lin.is_zero():
                resonant = n
                break
            cs.append((lhs - known) / lin)
        center = pole if pole is INF else RatFunc.coerce(pole)
        jets.append(Jet(center, tuple(cs), v, mult, resonant))
    return jets


def jet_residual(conn: Connection, jet: Jet, upto: int) -> list[RatFunc]:
    """Coefficients 0..upto of u^m(y' - rhs(y)) for the truncated jet."""
    m_loc, c = _local(conn, jet.center)
    rhs = riccati_rhs(Connection(m_loc, conn.var, conn.degree, ()))
    v = conn.var
    x = sym(v)
    loc = x - c
    y = sum((ck * loc ** k for k, ck in enumerate(jet.coefficients)), ZERO)
    m = max(pole_order(e, v, c) for e in (rhs.coeff_y2, rhs.coeff_y1, rhs.coeff_y0))
    expr = (y.diff(v) - rhs.coeff_y2 * y ** 2 - rhs.coeff_y1 * y - rhs.coeff_y0) * loc ** m
    exp = laurent(expr, v, c, upto)
    return [exp.coeff(k) for k in range(0, upto + 1)]


def jet_text(jet: Jet) -> str:
    if jet.center is INF:
        loc = f"{jet.var}^(-1)"
    else:
        a = to_text(jet.center)
        loc = jet.var if jet.center == ZERO else f"({jet.var} - {a})" if " " not in a \
            else f"({jet.var} - ({a}))"
    def power(k: int) -> str:
        if jet.center is INF:
            return f"{jet.var}^(-{k})"
        return loc if k == 1 else f"{loc}^{k}"

    parts = []
    for k, ck in enumerate(jet.coefficients):
        if ck.is_zero():
            continue
        cs = to_text(ck)
        if " " in cs or "/" in cs:
            cs = f"({cs})"
        if k == 0:
            parts.append(cs)
        else:
            pw = power(k)
            parts.append(pw if cs == "1" else f"{cs}*{pw}")
    n = len(jet.coefficients)
    parts.append(f"O({power(n)})")
    out = " + ".join(parts)
    if jet.resonant_at is not None:
        out += f"  [resonant at order {jet.resonant_at}]"
    return out
