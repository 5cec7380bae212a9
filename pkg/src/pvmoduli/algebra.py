"""Exact arithmetic in the field Q(symbols) of multivariate rational functions.

Polynomials are python-flint ``fmpq_mpoly`` objects living in one fixed
lexicographic context whose generator order is the symbol table below.
Everything built on top of them (canonical form, Laurent expansion,
residues, limits, exact square roots, the expression parser and printer)
lives here.

Values are immutable; every operation returns a fresh canonical RatFunc.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Union

import flint

# ---------------------------------------------------------------------------
# symbol table

# (ascii alias, display name); the list order is the lex order of the ring.
SYMBOL_TABLE: tuple[tuple[str, str], ...] = (
    ("x", "x"),
    ("X", "X"),
    ("q", "q"),
    ("t", "t"),
    ("phat", "p̂"),
    ("k0", "κ₀"),
    ("k1", "κ₁"),
    ("kinf", "κ∞"),
    ("rho", "ρ"),
    ("alpha", "α"),
    ("beta", "β"),
    ("gamma", "γ"),
    ("T", "T"),
    ("Q", "Q"),
    ("R", "R"),
    ("S", "S"),
    ("A", "A"),
    ("P0", "P⁰"),
    ("P1", "P¹"),
    ("Pinf", "P∞"),
    ("P10", "P¹₀"),
    ("Pplus", "P⁺∞"),
    ("Pminus", "P⁻∞"),
    ("P0inf", "P⁰∞"),
    ("Pinfinf", "P∞∞"),
)

# Auxiliary indeterminates for generic matrices and throwaway computations.
AUX_SYMBOLS: tuple[str, ...] = (
    ("u", "v", "w", "y", "z", "lam", "mu", "nu")
    + tuple(f"{c}{i}{j}" for c in "abcdmn" for i in (1, 2) for j in (1, 2))
    + tuple(f"s{i}" for i in range(8))
)

# internal expansion variable, never printed or parsed
_HIDDEN = ("_u",)

NAMES: tuple[str, ...] = tuple(a for a, _ in SYMBOL_TABLE) + AUX_SYMBOLS + _HIDDEN
DISPLAY: dict[str, str] = {a: d for a, d in SYMBOL_TABLE}
_INDEX = {n: i for i, n in enumerate(NAMES)}
_ALIASES: dict[str, str] = {n: n for n in NAMES if not n.startswith("_")}
_ALIASES.update({d: a for a, d in SYMBOL_TABLE})
_ALIASES.update({"p̂": "phat", "κ0": "k0", "κ1": "k1", "κinf": "kinf", "κ∞": "kinf",
                 "α": "alpha", "β": "beta", "γ": "gamma", "ρ": "rho"})

CTX = flint.fmpq_mpoly_ctx.get(NAMES, "lex")
_NGENS = len(NAMES)
_U = _INDEX["_u"]


class _Infinity:
    """The point ∞ of the projective line, usable as an expansion center."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "INF"

    def __str__(self) -> str:
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

# ---------------------------------------------------------------------------
# errors


class AlgebraError(ArithmeticError):
    pass


class DivisionByZeroFunction(ZeroDivisionError, AlgebraError):
    pass


class DenominatorVanishes(AlgebraError):
    pass


class NotAPerfectSquare(AlgebraError):
    pass


class UnknownSymbol(ValueError):
    def __init__(self, name: str, pos: int | None = None):
        self.name, self.pos = name, pos
        where = "" if pos is None else f" at position {pos}"
        super().__init__(f"unknown symbol {name!r}{where}")


class ExprSyntaxError(SyntaxError):
    def __init__(self, msg: str, text: str, pos: int):
        self.pos = pos
        super().__init__(f"{msg} at position {pos}: {text!r}")


class PoleObstruction(AlgebraError):
    """Raised by ``limit``; ``principal`` maps negative orders to coefficients."""

    def __init__(self, variable: str, center, principal: dict[int, "RatFunc"]):
        self.variable, self.center, self.principal = variable, center, principal
        parts = ", ".join(f"{k}: {v}" for k, v in sorted(principal.items()))
        super().__init__(f"pole in {variable} at {center}: {{{parts}}}")

    @property
    def residue(self) -> "RatFunc":
        return self.principal.get(-1, ZERO)


# ---------------------------------------------------------------------------
# polynomial helpers

_PZERO = CTX.from_dict({})
_PONE = CTX.from_dict({(0,) * _NGENS: 1})


def _gen(name: str):
    return CTX.gens()[_INDEX[name]]


def _var_index(v: Union[str, "RatFunc"]) -> int:
    if isinstance(v, RatFunc):
        names = v.free_symbols()
        if len(names) != 1 or v != RatFunc.symbol(next(iter(names))):
            raise ValueError(f"not a symbol: {v}")
        v = next(iter(names))
    try:
        return _INDEX[v]
    except KeyError:
        raise UnknownSymbol(v) from None


def _split(p, idx: int) -> dict[int, object]:
    """Coefficients of p as a polynomial in generator ``idx``."""
    buckets: dict[int, dict] = {}
    for mon, c in zip(p.monoms(), p.coeffs()):
        e = int(mon[idx])
        m = list(mon)
        m[idx] = 0
        buckets.setdefault(e, {})[tuple(m)] = c
    return {e: CTX.from_dict(d) for e, d in buckets.items()}


def _poly_subs(p, mapping: dict[int, tuple]):
    """p(v_i = a_i/b_i) as (numerator, denominator) polynomials."""
    idxs = sorted(mapping)
    degs = {i: max((m[i] for m in p.monoms()), default=0) for i in idxs}
    buckets: dict[tuple, dict] = {}
    for mon, c in zip(p.monoms(), p.coeffs()):
        key = tuple(mon[i] for i in idxs)
        m = list(mon)
        for i in idxs:
            m[i] = 0
        buckets.setdefault(key, {})[tuple(m)] = c
    pow_cache: dict[tuple, object] = {}

    def pw(i, which, e):
        k = (i, which, e)
        if k not in pow_cache:
            pow_cache[k] = mapping[i][which] ** e
        return pow_cache[k]

    num = _PZERO
    for key, d in buckets.items():
        term = CTX.from_dict(d)
        for i, e in zip(idxs, key):
            term = term * pw(i, 0, e) * pw(i, 1, degs[i] - e)
        num = num + term
    den = _PONE
    for i in idxs:
        den = den * pw(i, 1, degs[i])
    return num, den


def _fmpq(c) -> flint.fmpq:
    if isinstance(c, Fraction):
        return flint.fmpq(c.numerator, c.denominator)
    return flint.fmpq(c)


# ---------------------------------------------------------------------------
# RatFunc


Scalar = Union[int, Fraction]


class RatFunc:
    """Canonical quotient num/den: coprime, den monic in the lex order."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _canonical: bool = False):
        if den is None:
            den = _PONE
        if not _canonical:
            if den.is_zero():
                raise DivisionByZeroFunction("zero denominator")
            if num.is_zero():
                num, den = _PZERO, _PONE
            else:
                if not den.is_constant():
                    g = num.gcd(den)
                    if not g.is_one():
                        num, den = num / g, den / g
                lc = den.leading_coefficient()
                if lc != 1:
                    num, den = num / lc, den / lc
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *_):
        raise AttributeError("RatFunc is immutable")

    # constructors
    @staticmethod
    def symbol(name: str) -> "RatFunc":
        name = _ALIASES.get(name, name)
        if name not in _INDEX:
            raise UnknownSymbol(name)
        return RatFunc(_gen(name), _PONE, _canonical=True)

    @staticmethod
    def const(c: Scalar) -> "RatFunc":
        c = Fraction(c)
        if c == 0:
            return RatFunc(_PZERO, _PONE, _canonical=True)
        return RatFunc(CTX.from_dict({(0,) * _NGENS: _fmpq(c)}), _PONE, _canonical=True)

    @staticmethod
    def coerce(v) -> "RatFunc":
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, (int, Fraction)):
            return RatFunc.const(v)
        if isinstance(v, str):
            return parse(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to RatFunc")

    # predicates
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        if self.num.is_zero():
            return Fraction(0)
        c = self.num.leading_coefficient() / self.den.leading_coefficient()
        return Fraction(int(c.p), int(c.q))

    def free_symbols(self) -> frozenset[str]:
        used = set()
        for p in (self.num, self.den):
            for m in p.monoms():
                used.update(NAMES[i] for i, e in enumerate(m) if e)
        return frozenset(used)

    def depends_on(self, v: str) -> bool:
        i = _var_index(v)
        return any(m[i] for p in (self.num, self.den) for m in p.monoms())

    def degree_in(self, v: str) -> tuple[int, int]:
        """(deg num, deg den) in v."""
        i = _var_index(v)
        return (int(max((m[i] for m in self.num.monoms()), default=0)),
                int(max((m[i] for m in self.den.monoms()), default=0)))

    # arithmetic
    def __add__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return ZERO
        # cross-cancel before multiplying keeps the gcds small
        g1 = self.num.gcd(o.den) if not o.den.is_constant() else _PONE
        g2 = o.num.gcd(self.den) if not self.den.is_constant() else _PONE
        n = (self.num / g1) * (o.num / g2)
        d = (self.den / g2) * (o.den / g1)
        lc = d.leading_coefficient()
        if lc != 1:
            n, d = n / lc, d / lc
        return RatFunc(n, d, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise DivisionByZeroFunction("inverse of the zero function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n, _canonical=True)

    # comparison
    def __eq__(self, other):
        o = _coerce_or_none(other) if not isinstance(other, str) else None
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((tuple(sorted(self.num.to_dict().items())),
                      tuple(sorted(self.den.to_dict().items()))))
            object.__setattr__(self, "_hash", h)
        return h

    def __reduce__(self):
        return (parse, (to_text(self),))

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"RatFunc({to_text(self)!r})"

    # calculus and substitution
    def diff(self, v: str) -> "RatFunc":
        return differentiate(self, v)

    def subs(self, mapping: Mapping[str, object]) -> "RatFunc":
        return substitute_many(self, mapping)


def _coerce_or_none(v) -> RatFunc | None:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
        return RatFunc.const(v)
    return None


ZERO = RatFunc.const(0)
ONE = RatFunc.const(1)


def sym(name: str) -> RatFunc:
    return RatFunc.symbol(name)


def symbols(names: str) -> tuple[RatFunc, ...]:
    return tuple(sym(n) for n in names.replace(",", " ").split())


# ---------------------------------------------------------------------------
# operations


def field_ops(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def differentiate(r: RatFunc, v: str) -> RatFunc:
    name = NAMES[_var_index(v)]
    dn = r.num.derivative(name)
    if r.den.is_constant():
        return RatFunc(dn, r.den)
    dd = r.den.derivative(name)
    return RatFunc(dn * r.den - r.num * dd, r.den * r.den)


def substitute_many(r: RatFunc, mapping: Mapping[str, object]) -> RatFunc:
    """Simultaneous substitution v_i <- g_i."""
    m: dict[int, tuple] = {}
    for v, g in mapping.items():
        g = RatFunc.coerce(g)
        m[_var_index(v)] = (g.num, g.den)
    if not m:
        return r
    nn, nd = _poly_subs(r.num, m)
    dn, dd = _poly_subs(r.den, m)
    if dn.is_zero():
        raise DenominatorVanishes(f"denominator of {r} vanishes under substitution")
    return RatFunc(nn, nd) * RatFunc(dd, dn)


def substitute(r: RatFunc, v: str, g) -> RatFunc:
    return substitute_many(r, {v: g})


@dataclass(frozen=True)
class LaurentExpansion:
    variable: str
    center: object
    coefficients: dict[int, RatFunc] = field(compare=False)
    min_order: int
    max_order_computed: int

    def coeff(self, k: int) -> RatFunc:
        if k > self.max_order_computed:
            raise IndexError(f"order {k} not computed (max {self.max_order_computed})")
        return self.coefficients.get(k, ZERO)

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients.values())

    def principal_part(self) -> dict[int, RatFunc]:
        return {k: c for k, c in self.coefficients.items() if k < 0 and not c.is_zero()}

    def resum(self) -> RatFunc:
        """Truncated sum as a RatFunc in the original variable."""
        v = sym(self.variable)
        local = v.inverse() if self.center is INF else v - self.center
        total = ZERO
        for k, c in self.coefficients.items():
            total = total + c * local ** k
        return total


def _local(r: RatFunc, v: str, center) -> tuple:
    """Numerator and denominator of r in the local parameter _u."""
    if center is INF:
        g = RatFunc(_PONE, _gen("_u"), _canonical=True)
    else:
        c = RatFunc.coerce(center)
        if c.depends_on(v):
            raise ValueError(f"center {c} depends on {v}")
        g = c + RatFunc.symbol("_u")
    s = substitute(r, v, g)
    return s.num, s.den


def laurent(r: RatFunc, v: str, center, max_order: int) -> LaurentExpansion:
    if r.is_zero():
        return LaurentExpansion(v, center, {}, max_order + 1, max_order)
    num, den = _local(r, v, center)
    ns, ds = _split(num, _U), _split(den, _U)
    j0, k0 = min(ns), min(ds)
    lo = j0 - k0
    nterms = max_order - lo + 1
    d0 = RatFunc(ds[k0])
    coeffs: dict[int, RatFunc] = {}
    cs: list[RatFunc] = []
    dd = {i - k0: RatFunc(p) for i, p in ds.items()}
    for n in range(max(nterms, 0)):
        acc = RatFunc(ns[j0 + n]) if (j0 + n) in ns else ZERO
        for i in range(1, n + 1):
            di = dd.get(i)
            if di is not None and not cs[n - i].is_zero():
                acc = acc - di * cs[n - i]
        cn = acc / d0
        cs.append(cn)
        coeffs[lo + n] = cn
    return LaurentExpansion(v, center, coeffs, lo, max_order)


def pole_order(r: RatFunc, v: str, center) -> int:
    """-min_order of r at center, or 0 when r is holomorphic there."""
    if r.is_zero():
        return 0
    num, den = _local(r, v, center)
    return max(0, min(_split(den, _U)) - min(_split(num, _U)))


def valuation(r: RatFunc, v: str, center) -> int | None:
    if r.is_zero():
        return None
    num, den = _local(r, v, center)
    return min(_split(num, _U)) - min(_split(den, _U))


def residue(r: RatFunc, v: str, center) -> RatFunc:
    """Residue of the 1-form r dv; at ∞ the -du/u² Jacobian is included."""
    if center is INF:
        u = sym(v)
        form = substitute(r, v, u.inverse()) * (-(u ** -2))
        return laurent(form, v, 0, -1).coeff(-1)
    return laurent(r, v, center, -1).coeff(-1)


def limit(r: RatFunc, v: str, center) -> RatFunc:
    order = pole_order(r, v, center)
    if order > 0:
        exp = laurent(r, v, center, -1)
        raise PoleObstruction(v, center, exp.principal_part())
    return laurent(r, v, center, 0).coeff(0)


def _sqrt_poly(p):
    c, facs = p.factor_squarefree()
    c = flint.fmpq(c)
    if c < 0:
        return None
    cn, cd = int(c.p), int(c.q)
    rn, rd = _isqrt(cn), _isqrt(cd)
    if rn is None or rd is None:
        return None
    out = CTX.from_dict({(0,) * _NGENS: flint.fmpq(rn, rd)})
    for f, m in facs:
        if m % 2:
            return None
        out = out * f ** (m // 2)
    return out


def _isqrt(n: int) -> int | None:
    import math
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt_exact(r: RatFunc) -> RatFunc:
    if r.is_zero():
        return ZERO
    sn, sd = _sqrt_poly(r.num), _sqrt_poly(r.den)
    if sn is None or sd is None:
        raise NotAPerfectSquare(f"{r} is not a square in the rational function field")
    s = RatFunc(sn, sd)
    if s.num.leading_coefficient() < 0:
        s = -s
    return s


# ---------------------------------------------------------------------------
# printing


def _poly_text(p) -> str:
    return str(p) if not p.is_zero() else "0"


def _needs_parens(s: str, for_den: bool) -> bool:
    if " " in s:
        return True
    if s.startswith("-"):
        return True
    return for_den and ("*" in s or "/" in s)


def to_text(r: RatFunc) -> str:
    ns = _poly_text(r.num)
    if r.den.is_one():
        return ns
    ds = _poly_text(r.den)
    if _needs_parens(ns, False) and not (r.num.is_constant()):
        ns = f"({ns})"
    if _needs_parens(ds, True):
        ds = f"({ds})"
    return f"{ns}/{ds}"


def pretty(r: RatFunc) -> str:
    """Display form with the unicode symbol names (not re-parseable in general)."""
    s = to_text(r)
    return re.sub(r"[A-Za-z_][A-Za-z0-9_]*",
                  lambda m: DISPLAY.get(m.group(0), m.group(0)), s)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([+\-*/^()])|([^\s\d+\-*/^()][^\s+\-*/^()]*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ExprSyntaxError("unexpected character", text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", m.group(1), start))
        elif m.group(2):
            toks.append(("op", m.group(2), start))
        else:
            toks.append(("name", m.group(3), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, extra: Mapping[str, RatFunc] | None):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.extra = extra or {}

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, val: str):
        tok = self.take()
        if tok[1] != val:
            raise ExprSyntaxError(f"expected {val!r}", self.text, tok[2])

    def parse(self) -> RatFunc:
        if self.peek()[0] == "end":
            raise ExprSyntaxError("empty expression", self.text, 0)
        r = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"unexpected {tok[1]!r}", self.text, tok[2])
        return r

    def expr(self) -> RatFunc:
        r = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            r = r + rhs if op == "+" else r - rhs
        return r

    def term(self) -> RatFunc:
        r = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op, _, pos = self.take()[1], None, self.toks[self.i - 1][2]
            rhs = self.unary()
            if op == "*":
                r = r * rhs
            else:
                if rhs.is_zero():
                    raise DivisionByZeroFunction(f"division by zero at position {pos}")
                r = r / rhs
        return r

    def unary(self) -> RatFunc:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("-", "+"):
            self.take()
            r = self.unary()
            return -r if tok[1] == "-" else r
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            e = self.exponent()
            if e < 0 and base.is_zero():
                raise DivisionByZeroFunction("negative power of zero")
            return base ** e
        return base

    def exponent(self) -> int:
        tok = self.take()
        if tok[1] == "(":
            e = self.exponent()
            self.expect(")")
            return e
        if tok[1] == "-":
            return -self.exponent()
        if tok[0] != "int":
            raise ExprSyntaxError("exponent must be an integer", self.text, tok[2])
        return int(tok[1])

    def atom(self) -> RatFunc:
        kind, val, pos = self.take()
        if kind == "int":
            return RatFunc.const(int(val))
        if kind == "name":
            if val in self.extra:
                return self.extra[val]
            name = _ALIASES.get(val)
            if name is None:
                raise UnknownSymbol(val, pos)
            return RatFunc.symbol(name)
        if val == "(":
            r = self.expr()
            self.expect(")")
            return r
        raise ExprSyntaxError(f"unexpected {val or 'end of input'!r}", self.text, pos)


def parse(text: str, declare: Mapping[str, object] | None = None) -> RatFunc:
    """Parse an expression; ``declare`` binds extra names to RatFuncs."""
    extra = {k: RatFunc.coerce(v) for k, v in (declare or {}).items()}
    return _Parser(text, extra).parse()


def parse_center(text: str):
    """Like parse, but ``inf`` gives the point at infinity."""
    if text.strip() in ("inf", "oo", "∞"):
        return INF
    return parse(text)


def center_text(c) -> str:
    return "inf" if c is INF else to_text(RatFunc.coerce(c))


def total(items: Iterable[RatFunc]) -> RatFunc:
    return reduce(lambda a, b: a + b, items, ZERO)
