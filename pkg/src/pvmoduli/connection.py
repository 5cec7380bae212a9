"""Rank-2 meromorphic connections on P¹ stored as 2x2 RatFunc matrices.

Conventions:

* a Connection holds the coefficient M of dx, so the connection is d + M dx;
* gauge(conn, Φ) is the pull-back  M ↦ Φ⁻¹ M Φ + Φ⁻¹ dΦ/dx;
* change_coordinate(conn, f) rewrites M in X = f(x): M(f⁻¹(X))·(f⁻¹)'(X);
* the chart at ∞ of a connection on O ⊕ O(d) is obtained by x ↦ 1/x followed
  by the gauge diag(1, x^(-d)), so residual data at ∞ are read in a frame of
  the bundle rather than of the trivial one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .algebra import (
    INF, ONE, ZERO, AlgebraError, NotAPerfectSquare, RatFunc, center_text,
    laurent, parse, parse_center, pole_order, residue, sqrt_exact, substitute,
    substitute_many, sym, to_text,
)


class SingularGauge(AlgebraError):
    pass


class NotInstantiated(ValueError):
    pass


class RamifiedPole(AlgebraError):
    """R(Ω) has odd leading order: the eigenvalue difference is not single valued."""


class IrrationalPole(AlgebraError):
    pass


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class Matrix2:
    e11: RatFunc
    e12: RatFunc
    e21: RatFunc
    e22: RatFunc

    @staticmethod
    def of(e11, e12, e21, e22) -> "Matrix2":
        c = RatFunc.coerce
        return Matrix2(c(e11), c(e12), c(e21), c(e22))

    @staticmethod
    def identity() -> "Matrix2":
        return Matrix2(ONE, ZERO, ZERO, ONE)

    @staticmethod
    def zero() -> "Matrix2":
        return Matrix2(ZERO, ZERO, ZERO, ZERO)

    @staticmethod
    def diag(a, b) -> "Matrix2":
        return Matrix2.of(a, 0, 0, b)

    @property
    def entries(self) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
        return (self.e11, self.e12, self.e21, self.e22)

    def __iter__(self):
        return iter(self.entries)

    def map(self, fn) -> "Matrix2":
        return Matrix2(*(fn(e) for e in self.entries))

    def __add__(self, o: "Matrix2") -> "Matrix2":
        return Matrix2(*(a + b for a, b in zip(self, o)))

    def __sub__(self, o: "Matrix2") -> "Matrix2":
        return Matrix2(*(a - b for a, b in zip(self, o)))

    def __neg__(self) -> "Matrix2":
        return self.map(lambda e: -e)

    def __matmul__(self, o: "Matrix2") -> "Matrix2":
        a, b, c, d = self
        e, f, g, h = o
        return Matrix2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __mul__(self, o):
        if isinstance(o, Matrix2):
            return self @ o
        s = RatFunc.coerce(o)
        return self.map(lambda e: e * s)

    __rmul__ = __mul__

    def __truediv__(self, s) -> "Matrix2":
        s = RatFunc.coerce(s)
        return self.map(lambda e: e / s)

    def det(self) -> RatFunc:
        return self.e11 * self.e22 - self.e12 * self.e21

    def trace(self) -> RatFunc:
        return self.e11 + self.e22

    def inverse(self) -> "Matrix2":
        d = self.det()
        if d.is_zero():
            raise SingularGauge("matrix is not invertible")
        return Matrix2(self.e22 / d, -self.e12 / d, -self.e21 / d, self.e11 / d)

    def diff(self, v: str) -> "Matrix2":
        return self.map(lambda e: e.diff(v))

    def subs(self, mapping) -> "Matrix2":
        return self.map(lambda e: substitute_many(e, mapping))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self)

    def __str__(self) -> str:
        return "[[" + ", ".join(map(str, self.entries[:2])) + "], [" + \
            ", ".join(map(str, self.entries[2:])) + "]]"


# ---------------------------------------------------------------------------
# parameters


@dataclass(frozen=True)
class SpectralParams:
    kappa0: RatFunc = field(default_factory=lambda: sym("k0"))
    kappa1: RatFunc = field(default_factory=lambda: sym("k1"))
    kappaInf: RatFunc = field(default_factory=lambda: sym("kinf"))

    @staticmethod
    def of(k0, k1, kinf) -> "SpectralParams":
        c = RatFunc.coerce
        return SpectralParams(c(k0), c(k1), c(kinf))

    def rho(self) -> RatFunc:
        """ρ = ((κ₀+κ₁-1)² - κ∞²)/4."""
        return ((self.kappa0 + self.kappa1 - 1) ** 2 - self.kappaInf ** 2) / 4


@dataclass(frozen=True)
class ModuliPoint:
    t: RatFunc = field(default_factory=lambda: sym("t"))
    q: RatFunc = field(default_factory=lambda: sym("q"))
    p_hat: RatFunc = field(default_factory=lambda: sym("phat"))

    @staticmethod
    def of(t, q, p_hat) -> "ModuliPoint":
        c = RatFunc.coerce
        return ModuliPoint(c(t), c(q), c(p_hat))


def expand_rho(r: RatFunc, params: SpectralParams | None = None) -> RatFunc:
    """Replace the abbreviation ρ by its value in κ₀, κ₁, κ∞."""
    params = params or SpectralParams()
    return substitute(r, "rho", params.rho())


# ---------------------------------------------------------------------------
# Moebius maps


@dataclass(frozen=True)
class MoebiusMap:
    """x ↦ (a x + b)/(c x + d) with coefficients in the parameters."""

    a: RatFunc
    b: RatFunc
    c: RatFunc
    d: RatFunc

    def __post_init__(self):
        if (self.a * self.d - self.b * self.c).is_zero():
            raise SingularGauge("degenerate Moebius map")

    @staticmethod
    def of(a, b, c, d) -> "MoebiusMap":
        co = RatFunc.coerce
        return MoebiusMap(co(a), co(b), co(c), co(d))

    @staticmethod
    def identity() -> "MoebiusMap":
        return MoebiusMap(ONE, ZERO, ZERO, ONE)

    @staticmethod
    def inversion() -> "MoebiusMap":
        return MoebiusMap(ZERO, ONE, ONE, ZERO)

    @staticmethod
    def from_ratfunc(r: RatFunc, var: str = "x") -> "MoebiusMap":
        x = sym(var)
        dn, dd = r.degree_in(var)
        if dn > 1 or dd > 1:
            raise ValueError(f"{r} is not a Moebius map in {var}")
        n, d = RatFunc(r.num), RatFunc(r.den)
        a = n.diff(var)
        c = d.diff(var)
        return MoebiusMap(a, n - a * x, c, d - c * x)

    def as_ratfunc(self, var: str = "x") -> RatFunc:
        x = sym(var)
        return (self.a * x + self.b) / (self.c * x + self.d)

    def __call__(self, z):
        if z is INF:
            return INF if self.c.is_zero() else self.a / self.c
        z = RatFunc.coerce(z)
        den = self.c * z + self.d
        if den.is_zero():
            return INF
        return (self.a * z + self.b) / den

    def derivative_at(self, z) -> RatFunc:
        z = RatFunc.coerce(z)
        return (self.a * self.d - self.b * self.c) / (self.c * z + self.d) ** 2

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def compose(self, inner: "MoebiusMap") -> "MoebiusMap":
        """self ∘ inner."""
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = inner.a, inner.b, inner.c, inner.d
        return MoebiusMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def subs(self, mapping) -> "MoebiusMap":
        return MoebiusMap(*(substitute_many(e, mapping) for e in (self.a, self.b, self.c, self.d)))


# ---------------------------------------------------------------------------
# connections

Point = object  # RatFunc or INF


def _point_key(p) -> str:
    return center_text(p)


@dataclass(frozen=True, eq=False)
class Connection:
    matrix: Matrix2
    var: str = "x"
    degree: int = 0
    divisor: tuple | None = None  # declared ((point, order), ...) or None

    def polar_divisor(self) -> tuple:
        if self.divisor is not None:
            return self.divisor
        return actual_divisor(self)

    def _key(self):
        return (self.matrix, self.var, self.degree,
                frozenset((_point_key(p), o) for p, o in self.polar_divisor()))

    def __eq__(self, other):
        if not isinstance(other, Connection):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def with_matrix(self, m: Matrix2, *, degree: int | None = None, var: str | None = None,
                    divisor=None) -> "Connection":
        return Connection(m, var or self.var, self.degree if degree is None else degree, divisor)

    def subs(self, mapping) -> "Connection":
        return self.with_matrix(self.matrix.subs(mapping))

    def __str__(self) -> str:
        return serialize(self)


def normal_form(params: SpectralParams | None = None, pt: ModuliPoint | None = None,
                *, expand: bool = False) -> Connection:
    """The PV normal form Ω₀ on O ⊕ O(2); ρ stays a symbol unless ``expand``."""
    params = params or SpectralParams()
    pt = pt or ModuliPoint()
    x = sym("x")
    k0, k1 = params.kappa0, params.kappa1
    t, q, p = pt.t, pt.q, pt.p_hat
    rho = params.rho() if expand else sym("rho")
    K = (p ** 2 / (q * (q - 1) ** 2)
         + (k0 * (q - 1) ** 2 + (k1 - 1) * q * (q - 1) - t * q) * p / (q * (q - 1) ** 2)
         + rho * q + p / (q - 1))
    m = (Matrix2.of(0, 1, 0, t) / (x - 1) ** 2
         + Matrix2.of(0, -1, 0, -k1) / (x - 1)
         + Matrix2.of(0, 1, 0, -k0) / x
         + Matrix2.of(0, 0, -rho, 0) * x
         + Matrix2.of(0, 0, p, -1) / (x - q)
         + Matrix2.of(0, 0, K, 0))
    return Connection(m, "x", 2, ((ZERO, 1), (ONE, 2), (INF, 1), (q, 1)))


def k_hat(params: SpectralParams | None = None, pt: ModuliPoint | None = None,
          *, expand: bool = False) -> RatFunc:
    """The constant term K̂ of the lower-left entry."""
    pt = pt or ModuliPoint()
    m = normal_form(params, pt, expand=expand).matrix
    x, q, p = sym("x"), pt.q, pt.p_hat
    rho = (params or SpectralParams()).rho() if expand else sym("rho")
    return m.e21 + rho * x - p / (x - q)


def gauge(conn: Connection, phi: Matrix2) -> Connection:
    inv = phi.inverse()
    m = inv @ conn.matrix @ phi + inv @ phi.diff(conn.var)
    return conn.with_matrix(m, degree=conn.degree + det_degree_shift(phi, conn.var))


def det_degree_shift(phi: Matrix2, var: str = "x") -> int:
    """Finite zeros minus finite poles of det Φ in the base variable."""
    d = phi.det()
    if d.is_zero():
        raise SingularGauge("det of gauge matrix is identically zero")
    dn, dd = d.degree_in(var)
    return dn - dd


def elm(conn: Connection, point, sign: str) -> Connection:
    x = sym(conn.var)
    a = RatFunc.coerce(point)
    if sign in ("+", "plus"):
        return gauge(conn, Matrix2.diag(x - a, 1))
    if sign in ("-", "minus"):
        return gauge(conn, Matrix2.diag(1, 1 / (x - a)))
    raise ValueError(f"sign must be + or -, got {sign!r}")


def change_coordinate(conn: Connection, f: MoebiusMap, new_var: str | None = None) -> Connection:
    new_var = new_var or conn.var
    X = sym(new_var)
    finv = f.inverse().as_ratfunc(new_var)
    jac = finv.diff(new_var)
    m = conn.matrix.map(lambda e: substitute(e, conn.var, finv) * jac)
    return Connection(m, new_var, conn.degree, None)


def mapped_divisor(divisor: Iterable, f: MoebiusMap) -> tuple:
    return tuple((f(p), o) for p, o in divisor)


def infinity_chart(conn: Connection) -> Connection:
    """Coordinate 1/x around ∞, in the frame of O ⊕ O(degree)."""
    c = change_coordinate(conn, MoebiusMap.inversion())
    if conn.degree:
        c = gauge(c, Matrix2.diag(1, sym(conn.var) ** (-conn.degree)))
    return Connection(c.matrix, c.var, conn.degree, None)


def _local(conn: Connection, point) -> tuple[Matrix2, object]:
    if point is INF:
        return infinity_chart(conn).matrix, ZERO
    return conn.matrix, RatFunc.coerce(point)


def entry_pole_order(conn: Connection, point) -> int:
    m, c = _local(conn, point)
    return max(pole_order(e, conn.var, c) for e in m)


def actual_divisor(conn: Connection) -> tuple:
    """Pole points and orders read off from the entries' denominators."""
    orders: dict[str, tuple] = {}
    v = conn.var
    for e in conn.matrix:
        if e.is_zero() or not e.depends_on(v):
            continue
        _, facs = e.den.factor()
        for f, mult in facs:
            fr = RatFunc(f)
            deg = fr.degree_in(v)[0]
            if deg == 0:
                continue
            if deg > 1:
                raise IrrationalPole(f"pole along {fr}, not at a rational point")
            a = fr.diff(v)
            pt = -(substitute(fr, v, 0)) / a
            key = _point_key(pt)
            if key not in orders or orders[key][1] < mult:
                orders[key] = (pt, mult)
    out = sorted(orders.values(), key=lambda po: _point_key(po[0]))
    inf_order = entry_pole_order(conn, INF)
    if inf_order:
        out.append((INF, inf_order))
    return tuple(out)


def residual_matrix(conn: Connection, point, *, bundle_frame: bool = True) -> Matrix2:
    """Entrywise residue at point.  At ∞ with ``bundle_frame=False`` this is the
    plain 1-form residue (x ↦ 1/x with the -dX/X² Jacobian, no twist)."""
    if point is INF:
        if bundle_frame:
            c = infinity_chart(conn)
        else:
            c = change_coordinate(conn, MoebiusMap.inversion())
        return c.matrix.map(lambda e: residue(e, conn.var, ZERO))
    p = RatFunc.coerce(point)
    return conn.matrix.map(lambda e: residue(e, conn.var, p))


def principal_part(conn: Connection, point) -> list[Matrix2]:
    """[A_n, ..., A_1]: coefficients of (x-a)^(-k), highest order first."""
    m, c = _local(conn, point)
    n = max(pole_order(e, conn.var, c) for e in m)
    if n == 0:
        return []
    exps = [laurent(e, conn.var, c, -1) for e in m]
    return [Matrix2(*(ex.coeff(-k) for ex in exps)) for k in range(n, 0, -1)]


def discriminant_expansion(conn: Connection, point, max_order: int = -1):
    """Laurent expansion of R(Ω) = (tr Ω)² - 4 det Ω at the point."""
    m, c = _local(conn, point)
    R = m.trace() ** 2 - 4 * m.det()
    return laurent(R, conn.var, c, max_order)


def spectral_difference(conn: Connection, point) -> RatFunc:
    """Residue α₁ of the eigenvalue difference, from the expansion of R(Ω).

    Simple poles give sqrt_exact(c₂).  For R of leading order -2m with m ≥ 2
    the square root series is started at -sqrt_exact(c_{2m}), which reproduces
    α₁ = -c₃/(2√c₄) at double poles.
    """
    exp = discriminant_expansion(conn, point)
    if exp.is_zero or exp.min_order >= -1:
        return ZERO
    lo = exp.min_order
    if lo % 2:
        raise RamifiedPole(f"R(Ω) has leading order {lo} at {center_text(point)}")
    if lo == -2:
        return sqrt_exact(exp.coeff(-2))
    m = -lo // 2
    s = {-m: -sqrt_exact(exp.coeff(lo))}
    for j in range(1, m):
        acc = exp.coeff(lo + j)
        for i in range(1, j):
            acc = acc - s[-m + i] * s[-m + j - i]
        s[-m + j] = acc / (2 * s[-m])
    return s[-1]


def spectral_difference_squared(conn: Connection, point) -> RatFunc:
    """α₁² without choosing a sign where possible; c₃²/(4c₄) at double poles."""
    exp = discriminant_expansion(conn, point)
    if exp.is_zero or exp.min_order >= -1:
        return ZERO
    if exp.min_order == -2:
        return exp.coeff(-2)
    if exp.min_order == -4:
        return exp.coeff(-3) ** 2 / (4 * exp.coeff(-4))
    return spectral_difference(conn, point) ** 2


def fuchs_sum(conn: Connection, degE: int | None = None) -> RatFunc:
    """Σ of residual traces over the finite poles and ∞ (bundle frame)."""
    if degE is not None and degE != conn.degree:
        conn = Connection(conn.matrix, conn.var, degE, conn.divisor)
    total = ZERO
    for p, _ in conn.polar_divisor():
        if p is INF:
            continue
        total = total + residual_matrix(conn, p).trace()
    return total + residual_matrix(conn, INF).trace()


def genericity_check(params: SpectralParams) -> bool:
    """ε₀κ₀ + ε₁κ₁ + ε∞κ∞ ∉ Z for all signs, and no κ itself is an integer."""
    ks = (params.kappa0, params.kappa1, params.kappaInf)
    if not all(k.is_constant() for k in ks):
        raise NotInstantiated("genericity needs rational κ values")
    vals = [k.constant_value() for k in ks]
    if any(v.denominator == 1 for v in vals):
        return False
    for eps in product((1, -1), repeat=3):
        s = sum(e * v for e, v in zip(eps, vals))
        if Fraction(s).denominator == 1:
            return False
    return True


def divisor_holds(conn: Connection) -> bool:
    """Declared divisor bounds the actual pole orders everywhere."""
    declared = {_point_key(p): o for p, o in conn.polar_divisor()}
    actual = Connection(conn.matrix, conn.var, conn.degree, None).polar_divisor()
    return all(declared.get(_point_key(p), 0) >= o for p, o in actual)


# ---------------------------------------------------------------------------
# text format


def _point_text(p) -> str:
    s = center_text(p)
    return s if s.replace("_", "").isalnum() or s == "inf" else f"({s})"


def serialize(conn: Connection) -> str:
    div = "; ".join(f"{_point_text(p)}^{o}" for p, o in conn.polar_divisor())
    lines = [f"connection {conn.var} {conn.degree} | {div}"]
    lines += [to_text(e) for e in conn.matrix]
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> Connection:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 5 or not lines[0].startswith("connection "):
        raise ValueError("expected a header line and four entry lines")
    head, _, div = lines[0].partition("|")
    _, var, deg = head.split()
    divisor = []
    for tok in filter(None, (s.strip() for s in div.split(";"))):
        pt, _, o = tok.rpartition("^")
        divisor.append((parse_center(pt), int(o)))
    m = Matrix2(*(parse(ln) for ln in lines[1:]))
    return Connection(m, var, int(deg), tuple(divisor))
