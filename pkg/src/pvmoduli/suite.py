"""The verification catalogue: named, independent, deterministic checks.

A check procedure returns ``(ok, witness)``.  ``run`` turns that into a
CheckResult: ok -> pass; not ok on a flagged check -> paper_discrepancy;
not ok otherwise (or any exception) -> fail.  Flagged checks are the ones
that compare against a published display suspected to be a typo; each has a
companion check that establishes the computed truth.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import boundary as bd
from . import reference as ref
from . import surface as sf
from .algebra import (
    INF, ONE, ZERO, PoleObstruction, RatFunc, laurent, limit, parse, residue,
    sqrt_exact, substitute_many, sym, to_text, valuation,
)
from .connection import (
    Connection, Matrix2, MoebiusMap, RamifiedPole, SpectralParams, change_coordinate,
    deserialize, divisor_holds, elm, expand_rho, fuchs_sum, gauge, genericity_check,
    normal_form, principal_part, residual_matrix, serialize, spectral_difference,
    spectral_difference_squared,
)
from .riccati import invariant_jets, jet_residual, riccati_rhs
from .symmetry import COORDS, IDENTITY, compose, difference, group_closure

STATUSES = ("pass", "fail", "paper_discrepancy")

x, X, q, t, phat = (sym(n) for n in ("x", "X", "q", "t", "phat"))
k0, k1, kinf, rho = (sym(n) for n in ("k0", "k1", "kinf", "rho"))
alpha, beta, gamma = (sym(n) for n in ("alpha", "beta", "gamma"))


class UnknownCheckId(KeyError):
    pass


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    paper_anchor: str
    run: Callable[[], tuple[bool, str]]
    flagged: bool = False

    @property
    def module(self) -> str:
        return self.id.split(".", 1)[0]


@dataclass(frozen=True)
class CheckResult:
    id: str
    status: str
    witness: str
    runtime: float
    anchor: str = ""

    def stable(self) -> dict:
        return {"id": self.id, "status": self.status, "witness": self.witness,
                "anchor": self.anchor}


# ---------------------------------------------------------------------------
# helpers


def _m(entries) -> Matrix2:
    return Matrix2(*(parse(e) if isinstance(e, str) else RatFunc.coerce(e) for e in entries))


def _cmp(got: Matrix2, want: Matrix2, label: str = "") -> tuple[bool, str]:
    diffs = []
    for name, a, b in zip(("e11", "e12", "e21", "e22"), got, want):
        if a != b:
            diffs.append(f"{label}{name}: computed {to_text(a)} expected {to_text(b)}")
    return not diffs, "; ".join(diffs)


def _all(*results: tuple[bool, str]) -> tuple[bool, str]:
    bad = [w for ok, w in results if not ok]
    return not bad, "; ".join(bad)


def _eq(a: RatFunc, b: RatFunc, label: str) -> tuple[bool, str]:
    if a == b:
        return True, ""
    return False, f"{label}: computed {to_text(a)} expected {to_text(b)}"


def _generic(prefix: str) -> Matrix2:
    return Matrix2(*(sym(f"{prefix}{i}{j}") for i in (1, 2) for j in (1, 2)))


# ---------------------------------------------------------------------------
# algebra


def _alg_field() -> tuple[bool, str]:
    a = parse("(x^2 - 1)/(x - 1)")
    b = parse("1/x + 1/(x - 1) - 1/(x - 1)^2")
    c = parse("q*t/t")
    return _all(_eq(a, parse("x + 1"), "cancellation"),
                _eq(b, parse("(2*x^2 - 4*x + 1)/(x*(x - 1)^2)"), "partial fractions"),
                _eq(c, q, "q*t/t"),
                _eq(parse("(a11 + a12)^2 - (a11 - a12)^2"), parse("4*a11*a12"), "square"))


def _alg_diff_subs() -> tuple[bool, str]:
    r = parse("1/(x*(x - 1)^2)")
    return _all(_eq(r.diff("x"), parse("-(3*x - 1)/(x^2*(x - 1)^3)"), "d/dx"),
                _eq(substitute_many(parse("x*q + t"), {"x": q, "q": x}), parse("x*q + t"),
                    "simultaneous swap"),
                _eq(substitute_many(parse("phat/(q - 1)"), {"phat": parse("-P1*q*t")}),
                    parse("-P1*q*t/(q - 1)"), "coordinate substitution"))


def _alg_laurent() -> tuple[bool, str]:
    r = parse("1/(x*(x - 1)^2)")
    e1 = laurent(r, "x", 1, 2)
    e0 = laurent(r, "x", 0, 1)
    ei = laurent(parse("x^2/(x - 1)"), "x", INF, 1)
    return _all(_eq(e1.coeff(-2), ONE, "c_-2 at 1"), _eq(e1.coeff(-1), -ONE, "c_-1 at 1"),
                _eq(e1.coeff(0), ONE, "c_0 at 1"), _eq(e0.coeff(-1), ONE, "c_-1 at 0"),
                _eq(ei.coeff(-1), ONE, "x^1 coefficient at inf"),
                _eq(ei.coeff(0), ONE, "x^0 coefficient at inf"),
                _eq(residue(r, "x", INF), ZERO, "residue at inf"))


def _alg_sqrt() -> tuple[bool, str]:
    ok = [_eq(sqrt_exact(parse("t^2")), t, "sqrt t^2"),
          _eq(sqrt_exact(parse("(k0 + 1)^2/4")), parse("(k0 + 1)/2"), "sqrt (k0+1)^2/4"),
          _eq(sqrt_exact(expand_rho(parse("(k0 + k1 - 1)^2 - 4*rho"))), kinf, "sqrt via rho")]
    try:
        sqrt_exact(x)
        ok.append((False, "sqrt(x) accepted"))
    except ArithmeticError:
        pass
    return _all(*ok)


def _alg_rho() -> tuple[bool, str]:
    return _eq(parse(ref.RHO), SpectralParams().rho(), "rho")


def _alg_random() -> tuple[bool, str]:
    """Field axioms, Laurent resummation, sqrt_exact and the parse/print round
    trip, each on 100 seeded random elements."""
    rnd = random.Random(20240611)
    names = ("x", "q", "t", "k0")

    def rand_poly():
        s = ZERO
        for _ in range(rnd.randint(1, 3)):
            mono = RatFunc.const(Fraction(rnd.randint(-5, 5), rnd.randint(1, 3)))
            for n in names:
                mono = mono * sym(n) ** rnd.randint(0, 2)
            s = s + mono
        return s

    def rand_rat():
        d = ZERO
        while d.is_zero():
            d = rand_poly()
        return rand_poly() / d

    bad = []
    for i in range(100):
        a, b, c = rand_rat(), rand_rat(), rand_rat()
        if (a + b) * c != a * c + b * c or (a * b) * c != a * (b * c) or a + b != b + a:
            bad.append(f"field axioms #{i}")
        if not a.is_zero() and a * a.inverse() != ONE:
            bad.append(f"inverse #{i}")
        center = rnd.choice((0, 1, -2, INF))
        order = rnd.randint(0, 2)
        e = laurent(a, "x", center, order)
        rest = a - e.resum()
        if not rest.is_zero() and valuation(rest, "x", center) <= order:
            bad.append(f"laurent resum #{i}")
        if not a.is_zero():
            r = sqrt_exact(a * a)
            if r != a and r != -a:
                bad.append(f"sqrt_exact #{i}")
        if parse(to_text(a)) != a:
            bad.append(f"round trip #{i}: {to_text(a)}")
    return not bad, "; ".join(bad)


# ---------------------------------------------------------------------------
# connection basics


def _euler_residue() -> tuple[bool, str]:
    A = _generic("a")
    conn = Connection(A / x, "x", 0, None)
    res_inf = residual_matrix(conn, INF, bundle_frame=False)
    scalar = residue(parse("A/x"), "x", INF)
    return _all(_cmp(res_inf, A * -1, "matrix "), _eq(scalar, -sym("A"), "scalar"))


def _euler_fuchs() -> tuple[bool, str]:
    conn = Connection(_generic("a") / x, "x", 0, None)
    return _eq(fuchs_sum(conn), ZERO, "Fuchs sum of A dx/x")


def _gauge_setup():
    M0, M1 = _generic("m"), _generic("n")
    A2, A1, C0 = _generic("a"), _generic("b"), _generic("c")
    conn = Connection(A2 / x ** 2 + A1 / x + C0, "x", 0, None)
    return M0, M1, A2, A1, conn, M0 + M1 * x


def _gauge_top() -> tuple[bool, str]:
    M0, M1, A2, A1, conn, phi = _gauge_setup()
    pp = principal_part(gauge(conn, phi), ZERO)
    return _cmp(pp[0], M0.inverse() @ A2 @ M0, "order 2 ")


def _gauge_order1() -> tuple[bool, str]:
    M0, M1, A2, A1, conn, phi = _gauge_setup()
    pp = principal_part(gauge(conn, phi), ZERO)
    Mi = M0.inverse()
    want = Mi @ A1 @ M0 + Mi @ A2 @ M1 - Mi @ M1 @ Mi @ A2 @ M0
    return _cmp(pp[1], want, "order 1 ")


def _gauge_convention() -> tuple[bool, str]:
    """The pull-back reading reproduces the order-1 display; push-forward does not."""
    M0, M1, A2, A1, conn, phi = _gauge_setup()
    Mi = M0.inverse()
    want = Mi @ A1 @ M0 + Mi @ A2 @ M1 - Mi @ M1 @ Mi @ A2 @ M0
    pull = principal_part(gauge(conn, phi), ZERO)[1]
    inv = phi.inverse()
    push_m = phi @ conn.matrix @ inv - phi.diff("x") @ inv
    push = principal_part(Connection(push_m, "x", 0, None), ZERO)[1]
    if pull != want:
        return False, "pull-back order-1 coefficient differs from display"
    if push == want:
        return False, "both readings match; convention undetermined"
    return True, ""


def _gauge_roundtrip() -> tuple[bool, str]:
    conn = normal_form()
    phi = Matrix2.of(1, x, 0, 1)
    back = gauge(gauge(conn, phi), phi.inverse())
    return _cmp(back.matrix, conn.matrix)


def _elm_degree() -> tuple[bool, str]:
    conn = normal_form()
    return _all(_eq(RatFunc.coerce(elm(conn, q, "+").degree), RatFunc.coerce(3), "elm+ degree"),
                _eq(RatFunc.coerce(elm(conn, q, "-").degree), RatFunc.coerce(1), "elm- degree"),
                _eq(fuchs_sum(elm(conn, q, "+")), RatFunc.coerce(-3), "Fuchs after elm+"),
                _eq(fuchs_sum(elm(conn, q, "-")), RatFunc.coerce(-1), "Fuchs after elm-"))


def _elm_inverse() -> tuple[bool, str]:
    """elm+ then elm- on the opposite line (swap first) returns the original;
    elm- and elm+ at one point differ by the scalar gauge 1/(x-a)."""
    conn = normal_form()
    J = Matrix2.of(0, 1, 1, 0)
    there = gauge(elm(conn, q, "+"), J)
    back = gauge(elm(there, q, "-"), J)
    scalar = elm(conn, q, "+").matrix - Matrix2.identity() * (1 / (x - q))
    return _all(_cmp(back.matrix, conn.matrix, "round trip "),
                _eq(RatFunc.coerce(back.degree), RatFunc.coerce(2), "degree"),
                _cmp(elm(conn, q, "-").matrix, scalar, "scalar relation "))


def _elm_example() -> tuple[bool, str]:
    """elm- at q on a generic connection on the trivial bundle, against the display."""
    W = _generic("c")
    got = elm(Connection(W, "x", 0, None), q, "-")
    want = _m(ref.ELM_EXAMPLE)
    return _all(_cmp(got.matrix, want),
                _eq(RatFunc.coerce(got.degree), RatFunc.coerce(ref.ELM_EXAMPLE_DEGREE),
                    "bundle degree"))


def _elm_apparent() -> tuple[bool, str]:
    """The residual matrix at q is [[0,0],[phat,-1]]: eigenvalues 0 and -1."""
    conn = normal_form()
    res = residual_matrix(conn, q)
    ev = spectral_difference(conn, q)
    return _all(_eq(res.trace(), -ONE, "trace of residual at q"),
                _eq(res.det(), ZERO, "det of residual at q"),
                _eq(ev, ONE, "eigenvalue difference at q"))


def _nf_structure() -> tuple[bool, str]:
    conn = normal_form()
    m = conn.matrix
    return _all(_eq(m.e11, ZERO, "e11"), _eq(m.e12, parse("1/(x*(x - 1)^2)"), "e12"),
                (divisor_holds(conn), "declared divisor violated"))


def _nf_principal() -> tuple[bool, str]:
    conn = normal_form()
    out = []
    for pt, mats in ref.NORMAL_FORM_PRINCIPAL.items():
        got = principal_part(conn, parse(pt))
        if len(got) != len(mats):
            out.append((False, f"pole order at {pt}: {len(got)}"))
            continue
        for k, (g, w) in enumerate(zip(got, mats)):
            out.append(_cmp(g, _m(w), f"at {pt} [{k}] "))
    out.append(_cmp(residual_matrix(conn, INF), _m(ref.NORMAL_FORM_RESIDUE_INF), "at inf "))
    return _all(*out)


def _nf_divisor() -> tuple[bool, str]:
    conn = normal_form()
    actual = Connection(conn.matrix, "x", 2, None).polar_divisor()
    got = {to_text(p) if p is not INF else "inf": o for p, o in actual}
    want = {"0": 1, "1": 2, "inf": 1, "q": 1}
    return got == want, f"actual divisor {got}"


def _nf_fuchs() -> tuple[bool, str]:
    return _eq(fuchs_sum(normal_form()), RatFunc.coerce(-2), "Fuchs sum")


def _nf_roundtrip() -> tuple[bool, str]:
    conn = normal_form()
    return deserialize(serialize(conn)) == conn, "serialization round trip changed the connection"


def _spectral_simple() -> tuple[bool, str]:
    conn = normal_form()
    ce = normal_form(expand=True)
    return _all(_eq(spectral_difference(conn, ZERO), k0, "at 0"),
                _eq(spectral_difference(conn, q), ONE, "at q"),
                _eq(spectral_difference_squared(ce, INF), kinf ** 2, "squared at inf"))


def _spectral_double() -> tuple[bool, str]:
    conn = normal_form()
    return _all(_eq(spectral_difference(conn, ONE), k1, "alpha1 at 1"),
                _eq(spectral_difference_squared(conn, ONE), k1 ** 2, "c3^2/(4 c4) at 1"))


def _genericity() -> tuple[bool, str]:
    cases = {(Fraction(1, 3), Fraction(1, 5), Fraction(1, 7)): True,
             (Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)): False,
             (Fraction(0), Fraction(1, 3), Fraction(1, 5)): False}
    bad = [f"{k}: got {genericity_check(SpectralParams.of(*k))}" for k, v in cases.items()
           if genericity_check(SpectralParams.of(*k)) != v]
    return not bad, "; ".join(bad)


def _moebius_covariance() -> tuple[bool, str]:
    rnd = random.Random(7)
    while True:
        a, b, c, d = (Fraction(rnd.randint(-9, 9), rnd.randint(1, 4)) for _ in range(4))
        if a * d - b * c != 0 and c != 0 and d != 0 and c + d != 0:
            break
    f = MoebiusMap.of(a, b, c, d)
    conn = normal_form()
    new = change_coordinate(conn, f, "X")
    out = []
    for p in (ZERO, q):
        out.append(_cmp(residual_matrix(new, f(p)), residual_matrix(conn, p), f"res at f({p}) "))
    out.append(_cmp(residual_matrix(new, f(INF)), residual_matrix(conn, INF, bundle_frame=False),
                    "res at f(inf) "))
    top = principal_part(new, f(ONE))[0]
    out.append(_cmp(top, Matrix2.of(0, 1, 0, t) * f.derivative_at(ONE), "top at f(1) "))
    return _all(*out)


# ---------------------------------------------------------------------------
# riccati


def _ric_rhs() -> tuple[bool, str]:
    r = riccati_rhs(normal_form())
    m = normal_form().matrix
    return _all(_eq(r.coeff_y2, m.e12, "y^2"), _eq(r.coeff_y1, -m.e22, "y"),
                _eq(r.coeff_y0, -m.e21, "1"))


def _jet_set(jets) -> set:
    return {tuple(to_text(c) for c in j.coefficients) for j in jets}


def _ric_jets0() -> tuple[bool, str]:
    got = _jet_set(invariant_jets(normal_form(), ZERO, 0))
    want = {("0",), (to_text(-k0),)}
    return got == want, f"jets at 0: {sorted(got)}"


def _ric_jets1() -> tuple[bool, str]:
    got = _jet_set(invariant_jets(normal_form(), ONE, 1))
    want = {("0", "0"), ("t", to_text(t - k1))}
    return got == want, f"jets at 1: {sorted(got)}"


def _ric_residuals() -> tuple[bool, str]:
    conn = normal_form()
    bad = []
    for pole, depth in ((ZERO, 2), (ONE, 3)):
        for j in invariant_jets(conn, pole, depth):
            if j.resonant_at is not None:
                continue
            res = jet_residual(conn, j, j.depth)
            if any(not r.is_zero() for r in res):
                bad.append(f"{j}: {[to_text(r) for r in res]}")
    return not bad, "; ".join(bad)


def _ric_eigen() -> tuple[bool, str]:
    """Depth-0 jets are the slopes of the residual eigenvectors."""
    conn = normal_form()
    res = residual_matrix(conn, ZERO)
    out = []
    for j in invariant_jets(conn, ZERO, 0):
        v = Matrix2.of(1, 0, j.coefficients[0], 0)
        w = res @ v
        # (1, y) is an eigenvector iff w2 = y * w1
        out.append(_eq(w.e21, j.coefficients[0] * w.e11, f"eigen slope {to_text(j.coefficients[0])}"))
    return _all(*out)


def _leading(r: RatFunc, center, order: int) -> RatFunc:
    return laurent(r, "x", center, -order).coeff(-order)


def _ric_display0() -> tuple[bool, str]:
    r = riccati_rhs(normal_form())
    got = tuple(_leading(c, ZERO, 1) for c in (r.coeff_y2, r.coeff_y1, r.coeff_y0))
    want = tuple(_leading(parse(s), ZERO, 1) for s in ref.RICCATI_DISPLAY_X0)
    labels = ("y^2", "y", "1")
    return _all(*(_eq(g, w, f"residue of {lb} coefficient") for g, w, lb in zip(got, want, labels)))


def _ric_display1() -> tuple[bool, str]:
    r = riccati_rhs(normal_form())
    out = []
    for got, disp, lb in zip((r.coeff_y2, r.coeff_y1, r.coeff_y0), ref.RICCATI_DISPLAY_X1,
                             ("y^2", "y", "1")):
        w = parse(disp)
        out.append(_eq(_leading(got, ONE, 2), _leading(w, ONE, 2), f"(x-1)^-2 of {lb}"))
    return _all(*out)


# ---------------------------------------------------------------------------
# confluence


def _conf_q0() -> tuple[bool, str]:
    obs = bd.confluence_obstruction(bd.Trajectory(0, (alpha, beta)))
    want = parse(ref.Q0_OBSTRUCTION)
    jets = {j.coefficients[0] for j in invariant_jets(normal_form(), ZERO, 0)}
    roots_ok = all(substitute_many(want, {"beta": c}).is_zero() for c in jets)
    return _all(_eq(obs[0], want, "Res_{q=0}"), (roots_ok, "jet values are not roots"))


def _conf_q1() -> tuple[bool, str]:
    obs = bd.confluence_obstruction(bd.Trajectory(1, (alpha, beta, gamma)))
    want = [parse(s) for s in ref.Q1_OBSTRUCTIONS]
    out = [_eq(obs[0], want[0], "order -1"), _eq(obs[1], want[1], "order -2")]
    for b, g in ref.Q1_ADMISSIBLE:
        vals = {"beta": parse(b), "gamma": parse(g)}
        out.append((all(substitute_many(o, vals).is_zero() for o in obs),
                    f"({b}, {g}) does not annihilate"))
    # jets at x=1 give (c1, c0) = (beta, gamma)
    pairs = {(to_text(j.coefficients[1]), to_text(j.coefficients[0]))
             for j in invariant_jets(normal_form(), ONE, 1)}
    want_pairs = {(to_text(parse(b)), to_text(parse(g))) for b, g in ref.Q1_ADMISSIBLE}
    out.append((pairs == want_pairs, f"jet pairs {sorted(pairs)}"))
    return _all(*out)


def _conf_qinf() -> tuple[bool, str]:
    obs = bd.confluence_obstruction(bd.Trajectory(INF, (alpha, beta)))
    want = expand_rho(beta ** 2 - (k0 + k1 - 1) * beta + rho)
    jets = invariant_jets(normal_form(expand=True), INF, 0)
    slopes = {j.coefficients[0] for j in jets}
    roots = {(k0 + k1 - 1 - kinf) / 2, (k0 + k1 - 1 + kinf) / 2}
    return _all(_eq(obs[0], want, "Res at Q=0"),
                (all(substitute_many(want, {"beta": r}).is_zero() for r in roots),
                 "roots do not annihilate"),
                (len(slopes) == 2, f"jets at inf: {[to_text(s) for s in slopes]}"))


def _conf_limits() -> tuple[bool, str]:
    out = []
    c = bd.confluence_limit(bd.Trajectory(0, (alpha, 0)))
    out.append(_eq(c.matrix.e21, alpha * k0 - x * rho, "q->0 minus e21"))
    try:
        bd.confluence_limit(bd.Trajectory(0, (alpha, 1)))
        out.append((False, "beta=1 did not obstruct"))
    except PoleObstruction as e:
        out.append(_eq(e.residue, 1 + k0, "obstruction residue at beta=1"))
    c1 = bd.confluence_limit(bd.Trajectory(1, (alpha, t - k1, t)))
    out.append((not c1.matrix.e21.is_zero(), "q->1 plus limit"))
    return _all(*out)


# ---------------------------------------------------------------------------
# boundary


def _limit_check(chart: str, which: str, branch: str | None):
    def run() -> tuple[bool, str]:
        got = bd.boundary_connection(chart, which, branch).matrix
        return _cmp(got, _m(ref.LIMIT_MATRICES[(chart, which, branch)]))
    return run


def _a0_direct() -> tuple[bool, str]:
    """Direct t -> 0 limit; the flip at x=1 leaves simple finite poles."""
    conn = bd.boundary_connection("A0", "direct")
    after = bd.elm_remark("A0", "direct")
    orders = {to_text(p) if p is not INF else "inf": o
              for p, o in Connection(after.matrix, "x", after.degree, None).polar_divisor()}
    return _all(_eq(conn.matrix.e12, parse("1/(x*(x - 1)^2)"), "e12 before elm"),
                (all(o == 1 for p, o in orders.items() if p != "inf"),
                 f"pole orders after elm {orders}"))


def _a0_elm() -> tuple[bool, str]:
    return _cmp(bd.elm_remark("A0", "f_pullback").matrix, _m(ref.A0_AFTER_ELM))


def _q0_generic() -> tuple[bool, str]:
    """Generic p̂: ramified node; p̂ in {0, -κ0}: hypergeometric."""
    conn = bd.boundary_connection("Q0", "f_pullback")
    out = []
    try:
        spectral_difference(conn, ONE)
        out.append((False, "generic phat gave an unramified node"))
    except RamifiedPole:
        pass
    for v in (ZERO, -k0):
        c = conn.with_matrix(conn.matrix.subs({"phat": v}))
        order = max(laurent(e, "X", ONE, -1).min_order for e in c.matrix if not e.is_zero())
        out.append((order >= -1, f"phat={to_text(v)} still has a double pole"))
    return _all(*out)


def _q1_invariant() -> tuple[bool, str]:
    """Jets at x=1 rewritten in P = -p̂q/t, to first order in q - 1."""
    out = []
    want = {to_text(parse(s)) for s in ref.Q1_INVARIANT_P1}
    got = set()
    for j in invariant_jets(normal_form(), ONE, 1):
        c0, c1 = j.coefficients
        P = -(c0 + c1 * (q - 1)) * q / t
        e = laurent(P, "q", ONE, 1)
        got.add(to_text(e.coeff(0) + e.coeff(1) * (q - 1)))
    out.append((got == want, f"invariant curves in P: {sorted(got)}"))
    return _all(*out)


def _q1_literal() -> tuple[bool, str]:
    """Direct Q1 limit read with P¹ = -p̂/(qt) instead of the rescaled trajectory."""
    traj = -(alpha / t ** 2 * (q - 1) ** 2 + beta * (q - 1) + gamma) * q * t
    nf = normal_form().matrix.subs({"phat": traj, "beta": (k1 - 2 * t) / t, "gamma": -1})
    nf = nf.subs({"beta": (k1 - 2 * t) / t, "gamma": -ONE})
    try:
        got = nf.map(lambda e: limit(e, "q", ONE))
    except PoleObstruction as e:
        return False, f"limit obstructed: {e}"
    return _cmp(got, _m(ref.LIMIT_MATRICES[("Q1", "direct", "plus")]))


def _qinf_transport() -> tuple[bool, str]:
    """Q∞ node data are the Φ₀∞-image (κ₀ ↔ κ∞) of the Q⁰ node data."""
    swap = {"k0": kinf, "kinf": k0}
    q0 = {substitute_many(v.squared, swap) for v in bd.node_spectral_check("Q0").values}
    qi = {v.squared for v in bd.node_spectral_check("Qinf").values}
    return q0 == qi, f"Q0 image {[to_text(v) for v in q0]} vs Qinf {[to_text(v) for v in qi]}"


def _qinf_limits() -> tuple[bool, str]:
    out = []
    for w in ("direct", "f_pullback"):
        for b in ("minus", "plus"):
            c = bd.boundary_connection("Qinf", w, b)
            out.append((not c.matrix.e12.is_zero(), f"{w}/{b}"))
    return _all(*out)


def _binfinf_limits() -> tuple[bool, str]:
    out = []
    for w in ("f_pullback", "g_pullback"):
        c = bd.boundary_connection("Binfinf", w)
        out.append((c.matrix.e11.is_zero(), f"{w} e11"))
    return _all(*out)


def _moebius_claims(chart: str):
    T = sym("T")

    def at_inf(r: RatFunc) -> RatFunc:
        return limit(substitute_many(r, {"t": 1 / T}), "T", ZERO)

    def run() -> tuple[bool, str]:
        c = bd.get_chart(chart)
        out = []
        if chart == "A0":
            f = c.moebius_maps["f"]
            for p in (ZERO, q, INF):
                out.append(_eq(limit(f(p), "t", ZERO), ZERO, f"f({p})"))
            out.append(_eq(limit(f.derivative_at(ONE) * t, "t", ZERO), ONE, "Df(1)*t"))
        elif chart == "Q0":
            f = c.moebius_maps["f"]
            for p in (ONE, INF):
                out.append(_eq(limit(f(p), "q", ZERO), ONE, f"f({p})"))
            out.append(_eq(limit(f.derivative_at(ONE) * t, "q", ZERO), ONE, "Df(1)*t"))
        elif chart == "Q1":
            f = c.moebius_maps["f"]
            for p in (ZERO, INF):
                out.append(_eq(limit(f(p), "q", ONE), ONE, f"f({p})"))
            out.append(_eq(limit(f.derivative_at(ONE) * t, "q", ONE), ONE, "Df(1)*t"))
        elif chart == "Qinf":
            f = c.moebius_maps["f"]
            Q = sym("Q")
            for p in (ZERO, ONE):
                out.append(_eq(limit(substitute_many(f(p), {"q": 1 / Q}), "Q", ZERO), ONE,
                               f"f({p})"))
            out.append(_eq(limit(substitute_many(f.derivative_at(ONE) * t, {"q": 1 / Q}),
                                 "Q", ZERO), ZERO, "Df(1)*t"))
        elif chart == "B10":
            f = c.moebius_maps["f"]
            A = sym("A")
            out.append(_eq(limit(f(ZERO), "q", ONE), ZERO, "f(0)"))
            out.append(_eq(limit(f.derivative_at(ONE) * A * (q - 1), "q", ONE), A, "Df(1)*t"))
        elif chart == "B0inf":
            f, g = c.moebius_maps["f"], c.moebius_maps["g"]
            R = sym("R")
            out.append(_eq(at_inf(f(R / t)), R / (R + 1), "f(R/t)"))
            out.append(_eq(at_inf(f.derivative_at(ONE) * t), ONE, "Df(1)*t"))
            out.append(_eq(at_inf(g(ZERO)), ONE, "g(0)"))
            out.append(_eq(at_inf(g(R / t)), ONE, "g(R/t)"))
            out.append(_eq(at_inf(g.derivative_at(ONE) * t), ONE, "Dg(1)*t"))
        elif chart == "Binfinf":
            f, g = c.moebius_maps["f"], c.moebius_maps["g"]
            S = sym("S")
            out.append(_eq(at_inf(f(INF)), ONE, "f(inf)"))
            out.append(_eq(at_inf(f(t / S)), ONE, "f(t/S)"))
            out.append(_eq(at_inf(f.derivative_at(ONE) * t), ONE, "Df(1)*t"))
            out.append(_eq(at_inf(g(t / S)), (S + 1) / S, "g(t/S)"))
            out.append(_eq(at_inf(g.derivative_at(ONE) * t), ONE, "Dg(1)*t"))
        elif chart == "Ainf":
            for nm in ("f", "g"):
                out.append(_eq(at_inf(c.moebius_maps[nm](x)), ONE, f"{nm}(x)"))
        return _all(*out)
    return run


# node spectral data


def _node_equal(chart: str):
    def run() -> tuple[bool, str]:
        cmp = bd.node_spectral_check(chart)
        want = ref.NODE_VALUES[chart]
        out = [(cmp.equal, "components disagree in the node")]
        for v in cmp.values:
            w = parse(want) if isinstance(want, str) else parse(want[v.branch])
            out.append(_eq(v.squared, w, f"{v.which}/{v.branch}"))
        return _all(*out)
    return run


def _node_q1() -> tuple[bool, str]:
    cmp = bd.node_spectral_check("Q1")
    want = ref.NODE_VALUES["Q1"]
    got_f = {v.squared for v in cmp.values if v.which == "f_pullback"}
    got_d = {v.squared for v in cmp.values if v.which == "direct"}
    return _all((got_f == {parse(s) ** 2 for s in want["f_pullback"]}, "pullback values"),
                (got_d == {parse(s) ** 2 for s in want["direct"]},
                 f"direct values {[to_text(v) for v in got_d]}"),
                (not cmp.equal, "values unexpectedly equal"))


def _node_pairs(chart: str, keys):
    def run() -> tuple[bool, str]:
        vals = {(v.which, v.branch): v for v in bd.node_spectral_check(chart).values}
        want = ref.NODE_VALUES[chart]
        out = []
        for k in keys:
            wk = k if k in want else k[0]
            out.append(_eq(vals[k].squared, parse(want[wk]) ** 2, "/".join(map(str, k))))
        return _all(*out)
    return run


# ---------------------------------------------------------------------------
# surface


def _pic_self() -> tuple[bool, str]:
    return sf.intersect(sf.NAMED["Ainf"], sf.NAMED["Ainf"]) == -2, "Ainf^2"


def _pic_K2() -> tuple[bool, str]:
    K = sf.canonical_class()
    return _all((K @ K == 5, f"K^2 = {K @ K}"), (K == sf.canonical_from_curves(),
                                                  "K from boundary curves differs"))


def _pic_KA() -> tuple[bool, str]:
    v = sf.canonical_class() @ sf.NAMED["Ainf"]
    return v == 0, f"K.Ainf = {v}"


def _pic_D_equal() -> tuple[bool, str]:
    d1, d2 = sf.moduli_divisor_D()
    return d1 == d2, f"{d1} vs {d2}"


def _pic_D_trivial() -> tuple[bool, str]:
    D = sf.moduli_divisor_D()[0]
    degs = {n: sf.line_bundle_degree(D, n) for n in ("Q0", "Q1", "Qinf", "Ainf")}
    return all(v == 0 for v in degs.values()), f"degrees {degs}"


def _pic_disc_base() -> tuple[bool, str]:
    a = sf.discrepancy(sf.NAMED["Ainf"])
    b = sf.discrepancy(sf.NAMED["B10"])
    return _all((a == 0, f"A_inf discrepancy {a}"), (b == 1, f"(-1)-curve discrepancy {b}"))


def _pic_disc_total() -> tuple[bool, str]:
    r = sf.discrepancy_total_space()
    return r.discrepancy == 0, f"total-space discrepancy {r.discrepancy}"


def _pic_census() -> tuple[bool, str]:
    c = sf.curve_census()
    return len(c.minus_two) == 1 and len(c.minus_one) == 7, \
        f"(-2): {c.minus_two}; (-1): {c.minus_one}"


def _pic_relations() -> tuple[bool, str]:
    rel = sf.pic_relations()
    bad = [k for k, v in rel.items() if not v]
    return not bad, "; ".join(bad)


def _pic_lattice() -> tuple[bool, str]:
    return _all((sf.change_of_basis_det() in (1, -1), "curve basis is not unimodular"),
                (sf.signature() == (1, 4), f"signature {sf.signature()}"))


def _pic_typo() -> tuple[bool, str]:
    """The published second expression for D, token 2B⁰₀ read literally as 2·B0inf."""
    n = sf.NAMED
    literal = n["A0"] + 2 * n["Q1"] + 2 * n["B0inf"] - n["B0inf"] - n["Binfinf"]
    D = sf.moduli_divisor_D()[0]
    if literal == D:
        return True, ""
    return False, f"literal reading gives {sf.format_curve_basis(literal)}; D is " \
                  f"{sf.format_curve_basis(D)} (matches with 2*B10)"


def _pic_sections() -> tuple[bool, str]:
    """Trivializing sections on Q⁰ read back through P⁰ = -p̂/(q-1)² at q = 0."""
    obstruction = parse(ref.Q0_OBSTRUCTION)
    formula = parse(ref.SECTION_Q0["formula"])
    bad = []
    for val in ref.SECTION_Q0["values"]:
        # solve P0 = val for p̂ at q = 0: p̂ = -val
        p_at_0 = -parse(val) * substitute_many((q - 1) ** 2, {"q": 0})
        check = substitute_many(formula, {"phat": p_at_0, "q": 0})
        if check != parse(val):
            bad.append(f"inversion failed for {val}")
        if not substitute_many(obstruction, {"beta": p_at_0}).is_zero():
            bad.append(f"P0 = {val} gives phat = {to_text(p_at_0)}, not a root of beta*(beta + k0)")
    return not bad, "; ".join(bad)


# ---------------------------------------------------------------------------
# symmetry


def _sym_psi_inv() -> tuple[bool, str]:
    bad = []
    for n in ("Psi0", "Psi1", "PsiInf"):
        d = difference(compose(n, n), IDENTITY)
        if any(not e.is_zero() for e in d):
            bad.append(n)
    return not bad, f"not involutive: {bad}"


def _sym_witness(d) -> str:
    return "; ".join(f"{c}: {to_text(v)}" for c, v in zip(COORDS, d) if not v.is_zero())


def _sym_psi_comm() -> tuple[bool, str]:
    bad = []
    for a, b in (("Psi0", "Psi1"), ("Psi0", "PsiInf"), ("Psi1", "PsiInf")):
        d = difference(compose(a, b), compose(b, a))
        if any(not e.is_zero() for e in d):
            bad.append(f"{a}*{b}: {_sym_witness(d)}")
    return not bad, "; ".join(bad)


def _sym_phi_inv() -> tuple[bool, str]:
    d = difference(compose("Phi0inf", "Phi0inf"), IDENTITY)
    return all(e.is_zero() for e in d), _sym_witness(d)


def _sym_phi_comm() -> tuple[bool, str]:
    bad = []
    for b in ("Psi0", "Psi1", "PsiInf"):
        d = difference(compose("Phi0inf", b), compose(b, "Phi0inf"))
        if any(not e.is_zero() for e in d):
            bad.append(f"Phi0inf*{b}: {_sym_witness(d)}")
    return not bad, "; ".join(bad)


def _sym_phi_conj() -> tuple[bool, str]:
    out = []
    for a, b in (("Psi0", "PsiInf"), ("PsiInf", "Psi0"), ("Psi1", "Psi1")):
        d = difference(compose("Phi0inf", a, "Phi0inf"), compose(b))
        out.append((all(e.is_zero() for e in d), f"Phi {a} Phi != {b}: {_sym_witness(d)}"))
    return _all(*out)


def _sym_order() -> tuple[bool, str]:
    n = group_closure(bound=64)
    return n == 16, f"order {n}"


# ---------------------------------------------------------------------------
# catalogue


def _c(id, desc, anchor, fn, flagged=False) -> Check:
    return Check(id, desc, anchor, fn, flagged)


def _build() -> tuple[Check, ...]:
    L = ref.LIMIT_MATRICES
    cs = [
        _c("algebra.field-identities", "cancellation and normalization examples", "plumbing", _alg_field),
        _c("algebra.derivative-substitution", "derivative and simultaneous substitution", "plumbing", _alg_diff_subs),
        _c("algebra.laurent", "Laurent coefficients at finite points and infinity", "plumbing", _alg_laurent),
        _c("algebra.sqrt-exact", "exact square roots and refusal of non-squares", "plumbing", _alg_sqrt),
        _c("algebra.rho", "parsed rho agrees with its definition", "three free parameters", _alg_rho),
        _c("algebra.random-identities", "seeded field axioms and print/parse round trip", "plumbing", _alg_random),
        _c("connection.euler-residue", "residue of A dx/x at infinity is -A", "Example euler", _euler_residue),
        _c("connection.euler-fuchs", "Fuchs sum of the Euler system vanishes", "Example euler", _euler_fuchs),
        _c("connection.gauge-top", "top coefficient is conjugated by M0", "Example gaugeloc", _gauge_top),
        _c("connection.gauge-order1", "order-one coefficient of the gauge action", "Example gaugeloc", _gauge_order1),
        _c("connection.gauge-convention", "pull-back reading matches, push-forward does not", "Example gaugeloc", _gauge_convention),
        _c("connection.gauge-roundtrip", "gauge by Phi then Phi^-1 is the identity", "plumbing", _gauge_roundtrip),
        _c("connection.elm-degree", "elm shifts degree and Fuchs sum by one", "elementary transformations", _elm_degree),
        _c("connection.elm-inverse", "opposite elm undoes elm; elm+ and elm- differ by a scalar", "elementary transformations", _elm_inverse),
        _c("connection.elm-example", "elm- at q on the trivial bundle, published result", "elementary transformations", _elm_example, True),
        _c("connection.apparent-q", "residual matrix at q has eigenvalues 0, -1", "apparent singularity", _elm_apparent),
        _c("connection.normal-form-structure", "entry (1,1) vanishes, (1,2) fixed, divisor respected", "normal form", _nf_structure),
        _c("connection.normal-form-principal", "principal parts at 0, 1, q and residual at infinity", "normal form", _nf_principal),
        _c("connection.normal-form-divisor", "actual polar divisor is 0 + 2*1 + q + inf", "normal form", _nf_divisor),
        _c("connection.fuchs", "Fuchs trace sum equals -2", "Fuchs relation", _nf_fuchs),
        _c("connection.serialization", "text format round trip", "plumbing", _nf_roundtrip),
        _c("connection.spectral-simple", "spectral differences at 0, q, inf", "residual spectral data", _spectral_simple),
        _c("connection.spectral-double", "alpha1 at the double pole is k1", "residual spectral data", _spectral_double),
        _c("connection.genericity", "genericity examples", "genericity", _genericity),
        _c("connection.moebius-covariance", "residues invariant, top term scales by Df(1)", "Lemma tangent", _moebius_covariance),
        _c("riccati.rhs", "Riccati coefficients from the connection matrix", "Riccati foliation", _ric_rhs),
        _c("riccati.jets-x0", "depth-0 branches at 0 are 0 and -k0", "solutions are precisely 0 and", _ric_jets0),
        _c("riccati.jets-x1", "depth-1 branches at 1 are (0,0) and (t, t-k1)", "Taylor expansion of order 2", _ric_jets1),
        _c("riccati.jet-residuals", "jets solve the equation to their depth", "Riccati foliation", _ric_residuals),
        _c("riccati.eigen-slopes", "depth-0 jets are residual eigenvector slopes", "Riccati foliation", _ric_eigen),
        _c("riccati.display-x0", "published local equation near 0", "Riccati near 0", _ric_display0, True),
        _c("riccati.display-x1", "published local equation near 1", "Riccati near 1", _ric_display1, True),
        _c("boundary.confluence-q0", "Res_{q=0} K is beta(beta+k0), roots are the jets", "Theorem confl", _conf_q0),
        _c("boundary.confluence-q1", "two obstructions at q=1 and their common zeros", "Theorem confl", _conf_q1),
        _c("boundary.confluence-qinf", "obstruction at q=inf and its roots", "Theorem confl", _conf_qinf),
        _c("boundary.confluence-limits", "limits along admissible and obstructed trajectories", "Theorem confl", _conf_limits),
        _c("boundary.A0.direct", "direct limit; elm at 1 leaves simple poles", "Connections on A0", _a0_direct),
        _c("boundary.A0.f_pullback", "A0 pullback limit matrix", "Connections on A0", _limit_check("A0", "f_pullback", None)),
        _c("boundary.A0.after-elm", "A0 pullback after elm- at the node", "Connections on A0", _a0_elm),
        _c("boundary.Q0.direct-minus", "Q0 direct limit, beta = 0", "Lemma Q0", _limit_check("Q0", "direct", "minus")),
        _c("boundary.Q0.direct-plus", "Q0 direct limit, beta = -k0", "Lemma Q0", _limit_check("Q0", "direct", "plus")),
        _c("boundary.Q0.f_pullback", "Q0 pullback limit with free phat", "Connections on Q0", _limit_check("Q0", "f_pullback", None)),
        _c("boundary.Q0.ramified", "generic phat ramifies the node; 0, -k0 do not", "Connections on Q0", _q0_generic),
        _c("boundary.Q1.f_pullback", "Q1 pullback limit matrix", "Lemma tildeP", _limit_check("Q1", "f_pullback", None)),
        _c("boundary.Q1.direct-minus", "Q1 direct limit, (beta, gamma) = (0, 0)", "Lemma Q1", _limit_check("Q1", "direct", "minus")),
        _c("boundary.Q1.direct-plus", "Q1 direct limit, second invariant curve", "Lemma Q1", _limit_check("Q1", "direct", "plus")),
        _c("boundary.Q1.invariant-curves", "invariant curves in the Q1 vertical coordinate", "Lemma invq1P", _q1_invariant),
        _c("boundary.Q1.literal-coordinate", "Q1 direct limit read with P1 = -phat/(q t)", "Lemma Q1", _q1_literal, True),
        _c("boundary.Qinf.limits", "Q-infinity limits exist on both branches", "Connections on Qinf", _qinf_limits),
        _c("boundary.Qinf.transport", "Q-infinity node data are the image of Q0's", "Connections on Qinf", _qinf_transport),
        _c("boundary.B10.direct", "B10 direct limit matrix", "Connections on B10", _limit_check("B10", "direct", None)),
        _c("boundary.B10.f_pullback", "B10 pullback limit matrix", "Connections on B10", _limit_check("B10", "f_pullback", None)),
        _c("boundary.B0inf.f_pullback", "B0inf f-limit matrix", "Connections on B0inf", _limit_check("B0inf", "f_pullback", None)),
        _c("boundary.B0inf.g_pullback", "B0inf g-limit matrix", "Connections on B0inf", _limit_check("B0inf", "g_pullback", None)),
        _c("boundary.Binfinf.limits", "Binfinf f- and g-limits exist", "Connections on Binfinf", _binfinf_limits),
        _c("boundary.Ainf.f-plus", "Ainf f-limit, P+", "Connections on Ainf", _limit_check("Ainf", "f_pullback", "plus")),
        _c("boundary.Ainf.f-minus", "Ainf f-limit, P-", "Connections on Ainf", _limit_check("Ainf", "f_pullback", "minus")),
        _c("boundary.Ainf.g-plus", "Ainf g-limit, P+", "Lemma Ppm", _limit_check("Ainf", "g_pullback", "plus")),
        _c("boundary.Ainf.g-minus", "Ainf g-limit, P-", "Lemma Ppm", _limit_check("Ainf", "g_pullback", "minus")),
        _c("boundary.Ainf.h", "Ainf h-limit in the Q1 coordinate", "Prop Ainfp", _limit_check("Ainf", "h_pullback", None)),
    ]
    for ch in bd.CHART_NAMES:
        flagged = ch == "Q0"
        cs.append(_c(f"boundary.moebius.{ch}", f"limits of marked points under the {ch} map",
                     f"Curves upon {ch}", _moebius_claims(ch), flagged))
    cs += [
        _c("boundary.node.A0", "equal node data on A0", "same residual spectral data", _node_equal("A0")),
        _c("boundary.node.Q0", "(k0+1)^2 and (k0-1)^2 on Q0", "same residual spectral data", _node_equal("Q0")),
        _c("boundary.node.B10", "equal node data on B10", "same residual spectral data", _node_equal("B10")),
        _c("boundary.node.Q1", "unequal node data on Q1", "same residual spectral data", _node_q1),
        _c("boundary.node.B0inf", "unequal node data on B0inf", "same residual spectral data",
           _node_pairs("B0inf", (("f_pullback", None), ("g_pullback", None)))),
        _c("boundary.node.Ainf", "unequal node data on Ainf, both branches but f-minus",
           "same residual spectral data",
           _node_pairs("Ainf", (("f_pullback", "plus"), ("g_pullback", "plus"),
                                ("g_pullback", "minus")))),
        _c("boundary.node.Ainf-f-minus", "published f-minus node value on Ainf",
           "same residual spectral data", _node_pairs("Ainf", (("f_pullback", "minus"),)), True),
        _c("pic.self-intersection", "Ainf^2 = -2", "weak del Pezzo", _pic_self),
        _c("pic.K-squared", "K^2 = 5 and K from boundary curves", "weak del Pezzo of degree 5", _pic_K2),
        _c("pic.K-dot-Ainf", "K.Ainf = 0", "canonical singularities", _pic_KA),
        _c("pic.D.equal", "two expressions of D coincide", "is trivial upon", _pic_D_equal),
        _c("pic.D.trivial-on-boundary", "D has degree 0 on Q0, Q1, Qinf, Ainf", "is trivial upon", _pic_D_trivial),
        _c("pic.discrepancy-base", "discrepancy 0 for Ainf, 1 for a (-1)-curve", "strictly canonical singularities", _pic_disc_base),
        _c("pic.discrepancy-total", "discrepancy in the total space is 0", "produces canonical singularities", _pic_disc_total),
        _c("pic.census", "one (-2)-curve and seven (-1)-curves", "weak del Pezzo of degree 5", _pic_census),
        _c("pic.relations", "linear relations among boundary curves", "Picard relations", _pic_relations),
        _c("pic.lattice", "unimodular curve basis, signature (1,4)", "plumbing", _pic_lattice),
        _c("pic.D-literal-token", "second D expression with the 2B00 token read literally", "is trivial upon", _pic_typo, True),
        _c("pic.Q0-sections", "trivializing sections on Q0 versus the confluence roots", "trivializing sections", _pic_sections, True),
        _c("symmetry.psi-involutions", "Psi0, Psi1, PsiInf are involutions", "transformation group of order 16", _sym_psi_inv),
        _c("symmetry.psi-commute", "the Psi generators commute", "transformation group of order 16", _sym_psi_comm),
        _c("symmetry.phi-involution", "Phi0inf is an involution", "transformation group of order 16", _sym_phi_inv),
        _c("symmetry.phi-commute", "Phi0inf commutes with the Psi generators", "transformation group of order 16", _sym_phi_comm, True),
        _c("symmetry.phi-conjugation", "Phi0inf swaps Psi0 and PsiInf, fixes Psi1", "transformation group of order 16", _sym_phi_conj),
        _c("symmetry.order", "the group has order 16", "transformation group of order 16", _sym_order),
    ]
    ids = [c.id for c in cs]
    assert len(ids) == len(set(ids)), "duplicate check id"
    return tuple(cs)


_CATALOGUE: tuple[Check, ...] | None = None


def all_checks() -> list[Check]:
    global _CATALOGUE
    if _CATALOGUE is None:
        _CATALOGUE = _build()
    return list(_CATALOGUE)


def _index() -> dict[str, Check]:
    return {c.id: c for c in all_checks()}


SUITES = ("algebra", "connection", "riccati", "boundary", "surface", "symmetry")


def suite_of(check: Check) -> str:
    return "surface" if check.id.startswith("pic.") else check.module


def select(suite: str | None = None, ids: Iterable[str] | None = None) -> list[str]:
    if ids:
        idx = _index()
        missing = [i for i in ids if i not in idx]
        if missing:
            raise UnknownCheckId(", ".join(missing))
        return list(ids)
    if suite in (None, "all"):
        return [c.id for c in all_checks()]
    if suite not in SUITES:
        raise UnknownCheckId(f"unknown suite {suite!r}")
    return [c.id for c in all_checks() if suite_of(c) == suite]


def run_one(check_id: str) -> CheckResult:
    c = _index().get(check_id)
    if c is None:
        raise UnknownCheckId(check_id)
    t0 = time.perf_counter()
    try:
        ok, witness = c.run()
        status = "pass" if ok else ("paper_discrepancy" if c.flagged else "fail")
    except Exception as e:  # a crash is a failure, reported with its message
        ok, status, witness = False, "fail", f"{type(e).__name__}: {e}"
    return CheckResult(c.id, status, "" if ok else witness, time.perf_counter() - t0,
                       c.paper_anchor)


def run(selection: Iterable[str] | str | None = None, jobs: int = 1) -> list[CheckResult]:
    """Run the selected checks (ids, or None/"all"); results in catalogue order."""
    if selection is None or selection == "all":
        ids = [c.id for c in all_checks()]
    else:
        ids = select(ids=list(selection))
    order = {c.id: i for i, c in enumerate(all_checks())}
    ids = sorted(dict.fromkeys(ids), key=order.__getitem__)
    if jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run_one, ids))
    else:
        results = [run_one(i) for i in ids]
    return sorted(results, key=lambda r: order[r.id])
