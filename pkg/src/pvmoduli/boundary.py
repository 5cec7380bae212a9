"""Confluence obstructions and the limit connections over the boundary charts.

Every boundary connection is produced by one recipe:

    Ω₀ --(twist diag(1, x^k))--> --(pull back by a Moebius map)-->
       --(constant frame scale diag(1, λ))--> substitute chart coordinates
       --> entrywise limit in the degeneration parameter.

The twist is only used on Q∞, where the pole at ∞ has to be read in the
frame of O ⊕ O(2).  λ normalizes the (1,2)-entry so the limit exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .algebra import (
    INF, ONE, ZERO, PoleObstruction, RatFunc, center_text, laurent, limit,
    pole_order, substitute_many, sym,
)
from .connection import (
    Connection, Matrix2, MoebiusMap, SpectralParams, change_coordinate, elm, expand_rho,
    gauge, normal_form, spectral_difference, spectral_difference_squared,
)

x, X, q, t, phat = (sym(n) for n in ("x", "X", "q", "t", "phat"))
k0, k1, kinf, rho = (sym(n) for n in ("k0", "k1", "kinf", "rho"))
alpha, beta, gamma = (sym(n) for n in ("alpha", "beta", "gamma"))
T, Q, R, S, A = (sym(n) for n in ("T", "Q", "R", "S", "A"))
P0, P1, Pinf, P10 = (sym(n) for n in ("P0", "P1", "Pinf", "P10"))
Pplus, Pminus, P0inf, Pinfinf = (sym(n) for n in ("Pplus", "Pminus", "P0inf", "Pinfinf"))

CHART_NAMES = ("A0", "Q0", "Q1", "Qinf", "B10", "B0inf", "Binfinf", "Ainf")
WHICH = ("direct", "f_pullback", "g_pullback", "h_pullback")


# ---------------------------------------------------------------------------
# confluence


@dataclass(frozen=True)
class Trajectory:
    """p̂ along a path into q = target.

    target 0:  p̂ = α q + β
    target 1:  p̂ = α (q-1)² + β (q-1) + γ
    target ∞:  p̂ = -(α Q + β)(1/Q - 1)²  with Q = 1/q
    """

    target: object
    coefficients: tuple

    def __post_init__(self):
        arity = 3 if self.target == 1 else 2
        if len(self.coefficients) != arity:
            raise ValueError(f"target {center_text(self.target)} needs {arity} coefficients")

    def p_hat(self) -> RatFunc:
        cs = tuple(RatFunc.coerce(c) for c in self.coefficients)
        if self.target is INF:
            a, b = cs
            return -(a * Q + b) * (1 / Q - 1) ** 2
        if self.target == 0:
            a, b = cs
            return a * q + b
        a, b, c = cs
        return a * (q - 1) ** 2 + b * (q - 1) + c


def _traj_entry(traj: Trajectory, params: SpectralParams, t_sym: RatFunc) -> tuple:
    expand = traj.target is INF
    m = normal_form(params, expand=expand).matrix
    e = substitute_many(m.e21, {"phat": traj.p_hat(), "t": t_sym})
    if traj.target is INF:
        e = substitute_many(e, {"q": 1 / Q})
        return e, "Q", ZERO, 1
    return e, "q", RatFunc.coerce(traj.target), (1 if traj.target == 0 else 2)


def confluence_obstruction(traj: Trajectory, params: SpectralParams | None = None,
                           t_sym: RatFunc | None = None) -> list[RatFunc]:
    """Negative-order coefficients (orders -1, -2, ...) of the (2,1)-entry."""
    params = params or SpectralParams()
    e, v, c, n = _traj_entry(traj, params, t if t_sym is None else t_sym)
    exp = laurent(e, v, c, -1)
    out = [exp.coeff(-k) if -k >= exp.min_order else ZERO for k in range(1, n + 1)]
    for coeff in out:
        if coeff.depends_on("x"):
            raise AssertionError("obstruction depends on x")
    return out


def confluence_limit(traj: Trajectory, params: SpectralParams | None = None) -> Connection:
    params = params or SpectralParams()
    expand = traj.target is INF
    m = normal_form(params, expand=expand).matrix.subs({"phat": traj.p_hat()})
    if traj.target is INF:
        m = m.subs({"q": 1 / Q})
        v, c = "Q", ZERO
    else:
        v, c = "q", RatFunc.coerce(traj.target)
    return Connection(m.map(lambda e: limit(e, v, c)), "x", 2)


# ---------------------------------------------------------------------------
# charts


@dataclass(frozen=True)
class Recipe:
    which: str
    var: str
    moebius: MoebiusMap | None = None
    scale: RatFunc = ONE
    twist: int = 0
    node: object = ONE
    expand_rho: bool = False


@dataclass(frozen=True)
class BoundaryChart:
    name: str
    parameter: str                      # degeneration variable
    chart_parameters: tuple[str, ...]   # surviving moduli
    coordinates: Mapping[str, RatFunc]  # t, q in chart coordinates
    vertical_coordinate: RatFunc        # p̂ as a function of the vertical symbol
    vertical_symbol: str
    moebius_maps: Mapping[str, MoebiusMap]
    recipes: Mapping[str, Recipe]
    branches: Mapping[str, Mapping[str, RatFunc]] = field(default_factory=dict)
    direct_vertical: RatFunc | None = None  # trajectory used by the direct limit
    value: RatFunc = ZERO                   # the parameter tends to this value


def _mob(r: RatFunc) -> MoebiusMap:
    return MoebiusMap.from_ratfunc(r, "x")


F_A0 = _mob((x + 1) * t / ((t - 2) * x + t + 2))
F_Q0 = _mob(x / (x - q))
F_Q1 = _mob(t * (x - q) / ((q - 1 + t) * x + (-q * t - q + 1)))
F_QINF = _mob(-x / q + 1)
F_B10 = _mob((1 - q) * x / (x - q))
F_B0INF = _mob((t + 1) * x / (t * x + 1))
G_B0INF = _mob(x / t + (t - 1) / t)
F_AINF = _mob(t * x / ((t - 1) * x + 1))
G_AINF = _mob((x + t - 1) / t)
H_AINF = _mob(((t + 1) * x + t - 1) / ((t - 1) * x + t + 1))

_QINF_ROOTS = ((k0 + k1 - 1 - kinf) / 2, (k0 + k1 - 1 + kinf) / 2)


def _catalogue() -> dict[str, BoundaryChart]:
    c: dict[str, BoundaryChart] = {}
    c["A0"] = BoundaryChart(
        "A0", "t", ("q",), {}, phat, "phat", {"f": F_A0},
        {"direct": Recipe("direct", "x", node=ONE),
         "f_pullback": Recipe("f_pullback", "X", F_A0, scale=t, node=ZERO)})
    c["Q0"] = BoundaryChart(
        "Q0", "q", ("t",), {}, phat, "phat", {"f": F_Q0},
        {"direct": Recipe("direct", "x", node=ZERO),
         "f_pullback": Recipe("f_pullback", "X", F_Q0, node=ONE)},
        branches={"minus": {"beta": ZERO, "phat": ZERO},
                  "plus": {"beta": -k0, "phat": -k0}},
        direct_vertical=alpha * q + beta)
    c["Q1"] = BoundaryChart(
        "Q1", "q", ("t",), {}, -P1 * q * t, "P1", {"f": F_Q1},
        {"direct": Recipe("direct", "x", node=ONE),
         "f_pullback": Recipe("f_pullback", "X", F_Q1, scale=t, node=ONE)},
        branches={"minus": {"beta": ZERO, "gamma": ZERO, "P1": ZERO},
                  "plus": {"beta": (k1 - 2 * t) / t, "gamma": -ONE, "P1": -ONE}},
        direct_vertical=-(alpha / t ** 2 * (q - 1) ** 2 + beta * (q - 1) + gamma) * t / q,
        value=ONE)
    c["Qinf"] = BoundaryChart(
        "Qinf", "Q", ("t",), {"q": 1 / Q}, -Pinf * (q - 1) ** 2, "Pinf", {"f": F_QINF},
        {"direct": Recipe("direct", "x", node=INF, expand_rho=True),
         "f_pullback": Recipe("f_pullback", "X", F_QINF, twist=2, node=ONE,
                              expand_rho=True)},
        branches={"minus": {"beta": _QINF_ROOTS[0], "Pinf": _QINF_ROOTS[0]},
                  "plus": {"beta": _QINF_ROOTS[1], "Pinf": _QINF_ROOTS[1]}},
        direct_vertical=-(alpha * Q + beta) * (1 / Q - 1) ** 2)
    c["B10"] = BoundaryChart(
        "B10", "q", ("A",), {"t": A * (q - 1)}, -P10 * (q - 1), "P10", {"f": F_B10},
        {"direct": Recipe("direct", "x", node=ONE),
         "f_pullback": Recipe("f_pullback", "X", F_B10, scale=(q - 1) / q, node=ZERO)},
        value=ONE)
    c["B0inf"] = BoundaryChart(
        "B0inf", "T", ("R",), {"t": 1 / T, "q": R * T}, -P0inf * (q - 1) ** 2, "P0inf",
        {"f": F_B0INF, "g": G_B0INF},
        {"f_pullback": Recipe("f_pullback", "X", F_B0INF, node=ONE),
         "g_pullback": Recipe("g_pullback", "X", G_B0INF, scale=t ** 2, node=ONE)})
    c["Binfinf"] = BoundaryChart(
        "Binfinf", "T", ("S",), {"t": 1 / T, "q": 1 / (S * T)}, -Pinfinf * (q - 1) ** 2,
        "Pinfinf", {"f": F_B0INF, "g": G_B0INF},
        {"f_pullback": Recipe("f_pullback", "X", F_B0INF, node=ONE),
         "g_pullback": Recipe("g_pullback", "X", G_B0INF, scale=t ** 2, node=ONE)})
    c["Ainf"] = BoundaryChart(
        "Ainf", "T", ("q",), {"t": 1 / T}, -Pplus * (q - 1) ** 2, "Pplus",
        {"f": F_AINF, "g": G_AINF, "h": H_AINF},
        {"f_pullback": Recipe("f_pullback", "X", F_AINF, node=ONE),
         "g_pullback": Recipe("g_pullback", "X", G_AINF, scale=t ** 2, node=ONE),
         "h_pullback": Recipe("h_pullback", "X", H_AINF, scale=t, node=ONE)},
        branches={"plus": {"phat": -Pplus * (q - 1) ** 2},
                  "minus": {"phat": -(Pminus + 1) * (q - 1) ** 2}})
    return c


_CATALOGUE = _catalogue()


def chart_catalogue() -> list[BoundaryChart]:
    return [_CATALOGUE[n] for n in CHART_NAMES]


def get_chart(name: str) -> BoundaryChart:
    try:
        return _CATALOGUE[name]
    except KeyError:
        raise KeyError(f"unknown chart {name!r}; expected one of {', '.join(CHART_NAMES)}") \
            from None


def _vertical(chart: BoundaryChart, which: str, branch: str | None) -> RatFunc:
    """p̂ expressed in the chart's vertical data for this component and branch."""
    if chart.name == "Ainf":
        if which == "h_pullback":
            return -P1 * q * t
        return chart.branches[branch or "plus"]["phat"]
    if which == "direct" and chart.direct_vertical is not None:
        if branch is None:
            return phat
        b = chart.branches[branch]
        return substitute_many(chart.direct_vertical,
                               {k: v for k, v in b.items() if k in ("beta", "gamma")})
    if branch is not None and chart.branches:
        vals = chart.branches[branch]
        sym_name = chart.vertical_symbol
        if sym_name in vals:
            return substitute_many(chart.vertical_coordinate, {sym_name: vals[sym_name]})
    return chart.vertical_coordinate


def pre_limit(chart: BoundaryChart, which: str, branch: str | None = None) -> Connection:
    """The connection in chart coordinates, before letting the parameter degenerate."""
    if which not in chart.recipes:
        raise KeyError(f"chart {chart.name} has no {which} component")
    rec = chart.recipes[which]
    conn = normal_form(expand=rec.expand_rho)
    if rec.twist:
        conn = gauge(conn, Matrix2.diag(1, x ** rec.twist))
    if rec.moebius is not None:
        conn = change_coordinate(conn, rec.moebius, rec.var)
    if rec.scale != ONE:
        conn = gauge(conn, Matrix2.diag(1, rec.scale))
    mapping = {"phat": _vertical(chart, which, branch)}
    mapping = {"phat": substitute_many(mapping["phat"], dict(chart.coordinates))}
    mapping.update(chart.coordinates)
    return Connection(conn.matrix.subs(mapping), rec.var, conn.degree, None)


def boundary_connection(chart: BoundaryChart | str, which: str,
                        branch: str | None = None) -> Connection:
    if isinstance(chart, str):
        chart = get_chart(chart)
    pre = pre_limit(chart, which, branch)
    m = pre.matrix.map(lambda e: limit(e, chart.parameter, chart.value))
    return Connection(m, pre.var, pre.degree, None)


def node_point(chart: BoundaryChart | str, which: str):
    if isinstance(chart, str):
        chart = get_chart(chart)
    return chart.recipes[which].node


# ---------------------------------------------------------------------------
# node comparisons


@dataclass(frozen=True)
class NodeValue:
    which: str
    branch: str | None
    point: object
    squared: RatFunc
    alpha1: RatFunc | None


@dataclass(frozen=True)
class NodeComparison:
    chart: str
    values: tuple[NodeValue, ...]
    expected_equal: bool

    @property
    def equal(self) -> bool:
        groups: dict = {}
        for v in self.values:
            groups.setdefault(v.branch, set()).add(v.squared)
        return all(len(g) == 1 for g in groups.values())


def node_value(chart: BoundaryChart | str, which: str, branch: str | None = None) -> NodeValue:
    if isinstance(chart, str):
        chart = get_chart(chart)
    conn = boundary_connection(chart, which, branch)
    pt = chart.recipes[which].node
    sq = spectral_difference_squared(conn, pt)
    try:
        a1 = spectral_difference(conn, pt)
    except ArithmeticError:
        a1 = None
    return NodeValue(which, branch, pt, sq, a1)


_NODE_PLAN = {
    "A0": ((("direct", None), ("f_pullback", None)), True),
    "Q0": ((("direct", "minus"), ("f_pullback", "minus"),
            ("direct", "plus"), ("f_pullback", "plus")), True),
    "Qinf": ((("direct", "minus"), ("f_pullback", "minus"),
              ("direct", "plus"), ("f_pullback", "plus")), True),
    "B10": ((("direct", None), ("f_pullback", None)), True),
    "Q1": ((("direct", "minus"), ("direct", "plus"),
            ("f_pullback", "minus"), ("f_pullback", "plus")), False),
    "B0inf": ((("f_pullback", None), ("g_pullback", None)), False),
    "Binfinf": ((("f_pullback", None), ("g_pullback", None)), False),
    "Ainf": ((("f_pullback", "plus"), ("g_pullback", "plus"),
              ("f_pullback", "minus"), ("g_pullback", "minus")), False),
}


def node_spectral_check(chart: BoundaryChart | str) -> NodeComparison:
    if isinstance(chart, str):
        chart = get_chart(chart)
    plan, expected = _NODE_PLAN[chart.name]
    vals = tuple(node_value(chart, w, b) for w, b in plan)
    return NodeComparison(chart.name, vals, expected)


def elm_remark(chart: str, which: str) -> Connection:
    """Elementary transformation removing the double pole of an A₀ limit."""
    conn = boundary_connection(chart, which)
    if (chart, which) == ("A0", "f_pullback"):
        return elm(conn, ZERO, "-")
    if (chart, which) == ("A0", "direct"):
        # the double pole sits in the (1,2)-entry: flip along the e2 line
        J = Matrix2.of(0, 1, 1, 0)
        return gauge(elm(gauge(conn, J), ONE, "+"), J)
    raise KeyError(f"no elementary-transformation remark for {chart}/{which}")
