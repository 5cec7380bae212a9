import pytest
import sympy

from pvmoduli import reference as ref
from pvmoduli.algebra import INF, parse
from pvmoduli.boundary import (
    CHART_NAMES, Trajectory, boundary_connection, chart_catalogue, confluence_limit,
    confluence_obstruction, get_chart, node_spectral_check, node_value,
)
from pvmoduli.connection import Matrix2
from conftest import sympy_equal


def m(es):
    return Matrix2(*(parse(e) for e in es))


@pytest.mark.parametrize("key", sorted(ref.LIMIT_MATRICES, key=str))
def test_limit_matrices(key):
    chart, which, branch = key
    got = boundary_connection(chart, which, branch).matrix
    assert got == m(ref.LIMIT_MATRICES[key])


def test_q0_pullback_sympy_oracle():
    # independent pull-back along X = x/(x - q) and limit q -> 0, done in sympy
    x, X, q, t, k0, k1, rho, p = sympy.symbols("x X q t k0 k1 rho phat")
    K = (p**2 / (q * (q - 1)**2)
         + (k0 * (q - 1)**2 + (k1 - 1) * q * (q - 1) - t * q) * p / (q * (q - 1)**2)
         + rho * q + p / (q - 1))
    e21 = -rho * x + p / (x - q) + K
    e22 = t / (x - 1)**2 - k1 / (x - 1) - k0 / x - 1 / (x - q)
    e12 = 1 / (x - 1)**2 - 1 / (x - 1) + 1 / x
    xinv = q * X / (X - 1)
    jac = sympy.diff(xinv, X)
    want = [sympy.limit(sympy.cancel(e.subs(x, xinv) * jac), q, 0) for e in (e12, e21, e22)]
    got = boundary_connection("Q0", "f_pullback").matrix
    assert got.e11.is_zero()
    for r, w in zip((got.e12, got.e21, got.e22), want):
        assert sympy_equal(r, w)


def test_q0_obstruction():
    (o1,) = confluence_obstruction(Trajectory(0, ("alpha", "beta")))
    assert o1 == parse(ref.Q0_OBSTRUCTION)


def test_q1_obstructions():
    got = confluence_obstruction(Trajectory(1, ("alpha", "beta", "gamma")))
    assert got == [parse(e) for e in ref.Q1_OBSTRUCTIONS]
    for beta, gamma in ref.Q1_ADMISSIBLE:
        vals = {"beta": parse(beta), "gamma": parse(gamma)}
        assert all(o.subs(vals).is_zero() for o in got)


def test_qinf_obstruction_roots():
    (o1,) = confluence_obstruction(Trajectory(INF, ("alpha", "beta")))
    for r in ("(k0 + k1 - 1 - kinf)/2", "(k0 + k1 - 1 + kinf)/2"):
        assert o1.subs({"beta": parse(r)}).is_zero()


def test_confluence_limit_admissible():
    c = confluence_limit(Trajectory(0, ("alpha", 0)))
    assert c.matrix.e11.is_zero()
    assert not c.matrix.e21.depends_on("q")


def test_trajectory_arity():
    with pytest.raises(ValueError):
        Trajectory(1, ("alpha", "beta"))


def test_catalogue_names():
    assert tuple(c.name for c in chart_catalogue()) == CHART_NAMES
    with pytest.raises(KeyError):
        get_chart("nowhere")


@pytest.mark.parametrize("chart", ["A0", "B10"])
def test_node_equal(chart):
    cmp = node_spectral_check(chart)
    assert cmp.expected_equal and cmp.equal
    assert cmp.values[0].squared == parse(ref.NODE_VALUES[chart])


def test_node_q0_branches():
    want = ref.NODE_VALUES["Q0"]
    for branch in ("minus", "plus"):
        assert node_value("Q0", "direct", branch).squared == parse(want[branch])


@pytest.mark.parametrize("key", [("f_pullback", "plus"), ("g_pullback", "plus"),
                                 ("g_pullback", "minus")])
def test_node_ainf(key):
    v = node_value("Ainf", *key)
    w = parse(ref.NODE_VALUES["Ainf"][key])
    assert v.alpha1 in (w, -w)


def test_node_ainf_f_minus_differs_from_remark():
    # the displayed f-limit for P- gives 2P- - k0 + 2, not the remark's 2P- - k0
    v = node_value("Ainf", "f_pullback", "minus")
    assert v.squared == parse("(2*Pminus - k0 + 2)^2")
