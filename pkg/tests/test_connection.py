from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from pvmoduli.algebra import INF, ONE, ZERO, parse, sym
from pvmoduli.connection import (
    Connection, Matrix2, MoebiusMap, NotInstantiated, RamifiedPole, SingularGauge,
    SpectralParams, change_coordinate, deserialize, det_degree_shift, divisor_holds,
    elm, fuchs_sum, gauge, genericity_check, normal_form, principal_part,
    residual_matrix, serialize, spectral_difference, spectral_difference_squared,
)
from conftest import sympy_equal, to_sympy

x = sym("x")
fracs = st.fractions(min_value=-4, max_value=4, max_denominator=5)


def m(*es):
    return Matrix2(*(parse(e) for e in es))


def generic(prefix):
    return m(*(f"{prefix}{i}{j}" for i in (1, 2) for j in (1, 2)))


def test_euler_residue_at_infinity():
    A = generic("a")
    c = Connection(A / x, "x")
    assert residual_matrix(c, INF, bundle_frame=False) == -A
    assert residual_matrix(c, ZERO) == A


def test_gauge_conjugates_top_coefficient():
    M0, M1 = generic("m"), generic("n")
    phi = generic("a")
    c = Connection(M0 / x ** 2 + M1 / x, "x")
    g = gauge(c, phi)
    top = principal_part(g, ZERO)[0]
    assert top == phi.inverse() @ M0 @ phi


def test_gauge_order_one_with_linear_frame():
    # Φ = A + B x: order-1 coefficient picks up the commutator terms
    M0, M1 = generic("m"), generic("n")
    A, B = generic("a"), generic("b")
    c = Connection(M0 / x ** 2 + M1 / x, "x")
    g = gauge(c, A + B * x)
    Ai = A.inverse()
    want = Ai @ M1 @ A + Ai @ M0 @ B - Ai @ B @ Ai @ M0 @ A
    assert principal_part(g, ZERO)[1] == want


@settings(max_examples=25, derandomize=True, deadline=None)
@given(fracs, fracs.filter(bool), fracs)
def test_gauge_composition(a, b, c):
    conn = normal_form()
    p1 = Matrix2.of(1, a, 0, 1)
    p2 = Matrix2.diag(1, b * x + c)
    assert gauge(gauge(conn, p1), p2).matrix == gauge(conn, p1 @ p2).matrix
    assert gauge(gauge(conn, p1), p1.inverse()).matrix == conn.matrix


def test_singular_gauge():
    with pytest.raises(SingularGauge):
        gauge(normal_form(), Matrix2.of(1, 1, 1, 1))


def test_elm_degree_and_inverse():
    c = normal_form()
    q = sym("q")
    assert elm(c, q, "+").degree == c.degree + 1
    assert elm(c, q, "-").degree == c.degree - 1
    assert det_degree_shift(Matrix2.diag(x - q, 1)) == 1
    with pytest.raises(ValueError):
        elm(c, q, "*")


def test_apparent_singularity_is_removable():
    c = normal_form()
    assert spectral_difference_squared(c, sym("q")) == ONE


@settings(max_examples=20, derandomize=True, deadline=None)
@given(fracs, fracs, fracs, fracs)
def test_moebius_covariance(a, b, c, d):
    assume(a * d - b * c != 0 and c != 0)
    f = MoebiusMap.of(a, b, c, d)
    # keep 0, 1, ∞ away from the pole of f
    assume(all(c * z + d != 0 for z in (0, 1)) and a != 0)
    conn = normal_form()
    new = change_coordinate(conn, f, "X")
    for pt in (ZERO, ONE):
        assert residual_matrix(new, f(pt)) == residual_matrix(conn, pt)
    top_old = principal_part(conn, ONE)[0]
    top_new = principal_part(new, f(ONE))[0]
    assert top_new == top_old * f.derivative_at(ONE)


def test_normal_form_structure():
    c = normal_form()
    assert c.matrix.e11.is_zero()
    assert principal_part(c, ZERO) == [m("0", "1", "0", "-k0")]
    assert principal_part(c, ONE) == [m("0", "1", "0", "t"), m("0", "-1", "0", "-k1")]
    assert principal_part(c, sym("q")) == [m("0", "0", "phat", "-1")]
    assert fuchs_sum(c) == parse("-2")
    assert divisor_holds(c)


def test_normal_form_residue_sympy():
    # independent oracle for the residue at q
    c = normal_form()
    e = to_sympy(c.matrix.e21)
    X, Q = sympy.symbols("x q")
    assert sympy_equal(residual_matrix(c, sym("q")).e21, sympy.residue(e, X, Q))


def test_serialize_roundtrip():
    c = normal_form()
    assert deserialize(serialize(c)) == c


def test_spectral_difference():
    c = normal_form()
    assert spectral_difference(c, ZERO) ** 2 == parse("k0^2")
    assert spectral_difference(c, ONE) == parse("k1")
    odd = Connection(m("0", "1/x^3", "1", "0"), "x")
    with pytest.raises(RamifiedPole):
        spectral_difference(odd, ZERO)


def test_genericity():
    assert genericity_check(SpectralParams.of(Fraction(1, 3), Fraction(1, 5), Fraction(1, 7)))
    assert not genericity_check(SpectralParams.of(0, Fraction(1, 3), Fraction(1, 5)))
    assert not genericity_check(SpectralParams.of(Fraction(1, 3), Fraction(1, 3), Fraction(2, 3)))
    with pytest.raises(NotInstantiated):
        genericity_check(SpectralParams())
