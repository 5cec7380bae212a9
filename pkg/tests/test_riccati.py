import pytest
import sympy

from pvmoduli.algebra import ONE, ZERO, parse
from pvmoduli.connection import Connection, Matrix2, normal_form
from pvmoduli.riccati import NotAPole, invariant_jets, jet_residual, jet_text, riccati_rhs
from conftest import to_sympy


def jet_set(jets):
    return {tuple(str(c) for c in j.coefficients) for j in jets}


def test_rhs_entries():
    c = normal_form()
    r = riccati_rhs(c)
    m = c.matrix
    assert r.coeff_y2 == m.e12
    assert r.coeff_y1 == m.e11 - m.e22
    assert r.coeff_y0 == -m.e21


def test_jets_at_zero():
    got = jet_set(invariant_jets(normal_form(), ZERO, 0))
    assert got == {("0",), (str(parse("-k0")),)}


def test_jets_at_one():
    got = jet_set(invariant_jets(normal_form(), ONE, 1))
    assert got == {("0", "0"), ("t", str(parse("t - k1")))}


@pytest.mark.parametrize("pole,depth", [(ZERO, 3), (ONE, 3)])
def test_jet_residual_vanishes(pole, depth):
    c = normal_form()
    for j in invariant_jets(c, pole, depth):
        assert all(r.is_zero() for r in jet_residual(c, j, depth))


def test_jet_sympy_oracle():
    # plug the depth-1 jet at x = 1 into the Riccati equation with sympy
    c = normal_form()
    x = sympy.Symbol("x")
    r = riccati_rhs(c)
    a, b, cc = (to_sympy(e) for e in (r.coeff_y2, r.coeff_y1, r.coeff_y0))
    for j in invariant_jets(c, ONE, 1):
        y = sum(to_sympy(ck) * (x - 1) ** k for k, ck in enumerate(j.coefficients))
        expr = sympy.cancel((sympy.diff(y, x) - a * y ** 2 - b * y - cc) * (x - 1) ** 2)
        assert sympy.limit(expr, x, 1) == 0


def test_not_a_pole():
    c = Connection(Matrix2.of(0, 1, 0, 0), "x")
    with pytest.raises(NotAPole):
        invariant_jets(c, ONE)


def test_jet_text():
    j = invariant_jets(normal_form(), ONE, 1)[0]
    assert "x - 1" in jet_text(j)
