from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pvmoduli.surface import (
    CURVE_BASIS, NAMED, DivisorClass, NotContractible, canonical_class,
    canonical_from_curves, change_of_basis_det, curve, curve_census, discrepancy,
    discrepancy_total_space, format_curve_basis, from_curve_basis, intersect,
    line_bundle_degree, moduli_divisor_D, parse_class, pic_relations, signature,
    to_curve_basis,
)

classes = st.tuples(*[st.integers(-6, 6)] * 5).map(lambda c: DivisorClass.of(*c))


def test_ainf_is_minus_two():
    A = curve("Ainf")
    assert A @ A == -2


def test_canonical():
    K = canonical_class()
    assert K @ K == 5
    assert K @ curve("Ainf") == 0
    assert canonical_from_curves() == K


def test_adjunction_on_named_curves():
    # all named curves are rational: C² + K·C = -2
    K = canonical_class()
    for name, c in NAMED.items():
        assert c @ c + K @ c == -2, name


def test_D():
    d1, d2 = moduli_divisor_D()
    assert d1 == d2
    for name in ("Q0", "Qinf", "Ainf"):
        assert line_bundle_degree(d1, name) == 0
    assert intersect(d1, 2 * curve("Q1")) == 0


def test_discrepancies_vanish():
    assert discrepancy(curve("Ainf")) == 0
    assert discrepancy_total_space().discrepancy == 0
    assert discrepancy(curve("B10")) == Fraction(1)
    with pytest.raises(NotContractible):
        discrepancy(canonical_class() * -1)


def test_census():
    c = curve_census()
    assert c.minus_two == ("Ainf",)
    assert len(c.minus_one) == 7


def test_relations():
    assert all(pic_relations().values())


def test_lattice():
    assert abs(change_of_basis_det()) == 1
    assert signature() == (1, 4)


@settings(max_examples=100, derandomize=True)
@given(classes, classes, classes)
def test_form_bilinear_symmetric(a, b, c):
    assert a @ b == b @ a
    assert (a + b) @ c == a @ c + b @ c


@settings(max_examples=100, derandomize=True)
@given(classes)
def test_curve_basis_roundtrip(a):
    assert from_curve_basis(to_curve_basis(a)) == a


@settings(max_examples=100, derandomize=True)
@given(classes)
def test_parse_format_roundtrip(a):
    assert parse_class(str(a)) == a
    assert parse_class(format_curve_basis(a)) == a


def test_parse_named():
    assert parse_class("K") == canonical_class()
    assert parse_class("2*Q1 - B10") == 2 * curve("Q1") - curve("B10")
    with pytest.raises(ValueError):
        parse_class("")
    assert tuple(CURVE_BASIS) == ("A0", "Q0", "B10", "B0inf", "Binfinf")
