import pytest
from hypothesis import given, settings, strategies as st

from pvmoduli.algebra import RatFunc, parse
from pvmoduli.symmetry import (
    COORDS, GENERATORS, IDENTITY, apply_symmetry, compose, difference, group_closure,
    verify_symmetry_group,
)


def is_id(el):
    return all(d.is_zero() for d in difference(el, IDENTITY))


@pytest.mark.parametrize("name", sorted(GENERATORS))
def test_involutions(name):
    assert is_id(compose(name, name))


@pytest.mark.parametrize("a,b", [("Psi0", "Psi1"), ("Psi0", "PsiInf"), ("Psi1", "PsiInf")])
def test_psi_commute(a, b):
    assert compose(a, b) == compose(b, a)


def test_phi_conjugates_psi0_and_psiinf():
    assert compose("Phi0inf", "Psi0", "Phi0inf") == compose("PsiInf")
    assert compose("Phi0inf", "Psi1", "Phi0inf") == compose("Psi1")


def test_phi_does_not_commute_with_psi0():
    # recorded as a discrepancy by the suite; pinned here so a change is noticed
    assert compose("Phi0inf", "Psi0") != compose("Psi0", "Phi0inf")


def test_group_order():
    assert group_closure() == 16
    assert group_closure(["Psi0", "Psi1", "PsiInf"]) == 8


def test_report():
    r = verify_symmetry_group()
    assert all(e.ok for e in r.involutions)
    bad = [e for e in r.commutations if not e.ok]
    assert {e.name for e in bad} == {"Phi0inf*Psi0", "Phi0inf*PsiInf"}
    assert all(e.witness for e in bad)
    assert r.order == 16


fr = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=100, derandomize=True, deadline=None)
@given(st.tuples(fr, fr.filter(lambda v: v not in (0, 1)), fr, fr, fr, fr),
       st.sampled_from(sorted(GENERATORS)))
def test_involution_at_points(pt, name):
    img = apply_symmetry(name, pt)
    assert apply_symmetry(name, img) == tuple(RatFunc.coerce(v) for v in pt)


def test_mapping_point_and_unknown():
    pt = dict(zip(COORDS, (parse(c) for c in COORDS)))
    assert apply_symmetry("PsiInf", pt)[5] == parse("-kinf")
    with pytest.raises(KeyError):
        apply_symmetry("Nope", pt)
