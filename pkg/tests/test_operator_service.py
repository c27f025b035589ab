"""
Tests for the q-exponential and q-Appell operators, quasi polynomials and
the Mehler and Rogers generating functions.
"""
from fractions import Fraction

import pytest

from qappell.domain.exceptions.domain_exceptions import (
    DegeneracyException,
    InvalidOperandException,
    QIsOneException,
)
from qappell.domain.models.appell_family import FamilyKind
from qappell.domain.models.multipoly import MultiPoly
from qappell.domain.models.operator_spec import OperatorFlavor, OperatorSpec
from qappell.domain.models.qcontext import QContext

x = MultiPoly.variable("x")
y = MultiPoly.variable("y")
z = MultiPoly.variable("z")

GRID = [("1/2", "1/3"), ("2", "2"), ("2/3", "0"), ("3", "1")]


def test_t_operator_on_monomials(appell_service, operator_service, ctx):
    for n in range(6):
        assert operator_service.apply_T(MultiPoly.variable("x", n), ctx) == appell_service.homog_R(n, ctx)


def test_operator_rejects_y_dependent_arguments(operator_service, ctx):
    with pytest.raises(InvalidOperandException):
        operator_service.apply_T(x * y, ctx)


def test_appell_operators_need_a_family():
    with pytest.raises(InvalidOperandException):
        OperatorSpec(OperatorFlavor.APPELL_TRIVAR)
    assert OperatorSpec(OperatorFlavor.T_EXPONENTIAL).derivative_variable.value == "x"


def test_quasi_polynomials_of_base_one(family_factory, operator_service, ctx):
    family = family_factory.custom([1], 1, 3, ctx)
    assert operator_service.quasi_homog(family, 3) == x ** 3
    expected = z ** 2 + (x * y * z).scale(ctx.q_number(2)) + (x * x * y * y).scale(ctx.u)
    assert operator_service.quasi_trivar(family, 2) == expected


@pytest.mark.parametrize("q, u", GRID)
def test_operator_identities(family_factory, operator_service, q, u):
    ctx = QContext.of(q, u)
    for kind in (FamilyKind.BERNOULLI, FamilyKind.GENOCCHI):
        family = family_factory.named_family(kind, 1, 4, ctx)
        assert operator_service.t_operator_check(family, 4).passed
        assert operator_service.quasi_operator_check(family, 4).passed
        assert operator_service.quasi_derivative_check(family, 4).passed


def test_printed_x_derivative_of_trivariate_polynomial_is_recorded(family_factory, operator_service, ctx):
    family = family_factory.named_family(FamilyKind.BERNOULLI, 1, 3, ctx)
    report = operator_service.quasi_derivative_check(family, 3)
    assert report.passed
    assert len(report.discrepancies) == 1


def test_printed_x_derivative_holds_at_u_one(family_factory, operator_service, classical_ctx):
    family = family_factory.named_family(FamilyKind.BERNOULLI, 1, 3, classical_ctx)
    assert operator_service.quasi_derivative_check(family, 3).discrepancies == []


def test_relating_identity(family_factory, operator_service, ctx):
    family = family_factory.named_family(FamilyKind.BERNOULLI, 1, 4, ctx)
    report = operator_service.relating_identity_check(family, 4)
    assert report.passed
    forms = [item["form"] for item in report.discrepancies]
    assert forms == ["P_n(x;u) = u^C(n,2) Q_n(x,u^(1-2n);u)", "P_n(x,y;u) = Q_n(x,1,y;u)"]


def test_relating_identity_at_u_one_has_no_discrepancy_in_the_bivariate_form(
        family_factory, operator_service, classical_ctx):
    family = family_factory.named_family(FamilyKind.EULER, 1, 4, classical_ctx)
    report = operator_service.relating_identity_check(family, 4)
    assert report.passed
    assert report.discrepancies == []


@pytest.mark.parametrize("q, u", GRID)
def test_quasi_generating_functions(family_factory, operator_service, q, u):
    ctx = QContext.of(q, u)
    family = family_factory.named_family(FamilyKind.EULER, 1, 4, ctx)
    assert operator_service.quasi_genfun_check(family, 4).passed
    assert operator_service.quasi_weighted_genfun_check(family, 4).passed


def test_q_exponential_shift_laws(operator_service, ctx):
    assert operator_service.eq_shift_check(4, 5, ctx).passed


def test_q_exponential_shift_laws_need_q_not_one(operator_service):
    with pytest.raises(QIsOneException):
        operator_service.eq_shift_check(2, 3, QContext.of(1, 1))


@pytest.mark.parametrize("k", [0, 1, 2])
def test_mehler_inner_sums(family_factory, operator_service, ctx, k):
    family = family_factory.named_family(FamilyKind.BERNOULLI, 1, 4, ctx)
    assert operator_service.mehler_inner_check(family, k, 4).passed


def test_mehler_formula_for_base_one(family_factory, operator_service, ctx):
    family = family_factory.custom([1], 1, 3, ctx)
    report = operator_service.mehler_verify(family, family, 3)
    assert report.passed
    assert report.discrepancies[0]["coeff_index"] == 1


def test_mehler_formula_for_mixed_families(family_factory, operator_service):
    ctx = QContext.of("2", "1/2")
    bernoulli = family_factory.named_family(FamilyKind.BERNOULLI, 1, 3, ctx)
    euler = family_factory.named_family(FamilyKind.EULER, 1, 3, ctx)
    assert operator_service.mehler_verify(bernoulli, euler, 3).passed


def test_mehler_guards(family_factory, operator_service, ctx):
    genocchi = family_factory.named_family(FamilyKind.GENOCCHI, 1, 3, ctx)
    base = family_factory.custom([1], 1, 3, ctx)
    with pytest.raises(DegeneracyException):
        operator_service.mehler_verify(base, genocchi, 3)
    with pytest.raises(QIsOneException):
        classical = family_factory.custom([1], 1, 3, QContext.of(1, 1))
        operator_service.mehler_verify(classical, classical, 3)
    with pytest.raises(ValueError):
        operator_service.mehler_rhs(base, base, 2, reading="other")


@pytest.mark.parametrize("q, u", [("1/2", "1/3"), ("2", "0")])
def test_rogers_formula(family_factory, operator_service, q, u):
    ctx = QContext.of(q, u)
    for family in (family_factory.custom([1], 1, 3, ctx), family_factory.named_family(FamilyKind.GENOCCHI, 1, 3, ctx)):
        assert operator_service.rogers_verify(family, 3).passed


def test_rogers_left_side_is_symmetric(family_factory, operator_service, ctx):
    family = family_factory.named_family(FamilyKind.BERNOULLI, 1, 3, ctx)
    lhs = operator_service.rogers_lhs(family, 3)
    assert lhs.coeff(1, 2) == lhs.coeff(2, 1) == operator_service.quasi_trivar(family, 3)
    assert lhs.coeff(0, 0) == Fraction(1)
