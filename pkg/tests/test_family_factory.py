"""
Tests for Appell families and the named determining functions.
"""
from fractions import Fraction

import pytest

from qappell.domain.exceptions.domain_exceptions import (
    FamilyConstructionException,
    IndexOutOfRangeException,
    NonScalarCoefficientsException,
    UnsupportedParameterException,
    ZeroConstantTermException,
)
from qappell.domain.models.appell_family import FamilyKind
from qappell.domain.models.multipoly import MultiPoly
from qappell.domain.models.qcontext import QContext
from qappell.domain.models.series import TruncSeries


def test_bernoulli_numbers(family_factory):
    ctx = QContext.of("1/2", 1)
    bernoulli = family_factory.named_family(FamilyKind.BERNOULLI, 1, 4, ctx)
    assert bernoulli.a(0) == 1
    assert bernoulli.a(1) == -1 / ctx.q_number(2)
    assert bernoulli.a(1) == Fraction(-2, 3)


def test_bernoulli_numbers_at_q_one(family_factory):
    bernoulli = family_factory.named_family(FamilyKind.BERNOULLI, 1, 4, QContext.of(1, 1))
    assert bernoulli.coefficients[:5] == (1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30))


@pytest.mark.parametrize("q", ["1/2", "2", "1", "-3/5"])
def test_euler_numbers(family_factory, q):
    ctx = QContext.of(q, 1)
    euler = family_factory.named_family(FamilyKind.EULER, 1, 3, ctx)
    assert euler.a(0) == 1
    assert euler.a(1) == Fraction(-1, 2)
    assert euler.a(2) == (ctx.q - 1) / 4


def test_genocchi_numbers(family_factory, ctx):
    genocchi = family_factory.named_family(FamilyKind.GENOCCHI, 1, 4, ctx)
    assert genocchi.a(0) == 0
    assert genocchi.a(1) == 1
    assert genocchi.vanishing_order == 1
    assert genocchi.is_degenerate


def test_genocchi_at_q_one_matches_classical_numbers(family_factory):
    genocchi = family_factory.named_family(FamilyKind.GENOCCHI, 1, 4, QContext.of(1, 1))
    assert genocchi.coefficients == (0, 1, -1, 0, 1)


def test_negative_order_of_vanishing_base_is_rejected(family_factory, ctx):
    with pytest.raises(ZeroConstantTermException):
        family_factory.named_family(FamilyKind.GENOCCHI, -1, 4, ctx)


def test_orders_add(family_factory, ctx):
    once = family_factory.named_family(FamilyKind.BERNOULLI, 1, 5, ctx)
    twice = family_factory.named_family(FamilyKind.BERNOULLI, 2, 5, ctx)
    assert once.determining.mul(once.determining) == twice.determining
    inverse = family_factory.named_family(FamilyKind.BERNOULLI, -1, 5, ctx)
    assert once.determining.mul(inverse.determining) == TruncSeries.one(5, ctx)


def test_custom_family_pads_missing_coefficients(family_factory, ctx):
    family = family_factory.custom(["1", "1/2"], 1, 3, ctx)
    assert family.coefficients == (1, Fraction(1, 2), 0, 0)
    assert family.kind is FamilyKind.CUSTOM


def test_custom_family_order_zero_is_constant(family_factory, ctx):
    family = family_factory.custom([3], 0, 2, ctx)
    assert family.coefficients == (1, 0, 0)


def test_non_scalar_base_is_rejected(family_factory, ctx):
    base = TruncSeries.from_coeffs([1, MultiPoly.variable("x")], ctx)
    with pytest.raises(NonScalarCoefficientsException):
        family_factory.family_from_series(base, 1)


def test_index_out_of_range(family_factory, ctx):
    family = family_factory.custom([1], 1, 2, ctx)
    with pytest.raises(IndexOutOfRangeException):
        family.a(3)


def test_descriptor(family_factory, ctx):
    family = family_factory.custom(["2"], 2, 1, ctx)
    assert family.descriptor() == {
        "kind": "custom", "alpha": 2, "order": 1, "q": "1/2", "u": "1/3", "a": ["4", "0"], "base": ["2", "0"],
    }
    assert family.label() == "custom(2)"
    named = family_factory.named_family(FamilyKind.EULER, 1, 1, ctx)
    assert "base" not in named.descriptor()


def test_from_descriptor(family_factory):
    family = family_factory.from_descriptor({"kind": "euler", "alpha": -1, "order": 3, "q": "2", "u": "1"})
    assert family.kind is FamilyKind.EULER
    assert family.alpha == -1
    assert family.ctx == QContext.of(2, 1)
    assert family.a(1) == Fraction(1, 2)


def test_descriptor_round_trip_from_base(family_factory, ctx):
    family = family_factory.custom(["1", "1"], 2, 3, ctx)
    reloaded = family_factory.from_descriptor(family.descriptor())
    assert reloaded.coefficients == family.coefficients
    assert reloaded.descriptor() == family.descriptor()


def test_descriptor_with_numbers_only_is_not_raised_again(family_factory, ctx):
    family = family_factory.custom(["1", "1"], 2, 1, ctx)
    assert family.descriptor()["a"] == ["1", "2"]
    numbers_only = {key: value for key, value in family.descriptor().items() if key != "base"}
    reloaded = family_factory.from_descriptor(numbers_only)
    assert reloaded.coefficients == (1, 2)
    assert reloaded.alpha == 2
    assert reloaded.ctx == ctx
    assert reloaded.descriptor() == numbers_only


def test_family_from_numbers(family_factory, ctx):
    family = family_factory.from_numbers(["0", "1"], 3, 3, ctx)
    assert family.coefficients == (0, 1, 0, 0)
    assert family.is_degenerate
    with pytest.raises(ZeroConstantTermException):
        family_factory.from_numbers(["0", "1"], -1, 3, ctx)


@pytest.mark.parametrize("kind", [FamilyKind.BERNOULLI, FamilyKind.EULER, FamilyKind.GENOCCHI])
def test_named_families_need_nonvanishing_factorials(family_factory, kind):
    ctx = QContext.of(-1, 1)
    with pytest.raises(UnsupportedParameterException):
        family_factory.named_family(kind, 1, 3, ctx)


def test_low_order_families_at_q_minus_one(family_factory):
    ctx = QContext.of(-1, 1)
    assert family_factory.named_family(FamilyKind.EULER, 1, 1, ctx).coefficients == (1, Fraction(-1, 2))
    assert family_factory.named_family(FamilyKind.GENOCCHI, 1, 1, ctx).coefficients == (0, 1)
    # the Bernoulli base at order N already divides by [N+1]_q
    with pytest.raises(UnsupportedParameterException):
        family_factory.named_family(FamilyKind.BERNOULLI, 1, 1, ctx)


@pytest.mark.parametrize("descriptor", [
    {"alpha": 1},
    {"kind": "hermite"},
    {"kind": "custom"},
    {"kind": "custom", "base": []},
    {"kind": "euler", "q": "0.5"},
])
def test_from_descriptor_rejects(family_factory, descriptor):
    with pytest.raises(FamilyConstructionException):
        family_factory.from_descriptor(descriptor)
