"""
Sparse multivariate polynomials over the rationals, with the Jackson q-derivative.
"""
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from qappell.domain.exceptions.domain_exceptions import (
    DegreeOverflowException,
    InvalidOperandException,
    MissingAssignmentException,
)
from qappell.domain.models.qcontext import QContext
from qappell.domain.value_objects.rational import format_rational, parse_rational
from qappell.domain.value_objects.variable import NVARS, VARIABLES, Variable

Exponent = Tuple[int, ...]
VariableLike = Union[Variable, str]
Scalar = Union[Fraction, int]

_ZERO_EXPONENT: Exponent = (0,) * NVARS


def _term_order(exponent: Exponent) -> tuple:
    """Graded lexicographic key with x < y < z < w < a."""
    return (sum(exponent), exponent)


class MultiPoly:
    """
    Immutable polynomial in x, y, z, w, a with rational coefficients.

    Terms map dense exponent vectors to nonzero coefficients; the zero
    polynomial is the empty map.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, Scalar]] = None):
        cleaned: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != NVARS or any(e < 0 for e in exponent):
                raise ValueError(f"Invalid exponent vector {exponent}")
            cleaned[exponent] = cleaned.get(exponent, Fraction(0)) + Fraction(coefficient)
        self._terms: Dict[Exponent, Fraction] = {e: c for e, c in cleaned.items() if c != 0}
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, Fraction]) -> "MultiPoly":
        # terms already canonical (no zero coefficients)
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    # constructors

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, value: Scalar) -> "MultiPoly":
        value = Fraction(value)
        return cls._raw({_ZERO_EXPONENT: value} if value else {})

    @classmethod
    def monomial(cls, coefficient: Scalar = 1, **powers: int) -> "MultiPoly":
        """Build coefficient * x^i y^j ... from keyword powers, e.g. monomial(2, x=3, y=1)."""
        exponent = [0] * NVARS
        for name, power in powers.items():
            exponent[Variable.of(name).index] = power
        return cls({tuple(exponent): coefficient})

    @classmethod
    def variable(cls, var: VariableLike, power: int = 1) -> "MultiPoly":
        return cls.monomial(1, **{Variable.of(var).value: power})

    @classmethod
    def coerce(cls, value: Union["MultiPoly", Scalar]) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return cls.constant(value)

    # inspection

    def terms(self) -> List[Tuple[Exponent, Fraction]]:
        """Terms sorted in canonical order."""
        return sorted(self._terms.items(), key=lambda item: _term_order(item[0]))

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(e == _ZERO_EXPONENT for e in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(_ZERO_EXPONENT, Fraction(0))

    def degree(self, var: VariableLike) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        index = Variable.of(var).index
        return max((e[index] for e in self._terms), default=-1)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def variables(self) -> Tuple[Variable, ...]:
        """Variables occurring with positive degree, in canonical order."""
        return tuple(v for v in VARIABLES if any(e[v.index] for e in self._terms))

    def free_of(self, var: VariableLike) -> bool:
        index = Variable.of(var).index
        return all(e[index] == 0 for e in self._terms)

    def check_degree_bound(self, bound: int) -> None:
        """Raise when any variable exceeds the per-variable degree guard."""
        for exponent in self._terms:
            if max(exponent) > bound:
                raise DegreeOverflowException(
                    f"Exponent {exponent} exceeds degree guard {bound}"
                )

    # ring arithmetic

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = MultiPoly.constant(other)
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            value = result.get(exponent, Fraction(0)) + coefficient
            if value:
                result[exponent] = value
            else:
                result.pop(exponent, None)
        return MultiPoly._raw(result)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        return self + (-MultiPoly.coerce(other))

    def __rsub__(self, other):
        return MultiPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        result: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                result[exponent] = result.get(exponent, Fraction(0)) + c1 * c2
        return MultiPoly._raw({e: c for e, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if not isinstance(power, int) or power < 0:
            raise ValueError(f"Polynomial powers must be non-negative integers, got {power}")
        result = MultiPoly.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            power >>= 1
            if power:
                base = base * base
        return result

    def scale(self, factor: Scalar) -> "MultiPoly":
        """poly_scale: multiply every coefficient by a rational."""
        factor = Fraction(factor)
        if not factor:
            return MultiPoly.zero()
        return MultiPoly._raw({e: c * factor for e, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # q-calculus

    def q_derive(self, var: VariableLike, ctx: QContext) -> "MultiPoly":
        """Jackson derivative D_q in var: var^k m -> [k]_q var^(k-1) m."""
        return self.q_derive_k(var, 1, ctx)

    def q_derive_k(self, var: VariableLike, k: int, ctx: QContext) -> "MultiPoly":
        """k-fold D_q: var^n m -> ([n]_q!/[n-k]_q!) var^(n-k) m, zero when k > n."""
        if k < 0:
            raise ValueError(f"q_derive_k requires k >= 0, got {k}")
        if k == 0:
            return self
        index = Variable.of(var).index
        result: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in self._terms.items():
            power = exponent[index]
            if power < k:
                continue
            factor = ctx.q_falling(power, k)
            if not factor:
                continue
            lowered = exponent[:index] + (power - k,) + exponent[index + 1:]
            result[lowered] = coefficient * factor
        return MultiPoly._raw(result)

    # substitutions

    def subst_scale(self, var: VariableLike, factor: Scalar) -> "MultiPoly":
        """Replace var by factor*var."""
        factor = Fraction(factor)
        index = Variable.of(var).index
        result = {}
        for exponent, coefficient in self._terms.items():
            value = coefficient * factor ** exponent[index]
            if value:
                result[exponent] = value
        return MultiPoly._raw(result)

    def specialize(self, var: VariableLike, value: Scalar) -> "MultiPoly":
        """Set var to a rational, leaving the other variables symbolic."""
        value = Fraction(value)
        index = Variable.of(var).index
        result: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in self._terms.items():
            lowered = exponent[:index] + (0,) + exponent[index + 1:]
            result[lowered] = result.get(lowered, Fraction(0)) + coefficient * value ** exponent[index]
        return MultiPoly._raw({e: c for e, c in result.items() if c})

    def rename(self, source: VariableLike, target: VariableLike) -> "MultiPoly":
        """Rename source to target; target must not occur in the polynomial."""
        source, target = Variable.of(source), Variable.of(target)
        if source == target:
            return self
        if not self.free_of(target):
            raise InvalidOperandException(f"Cannot rename {source.value} to {target.value}: target occurs")
        result = {}
        for exponent, coefficient in self._terms.items():
            moved = list(exponent)
            moved[target.index], moved[source.index] = exponent[source.index], 0
            result[tuple(moved)] = coefficient
        return MultiPoly._raw(result)

    def evaluate(self, point: Mapping[VariableLike, Scalar]) -> Fraction:
        """poly_eval: exact evaluation; every occurring variable must be assigned."""
        values = [None] * NVARS
        for name, value in point.items():
            values[Variable.of(name).index] = parse_rational(value)
        for variable in self.variables():
            if values[variable.index] is None:
                raise MissingAssignmentException(variable.value)
        total = Fraction(0)
        for exponent, coefficient in self._terms.items():
            term = coefficient
            for index, power in enumerate(exponent):
                if power:
                    term *= values[index] ** power
            total += term
        return total

    # encodings

    def to_json(self) -> List[dict]:
        """[{"e": [ex, ey, ez, ew, ea], "c": "p/q"}, ...] in canonical order."""
        return [{"e": list(e), "c": format_rational(c)} for e, c in self.terms()]

    @classmethod
    def from_json(cls, payload: Iterable[dict]) -> "MultiPoly":
        return cls({tuple(item["e"]): parse_rational(item["c"]) for item in payload})

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exponent, coefficient in reversed(self.terms()):
            factors = [
                variable.value if power == 1 else f"{variable.value}^{power}"
                for variable, power in zip(VARIABLES, exponent) if power
            ]
            magnitude = abs(coefficient)
            if not factors:
                body = format_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{format_rational(magnitude)}*" + "*".join(factors)
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiPoly({self})"


def leibniz_rhs(f: MultiPoly, g: MultiPoly, var: VariableLike, n: int, ctx: QContext) -> MultiPoly:
    """
    Right-hand side of the q-Leibniz rule for D_q^n (f g).

    sum_k q^(k(k-n)) [n k]_q D_q^k f * D_q^(n-k) {g(q^k var)}
    """
    total = MultiPoly.zero()
    for k in range(n + 1):
        shifted = g.subst_scale(var, ctx.q_power(k))
        weight = ctx.q_power(k * (k - n)) * ctx.q_binomial(n, k)
        total = total + (f.q_derive_k(var, k, ctx) * shifted.q_derive_k(var, n - k, ctx)).scale(weight)
    return total


def pochhammer_poly(var: VariableLike, base: Scalar, n: int) -> MultiPoly:
    """(var; base)_n = prod_{k<n} (1 - base^k var) as a polynomial in var."""
    base = Fraction(base)
    generator = MultiPoly.variable(var)
    result = MultiPoly.one()
    for k in range(n):
        result = result * (MultiPoly.one() - generator.scale(base ** k))
    return result
