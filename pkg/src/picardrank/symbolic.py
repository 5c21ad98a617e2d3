"""Exact sparse multivariate polynomials and rational functions over Q.

Everything here is immutable once built.  Coefficients are
:class:`fractions.Fraction`; monomials are tuples of ``(Var, exponent)``
pairs sorted by the global variable order.
"""

from __future__ import annotations

import random
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

Rational = Fraction
Number = Union[int, Fraction]


class Family(IntEnum):
    A = 0
    ALPHA = 1
    LAMBDA = 2
    D_SYM = 3
    DELTA_SYM = 4
    MU_SYM = 5


_FAMILY_NAMES = {
    Family.A: "a",
    Family.ALPHA: "alpha",
    Family.LAMBDA: "lambda",
    Family.D_SYM: "d",
    Family.DELTA_SYM: "delta",
    Family.MU_SYM: "mu",
}
_SCALAR_FAMILIES = (Family.D_SYM, Family.DELTA_SYM, Family.MU_SYM)


class Var(NamedTuple):
    family: Family
    index: int = 0

    def __str__(self) -> str:
        name = _FAMILY_NAMES[self.family]
        if self.family in _SCALAR_FAMILIES:
            return name
        return f"{name}{self.index}"


Monomial = tuple  # tuple[tuple[Var, int], ...], sorted by Var


class ZeroDenominatorError(ZeroDivisionError):
    pass


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def grlex_key(m: Monomial):
    """Sort key placing monomials in descending graded-lex order."""
    return (-mono_degree(m), tuple((v, -e) for v, e in m))


def render_monomial(m: Monomial) -> str:
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)


def _as_fraction(c: Number) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


class Poly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = _as_fraction(c)
                if c:
                    m = tuple(sorted((v, e) for v, e in m if e))
                    clean[m] = clean.get(m, 0) + c
                    if not clean[m]:
                        del clean[m]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # terms already canonical: sorted monomials, no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Number) -> "Poly":
        c = _as_fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, v: Var) -> "Poly":
        return cls._raw({((v, 1),): Fraction(1)})

    @classmethod
    def monomial(cls, m: Monomial, c: Number = 1) -> "Poly":
        return cls({m: c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((), Fraction(0))

    def variables(self) -> frozenset:
        return frozenset(v for m in self._terms for v, _ in m)

    def degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=-1)

    def leading(self) -> tuple:
        m = min(self._terms, key=grlex_key)
        return m, self._terms[m]

    def canonical(self) -> "Poly":
        return Poly(self._terms)

    # ring operations

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            self, other = other, self
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def scale(self, c: Number) -> "Poly":
        c = _as_fraction(c)
        if not c:
            return Poly._raw({})
        return Poly._raw({m: k * c for m, k in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # evaluation and substitution

    def evaluate(self, point: Mapping[Var, Number]) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                t *= _as_fraction(point[v]) ** e
            total += t
        return total

    def substitute(self, mapping: Mapping[Var, "RatFunc | Poly | Number"]) -> "RatFunc":
        return substitute(self, mapping)

    def split(self, outer: Iterable[Family] | None = None) -> dict:
        """Group terms by their monomial in the ``outer`` families.

        Returns ``{outer_monomial: coefficient Poly}`` where the
        coefficients only involve the remaining families.  By default every
        family except ``A`` is outer.
        """
        outer = set(outer) if outer is not None else set(Family) - {Family.A}
        groups: dict = {}
        for m, c in self._terms.items():
            om = tuple((v, e) for v, e in m if v.family in outer)
            im = tuple((v, e) for v, e in m if v.family not in outer)
            groups.setdefault(om, {})[im] = c
        return {om: Poly._raw(t) for om, t in groups.items()}

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m in sorted(self._terms, key=grlex_key):
            c = self._terms[m]
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            body = render_monomial(m)
            if not body:
                text = str(a)
            elif a == 1:
                text = body
            else:
                text = f"{a}*{body}"
            parts.append((sign, text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    __str__ = render

    def __repr__(self) -> str:
        return f"Poly({self.render()!r})"


def const(c: Number) -> Poly:
    return Poly.const(c)


def a(i: int) -> Poly:
    return Poly.var(Var(Family.A, i))


def alpha(i: int) -> Poly:
    return Poly.var(Var(Family.ALPHA, i))


def lam(i: int) -> Poly:
    return Poly.var(Var(Family.LAMBDA, i))


D_VAR = Var(Family.D_SYM)
DELTA_VAR = Var(Family.DELTA_SYM)
MU_VAR = Var(Family.MU_SYM)


def det2(m00: Poly, m01: Poly, m10: Poly, m11: Poly) -> Poly:
    return m00 * m11 - m01 * m10


def det3(rows) -> Poly:
    (a_, b, c), (d, e, f), (g, h, i) = rows
    return a_ * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


# rational functions


def _normalize_factor(p: Poly) -> tuple:
    """Split a denominator factor into (constant, [(factor, exp), ...]).

    Monomial factors break into single variables; other factors are scaled
    to have leading coefficient one so equal factors are recognised
    syntactically.
    """
    if p.is_zero():
        raise ZeroDenominatorError("denominator is the zero polynomial")
    if p.is_constant():
        return p.constant_value(), []
    if len(p._terms) == 1:
        ((m, c),) = p._terms.items()
        return c, [(Poly.var(v), e) for v, e in m]
    _, lc = p.leading()
    return lc, [(p.scale(1 / lc), 1)]


class RatFunc:
    """A formal quotient ``num / den`` of polynomials.

    The denominator is stored as a product of normalised factors so that
    sums can use a common multiple built from shared factors instead of the
    full product.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "_factors")

    def __init__(self, num: Poly | Number, den: Poly | Number = 1):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if not isinstance(den, Poly):
            den = Poly.const(den)
        c, factors = _normalize_factor(den)
        self.num = num.scale(1 / c)
        self._factors = {}
        if self.num:
            for f, e in factors:
                self._factors[f] = self._factors.get(f, 0) + e

    @classmethod
    def _raw(cls, num: Poly, factors: dict) -> "RatFunc":
        r = cls.__new__(cls)
        r.num = num
        r._factors = factors if num else {}
        return r

    @property
    def factors(self) -> tuple:
        return tuple(sorted(self._factors.items(), key=lambda fe: fe[0].render()))

    @property
    def den(self) -> Poly:
        out = Poly.const(1)
        for f, e in self._factors.items():
            out = out * f**e
        return out

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def variables(self) -> frozenset:
        vs = set(self.num.variables())
        for f in self._factors:
            vs |= f.variables()
        return frozenset(vs)

    def den_variables(self) -> frozenset:
        vs: set = set()
        for f in self._factors:
            vs |= f.variables()
        return frozenset(vs)

    @staticmethod
    def coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc._raw(x, {})
        if isinstance(x, (int, Fraction)):
            return RatFunc._raw(Poly.const(x), {})
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    def __add__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lcm = dict(self._factors)
        for f, e in other._factors.items():
            if lcm.get(f, 0) < e:
                lcm[f] = e
        n1 = self.num
        for f, e in lcm.items():
            k = e - self._factors.get(f, 0)
            if k:
                n1 = n1 * f**k
        n2 = other.num
        for f, e in lcm.items():
            k = e - other._factors.get(f, 0)
            if k:
                n2 = n2 * f**k
        return RatFunc._raw(n1 + n2, lcm)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, dict(self._factors))

    def __sub__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        num = self.num * other.num
        if not num:
            return RatFunc._raw(num, {})
        factors = dict(self._factors)
        for f, e in other._factors.items():
            factors[f] = factors.get(f, 0) + e
        return RatFunc._raw(num, factors)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc.coerce(other)
        if other.is_zero():
            raise ZeroDenominatorError("division by the zero rational function")
        c, factors = _normalize_factor(other.num)
        num = self.num.scale(1 / c)
        for f, e in other._factors.items():
            num = num * f**e
        out = dict(self._factors)
        for f, e in factors:
            out[f] = out.get(f, 0) + e
        return RatFunc._raw(num, out)

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) / self

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            raise ValueError("negative exponent")
        return RatFunc._raw(self.num**k, {f: e * k for f, e in self._factors.items()})

    def __eq__(self, other) -> bool:
        try:
            other = RatFunc.coerce(other)
        except TypeError:
            return NotImplemented
        # p/q == r/s  iff  p*s - r*q == 0, using shared factors as the common multiple
        return (self - other).num.is_zero()

    __hash__ = None

    def evaluate(self, point: Mapping[Var, Number]) -> Fraction:
        den = Fraction(1)
        for f, e in self._factors.items():
            den *= f.evaluate(point) ** e
        if not den:
            raise ZeroDenominatorError("denominator vanishes at this point")
        return self.num.evaluate(point) / den

    def substitute(self, mapping: Mapping[Var, "RatFunc | Poly | Number"]) -> "RatFunc":
        result = substitute(self.num, mapping)
        for f, e in self._factors.items():
            sf = substitute(f, mapping)
            if sf.is_zero():
                raise ZeroDenominatorError(f"substituted denominator factor {f} is zero")
            result = result / sf**e
        return result

    def render(self) -> str:
        if not self._factors:
            return self.num.render()
        den = " * ".join(
            f"({f.render()})" + (f"^{e}" if e > 1 else "") for f, e in self.factors
        )
        return f"({self.num.render()}) / ({den})"

    __str__ = render

    def __repr__(self) -> str:
        return f"RatFunc({self.render()!r})"


def substitute(p: Poly, mapping: Mapping[Var, "RatFunc | Poly | Number"]) -> RatFunc:
    """Replace variables of ``p`` by rational functions.

    Variables missing from ``mapping`` are left unchanged.
    """
    images = {v: RatFunc.coerce(r) for v, r in mapping.items()}
    powers: dict = {}

    def power(v: Var, e: int) -> RatFunc:
        key = (v, e)
        if key not in powers:
            base = images.get(v)
            powers[key] = RatFunc.coerce(Poly.var(v)) ** e if base is None else base**e
        return powers[key]

    total = RatFunc.coerce(0)
    for m, c in p.items():
        t = RatFunc.coerce(Poly.const(c))
        for v, e in m:
            t = t * power(v, e)
        total = total + t
    return total


def coeff_of(p: Poly, monomial: Mapping[Var, int] | Monomial) -> Poly:
    """Coefficient of a monomial in the non-``a`` variables.

    The result is a polynomial in the ``a`` variables only: the monomial
    must match the full non-``a`` part of a term exactly.
    """
    items = monomial.items() if isinstance(monomial, Mapping) else monomial
    key = tuple(sorted((v, e) for v, e in items if e))
    if any(v.family == Family.A for v, _ in key):
        raise ValueError("coefficient extraction is over alpha/lambda monomials; got an a-variable")
    return p.split().get(key, Poly())


def random_assignment(variables: Iterable[Var], seed: int, bound: int) -> dict:
    """Independent uniform integers in ``[1, bound]``, one per variable.

    A variable's value depends only on ``(seed, variable)``, so two
    expressions evaluated under the same seed see the same point.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    return {
        v: Fraction(random.Random(f"{seed}:{v.family.value}:{v.index}").randint(1, bound))
        for v in variables
    }


def eval_random(p: Poly | RatFunc, seed: int, bound: int) -> Fraction:
    return p.evaluate(random_assignment(p.variables(), seed, bound))
