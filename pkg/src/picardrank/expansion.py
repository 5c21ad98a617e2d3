"""Polynomials in the alpha/lambda/d/delta/mu variables with coefficients in Q(a).

Identities are compared monomial by monomial in these outer variables,
clearing each coefficient's own denominator, which keeps the numbers far
smaller than a single global common denominator would.
"""

from __future__ import annotations

from typing import Mapping

from .symbolic import (
    Family,
    Monomial,
    Poly,
    RatFunc,
    Var,
    _mono_mul,
    grlex_key,
    render_monomial,
)


class Expansion:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Monomial, RatFunc] | None = None):
        self._coeffs = {m: c for m, c in (coeffs or {}).items() if not c.is_zero()}

    @classmethod
    def _raw(cls, coeffs: dict) -> "Expansion":
        e = cls.__new__(cls)
        e._coeffs = coeffs
        return e

    @classmethod
    def from_poly(cls, p: Poly) -> "Expansion":
        return cls._raw({m: RatFunc.coerce(c) for m, c in p.split().items()})

    @classmethod
    def from_ratfunc(cls, r: RatFunc | Poly | int) -> "Expansion":
        r = RatFunc.coerce(r)
        if any(v.family != Family.A for v in r.den_variables()):
            raise ValueError("denominator must involve only a-variables")
        factors = dict(r._factors)
        out = {}
        for m, c in r.num.split().items():
            out[m] = RatFunc._raw(c, dict(factors))
        return cls._raw(out)

    def items(self):
        return self._coeffs.items()

    def monomials(self) -> list:
        return sorted(self._coeffs, key=grlex_key)

    def coeff(self, monomial: Mapping[Var, int] | Monomial) -> RatFunc:
        items = monomial.items() if isinstance(monomial, Mapping) else monomial
        key = tuple(sorted((v, e) for v, e in items if e))
        return self._coeffs.get(key, RatFunc.coerce(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __add__(self, other: "Expansion") -> "Expansion":
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            s = out[m] + c if m in out else c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return Expansion._raw(out)

    def __neg__(self) -> "Expansion":
        return Expansion._raw({m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other: "Expansion") -> "Expansion":
        return self + (-other)

    def scale(self, r: RatFunc | Poly | int) -> "Expansion":
        r = RatFunc.coerce(r)
        if r.is_zero():
            return Expansion()
        return Expansion._raw({m: c * r for m, c in self._coeffs.items()})

    def __mul__(self, other: "Expansion") -> "Expansion":
        out: dict = {}
        for m1, c1 in self._coeffs.items():
            for m2, c2 in other._coeffs.items():
                m = _mono_mul(m1, m2)
                t = c1 * c2
                out[m] = out[m] + t if m in out else t
        return Expansion._raw({m: c for m, c in out.items() if not c.is_zero()})

    def __pow__(self, k: int) -> "Expansion":
        out = Expansion._raw({(): RatFunc.coerce(1)})
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, images: Mapping[Var, "Expansion"]) -> "Expansion":
        """Ring map sending each outer variable in ``images`` to its image."""
        if not images:
            return self
        cache: dict = {}

        def power(v: Var, e: int) -> Expansion:
            if (v, e) not in cache:
                cache[(v, e)] = images[v] ** e
            return cache[(v, e)]

        total = Expansion()
        for m, c in self._coeffs.items():
            kept = tuple((v, e) for v, e in m if v not in images)
            term = Expansion._raw({kept: c})
            for v, e in m:
                if v in images:
                    term = term * power(v, e)
            total = total + term
        return total

    def evaluate(self, point: Mapping[Var, object]):
        total = 0
        for m, c in self._coeffs.items():
            t = c.evaluate(point)
            for v, e in m:
                t *= point[v] ** e
            total += t
        return total

    def numerator_poly(self) -> Poly:
        """Sum over monomials of (numerator of coefficient) * monomial.

        Zero exactly when every coefficient is zero.
        """
        out = Poly()
        for m, c in self._coeffs.items():
            out = out + c.num * Poly.monomial(m)
        return out

    def render(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(
            f"[{self._coeffs[m].render()}]" + (f"*{render_monomial(m)}" if m else "")
            for m in self.monomials()
        )

    __str__ = render


def expand(x) -> Expansion:
    if isinstance(x, Expansion):
        return x
    if isinstance(x, Poly):
        return Expansion.from_poly(x)
    return Expansion.from_ratfunc(x)


def substitution_images(mapping: Mapping[Var, RatFunc]) -> dict:
    return {v: Expansion.from_ratfunc(r) for v, r in mapping.items()}

