"""Chow ring of P^(n-1) x P^(n-1) and the three-row intersection matrix."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

Number = int | Fraction


class BidegreeClass:
    """Homogeneous combination of monomials H1^i H2^j, 0 <= i, j <= n-1."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[tuple, Number] | None = None):
        self.n = n
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = Fraction(c)
            if c and i < n and j < n:
                clean[(i, j)] = clean.get((i, j), 0) + c
                if not clean[(i, j)]:
                    del clean[(i, j)]
        if len({i + j for i, j in clean}) > 1:
            raise ValueError("bidegree class must be homogeneous")
        self._terms = clean

    @classmethod
    def monomial(cls, n: int, i: int, j: int, coeff: Number = 1) -> "BidegreeClass":
        return cls(n, {(i, j): coeff})

    @classmethod
    def h1(cls, n: int) -> "BidegreeClass":
        return cls.monomial(n, 1, 0)

    @classmethod
    def h2(cls, n: int) -> "BidegreeClass":
        return cls.monomial(n, 0, 1)

    @classmethod
    def one(cls, n: int) -> "BidegreeClass":
        return cls.monomial(n, 0, 0)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "BidegreeClass") -> "BidegreeClass":
        if self.n != other.n:
            raise ValueError("different ambient dimensions")
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return BidegreeClass(self.n, out)

    def __neg__(self) -> "BidegreeClass":
        return self.scale(-1)

    def __sub__(self, other: "BidegreeClass") -> "BidegreeClass":
        return self + (-other)

    def scale(self, c: Number) -> "BidegreeClass":
        return BidegreeClass(self.n, {m: k * c for m, k in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, BidegreeClass):
            return bideg_product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "BidegreeClass":
        out = BidegreeClass.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, BidegreeClass):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j) in sorted(self._terms, reverse=True):
            c = self._terms[(i, j)]
            mono = "*".join(
                f"{h}^{e}" if e > 1 else h for h, e in (("H1", i), ("H2", j)) if e
            ) or "1"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    __str__ = render

    def __repr__(self) -> str:
        return f"BidegreeClass(n={self.n}, {self.render()})"


def bideg_product(x: BidegreeClass, y: BidegreeClass) -> BidegreeClass:
    if x.n != y.n:
        raise ValueError("different ambient dimensions")
    out: dict = {}
    for (i, j), c in x._terms.items():
        for (k, l), d in y._terms.items():
            if i + k < x.n and j + l < x.n:
                out[(i + k, j + l)] = out.get((i + k, j + l), 0) + c * d
    return BidegreeClass(x.n, out)


def top_degree(c: BidegreeClass) -> Fraction:
    return c.coefficient(c.n - 1, c.n - 1)


@dataclass(frozen=True)
class ProdData:
    """Intersection numbers of X and D in P^(n-1) x P^(n-1).

    ``a[i-1]`` = a_i (i = 1..n-1), ``alpha[i-1]`` = alpha_i (i = 1..n),
    ``lambda_[i-1]`` = lambda_i (i = 1..n-1).  a_0 = a_n = 0.
    """

    n: int
    a: tuple
    alpha: tuple
    lambda_: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        object.__setattr__(self, "alpha", tuple(Fraction(x) for x in self.alpha))
        object.__setattr__(self, "lambda_", tuple(Fraction(x) for x in self.lambda_))
        if self.n < 3:
            raise ValueError("product data needs n >= 3")
        expect = (self.n - 1, self.n, self.n - 1)
        got = (len(self.a), len(self.alpha), len(self.lambda_))
        if got != expect:
            raise ValueError(
                f"P^{self.n - 1} x P^{self.n - 1} data needs len(a), len(alpha), len(lambda) = {expect}, got {got}"
            )

    def a_at(self, i: int) -> Fraction:
        return self.a[i - 1] if 1 <= i <= self.n - 1 else Fraction(0)

    def alpha_at(self, i: int) -> Fraction:
        return self.alpha[i - 1] if 1 <= i <= self.n else Fraction(0)

    def lambda_at(self, i: int) -> Fraction:
        return self.lambda_[i - 1] if 1 <= i <= self.n - 1 else Fraction(0)


def x_class(n: int, a: Sequence[Number]) -> BidegreeClass:
    """[X] = sum_t a_{n-1-t} H1^(n-2-t) H2^t."""
    return BidegreeClass(n, {(n - 2 - t, t): a[n - 2 - t] for t in range(n - 1)})


def dx_class(n: int, alpha: Sequence[Number]) -> BidegreeClass:
    """[D.X] = sum_t alpha_{n-t} H1^(n-1-t) H2^t."""
    return BidegreeClass(n, {(n - 1 - t, t): alpha[n - 1 - t] for t in range(n)})


def prod_matrix(data: ProdData) -> list:
    """Rows H1, H2, D; columns H1^(n-j) H2^(j-1) (j = 1..n) then
    D.H1^(n-1-i) H2^(i-1) (i = 1..n-1)."""
    n = data.n
    a, al, lam = data.a_at, data.alpha_at, data.lambda_at
    row1 = [a(j - 1) for j in range(1, n + 1)] + [al(i) for i in range(1, n)]
    row2 = [a(j) for j in range(1, n + 1)] + [al(i + 1) for i in range(1, n)]
    row3 = [al(j) for j in range(1, n + 1)] + [lam(i) for i in range(1, n)]
    return [row1, row2, row3]


def prod_column_labels(n: int) -> list:
    def mono(i: int, j: int) -> str:
        parts = [f"{h}^{e}" if e > 1 else h for h, e in (("H1", i), ("H2", j)) if e]
        return "*".join(parts) or "1"

    left = [mono(n - j, j - 1) for j in range(1, n + 1)]
    right = ["D*" + mono(n - 1 - i, i - 1) if (n - 1 - i or i - 1) else "D" for i in range(1, n)]
    return left + right


def matrix_from_classes(n: int, x: BidegreeClass, d: BidegreeClass) -> list:
    """The intersection matrix recomputed from [X] and a divisor class D.

    Entry (row R, column C) is the top degree of R.C.[X].
    """
    h1, h2 = BidegreeClass.h1(n), BidegreeClass.h2(n)
    rows = (h1, h2, d)
    cols = [BidegreeClass.monomial(n, n - j, j - 1) for j in range(1, n + 1)]
    cols += [d * BidegreeClass.monomial(n, n - 1 - i, i - 1) for i in range(1, n)]
    return [[top_degree(r * c * x) for c in cols] for r in rows]


def synthesize_prod(n: int, a: Sequence[Number], p: Number, q: Number) -> ProdData:
    """Data of D = p H1 + q H2 on a formal X with the given a-vector."""
    x = x_class(n, a)
    d = BidegreeClass.h1(n).scale(p) + BidegreeClass.h2(n).scale(q)
    m = matrix_from_classes(n, x, d)
    alpha = m[2][:n]
    lam = m[2][n:]
    return ProdData(n, tuple(a), tuple(alpha), tuple(lam))
