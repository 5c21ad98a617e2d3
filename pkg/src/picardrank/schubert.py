"""Chow ring of the Grassmannian G(1,n) of lines in P^n.

A symbol Omega(a, b) with 0 <= a < b <= n is the class of lines meeting a
fixed a-plane and lying in a fixed b-plane.  Internally every symbol is the
two-row partition (p, q) = (n-1-a, n-b) inside a 2 x (n-1) box, where the
codimension is p + q and products follow the two-row Littlewood-Richardson
rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

Number = int | Fraction


@dataclass(frozen=True, order=True)
class SchubertSymbol:
    a: int
    b: int
    n: int

    def __post_init__(self):
        if not 0 <= self.a < self.b <= self.n:
            raise ValueError(f"invalid symbol Omega({self.a},{self.b}) in G(1,{self.n})")

    @property
    def dimension(self) -> int:
        return self.a + self.b - 1

    @property
    def codimension(self) -> int:
        return 2 * (self.n - 1) - self.dimension

    def partition(self) -> tuple:
        return (self.n - 1 - self.a, self.n - self.b)

    @classmethod
    def from_partition(cls, p: int, q: int, n: int) -> "SchubertSymbol":
        return cls(n - 1 - p, n - q, n)

    def dual(self) -> "SchubertSymbol":
        return SchubertSymbol(self.n - self.b, self.n - self.a, self.n)

    def __str__(self) -> str:
        return f"Omega({self.a},{self.b})"


def is_valid_symbol(a: int, b: int, n: int) -> bool:
    return 0 <= a < b <= n


class SchubertClass:
    """Homogeneous rational combination of Schubert symbols in G(1,n)."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[SchubertSymbol, Number] | None = None):
        self.n = n
        clean = {}
        for s, c in (terms or {}).items():
            if s.n != n:
                raise ValueError("symbol from a different Grassmannian")
            c = Fraction(c)
            if c:
                clean[s] = clean.get(s, 0) + c
                if not clean[s]:
                    del clean[s]
        codims = {s.codimension for s in clean}
        if len(codims) > 1:
            raise ValueError("Schubert class must be homogeneous")
        self._terms = clean

    @classmethod
    def symbol(cls, a: int, b: int, n: int, coeff: Number = 1) -> "SchubertClass":
        return cls(n, {SchubertSymbol(a, b, n): coeff})

    @classmethod
    def zero(cls, n: int) -> "SchubertClass":
        return cls(n)

    @classmethod
    def fundamental(cls, n: int) -> "SchubertClass":
        return cls.symbol(n - 1, n, n)

    @classmethod
    def hyperplane(cls, n: int) -> "SchubertClass":
        return cls.symbol(n - 2, n, n)

    @classmethod
    def point(cls, n: int) -> "SchubertClass":
        return cls.symbol(0, 1, n)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, a: int, b: int) -> Fraction:
        if not is_valid_symbol(a, b, self.n):
            return Fraction(0)
        return self._terms.get(SchubertSymbol(a, b, self.n), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def codimension(self) -> int | None:
        for s in self._terms:
            return s.codimension
        return None

    def __add__(self, other: "SchubertClass") -> "SchubertClass":
        _same_n(self, other)
        out = dict(self._terms)
        for s, c in other._terms.items():
            out[s] = out.get(s, 0) + c
        return SchubertClass(self.n, out)

    def __neg__(self) -> "SchubertClass":
        return SchubertClass(self.n, {s: -c for s, c in self._terms.items()})

    def __sub__(self, other: "SchubertClass") -> "SchubertClass":
        return self + (-other)

    def scale(self, c: Number) -> "SchubertClass":
        return SchubertClass(self.n, {s: k * c for s, k in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, SchubertClass):
            return schubert_product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchubertClass):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for s in sorted(self._terms, key=lambda s: (s.a, s.b)):
            c = self._terms[s]
            parts.append(str(s) if c == 1 else f"{c}*{s}")
        return " + ".join(parts)

    __str__ = render

    def __repr__(self) -> str:
        return f"SchubertClass(n={self.n}, {self.render()})"


def _same_n(x: SchubertClass, y: SchubertClass) -> None:
    if x.n != y.n:
        raise ValueError("classes live in different Grassmannians")


def _two_row_product(p1: int, q1: int, p2: int, q2: int, width: int) -> list:
    """Partitions (with multiplicity) in s_(p1,q1) * s_(p2,q2) with at most
    two rows and first row at most ``width``."""
    shift = q1 + q2
    r, s = p1 - q1, p2 - q2
    out = []
    for j in range(min(r, s) + 1):
        p, q = r + s - j + shift, j + shift
        if p <= width:
            out.append((p, q))
    return out


def schubert_product(x: SchubertClass, y: SchubertClass) -> SchubertClass:
    _same_n(x, y)
    n = x.n
    out: dict = {}
    for s1, c1 in x._terms.items():
        p1, q1 = s1.partition()
        for s2, c2 in y._terms.items():
            p2, q2 = s2.partition()
            for p, q in _two_row_product(p1, q1, p2, q2, n - 1):
                sym = SchubertSymbol.from_partition(p, q, n)
                out[sym] = out.get(sym, 0) + c1 * c2
    return SchubertClass(n, out)


def pieri_mul_h(c: SchubertClass) -> SchubertClass:
    """Multiply by the hyperplane class: Omega(a,b) -> Omega(a-1,b) + Omega(a,b-1)."""
    n = c.n
    out: dict = {}
    for s, k in c._terms.items():
        for a, b in ((s.a - 1, s.b), (s.a, s.b - 1)):
            if is_valid_symbol(a, b, n):
                sym = SchubertSymbol(a, b, n)
                out[sym] = out.get(sym, 0) + k
    return SchubertClass(n, out)


def degree(c: SchubertClass) -> Fraction:
    """Coefficient of the point class; zero unless ``c`` has top codimension."""
    return c.coefficient(0, 1)


def pairing_number(x: SchubertClass, y: SchubertClass) -> Fraction:
    _same_n(x, y)
    if x.is_zero() or y.is_zero():
        return Fraction(0)
    if x.codimension + y.codimension != 2 * (x.n - 1):
        raise ValueError("pairing needs complementary codimensions")
    # the dual basis is Omega(a,b) <-> Omega(n-b, n-a)
    total = Fraction(0)
    for s, c in x._terms.items():
        total += c * y._terms.get(s.dual(), 0)
    return total


def all_symbols(n: int) -> list:
    return [SchubertSymbol(a, b, n) for b in range(1, n + 1) for a in range(b)]


def degree_g1n(n: int) -> Fraction:
    """Plucker degree of G(1,n): H^(2n-2) against the fundamental class."""
    if n < 2:
        raise ValueError("n must be at least 2")
    c = SchubertClass.fundamental(n)
    for _ in range(2 * n - 2):
        c = pieri_mul_h(c)
    return degree(c)


def catalan_degree(n: int) -> int:
    return factorial(2 * n - 2) // (factorial(n - 1) * factorial(n))


# intersection data of a subvariety X of dimension n in G(1,n)


def _half(n: int) -> int:
    return n // 2


def _half_up(n: int) -> int:
    return (n + 1) // 2


@dataclass(frozen=True)
class GrassData:
    """Intersection numbers of X and a divisor D in G(1,n).

    ``a[i-1]`` is the coefficient of Omega(i, n-i+1) in [X],
    ``alpha[i-1]`` that of Omega(i-1, n-i+1) in [D.X], and ``lambda_[i-1]``
    the degree of D^2.X against Omega(i, n-i+1).
    """

    n: int
    a: tuple
    alpha: tuple
    lambda_: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        object.__setattr__(self, "alpha", tuple(Fraction(x) for x in self.alpha))
        object.__setattr__(self, "lambda_", tuple(Fraction(x) for x in self.lambda_))
        if self.n < 4:
            raise ValueError("Grassmannian data needs n >= 4")
        expect = (_half(self.n), _half_up(self.n), _half(self.n))
        got = (len(self.a), len(self.alpha), len(self.lambda_))
        if got != expect:
            raise ValueError(
                f"G(1,{self.n}) data needs len(a), len(alpha), len(lambda) = {expect}, got {got}"
            )

    def a_at(self, i: int) -> Fraction:
        return self.a[i - 1] if 1 <= i <= len(self.a) else Fraction(0)

    def alpha_at(self, i: int) -> Fraction:
        return self.alpha[i - 1] if 1 <= i <= len(self.alpha) else Fraction(0)

    def lambda_at(self, i: int) -> Fraction:
        return self.lambda_[i - 1] if 1 <= i <= len(self.lambda_) else Fraction(0)


def grass_x_class(n: int, a: Sequence[Number]) -> SchubertClass:
    return SchubertClass(n, {SchubertSymbol(i, n - i + 1, n): c for i, c in enumerate(a, 1)})


def grass_dx_class(n: int, alpha: Sequence[Number]) -> SchubertClass:
    return SchubertClass(n, {SchubertSymbol(i - 1, n - i + 1, n): c for i, c in enumerate(alpha, 1)})


def grass_matrix(data: GrassData) -> list:
    """Two-row matrix: the H-row over the D-row, n columns.

    Left block (one column per Omega(j-1, n-j+1), j = 1..ceil(n/2)):
    H-row a_{j-1}+a_j, D-row alpha_j.  Right block (i = 1..floor(n/2)):
    H-row alpha_i+alpha_{i+1}, D-row lambda_i.
    """
    n = data.n
    left = range(1, _half_up(n) + 1)
    right = range(1, _half(n) + 1)
    h_row = [data.a_at(j - 1) + data.a_at(j) for j in left]
    h_row += [data.alpha_at(i) + data.alpha_at(i + 1) for i in right]
    d_row = [data.alpha_at(j) for j in left] + [data.lambda_at(i) for i in right]
    return [h_row, d_row]


def grass_column_labels(n: int) -> list:
    left = [f"Omega({j - 1},{n - j + 1})" for j in range(1, _half_up(n) + 1)]
    right = [f"D.Omega({i},{n - i + 1})" for i in range(1, _half(n) + 1)]
    return left + right


def synthesize_grass(n: int, a: Sequence[Number], q: Number) -> GrassData:
    """Data of D = qH on a formal X with [X] = sum a_i Omega(i, n-i+1).

    Every entry is computed in the Chow ring, not from a closed formula.
    """
    x = grass_x_class(n, a)
    h = SchubertClass.hyperplane(n)
    q = Fraction(q)
    dx = (x * h).scale(q)
    d2x = (x * h * h).scale(q * q)
    alpha = [
        pairing_number(dx, SchubertClass.symbol(i - 1, n - i + 1, n))
        for i in range(1, _half_up(n) + 1)
    ]
    lam = [
        pairing_number(d2x, SchubertClass.symbol(i, n - i + 1, n))
        for i in range(1, _half(n) + 1)
    ]
    return GrassData(n, tuple(a), tuple(alpha), tuple(lam))


def symbols_by_codim(n: int) -> dict:
    out: dict = {}
    for s in all_symbols(n):
        out.setdefault(s.codimension, []).append(s)
    return out


def classes_from(symbols: Iterable[SchubertSymbol], n: int) -> list:
    return [SchubertClass(n, {s: 1}) for s in symbols]
