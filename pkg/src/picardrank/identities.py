"""Named polynomials of each ambient and their decomposition identities.

Every decomposition is a list of labelled summands, each a product of
powers of Polys/RatFuncs, so the same object can be expanded symbolically
and evaluated numerically term by term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from .partition import PartitionMap, enumerate_partition_maps, sigma_map
from .symbolic import (
    D_VAR,
    DELTA_VAR,
    MU_VAR,
    Family,
    Poly,
    RatFunc,
    Var,
    det2,
    det3,
)


class AmbientKind(str, Enum):
    PROJECTIVE = "projective"
    GRASS = "grass"
    PROD = "prod"
    QUADRIC_EVEN = "quadric_even"
    QUADRIC_ODD = "quadric_odd"
    BLOWUP_P6 = "blowup_p6"
    CURVE_X_P5 = "curve_x_p5"


@dataclass(frozen=True)
class AmbientSpec:
    kind: AmbientKind
    n: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", AmbientKind(self.kind))
        if self.kind == AmbientKind.GRASS and (self.n is None or self.n < 4):
            raise ValueError("G(1,n) needs n >= 4")
        if self.kind == AmbientKind.PROD and (self.n is None or self.n < 3):
            raise ValueError("P^(n-1) x P^(n-1) needs n >= 3")


def _zero() -> Poly:
    return Poly()


def _one() -> Poly:
    return Poly.const(1)


# variable accessors with the boundary conventions of each ambient


class GrassVars:
    """a_i (1..floor(n/2)), alpha_i (1..ceil(n/2)), lambda_i (1..floor(n/2)); zero outside."""

    def __init__(self, n: int):
        self.n = n
        self.k = n // 2
        self.ka = (n + 1) // 2

    def a(self, i: int) -> Poly:
        return Poly.var(Var(Family.A, i)) if 1 <= i <= self.k else _zero()

    def alpha(self, i: int) -> Poly:
        return Poly.var(Var(Family.ALPHA, i)) if 1 <= i <= self.ka else _zero()

    def lam(self, i: int) -> Poly:
        return Poly.var(Var(Family.LAMBDA, i)) if 1 <= i <= self.k else _zero()


class ProdVars:
    """a_i (1..n-1, with a_0 = a_n = 0), alpha_i (1..n), lambda_i (1..n-1)."""

    def __init__(self, n: int):
        self.n = n
        self.k = -(-n // 2)

    def a(self, i: int) -> Poly:
        return Poly.var(Var(Family.A, i)) if 1 <= i <= self.n - 1 else _zero()

    def alpha(self, i: int) -> Poly:
        return Poly.var(Var(Family.ALPHA, i)) if 1 <= i <= self.n else _zero()

    def lam(self, i: int) -> Poly:
        return Poly.var(Var(Family.LAMBDA, i)) if 1 <= i <= self.n - 1 else _zero()

    def column(self, c: int) -> tuple:
        """Column c (1-based) of the symbolic three-row matrix."""
        n = self.n
        if 1 <= c <= n:
            return (self.a(c - 1), self.a(c), self.alpha(c))
        if n < c <= 2 * n - 1:
            i = c - n
            return (self.alpha(i), self.alpha(i + 1), self.lam(i))
        raise IndexError(f"column {c} outside 1..{2 * n - 1}")


def _scalar(family: Family) -> Poly:
    return Poly.var(Var(family))


def _small(family: Family, i: int) -> Poly:
    return Poly.var(Var(family, i))


def build_P(ambient: AmbientSpec) -> Poly:
    """The self-intersection polynomial P, which vanishes on actual data."""
    kind, n = ambient.kind, ambient.n
    if kind == AmbientKind.PROJECTIVE:
        d, delta, mu = (Poly.var(v) for v in (D_VAR, DELTA_VAR, MU_VAR))
        return delta * delta - d * mu
    if kind == AmbientKind.GRASS:
        g = GrassVars(n)
        p = Poly()
        for i in range(1, g.ka + 1):
            p = p + g.alpha(i) ** 2
        for i in range(1, g.k + 1):
            p = p - g.a(i) * g.lam(i)
        return p
    if kind == AmbientKind.PROD:
        v = ProdVars(n)
        p = Poly()
        for i in range(1, n + 1):
            p = p + v.alpha(i) * v.alpha(n + 1 - i)
        for i in range(1, n):
            p = p - v.a(i) * v.lam(n - i)
        return p
    if kind in (AmbientKind.QUADRIC_EVEN, AmbientKind.QUADRIC_ODD):
        a1, a2 = _small(Family.ALPHA, 1), _small(Family.ALPHA, 2)
        d, mu = Poly.var(D_VAR), Poly.var(MU_VAR)
        lead = a1 * a2 * 2 if kind == AmbientKind.QUADRIC_EVEN else a1 * a1 + a2 * a2
        return lead - d * mu
    a1, a2 = _small(Family.A, 1), _small(Family.A, 2)
    x1, x2 = _small(Family.ALPHA, 1), _small(Family.ALPHA, 2)
    l1, l2 = _small(Family.LAMBDA, 1), _small(Family.LAMBDA, 2)
    if kind == AmbientKind.BLOWUP_P6:
        return x1 * x1 - x2 * x2 - a1 * l1 - a2 * l2
    if kind == AmbientKind.CURVE_X_P5:
        return x1 * x2 * 2 - a1 * l2 - a2 * l1
    raise ValueError(f"unknown ambient {kind}")


# Grassmannian


def hodge_minor_grass(i: int, n: int) -> Poly:
    """Sum of the two 2x2 minors pairing column i of each block; the second
    is absent for even n at i = n/2."""
    g = GrassVars(n)
    if not 1 <= i <= g.k:
        raise IndexError(f"Hodge index {i} outside 1..{g.k}")
    right = g.alpha(i) + g.alpha(i + 1)
    h = det2(g.a(i - 1) + g.a(i), right, g.alpha(i), g.lam(i))
    if not (n % 2 == 0 and i == g.k):
        h = h + det2(g.a(i) + g.a(i + 1), right, g.alpha(i + 1), g.lam(i))
    return h


def grass_weight(i: int, n: int) -> Poly:
    """a_{i-1} + 2a_i + a_{i+1}, dropping the second pair at the even boundary."""
    g = GrassVars(n)
    s = g.a(i - 1) + g.a(i)
    if not (n % 2 == 0 and i == g.k):
        s = s + g.a(i) + g.a(i + 1)
    return s


# products of projective spaces


def minor_r(cols: Sequence[int], n: int) -> Poly:
    """Determinant of the chosen columns of the symbolic three-row matrix.

    Two columns give the 2x2 minor of the H2 and D rows.
    """
    v = ProdVars(n)
    columns = [v.column(c) for c in cols]
    if len(columns) == 3:
        return det3([[col[r] for col in columns] for r in range(3)])
    if len(columns) == 2:
        (_, x0, y0), (_, x1, y1) = columns
        return det2(x0, x1, y0, y1)
    raise ValueError("minor_r takes two or three columns")


def r_main(i: int, n: int) -> Poly:
    return minor_r((i, i + 1, n + i), n)


def r_prime(i: int, n: int) -> Poly:
    return minor_r((i, i + 1, n - i + 1), n)


def tilde_r(i: int, n: int | None = None, form: str = "h1") -> Poly:
    """Reduced Hodge minor.  ``form="h1"``: a_{i-1} lambda_i - alpha_i^2;
    ``form="h2"``: a_{i+1} lambda_i - alpha_{i+1}^2.

    With ``n`` given the product-case boundary a_0 = a_n = 0 applies.
    """
    if n is None:
        n = i + 2
    v = ProdVars(n)
    if form == "h1":
        return det2(v.a(i - 1), v.alpha(i), v.alpha(i), v.lam(i))
    if form == "h2":
        return det2(v.a(i + 1), v.alpha(i + 1), v.alpha(i + 1), v.lam(i))
    raise ValueError("form must be 'h1' or 'h2'")


def chain_det(i: int, n: int) -> Poly:
    v = ProdVars(n)
    return det2(v.a(i - 1), v.a(i), v.a(i), v.a(i + 1))


def e_det(i: int, n: int) -> Poly:
    v = ProdVars(n)
    return det2(v.a(i - 1), v.a(n - i), v.a(i), v.a(n - i + 1))


def f_det(i: int, n: int) -> Poly:
    v = ProdVars(n)
    return det2(v.a(i), v.a(n - i), v.a(i + 1), v.a(n - i + 1))


def x_det(s: int, i: int, n: int) -> Poly:
    v = ProdVars(n)
    return det2(v.a(s), v.a(i + 1), v.alpha(s), v.alpha(i + 1))


def named_coeff(family: str, i: int, n: int, sigma: PartitionMap | None = None) -> RatFunc:
    """Coefficients c, d, l, m, g, h of the product-case decompositions.

    g and h depend on s = sigma(i) and need ``sigma``.  d, g and h are zero
    at i = ceil(n/2).
    """
    v = ProdVars(n)
    k = v.k
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} outside 1..{n - 1}")
    a = v.a
    if family == "c":
        return RatFunc(a(n - i), chain_det(i, n))
    if family == "d":
        if i == k:
            return RatFunc.coerce(0)
        return RatFunc(a(i) * a(n - i), chain_det(i, n) * e_det(i, n) * f_det(i, n))
    if family == "l":
        if i == k:
            raise ValueError(f"l_{i} is undefined at the middle index")
        sq = det2(a(i), a(n - i + 1), v.alpha(i), v.alpha(n - i + 1))
        return RatFunc(a(n - i) * sq * sq * chain_det(i, n), a(i) * e_det(i, n) * f_det(i, n))
    if family == "m":
        if i == n - 1 or f_det(i, n).is_zero():
            raise ValueError(f"m_{i} is undefined for n = {n}")
        x = det2(a(i), a(i + 1), v.alpha(i), v.alpha(i + 1))
        y = (
            a(i) * a(n - i + 1) * v.alpha(i + 1)
            - a(i) * a(i + 1) * v.alpha(n - i + 1) * 2
            + a(i + 1) * a(n - i + 1) * v.alpha(i)
        )
        return RatFunc(a(n - i) * x * y, a(i) * a(i + 1) * f_det(i, n))
    if family in ("g", "h"):
        if sigma is None:
            raise ValueError(f"{family}_{i} needs a partition map")
        if i == k:
            return RatFunc.coerce(0)
        s = sigma(i)
        x = x_det(s, i, n)
        if family == "g":
            return RatFunc(
                a(i) ** 3 * a(n - i) * f_det(i, n) * x * x,
                a(s) ** 2 * a(i + 1) ** 2 * e_det(i, n) * chain_det(i, n),
            )
        return RatFunc(
            a(i) * a(n - i) * e_det(i, n) * x * x,
            a(s) ** 2 * f_det(i, n) * chain_det(i, n),
        )
    raise ValueError(f"unknown coefficient family {family!r}")


# decompositions


@dataclass(frozen=True)
class Summand:
    """``coeff * prod(base ** exp)``; coeff is a rational number."""

    label: str
    factors: tuple
    coeff: Fraction = Fraction(1)

    @classmethod
    def of(cls, label: str, *factors, coeff=1) -> "Summand":
        fs = []
        for f in factors:
            if isinstance(f, tuple):
                fs.append((RatFunc.coerce(f[0]), f[1]))
            else:
                fs.append((RatFunc.coerce(f), 1))
        return cls(label, tuple(fs), Fraction(coeff))

    def negated(self) -> "Summand":
        return Summand(self.label, self.factors, -self.coeff)


@dataclass(frozen=True)
class Identity:
    """lhs == rhs after applying ``substitution`` to every factor."""

    name: str
    n: int | None
    lhs: tuple
    rhs: tuple
    sigma: PartitionMap | None = None
    substitution: Mapping = field(default_factory=dict)
    spot_monomials: tuple = ()

    @property
    def key(self) -> tuple:
        return (self.name, -1 if self.n is None else self.n, self.sigma.render() if self.sigma else "")


def _side(*summands: Summand) -> tuple:
    return tuple(summands)


def grass_decomposition(n: int) -> Identity:
    """P as minus weighted Hodge sums plus weighted squares."""
    g = GrassVars(n)
    rhs = []
    for i in range(1, g.k + 1):
        w = RatFunc(g.a(i), grass_weight(i, n))
        rhs.append(Summand.of(f"hodge[{i}]", w, hodge_minor_grass(i, n), coeff=-1))
    for i in range(1, g.ka):
        left, right = g.a(i - 1) + g.a(i), g.a(i) + g.a(i + 1)
        sq = det2(left, right, g.alpha(i), g.alpha(i + 1))
        w = RatFunc(g.a(i), grass_weight(i, n) * left * right)
        rhs.append(Summand.of(f"square[{i}]", w, (sq, 2)))
    spots = []
    for i in range(1, g.k + 1):
        spots.append(((Var(Family.LAMBDA, i), 1),))
    for i in range(1, g.ka + 1):
        spots.append(((Var(Family.ALPHA, i), 2),))
        if i < g.ka:
            spots.append(((Var(Family.ALPHA, i), 1), (Var(Family.ALPHA, i + 1), 1)))
    return Identity(
        "grass",
        n,
        _side(Summand.of("P", build_P(AmbientSpec(AmbientKind.GRASS, n)))),
        tuple(rhs),
        spot_monomials=tuple(spots),
    )


def prod_boundary_monomials(n: int) -> tuple:
    """alpha_1^2, alpha_1 alpha_n, alpha_k^2, alpha_k alpha_{k+1},
    alpha_k alpha_{k+2}, alpha_{k+1}^2, alpha_{k+1} alpha_{k+2}, alpha_n^2
    with k = ceil(n/2), restricted to indices <= n."""
    k = -(-n // 2)

    def mono(*idx):
        exps: dict = {}
        for i in idx:
            exps[Var(Family.ALPHA, i)] = exps.get(Var(Family.ALPHA, i), 0) + 1
        return tuple(sorted(exps.items()))

    pairs = [(1, 1), (1, n), (k, k), (k, k + 1), (k, k + 2), (k + 1, k + 1), (k + 1, k + 2), (n, n)]
    seen = []
    for i, j in pairs:
        if i <= n and j <= n:
            m = mono(i, j)
            if m not in seen:
                seen.append(m)
    return tuple(seen)


def prod_decomposition(n: int) -> Identity:
    """P = -sum c_i r_{i,i+1,n+i} - sum d_i r'_i^2."""
    rhs = []
    for i in range(1, n):
        rhs.append(Summand.of(f"c[{i}]*r[{i}]", named_coeff("c", i, n), r_main(i, n), coeff=-1))
    for i in range(1, n):
        d = named_coeff("d", i, n)
        if not d.is_zero():
            rhs.append(Summand.of(f"d[{i}]*r'[{i}]^2", d, (r_prime(i, n), 2), coeff=-1))
    spots = prod_boundary_monomials(n) + tuple(((Var(Family.LAMBDA, i), 1),) for i in range(1, n))
    return Identity(
        "prodproj_base",
        n,
        _side(Summand.of("P", build_P(AmbientSpec(AmbientKind.PROD, n)))),
        tuple(rhs),
        spot_monomials=spots,
    )


def case_change_indices(n: int) -> list:
    k = -(-n // 2)
    return [i for i in range(1, n - 1) if i != k]


def case_change(n: int, i: int, conditioned: bool = True) -> Identity:
    """-c_i r - d_i r'^2 = -(a_{n-i}/a_{i+1}) r~ - l_i - m_i, optionally
    under alpha_{i+1} -> (a_{i+1}/a_i) alpha_i."""
    v = ProdVars(n)
    lhs = _side(
        Summand.of("c*r", named_coeff("c", i, n), r_main(i, n), coeff=-1),
        Summand.of("d*r'^2", named_coeff("d", i, n), (r_prime(i, n), 2), coeff=-1),
    )
    rhs = _side(
        Summand.of("r~", RatFunc(v.a(n - i), v.a(i + 1)), tilde_r(i, n, "h2"), coeff=-1),
        Summand.of("l", named_coeff("l", i, n), coeff=-1),
        Summand.of("m", named_coeff("m", i, n), coeff=-1),
    )
    sub = {}
    if conditioned:
        sub = {Var(Family.ALPHA, i + 1): RatFunc(v.a(i + 1) * v.alpha(i), v.a(i))}
    name = f"cambio[i={i}]" if conditioned else f"cambio_unconditional[i={i}]"
    return Identity(name, n, lhs, rhs, substitution=sub)


def sigma_decomposition(n: int, sigma: PartitionMap) -> Identity:
    """P^sigma as the case-split negative sum over i = 1..n-1."""
    v = ProdVars(n)
    a = v.a
    k = v.k
    rhs = []
    for i in range(1, n):
        si, si1, sm = sigma(i), sigma(i + 1), sigma(n - i + 1)
        if si < si1:
            rhs.append(Summand.of(f"c[{i}]*r[{i}]", named_coeff("c", i, n), r_main(i, n), coeff=-1))
            if sm != si and sm != si1:
                d = named_coeff("d", i, n)
                if not d.is_zero():
                    rhs.append(Summand.of(f"d[{i}]*r'[{i}]^2", d, (r_prime(i, n), 2), coeff=-1))
            elif i != k:
                fam = "g" if si1 == sm else "h"
                rhs.append(Summand.of(f"{fam}[{i}]", named_coeff(fam, i, n, sigma), coeff=-1))
        else:
            if i < n - 1:
                rhs.append(
                    Summand.of(f"r~[{i}]", RatFunc(a(n - i), a(i + 1)), tilde_r(i, n, "h2"), coeff=-1)
                )
            else:
                # a_1/a_n * r~ has a_n = 0; its substituted limit is a_1 lambda_{n-1}
                rhs.append(Summand.of(f"r~[{i}]", a(1) * v.lam(n - 1), coeff=-1))
            if sm != si:
                rhs.append(Summand.of(f"l[{i}]", named_coeff("l", i, n), coeff=-1))
    return Identity(
        "psigma",
        n,
        _side(Summand.of("P", build_P(AmbientSpec(AmbientKind.PROD, n)))),
        tuple(rhs),
        sigma=sigma,
        substitution=sigma_map(sigma),
    )


def sigma_item_identities(n: int, sigma: PartitionMap) -> list:
    """The four vanishing / closed-form statements for one partition map."""
    v = ProdVars(n)
    a = v.a
    k = v.k
    sub = sigma_map(sigma)
    out = []

    def ident(name, lhs, rhs):
        out.append(Identity(name, n, _side(*lhs), _side(*rhs), sigma=sigma, substitution=sub))

    for i in range(1, n):
        si, si1, sm = sigma(i), sigma(i + 1), sigma(n - i + 1)
        if si == si1 and i <= n - 2 and not f_det(i, n).is_zero():
            ident(f"incordiones.i[i={i}]", [Summand.of("m", named_coeff("m", i, n))], [])
        if si == si1 == sm and i != k:
            ident(f"incordiones.ii[i={i}]", [Summand.of("l", named_coeff("l", i, n))], [])
        if si < si1 == sm:
            x = x_det(si, i, n)
            ident(
                f"incordiones.iii[i={i}]",
                [Summand.of("r'", r_prime(i, n))],
                [Summand.of("closed", RatFunc(a(i) * f_det(i, n) * x, a(si) * a(i + 1)), coeff=-1)],
            )
            if i != k:
                ident(
                    f"incordiones.iii.g[i={i}]",
                    [Summand.of("d*r'^2", named_coeff("d", i, n), (r_prime(i, n), 2))],
                    [Summand.of("g", named_coeff("g", i, n, sigma))],
                )
        if sm == si < si1:
            x = x_det(si, i, n)
            ident(
                f"incordiones.iv[i={i}]",
                [Summand.of("r'", r_prime(i, n))],
                [Summand.of("closed", RatFunc(e_det(i, n) * x, a(si)), coeff=-1)],
            )
            if i != k:
                ident(
                    f"incordiones.iv.h[i={i}]",
                    [Summand.of("d*r'^2", named_coeff("d", i, n), (r_prime(i, n), 2))],
                    [Summand.of("h", named_coeff("h", i, n, sigma))],
                )
    return out


# fixed-dimension ambients


def projective_identity() -> Identity:
    d, delta, mu = (Poly.var(x) for x in (D_VAR, DELTA_VAR, MU_VAR))
    return Identity(
        "proj",
        None,
        _side(Summand.of("P", build_P(AmbientSpec(AmbientKind.PROJECTIVE)))),
        _side(Summand.of("hodge", det2(d, delta, delta, mu), coeff=-1)),
    )


def quadric_identity(even: bool) -> Identity:
    """With H_S^2 = 2d and D_S.H_S = alpha1 + alpha2 the Hodge minor is
    (alpha1+alpha2)^2 - 2d mu; the square term flips sign with parity."""
    kind = AmbientKind.QUADRIC_EVEN if even else AmbientKind.QUADRIC_ODD
    x1, x2 = _small(Family.ALPHA, 1), _small(Family.ALPHA, 2)
    d, mu = Poly.var(D_VAR), Poly.var(MU_VAR)
    hodge = (x1 + x2) ** 2 - d * mu * 2
    return Identity(
        "quadric_even" if even else "quadric_odd",
        None,
        _side(Summand.of("P", build_P(AmbientSpec(kind)))),
        _side(
            Summand.of("hodge", hodge, coeff=Fraction(1, 2)),
            Summand.of("square", (x1 - x2, 2), coeff=Fraction(-1, 2) if even else Fraction(1, 2)),
        ),
    )


def _misc_vars():
    return (
        _small(Family.A, 1),
        _small(Family.A, 2),
        _small(Family.ALPHA, 1),
        _small(Family.ALPHA, 2),
        _small(Family.LAMBDA, 1),
        _small(Family.LAMBDA, 2),
    )


def blowup_minors() -> tuple:
    a1, a2, x1, x2, l1, l2 = _misc_vars()
    small = det2(a1, x1, x1, l1)
    big = det3([[a1, _zero(), x1], [_zero(), -a2, -x2], [x1, -x2, l1 + l2]])
    return small, big


def blowup_identity() -> Identity:
    a1, a2, *_ = _misc_vars()
    small, big = blowup_minors()
    return Identity(
        "blowup",
        None,
        _side(Summand.of("P", build_P(AmbientSpec(AmbientKind.BLOWUP_P6)))),
        _side(
            Summand.of("small", RatFunc(a1 - a2, a1), small, coeff=-1),
            Summand.of("big", RatFunc(1, a1), big),
        ),
    )


def cxp5_minors() -> tuple:
    a1, a2, x1, x2, l1, l2 = _misc_vars()
    small = det2(a1, x1, x1, l1)
    big = det3([[a2, a1, x2], [a1, _zero(), x1], [x2, x1, l2]])
    return small, big


def cxp5_identity(literal: bool = False) -> Identity:
    """``literal=True`` builds the variant with coefficient -1 on the 2x2
    minor, which does not hold."""
    a1, a2, *_ = _misc_vars()
    small, big = cxp5_minors()
    w = RatFunc.coerce(1) if literal else RatFunc(a2, a1)
    return Identity(
        "cxp5_literal" if literal else "cxp5",
        None,
        _side(Summand.of("P", build_P(AmbientSpec(AmbientKind.CURVE_X_P5)))),
        _side(
            Summand.of("big", RatFunc(1, a1), big),
            Summand.of("small", w, small, coeff=-1),
        ),
    )


SUITES = (
    "proj",
    "grass",
    "prodproj_base",
    "cambio",
    "incordiones",
    "psigma",
    "quadric",
    "blowup",
    "cxp5",
)

# suites whose identities do not depend on n
FIXED_SUITES = ("proj", "quadric", "blowup", "cxp5")

SUITE_MIN_N = {"grass": 4, "prodproj_base": 3, "cambio": 3, "incordiones": 3, "psigma": 3}
SUITE_MAX_N = {"grass": 12, "prodproj_base": 10, "cambio": 10, "incordiones": 8, "psigma": 8}


def suite_identities(suite: str, n: int | None = None) -> list:
    """All identity instances of ``suite`` at one n (n ignored for fixed suites)."""
    if suite == "proj":
        return [projective_identity()]
    if suite == "quadric":
        return [quadric_identity(True), quadric_identity(False)]
    if suite == "blowup":
        return [blowup_identity()]
    if suite == "cxp5":
        return [cxp5_identity()]
    if n is None:
        raise ValueError(f"suite {suite} needs n")
    if suite == "grass":
        return [grass_decomposition(n)]
    if suite == "prodproj_base":
        return [prod_decomposition(n)]
    if suite == "cambio":
        out = []
        for i in case_change_indices(n):
            out.append(case_change(n, i, conditioned=True))
            out.append(case_change(n, i, conditioned=False))
        return out
    if suite == "psigma":
        return [sigma_decomposition(n, s) for s in enumerate_partition_maps(n)]
    if suite == "incordiones":
        out = []
        for s in enumerate_partition_maps(n):
            out.extend(sigma_item_identities(n, s))
        return out
    raise ValueError(f"unknown suite {suite!r}")
