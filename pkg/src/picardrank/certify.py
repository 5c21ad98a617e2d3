"""Rank certificates for concrete intersection data.

The certifier checks the numeric hypotheses, evaluates P and every summand
of the matching decomposition, and, when all summands vanish, confirms the
rank of the intersection matrix by exact elimination and recovers the
multipliers expressing D through the ambient divisors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .identities import (
    AmbientKind,
    AmbientSpec,
    Identity,
    blowup_identity,
    blowup_minors,
    build_P,
    chain_det,
    cxp5_identity,
    cxp5_minors,
    grass_decomposition,
    hodge_minor_grass,
    sigma_decomposition,
    quadric_identity,
    r_main,
    tilde_r,
)
from .linalg import bareiss_rank, in_span, solve_combination
from .partition import sigma_from_ratios
from .prodproj import ProdData, prod_matrix
from .schubert import GrassData, grass_matrix
from .symbolic import D_VAR, DELTA_VAR, MU_VAR, Family, Var

RANK_ONE = "rank-one"
RANK_TWO = "rank-two"
NOT_FORCED = "not-forced"
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class HypothesisStatus:
    ok: bool
    reason: str = ""

    def to_dict(self) -> dict:
        return {"status": "ok" if self.ok else "violated", "reason": self.reason}

    @classmethod
    def from_dict(cls, d: Mapping) -> "HypothesisStatus":
        return cls(d["status"] == "ok", d.get("reason", ""))


OK = HypothesisStatus(True)


@dataclass(frozen=True)
class Conclusion:
    kind: str
    p: Fraction | None = None
    q: Fraction | None = None
    reason: str = ""

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == RANK_TWO:
            out["p"] = self.p
        if self.kind in (RANK_ONE, RANK_TWO):
            out["q"] = self.q
        else:
            out["reason"] = self.reason
        return out

    @classmethod
    def from_dict(cls, d: Mapping) -> "Conclusion":
        p = d.get("p")
        q = d.get("q")
        return cls(
            d["kind"],
            None if p is None else Fraction(p),
            None if q is None else Fraction(q),
            d.get("reason", ""),
        )


def rank_one(q) -> Conclusion:
    return Conclusion(RANK_ONE, q=Fraction(q))


def rank_two(p, q) -> Conclusion:
    return Conclusion(RANK_TWO, p=Fraction(p), q=Fraction(q))


def not_forced(reason: str) -> Conclusion:
    return Conclusion(NOT_FORCED, reason=reason)


def inconsistent(reason: str) -> Conclusion:
    return Conclusion(INCONSISTENT, reason=reason)


@dataclass(frozen=True)
class MiscData:
    """Data for the fixed-dimension ambients, keyed by field name."""

    kind: AmbientKind
    values: Mapping[str, Fraction]

    FIELDS = {
        AmbientKind.PROJECTIVE: ("d", "delta", "mu"),
        AmbientKind.QUADRIC_EVEN: ("d", "alpha1", "alpha2", "mu"),
        AmbientKind.QUADRIC_ODD: ("d", "alpha1", "alpha2", "mu"),
        AmbientKind.BLOWUP_P6: ("a1", "a2", "alpha1", "alpha2", "lambda1", "lambda2"),
        AmbientKind.CURVE_X_P5: ("a1", "a2", "alpha1", "alpha2", "lambda1", "lambda2"),
    }

    def __post_init__(self):
        kind = AmbientKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind not in self.FIELDS:
            raise ValueError(f"{kind.value} is not a fixed-dimension ambient")
        want = set(self.FIELDS[kind])
        got = set(self.values)
        if want != got:
            raise ValueError(
                f"{kind.value} data needs fields {sorted(want)}; "
                f"missing {sorted(want - got)}, unexpected {sorted(got - want)}"
            )
        object.__setattr__(self, "values", {k: Fraction(self.values[k]) for k in self.FIELDS[kind]})

    def __getitem__(self, name: str) -> Fraction:
        return self.values[name]

    def point(self) -> dict:
        names = {
            "d": D_VAR,
            "delta": DELTA_VAR,
            "mu": MU_VAR,
            "a1": Var(Family.A, 1),
            "a2": Var(Family.A, 2),
            "alpha1": Var(Family.ALPHA, 1),
            "alpha2": Var(Family.ALPHA, 2),
            "lambda1": Var(Family.LAMBDA, 1),
            "lambda2": Var(Family.LAMBDA, 2),
        }
        return {names[k]: v for k, v in self.values.items()}


@dataclass
class RankCertificate:
    ambient: AmbientSpec
    hypothesis: HypothesisStatus
    p_value: Fraction
    summands: list  # [(label, Fraction)]
    conclusion: Conclusion
    matrix: list = field(default_factory=list)
    sigma: str | None = None
    notes: list = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return self.conclusion.kind in (RANK_ONE, RANK_TWO)

    def to_dict(self) -> dict:
        out = {
            "ambient": self.ambient.kind.value,
            "n": self.ambient.n,
            "hypothesis": self.hypothesis.to_dict(),
            "P": self.p_value,
            "summands": [[label, v] for label, v in self.summands],
            "conclusion": self.conclusion.to_dict(),
            "matrix": [list(row) for row in self.matrix],
        }
        if self.sigma is not None:
            out["sigma"] = self.sigma
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    @classmethod
    def from_dict(cls, d: Mapping) -> "RankCertificate":
        return cls(
            ambient=AmbientSpec(AmbientKind(d["ambient"]), d.get("n")),
            hypothesis=HypothesisStatus.from_dict(d["hypothesis"]),
            p_value=Fraction(d["P"]),
            summands=[(label, Fraction(v)) for label, v in d["summands"]],
            conclusion=Conclusion.from_dict(d["conclusion"]),
            matrix=[[Fraction(x) for x in row] for row in d.get("matrix", [])],
            sigma=d.get("sigma"),
            notes=list(d.get("notes", [])),
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, RankCertificate):
            return NotImplemented
        return self.to_dict() == other.to_dict()


# shared helpers


def _summand_values(identity: Identity, point: Mapping[Var, Fraction]) -> list:
    point = dict(point)
    for v, r in identity.substitution.items():
        point[v] = r.evaluate(point)
    out = []
    for s in identity.rhs:
        t = s.coeff
        for base, e in s.factors:
            t *= base.evaluate(point) ** e
        out.append((s.label, t))
    return out


def _rows_match(target: Sequence, basis: Sequence[Sequence], coeffs: Sequence) -> bool:
    return all(
        t == sum(c * row[j] for c, row in zip(coeffs, basis)) for j, t in enumerate(target)
    )


def grass_point(data: GrassData) -> dict:
    pt = {Var(Family.A, i): x for i, x in enumerate(data.a, 1)}
    pt.update({Var(Family.ALPHA, i): x for i, x in enumerate(data.alpha, 1)})
    pt.update({Var(Family.LAMBDA, i): x for i, x in enumerate(data.lambda_, 1)})
    return pt


def prod_point(data: ProdData) -> dict:
    return grass_point(data)  # same field layout


def validate_hypotheses(data) -> HypothesisStatus:
    if isinstance(data, GrassData):
        zero = [i for i, x in enumerate(data.a, 1) if x == 0]
        if zero:
            return HypothesisStatus(
                False,
                f"a_{zero[0]} = 0: every intersection number a_i must be nonzero",
            )
        return OK
    if isinstance(data, ProdData):
        n = data.n
        if data.a_at(1) <= 0 or data.a_at(n - 1) <= 0:
            return HypothesisStatus(
                False,
                "a_1 and a_{n-1} must be positive (both projections of X surjective)",
            )
        bad = [i for i in range(2, n - 1) if data.a_at(i) <= 0]
        if bad:
            return HypothesisStatus(
                False,
                f"a_{bad[0]} <= 0 although a_1, a_(n-1) > 0: such data cannot come from an irreducible X",
            )
        return OK
    if isinstance(data, MiscData):
        kind = data.kind
        if kind in (AmbientKind.PROJECTIVE, AmbientKind.QUADRIC_EVEN, AmbientKind.QUADRIC_ODD):
            if data["d"] <= 0:
                return HypothesisStatus(False, "degree d must be positive")
            return OK
        if kind == AmbientKind.BLOWUP_P6:
            if data["a1"] - data["a2"] <= 0:
                return HypothesisStatus(
                    False,
                    "a1 - a2 = (H-E)^4 must be positive (checkable stand-in for H-E ample)",
                )
            if data["a1"] <= 0:
                return HypothesisStatus(False, "a1 must be positive")
            return OK
        if kind == AmbientKind.CURVE_X_P5:
            if data["a1"] <= 0 or data["a2"] < 0:
                return HypothesisStatus(False, "need a1 > 0 and a2 >= 0")
            return OK
    raise TypeError(f"unsupported data type {type(data).__name__}")


# Grassmannian


@dataclass
class HodgeReport:
    p_value: Fraction
    summands: list
    violations: list
    minors: list = field(default_factory=list)


def hodge_report(data) -> HodgeReport:
    """Evaluate P and each decomposition summand; list sign violations."""
    if isinstance(data, GrassData):
        return _grass_hodge(data)
    if isinstance(data, ProdData):
        return _prod_hodge(data)
    if isinstance(data, MiscData):
        return _misc_hodge(data)
    raise TypeError(f"unsupported data type {type(data).__name__}")


def _grass_hodge(data: GrassData) -> HodgeReport:
    n = data.n
    pt = grass_point(data)
    p = build_P(AmbientSpec(AmbientKind.GRASS, n)).evaluate(pt)
    violations = []
    minors = []
    for i in range(1, n // 2 + 1):
        h = hodge_minor_grass(i, n).evaluate(pt)
        minors.append((f"Hodge[{i}]", h))
        if h > 0:
            violations.append(f"Hodge_{i} = {h} > 0 contradicts the Hodge index theorem")
    summands = _summand_values(grass_decomposition(n), pt)
    for label, v in summands:
        if v < 0:
            violations.append(f"summand {label} = {v} is negative")
    return HodgeReport(p, summands, violations, minors)


def certify_grass(data: GrassData) -> RankCertificate:
    n = data.n
    ambient = AmbientSpec(AmbientKind.GRASS, n)
    m = grass_matrix(data)
    hyp = validate_hypotheses(data)
    pt = grass_point(data)
    p = build_P(ambient).evaluate(pt)

    def cert(conclusion, summands=(), notes=()):
        return RankCertificate(ambient, hyp, p, list(summands), conclusion, m, None, list(notes))

    if not hyp.ok:
        return cert(not_forced(f"hypothesis violated: {hyp.reason}"))
    neg = [i for i, x in enumerate(data.a, 1) if x < 0]
    if neg:
        return cert(inconsistent(f"a_{neg[0]} < 0: class coefficients of X are nonnegative"))
    if p != 0:
        return cert(inconsistent(f"P = {p} must vanish by the self-intersection identity"))
    report = _grass_hodge(data)
    if report.violations:
        return cert(inconsistent(report.violations[0]), report.summands)
    nonzero = [label for label, v in report.summands if v != 0]
    if nonzero:
        return cert(inconsistent(f"summand {nonzero[0]} must vanish"), report.summands)
    if bareiss_rank(m) > 1:
        return cert(inconsistent("intersection matrix has rank above one"), report.summands)
    q = data.alpha_at(1) / data.a_at(1)
    if not _rows_match(m[1], [m[0]], [q]):
        return cert(inconsistent("D-row is not q times the H-row"), report.summands)
    return cert(rank_one(q), report.summands)


# products of projective spaces


def _prod_hodge(data: ProdData, sigma=None) -> HodgeReport:
    n = data.n
    pt = prod_point(data)
    p = build_P(AmbientSpec(AmbientKind.PROD, n)).evaluate(pt)
    violations = []
    minors = []
    for i in range(1, n):
        r = r_main(i, n).evaluate(pt)
        rt = tilde_r(i, n, "h2").evaluate(pt)
        minors.append((f"r[{i}]", r))
        minors.append((f"r~[{i}]", rt))
        if r < 0:
            violations.append(f"r_{i},{i + 1},{n + i} = {r} < 0 contradicts the Hodge index theorem")
        if rt > 0:
            violations.append(f"r~_{i} = {rt} > 0 contradicts the Hodge index theorem")
    summands = []
    if sigma is None:
        sigma = sigma_from_ratios(data.a)
    for label, v in _summand_values(sigma_decomposition(n, sigma), pt):
        summands.append((label, v))
        if v < 0:
            violations.append(f"summand {label} = {v} is negative")
    return HodgeReport(p, summands, violations, minors)


def _induction_order(n: int) -> list:
    """Interior columns by distance d(j) = min(j-1, n-j) to the ends, the
    smaller index first within one distance."""
    return sorted(range(2, n), key=lambda j: (min(j - 1, n - j), j))


def certify_prod(data: ProdData) -> RankCertificate:
    n = data.n
    ambient = AmbientSpec(AmbientKind.PROD, n)
    m = prod_matrix(data)
    hyp = validate_hypotheses(data)
    pt = prod_point(data)
    p = build_P(ambient).evaluate(pt)
    sigma_text = None
    notes: list = []

    def cert(conclusion, summands=()):
        return RankCertificate(ambient, hyp, p, list(summands), conclusion, m, sigma_text, notes)

    if not hyp.ok:
        return cert(not_forced(f"hypothesis violated: {hyp.reason}"))
    if p != 0:
        return cert(inconsistent(f"P = {p} must vanish by the self-intersection identity"))
    for i in range(1, n):
        c = chain_det(i, n).evaluate(pt)
        if c > 0:
            return cert(inconsistent(f"a_{i - 1} a_{i + 1} > a_{i}^2 breaks the log-concave chain"))
    sigma = sigma_from_ratios(data.a)
    sigma_text = sigma.render()
    for i in range(2, n - 1):
        if sigma(i) == sigma(i + 1) and data.a_at(i) * data.alpha_at(i + 1) != data.a_at(i + 1) * data.alpha_at(i):
            return cert(
                inconsistent(
                    f"a_{i} alpha_{i + 1} != a_{i + 1} alpha_{i} although a_{i - 1}/a_{i} = a_{i}/a_{i + 1}"
                )
            )
    report = _prod_hodge(data, sigma)
    if report.violations:
        return cert(inconsistent(report.violations[0]), report.summands)
    nonzero = [label for label, v in report.summands if v != 0]
    if nonzero:
        return cert(inconsistent(f"summand {nonzero[0]} must vanish"), report.summands)

    cols = [[row[j] for row in m] for j in range(2 * n - 1)]
    col = lambda j: cols[j - 1]  # noqa: E731
    first, last = col(1), col(n)
    for j in _induction_order(n):
        if j < (n + 2) / 2:
            pair = (col(j - 1), col(n - j + 2))
        else:
            pair = (col(n - j + 1), col(j + 1))
        if bareiss_rank(pair) < 2:
            notes.append(f"column {j}: induction pair degenerate, checked against columns 1 and n")
            pair = (first, last)
        if not in_span(col(j), *pair):
            return cert(
                inconsistent(f"column {j} is not a combination of the two columns before it"),
                report.summands,
            )
    for j in range(n + 1, 2 * n):
        if not in_span(col(j), first, last):
            return cert(
                inconsistent(f"column {j} is not a combination of the first and last columns"),
                report.summands,
            )
    if bareiss_rank(m) != 2:
        return cert(inconsistent("intersection matrix does not have rank two"), report.summands)
    pq = (data.alpha_at(n) / data.a_at(n - 1), data.alpha_at(1) / data.a_at(1))
    if not _rows_match(m[2], m[:2], pq):
        return cert(inconsistent("D-row is not p H1-row + q H2-row"), report.summands)
    return cert(rank_two(*pq), report.summands)


# fixed-dimension ambients


def misc_matrix(data: MiscData) -> list:
    v = data.values
    kind = data.kind
    if kind == AmbientKind.PROJECTIVE:
        return [[v["d"], v["delta"]], [v["delta"], v["mu"]]]
    if kind in (AmbientKind.QUADRIC_EVEN, AmbientKind.QUADRIC_ODD):
        d, x1, x2, mu = v["d"], v["alpha1"], v["alpha2"], v["mu"]
        return [[d, d, 2 * d, x1 + x2], [x1, x2, x1 + x2, mu]]
    a1, a2, x1, x2, l1, l2 = (v[k] for k in MiscData.FIELDS[kind])
    if kind == AmbientKind.BLOWUP_P6:
        return [[a1, 0, x1, 0], [0, -a2, 0, -x2], [x1, -x2, l1, l2]]
    return [[a2, a1, x2, x1], [a1, 0, x1, 0], [x2, x1, l2, l1]]


def _misc_hodge(data: MiscData) -> HodgeReport:
    kind = data.kind
    pt = data.point()
    p = build_P(AmbientSpec(kind)).evaluate(pt)
    violations = []
    minors = []
    if kind == AmbientKind.PROJECTIVE:
        det = data["d"] * data["mu"] - data["delta"] ** 2
        minors.append(("hodge", det))
        summands = [("hodge", -det)]
        if det > 0:
            violations.append("d mu - delta^2 > 0 contradicts the Hodge index theorem")
        return HodgeReport(p, summands, violations, minors)
    if kind in (AmbientKind.QUADRIC_EVEN, AmbientKind.QUADRIC_ODD):
        ident = quadric_identity(kind == AmbientKind.QUADRIC_EVEN)
        summands = _summand_values(ident, pt)
        hodge = dict(summands)["hodge"]
        minors.append(("hodge", -2 * hodge))
        if hodge < 0:
            violations.append("2 d mu > (alpha1 + alpha2)^2 contradicts the Hodge index theorem")
        return HodgeReport(p, summands, violations, minors)
    if kind == AmbientKind.BLOWUP_P6:
        ident, (small, big) = blowup_identity(), blowup_minors()
    else:
        ident, (small, big) = cxp5_identity(), cxp5_minors()
    s, b = small.evaluate(pt), big.evaluate(pt)
    minors += [("det2", s), ("det3", b)]
    if s > 0:
        violations.append(f"2x2 minor {s} > 0 contradicts the Hodge index theorem")
    if b < 0:
        violations.append(f"3x3 minor {b} < 0 contradicts the Hodge index theorem")
    summands = _summand_values(ident, pt)
    for label, v in summands:
        if v < 0:
            violations.append(f"summand {label} = {v} is negative")
    return HodgeReport(p, summands, violations, minors)


def certify_misc(data: MiscData) -> RankCertificate:
    kind = data.kind
    ambient = AmbientSpec(kind)
    m = misc_matrix(data)
    hyp = validate_hypotheses(data)
    p = build_P(ambient).evaluate(data.point())
    notes: list = []
    if kind == AmbientKind.BLOWUP_P6:
        notes.append("ampleness of H-E is not decidable from these numbers; a1 - a2 > 0 is used instead")

    def cert(conclusion, summands=()):
        return RankCertificate(ambient, hyp, p, list(summands), conclusion, m, None, notes)

    if not hyp.ok:
        return cert(not_forced(f"hypothesis violated: {hyp.reason}"))
    if p != 0:
        return cert(inconsistent(f"P = {p} must vanish by the self-intersection identity"))
    report = _misc_hodge(data)
    if report.violations:
        return cert(inconsistent(report.violations[0]), report.summands)
    if kind == AmbientKind.QUADRIC_EVEN and data["alpha1"] != data["alpha2"]:
        return cert(
            not_forced(
                "alpha1 != alpha2: the even-dimensional quadric has two rulings "
                "(Segre-type example), so D need not be a multiple of H"
            ),
            report.summands,
        )
    nonzero = [label for label, v in report.summands if v != 0]
    if nonzero:
        return cert(inconsistent(f"summand {nonzero[0]} must vanish"), report.summands)
    if kind in (AmbientKind.PROJECTIVE, AmbientKind.QUADRIC_EVEN, AmbientKind.QUADRIC_ODD):
        head = data["delta"] if kind == AmbientKind.PROJECTIVE else data["alpha1"]
        q = head / data["d"]
        if bareiss_rank(m) > 1 or not _rows_match(m[1], [m[0]], [q]):
            return cert(inconsistent("D-row is not q times the H-row"), report.summands)
        return cert(rank_one(q), report.summands)
    coeffs = solve_combination(m[:2], m[2])
    if coeffs is None or bareiss_rank(m) > 2:
        return cert(inconsistent("D-row is not a combination of the two ambient rows"), report.summands)
    return cert(rank_two(*coeffs), report.summands)


def certify(data) -> RankCertificate:
    if isinstance(data, GrassData):
        return certify_grass(data)
    if isinstance(data, ProdData):
        return certify_prod(data)
    if isinstance(data, MiscData):
        return certify_misc(data)
    raise TypeError(f"unsupported data type {type(data).__name__}")


# synthesized data for the fixed-dimension ambients


def synthesize_misc(kind: AmbientKind, **params) -> MiscData:
    """Data of D as a combination of the ambient divisors.

    projective / quadrics: ``d``, ``q`` (D = qH).  blow-up: ``a1, a2, p, q``
    (D = pH + qE).  curve x P^5: ``a1, a2, p, q`` (D = pH + qF).
    """
    kind = AmbientKind(kind)
    f = {k: Fraction(v) for k, v in params.items()}
    if kind == AmbientKind.PROJECTIVE:
        d, q = f["d"], f["q"]
        return MiscData(kind, {"d": d, "delta": q * d, "mu": q * q * d})
    if kind in (AmbientKind.QUADRIC_EVEN, AmbientKind.QUADRIC_ODD):
        d, q = f["d"], f["q"]
        return MiscData(kind, {"d": d, "alpha1": q * d, "alpha2": q * d, "mu": 2 * q * q * d})
    a1, a2, p, q = f["a1"], f["a2"], f["p"], f["q"]
    if kind == AmbientKind.BLOWUP_P6:
        x1, x2 = p * a1, q * a2
        return MiscData(
            kind,
            {"a1": a1, "a2": a2, "alpha1": x1, "alpha2": x2, "lambda1": p * x1, "lambda2": -q * x2},
        )
    x1, x2 = p * a1, p * a2 + q * a1
    return MiscData(
        kind,
        {"a1": a1, "a2": a2, "alpha1": x1, "alpha2": x2, "lambda1": p * x1, "lambda2": p * x2 + q * x1},
    )
