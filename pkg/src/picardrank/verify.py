"""Coefficient-comparison verification with a randomized evaluation cross-check."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .expansion import Expansion, expand, substitution_images
from .identities import FIXED_SUITES, SUITES, Identity, Summand, suite_identities
from .symbolic import (
    Poly,
    RatFunc,
    Var,
    ZeroDenominatorError,
    random_assignment,
    render_monomial,
)

DEFAULT_SEEDS = 20
DEFAULT_BOUND = 10**9
MAX_REDRAWS = 50


@dataclass
class VerificationReport:
    identity: str
    n: int | None
    sigma: str | None
    status: str  # "verified" | "failed"
    residual: Poly
    ledger: list = field(default_factory=list)  # (monomial, lhs coeff, rhs coeff)
    monomials: int = 0
    spot_checks: list = field(default_factory=list)  # (monomial, equal?)
    oracle_seeds: int = 0
    oracle_equal: bool | None = None
    oracle_agrees: bool | None = None
    seconds: float = 0.0

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    @property
    def key(self) -> tuple:
        return (self.identity, -1 if self.n is None else self.n, self.sigma or "")

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "n": self.n,
            "sigma": self.sigma,
            "status": self.status,
            "residual": self.residual.render(),
            "ledger": [list(row) for row in self.ledger],
            "monomials": self.monomials,
            "spot_checks": [[m, ok] for m, ok in self.spot_checks],
            "oracle_seeds": self.oracle_seeds,
            "oracle_equal": self.oracle_equal,
            "oracle_agrees": self.oracle_agrees,
        }


def _side_expansion(side: Sequence[Summand], images: Mapping[Var, Expansion]) -> Expansion:
    total = Expansion()
    for s in side:
        term = Expansion.from_ratfunc(RatFunc.coerce(s.coeff))
        for base, e in s.factors:
            x = expand(base).substitute(images)
            term = term * (x**e)
        total = total + term
    return total


def _side_value(side: Sequence[Summand], point: Mapping[Var, Fraction]) -> Fraction:
    total = Fraction(0)
    for s in side:
        t = s.coeff
        for base, e in s.factors:
            t *= base.evaluate(point) ** e
        total += t
    return total


def _side_variables(side: Sequence[Summand]) -> set:
    vs: set = set()
    for s in side:
        for base, _ in s.factors:
            vs |= base.variables()
    return vs


def random_point(
    variables: Iterable[Var],
    substitution: Mapping[Var, RatFunc],
    seed: int | str,
    bound: int,
) -> dict:
    """Random values for the free variables, with substituted variables
    computed from their images at that point."""
    variables = set(variables)
    for r in substitution.values():
        variables |= r.variables()
    free = sorted(v for v in variables if v not in substitution)
    point = random_assignment(free, seed, bound)
    for v, r in substitution.items():
        point[v] = r.evaluate(point)
    return point


def evaluate_identity(identity: Identity, seed: int, bound: int = DEFAULT_BOUND) -> tuple:
    """(lhs value, rhs value) at a random point, redrawing on a vanishing denominator."""
    variables = _side_variables(identity.lhs) | _side_variables(identity.rhs)
    for attempt in range(MAX_REDRAWS):
        s = seed if attempt == 0 else f"{seed}/redraw{attempt}"
        try:
            point = random_point(variables, identity.substitution, s, bound)
            return _side_value(identity.lhs, point), _side_value(identity.rhs, point)
        except ZeroDenominatorError:
            continue
    raise ZeroDenominatorError(f"{identity.name}: every random point hit a zero denominator")


def compare_expansions(lhs: Expansion, rhs: Expansion) -> tuple:
    """(residual, ledger, monomial count) from per-monomial cross-multiplication."""
    diff = lhs - rhs
    ledger = []
    residual = Poly()
    for m in diff.monomials():
        c = diff.coeff(m)
        if c.is_zero():
            continue
        residual = residual + c.num * Poly.monomial(m)
        ledger.append((render_monomial(m) or "1", lhs.coeff(m).render(), rhs.coeff(m).render()))
    count = len(set(lhs.monomials()) | set(rhs.monomials()))
    return residual, ledger, count


def verify(
    identity: Identity,
    seeds: int = DEFAULT_SEEDS,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
) -> VerificationReport:
    start = time.perf_counter()
    images = substitution_images(identity.substitution)
    try:
        lhs = _side_expansion(identity.lhs, images)
        rhs = _side_expansion(identity.rhs, images)
    except ZeroDenominatorError as exc:
        where = f"{identity.name}, n={identity.n}"
        if identity.sigma is not None:
            where += f", sigma={identity.sigma.render()}"
        raise ZeroDenominatorError(f"{where}: {exc}") from exc
    residual, ledger, count = compare_expansions(lhs, rhs)
    spots = [
        (render_monomial(m), lhs.coeff(m) == rhs.coeff(m)) for m in identity.spot_monomials
    ]
    verified = residual.is_zero()
    equal = True
    for k in range(seeds):
        lv, rv = evaluate_identity(identity, seed * 1_000_003 + k, bound)
        if lv != rv:
            equal = False
            break
    return VerificationReport(
        identity=identity.name,
        n=identity.n,
        sigma=identity.sigma.render() if identity.sigma is not None else None,
        status="verified" if verified else "failed",
        residual=residual,
        ledger=ledger,
        monomials=count,
        spot_checks=spots,
        oracle_seeds=seeds,
        oracle_equal=equal if seeds else None,
        oracle_agrees=(equal == verified) if seeds else None,
        seconds=time.perf_counter() - start,
    )


def verify_identity(
    lhs,
    rhs,
    *,
    name: str = "identity",
    n: int | None = None,
    substitution: Mapping[Var, RatFunc] | None = None,
    seeds: int = DEFAULT_SEEDS,
    seed: int = 0,
) -> VerificationReport:
    """Verify ``lhs == rhs`` for Polys or RatFuncs whose denominators only
    involve the a-variables."""
    ident = Identity(
        name,
        n,
        (Summand.of("lhs", lhs),),
        (Summand.of("rhs", rhs),),
        substitution=dict(substitution or {}),
    )
    return verify(ident, seeds=seeds, seed=seed)


def _suite_range(suite: str, n_min: int | None, n_max: int | None) -> list:
    if suite in FIXED_SUITES:
        return [None]
    if n_min is None or n_max is None:
        raise ValueError(f"suite {suite} needs an n range")
    return list(range(n_min, n_max + 1))


@lru_cache(maxsize=64)
def _instances(suite: str, n: int | None) -> tuple:
    return tuple(suite_identities(suite, n))


def _run_one(args: tuple) -> VerificationReport:
    suite, n, index, seeds, seed = args
    return verify(_instances(suite, n)[index], seeds=seeds, seed=seed)


def suite_instances(suite: str, n_min: int | None = None, n_max: int | None = None) -> list:
    """(suite, n, index) tasks, one per identity instance."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    tasks = []
    for n in _suite_range(suite, n_min, n_max):
        count = len(_instances(suite, n))
        tasks.extend((suite, n, i) for i in range(count))
    return tasks


def run_suite(
    suite: str,
    n_min: int | None = None,
    n_max: int | None = None,
    *,
    jobs: int = 1,
    seeds: int = DEFAULT_SEEDS,
    seed: int = 0,
) -> list:
    """Verify every instance; reports come back sorted by instance key."""
    tasks = [t + (seeds, seed) for t in suite_instances(suite, n_min, n_max)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_one, tasks, chunksize=1))
    else:
        reports = [_run_one(t) for t in tasks]
    return sorted(reports, key=lambda r: r.key)


def suite_passed(reports: Sequence[VerificationReport]) -> bool:
    return all(r.verified and r.oracle_agrees is not False for r in reports)
