"""Partition maps on {2, ..., n}.

A partition map sends each i to the start of the interval block that
contains it, so sigma(i) <= i and sigma is constant on [sigma(i), i].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .symbolic import Family, RatFunc, Var, a as a_var, alpha as alpha_var, substitute


@dataclass(frozen=True)
class PartitionMap:
    n: int
    values: tuple  # values[i - 2] = sigma(i), i = 2..n

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.n - 1:
            raise ValueError(f"partition map on {{2..{self.n}}} needs {self.n - 1} values")
        problems = partition_axiom_violations(self.n, dict(zip(range(2, self.n + 1), self.values)))
        if problems:
            raise ValueError("; ".join(problems))

    @classmethod
    def from_mapping(cls, n: int, sigma: Mapping[int, int]) -> "PartitionMap":
        return cls(n, tuple(sigma[i] for i in range(2, n + 1)))

    @classmethod
    def identity(cls, n: int) -> "PartitionMap":
        return cls(n, tuple(range(2, n + 1)))

    @classmethod
    def from_blocks(cls, n: int, blocks: Sequence[Sequence[int]]) -> "PartitionMap":
        sigma = {}
        for block in blocks:
            for i in block:
                sigma[i] = min(block)
        return cls.from_mapping(n, sigma)

    @classmethod
    def parse(cls, n: int, text: str) -> "PartitionMap":
        """Inverse of :meth:`render`, e.g. ``"{2,3}|{4}"``."""
        blocks = [[int(x) for x in part.strip("{} ").split(",")] for part in text.split("|")]
        return cls.from_blocks(n, blocks)

    def __call__(self, i: int) -> int:
        # sigma(1) := 1 extends the map to the whole index range used in sums
        if i == 1:
            return 1
        if not 2 <= i <= self.n:
            raise IndexError(f"sigma is defined on 1..{self.n}, got {i}")
        return self.values[i - 2]

    def blocks(self) -> list:
        out: dict = {}
        for i, s in zip(range(2, self.n + 1), self.values):
            out.setdefault(s, []).append(i)
        return [out[s] for s in sorted(out)]

    def render(self) -> str:
        return "|".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks())

    __str__ = render

    def is_identity(self) -> bool:
        return all(s == i for i, s in zip(range(2, self.n + 1), self.values))


def partition_axiom_violations(n: int, sigma: Mapping[int, int]) -> list:
    problems = []
    for i in range(2, n + 1):
        s = sigma.get(i)
        if s is None or not 2 <= s <= i:
            problems.append(f"sigma({i}) = {s} is not in 2..{i}")
            continue
        for j in range(s, i + 1):
            if sigma.get(j) != s:
                problems.append(f"sigma({j}) != sigma({i}) although {s} <= {j} <= {i}")
                break
    return problems


def enumerate_partition_maps(n: int) -> list:
    """All 2^(n-2) interval partitions of {2..n}, in a fixed order."""
    if n < 2:
        raise ValueError("n must be at least 2")
    maps = []
    for cuts in product((False, True), repeat=max(n - 2, 0)):
        values = [2]
        for i, cut in zip(range(3, n + 1), cuts):
            values.append(i if cut else values[-1])
        maps.append(PartitionMap(n, tuple(values)))
    return maps


def sigma_from_ratios(a: Sequence) -> PartitionMap:
    """Group consecutive equal ratios a_{i-1}/a_i into blocks.

    ``a`` holds a_1..a_{n-1}; a_0 = 0 and a_n = 0 make the boundary ratios
    0 and infinity, so 2 and n always start their own blocks.
    """
    a = [Fraction(x) for x in a]
    if any(x <= 0 for x in a):
        raise ValueError("sigma_from_ratios needs all a_i > 0")
    n = len(a) + 1
    full = [Fraction(0)] + a + [Fraction(0)]

    def ratio(i: int):
        # a_{i-1}/a_i with a_n = 0 read as +infinity
        return None if i == n else full[i - 1] / full[i]

    values = [2]
    for i in range(3, n + 1):
        same = ratio(i) is not None and ratio(i) == ratio(i - 1)
        values.append(values[-1] if same else i)
    return PartitionMap(n, tuple(values))


def sigma_map(sigma: PartitionMap) -> dict:
    """The substitution alpha_i -> (a_i / a_sigma(i)) alpha_sigma(i).

    Applied for every i in 2..n with sigma(i) != i; at i = n this sends
    alpha_n to 0 because a_n = 0.
    """
    n = sigma.n
    out = {}
    for i in range(2, n + 1):
        s = sigma(i)
        if s == i:
            continue
        if i == n:
            out[Var(Family.ALPHA, n)] = RatFunc.coerce(0)
        else:
            out[Var(Family.ALPHA, i)] = RatFunc(a_var(i) * alpha_var(s), a_var(s))
    return out


def sigma_substitute(p, sigma: PartitionMap) -> RatFunc:
    """Q -> Q^sigma for a Poly or RatFunc over the product-case variables."""
    mapping = sigma_map(sigma)
    if isinstance(p, RatFunc):
        return p.substitute(mapping)
    return substitute(p, mapping)
