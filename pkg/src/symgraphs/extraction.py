"""Hall pairing and count extraction.

The p basis is orthogonal under the Hall pairing with <p_lam, p_lam> = z_lam,
and monomials pair dually with products of complete homogeneous functions.
Pairing the graph series against h_{d_1}...h_{d_n} therefore reads off the
number of well-labelled multigraphs with degree vector d.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from typing import Iterable, Literal, Sequence

from .graph_series import WeightProfile, build_G
from .partitions import canonicalize, weight, z_of
from .series import Basis, ConsistencyError, SymSeries, h_in_p, m_in_p, p_to_m

DegreeMode = Literal["multiset", "assigned"]


def scalar_product(left: SymSeries, right: SymSeries) -> Fraction:
    """Hall pairing of two p-basis series: sum over common support of a*b*z.

    Only sound when both series carry every term of weight up to the smaller
    truncation bound, which holds for everything built in this package.
    """
    if left.basis is not Basis.POWER or right.basis is not Basis.POWER:
        raise ValueError("scalar_product is defined on p-basis series")
    small, large = (
        (left, right) if len(left.support()) <= len(right.support()) else (right, left)
    )
    total = Fraction(0)
    for part, c in small.terms():
        d = large.coefficient(part) if weight(part) <= large.max_degree else 0
        if d:
            total += c * d * z_of(part)
    return total


def h_product(degrees: Sequence[int], max_degree: int) -> SymSeries:
    """h_{d_1} * ... * h_{d_n} in the p basis at the given truncation."""
    factors = [h_in_p(d, max_degree) for d in degrees]
    if not factors:
        return SymSeries(Basis.POWER, {(): 1}, max_degree)
    return reduce(lambda a, b: a * b, factors)


def m_h_duality_check(mono: Iterable[int], hs: Iterable[int]) -> Fraction:
    """<m_lambda, h_mu1 * h_mu2 * ...>; equals 1 iff the index partitions match."""
    lam = canonicalize(mono)
    mu = canonicalize(hs)
    if weight(lam) != weight(mu):
        raise ValueError(
            f"pairing weights differ: {weight(lam)} vs {weight(mu)}"
        )
    bound = weight(lam)
    return scalar_product(m_in_p(lam).truncate(bound), h_product(mu, bound))


def _as_count(value: Fraction, context: str) -> int:
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"{context} produced a non-count value {value}")
    return int(value)


def count_degree_sequence(profile: WeightProfile, degrees: Sequence[int]) -> int:
    """Number of well-labelled multigraphs with this exact degree vector.

    Degrees must be positive; the count is symmetric in their order.
    """
    d = tuple(int(x) for x in degrees)
    if not d or any(x < 1 for x in d):
        raise ValueError("degree sequence must be non-empty with entries >= 1")
    bound = sum(d)
    g = build_G(profile, bound)
    value = scalar_product(g, h_product(d, bound))
    return _as_count(value, f"count_degree_sequence({sorted(d, reverse=True)})")


@dataclass(frozen=True)
class CountTable:
    """Counts indexed by vertex count, 0..n_max; counts[0] = 1 (empty graph)."""

    profile: WeightProfile
    degree_set: frozenset[int]
    degree_mode: DegreeMode
    counts: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        return self.counts[n]


def count_table(
    profile: WeightProfile,
    degree_set: Iterable[int],
    n_max: int,
    degree_mode: DegreeMode = "multiset",
) -> CountTable:
    """Graph counts for n = 0..n_max vertices with degrees drawn from a set K.

    degree_mode picks the aggregation:
      - "multiset": one count per unordered degree profile; the extractor for
        n vertices is the sum of h_{k_1}...h_{k_n} over multisets from K.
      - "assigned": every vertex independently carries a degree constraint
        from K; the extractor is (sum_k h_k)^n.  This is the quantity a
        row-sum-constrained matrix enumeration measures.
    The two agree when |K| = 1.
    """
    ks = sorted({int(k) for k in degree_set})
    if not ks or ks[0] < 1:
        raise ValueError("degree set must be non-empty with entries >= 1")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if degree_mode not in ("multiset", "assigned"):
        raise ValueError(f"unknown degree_mode {degree_mode!r}")
    bound = n_max * ks[-1]
    g = build_G(profile, bound)
    counts: list[int] = []
    if degree_mode == "assigned":
        esum = SymSeries(Basis.POWER, {}, bound)
        for k in ks:
            esum = esum + h_in_p(k, bound)
        extractor = SymSeries(Basis.POWER, {(): 1}, bound)
        for n in range(n_max + 1):
            if n:
                extractor = extractor * esum
            counts.append(
                _as_count(scalar_product(g, extractor), f"count_table[{n}]")
            )
    else:
        power_cache: dict[tuple[int, int], SymSeries] = {}

        def h_power(k: int, c: int) -> SymSeries:
            if (k, c) not in power_cache:
                power_cache[(k, c)] = (
                    h_in_p(k, bound) if c == 1 else h_power(k, c - 1) * h_in_p(k, bound)
                )
            return power_cache[(k, c)]

        for n in range(n_max + 1):
            total = Fraction(0)
            for multiset in combinations_with_replacement(ks, n):
                extractor = SymSeries(Basis.POWER, {(): 1}, bound)
                for k in sorted(set(multiset)):
                    extractor = extractor * h_power(k, multiset.count(k))
                total += scalar_product(g, extractor)
            counts.append(_as_count(total, f"count_table[{n}]"))
    return CountTable(
        profile=profile,
        degree_set=frozenset(ks),
        degree_mode=degree_mode,
        counts=tuple(counts),
    )


def m_expansion_count(profile: WeightProfile, degrees: Sequence[int]) -> Fraction:
    """Coefficient of m_{sorted(degrees)} in the monomial expansion of G.

    Slower than count_degree_sequence; used as an internal cross-check.
    """
    lam = canonicalize(degrees)
    bound = weight(lam)
    return p_to_m(build_G(profile, bound)).coefficient(lam)
