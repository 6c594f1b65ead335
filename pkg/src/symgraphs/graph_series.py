"""Generating series for multigraphs with constrained edge multiplicities.

F is the exponential-form series whose monomial expansion lists, per degree
vector, the assemblies of "edges" with multiplicities drawn from a fixed set
J.  Substituting the degree-2 kernel (e_2 without loops, h_2 with weighted
loops) turns vertex-weight bookkeeping into graph bookkeeping: G's monomial
coefficients count well-labelled multigraphs by degree vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .partitions import compositions_with_parts_in
from .plethysm import e2_inner, h2_inner, pleth_p
from .series import Basis, SymSeries, exp_series


@dataclass(frozen=True)
class WeightProfile:
    """Edge-multiplicity alphabet plus the loop convention."""

    edge_weights: frozenset[int]
    loops: bool = False

    def __post_init__(self) -> None:
        weights = frozenset(int(w) for w in self.edge_weights)
        if not weights:
            raise ValueError("edge_weights must be non-empty")
        if any(w < 1 for w in weights):
            raise ValueError("edge multiplicities must be >= 1")
        object.__setattr__(self, "edge_weights", weights)


def a_coeffs_compositions(edge_weights: Iterable[int], n_max: int) -> list[Fraction]:
    """Exponent coefficients [a_1, ..., a_n_max] via the signed composition sum.

    a_n = sum over compositions of n with parts in the alphabet of
    (-1)^(length+1) / length.
    """
    weights = _validated_weights(edge_weights)
    out = []
    for n in range(1, n_max + 1):
        total = Fraction(0)
        for comp in compositions_with_parts_in(n, weights):
            length = len(comp)
            total += Fraction((-1) ** (length + 1), length)
        out.append(total)
    return out


def a_coeffs_log(edge_weights: Iterable[int], n_max: int) -> list[Fraction]:
    """Same coefficients [a_1, ..., a_n_max] read off log(1 + sum_s t^s)."""
    weights = {w for w in _validated_weights(edge_weights) if w <= n_max}
    u = [Fraction(0)] * (n_max + 1)
    for w in weights:
        u[w] = Fraction(1)
    out = [Fraction(0)] * (n_max + 1)
    power = list(u)
    j = 1
    while any(power[1:]):
        sign = Fraction((-1) ** (j + 1), j)
        for n in range(1, n_max + 1):
            out[n] += sign * power[n]
        # power <- power * u, truncated
        nxt = [Fraction(0)] * (n_max + 1)
        for i in range(1, n_max + 1):
            if power[i]:
                for w in weights:
                    if i + w <= n_max:
                        nxt[i + w] += power[i]
        power = nxt
        j += 1
    return out[1:]


def _validated_weights(edge_weights: Iterable[int]) -> set[int]:
    weights = {int(w) for w in edge_weights}
    if not weights:
        raise ValueError("edge-weight set must be non-empty")
    if any(w < 1 for w in weights):
        raise ValueError("edge weights must be >= 1")
    return weights


def _exponent_coeffs(edge_weights: Iterable[int], n_max: int) -> dict[int, Fraction]:
    """{n: a_n} with zeros dropped, for building exponents."""
    return {
        n: c
        for n, c in enumerate(a_coeffs_compositions(edge_weights, n_max), start=1)
        if c
    }


def build_F(edge_weights: Iterable[int], max_degree: int) -> SymSeries:
    """exp(sum_n a_n p_n), truncated: the edge-assembly series in the p basis."""
    coeffs = _exponent_coeffs(edge_weights, max_degree)
    exponent = SymSeries(
        Basis.POWER, {(n,): c for n, c in coeffs.items()}, max_degree
    )
    return exp_series(exponent)


def build_G(profile: WeightProfile, max_degree: int) -> SymSeries:
    """Graph series in closed exponential form.

    Substituting the degree-2 kernel into exp(sum a_n p_n) sends each p_n to
    (p_n^2 -+ p_{2n})/2, so the exponent becomes
    sum_n (a_n/2) * (p_{(n,n)} -+ p_{(2n)}), minus for loop-free.
    """
    sign = 1 if profile.loops else -1
    terms: dict[tuple[int, ...], Fraction] = {}
    for n, c in _exponent_coeffs(profile.edge_weights, max_degree // 2).items():
        half = c / 2
        terms[(n, n)] = half
        terms[(2 * n,)] = sign * half
    exponent = SymSeries(Basis.POWER, terms, max_degree)
    return exp_series(exponent)


def build_G_plethysm(profile: WeightProfile, max_degree: int) -> SymSeries:
    """Same series by direct substitution into F; cross-check for build_G."""
    inner = h2_inner() if profile.loops else e2_inner()
    outer = build_F(profile.edge_weights, max_degree // 2)
    return pleth_p(outer, inner, max_degree=max_degree)
