"""Plethysm on the power-sum basis.

The whole operation rests on one rule: p_n[w] substitutes p_k -> p_{kn}
throughout w, and plethysm by a fixed inner series is a ring map in the
outer argument.  So f[w] for f = sum c_lambda p_lambda is
sum c_lambda * prod_i (w with indices scaled by lambda_i).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, weight
from .series import Basis, SymSeries, one, zero


def e2_inner(max_degree: int = 2) -> SymSeries:
    """e_2 = sum over i<j of x_i x_j, in the p basis: (p_1^2 - p_2)/2."""
    return SymSeries(
        Basis.POWER, {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)}, max_degree
    )


def h2_inner(max_degree: int = 2) -> SymSeries:
    """h_2 = sum over i<=j of x_i x_j, in the p basis: (p_1^2 + p_2)/2."""
    return SymSeries(
        Basis.POWER, {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}, max_degree
    )


def _scaled(inner: SymSeries, n: int, bound: int) -> SymSeries:
    """p_k -> p_{kn} applied to every term of inner (scaling keeps parts sorted)."""
    out = {
        tuple(p * n for p in part): c
        for part, c in inner.terms()
        if weight(part) * n <= bound
    }
    return SymSeries(Basis.POWER, out, bound)


def pleth_p(
    outer: SymSeries, inner: SymSeries, max_degree: int | None = None
) -> SymSeries:
    """outer[inner] for p-basis series; inner must have no constant term.

    A nonzero constant term would make each substituted factor an infinite
    series and the truncation unsound, so it is rejected.  The result is
    truncated at max_degree (default: the outer bound).
    """
    if outer.basis is not Basis.POWER or inner.basis is not Basis.POWER:
        raise ValueError("pleth_p operates on p-basis series")
    if inner.coefficient(()) != 0:
        raise ValueError("inner series must have zero constant term")
    bound = outer.max_degree if max_degree is None else max_degree
    if not inner.is_zero:
        val = min(weight(p) for p in inner.support())
    else:
        val = 1

    @lru_cache(maxsize=None)
    def scaled(n: int) -> SymSeries:
        return _scaled(inner, n, bound)

    result = zero(Basis.POWER, bound)
    for part, c in outer.terms():
        # Each factor contributes at least val to the weight.
        if weight(part) * val > bound:
            continue
        factor = one(Basis.POWER, bound)
        for n in part:
            factor = factor * scaled(n)
            if factor.is_zero:
                break
        if not factor.is_zero:
            result = result + factor.scale(c)
    return result
