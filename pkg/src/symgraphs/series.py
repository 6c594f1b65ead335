"""Sparse symmetric-function series over exact rationals.

A series is a finite map from partitions to Fractions, tagged with a basis
(power-sum, monomial, complete homogeneous, elementary) and truncated at a
total degree bound.  All ring arithmetic happens in the power-sum basis;
the monomial basis appears only as the target of `p_to_m`.
"""
from __future__ import annotations

import json
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .partitions import (
    Partition,
    canonicalize,
    is_partition,
    partitions_of,
    sort_key,
    weight,
    z_of,
)

Coeff = Union[int, Fraction]


class ConsistencyError(Exception):
    """An internal cross-check failed; the result would not be trustworthy."""


class Basis(Enum):
    POWER = "p"
    MONOMIAL = "m"
    COMPLETE = "h"
    ELEMENTARY = "e"


class SymSeries:
    """Immutable sparse series: {partition: Fraction}, truncated at max_degree.

    Construction drops zero coefficients and terms above the degree bound
    (the bound is truncation, not validation).  Keys must be canonical
    partitions.
    """

    __slots__ = ("basis", "max_degree", "_terms")

    def __init__(
        self,
        basis: Basis,
        terms: Mapping[Partition, Coeff] | Iterable[tuple[Partition, Coeff]],
        max_degree: int,
    ) -> None:
        if not isinstance(basis, Basis):
            basis = Basis(basis)
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Partition, Fraction] = {}
        for part, coeff in items:
            part = tuple(part)
            if not is_partition(part):
                raise ValueError(f"not a canonical partition key: {part!r}")
            if weight(part) > max_degree:
                continue
            c = Fraction(coeff)
            if c:
                clean[part] = clean.get(part, Fraction(0)) + c
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "max_degree", max_degree)
        object.__setattr__(self, "_terms", {p: c for p, c in clean.items() if c})

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("SymSeries is immutable")

    # -- inspection ---------------------------------------------------------

    def coefficient(self, part: Iterable[int]) -> Fraction:
        """Coefficient of the given partition; errors above the degree bound.

        Beyond max_degree a zero is indistinguishable from a dropped term,
        so asking for one is a caller bug.
        """
        key = canonicalize(part)
        if weight(key) > self.max_degree:
            raise ValueError(
                f"weight {weight(key)} exceeds truncation bound {self.max_degree}"
            )
        return self._terms.get(key, Fraction(0))

    def terms(self) -> list[tuple[Partition, Fraction]]:
        """Terms in canonical order: weight ascending, then lex descending."""
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def support(self) -> set[Partition]:
        return set(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymSeries):
            return NotImplemented
        return (
            self.basis is other.basis
            and self.max_degree == other.max_degree
            and self._terms == other._terms
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"SymSeries({self.basis.value!s}, max_degree={self.max_degree}, {self})"

    def __str__(self) -> str:
        return format_series(self)

    # -- ring operations ----------------------------------------------------

    def _check_basis(self, other: SymSeries) -> None:
        if self.basis is not other.basis:
            raise ValueError(
                f"basis mismatch: {self.basis.value} vs {other.basis.value}"
            )

    def __add__(self, other: SymSeries) -> SymSeries:
        if not isinstance(other, SymSeries):
            return NotImplemented
        self._check_basis(other)
        bound = min(self.max_degree, other.max_degree)
        out = dict(self._terms)
        for part, c in other._terms.items():
            out[part] = out.get(part, Fraction(0)) + c
        return SymSeries(self.basis, out, bound)

    def __neg__(self) -> SymSeries:
        return SymSeries(
            self.basis, {p: -c for p, c in self._terms.items()}, self.max_degree
        )

    def __sub__(self, other: SymSeries) -> SymSeries:
        if not isinstance(other, SymSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Coeff) -> SymSeries:
        f = Fraction(factor)
        return SymSeries(
            self.basis, {p: c * f for p, c in self._terms.items()}, self.max_degree
        )

    def __mul__(self, other: SymSeries | Coeff) -> SymSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SymSeries):
            return NotImplemented
        self._check_basis(other)
        if self.basis is not Basis.POWER:
            raise ValueError("series multiplication is defined in the p basis only")
        bound = min(self.max_degree, other.max_degree)
        out: dict[Partition, Fraction] = {}
        for pa, ca in self._terms.items():
            wa = weight(pa)
            if wa > bound:
                continue
            for pb, cb in other._terms.items():
                if wa + weight(pb) > bound:
                    continue
                key = tuple(sorted(pa + pb, reverse=True))
                c = out.get(key, Fraction(0)) + ca * cb
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
        return SymSeries(Basis.POWER, out, bound)

    def __rmul__(self, other: Coeff) -> SymSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def truncate(self, max_degree: int) -> SymSeries:
        # raising the bound would assert exact zeros this series never computed
        if max_degree > self.max_degree:
            raise ValueError("truncate cannot raise max_degree")
        return SymSeries(self.basis, self._terms, max_degree)

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "basis": self.basis.value,
            "max_degree": self.max_degree,
            "terms": [
                {
                    "partition": list(part),
                    "num": str(c.numerator),
                    "den": str(c.denominator),
                }
                for part, c in self.terms()
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_json_dict(), **kwargs)

    @classmethod
    def from_json_dict(cls, data: Mapping) -> SymSeries:
        try:
            basis = Basis(data["basis"])
            bound = int(data["max_degree"])
            raw = data["terms"]
        except (KeyError, ValueError, TypeError) as exc:
            raise ValueError(f"malformed series object: {exc}") from exc
        terms: dict[Partition, Fraction] = {}
        for entry in raw:
            part = tuple(int(p) for p in entry["partition"])
            if not is_partition(part):
                raise ValueError(f"non-canonical partition in series: {part!r}")
            if weight(part) > bound:
                raise ValueError(
                    f"term {part!r} exceeds declared max_degree {bound}"
                )
            if part in terms:
                raise ValueError(f"duplicate partition in series: {part!r}")
            terms[part] = Fraction(int(entry["num"]), int(entry["den"]))
        return cls(basis, terms, bound)

    @classmethod
    def from_json(cls, text: str) -> SymSeries:
        return cls.from_json_dict(json.loads(text))


def zero(basis: Basis, max_degree: int) -> SymSeries:
    return SymSeries(basis, {}, max_degree)


def one(basis: Basis, max_degree: int) -> SymSeries:
    return SymSeries(basis, {(): 1}, max_degree)


def format_series(series: SymSeries) -> str:
    """Render as 'm[2,2] + 3 m[2,2,2,2]' in canonical order; '0' if empty."""
    pieces: list[str] = []
    for part, c in series.terms():
        mono = (
            "1" if not part else f"{series.basis.value}[{','.join(map(str, part))}]"
        )
        if not part:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(mono)
        elif c == -1:
            pieces.append(f"-{mono}")
        else:
            pieces.append(f"{c} {mono}")
    return " + ".join(pieces) if pieces else "0"


def exp_series(series: SymSeries, max_degree: int | None = None) -> SymSeries:
    """exp of a p-basis series with zero constant term.

    Graded accumulation: term_j = term_{j-1} * s / j until the product
    vanishes under truncation.  Every monomial of s has weight >= 1, so
    term_j has valuation >= j and the loop terminates.
    """
    if series.basis is not Basis.POWER:
        raise ValueError("exp_series requires the p basis")
    bound = series.max_degree if max_degree is None else max_degree
    # an explicit override treats the input as an exact polynomial and may
    # carry the exponential past the input's own bound
    s = SymSeries(Basis.POWER, dict(series._terms), bound)
    if s.coefficient(()) != 0:
        raise ValueError("exp_series requires a zero constant term")
    result = one(Basis.POWER, bound)
    term = one(Basis.POWER, bound)
    j = 1
    while True:
        term = (term * s).scale(Fraction(1, j))
        if term.is_zero:
            break
        result = result + term
        j += 1
    return result


def h_in_p(n: int, max_degree: int | None = None) -> SymSeries:
    """Complete homogeneous h_n in the p basis: sum over lambda |- n of p_lambda / z_lambda."""
    if n < 0:
        raise ValueError("n must be >= 0")
    bound = n if max_degree is None else max_degree
    return SymSeries(
        Basis.POWER, {part: Fraction(1, z_of(part)) for part in partitions_of(n)}, bound
    )


def e_in_p(n: int, max_degree: int | None = None) -> SymSeries:
    """Elementary e_n in the p basis: sign epsilon_lambda = (-1)^(weight - parts)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    bound = n if max_degree is None else max_degree
    terms = {
        part: Fraction((-1) ** (n - len(part)), z_of(part))
        for part in partitions_of(n)
    }
    return SymSeries(Basis.POWER, terms, bound)


# -- power-sum -> monomial conversion ----------------------------------------
#
# A degree-w symmetric function is determined by its values in w variables,
# so each homogeneous slice is expanded literally: p_k = x_1^k + ... + x_w^k,
# products as dicts {exponent tuple: int}, then monomials are bucketed by
# sorted exponent vector.  Every monomial in a bucket must carry the same
# coefficient; that redundancy is checked, not assumed.


@lru_cache(maxsize=None)
def _power_sum_monomials(part: Partition, nvars: int) -> dict[tuple[int, ...], int]:
    """Expansion of p_part in nvars variables.  Callers must not mutate."""
    if not part:
        return {(0,) * nvars: 1}
    prev = _power_sum_monomials(part[:-1], nvars)
    k = part[-1]
    out: dict[tuple[int, ...], int] = {}
    for exps, c in prev.items():
        for i in range(nvars):
            key = exps[:i] + (exps[i] + k,) + exps[i + 1 :]
            out[key] = out.get(key, 0) + c
    return out


@lru_cache(maxsize=None)
def _p_in_m(part: Partition) -> dict[Partition, int]:
    """Single p_part written in the monomial basis (integer coefficients)."""
    w = weight(part)
    if w == 0:
        return {(): 1}
    buckets: dict[Partition, int] = {}
    for exps, c in _power_sum_monomials(part, w).items():
        key = tuple(sorted((e for e in exps if e), reverse=True))
        if key in buckets:
            if buckets[key] != c:
                raise ConsistencyError(
                    f"monomial orbit of {key} has unequal coefficients "
                    f"({buckets[key]} vs {c}) expanding p_{part}"
                )
        else:
            buckets[key] = c
    return buckets


def p_to_m(series: SymSeries) -> SymSeries:
    """Rewrite a p-basis series in the monomial basis (same truncation)."""
    if series.basis is not Basis.POWER:
        raise ValueError("p_to_m expects a p-basis series")
    out: dict[Partition, Fraction] = {}
    for part, c in series.terms():
        for mono, k in _p_in_m(part).items():
            cur = out.get(mono, Fraction(0)) + c * k
            if cur:
                out[mono] = cur
            else:
                out.pop(mono, None)
    return SymSeries(Basis.MONOMIAL, out, series.max_degree)


@lru_cache(maxsize=None)
def m_in_p(part: Partition) -> SymSeries:
    """Single monomial m_part written in the p basis (exact, by inversion).

    Inverts the weight-w transition matrix p_mu = sum_lambda A[mu][lambda] m_lambda
    by Gaussian elimination over Fraction.
    """
    if not is_partition(part):
        raise ValueError(f"not a partition: {part!r}")
    w = weight(part)
    basis_list = list(partitions_of(w))
    index = {lam: i for i, lam in enumerate(basis_list)}
    size = len(basis_list)
    # Solve A x = e_part where column j of A is p_{mu_j} in m coordinates.
    a = [[Fraction(0)] * size for _ in range(size)]
    for j, mu in enumerate(basis_list):
        for lam, c in _p_in_m(mu).items():
            a[index[lam]][j] = Fraction(c)
    rhs = [Fraction(0)] * size
    rhs[index[part]] = Fraction(1)
    for col in range(size):
        pivot = next(
            (r for r in range(col, size) if a[r][col] != 0),
            None,
        )
        if pivot is None:
            raise ConsistencyError("singular p-to-m transition matrix")
        a[col], a[pivot] = a[pivot], a[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        rhs[col] *= inv
        for r in range(size):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [vr - f * vc for vr, vc in zip(a[r], a[col])]
                rhs[r] -= f * rhs[col]
    coeffs = {mu: rhs[j] for j, mu in enumerate(basis_list) if rhs[j]}
    return SymSeries(Basis.POWER, coeffs, w)
