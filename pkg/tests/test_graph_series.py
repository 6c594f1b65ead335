"""Edge-alphabet exponent coefficients and the graph-class series F and G.

The reference check here is independent of both the algebra and the matrix
oracle: expand the literal product over vertex pairs
prod_{i<j} (1 + sum_{s in J} (x_i x_j)^s), with an optional diagonal factor
prod_i (1 + sum_{s in J} x_i^{2s}) for weighted loops, and compare monomial
coefficients against the m-basis expansion of build_G.
"""

from fractions import Fraction
from itertools import combinations

import pytest

from symgraphs.graph_series import (
    WeightProfile,
    a_coeffs_compositions,
    a_coeffs_log,
    build_F,
    build_G,
    build_G_plethysm,
)
from symgraphs.partitions import partitions_of
from symgraphs.series import Basis, e_in_p, h_in_p, p_to_m, zero


# --- exponent coefficients a_n -------------------------------------------------


@pytest.mark.parametrize("route", [a_coeffs_compositions, a_coeffs_log])
def test_a_coeffs_golden_two_three(route):
    assert route({2, 3}, 6) == [
        Fraction(0),
        Fraction(1),
        Fraction(1),
        Fraction(-1, 2),
        Fraction(-1),
        Fraction(-1, 6),
    ]


@pytest.mark.parametrize("route", [a_coeffs_compositions, a_coeffs_log])
def test_a_coeffs_single_weight_is_alternating_harmonic(route):
    # 1 + t has log with coefficients (-1)^(n+1)/n
    assert route({1}, 5) == [
        Fraction(1),
        Fraction(-1, 2),
        Fraction(1, 3),
        Fraction(-1, 4),
        Fraction(1, 5),
    ]


@pytest.mark.parametrize("route", [a_coeffs_compositions, a_coeffs_log])
def test_a_coeffs_all_weights_give_harmonic(route):
    # 1 + t + t^2 + ... = 1/(1-t), whose log has coefficients 1/n
    n_max = 12
    assert route(set(range(1, n_max + 1)), n_max) == [
        Fraction(1, n) for n in range(1, n_max + 1)
    ]


def test_a_coeffs_vanish_below_min_weight():
    for n_min in (2, 3, 5):
        coeffs = a_coeffs_compositions({n_min, n_min + 1}, 12)
        assert all(c == 0 for c in coeffs[: n_min - 1])
        assert coeffs[n_min - 1] == 1


def test_a_coeff_routes_agree_on_small_alphabets():
    for weights in [{1}, {2}, {1, 3}, {2, 3}, {1, 2, 3}, {4}]:
        assert a_coeffs_compositions(weights, 10) == a_coeffs_log(weights, 10)


@pytest.mark.parametrize("route", [a_coeffs_compositions, a_coeffs_log])
def test_a_coeffs_reject_bad_input(route):
    with pytest.raises(ValueError):
        route(set(), 4)
    with pytest.raises(ValueError):
        route({0, 1}, 4)


# --- WeightProfile ---------------------------------------------------------------


def test_profile_normalizes_weights():
    profile = WeightProfile(frozenset({3, 2}))
    assert profile.edge_weights == frozenset({2, 3})
    assert profile.loops is False


def test_profile_rejects_bad_weights():
    with pytest.raises(ValueError):
        WeightProfile(frozenset())
    with pytest.raises(ValueError):
        WeightProfile(frozenset({0, 2}))


# --- F ---------------------------------------------------------------------------


def test_F_of_weight_one_is_elementary_sum():
    bound = 7
    expected = zero(Basis.POWER, bound)
    for n in range(bound + 1):
        expected = expected + e_in_p(n, bound)
    assert dict(build_F({1}, bound).terms()) == dict(expected.terms())


def test_F_of_all_weights_is_complete_sum():
    bound = 6
    expected = zero(Basis.POWER, bound)
    for n in range(bound + 1):
        expected = expected + h_in_p(n, bound)
    assert dict(build_F(set(range(1, bound + 1)), bound).terms()) == dict(
        expected.terms()
    )


@pytest.mark.parametrize("weights", [{2, 3}, {1, 2}, {3}])
def test_F_is_indicator_of_part_restricted_partitions(weights):
    bound = 7
    expanded = p_to_m(build_F(weights, bound))
    for n in range(bound + 1):
        for lam in partitions_of(n):
            expected = 1 if all(part in weights for part in lam) else 0
            assert expanded.coefficient(lam) == expected, lam


def test_F_degree_six_slice_golden():
    expanded = p_to_m(build_F({2, 3}, 6))
    degree_six = {
        part: c for part, c in expanded.terms() if sum(part) == 6
    }
    assert degree_six == {(3, 3): Fraction(1), (2, 2, 2): Fraction(1)}


# --- G, against the literal product over vertex pairs ------------------------------


def product_expansion(weights, nvars, bound, loops=False):
    """Coefficient dict of prod_{i<j} (1 + sum_s (x_i x_j)^s), degree <= bound."""
    poly = {(0,) * nvars: 1}
    factors = []
    for i, j in combinations(range(nvars), 2):
        options = []
        for s in weights:
            exponents = [0] * nvars
            exponents[i] = s
            exponents[j] = s
            options.append(tuple(exponents))
        factors.append(options)
    if loops:
        for i in range(nvars):
            options = []
            for s in weights:
                exponents = [0] * nvars
                exponents[i] = 2 * s
                options.append(tuple(exponents))
            factors.append(options)
    for options in factors:
        updated = dict(poly)
        for mono, c in poly.items():
            for added in options:
                merged = tuple(a + b for a, b in zip(mono, added))
                if sum(merged) <= bound:
                    updated[merged] = updated.get(merged, 0) + c
        poly = updated
    return poly


def monomial_coefficient(poly, lam, nvars):
    key = tuple(lam) + (0,) * (nvars - len(lam))
    return poly.get(key, 0)


@pytest.mark.parametrize(
    "weights, bound",
    [({1, 2}, 8), ({2, 3}, 8), ({1}, 6)],
)
def test_G_matches_product_expansion(weights, bound):
    poly = product_expansion(weights, bound, bound)
    expanded = p_to_m(build_G(WeightProfile(frozenset(weights)), bound))
    for n in range(bound + 1):
        for lam in partitions_of(n):
            assert expanded.coefficient(lam) == monomial_coefficient(
                poly, lam, bound
            ), lam


@pytest.mark.parametrize("weights, bound", [({1}, 6), ({2}, 8), ({1, 2}, 6)])
def test_G_with_loops_matches_product_expansion(weights, bound):
    poly = product_expansion(weights, bound, bound, loops=True)
    profile = WeightProfile(frozenset(weights), loops=True)
    expanded = p_to_m(build_G(profile, bound))
    for n in range(bound + 1):
        for lam in partitions_of(n):
            assert expanded.coefficient(lam) == monomial_coefficient(
                poly, lam, bound
            ), lam


def test_G_weight_one_loops_degree_two_golden():
    profile = WeightProfile(frozenset({1}), loops=True)
    expanded = p_to_m(build_G(profile, 2))
    assert dict(expanded.terms()) == {
        (): Fraction(1),
        (2,): Fraction(1),
        (1, 1): Fraction(1),
    }


def test_G_has_only_even_total_degrees():
    series = build_G(WeightProfile(frozenset({2, 3})), 9)
    assert all(sum(part) % 2 == 0 for part, _ in series.terms())


def test_G_m_coefficients_are_nonnegative_integers():
    for loops in (False, True):
        profile = WeightProfile(frozenset({1, 3}), loops=loops)
        expanded = p_to_m(build_G(profile, 8))
        for part, c in expanded.terms():
            assert c.denominator == 1 and c >= 0, (part, c)


def test_G_constant_term_is_one():
    series = build_G(WeightProfile(frozenset({2})), 6)
    assert series.coefficient(()) == 1


@pytest.mark.parametrize("weights", [{1}, {2}, {2, 3}, {1, 2, 3}])
@pytest.mark.parametrize("loops", [False, True])
def test_exp_form_equals_plethysm_form(weights, loops):
    profile = WeightProfile(frozenset(weights), loops=loops)
    via_exp = build_G(profile, 8)
    via_pleth = build_G_plethysm(profile, 8)
    assert dict(via_exp.terms()) == dict(via_pleth.terms())


def test_build_G_rejects_bad_truncation():
    with pytest.raises(ValueError):
        build_G(WeightProfile(frozenset({2})), -1)
