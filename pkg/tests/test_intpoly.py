import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from dmcurves.errors import FunctionalEquationViolated, NonIntegralCoefficient, NonMonic, OddDegree
from dmcurves.intpoly import (
    IntPoly,
    RatPoly,
    count_real_roots,
    count_roots_between,
    counts_to_power_sums,
    divides,
    functional_equation_check,
    is_perfect_square,
    is_q_weil,
    lpoly_to_counts,
    parse_poly,
    power_sums_to_lpoly,
    real_weil_expand,
    real_weil_transform,
    squarefree_part,
)

T = sympy.Symbol("T")


def P(*c):
    return IntPoly(c)


def test_arith_basics():
    a, b = P(1, 2), P(1, 1, 2)
    assert a * b == P(1, 3, 4, 4)
    assert (a + b) - b == a
    assert P(1, 1) ** 3 == P(1, 3, 3, 1)
    assert P(0, 0).is_zero() and P(0, 0).degree == -1
    assert P(3, 0, 1)(2) == 7


@pytest.mark.parametrize(
    "q, counts, sums",
    [(2, (5, 5), [-2, 0]), (3, (2, 20), [2, -10]), (5, (6, 6), [0, 20]), (4, (14, 14, 38), [-9, 3, 27])],
)
def test_counts_to_power_sums(q, counts, sums):
    assert counts_to_power_sums(q, counts) == sums


def test_counts_to_power_sums_errors():
    with pytest.raises(ValueError):
        counts_to_power_sums(2, [])
    with pytest.raises(ValueError):
        counts_to_power_sums(1, [1])


@pytest.mark.parametrize(
    "q, g, sums, expected",
    [
        (2, 1, [-2], P(1, 2, 2)),
        (4, 3, [-9, 3, 27], P(1, 3, 4) ** 3),
        (3, 2, [2, -10], P(1, -1, 3) ** 2),
    ],
)
def test_power_sums_to_lpoly(q, g, sums, expected):
    assert power_sums_to_lpoly(q, g, sums) == expected


def test_alternate_sign_power_sums_do_not_reproduce():
    # the alternative sign pattern (-9,-3,-27) does not come from (14,14,38)
    assert counts_to_power_sums(4, [14, 14, 38]) != [-9, -3, -27]
    assert power_sums_to_lpoly(4, 3, [-9, -3, -27]) != P(1, 3, 4) ** 3


def test_power_sums_non_integral():
    with pytest.raises(NonIntegralCoefficient):
        power_sums_to_lpoly(3, 2, [1, 0])
    with pytest.raises(ValueError):
        power_sums_to_lpoly(3, 2, [1])


@pytest.mark.parametrize(
    "L, q, k, n",
    [(P(1, 3, 4) ** 3, 4, 3, 38), (P(1, 2, 2), 2, 2, 5), (P(1, -7, 49) ** 2, 49, 2, 2500), (P(1, -7, 49) ** 2, 49, 1, 36)],
)
def test_lpoly_to_counts(L, q, k, n):
    assert lpoly_to_counts(L, q, k) == n


def test_lpoly_to_counts_requires_symmetry():
    with pytest.raises(FunctionalEquationViolated):
        lpoly_to_counts(P(1, 2, 3), 2, 1)


@pytest.mark.parametrize(
    "L, q, ok",
    [(P(1, 2, 2), 2, True), (P(1, 3, 4) ** 3, 4, True), (P(1, 2, 3), 2, False), (P(1, 2), 2, False), (P(2, 0, 2), 1, False)],
)
def test_functional_equation(L, q, ok):
    assert functional_equation_check(L, q) is ok


def test_real_weil_transform_examples():
    assert real_weil_transform(P(2, 2, 1), 2) == P(2, 1)
    assert real_weil_transform(P(49, -7, 1) ** 2, 49) == P(-7, 1) ** 2
    with pytest.raises(FunctionalEquationViolated):
        real_weil_transform(P(3, 2, 1), 2)


@given(a=st.integers(-40, 40), q=st.integers(2, 400))
def test_real_weil_transform_square_identity(a, q):
    assert real_weil_transform(P(q, a, 1) ** 2, q) == P(a, 1) ** 2


def _random_symmetric(rng, q, g, span=30):
    # monic characteristic form: f_i = q^(g-i) f_(2g-i)
    top = [rng.randint(-span, span) for _ in range(g)] + [1]
    c = [0] * (2 * g + 1)
    for j in range(g + 1):
        c[g + j] = top[j]
        c[g - j] = q**j * top[j]
    return IntPoly(c)


def test_real_weil_round_trip():
    rng = random.Random(7)
    for _ in range(100):
        q, g = rng.choice([2, 3, 4, 5, 7, 8, 9, 11, 16, 25]), rng.randint(1, 5)
        f = _random_symmetric(rng, q, g)
        h = real_weil_transform(f, q)
        assert h.degree == g and h.lead() == 1
        assert real_weil_expand(h, q) == f


@pytest.mark.parametrize(
    "f, q, ok",
    [
        (P(7, 5, 1) ** 2, 7, True),
        (P(7, 6, 1) ** 2, 7, False),
        (P(2, 2, 1), 2, True),
        (P(9, 6, 1), 9, True),  # double root at -3
        (P(4, 4, 1) * P(4, 0, 1), 4, True),
        (P(1, 0, 1), 4, False),
    ],
)
def test_is_q_weil_examples(f, q, ok):
    assert is_q_weil(f, q)[0] is ok


def test_is_q_weil_errors():
    with pytest.raises(OddDegree):
        is_q_weil(P(1, 1), 2)
    with pytest.raises(NonMonic):
        is_q_weil(P(2, 0, 2), 2)


def test_is_q_weil_certificate():
    ok, cert = is_q_weil(P(7, 5, 1) ** 2, 7)
    assert ok and cert["functional_equation"] and cert["h_real_roots"] == cert["h_squarefree_degree"] == 1


@pytest.mark.parametrize("seed", range(5))
def test_weil_products_are_weil_and_symmetric(seed):
    rng = random.Random(seed)
    q = rng.choice([2, 3, 4, 5, 7, 9, 13])
    bmax = int(2 * q**0.5)
    f = IntPoly([1])
    for _ in range(rng.randint(1, 4)):
        f = f * P(q, rng.randint(-bmax, bmax), 1)
    assert is_q_weil(f, q)[0]
    L = f.reversed()
    assert functional_equation_check(L, q)


@pytest.mark.parametrize(
    "coeffs",
    [(-2, 0, 1), (1, 0, 1), (0, -1, 0, 1), (6, -5, 1), (1, -3, 3, -1), (-1, 0, 0, 0, 1), (3, 1, -4, 0, 1)],
)
def test_sturm_matches_sympy(coeffs):
    p = IntPoly(coeffs)
    sp = sympy.Poly(list(reversed(coeffs)), T)
    distinct = len(set(sympy.real_roots(sp)))
    assert count_real_roots(squarefree_part(p)) == distinct
    assert count_roots_between(squarefree_part(p), Fraction(-1, 2), 2) == len({r for r in sympy.real_roots(sp) if Fraction(-1, 2) < r <= 2})


def test_squarefree_part():
    assert squarefree_part(P(1, 2, 1)).degree == 1
    assert squarefree_part(P(1, -1) ** 3 * P(2, 0, 1)).degree == 3
    assert isinstance(squarefree_part(P(1, 1)), RatPoly)


def test_divides():
    a, b = P(1, 2, 2), P(1, 1, 2)
    assert divides(a, a * b)
    assert not divides(a, b)
    assert divides(a, a)
    assert not divides(P(2, 1), P(1, 1))
    assert divides(P(2), P(4, 6))
    assert not divides(P(2), P(1, 2))


@pytest.mark.parametrize("m, r", [(441, 21), (15876, 126), (17, None), (0, 0), (-4, None)])
def test_is_perfect_square(m, r):
    assert is_perfect_square(m) == r


def test_parse_and_json():
    f = parse_poly("49, -7,1")
    assert f == P(49, -7, 1)
    assert IntPoly.from_json(f.to_json()) == f
    assert f.to_json() == ["49", "-7", "1"]


def _newton_case(rng):
    q = rng.choice([2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49])
    g = rng.randint(1, 6)
    bmax = int(2 * q**0.5)
    L = IntPoly([1])
    for _ in range(g):
        L = L * P(1, -rng.randint(-bmax, bmax), q)
    return q, g, L


def test_newton_round_trip_sample():
    rng = random.Random(2024)
    for _ in range(50):
        q, g, L = _newton_case(rng)
        counts = [lpoly_to_counts(L, q, k) for k in range(1, g + 1)]
        assert power_sums_to_lpoly(q, g, counts_to_power_sums(q, counts)) == L
