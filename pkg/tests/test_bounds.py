from fractions import Fraction
from math import isqrt, log

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dmcurves.bounds import (
    a2_bounds,
    ahl_bound,
    defect_in_range,
    defect_report,
    defect_upper,
    dm_defect,
    dm_genus_bounds,
    dm_lower_N2,
    dm_upper_N2,
    ihara_bound,
    weil_interval,
    weil_ok,
)
from dmcurves.curves import count_points, enumeration_size, load_corpus
from dmcurves.errors import CaseRequiresSquareQ
from dmcurves.zeta import lpoly_from_counts


@pytest.mark.parametrize("q, g, lo, hi", [(2, 1, 1, 5), (4, 1, 1, 9), (7, 0, 8, 8), (9, 3, -8, 28)])
def test_weil_interval(q, g, lo, hi):
    assert weil_interval(q, g) == (lo, hi)


def test_weil_ok():
    assert weil_ok(4, 1, 9) and not weil_ok(4, 1, 10) and weil_ok(2, 1, 5)


@pytest.mark.parametrize("q, g, D, root, bound", [(2, 1, 25, 5, 5), (4, 3, 441, 21, 14), (8, 14, 15876, 126, 65), (2, 2, 84, None, 6)])
def test_ihara_bound(q, g, D, root, bound):
    assert ihara_bound(q, g) == (D, root, bound)


@pytest.mark.parametrize("args, delta", [((3, 2, 2, 20), 0), ((2, 1, 5, 5), 0), ((5, 2, 6, 6), 80), ((13, 2, 14, 118), 4 * 13 * 4), ((49, 2, 36, 2500), 0)])
def test_dm_defect(args, delta):
    assert dm_defect(*args) == delta


def test_defect_range():
    assert defect_upper(5, 2) == 80 and defect_upper(4, 3) == 4 * 4 * 8
    assert defect_in_range(5, 2, 80)
    assert not defect_in_range(4, 3, 4 * 4 * 9)
    assert defect_in_range(4, 3, 4 * 4 * 9, refined=False)
    assert not defect_in_range(2, 1, -1)


@pytest.mark.parametrize("args, val", [((3, 2, 2), 20), ((49, 2, 36), 2500), ((7, 3, 8), 49 + 1 + 42)])
def test_dm_upper(args, val):
    assert dm_upper_N2(*args) == val


@pytest.mark.parametrize("args, val", [((5, 2, 6), 6), ((13, 2, 14), 118), ((49, 3, 36), 2108)])
def test_dm_lower(args, val):
    assert dm_lower_N2(*args) == val


def test_dm_lower_odd_genus_offset():
    q, g = 49, 3
    offset = dm_lower_N2(q, g, 36) - (q * q + 1) + Fraction((36 - q - 1) ** 2, g)
    assert offset == Fraction(-686, 3)


def test_dm_lower_genus_three_over_f4():
    # the formula itself, evaluated at q=4, g=3, N_1=5
    assert dm_lower_N2(4, 3, 5) == Fraction(-5, 3)
    with pytest.raises(ValueError):
        dm_lower_N2(4, 1, 5)


def test_a2_bounds():
    for q in (2, 3, 7, 16):
        for a1 in (-5, 0, 3):
            assert a2_bounds(q, 2, a1)[1] == Fraction(a1 * a1, 4) + 2 * q
    assert a2_bounds(4, 3, 0)[0] == Fraction(-28, 3)
    assert a2_bounds(7, 2, 0) == (-14, 14)
    with pytest.raises(ValueError):
        a2_bounds(7, 1, 0)


@pytest.mark.parametrize("args, val", [((3, 2, -2), 9), ((9, 3, 18), 4096), ((5, 1, 3), 9)])
def test_ahl_bound(args, val):
    assert ahl_bound(*args) == val


def test_genus_bounds_general():
    rep = dm_genus_bounds(2, 1)
    assert rep.general == 63
    for q in (2, 3, 4, 5, 7, 8, 9, 16, 25, 49):
        g = dm_genus_bounds(q, 0).general
        assert g <= 23 * q * q * log(q) < g + 1.000001


def test_genus_bounds_cases():
    assert dm_genus_bounds(9, 6).cases == {"i": dm_genus_bounds(9, 6, "i").cases["i"], "ii": 3}
    assert dm_genus_bounds(9, -6).cases == {"iii": 2}
    assert dm_genus_bounds(9, -6).best == 2
    # case (i) is strict: g < (sqrt q + 1)^4 (q^2 + 1) / (2 q^2)
    assert dm_genus_bounds(4, 1).cases["i"] == 81 * 17 // 32
    assert dm_genus_bounds(2, 1).cases["i"] == int((2**0.5 + 1) ** 4 * 5 / 8)


def test_genus_bounds_errors():
    with pytest.raises(CaseRequiresSquareQ):
        dm_genus_bounds(8, 2, "ii")
    with pytest.raises(CaseRequiresSquareQ):
        dm_genus_bounds(2, -2, "iii")
    with pytest.raises(ValueError):
        dm_genus_bounds(4, 6)


def test_defect_report_json():
    rep = defect_report(49, 3, 36, 2108, tau=None).to_json()
    assert rep["delta"] == dm_defect(49, 3, 36, 2108)
    assert rep["dm_lower_N2"] == "2108"
    rep = defect_report(4, 3, 5).to_json()
    assert rep["dm_lower_N2"] == "-5/3" and rep["delta"] is None
    assert defect_report(3, 2, 2, 20, tau=-2).to_json()["ahl_rhs"] == "9"


@given(q=st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13, 16]), g=st.integers(1, 8), data=st.data())
def test_defect_zero_iff_upper_attained(q, g, data):
    lo, hi = weil_interval(q, g)
    N1 = data.draw(st.integers(max(lo, 0), hi))
    N2 = data.draw(st.integers(N1, q * q + 1 + 2 * g * q))
    assert (dm_defect(q, g, N1, N2) == 0) == (N2 == dm_upper_N2(q, g, N1))


def _square_ge(g, q):
    # g >= (q - sqrt q)/2 by squared comparison
    t = q - 2 * g
    return t <= 0 or t * t <= q


CORPUS = load_corpus()


def test_ihara_below_weil_on_corpus_grid():
    for e in CORPUS:
        g, q = e.genus, e.field.q
        if _square_ge(g, q):
            assert ihara_bound(q, g)[2] <= weil_interval(q, g)[1]


@pytest.mark.parametrize("entry", [e for e in CORPUS if 1 in e.declared_counts and 2 in e.declared_counts], ids=lambda e: e.name)
def test_corpus_bounds(entry):
    q, g = entry.field.q, entry.genus
    N1, N2 = entry.declared_counts[1], entry.declared_counts[2]
    delta = dm_defect(q, g, N1, N2)
    assert 0 <= delta <= 4 * q * g * g
    assert defect_in_range(q, g, delta)
    if g >= 2:
        assert dm_lower_N2(q, g, N1) <= N2 <= dm_upper_N2(q, g, N1)


@pytest.mark.parametrize(
    "entry",
    [e for e in CORPUS if e.model is not None and e.genus >= 2 and all(enumeration_size(e.model, e.field.q, k) <= 2_000_000 for k in range(1, e.genus + 1))],
    ids=lambda e: e.name,
)
def test_a2_within_bounds(entry):
    counts = [count_points(entry.model, entry.field, k) for k in range(1, entry.genus + 1)]
    L = lpoly_from_counts(entry.field.q, entry.genus, counts)
    lo, hi = a2_bounds(L.q, L.g, L[1])
    assert lo <= L[2] <= hi


def test_weil_interval_integer_sqrt():
    for q in range(2, 200):
        for g in range(0, 6):
            lo, hi = weil_interval(q, g)
            r = hi - q - 1
            assert r == isqrt(4 * g * g * q) and r * r <= 4 * g * g * q < (r + 1) ** 2
