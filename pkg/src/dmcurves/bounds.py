"""Point-count bounds and the DM-defect, in exact integer/rational arithmetic.

Anything involving sqrt(q) is decided by squaring; floating point only ever
appears inside certified interval enclosures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import mpmath

from .errors import CaseRequiresSquareQ
from .intpoly import is_perfect_square
from .zeta import frac_str


def weil_interval(q: int, g: int) -> tuple[int, int]:
    r = isqrt(4 * g * g * q)
    return q + 1 - r, q + 1 + r


def weil_ok(q: int, g: int, N: int) -> bool:
    """(N - q - 1)^2 <= 4 g^2 q, the exact form of the Weil bound."""
    return (N - q - 1) ** 2 <= 4 * g * g * q


def ihara_bound(q: int, g: int) -> tuple[int, int | None, int]:
    """(D, sqrt(D) if integral, floor of q + 1 + (sqrt(D) - g)/2)."""
    D = (8 * q + 1) * g * g + 4 * q * g * (q - 1)
    return D, is_perfect_square(D), q + 1 + (isqrt(D) - g) // 2


def dm_defect(q: int, g: int, N1: int, N2: int) -> int:
    return 2 * q * g * g - (N1 - q - 1) ** 2 - g * (N2 - q * q - 1)


def defect_upper(q: int, g: int) -> int:
    """Largest defect compatible with genus g (parity-refined)."""
    return 4 * q * (g * g - 1) if g % 2 else 4 * q * g * g


def defect_in_range(q: int, g: int, delta: int, refined: bool = True) -> bool:
    hi = defect_upper(q, g) if refined else 4 * q * g * g
    return 0 <= delta <= hi


def dm_upper_N2(q: int, g: int, N1: int) -> Fraction:
    return q * q + 1 + 2 * g * q - Fraction((N1 - q - 1) ** 2, g)


def dm_lower_N2(q: int, g: int, N1: int) -> Fraction:
    if g < 2:
        raise ValueError("parity lower bound needs g >= 2")
    sq = Fraction((N1 - q - 1) ** 2, g)
    if g % 2 == 0:
        return q * q + 1 - 2 * q * g - sq
    return q * q + 1 - 2 * q * (g - Fraction(2, g)) - sq


def a2_bounds(q: int, g: int, a1: int) -> tuple[Fraction, Fraction]:
    if g < 2:
        raise ValueError("a_2 bounds need g >= 2")
    base = Fraction((g - 1) * a1 * a1, 2 * g)
    upper = base + g * q
    lower = base - g * q if g % 2 == 0 else base + Fraction((2 - g * g) * q, g)
    return lower, upper


def ahl_bound(q: int, g: int, tau: int) -> Fraction:
    return (q + 1 + Fraction(tau, g)) ** g


# ------------------------------------------------------- genus of DM curves


@dataclass
class GenusBoundReport:
    q: int
    two_alpha: int
    general: int
    cases: dict[str, int] = field(default_factory=dict)

    @property
    def best(self) -> int:
        return min([self.general, *self.cases.values()])

    def to_json(self) -> dict:
        return {"q": self.q, "two_alpha": self.two_alpha, "general": self.general, "cases": self.cases, "best": self.best}


def _general_genus_bound(q: int) -> int:
    with mpmath.workprec(80):
        val = mpmath.iv.mpf(23 * q * q) * mpmath.iv.log(q)
        return int(mpmath.floor(val.b))


def _sqrt_enclosure(q: int, digits: int = 13) -> tuple[Fraction, Fraction]:
    s = 10**digits
    r = isqrt(q * s * s)
    if r * r == q * s * s:
        return Fraction(r, s), Fraction(r, s)
    return Fraction(r, s), Fraction(r + 1, s)


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def dm_genus_bounds(q: int, two_alpha: int, case: str | None = None) -> GenusBoundReport:
    """Genus bounds for a DM curve with L = (1 + two_alpha*T + q*T^2)^g.

    ``case`` forces one of "i", "ii", "iii"; by default every case whose
    hypothesis holds is evaluated.  Strict bounds g < B are reported as the
    largest admissible integer.
    """
    if two_alpha * two_alpha > (isqrt(4 * q) + 1) ** 2:
        raise ValueError(f"|2 alpha| = {abs(two_alpha)} exceeds 2 sqrt({q})")
    rep = GenusBoundReport(q, two_alpha, _general_genus_bound(q))
    r = is_perfect_square(q)
    wanted = {case} if case else {"i", "ii", "iii"}
    if case in ("ii", "iii") and r is None:
        raise CaseRequiresSquareQ(f"case ({case}) needs q square, got {q}")

    if "i" in wanted and two_alpha > 0:
        # g < (sqrt q + 1)^4 (q^2 + 1) / (2 q^2)
        lo, hi = _sqrt_enclosure(q)
        top = (hi + 1) ** 4 * Fraction(q * q + 1, 2 * q * q)
        rep.cases["i"] = _ceil(top) - 1
    if r is not None:
        if "ii" in wanted and two_alpha == 2 * r:
            rep.cases["ii"] = (q - r) // 2
        if "iii" in wanted and two_alpha == -2 * r:
            rep.cases["iii"] = (r + 1) ** 2 // (2 * r)
    return rep


# ------------------------------------------------------------ the report


@dataclass
class DefectReport:
    q: int
    g: int
    N1: int
    N2: int | None
    delta: int | None
    weil_lo: int
    weil_hi: int
    ihara_D: int
    ihara_sqrt: int | None
    ihara_floor: int
    dm_upper_N2: Fraction
    dm_lower_N2: Fraction | None
    ahl_rhs: Fraction | None = None
    delta_in_range: bool | None = None

    def to_json(self) -> dict:
        out: dict = {}
        for k, v in self.__dict__.items():
            out[k] = frac_str(v) if isinstance(v, Fraction) else v
        return out


def defect_report(q: int, g: int, N1: int, N2: int | None = None, tau: int | None = None) -> DefectReport:
    lo, hi = weil_interval(q, g)
    D, root, fl = ihara_bound(q, g)
    delta = dm_defect(q, g, N1, N2) if N2 is not None else None
    return DefectReport(
        q=q,
        g=g,
        N1=N1,
        N2=N2,
        delta=delta,
        weil_lo=lo,
        weil_hi=hi,
        ihara_D=D,
        ihara_sqrt=root,
        ihara_floor=fl,
        dm_upper_N2=dm_upper_N2(q, g, N1),
        dm_lower_N2=dm_lower_N2(q, g, N1) if g >= 2 else None,
        ahl_rhs=ahl_bound(q, g, tau) if tau is not None else None,
        delta_in_range=defect_in_range(q, g, delta) if delta is not None else None,
    )
