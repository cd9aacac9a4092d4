"""L-polynomials recovered from point counts, and exact statistics of the
real parts of Frobenius eigenvalues."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import FunctionalEquationViolated, NotWeil
from .intpoly import (
    IntPoly,
    counts_to_power_sums,
    functional_equation_check,
    is_q_weil,
    lpoly_to_counts,
    power_sums_to_lpoly,
)


def frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class LPolynomial:
    poly: IntPoly
    q: int
    g: int

    def __post_init__(self):
        if self.poly.degree != 2 * self.g or not functional_equation_check(self.poly, self.q):
            raise FunctionalEquationViolated(f"{self.poly} is not an L-polynomial of genus {self.g} over F_{self.q}")

    @classmethod
    def of(cls, poly: IntPoly | Sequence[int], q: int) -> LPolynomial:
        poly = poly if isinstance(poly, IntPoly) else IntPoly(poly)
        return cls(poly, q, poly.degree // 2)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.poly.coeffs

    def __getitem__(self, i: int) -> int:
        return self.poly[i]

    def char_poly(self) -> IntPoly:
        """T^{2g} L(1/T), the Frobenius characteristic polynomial."""
        return self.poly.reversed(2 * self.g)

    def is_weil(self) -> bool:
        return is_q_weil(self.char_poly(), self.q)[0]

    def count(self, k: int) -> int:
        return lpoly_to_counts(self.poly, self.q, k)

    def __str__(self):
        return str(self.poly)


def lpoly_from_counts(q: int, g: int, counts: Sequence[int]) -> LPolynomial:
    if len(counts) != g:
        raise ValueError(f"genus {g} needs exactly {g} counts, got {len(counts)}")
    L = LPolynomial(power_sums_to_lpoly(q, g, counts_to_power_sums(q, counts)), q, g)
    if not L.is_weil():
        raise NotWeil(f"counts {tuple(counts)} give non-Weil {L.poly}")
    return L


def jacobian_order(L: LPolynomial) -> int:
    return L.poly(1)


def trace_tau(L: LPolynomial) -> int:
    return L[1]


@dataclass(frozen=True)
class AlphaStats:
    mean: Fraction
    sum_sq: Fraction
    variance: Fraction

    def to_json(self) -> dict:
        return {"alpha_mean": frac_str(self.mean), "alpha_sum_sq": frac_str(self.sum_sq), "alpha_variance": frac_str(self.variance)}


def alpha_stats(q: int, g: int, N1: int, N2: int) -> AlphaStats:
    """Mean, sum of squares and variance of the alpha_j = Re(omega_j).

    Only N_1 and N_2 are needed: sum 2 alpha_j = q + 1 - N_1 and
    sum 4 alpha_j^2 = S_2 + 2gq with S_2 = q^2 + 1 - N_2.
    """
    from .bounds import dm_defect

    mean = Fraction(q + 1 - N1, 2 * g)
    sum_sq = Fraction(q * q + 1 - N2 + 2 * g * q, 4)
    variance = Fraction(dm_defect(q, g, N1, N2), 4 * g * g)
    return AlphaStats(mean, sum_sq, variance)


def zeta_report(L: LPolynomial, N1: int | None = None, N2: int | None = None) -> dict:
    out = {
        "lpoly": L.poly.to_json(),
        "jac_order": str(jacobian_order(L)),
        "tau": trace_tau(L),
    }
    if N1 is None:
        N1 = L.count(1)
    if N2 is None:
        N2 = L.count(2)
    st = alpha_stats(L.q, L.g, N1, N2)
    out["alpha_mean"] = frac_str(st.mean)
    out["alpha_variance"] = frac_str(st.variance)
    return out
