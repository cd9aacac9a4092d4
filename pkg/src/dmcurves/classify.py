"""Maximality predicates and the genus-2 DM Jacobian decision procedure."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import defect_in_range, dm_defect, ihara_bound, weil_ok
from .errors import ImpossibleCounts, NotDivisible, NotWeil
from .intpoly import IntPoly, divides, is_perfect_square
from .zeta import LPolynomial


# ----------------------------------------------------------- predicates


def dm_lpoly(q: int, g: int, N1: int) -> LPolynomial:
    """(1 - 2a T + q T^2)^g with 2a = (q + 1 - N_1)/g."""
    d = q + 1 - N1
    if d % g:
        raise NotDivisible(f"g={g} does not divide q+1-N_1={d}")
    two_alpha = d // g
    if two_alpha * two_alpha > 4 * q:
        raise NotWeil(f"|2 alpha| = {abs(two_alpha)} exceeds 2 sqrt({q})")
    return LPolynomial(IntPoly([1, -two_alpha, q]) ** g, q, g)


@dataclass
class ClassificationVerdict:
    q: int
    g: int
    N1: int
    N2: int
    delta: int
    is_ds: bool
    is_dm: bool
    is_ihara_max: bool
    is_weil_max: bool
    is_weil_min: bool
    dm_two_alpha: int | None = None
    dm_lpoly: LPolynomial | None = None
    genus2_cases: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "q": self.q,
            "g": self.g,
            "n1": self.N1,
            "n2": self.N2,
            "delta": self.delta,
            "ds": self.is_ds,
            "dm": self.is_dm,
            "ihara_max": self.is_ihara_max,
            "weil_max": self.is_weil_max,
            "weil_min": self.is_weil_min,
            "two_alpha": self.dm_two_alpha,
            "genus2_cases": self.genus2_cases,
        }
        if self.dm_lpoly is not None:
            out["dm_lpoly"] = self.dm_lpoly.poly.to_json()
        return out


def classify_counts(q: int, g: int, N1: int, N2: int) -> ClassificationVerdict:
    if g < 1:
        raise ValueError("genus must be positive")
    if N1 > N2:
        raise ImpossibleCounts(f"N_1={N1} > N_2={N2}")
    delta = dm_defect(q, g, N1, N2)
    if not defect_in_range(q, g, delta, refined=False):
        raise ImpossibleCounts(f"defect {delta} outside [0, {4 * q * g * g}]")
    notes = []
    if not (weil_ok(q, g, N1) and weil_ok(q * q, g, N2)):
        notes.append("counts outside the Weil interval")
    dev = N1 - q - 1
    exact = dev * dev == 4 * g * g * q
    v = ClassificationVerdict(
        q, g, N1, N2, delta,
        is_ds=N1 == N2,
        is_dm=delta == 0,
        is_ihara_max=False,
        is_weil_max=exact and dev > 0,
        is_weil_min=exact and dev < 0,
        notes=notes,
    )
    v.is_ihara_max = v.is_dm and v.is_ds
    if v.is_dm:
        # delta = 0 only gives g | (q + 1 - N_1)^2; for a real curve 2 alpha is
        # an algebraic integer, so anything else cannot come from a curve
        try:
            L = dm_lpoly(q, g, N1)
        except (NotDivisible, NotWeil) as exc:
            raise ImpossibleCounts(f"defect 0 but {exc}") from exc
        v.dm_lpoly = L
        v.dm_two_alpha = -L[1] // g
        if g == 2:
            p, n = _prime_power(q)
            v.genus2_cases = sorted(genus2_jacobian_classify(p, n, bridge_a(v.dm_two_alpha)).matched_cases)
    return v


def _prime_power(q: int) -> tuple[int, int]:
    from .ff import _prime_factors

    fs = _prime_factors(q)
    if len(fs) != 1:
        raise ValueError(f"{q} is not a prime power")
    p, n = fs[0], 0
    while q > 1:
        q //= p
        n += 1
    return p, n


def bridge_a(two_alpha: int) -> int:
    """The theorem's a for L = (1 - 2 alpha T + q T^2)^2, i.e. (T^2 + a T + q)^2."""
    return -two_alpha


def check_covering_consistency(LX: LPolynomial, LY: LPolynomial) -> bool:
    if LX.q != LY.q:
        raise ValueError("L-polynomials over different fields")
    if not divides(LX.poly, LY.poly):
        return False
    c = LY[1]
    if c % LY.g == 0:
        b = c // LY.g
        if LY.poly == IntPoly([1, b, LY.q]) ** LY.g:
            return LX.poly == IntPoly([1, b, LX.q]) ** LX.g
    return True


# ------------------------------------------------------ genus-2 theorem


SIMPLE_SS = "simple-supersingular"
SPLIT_ORD = "split-ordinary"
SPLIT_SS = "split-supersingular"


@dataclass
class Genus2JacobianClass:
    p: int
    n: int
    a: int
    matched_cases: set[str]
    structure: dict[str, str]

    @property
    def verdict(self) -> bool:
        return bool(self.matched_cases)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "a": self.a,
            "verdict": self.verdict,
            "cases": sorted(self.matched_cases),
            "structure": {k: self.structure[k] for k in sorted(self.structure)},
        }


def _is_pm(a: int, v: int | None) -> bool:
    return v is not None and abs(a) == v


def genus2_jacobian_classify(p: int, n: int, a: int) -> Genus2JacobianClass:
    """Which classification cases make (T^2 + aT + q)^2 the Jacobian polynomial of a
    genus-2 DM curve over F_{p^n}."""
    q = p**n
    even = n % 2 == 0
    half = p ** (n // 2) if even else None  # sqrt(q)
    sqrt_2q = is_perfect_square(2 * q)
    cases: dict[str, str] = {}

    if even and p % 4 == 1 and a == 0:
        cases["1.1"] = SIMPLE_SS
    if even and p % 3 == 1 and _is_pm(a, half):
        cases["1.2"] = SIMPLE_SS

    from math import gcd

    if a * a <= 4 * q and gcd(a, p) == 1 and a * a - 4 * q not in (-3, -4, -7):
        cases["2"] = SPLIT_ORD

    if p == 2 and n > 1:
        if not even and a == 0:
            cases["3.1.i"] = SPLIT_SS
        if not even and _is_pm(a, sqrt_2q):
            cases["3.1.ii"] = SPLIT_SS
        if even and a == 0:
            cases["3.1.iii"] = SPLIT_SS
        if even and _is_pm(a, half):
            cases["3.1.iv"] = SPLIT_SS
        if even and n >= 4 and _is_pm(a, 2 * half):
            cases["3.1.v"] = SPLIT_SS
    elif p == 3:
        if not even and n >= 3 and a == 0:
            cases["3.2.i"] = SPLIT_SS
        if even and (a == 0 or _is_pm(a, half) or (_is_pm(a, 2 * half) and n >= 4)):
            cases["3.2.ii"] = SPLIT_SS
    elif p > 3:
        if even and _is_pm(a, 2 * half):
            cases["3.3.i"] = SPLIT_SS
        if even and p % 3 != 1 and _is_pm(a, half):
            cases["3.3.ii"] = SPLIT_SS
        if not even and a == 0:
            cases["3.3.iii"] = SPLIT_SS
        if even and p % 4 != 1 and a == 0:
            cases["3.3.iv"] = SPLIT_SS

    return Genus2JacobianClass(p, n, a, set(cases), cases)


# ------------------------------------------------ Ihara characterisations


@dataclass
class IharaEquivalence:
    attains_bound: bool
    dm_and_ds: bool
    lpoly_shape: bool

    @property
    def agree(self) -> bool:
        return self.attains_bound == self.dm_and_ds == self.lpoly_shape

    def to_json(self) -> dict:
        return {"a": self.attains_bound, "b": self.dm_and_ds, "c": self.lpoly_shape, "agree": self.agree}


def ihara_equiv_check(q: int, g: int, N1: int, N2: int) -> IharaEquivalence:
    D, root, _ = ihara_bound(q, g)
    # (a) N_1 = q + 1 + (sqrt D - g)/2 exactly
    a = root is not None and (root - g) % 2 == 0 and N1 == q + 1 + (root - g) // 2
    # (b)
    delta = dm_defect(q, g, N1, N2)
    b = delta == 0 and N1 == N2
    # (c) counts consistent with L = (1 - 2 alpha T + q T^2)^g, 2 alpha = (g - sqrt D)/(2g)
    c = False
    if root is not None and (g - root) % (2 * g) == 0 and delta == 0 and (q + 1 - N1) % g == 0:
        two_alpha = (g - root) // (2 * g)
        target = IntPoly([1, -two_alpha, q]) ** g
        try:
            c = dm_lpoly(q, g, N1).poly == target
        except NotWeil:
            c = False
    return IharaEquivalence(a, b, c)
