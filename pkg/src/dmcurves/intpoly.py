"""Exact integer and rational polynomial algebra.

Covers the passage between point counts and L-polynomials (Newton's
identities), the functional equation, the real Weil transform
``f(T) = T^g h(T + q/T)`` and an exact q-Weil test built on Sturm sequences
with rational endpoints only.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .errors import FunctionalEquationViolated, NonIntegralCoefficient, NonMonic, OddDegree


class _PolyBase:
    """Shared arithmetic for coefficient tuples, low-to-high."""

    __slots__ = ("coeffs",)
    _zero = 0

    def __init__(self, coeffs: Iterable = ()):
        c = [self._coerce(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @staticmethod
    def _coerce(x):
        return x

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1] if self.coeffs else self._zero

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self._zero

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, _PolyBase):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == type(self)([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _wrap(self, other):
        if isinstance(other, _PolyBase):
            return other
        return type(self)([other])

    def __add__(self, other):
        other = self._wrap(other)
        n = max(len(self.coeffs), len(other.coeffs))
        cls = RatPoly if RatPoly in (type(self), type(other)) else type(self)
        return cls([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        other = self._wrap(other)
        cls = RatPoly if RatPoly in (type(self), type(other)) else type(self)
        if not self.coeffs or not other.coeffs:
            return cls()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return cls(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = type(self)([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return type(self)([i * c for i, c in enumerate(self.coeffs)][1:])

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)})"

    def __str__(self):
        return _format(self.coeffs, "T")


def _format(coeffs, var: str) -> str:
    if not coeffs:
        return "0"
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            s = mono
        elif mono and c == -1:
            s = "-" + mono
        else:
            s = f"{c}{'*' + mono if mono else ''}"
        terms.append(s)
    out = terms[0]
    for s in terms[1:]:
        out += (" - " + s[1:]) if s.startswith("-") else (" + " + s)
    return out


class IntPoly(_PolyBase):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integral coefficient {x}")
            return x.numerator
        if isinstance(x, str):
            return int(x)
        return int(x)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> IntPoly:
        return cls(int(c) for c in data)

    def reversed(self, degree: int | None = None) -> IntPoly:
        d = self.degree if degree is None else degree
        return IntPoly([self[d - i] for i in range(d + 1)])


class RatPoly(_PolyBase):
    """Polynomial with exact rational coefficients."""

    __slots__ = ()
    _zero = Fraction(0)

    @staticmethod
    def _coerce(x):
        return Fraction(x)

    def monic(self) -> RatPoly:
        return RatPoly([c / self.lead() for c in self.coeffs]) if self.coeffs else self


def rat_divmod(a: _PolyBase, b: _PolyBase) -> tuple[RatPoly, RatPoly]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a.coeffs]
    db = b.degree
    lb = Fraction(b.lead())
    quo = [Fraction(0)] * max(0, len(r) - db)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c = r[-1] / lb
        quo[shift] = c
        for i, y in enumerate(b.coeffs):
            r[shift + i] -= c * y
        while r and r[-1] == 0:
            r.pop()
    return RatPoly(quo), RatPoly(r)


def rat_gcd(a: _PolyBase, b: _PolyBase) -> RatPoly:
    a, b = RatPoly(a.coeffs), RatPoly(b.coeffs)
    while not b.is_zero():
        a, b = b, rat_divmod(a, b)[1]
    return a.monic()


def squarefree_part(p: _PolyBase) -> RatPoly:
    """p / gcd(p, p'), made monic."""
    p = RatPoly(p.coeffs)
    if p.degree < 1:
        return p.monic()
    g = rat_gcd(p, p.derivative())
    return rat_divmod(p, g)[0].monic()


# ------------------------------------------------------------------ Sturm ---


def sturm_sequence(p: _PolyBase) -> list[RatPoly]:
    seq = [RatPoly(p.coeffs)]
    if seq[0].degree < 1:
        return seq
    seq.append(seq[0].derivative())
    while True:
        r = rat_divmod(seq[-2], seq[-1])[1]
        if r.is_zero():
            return seq
        seq.append(-r)


def _sign_changes(values: Iterable) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sign_at_infinity(seq: Sequence[RatPoly], positive: bool) -> int:
    vals = []
    for s in seq:
        lead = s.lead()
        if not positive and s.degree % 2 == 1:
            lead = -lead
        vals.append(lead)
    return _sign_changes(vals)


def count_real_roots(p: _PolyBase, seq: Sequence[RatPoly] | None = None) -> int:
    """Number of distinct real roots."""
    seq = seq or sturm_sequence(p)
    return _sign_at_infinity(seq, False) - _sign_at_infinity(seq, True)


def count_roots_between(p: _PolyBase, a, b, seq: Sequence[RatPoly] | None = None) -> int:
    """Number of distinct real roots in the half-open interval (a, b]."""
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        return 0
    seq = seq or sturm_sequence(p)
    return _sign_changes(s(a) for s in seq) - _sign_changes(s(b) for s in seq)


# -------------------------------------------------- counts <-> L-polynomial ---


def counts_to_power_sums(q: int, counts: Sequence[int]) -> list[int]:
    """S_k = q^k + 1 - N_k, the k-th power sum of the Frobenius eigenvalues."""
    if not counts:
        raise ValueError("need at least one count")
    if q < 2:
        raise ValueError("q must be at least 2")
    return [q**k + 1 - n for k, n in enumerate(counts, start=1)]


def power_sums_to_lpoly(q: int, g: int, sums: Sequence[int]) -> IntPoly:
    if len(sums) != g:
        raise ValueError(f"need exactly {g} power sums, got {len(sums)}")
    # elementary symmetric functions e_k via k e_k = sum (-1)^(i-1) e_{k-i} S_i
    e = [Fraction(1)]
    for k in range(1, g + 1):
        acc = sum((-1) ** (i - 1) * e[k - i] * sums[i - 1] for i in range(1, k + 1))
        ek = Fraction(acc, k)
        if ek.denominator != 1:
            raise NonIntegralCoefficient(f"e_{k} = {ek} is not an integer")
        e.append(ek)
    a = [int((-1) ** k * e[k]) for k in range(g + 1)]
    full = a + [q ** (g - i) * a[i] for i in range(g - 1, -1, -1)]
    return IntPoly(full)


def lpoly_power_sums(L: IntPoly, m: int) -> list[int]:
    """First m power sums of the reciprocal roots of L (L(0) = 1)."""
    S: list[int] = []
    for k in range(1, m + 1):
        s = -k * L[k] - sum(L[i] * S[k - i - 1] for i in range(1, k))
        S.append(s)
    return S


def functional_equation_check(L: IntPoly, q: int) -> bool:
    d = L.degree
    if d < 0 or d % 2 or L[0] != 1:
        return False
    g = d // 2
    return all(L[2 * g - i] == q ** (g - i) * L[i] for i in range(g + 1))


def lpoly_to_counts(L: IntPoly, q: int, k: int) -> int:
    if not functional_equation_check(L, q):
        raise FunctionalEquationViolated(f"{L} is not an L-polynomial over F_{q}")
    return q**k + 1 - lpoly_power_sums(L, k)[-1]


# ------------------------------------------------------ q-Weil polynomials ---


def _monic_fe(f: IntPoly, q: int) -> bool:
    """Functional equation in the monic (characteristic polynomial) form."""
    d = f.degree
    if d < 0 or d % 2:
        return False
    g = d // 2
    return all(f[i] == q ** (g - i) * f[2 * g - i] for i in range(g + 1))


def chebyshev_like(k: int, q: int) -> IntPoly:
    """The polynomial P_k with T^k + q^k T^-k = P_k(T + q/T)."""
    prev, cur = IntPoly([2]), IntPoly([0, 1])
    if k == 0:
        return prev
    x = IntPoly([0, 1])
    for _ in range(k - 1):
        prev, cur = cur, x * cur - q * prev
    return cur


def real_weil_transform(f: IntPoly, q: int) -> IntPoly:
    """The monic h of degree g with f(T) = T^g h(T + q/T)."""
    if f.degree % 2 or f.lead() != 1 or not _monic_fe(f, q):
        raise FunctionalEquationViolated(f"{f} is not symmetric for q={q}")
    g = f.degree // 2
    h = IntPoly([f[g]])
    for k in range(1, g + 1):
        h = h + f[g + k] * chebyshev_like(k, q)
    return h


def real_weil_expand(h: IntPoly, q: int) -> IntPoly:
    """Inverse of :func:`real_weil_transform`: T^g h(T + q/T)."""
    g = h.degree
    shift = IntPoly([q, 0, 1])  # T^2 + q = T (T + q/T)
    out = IntPoly()
    for j, c in enumerate(h.coeffs):
        out = out + c * (shift**j) * IntPoly([0] * (g - j) + [1])
    return out


def squared_roots_poly(h: _PolyBase) -> RatPoly:
    """Polynomial whose roots are the squares of the roots of h.

    h(x) h(-x) is even; reading it in s = x^2 gives +-Res_x(h(x), s - x^2).
    """
    h = RatPoly(h.coeffs)
    hm = RatPoly([c if i % 2 == 0 else -c for i, c in enumerate(h.coeffs)])
    prod = h * hm
    return RatPoly(prod.coeffs[0::2]).monic()


def is_q_weil(f: IntPoly, q: int) -> tuple[bool, dict]:
    """Decide exactly whether every root of the monic f has absolute value sqrt(q).

    Returns the verdict and a certificate of the Sturm counts that decided it.
    """
    if f.degree % 2:
        raise OddDegree(f"degree {f.degree} is odd")
    if f.lead() != 1:
        raise NonMonic(f"leading coefficient {f.lead()}")
    cert: dict = {"q": q, "degree": f.degree}
    if not _monic_fe(f, q):
        cert["functional_equation"] = False
        return False, cert
    cert["functional_equation"] = True
    h = real_weil_transform(f, q)
    cert["h"] = list(h.coeffs)
    if h.degree == 0:
        return True, cert
    h0 = squarefree_part(h)
    cert["h_squarefree_degree"] = h0.degree
    real = count_real_roots(h0)
    cert["h_real_roots"] = real
    if real != h0.degree:
        return False, cert
    e0 = squarefree_part(squared_roots_poly(h0))
    inside = count_roots_between(e0, -1, 4 * q)
    cert["squared_roots_degree"] = e0.degree
    cert["squared_roots_in_0_4q"] = inside
    return inside == e0.degree, cert


# ------------------------------------------------------------------ misc ---


def divides(a: IntPoly, b: IntPoly) -> bool:
    """True iff b = a * c for some c in Z[T]."""
    if a.is_zero():
        return b.is_zero()
    quo, rem = rat_divmod(b, a)
    return rem.is_zero() and all(c.denominator == 1 for c in quo.coeffs)


def exact_quotient(b: IntPoly, a: IntPoly) -> IntPoly:
    quo, rem = rat_divmod(b, a)
    if not rem.is_zero():
        raise ValueError(f"{a} does not divide {b}")
    return IntPoly(quo.coeffs)


def is_perfect_square(m: int) -> int | None:
    if m < 0:
        return None
    r = isqrt(m)
    return r if r * r == m else None


def parse_poly(text: str) -> IntPoly:
    """Parse "c0,c1,..." (low-to-high) into an IntPoly."""
    parts = [s.strip() for s in text.split(",") if s.strip()]
    return IntPoly(int(s) for s in parts)
