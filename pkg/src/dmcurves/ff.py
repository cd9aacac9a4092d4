"""Finite fields F_{p^n} in a polynomial basis over F_p.

A field is described by a prime ``p``, a degree ``n`` and a monic irreducible
``modulus`` of degree ``n`` over F_p, stored low-to-high.  Elements are
coefficient vectors of length ``n``.  Every element also has an integer
*encoding* ``sum(c_i * p**i)``; enumeration runs through encodings ``0..q-1``,
which is lexicographic order on the vector read from the top coefficient down.

Univariate polynomials over F_p are plain lists of ints (low-to-high, no
trailing zeros) and are handled by the ``_fp_*`` helpers.  Polynomials over
F_q are lists of :class:`FieldElement` handled by the ``fq_poly_*`` helpers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Sequence

import gmpy2

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    NotPrime,
    ReducibleModulus,
)

# ---------------------------------------------------------------- F_p[t] ----


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    m = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(m)]
    return _fp_trim(out)


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_trim([c % p for c in out])


def _fp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = list(a)
    _fp_trim(r)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    if len(r) - 1 < db:
        return [], r
    quo = [0] * (len(r) - db)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c = r[-1] * inv_lead % p
        quo[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        _fp_trim(r)
    return _fp_trim(quo), r


def _fp_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return _fp_divmod(a, b, p)[1]


def _fp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _fp_powmod(base: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    b = _fp_mod(base, m, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, b, p), m, p)
        e >>= 1
        if e:
            b = _fp_mod(_fp_mul(b, b, p), m, p)
    return result


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_fp(m: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    m = _fp_trim(list(m))
    n = len(m) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    t = [0, 1]
    if _fp_sub(_fp_powmod(t, p**n, m, p), t, p):
        return False
    for r in _prime_factors(n):
        h = _fp_sub(_fp_powmod(t, p ** (n // r), m, p), t, p)
        if len(_fp_gcd(h, m, p)) != 1:
            return False
    return True


def is_prime(p: int) -> bool:
    return p >= 2 and bool(gmpy2.is_prime(p))


def least_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically-least monic irreducible of degree n (top coefficient first)."""
    for code in range(p**n):
        low = [(code // p**i) % p for i in range(n)]
        cand = low + [1]
        if is_irreducible_fp(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------- fields ----


@dataclass(frozen=True)
class FieldDesc:
    p: int
    n: int
    modulus: tuple[int, ...]
    q: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.n)

    # constructors --------------------------------------------------------
    def element(self, value) -> FieldElement:
        """Build an element from an int (prime-field value), a coefficient list,
        or an existing element of this field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch("element belongs to another field")
            return value
        if isinstance(value, int):
            coeffs = [value % self.p] + [0] * (self.n - 1)
        else:
            vals = [int(c) % self.p for c in value]
            if len(vals) > self.n:
                vals = _fp_mod(vals, self.modulus, self.p)
            coeffs = vals + [0] * (self.n - len(vals))
        return FieldElement(self, tuple(coeffs))

    def decode(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise ValueError(f"encoding {code} outside [0, {self.q})")
        return FieldElement(self, tuple((code // self.p**i) % self.p for i in range(self.n)))

    def zero(self) -> FieldElement:
        return self.element(0)

    def one(self) -> FieldElement:
        return self.element(1)

    def gen(self) -> FieldElement:
        """The class of t in F_p[t]/(modulus)."""
        return self.element([0, 1])

    def elements(self) -> Iterator[FieldElement]:
        return enumerate_field(self)

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, d: dict) -> FieldDesc:
        return make_field(int(d["p"]), int(d["n"]), d.get("modulus"))

    def __str__(self):
        return f"F_{self.q}" if self.n == 1 else f"F_{self.p}^{self.n}"


@dataclass(frozen=True)
class FieldElement:
    field: FieldDesc
    coeffs: tuple[int, ...]

    # helpers -------------------------------------------------------------
    def _other(self, b) -> FieldElement:
        if isinstance(b, int):
            return self.field.element(b)
        if not isinstance(b, FieldElement):
            return NotImplemented
        if b.field != self.field:
            raise FieldMismatch(f"{self.field} vs {b.field}")
        return b

    def _poly(self) -> list[int]:
        return _fp_trim(list(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def encode(self) -> int:
        p = self.field.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    # arithmetic ----------------------------------------------------------
    def __add__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        p = self.field.p
        return FieldElement(self.field, tuple((x + y) % p for x, y in zip(self.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-x % p for x in self.coeffs))

    def __sub__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return self + (-b)

    def __rsub__(self, b):
        return (-self) + b

    def __mul__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        F = self.field
        prod = _fp_mod(_fp_mul(self._poly(), b._poly(), F.p), F.modulus, F.p)
        return F.element(prod)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        F = self.field
        # extended Euclid in F_p[t]
        r0, r1 = list(F.modulus), self._poly()
        s0, s1 = [], [1]
        while r1:
            quo, rem = _fp_divmod(r0, r1, F.p)
            r0, r1 = r1, rem
            s0, s1 = s1, _fp_sub(s0, _fp_mul(quo, s1, F.p), F.p)
        inv = pow(r0[0], -1, F.p)
        return F.element([c * inv for c in s0])

    def __truediv__(self, b):
        b = self._other(b)
        if b is NotImplemented:
            return b
        return self * b.inverse()

    def __rtruediv__(self, b):
        return self.inverse() * b

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        F = self.field
        if self.is_zero():
            return F.one() if k == 0 else self
        k %= F.q - 1
        return F.element(_fp_powmod(self._poly(), k, F.modulus, F.p))

    def frobenius(self) -> FieldElement:
        return self ** self.field.p

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.field.n == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                coef = "" if (c == 1 and i) else str(c)
                terms.append(coef + ("*" if coef and mono else "") + mono)
        return "+".join(reversed(terms)) or "0"


def make_field(p: int, n: int = 1, modulus: Sequence[int] | None = None) -> FieldDesc:
    """Return F_{p^n}.  Without ``modulus`` the lexicographically-least monic
    irreducible of degree ``n`` is used, so fields are reproducible."""
    return _make_field(int(p), int(n), None if modulus is None else tuple(int(c) for c in modulus))


@lru_cache(maxsize=None)
def _make_field(p: int, n: int, modulus: tuple[int, ...] | None) -> FieldDesc:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise DegreeMismatch("extension degree must be positive")
    if modulus is None:
        return FieldDesc(p, n, least_irreducible(p, n))
    m = _fp_trim([c % p for c in modulus])
    if len(m) - 1 != n:
        raise DegreeMismatch(f"modulus has degree {len(m) - 1}, expected {n}")
    if m[-1] != 1:
        raise DegreeMismatch("modulus must be monic")
    if not is_irreducible_fp(m, p):
        raise ReducibleModulus(f"{m} is reducible over F_{p}")
    return FieldDesc(p, n, tuple(m))


def field_arith(a: FieldElement, b: FieldElement | None, op: str, k: int | None = None) -> FieldElement:
    """Dispatch table for the CLI and tests: add, sub, mul, div, pow, inv, frobenius."""
    if b is not None and b.field != a.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a**k
    if op == "inv":
        return a.inverse()
    if op == "frobenius":
        return a.frobenius()
    raise ValueError(f"unknown operation {op!r}")


def enumerate_field(F: FieldDesc) -> Iterator[FieldElement]:
    for code in range(F.q):
        yield F.decode(code)


def quadratic_character(F: FieldDesc, a: FieldElement) -> int:
    if F.p == 2:
        raise EvenCharacteristic("quadratic character needs odd characteristic")
    a = F.element(a)
    if a.is_zero():
        return 0
    return 1 if a ** ((F.q - 1) // 2) == F.one() else -1


# -------------------------------------------------------------- embeddings ----


@dataclass(frozen=True)
class Embedding:
    """Field homomorphism F -> K given by the image of the generator t."""

    source: FieldDesc
    target: FieldDesc
    image_of_gen: FieldElement

    def __call__(self, a: FieldElement) -> FieldElement:
        a = self.source.element(a)
        acc = self.target.zero()
        for c in reversed(a.coeffs):
            acc = acc * self.image_of_gen + c
        return acc

    def code_table(self) -> list[int]:
        """Encoded image of every encoded source element."""
        return _embedding_table(self)


@lru_cache(maxsize=None)
def _embedding_table(emb: Embedding) -> list[int]:
    return [emb(emb.source.decode(c)).encode() for c in range(emb.source.q)]


def extend(F: FieldDesc, k: int) -> tuple[FieldDesc, Embedding]:
    """F_{q^k} built directly over F_p, plus the embedding of F into it.

    The generator of F is sent to the least (by encoding) root of F's modulus
    in the big field, found by exhaustive search.
    """
    if k < 1:
        raise ValueError("extension degree must be positive")
    return _extend(F, int(k))


@lru_cache(maxsize=None)
def _extend(F: FieldDesc, k: int) -> tuple[FieldDesc, Embedding]:
    if k == 1:
        return F, Embedding(F, F, F.gen())
    K = make_field(F.p, F.n * k)
    if F.n == 1:
        return K, Embedding(F, K, K.zero())
    root = _least_root(K, F.modulus)
    return K, Embedding(F, K, root)


def _least_root(K: FieldDesc, poly: Sequence[int]) -> FieldElement:
    from .kernels.tables import field_tables

    tab = field_tables(K)
    for code in range(1, K.q):
        if tab.eval_fp_poly(poly, code) == 0:
            return K.decode(code)
    raise AssertionError("modulus has no root in the extension")  # pragma: no cover


# -------------------------------------------------------------- F_q[x] ----

FqPoly = list  # list[FieldElement], low-to-high, no trailing zeros


def fq_poly(F: FieldDesc, coeffs: Sequence) -> FqPoly:
    return fq_trim([F.element(c) for c in coeffs])


def fq_trim(a: FqPoly) -> FqPoly:
    a = list(a)
    while a and a[-1].is_zero():
        a.pop()
    return a


def fq_add(a: FqPoly, b: FqPoly) -> FqPoly:
    if len(a) < len(b):
        a, b = b, a
    return fq_trim([x + b[i] if i < len(b) else x for i, x in enumerate(a)])


def fq_scale(a: FqPoly, c: FieldElement) -> FqPoly:
    return fq_trim([x * c for x in a])


def fq_mul(a: FqPoly, b: FqPoly) -> FqPoly:
    if not a or not b:
        return []
    F = a[0].field
    out = [F.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return fq_trim(out)


def fq_deriv(a: FqPoly) -> FqPoly:
    return fq_trim([c * i for i, c in enumerate(a)][1:])


def fq_mod(a: FqPoly, b: FqPoly) -> FqPoly:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = list(a)
    inv = b[-1].inverse()
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] * inv
        for i, y in enumerate(b):
            r[shift + i] = r[shift + i] - c * y
        r = fq_trim(r)
    return r


def fq_gcd(a: FqPoly, b: FqPoly) -> FqPoly:
    a, b = fq_trim(a), fq_trim(b)
    while b:
        a, b = b, fq_mod(a, b)
    if a:
        a = fq_scale(a, a[-1].inverse())
    return a


def fq_eval(a: FqPoly, x: FieldElement) -> FieldElement:
    acc = x.field.zero()
    for c in reversed(a):
        acc = acc * x + c
    return acc


def fq_map(a: FqPoly, emb: Callable[[FieldElement], FieldElement]) -> FqPoly:
    return fq_trim([emb(c) for c in a])
