"""Lookup tables that let the counting kernels work on integer encodings.

An element is its base-p encoding (see :mod:`dmcurves.ff`).  Multiplication
goes through discrete log / antilog tables for a primitive element, and
addition through Zech logarithms, so every kernel operation is a handful of
array lookups and works the same way for every characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..ff import FieldDesc, _prime_factors

ZERO_LOG = -1


@dataclass(frozen=True, eq=False)
class FieldTables:
    field: FieldDesc
    exp: np.ndarray  # exp[i] = code of g^i, length q-1
    log: np.ndarray  # log[code], log[0] = -1
    zech: np.ndarray  # zech[k] = log(1 + g^k) or -1
    neg: np.ndarray  # neg[code] = code of -a
    chi: np.ndarray | None  # quadratic character, odd p only
    trace: np.ndarray | None  # absolute trace to F_2, p = 2 only

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def p(self) -> int:
        return self.field.p

    # scalar helpers, used off the hot path --------------------------------
    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % (self.q - 1)])

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        la = int(self.log[a])
        z = int(self.zech[(int(self.log[b]) - la) % (self.q - 1)])
        if z < 0:
            return 0
        return int(self.exp[(la + z) % (self.q - 1)])

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            return 1 if k == 0 else 0
        return int(self.exp[(int(self.log[a]) * k) % (self.q - 1)])

    def prime_code(self, c: int) -> int:
        """Encoding of the prime-field element c (the constant polynomial)."""
        return c % self.p

    def eval_fp_poly(self, poly: Sequence[int], x: int) -> int:
        acc = 0
        for c in reversed(poly):
            acc = self.add(self.mul(acc, x), self.prime_code(c))
        return acc

    def eval_codes(self, coeffs: Sequence[int], x: int) -> int:
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc


def _digits_add_one(codes: np.ndarray, p: int) -> np.ndarray:
    c0 = codes % p
    return codes - c0 + (c0 + 1) % p


@lru_cache(maxsize=64)
def field_tables(F: FieldDesc) -> FieldTables:
    q, p, n = F.q, F.p, F.n
    gen = _primitive_element(F)
    exp = np.empty(q - 1, dtype=np.int64)
    cur = F.one()
    for i in range(q - 1):
        exp[i] = cur.encode()
        cur = cur * gen
    log = np.full(q, ZERO_LOG, dtype=np.int64)
    log[exp] = np.arange(q - 1, dtype=np.int64)

    shifted = _digits_add_one(exp, p)  # 1 + g^k
    zech = log[shifted]

    codes = np.arange(q, dtype=np.int64)
    neg = np.zeros(q, dtype=np.int64)
    for i in range(n):
        d = (codes // p**i) % p
        neg += ((p - d) % p) * p**i

    chi = trace = None
    if p == 2:
        # Tr(a) = sum_i a^(2^i), lands in F_2 = {0, 1}
        trace = np.zeros(q, dtype=np.int64)
        nz = codes[1:]
        for i in range(n):
            trace[1:] ^= exp[(log[nz] * 2**i) % (q - 1)]
        assert np.all(trace <= 1)
    else:
        chi = np.zeros(q, dtype=np.int64)
        chi[1:] = np.where(log[1:] % 2 == 0, 1, -1)
    return FieldTables(F, exp, log, zech, neg, chi, trace)


def _primitive_element(F: FieldDesc):
    if F.q == 2:
        return F.one()
    factors = _prime_factors(F.q - 1)
    one = F.one()
    for code in range(1, F.q):
        g = F.decode(code)
        if all(g ** ((F.q - 1) // r) != one for r in factors):
            return g
    raise AssertionError("no primitive element")  # pragma: no cover
