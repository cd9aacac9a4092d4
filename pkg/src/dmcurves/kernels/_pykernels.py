"""Portable numpy implementation of the counting kernels.

Same signatures and results as the compiled ``_ckernels`` module; selected
automatically when the extension is not built.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .tables import FieldTables

BACKEND = "numpy"
_BLOCK = 1 << 20


def _vadd(tab: FieldTables, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if tab.p == 2:
        return a ^ b
    m = tab.q - 1
    la = tab.log[a]
    z = tab.zech[(tab.log[b] - la) % m]
    s = np.where(z < 0, 0, tab.exp[(la + z) % m])
    return np.where(a == 0, b, np.where(b == 0, a, s))


def _vmul(tab: FieldTables, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    m = tab.q - 1
    r = tab.exp[(tab.log[a] + tab.log[b]) % m]
    return np.where((a == 0) | (b == 0), 0, r)


def _horner(tab: FieldTables, coeffs: np.ndarray, xs: np.ndarray) -> np.ndarray:
    """Evaluate a batch of polynomials.  ``coeffs`` is (B, d+1) low-to-high,
    ``xs`` is (X,); returns (B, X)."""
    B = coeffs.shape[0]
    acc = np.zeros((B, xs.shape[0]), dtype=np.int64)
    xb = np.broadcast_to(xs, acc.shape)
    for j in range(coeffs.shape[1] - 1, -1, -1):
        acc = _vadd(tab, _vmul(tab, acc, xb), np.broadcast_to(coeffs[:, j : j + 1], acc.shape))
    return acc


def poly_values(tab: FieldTables, coeffs: Sequence[int]) -> np.ndarray:
    """Values of one polynomial at every field element, indexed by encoding."""
    xs = np.arange(tab.q, dtype=np.int64)
    c = np.asarray(list(coeffs) or [0], dtype=np.int64)[None, :]
    return _horner(tab, c, xs)[0]


def _points_over_x(tab: FieldTables, hv: np.ndarray, fv: np.ndarray, four: int) -> np.ndarray:
    """Number of y with y^2 + h y = f for each pair of values (h, f)."""
    if tab.p == 2:
        m = tab.q - 1
        # f / h^2 through logs; h == 0 gives the unique square root of f
        t = np.where(fv == 0, 0, tab.exp[(tab.log[fv] - 2 * tab.log[hv]) % m])
        two_or_zero = 2 * (1 - tab.trace[t])
        return np.where(hv == 0, 1, two_or_zero)
    disc = _vadd(tab, _vmul(tab, hv, hv), _vmul(tab, np.full_like(fv, four), fv))
    return 1 + tab.chi[disc]


def hyperelliptic_affine(tab: FieldTables, h: Sequence[int], f: Sequence[int], four: int) -> int:
    hv = poly_values(tab, h)
    fv = poly_values(tab, f)
    return int(_points_over_x(tab, hv, fv, four).sum())


def _monomial_block(tab, coeffs, ex, ey, xs, ys):
    """Sum of c*x^i*y^j over a (len(ys), len(xs)) grid of encodings."""
    m = tab.q - 1
    lx = tab.log[xs][None, :]
    ly = tab.log[ys][:, None]
    xz = (xs == 0)[None, :]
    yz = (ys == 0)[:, None]
    acc = np.zeros((ys.shape[0], xs.shape[0]), dtype=np.int64)
    for c, i, j in zip(coeffs, ex, ey):
        if c == 0:
            continue
        lg = (int(tab.log[c]) + i * lx + j * ly) % m
        term = tab.exp[lg]
        dead = np.zeros_like(acc, dtype=bool)
        if i:
            dead = dead | xz
        if j:
            dead = dead | yz
        term = np.where(dead, 0, term)
        acc = _vadd(tab, acc, term)
    return acc


def plane_affine(tab: FieldTables, coeffs: Sequence[int], ex: Sequence[int], ey: Sequence[int]) -> int:
    """Number of (x, y) in F^2 with sum c_k x^ex_k y^ey_k = 0."""
    q = tab.q
    xs = np.arange(q, dtype=np.int64)
    rows = max(1, _BLOCK // q)
    total = 0
    for y0 in range(0, q, rows):
        ys = np.arange(y0, min(q, y0 + rows), dtype=np.int64)
        total += int(np.count_nonzero(_monomial_block(tab, coeffs, ex, ey, xs, ys) == 0))
    return total


def plane_common_zero(tab: FieldTables, polys: Sequence[tuple]) -> tuple[int, int] | None:
    """First affine (x, y), in row-major encoding order, where every polynomial
    in ``polys`` (each a (coeffs, ex, ey) triple) vanishes."""
    q = tab.q
    xs = np.arange(q, dtype=np.int64)
    rows = max(1, _BLOCK // q)
    for y0 in range(0, q, rows):
        ys = np.arange(y0, min(q, y0 + rows), dtype=np.int64)
        mask = np.ones((ys.shape[0], q), dtype=bool)
        for coeffs, ex, ey in polys:
            mask &= _monomial_block(tab, coeffs, ex, ey, xs, ys) == 0
            if not mask.any():
                break
        hit = np.argwhere(mask)
        if hit.size:
            r, c = hit[0]
            return int(xs[c]), int(ys[r])
    return None


def genus2_scan(tab1, tab2, emb, choices, genus, four1, four2):
    """Enumerate y^2 + h(x) y = f(x) with coefficient i drawn from ``choices[i]``
    (h_0..h_{g+1}, then f_0..f_{2g+2}) and return the models with zero DM-defect.

    Result: list of (codes, N1, N2).  Smoothness is the caller's job.
    """
    g = genus
    nh = g + 2
    q = tab1.q
    emb = np.asarray(emb, dtype=np.int64)
    xs1 = np.arange(q, dtype=np.int64)
    xs2 = np.arange(tab2.q, dtype=np.int64)
    arrays = [np.asarray(c, dtype=np.int64) for c in choices]
    sizes = [len(a) for a in arrays]
    total = int(np.prod(sizes))
    hits = []
    batch = max(1, _BLOCK // (q + 1))
    for start in range(0, total, batch):
        flat = np.arange(start, min(total, start + batch), dtype=np.int64)
        idx = np.stack(np.unravel_index(flat, sizes), axis=1)
        codes = np.stack([arrays[i][idx[:, i]] for i in range(len(arrays))], axis=1)
        h, f = codes[:, :nh], codes[:, nh:]
        n1 = _points_over_x(tab1, _horner(tab1, h, xs1), _horner(tab1, f, xs1), four1).sum(axis=1)
        n1 += _points_over_x(tab1, h[:, -1], f[:, -1], four1)
        d = q + 1 - n1
        keep = d % g == 0
        target = q * q + 1 + 2 * g * q - (d * d) // g
        keep &= (d * d) % g == 0
        if not keep.any():
            continue
        sel = np.nonzero(keep)[0]
        h2, f2 = emb[h[sel]], emb[f[sel]]
        n2 = _points_over_x(tab2, _horner(tab2, h2, xs2), _horner(tab2, f2, xs2), four2).sum(axis=1)
        n2 += _points_over_x(tab2, h2[:, -1], f2[:, -1], four2)
        for k in np.nonzero(n2 == target[sel])[0]:
            row = sel[k]
            hits.append((tuple(int(c) for c in codes[row]), int(n1[row]), int(n2[k])))
    return hits
