# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels; drop-in replacement for ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()

BACKEND = "cython"


cdef struct Tab:
    int64_t q
    int64_t m
    int64_t p
    int64_t* exp
    int64_t* log
    int64_t* zech
    int64_t* chi
    int64_t* trace


cdef class _Holder:
    # keeps the numpy buffers alive while raw pointers are in use
    cdef object exp, log, zech, chi, trace
    cdef Tab t

    def __init__(self, tab):
        self.exp = np.ascontiguousarray(tab.exp, dtype=np.int64)
        self.log = np.ascontiguousarray(tab.log, dtype=np.int64)
        self.zech = np.ascontiguousarray(tab.zech, dtype=np.int64)
        dummy = np.zeros(tab.q, dtype=np.int64)
        self.chi = np.ascontiguousarray(tab.chi if tab.chi is not None else dummy, dtype=np.int64)
        self.trace = np.ascontiguousarray(tab.trace if tab.trace is not None else dummy, dtype=np.int64)
        self.t.q = tab.q
        self.t.m = tab.q - 1
        self.t.p = tab.p
        self.t.exp = <int64_t*> cnp.PyArray_DATA(self.exp)
        self.t.log = <int64_t*> cnp.PyArray_DATA(self.log)
        self.t.zech = <int64_t*> cnp.PyArray_DATA(self.zech)
        self.t.chi = <int64_t*> cnp.PyArray_DATA(self.chi)
        self.t.trace = <int64_t*> cnp.PyArray_DATA(self.trace)


cdef inline int64_t _mod(int64_t a, int64_t m) nogil:
    cdef int64_t r = a % m
    if r < 0:
        r += m
    return r


cdef inline int64_t fmul(Tab* t, int64_t a, int64_t b) nogil:
    if a == 0 or b == 0:
        return 0
    return t.exp[(t.log[a] + t.log[b]) % t.m]


cdef inline int64_t fadd(Tab* t, int64_t a, int64_t b) nogil:
    cdef int64_t la, z
    if t.p == 2:
        return a ^ b
    if a == 0:
        return b
    if b == 0:
        return a
    la = t.log[a]
    z = t.zech[_mod(t.log[b] - la, t.m)]
    if z < 0:
        return 0
    return t.exp[(la + z) % t.m]


cdef inline int64_t horner(Tab* t, int64_t* c, int n, int64_t x) nogil:
    cdef int64_t acc = 0
    cdef int j
    for j in range(n - 1, -1, -1):
        acc = fadd(t, fmul(t, acc, x), c[j])
    return acc


cdef inline int64_t pts(Tab* t, int64_t hv, int64_t fv, int64_t four) nogil:
    # number of y with y^2 + h y = f
    cdef int64_t s
    if t.p == 2:
        if hv == 0:
            return 1
        if fv == 0:
            return 2
        s = t.exp[_mod(t.log[fv] - 2 * t.log[hv], t.m)]
        return 2 - 2 * t.trace[s]
    return 1 + t.chi[fadd(t, fmul(t, hv, hv), fmul(t, four, fv))]


def poly_values(tab, coeffs):
    cdef _Holder H = _Holder(tab)
    cdef cnp.ndarray[int64_t, ndim=1] c = np.ascontiguousarray(list(coeffs) or [0], dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] out = np.empty(tab.q, dtype=np.int64)
    cdef int64_t x
    cdef int n = c.shape[0]
    for x in range(H.t.q):
        out[x] = horner(&H.t, &c[0], n, x)
    return out


def hyperelliptic_affine(tab, h, f, int64_t four):
    cdef _Holder H = _Holder(tab)
    cdef cnp.ndarray[int64_t, ndim=1] hc = np.ascontiguousarray(list(h) or [0], dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] fc = np.ascontiguousarray(list(f) or [0], dtype=np.int64)
    cdef int64_t x, total = 0
    cdef int nh = hc.shape[0], nf = fc.shape[0]
    with nogil:
        for x in range(H.t.q):
            total += pts(&H.t, horner(&H.t, &hc[0], nh, x), horner(&H.t, &fc[0], nf, x), four)
    return int(total)


cdef int64_t _eval_mono(Tab* t, int64_t* c, int64_t* ex, int64_t* ey, int n,
                        int64_t x, int64_t y) nogil:
    cdef int64_t acc = 0, lg, lx = t.log[x], ly = t.log[y]
    cdef int k
    for k in range(n):
        if c[k] == 0:
            continue
        if (ex[k] and x == 0) or (ey[k] and y == 0):
            continue
        lg = t.log[c[k]]
        if ex[k]:
            lg += ex[k] * lx
        if ey[k]:
            lg += ey[k] * ly
        acc = fadd(t, acc, t.exp[lg % t.m])
    return acc


def plane_affine(tab, coeffs, ex, ey):
    cdef _Holder H = _Holder(tab)
    cdef cnp.ndarray[int64_t, ndim=1] c = np.ascontiguousarray(list(coeffs) or [0], dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] a = np.ascontiguousarray(list(ex) or [0], dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] b = np.ascontiguousarray(list(ey) or [0], dtype=np.int64)
    cdef int n = len(coeffs)
    cdef int64_t x, y, total = 0
    if n == 0:
        return int(H.t.q * H.t.q)
    with nogil:
        for y in range(H.t.q):
            for x in range(H.t.q):
                if _eval_mono(&H.t, &c[0], &a[0], &b[0], n, x, y) == 0:
                    total += 1
    return int(total)


def plane_common_zero(tab, polys):
    cdef _Holder H = _Holder(tab)
    cdef list cs = [], as_ = [], bs = []
    for coeffs, ex, ey in polys:
        cs.append(np.ascontiguousarray(list(coeffs) or [0], dtype=np.int64))
        as_.append(np.ascontiguousarray(list(ex) or [0], dtype=np.int64))
        bs.append(np.ascontiguousarray(list(ey) or [0], dtype=np.int64))
    cdef int npoly = len(cs), k
    cdef cnp.ndarray[int64_t, ndim=1] sizes = np.array([len(p[0]) for p in polys] or [0], dtype=np.int64)
    # flatten into one buffer with offsets
    cdef cnp.ndarray[int64_t, ndim=1] C = np.concatenate(cs) if cs else np.zeros(1, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] A = np.concatenate(as_) if cs else np.zeros(1, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] B = np.concatenate(bs) if cs else np.zeros(1, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] off = np.zeros(max(npoly, 1), dtype=np.int64)
    cdef int64_t acc = 0
    for k in range(npoly):
        off[k] = acc
        acc += len(cs[k])
    cdef int64_t x, y
    cdef bint ok
    for y in range(H.t.q):
        for x in range(H.t.q):
            ok = True
            for k in range(npoly):
                if sizes[k] and _eval_mono(&H.t, &C[off[k]], &A[off[k]], &B[off[k]],
                                          <int> sizes[k], x, y) != 0:
                    ok = False
                    break
            if ok:
                return int(x), int(y)
    return None


def genus2_scan(tab1, tab2, emb, choices, int genus, int64_t four1, int64_t four2):
    cdef _Holder H1 = _Holder(tab1)
    cdef _Holder H2 = _Holder(tab2)
    cdef cnp.ndarray[int64_t, ndim=1] E = np.ascontiguousarray(emb, dtype=np.int64)
    cdef int npos = len(choices)
    cdef int nh = genus + 2
    cdef int nf = npos - nh
    cdef cnp.ndarray[int64_t, ndim=1] sizes = np.array([len(c) for c in choices], dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] offs = np.zeros(npos, dtype=np.int64)
    cdef int i
    for i in range(1, npos):
        offs[i] = offs[i - 1] + sizes[i - 1]
    cdef cnp.ndarray[int64_t, ndim=1] flat = np.ascontiguousarray(
        np.concatenate([np.asarray(c, dtype=np.int64) for c in choices]), dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] ctr = np.zeros(npos, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] code = np.zeros(npos, dtype=np.int64)
    cdef cnp.ndarray[int64_t, ndim=1] code2 = np.zeros(npos, dtype=np.int64)
    cdef int64_t q = H1.t.q, q2 = H2.t.q
    cdef int64_t x, n1, n2, d, target
    cdef int g = genus
    cdef list hits = []
    cdef list row
    for i in range(npos):
        if sizes[i] == 0:
            return hits
        code[i] = flat[offs[i]]
    while True:
        n1 = pts(&H1.t, code[nh - 1], code[npos - 1], four1)
        for x in range(q):
            n1 += pts(&H1.t, horner(&H1.t, &code[0], nh, x),
                      horner(&H1.t, &code[nh], nf, x), four1)
        d = q + 1 - n1
        if d % g == 0:
            target = q * q + 1 + 2 * g * q - (d * d) // g
            for i in range(npos):
                code2[i] = E[code[i]]
            n2 = pts(&H2.t, code2[nh - 1], code2[npos - 1], four2)
            for x in range(q2):
                n2 += pts(&H2.t, horner(&H2.t, &code2[0], nh, x),
                          horner(&H2.t, &code2[nh], nf, x), four2)
                if n2 > target:
                    break
            if n2 == target:
                row = []
                for i in range(npos):
                    row.append(int(code[i]))
                hits.append((tuple(row), int(n1), int(n2)))
        # mixed-radix increment
        i = npos - 1
        while i >= 0:
            ctr[i] += 1
            if ctr[i] < sizes[i]:
                code[i] = flat[offs[i] + ctr[i]]
                break
            ctr[i] = 0
            code[i] = flat[offs[i]]
            i -= 1
        if i < 0:
            break
    return hits
