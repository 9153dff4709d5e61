# cython: boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled versions of the loops in ``_kernels_py``; same signatures, same results."""
cimport cython
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy
from libcpp.vector cimport vector

from . import _kernels_py as _py


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _parity(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x) & 1


def symmetrize_dn(dict terms, int n, list perms, list perm_signs, list sign_masks):
    cdef Py_ssize_t nperm = len(perms)
    cdef Py_ssize_t nmask = len(sign_masks)
    cdef int *parr = <int *> malloc(max(nperm * n, 1) * sizeof(int))
    cdef int *psgn = <int *> malloc(max(nperm, 1) * sizeof(int))
    cdef uint64_t *masks = <uint64_t *> malloc(max(nmask, 1) * sizeof(uint64_t))
    cdef Py_ssize_t k, i
    cdef uint64_t odd
    cdef long eps_sum
    cdef dict out = {}
    cdef list b
    cdef tuple m
    if parr == NULL or psgn == NULL or masks == NULL:
        free(parr); free(psgn); free(masks)
        raise MemoryError()
    try:
        for k in range(nperm):
            p = perms[k]
            for i in range(n):
                parr[k * n + i] = p[i]
            psgn[k] = perm_signs[k]
        for k in range(nmask):
            masks[k] = sign_masks[k]
        for m, c in terms.items():
            odd = 0
            for i in range(n):
                if (<long> m[i]) & 1:
                    odd |= (<uint64_t> 1) << i
            eps_sum = 0
            for k in range(nmask):
                eps_sum += 1 - 2 * _parity(masks[k] & odd)
            if eps_sum == 0:
                continue
            coef = c * eps_sum
            neg = -coef
            for k in range(nperm):
                b = [0] * n
                for i in range(n):
                    b[parr[k * n + i]] = m[i]
                key = tuple(b)
                val = out.get(key, 0) + (coef if psgn[k] > 0 else neg)
                out[key] = val
    finally:
        free(parr); free(psgn); free(masks)
    return {key: v for key, v in out.items() if v}


def linear_fold_multilinear(factors, int n):
    try:
        return _fold_i64(factors, n)
    except OverflowError:
        return _fold_obj(factors, n)


@cython.overflowcheck(True)
cdef list _fold_i64(factors, int n):
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef int64_t *cur = <int64_t *> malloc(size * sizeof(int64_t))
    cdef int64_t *nxt = <int64_t *> malloc(size * sizeof(int64_t))
    cdef int64_t *coef = <int64_t *> malloc(max(n, 1) * sizeof(int64_t))
    cdef int64_t *tmp
    cdef int64_t v, t
    cdef Py_ssize_t mask, j
    cdef int i
    if cur == NULL or nxt == NULL or coef == NULL:
        free(cur); free(nxt); free(coef)
        raise MemoryError()
    try:
        for mask in range(size):
            cur[mask] = 0
        cur[0] = 1
        for f in factors:
            for i in range(n):
                coef[i] = f[i]
            memcpy(nxt, cur, size * sizeof(int64_t))
            for mask in range(size):
                v = cur[mask]
                if v == 0:
                    continue
                for i in range(n):
                    if coef[i] != 0 and not (mask >> i) & 1:
                        j = mask | ((<Py_ssize_t> 1) << i)
                        t = coef[i] * v
                        nxt[j] = nxt[j] + t
            tmp = cur
            cur = nxt
            nxt = tmp
        return [cur[mask] for mask in range(size)]
    finally:
        free(cur); free(nxt); free(coef)


cdef list _fold_obj(factors, int n):
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << n
    cdef Py_ssize_t mask, bit
    cdef list cur = [0] * size
    cdef list nxt
    cdef list active
    cur[0] = 1
    for f in factors:
        nxt = list(cur)
        active = [((<Py_ssize_t> 1) << i, c) for i, c in enumerate(f) if c]
        for mask in range(size):
            v = cur[mask]
            if not v:
                continue
            for bit, c in active:
                if not mask & bit:
                    nxt[mask | bit] += c * v
        cur = nxt
    return cur


def linear_product(factors, int n, long max_degree=-1):
    b = _py.packing_width(factors, n)
    if (n + 1) * b > 63:
        return _py.linear_product(factors, n, max_degree)
    try:
        packed = _linear_product_i64(factors, n, b, max_degree)
    except OverflowError:
        return _py.linear_product(factors, n, max_degree)
    return {_py.unpack(k, n, b): v for k, v in packed.items()}


@cython.overflowcheck(True)
cdef void _merge_shifted(
    vector[uint64_t]& ak, vector[int64_t]& av,
    vector[uint64_t]& bk, vector[int64_t]& bv,
    uint64_t shift, int64_t c, uint64_t degmask, long cap,
    vector[uint64_t]& ok, vector[int64_t]& ov,
) except *:
    # ok/ov <- (ak, av) + c * (bk + shift, bv), both inputs sorted by key
    cdef size_t i = 0, j = 0
    cdef size_t na = ak.size(), nb = bk.size()
    cdef uint64_t kb
    cdef int64_t t
    ok.clear()
    ov.clear()
    while j < nb and <long> (bk[j] & degmask) >= cap:
        j += 1
    while i < na or j < nb:
        if j < nb:
            kb = bk[j] + shift
        if j >= nb or (i < na and ak[i] < kb):
            ok.push_back(ak[i])
            ov.push_back(av[i])
            i += 1
        elif i >= na or kb < ak[i]:
            t = c * bv[j]
            ok.push_back(kb)
            ov.push_back(t)
            j += 1
        else:
            t = c * bv[j]
            t = av[i] + t
            if t != 0:
                ok.push_back(kb)
                ov.push_back(t)
            i += 1
            j += 1
        while j < nb and <long> (bk[j] & degmask) >= cap:
            j += 1


cdef dict _linear_product_i64(factors, int n, int b, long max_degree):
    cdef vector[uint64_t] ck, ak, tk
    cdef vector[int64_t] cv, av, tv
    cdef uint64_t degmask = ((<uint64_t> 1) << b) - 1
    cdef uint64_t shift
    cdef long cap = max_degree if max_degree >= 0 else len(factors)
    cdef size_t a
    cdef int i
    cdef int64_t c
    ck.push_back(0)
    cv.push_back(1)
    for f in factors:
        ak = ck
        av = cv
        for i in range(n):
            c = f[i]
            if c == 0:
                continue
            shift = ((<uint64_t> 1) << (b * (i + 1))) | 1
            _merge_shifted(ak, av, ck, cv, shift, c, degmask, cap, tk, tv)
            ak.swap(tk)
            av.swap(tv)
        ck.swap(ak)
        cv.swap(av)
    out = {}
    for a in range(ck.size()):
        if cv[a] != 0:
            out[ck[a]] = cv[a]
    return out
