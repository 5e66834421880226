# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the exponential-sum kernels.

Hot loops only: scalar/batched Kloosterman sums and the triple-loop
reference for the twisted double sum. Kahan-compensated accumulation
keeps the stated <= 1e-9 * modulus exactness claims honest for large
term counts.
"""

from libc.math cimport cos, sin, M_PI
from libc.stdlib cimport free, malloc


cdef long _gcd(long a, long b) nogil:
    cdef long t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef long _inv_mod(long a, long c) nogil:
    # extended Euclid; caller guarantees gcd(a, c) == 1
    cdef long r0 = c, r1 = a % c
    cdef long s0 = 0, s1 = 1
    cdef long q, tmp
    while r1:
        q = r0 / r1
        tmp = r0 - q * r1; r0 = r1; r1 = tmp
        tmp = s0 - q * s1; s0 = s1; s1 = tmp
    if s0 < 0:
        s0 += c
    return s0


cdef struct _Tables:
    long n_units
    long *units
    long *inv
    double *tw_re
    double *tw_im


cdef int _build_tables(long c, _Tables *tab) except -1:
    cdef long a, k, n = 0
    tab.units = <long *> malloc(c * sizeof(long))
    tab.inv = <long *> malloc(c * sizeof(long))
    tab.tw_re = <double *> malloc(c * sizeof(double))
    tab.tw_im = <double *> malloc(c * sizeof(double))
    if not (tab.units and tab.inv and tab.tw_re and tab.tw_im):
        raise MemoryError()
    for a in range(c):
        if _gcd(a, c) == 1:
            tab.units[n] = a
            tab.inv[n] = _inv_mod(a, c)
            n += 1
    tab.n_units = n
    for k in range(c):
        tab.tw_re[k] = cos(2.0 * M_PI * k / c)
        tab.tw_im[k] = sin(2.0 * M_PI * k / c)
    return 0


cdef void _free_tables(_Tables *tab) nogil:
    free(tab.units); free(tab.inv); free(tab.tw_re); free(tab.tw_im)


cdef inline double complex _kloos(long m, long n, _Tables *tab, long c) nogil:
    cdef double sr = 0.0, si = 0.0
    cdef double cr = 0.0, ci = 0.0      # Kahan carries
    cdef double yr, yi, tr, ti
    cdef long j, idx
    for j in range(tab.n_units):
        idx = (m * tab.inv[j] + n * tab.units[j]) % c
        yr = tab.tw_re[idx] - cr
        yi = tab.tw_im[idx] - ci
        tr = sr + yr; cr = (tr - sr) - yr; sr = tr
        ti = si + yi; ci = (ti - si) - yi; si = ti
    return sr + 1j * si


def kloosterman(long m, long n, long c):
    """S(m, n; c) by the defining sum over units mod c."""
    if c == 1:
        return 1.0 + 0.0j
    cdef _Tables tab
    _build_tables(c, &tab)
    cdef double complex out = _kloos(m % c, n % c, &tab, c)
    _free_tables(&tab)
    return out


def kloosterman_batch(ms, ns, long c):
    """S(m, n; c) for paired index sequences at a fixed modulus."""
    cdef Py_ssize_t k, nn = len(ms)
    out = [0j] * nn
    if c == 1:
        for k in range(nn):
            out[k] = 1.0 + 0.0j
        return out
    cdef _Tables tab
    _build_tables(c, &tab)
    cdef long m, n
    for k in range(nn):
        m = ms[k] % c
        n = ns[k] % c
        out[k] = _kloos(m, n, &tab, c)
    _free_tables(&tab)
    return out


def twisted_reference(long c, long mu1, long mu2):
    """Triple-loop reference for the twisted double sum.

    sum_{a,b mod c} S(a(a+mu1), b(b+mu2); c) e_c(-(2ab + mu2 a + mu1 b)),
    with the inner Kloosterman expanded over units: O(c^2 phi(c)).
    """
    if c == 1:
        return 1.0 + 0.0j
    cdef _Tables tab
    _build_tables(c, &tab)
    cdef long a, b, idx
    cdef long mu1m = ((mu1 % c) + c) % c
    cdef long mu2m = ((mu2 % c) + c) % c
    cdef double complex kv
    cdef double sr = 0.0, si = 0.0, cr = 0.0, ci = 0.0
    cdef double yr, yi, tr, ti, pr, pi
    cdef long *ma = <long *> malloc(c * sizeof(long))
    cdef long *nb = <long *> malloc(c * sizeof(long))
    if not (ma and nb):
        _free_tables(&tab)
        raise MemoryError()
    for a in range(c):
        ma[a] = (a * ((a + mu1m) % c)) % c
        nb[a] = (a * ((a + mu2m) % c)) % c
    with nogil:
        for a in range(c):
            for b in range(c):
                kv = _kloos(ma[a], nb[b], &tab, c)
                idx = (2 * a * b + mu2m * a + mu1m * b) % c
                idx = (c - idx) % c
                pr = tab.tw_re[idx]; pi = tab.tw_im[idx]
                yr = kv.real * pr - kv.imag * pi - cr
                yi = kv.real * pi + kv.imag * pr - ci
                tr = sr + yr; cr = (tr - sr) - yr; sr = tr
                ti = si + yi; ci = (ti - si) - yi; si = ti
    free(ma); free(nb)
    _free_tables(&tab)
    return sr + 1j * si
