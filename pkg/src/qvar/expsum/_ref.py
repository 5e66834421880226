"""Pure numpy backend for the exponential-sum kernels.

Same contract as the compiled extension in _core.pyx; selected at import
time when the extension is unavailable (or QVAR_NO_EXTENSION is set).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=128)
def unit_table(c: int) -> tuple[np.ndarray, np.ndarray]:
    """Units mod c and their inverses, cached per modulus."""
    a = np.arange(c, dtype=np.int64)
    units = np.flatnonzero(np.gcd(a, c) == 1)
    inv = np.array([pow(int(u), -1, c) for u in units], dtype=np.int64)
    return units, inv


def kloosterman(m: int, n: int, c: int) -> complex:
    if c == 1:
        return 1.0 + 0.0j
    units, inv = unit_table(c)
    ph = (int(m) % c * inv + int(n) % c * units) % c
    z = np.exp((2j * np.pi / c) * ph)
    return complex(z.sum())


def kloosterman_batch(ms, ns, c: int) -> np.ndarray:
    """S(m, n; c) for paired arrays of m, n at a fixed modulus."""
    ms = np.asarray(ms, dtype=np.int64) % c
    ns = np.asarray(ns, dtype=np.int64) % c
    if c == 1:
        return np.ones(len(ms), dtype=complex)
    units, inv = unit_table(c)
    tw = np.exp((2j * np.pi / c) * np.arange(c))
    ph = (ms[:, None] * inv[None, :] + ns[:, None] * units[None, :]) % c
    return tw[ph].sum(axis=1)


def twisted_reference(c: int, mu1: int, mu2: int) -> complex:
    """Triple-sum reference for the twisted double sum, vectorised.

    Literally sum_{a,b mod c} S(a(a+mu1), b(b+mu2); c) e_c(-(2ab + mu2 a
    + mu1 b)); the Kloosterman values are expanded over units so the work
    is O(c^2 phi(c)) like the scalar triple loop.
    """
    if c == 1:
        return 1.0 + 0.0j
    tw = np.exp((2j * np.pi / c) * np.arange(c))
    a = np.arange(c, dtype=np.int64)
    ma = (a * (a + mu1)) % c
    nb = (a * (a + mu2)) % c
    um, ia = np.unique(ma, return_inverse=True)
    un, ib = np.unique(nb, return_inverse=True)
    units, inv = unit_table(c)
    ktab = np.zeros((len(um), len(un)), dtype=complex)
    for x, xi in zip(units, inv):
        ktab += tw[(np.add.outer(xi * um % c, x * un % c)) % c]
    phase = tw[(-(2 * np.outer(a, a) + mu2 * a[:, None] + mu1 * a[None, :])) % c]
    return complex((ktab[np.ix_(ia, ib)] * phase).sum())
