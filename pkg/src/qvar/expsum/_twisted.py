"""Fast path for the twisted double sum.

For fixed parameters mu1, mu2 and modulus c,

    S_c = sum_{a,b mod c} S(a(a+mu1), b(b+mu2); c) e_c(-(2ab + mu2 a + mu1 b)).

Expanding the Kloosterman sum over units x and collecting the b-sum gives

    S_c = sum_{x unit} sum_a e_c(x a(a+mu1) - mu2 a) * G_x[(2a + mu1) mod c],
    G_x[r] = sum_b e_c(xbar b(b+mu2)) e_c(-r b),

and G_x is one length-c DFT per unit, so the whole evaluation is
O(c^2 log c) instead of the O(c^2 phi(c)) triple loop. Units are processed
in chunks to bound memory at large moduli.
"""

from __future__ import annotations

import numpy as np

from ..errors import ParameterDomainError
from ._ref import unit_table

MAX_MODULUS = 10_000


def twisted_fast(c: int, mu1: int, mu2: int, max_modulus: int = MAX_MODULUS) -> complex:
    if c < 1:
        raise ParameterDomainError("modulus must be >= 1")
    if c > max_modulus:
        raise ParameterDomainError(
            f"modulus {c} above the configured maximum {max_modulus}")
    if c == 1:
        return 1.0 + 0.0j
    mu1 %= c
    mu2 %= c
    units, inv = unit_table(c)
    a = np.arange(c, dtype=np.int64)
    fa = (a * (a + mu1)) % c
    gb = (a * (a + mu2)) % c
    tw = np.exp((2j * np.pi / c) * np.arange(c))
    idx = (2 * a + mu1) % c
    total = 0.0 + 0.0j
    chunk = max(1, min(len(units), 8_000_000 // max(c, 1)))
    for lo in range(0, len(units), chunk):
        x = units[lo:lo + chunk]
        xi = inv[lo:lo + chunk]
        v = tw[(xi[:, None] * gb[None, :]) % c]
        g = np.fft.fft(v, axis=1)            # G[r] = sum_b v_b e^{-2pi i rb/c}
        amat = tw[(x[:, None] * fa[None, :] - mu2 * a[None, :]) % c]
        total += (amat * g[:, idx]).sum()
    return complex(total)
