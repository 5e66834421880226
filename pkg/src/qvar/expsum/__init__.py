"""Exact exponential sums: Kloosterman sums, divisor twists, and the
twisted double sum with its identity ledger.

The modular-arithmetic kernels have two interchangeable backends: a
compiled extension (built from _core.pyx) and a numpy fallback (_ref.py).
Selection happens here at import time; set QVAR_NO_EXTENSION=1 to force
the fallback. benchmarks/bench_expsum.py compares the two.
"""

from __future__ import annotations

import math
import os

import numpy as np

from ..errors import ParameterDomainError
from . import _ref
from ._twisted import MAX_MODULUS, twisted_fast

if os.environ.get("QVAR_NO_EXTENSION"):
    _impl = _ref
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _impl = _ref
        BACKEND = "python"


def kloosterman(m: int, n: int, c: int) -> complex:
    """S(m, n; c) = sum over ad = 1 mod c of e((dm + an)/c); S(m,n;1) = 1."""
    if c < 1:
        raise ParameterDomainError("modulus must be >= 1")
    return complex(_impl.kloosterman(int(m), int(n), int(c)))


def kloosterman_batch(ms, ns, c: int) -> np.ndarray:
    """Vector of S(m_k, n_k; c) sharing one unit/inverse table."""
    if c < 1:
        raise ParameterDomainError("modulus must be >= 1")
    out = _impl.kloosterman_batch([int(m) for m in ms], [int(n) for n in ns],
                                  int(c))
    return np.asarray(out, dtype=complex)


def d_it(n: int, t: float) -> complex:
    """Divisor twist sum over d1 d2 = n of (d1/d2)^{it}; real by pairing."""
    if n < 1:
        raise ParameterDomainError("n must be >= 1")
    total = 0.0
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d:
            continue
        e = n // d
        if d == e:
            total += 1.0
        else:
            # (d/e)^{it} + (e/d)^{it} = 2 cos(t log(e/d))
            total += 2.0 * math.cos(t * math.log(e / d))
    return complex(total, 0.0)


def twisted_sum_sc(c: int, mu1: int, mu2: int,
                   max_modulus: int = MAX_MODULUS) -> complex:
    """Fast evaluation of the twisted double sum S_c(mu1, mu2)."""
    return twisted_fast(int(c), int(mu1), int(mu2), max_modulus=max_modulus)


def twisted_sum_reference(c: int, mu1: int, mu2: int) -> complex:
    """Independent triple-loop evaluation of the same sum (the oracle)."""
    if c < 1:
        raise ParameterDomainError("modulus must be >= 1")
    return complex(_impl.twisted_reference(int(c), int(mu1), int(mu2)))


def weil_bound(m: int, n: int, c: int) -> float:
    """tau(c) * gcd(m, n, c)^(1/2) * c^(1/2)."""
    tau = sum(1 for d in range(1, c + 1) if c % d == 0)
    g = math.gcd(math.gcd(abs(m), abs(n)), c)
    if g == 0:
        g = c
    return tau * math.sqrt(g) * math.sqrt(c)


from .identities import (  # noqa: E402
    IdentityCheck,
    identity_descent,
    identity_prime_level_vanish,
    identity_scale,
    identity_swap,
    identity_vanish,
)

__all__ = [
    "BACKEND",
    "MAX_MODULUS",
    "IdentityCheck",
    "d_it",
    "identity_descent",
    "identity_prime_level_vanish",
    "identity_scale",
    "identity_swap",
    "identity_vanish",
    "kloosterman",
    "kloosterman_batch",
    "twisted_sum_reference",
    "twisted_sum_sc",
    "weil_bound",
]
