"""Shared quadrature primitives.

All routines take vectorised integrands: ``f`` maps an ndarray of nodes to
an ndarray of values (real or complex). Three rules cover everything the
package needs:

* composite Gauss-Legendre for smooth integrands on finite intervals,
* double-exponential (tanh-sinh / exp-sinh) rules for endpoint
  singularities and semi-infinite ranges with exponential decay,
* a Filon rule (Legendre interpolation against exact e^{i omega x}
  moments) for strongly oscillatory factors.
"""

from __future__ import annotations

import numpy as np
from scipy.special import spherical_jn

from .errors import AccuracyError

_leggauss_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def leggauss(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Cached Gauss-Legendre nodes/weights on [-1, 1]."""
    try:
        return _leggauss_cache[n]
    except KeyError:
        x, w = np.polynomial.legendre.leggauss(n)
        _leggauss_cache[n] = (x, w)
        return x, w


def gl_nodes(a: float, b: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights mapped to [a, b]."""
    x, w = leggauss(n)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return mid + half * x, half * w


def gl_panels(f, a: float, b: float, n_panels: int, n_nodes: int = 16):
    """Composite Gauss-Legendre integral of ``f`` over [a, b]."""
    if b <= a:
        return 0.0
    edges = np.linspace(a, b, n_panels + 1)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        x, w = gl_nodes(lo, hi, n_nodes)
        total = total + np.dot(f(x), w)
    return total


def tanh_sinh(f, a: float, b: float, abs_tol: float = 1e-12,
              rel_tol: float = 1e-10, max_level: int = 11):
    """Integrate f over (a, b); tolerates algebraic endpoint singularities.

    Standard tanh-sinh rule: x = mid + half*tanh(pi/2 sinh u) on a
    doubling trapezoid ladder in u. Raises AccuracyError if the ladder
    is exhausted before the two finest levels agree.
    """
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    u_max = 3.8
    prev = None
    for level in range(3, max_level + 1):
        n = 2 ** level
        u = np.linspace(-u_max, u_max, 2 * n + 1)
        su = np.sinh(u) * (np.pi / 2)
        x = mid + half * np.tanh(su)
        w = (u[1] - u[0]) * half * (np.pi / 2) * np.cosh(u) / np.cosh(su) ** 2
        inside = (x > a) & (x < b) & (w > 0)
        val = np.dot(f(x[inside]), w[inside])
        if prev is not None:
            err = abs(val - prev)
            if err <= max(abs_tol, rel_tol * abs(val)):
                return val
        prev = val
    raise AccuracyError("tanh-sinh ladder exhausted",
                        achieved=abs(val - prev) if prev is not None else None,
                        value=val)


def exp_sinh(f, abs_tol: float = 1e-12, rel_tol: float = 1e-10,
             max_level: int = 12, scale: float = 1.0):
    """Integrate f over (0, inf) for integrands with exponential decay.

    Uses x = scale*exp(pi/2 sinh u); handles algebraic behaviour at 0.
    ``scale`` should sit roughly where the integrand mass is.
    """
    u_lo, u_hi = -3.7, 3.7
    prev = None
    for level in range(4, max_level + 1):
        n = 2 ** level
        u = np.linspace(u_lo, u_hi, n + 1)
        su = np.sinh(u) * (np.pi / 2)
        x = scale * np.exp(su)
        w = (u[1] - u[0]) * x * (np.pi / 2) * np.cosh(u)
        ok = (x > 0) & np.isfinite(x)
        val = np.dot(f(x[ok]), w[ok])
        if prev is not None:
            err = abs(val - prev)
            if err <= max(abs_tol, rel_tol * abs(val)):
                return val
        prev = val
    raise AccuracyError("exp-sinh ladder exhausted",
                        achieved=abs(val - prev) if prev is not None else None,
                        value=val)


def legendre_moments(omega: float, degree: int) -> np.ndarray:
    """Moments M_n = int_{-1}^{1} P_n(u) e^{i omega u} du, n = 0..degree.

    Known closed form M_n = 2 i^n j_n(omega) with j_n the spherical Bessel
    function; exact for any omega including 0.
    """
    n = np.arange(degree + 1)
    return 2.0 * (1j ** n) * spherical_jn(n, abs(omega)) * np.where(
        np.asarray(omega) >= 0, 1.0, (-1.0) ** n)


def filon_panels(slow, omega: float, a: float, b: float,
                 degree: int = 8, cycles_per_panel: float = 0.75,
                 min_panels: int = 4, max_panels: int = 200000):
    """Integral of slow(x) * e^{i omega x} over [a, b].

    Per panel the slow factor is projected on Legendre polynomials from
    Gauss-Legendre samples and integrated against exact oscillatory
    moments, so the node count is set by the slow part, not by omega.
    """
    if b <= a:
        return 0.0 + 0.0j
    width = b - a
    n_cycles = abs(omega) * width / (2 * np.pi)
    n_panels = int(max(min_panels, np.ceil(n_cycles / cycles_per_panel)))
    if n_panels > max_panels:
        raise AccuracyError(
            f"filon rule would need {n_panels} panels (> {max_panels})")
    edges = np.linspace(a, b, n_panels + 1)
    xg, wg = leggauss(degree + 1)
    # Legendre vandermonde at the GL nodes, used to project the samples.
    pvals = np.polynomial.legendre.legvander(xg, degree)            # (q, deg+1)
    proj = (pvals * wg[:, None]).T * (np.arange(degree + 1)[:, None] + 0.5)
    total = 0.0 + 0.0j
    for lo, hi in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        sv = np.asarray(slow(mid + half * xg), dtype=complex)
        coef = proj @ sv
        mom = legendre_moments(omega * half, degree)
        total += half * np.exp(1j * omega * mid) * np.dot(coef, mom)
    return total
