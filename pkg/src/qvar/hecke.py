"""Exact Hecke-operator algebra.

Everything here is exact arithmetic: eigenvalue multiplicativity,
symmetric-square coefficient transforms, lift coefficients for the
degree-3 Rankin-Selberg series, the Hecke action on Poincare-series
atoms, and cusp-form dimensions. Eigenvalue maps are finite and every
operation states the index range it needs; going past the range raises
instead of extrapolating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InsufficientRangeError, ParameterDomainError


def divisors(n: int) -> list[int]:
    """Sorted divisors of n >= 1."""
    if n < 1:
        raise ParameterDomainError("divisors needs n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division; n >= 1."""
    if n < 1:
        raise ParameterDomainError("factorize needs n >= 1")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


gcd = math.gcd


def primes_up_to(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1) if n >= 0 else bytearray()
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for q in range(p * p, n + 1, p):
                sieve[q] = 0
    return out


# ---------------------------------------------------------------------------
# Eigenvalue maps


class HeckeEigenvalueMap:
    """Finite map n -> lambda(n), 1 <= n <= n_max.

    Values may be floats or Fractions; all algebra works for either.
    Indexing past n_max raises InsufficientRangeError rather than
    extrapolating.
    """

    def __init__(self, values: dict, n_max: int):
        if n_max < 1:
            raise ParameterDomainError("n_max must be >= 1")
        self.n_max = int(n_max)
        self.values = dict(values)
        one = self.values.get(1)
        if one is None or one != 1:
            raise ParameterDomainError("an eigenvalue map needs lambda(1) = 1")

    def __getitem__(self, n: int):
        try:
            return self.values[n]
        except KeyError:
            raise InsufficientRangeError(
                f"eigenvalue lambda({n}) not available (n_max = {self.n_max})",
                needed=n, available=self.n_max) from None

    def __contains__(self, n: int) -> bool:
        return n in self.values

    @classmethod
    def from_prime_values(cls, prime_values: dict, n_max: int) -> "HeckeEigenvalueMap":
        """Extend lambda(p) multiplicatively with the Hecke recursion.

        lambda(p^(r+1)) = lambda(p) lambda(p^r) - lambda(p^(r-1)), and
        lambda multiplicative across coprime prime powers.
        """
        vals: dict = {1: 1}
        for p in primes_up_to(n_max):
            if p not in prime_values:
                raise ParameterDomainError(f"missing seed eigenvalue at p = {p}")
            lp = prime_values[p]
            prev, cur = vals[1], lp
            q = p
            while q <= n_max:
                vals[q] = cur
                prev, cur = cur, lp * cur - prev
                q *= p
        for n in range(2, n_max + 1):
            if n not in vals:
                acc = vals[1]
                for p, e in factorize(n).items():
                    acc = acc * vals[p ** e]
                vals[n] = acc
        return cls(vals, n_max)

    def multiplicativity_residual(self, n: int, m: int) -> float:
        """|lambda(n) lambda(m) - sum over d | (n,m) of lambda(nm/d^2)|."""
        lhs = self[n] * self[m]
        rhs = sum(self[(n * m) // (d * d)] for d in divisors(gcd(n, m)))
        return abs(float(lhs - rhs))


def hecke_product_expand(n: int, m: int) -> list[tuple[int, int]]:
    """Index set of the multiplicativity relation: (d, nm/d^2) over d | (n, m)."""
    if n < 1 or m < 1:
        raise ParameterDomainError("indices must be >= 1")
    return [(d, (n * m) // (d * d)) for d in divisors(gcd(n, m))]


# ---------------------------------------------------------------------------
# Symmetric-square and lift coefficients


def sym2_coeffs(lam: HeckeEigenvalueMap, n_max: int) -> dict:
    """Dirichlet coefficients rho(n) = sum over m l^2 = n of lambda(m^2).

    Needs lambda up to n_max^2.
    """
    if lam.n_max < n_max * n_max:
        raise InsufficientRangeError(
            "sym2 coefficients need lambda up to n_max^2",
            needed=n_max * n_max, available=lam.n_max)
    out = {}
    for n in range(1, n_max + 1):
        acc = None
        l = 1
        while l * l <= n:
            if n % (l * l) == 0:
                m = n // (l * l)
                term = lam[m * m]
                acc = term if acc is None else acc + term
            l += 1
        out[n] = acc
    return out


def sym2_invert(rho: dict) -> dict:
    """Recover n -> lambda(n^2) from rho via Mobius inversion over squares."""
    out = {}
    for n in rho:
        acc = None
        l = 1
        while l * l <= n:
            if n % (l * l) == 0:
                term = mobius(l) * rho[n // (l * l)]
                acc = term if acc is None else acc + term
            l += 1
        out[n] = acc
    return out


def gj_lambda(lam: HeckeEigenvalueMap, r: int):
    """Row coefficient of the degree-3 lift: sum over s^2 t = r of lambda(t^2)."""
    acc = None
    s = 1
    while s * s <= r:
        if r % (s * s) == 0:
            t = r // (s * s)
            term = lam[t * t]
            acc = term if acc is None else acc + term
        s += 1
    return acc


def gj_coeffs(lam: HeckeEigenvalueMap, m1: int, m2: int):
    """Fourier coefficient a(m1, m2) of the degree-3 lift.

    a(m1, m2) = sum over d | (m1, m2) of mu(d) lambda_lift(m1/d) lambda_lift(m2/d);
    needs lambda up to max(m1, m2)^2.
    """
    need = max(m1, m2) ** 2
    if lam.n_max < need:
        raise InsufficientRangeError("lift coefficients need lambda up to max(m)^2",
                                     needed=need, available=lam.n_max)
    acc = None
    for d in divisors(gcd(m1, m2)):
        mu = mobius(d)
        if mu == 0:
            continue
        term = mu * gj_lambda(lam, m1 // d) * gj_lambda(lam, m2 // d)
        acc = term if acc is None else acc + term
    return acc


def random_eigenvalue_map(rng, n_max: int, exact: bool = False) -> HeckeEigenvalueMap:
    """Multiplicative map with lambda(p) drawn uniformly from [-2, 2].

    With exact=True the seeds are Fractions on a 1/64 grid so every
    derived value is exact rational arithmetic.
    """
    seeds: dict = {}
    for p in primes_up_to(n_max):
        if exact:
            seeds[p] = Fraction(int(rng.integers(-128, 129)), 64)
        else:
            seeds[p] = float(rng.uniform(-2.0, 2.0))
    return HeckeEigenvalueMap.from_prime_values(seeds, n_max)


# ---------------------------------------------------------------------------
# Poincare atoms and the Hecke action

KIND_HOLOMORPHIC = "holomorphic"
KIND_INCOMPLETE = "incomplete"
KIND_EISENSTEIN = "eisenstein"


@dataclass(frozen=True)
class PoincareAtom:
    """One Poincare-series observable.

    kind: holomorphic, incomplete (weight 2k with a kernel), or eisenstein
    (the m = 0 incomplete case). ``dilation`` records kernel rescaling
    h(y) -> h(dilation * y) accumulated by Hecke operators; it is exact
    (a Fraction) so combos compare exactly. For holomorphic atoms the
    dilation is carried but meaningless (frequency holds the scaling).
    """

    kind: str
    weight: int
    m: int
    dilation: Fraction = Fraction(1)
    coefficient: float = 1.0

    def __post_init__(self):
        if self.kind not in (KIND_HOLOMORPHIC, KIND_INCOMPLETE, KIND_EISENSTEIN):
            raise ParameterDomainError(f"unknown atom kind {self.kind!r}")
        if (self.kind == KIND_EISENSTEIN) != (self.m == 0):
            raise ParameterDomainError("eisenstein atoms are exactly the m = 0 ones")
        if self.dilation <= 0:
            raise ParameterDomainError("dilation must be positive")

    def key(self):
        return (self.kind, self.weight, self.m, self.dilation)


@dataclass
class HeckeCombo:
    """Finite formal combination of atoms; zero coefficients pruned."""

    atoms: list[PoincareAtom] = field(default_factory=list)

    @classmethod
    def from_atom(cls, atom: PoincareAtom) -> "HeckeCombo":
        return cls([atom])

    def merged(self) -> "HeckeCombo":
        acc: dict = {}
        for a in self.atoms:
            acc[a.key()] = acc.get(a.key(), 0.0) + a.coefficient
        out = [PoincareAtom(k[0], k[1], k[2], k[3], coefficient=v)
               for k, v in acc.items() if v != 0.0]
        return HeckeCombo(out)

    def scaled(self, factor: float) -> "HeckeCombo":
        return HeckeCombo([PoincareAtom(a.kind, a.weight, a.m, a.dilation,
                                        a.coefficient * factor)
                           for a in self.atoms])

    def __add__(self, other: "HeckeCombo") -> "HeckeCombo":
        return HeckeCombo(self.atoms + other.atoms).merged()

    def as_dict(self) -> dict:
        return {a.key(): a.coefficient for a in self.merged().atoms}

    def allclose(self, other: "HeckeCombo", rel: float = 1e-12) -> bool:
        da, db = self.as_dict(), other.as_dict()
        keys = set(da) | set(db)
        for k in keys:
            x, y = da.get(k, 0.0), db.get(k, 0.0)
            if abs(x - y) > rel * max(1.0, abs(x), abs(y)):
                return False
        return True


def hecke_on_atom(atom: PoincareAtom, n: int) -> HeckeCombo:
    """Action of the n-th Hecke operator on a single atom.

    Holomorphic: T_n P_{m,k} = sum over d | (m,n) of (n/d)^(k-1) P_{mn/d^2, k};
    when the new frequency would need p | m and does not have it, the term
    simply is not generated (the convention that those atoms vanish).

    Weight-0 style (incomplete and eisenstein): T_n P_{h,m} = sum over
    d | (m,n) of (d^2/n)^(1/2) P_{h(n y / d^2), mn/d^2}; the kernel
    dilation multiplies by n/d^2.
    """
    if n < 1:
        raise ParameterDomainError("Hecke index must be >= 1")
    common = divisors(gcd(atom.m, n)) if atom.m != 0 else divisors(n)
    out = []
    for d in common:
        new_m = (atom.m * n) // (d * d)
        if atom.kind == KIND_HOLOMORPHIC:
            coeff = float(n // d) ** (atom.weight - 1)
            out.append(PoincareAtom(atom.kind, atom.weight, new_m, atom.dilation,
                                    atom.coefficient * coeff))
        else:
            coeff = math.sqrt(d * d / n)
            kind = KIND_EISENSTEIN if new_m == 0 else KIND_INCOMPLETE
            out.append(PoincareAtom(kind, atom.weight, new_m,
                                    atom.dilation * Fraction(n, d * d),
                                    atom.coefficient * coeff))
    return HeckeCombo(out).merged()


def hecke_on_combo(combo: HeckeCombo, n: int) -> HeckeCombo:
    acc = HeckeCombo([])
    for a in combo.atoms:
        acc = acc + hecke_on_atom(a, n)
    return acc.merged()


# ---------------------------------------------------------------------------
# Cusp-form dimensions


def dim_cusp_forms(k: int) -> int:
    """dim S_k for the full modular group, even k >= 12.

    The classical valence formula: floor(k/12) - 1 when k = 2 mod 12,
    floor(k/12) otherwise.
    """
    if k % 2 or k < 12:
        raise ParameterDomainError("need even k >= 12")
    return k // 12 - 1 if k % 12 == 2 else k // 12
