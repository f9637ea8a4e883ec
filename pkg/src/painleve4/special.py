"""Polynomial families feeding the Wronskian constructions.

Hermite polynomials H_n (physicists' convention), the pseudo-Hermite
companions Hhat_n = e^{-x^2} d^n e^{x^2}/dx^n, and the Gaussian-weight
families F_n^(k) built from e^{-x^2/3} (hatted variant from e^{+x^2/3}).

A family of entries sharing a weight e^{c x^2} never expands the weight:
differentiating e^{c x^2} p pulls out the twisted derivative p' + 2cx p, so
every Wronskian row of the gauged family carries the same exponential factor
and the weight contributes only the closed-form 2kcx term to logarithmic
derivatives.  That keeps all computation inside polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import SingularFamily
from .ratfun import ONE, Poly, RatFun, X, as_fraction, det_polys, log_derivative


def twisted_derivative(p: Poly, c: Fraction) -> Poly:
    """p -> p' + 2cx p, the derivative seen through the weight e^{c x^2}."""
    return p.derivative() + (2 * c) * X * p


@lru_cache(maxsize=None)
def hermite(n: int) -> Poly:
    """H_n via the recurrence H_{n+1} = 2x H_n - 2n H_{n-1}."""
    if n < 0:
        raise ValueError("hermite index must be non-negative")
    if n == 0:
        return ONE
    if n == 1:
        return 2 * X
    return 2 * X * hermite(n - 1) - (2 * (n - 1)) * hermite(n - 2)


@lru_cache(maxsize=None)
def pseudo_hermite(n: int) -> Poly:
    """Hhat_n = e^{-x^2} d^n e^{x^2}/dx^n, i.e. n twisted derivatives of 1."""
    if n < 0:
        raise ValueError("pseudo-hermite index must be non-negative")
    if n == 0:
        return ONE
    return twisted_derivative(pseudo_hermite(n - 1), Fraction(1))


@lru_cache(maxsize=None)
def _gauss_third_raw(m: int, hatted: bool) -> Poly:
    # m applications of p -> p' -+ (2x/3) p to 1, without the 1/(2^n n!) scaling
    if m == 0:
        return ONE
    c = Fraction(1, 3) if hatted else Fraction(-1, 3)
    return twisted_derivative(_gauss_third_raw(m - 1, hatted), c)


def okamoto_poly(n: int, k: int, hatted: bool = False) -> Poly:
    """F_n^(k): 3n+k twisted derivatives of 1 (weight e^{-+x^2/3}), over 2^n n!.

    The scaling is mathematically inert downstream (only logarithmic
    derivatives are consumed) but kept for fidelity.
    """
    if n < 0 or k not in (0, 1, 2):
        raise ValueError("require n >= 0 and k in {0, 1, 2}")
    raw = _gauss_third_raw(3 * n + k, hatted)
    norm = Fraction(1, 2 ** n)
    for i in range(2, n + 1):
        norm /= i
    return raw.scale(norm)


@dataclass(frozen=True)
class GaugedFamily:
    """Ordered polynomial entries sharing the common weight e^{gauge * x^2}."""

    gauge: Fraction
    entries: tuple[Poly, ...]

    def __init__(self, gauge, entries):
        object.__setattr__(self, "gauge", as_fraction(gauge))
        object.__setattr__(self, "entries", tuple(entries))
        if not self.entries:
            raise ValueError("a gauged family needs at least one entry")


def twisted_wronskian(entries: tuple[Poly, ...], c: Fraction) -> Poly:
    """Determinant with rows built by the twisted derivative p -> p' + 2cx p."""
    if not entries:
        return ONE
    rows = [list(entries)]
    for _ in range(len(entries) - 1):
        rows.append([twisted_derivative(p, c) for p in rows[-1]])
    return det_polys(rows)


def gauged_log_wronskian(fam: GaugedFamily) -> RatFun:
    """d/dx ln W[e^{cx^2} p_1, ..., e^{cx^2} p_k] = 2kcx + D'/D with D the
    twisted-derivative determinant of the entries."""
    d = twisted_wronskian(fam.entries, fam.gauge)
    if d.is_zero:
        raise SingularFamily("linearly dependent gauged family")
    k = len(fam.entries)
    return RatFun((2 * k * fam.gauge) * X) + log_derivative(RatFun(d))
