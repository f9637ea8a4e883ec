"""Generators for the three rational-solution hierarchies.

* "-2x" family: rho = 2 d/dx ln W_k[H_n, ..., H_{n-k+1}] with nu = n - 2k + 1,
  mu^2 = (n+1)^2; hatted twin uses pseudo-Hermite entries and nu = -n + 2k - 1.
* "-1/x" family: y_+ built on Gaussian-gauged Hermite families (gauge -+1).
* "-2x/3" family: Wronskians of the F_n^(k) entries on top of the cubic seed
  rho = 8x^3/27, with explicit linear-in-x shifts.

All generators return exactly verifiable objects; Wronskian ratio forms used
for cross-representation checks are exposed separately.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateRho, SingularFamily
from .ratfun import Poly, RatFun, X, log_derivative, wronskian
from .solutions import P4Solution, RhoSolution, y_from_rho
from .special import (GaugedFamily, gauged_log_wronskian, hermite, okamoto_poly,
                      pseudo_hermite)


def _wronskian_log(entries: list[Poly]) -> RatFun:
    w = wronskian(entries)
    if w.is_zero:
        raise SingularFamily("linearly dependent Wronskian entries")
    return log_derivative(RatFun(w))


def _hermites(top: int, count: int, hatted: bool) -> list[Poly]:
    """[H_top, H_{top-1}, ..., H_{top-count+1}] (or pseudo-Hermite)."""
    gen = pseudo_hermite if hatted else hermite
    return [gen(top - i) for i in range(count)]


def cubic_seed() -> RhoSolution:
    """The basic polynomial seed rho = 8x^3/27 with mu^2 = 4/9, nu = 0."""
    return RhoSolution(RatFun(Poly([0, 0, 0, Fraction(8, 27)])), Fraction(4, 9), 0)


# -- the "-2x" family ----------------------------------------------------------

def gen_2x(k: int, n: int, hatted: bool = False) -> tuple[RhoSolution, P4Solution]:
    """rho = 2 d/dx ln W_k[H_n ... H_{n-k+1}] and the matching y_-.

    Unhatted: nu = n - 2k + 1, mu^2 = (n+1)^2, y_- from the W_{k+1}/W_k ratio
    minus 2x, with b = nu - 1.  Hatted: pseudo-Hermite entries, nu = -n+2k-1,
    y_- = -d/dx ln(W_k/W_{k-1}) - 2x.

    The single-entry case k = 1 is included (the ratio forms stay well defined
    there even though the determinant is trivial).
    """
    if k < 1:
        raise ValueError("k >= 1 required")
    if n < k - 1:
        raise ValueError("n >= k - 1 required")
    mu_sq = Fraction((n + 1) ** 2)
    nu = Fraction(n - 2 * k + 1) if not hatted else Fraction(-n + 2 * k - 1)
    rho = 2 * _wronskian_log(_hermites(n, k, hatted))
    sol = RhoSolution(rho, mu_sq, nu)
    if sol.rho.derivative().is_zero:
        raise DegenerateRho("rho_x vanishes identically; no y-construction")
    if not hatted:
        y = (_wronskian_log(_hermites(n, k + 1, False))
             - _wronskian_log(_hermites(n, k, False)) - 2 * RatFun(X))
    else:
        y = (-_wronskian_log(_hermites(n, k, True))
             + _wronskian_log(_hermites(n, k - 1, True)) - 2 * RatFun(X))
    return sol, P4Solution(y, mu_sq, nu - 1)


# -- the "-1/x" family ---------------------------------------------------------

def _gauged_rho(k: int, n: int, variant: int, hatted: bool) -> tuple[RhoSolution, int]:
    """The gauge -+1 rho behind the -1/x constructions, with its parameters."""
    if variant == 1 and not hatted:
        if k < 1 or n < k - 1:
            raise ValueError("variant 1 needs k >= 1 and n >= k - 1")
        fam = GaugedFamily(-1, _hermites(n, k, False))
        nu, mu_sq = Fraction(n + k + 1), Fraction((n - k + 1) ** 2)
    elif variant == 2 and not hatted:
        if k < 0 or n < k:
            raise ValueError("variant 2 needs 0 <= k <= n")
        fam = GaugedFamily(+1, _hermites(n, n - k + 1, True))
        nu, mu_sq = Fraction(-2 * n + k - 2), Fraction(k ** 2)
    elif variant == 1:
        if k < 0 or n < k:
            raise ValueError("hatted variant 1 needs 0 <= k <= n")
        fam = GaugedFamily(-1, _hermites(n, n - k + 1, False))
        nu, mu_sq = Fraction(2 * n - k + 2), Fraction(k ** 2)
    else:
        if k < 1 or n < k - 1:
            raise ValueError("hatted variant 2 needs k >= 1 and n >= k - 1")
        fam = GaugedFamily(+1, _hermites(n, k, True))
        nu, mu_sq = Fraction(-n - k - 1), Fraction((n - k + 1) ** 2)
    return RhoSolution(2 * gauged_log_wronskian(fam), mu_sq, nu), len(fam.entries)


def gen_1x(k: int, n: int, variant: int, hatted: bool = False) -> P4Solution:
    """y_+ attached (b = nu + 1) to the gauge -+1 Wronskian rho of the family.

    variant 1 unhatted: nu = n+k+1, mu^2 = (n-k+1)^2 on W_k[e^{-x^2} H_n ...];
    variant 2 unhatted: nu = -2n+k-2, mu^2 = k^2 on W_{n-k+1}[e^{x^2} Hhat_n ...];
    hatted analogues swap the entry families.
    """
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    rho, _ = _gauged_rho(k, n, variant, hatted)
    return y_from_rho(rho, +1)


def y_1x_wronskian_forms(k: int, n: int, variant: int) -> tuple[RatFun, RatFun]:
    """The two determinant representations of the unhatted -1/x solutions.

    variant 1: d/dx ln(W_k[H_n..H_{n-k+1}] / W_{k+1}[H_{n+1}..H_{n-k+1}])
             = d/dx ln(W_{n-k+1}[Hh_n..Hh_k] / W_{n-k+1}[Hh_{n+1}..Hh_{k+1}])
    variant 2: d/dx ln(W_{n-k+1}[Hh_n..Hh_k] / W_{n-k}[Hh_{n-1}..Hh_k])
             = d/dx ln(W_k[H_n..H_{n-k+1}] / W_k[H_{n-1}..H_{n-k}])
    """
    if variant == 1:
        plain = (_wronskian_log(_hermites(n, k, False))
                 - _wronskian_log(_hermites(n + 1, k + 1, False)))
        hat = (_wronskian_log(_hermites(n, n - k + 1, True))
               - _wronskian_log(_hermites(n + 1, n - k + 1, True)))
        return plain, hat
    if variant == 2:
        hat = (_wronskian_log(_hermites(n, n - k + 1, True))
               - _wronskian_log(_hermites(n - 1, n - k, True)))
        plain = (_wronskian_log(_hermites(n, k, False))
                 - _wronskian_log(_hermites(n - 1, k, False)))
        return hat, plain
    raise ValueError("variant must be 1 or 2")


# -- the "-2x/3" family ----------------------------------------------------------

def _okamoto_entries(first_count: int, second_k: int, second_count: int,
                     hatted: bool) -> list[Poly]:
    entries = [okamoto_poly(m, 1, hatted) for m in range(first_count)]
    entries += [okamoto_poly(m, second_k, hatted) for m in range(second_count)]
    return entries


_SECOND_FAMILY = {(1, +1): 2, (2, +1): 0, (1, -1): 0, (2, -1): 2}


def gen_2x3(variant: int, n: int, k: int, direction: int
            ) -> tuple[RhoSolution, P4Solution]:
    """Members rho^(variant, +-n, +-k) of the -2x/3 hierarchy and their y's.

    direction +1 uses the F entries, linear shift +(n-2k) 4x/3, y_+ (b = nu+1):
      variant 1: entries F^(1)_0..F^(1)_{n-1}, F^(2)_0..F^(2)_{k-1};
                 mu^2 = (1/3 + n)^2, nu = 2k - n + 1
      variant 2: second family F^(0); mu^2 = (1/3 - n)^2, nu = 2k - n - 1
    direction -1 uses Fhat entries, shift -(n-2k) 4x/3, y_- (b = nu-1),
    mirrored parameters.
    """
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    if direction not in (+1, -1):
        raise ValueError("direction must be +1 or -1")
    if n < 0 or k < 0:
        raise ValueError("n, k >= 0 required")
    hatted = direction < 0
    second = _SECOND_FAMILY[(variant, direction)]
    base_sign = -1 if variant == 1 else +1
    base = RatFun(Poly([0, 0, 0, Fraction(8, 27)])) \
        + base_sign * Fraction(4, 3) * RatFun(X)
    shift = direction * Fraction(4, 3) * (n - 2 * k) * RatFun(X)
    rho = base + shift + 2 * _wronskian_log(_okamoto_entries(n, second, k, hatted))
    third = Fraction(1, 3)
    if variant == 1:
        mu = third + n if direction > 0 else third - n
    else:
        mu = third - n if direction > 0 else third + n
    nu = Fraction(direction * (2 * k - n) + (1 if variant == 1 else -1))
    ratio = (_wronskian_log(_okamoto_entries(n, second, k + 1, hatted))
             - _wronskian_log(_okamoto_entries(n, second, k, hatted)))
    y = -direction * ratio - Fraction(2, 3) * RatFun(X)
    rho_sol = RhoSolution(rho, mu * mu, nu)
    y_sol = P4Solution(y, mu * mu, nu + direction)
    return rho_sol, y_sol


def rho_chain(n: int, direction: int = +1) -> RhoSolution:
    """The nu = +-2n members reached from the cubic seed by repeated
    Darboux-Backlund steps: rho = 8x^3/27 -+ 2n(4x/3) + 2 d/dx ln W_n[F^(1)...]."""
    if n < 0:
        raise ValueError("n >= 0 required")
    if direction not in (+1, -1):
        raise ValueError("direction must be +1 or -1")
    hatted = direction < 0
    entries = [okamoto_poly(m, 1, hatted) for m in range(n)]
    rho = (RatFun(Poly([0, 0, 0, Fraction(8, 27)]))
           - direction * 2 * n * Fraction(4, 3) * RatFun(X)
           + 2 * (_wronskian_log(entries) if entries else RatFun(0)))
    return RhoSolution(rho, Fraction(4, 9), Fraction(2 * n * direction))
