"""Painleve IV solution objects and zero-tolerance verifiers.

Identities are checked after clearing denominators, so every residual is a
polynomial and "passes" means the residual is exactly zero.

Conventions used throughout the package:

* rho-equation (second order):
      rho_xx^2 = 4 (x rho_x - rho)^2 - 2 rho_x^3 - 8 nu rho_x^2
                 + 8 (mu^2 - nu^2) rho_x - 8C
* y_{+-} = -(2 (x rho_x - rho) +- rho_xx) / (2 rho_x), solving Painleve IV
      2 y y_xx = y_x^2 + 3 y^4 + 8x y^3 + 4 (x^2 + b) y^2 - 4a
  with a = mu^2 and b = nu + 1 for y_+, b = nu - 1 for y_-.  (In the paired
  Hamiltonian picture the two signs correspond to epsilon = -+1.)
* lattice coordinates: positions (v1, v2, v3) carry (mu/2 + nu/6,
  -mu/2 + nu/6, -nu/3), so mu = v1 - v2 and nu = -3 v3; the multiplet
  constants are alpha1 = 2(v1 - v2), alpha2 = 2(v2 - v3),
  alpha0 = 2(v3 - v1) - 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateRho, ZeroFunction
from .ratfun import (Poly, RatFun, X, as_fraction, fraction_sqrt, integrate,
                     log_derivative)
from .report import Check, VerificationReport


@dataclass(frozen=True)
class RhoSolution:
    """A rho-function together with its (mu^2, nu) parameters."""

    rho: RatFun
    mu_sq: Fraction
    nu: Fraction

    def __init__(self, rho, mu_sq, nu):
        object.__setattr__(self, "rho", rho if isinstance(rho, RatFun) else RatFun(rho))
        object.__setattr__(self, "mu_sq", as_fraction(mu_sq))
        object.__setattr__(self, "nu", as_fraction(nu))

    def mu(self, sign: int = +1) -> Fraction:
        """A rational square root of mu^2 with the requested sign."""
        return sign * fraction_sqrt(self.mu_sq)

    def to_json(self) -> dict:
        return {"rho": self.rho.to_json(), "mu_sq": str(self.mu_sq), "nu": str(self.nu)}

    @classmethod
    def from_json(cls, data: dict) -> "RhoSolution":
        return cls(RatFun.from_json(data["rho"]), data["mu_sq"], data["nu"])


@dataclass(frozen=True)
class P4Solution:
    """A candidate y(x) with Painleve IV parameters (a, b)."""

    y: RatFun
    a: Fraction
    b: Fraction

    def __init__(self, y, a, b):
        object.__setattr__(self, "y", y if isinstance(y, RatFun) else RatFun(y))
        object.__setattr__(self, "a", as_fraction(a))
        object.__setattr__(self, "b", as_fraction(b))

    def to_json(self) -> dict:
        return {"y": self.y.to_json(), "a": str(self.a), "b": str(self.b)}

    @classmethod
    def from_json(cls, data: dict) -> "P4Solution":
        return cls(RatFun.from_json(data["y"]), data["a"], data["b"])


@dataclass(frozen=True)
class SymMultiplet:
    """A solution (f0, f1, f2; alpha0, alpha1, alpha2) of the symmetric system
    f_{j,x} = f_j (f_{j+1} - f_{j+2}) + alpha_j with sum f = -2x, sum alpha = -2."""

    f0: RatFun
    f1: RatFun
    f2: RatFun
    alpha0: Fraction
    alpha1: Fraction
    alpha2: Fraction

    def __init__(self, f0, f1, f2, alpha0, alpha1, alpha2):
        for name, f in (("f0", f0), ("f1", f1), ("f2", f2)):
            object.__setattr__(self, name, f if isinstance(f, RatFun) else RatFun(f))
        object.__setattr__(self, "alpha0", as_fraction(alpha0))
        object.__setattr__(self, "alpha1", as_fraction(alpha1))
        object.__setattr__(self, "alpha2", as_fraction(alpha2))

    @property
    def fs(self) -> tuple[RatFun, RatFun, RatFun]:
        return (self.f0, self.f1, self.f2)

    @property
    def alphas(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.alpha0, self.alpha1, self.alpha2)

    def to_json(self) -> dict:
        return {
            "f0": self.f0.to_json(), "f1": self.f1.to_json(), "f2": self.f2.to_json(),
            "alpha0": str(self.alpha0), "alpha1": str(self.alpha1),
            "alpha2": str(self.alpha2),
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymMultiplet":
        return cls(RatFun.from_json(data["f0"]), RatFun.from_json(data["f1"]),
                   RatFun.from_json(data["f2"]),
                   data["alpha0"], data["alpha1"], data["alpha2"])


# -- lattice coordinates -----------------------------------------------------

def v_components(mu: Fraction, nu: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Positions (v1, v2, v3) with mu = v1 - v2, nu = -3 v3, sum v = 0."""
    nu = as_fraction(nu)
    mu = as_fraction(mu)
    return (mu / 2 + nu / 6, -mu / 2 + nu / 6, -nu / 3)


def alphas_from_v(v1: Fraction, v2: Fraction, v3: Fraction
                  ) -> tuple[Fraction, Fraction, Fraction]:
    return (2 * (v3 - v1) - 2, 2 * (v1 - v2), 2 * (v2 - v3))


# -- verifiers ---------------------------------------------------------------

def _towers(f: RatFun) -> tuple[Poly, Poly, Poly, Poly]:
    """(N, D, A, B) with f = N/D, f_x = A/D^2, f_xx = B/D^3."""
    n, d = f.num, f.den
    a = n.derivative() * d - n * d.derivative()
    b = a.derivative() * d - 2 * d.derivative() * a
    return n, d, a, b


def verify_p4(s: P4Solution) -> VerificationReport:
    """Check 2y y_xx - y_x^2 - 3y^4 - 8x y^3 - 4(x^2+b) y^2 + 4a = 0 exactly
    (denominators cleared)."""
    if s.y.is_zero:
        raise ZeroFunction("candidate y is identically zero")
    n, d, a_, b_ = _towers(s.y)
    residual = (2 * n * b_ - a_ * a_ - 3 * n ** 4 - 8 * X * n ** 3 * d
                - (4 * (X * X + Poly([s.b]))) * n * n * d * d
                + (4 * s.a) * d ** 4)
    return VerificationReport(
        "painleve-iv", (Check("p4-residual", residual),),
        metadata={"a": s.a, "b": s.b},
    )


def _rho_residual_second(r: RhoSolution, c: Fraction) -> Poly:
    n, d, a, b = _towers(r.rho)
    xa_nd = X * a - n * d
    return (b * b - 4 * xa_nd * xa_nd * d * d + 2 * a ** 3
            + (8 * r.nu) * a * a * d * d
            - (8 * (r.mu_sq - r.nu * r.nu)) * a * d ** 4
            + (8 * c) * d ** 6)


def _rho_residual_factorized(r: RhoSolution) -> Poly:
    # (2(x rho_x - rho) + rho_xx)(2(x rho_x - rho) - rho_xx)
    #   = 2 rho_x (rho_x^2 + 4 nu rho_x - 4 (mu^2 - nu^2)),  cleared by D^6
    n, d, a, b = _towers(r.rho)
    xa_nd = X * a - n * d
    lhs = (2 * xa_nd * d + b) * (2 * xa_nd * d - b)
    rhs = 2 * a * (a * a + (4 * r.nu) * a * d * d
                   - (4 * (r.mu_sq - r.nu * r.nu)) * d ** 4)
    return lhs - rhs


def verify_rho(r: RhoSolution, c: Fraction | int | str = 0) -> VerificationReport:
    """Second-order rho-equation with integration constant C; for C = 0 the
    factorized form is checked as well."""
    c = as_fraction(c)
    checks = [Check("rho-second-order", _rho_residual_second(r, c))]
    if c == 0:
        checks.append(Check("rho-factorized", _rho_residual_factorized(r)))
    return VerificationReport("rho-equation", tuple(checks),
                              metadata={"mu_sq": r.mu_sq, "nu": r.nu, "C": c})


def verify_rho_third_order(r: RhoSolution) -> VerificationReport:
    """-x^2 rho_x + x rho + rho_xxx/4 + 2 nu rho_x + (3/4) rho_x^2 = mu^2 - nu^2."""
    n, d, a, b = _towers(r.rho)
    c3 = b.derivative() * d - 3 * d.derivative() * b  # rho_xxx * D^4
    residual = (-(4 * X * X) * a * d * d + 4 * X * n * d ** 3 + c3
                + (8 * r.nu) * a * d * d + 3 * a * a
                - (4 * (r.mu_sq - r.nu * r.nu)) * d ** 4)
    return VerificationReport("rho-third-order", (Check("rho-third-order", residual),),
                              metadata={"mu_sq": r.mu_sq, "nu": r.nu})


def verify_symmetric(m: SymMultiplet) -> VerificationReport:
    """f_{j,x} = f_j (f_{j+1} - f_{j+2}) + alpha_j for j = 0,1,2 plus the two
    sum constraints, all exactly."""
    fs, alphas = m.fs, m.alphas
    checks = []
    for j in range(3):
        res = fs[j].derivative() - fs[j] * (fs[(j + 1) % 3] - fs[(j + 2) % 3]) - alphas[j]
        checks.append(Check(f"symmetric-f{j}", res.num))
    checks.append(Check("sum-f", (m.f0 + m.f1 + m.f2 + 2 * RatFun(X)).num))
    checks.append(Check("sum-alpha", Poly([m.alpha0 + m.alpha1 + m.alpha2 + 2])))
    return VerificationReport("symmetric-system", tuple(checks))


# -- constructions -----------------------------------------------------------

def y_from_rho(r: RhoSolution, sign: int) -> P4Solution:
    """y_{+-} = -(2 (x rho_x - rho) +- rho_xx) / (2 rho_x) with a = mu^2 and
    b = nu +- 1 (the two signs correspond to epsilon = -+1)."""
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    rho_x = r.rho.derivative()
    if rho_x.is_zero:
        raise DegenerateRho("rho_x vanishes identically")
    rho_xx = rho_x.derivative()
    y = -(2 * (RatFun(X) * rho_x - r.rho) + sign * rho_xx) / (2 * rho_x)
    return P4Solution(y, r.mu_sq, r.nu + sign)


def rho_shift(r: RhoSolution, branch: str, mu_sign: int = +1) -> RhoSolution:
    """Linear-in-x shifts mapping a rho-solution to one with new parameters.

    branch "i":  rho - 2(mu - nu) x,  nu' = 3mu/2 - nu/2,  mu' = (mu + nu)/2
    branch "j":  rho + 2(mu + nu) x,  nu' = -3mu/2 - nu/2, mu' = (mu - nu)/2

    mu = mu_sign * sqrt(mu_sq) must be rational (IrrationalMu otherwise).
    """
    if branch not in ("i", "j"):
        raise ValueError("branch must be 'i' or 'j'")
    mu = r.mu(mu_sign)
    nu = r.nu
    if branch == "i":
        rho = r.rho - (2 * (mu - nu)) * RatFun(X)
        nu_new = Fraction(3, 2) * mu - nu / 2
        mu_new = (mu + nu) / 2
    else:
        rho = r.rho + (2 * (mu + nu)) * RatFun(X)
        nu_new = Fraction(-3, 2) * mu - nu / 2
        mu_new = (mu - nu) / 2
    return RhoSolution(rho, mu_new * mu_new, nu_new)


def build_multiplet(r: RhoSolution, mu_sign: int = +1) -> SymMultiplet:
    """Assemble (f1, f2, f0) = (y_+ of rho, y_- of the j-shift, -2x - f1 - f2)
    with the alpha's read off the lattice coordinates of (mu, nu)."""
    mu = r.mu(mu_sign)
    rho_i = rho_shift(r, "i", mu_sign)
    rho_j = rho_shift(r, "j", mu_sign)
    for cand in (r, rho_i, rho_j):
        if cand.rho.derivative().is_zero:
            raise DegenerateRho("a shifted rho has identically zero derivative")
    f1 = y_from_rho(r, +1).y
    f2 = y_from_rho(rho_j, -1).y
    f0 = -2 * RatFun(X) - f1 - f2
    a0, a1, a2 = alphas_from_v(*v_components(mu, r.nu))
    return SymMultiplet(f0, f1, f2, a0, a1, a2)


def multiplet_context(r: RhoSolution, mu_sign: int = +1) -> dict:
    """All three shifted rho's and the six y's attached to a seed.

    Keys: rho_k/rho_i/rho_j (RhoSolution) and y_k_plus, y_k_minus, ... (RatFun).
    """
    rho_i = rho_shift(r, "i", mu_sign)
    rho_j = rho_shift(r, "j", mu_sign)
    ctx = {"rho_k": r, "rho_i": rho_i, "rho_j": rho_j}
    for label, sol in (("k", r), ("i", rho_i), ("j", rho_j)):
        ctx[f"y_{label}_plus"] = y_from_rho(sol, +1).y
        ctx[f"y_{label}_minus"] = y_from_rho(sol, -1).y
    return ctx


def verify_bilinear_and_riccati(r: RhoSolution, mu_sign: int = +1) -> VerificationReport:
    """Cross-identities tying the three shifted rho's together:

    * bilinear:  y^(n)_+ y^(m)_- = rho^(p)_x / 2  for {n, m, p} = {i, j, k}
    * Riccati:   rho^(n)_x = y^(n)_{+,x} - y^(n)_+^2 - 2x y^(n)_+ - 2 nu^(n)
                           = -y^(n)_{-,x} - y^(n)_-^2 - 2x y^(n)_- - 2 nu^(n)
    * splitting: rho^(n)_x + 2 nu^(n) = (rho^(m)_x + rho^(p)_x) / 2
    """
    ctx = multiplet_context(r, mu_sign)
    labels = ("k", "i", "j")
    x = RatFun(X)
    checks = []
    for n in labels:
        for m_ in labels:
            if n == m_:
                continue
            p = next(l for l in labels if l not in (n, m_))
            res = (ctx[f"y_{n}_plus"] * ctx[f"y_{m_}_minus"]
                   - ctx[f"rho_{p}"].rho.derivative() / 2)
            checks.append(Check(f"bilinear-{n}+{m_}-", res.num))
    for n in labels:
        rho_n = ctx[f"rho_{n}"]
        rx = rho_n.rho.derivative()
        yp, ym = ctx[f"y_{n}_plus"], ctx[f"y_{n}_minus"]
        res_p = rx - (yp.derivative() - yp * yp - 2 * x * yp - 2 * rho_n.nu)
        res_m = rx - (-ym.derivative() - ym * ym - 2 * x * ym - 2 * rho_n.nu)
        checks.append(Check(f"riccati-{n}+", res_p.num))
        checks.append(Check(f"riccati-{n}-", res_m.num))
    for n in labels:
        others = [l for l in labels if l != n]
        res = (ctx[f"rho_{n}"].rho.derivative() + 2 * ctx[f"rho_{n}"].nu
               - (ctx[f"rho_{others[0]}"].rho.derivative()
                  + ctx[f"rho_{others[1]}"].rho.derivative()) / 2)
        checks.append(Check(f"splitting-{n}", res.num))
    return VerificationReport("bilinear-riccati", tuple(checks))


def y_minus_closed_form(sigma: RatFun) -> RatFun:
    """-(2 (x s_x - s) - s_xx) / (2 s_x): the y_- representation of a sigma."""
    sx = sigma.derivative()
    if sx.is_zero:
        raise DegenerateRho("sigma_x vanishes identically")
    return -(2 * (RatFun(X) * sx - sigma) - sx.derivative()) / (2 * sx)


def verify_dressing_chain(m: SymMultiplet) -> VerificationReport:
    """Recover sigma^(j) by rational integration of 2(f1 f2 + alpha1) and check
    the chain of identities it satisfies:

    * consistency:  f0 f1 + f1_x = f1 f2 + alpha1 and f0 f2 - f2_x = f1 f2 - alpha2
    * Riccati:      -f2_x - f2^2 - 2x f2 = sigma^(j)_x - 2 alpha1 - alpha2
    * closed forms: f2 and f2bar = f2 - (ln sigma^(j)_x)_x are the y_-+ of
      sigma^(j) (after matching the one free integration constant)
    * dressing chain:  -f2_x - f2^2 - 2x f2 = f2bar_x - f2bar^2 - 2x f2bar
    * product:      f2 f2bar = (sigma^(i)_x / 2)(sigma^(k)_x / 2)/(sigma^(j)_x / 2)
    * sigma^(j) satisfies the factorized rho-equation with the sigma_x triple.

    The integration constant found by matching is reported in the metadata.
    """
    f0, f1, f2 = m.fs
    x = RatFun(X)
    sigma_j_x = 2 * (f1 * f2 + m.alpha1)
    sigma_i_x = 2 * f1 * f2
    sigma_k_x = 2 * (f1 * f2 - m.alpha2)
    checks = [
        Check("sigma-j-consistency", (f0 * f1 + f1.derivative() - f1 * f2 - m.alpha1).num),
        Check("sigma-k-consistency", (f0 * f2 - f2.derivative() - f1 * f2 + m.alpha2).num),
    ]
    riccati = (-f2.derivative() - f2 * f2 - 2 * x * f2
               - (sigma_j_x - 2 * m.alpha1 - m.alpha2))
    checks.append(Check("riccati", riccati.num))

    if sigma_j_x.is_zero:
        raise DegenerateRho("sigma^(j)_x vanishes identically")
    sigma_j = integrate(sigma_j_x)  # NonRationalIntegral propagates
    # the closed form determines sigma^(j) only up to a constant; match it once
    shift = (f2 - y_minus_closed_form(sigma_j)) * sigma_j_x
    if shift.is_constant:
        sigma_j = sigma_j + shift
        const = shift.num.constant_term()
    else:
        const = None
    f2bar = f2 - log_derivative(sigma_j_x)
    checks.append(Check("f2-closed-form", (f2 - y_minus_closed_form(sigma_j)).num))
    yp = -(2 * (x * sigma_j.derivative() - sigma_j) + sigma_j.derivative().derivative()) \
        / (2 * sigma_j.derivative())
    checks.append(Check("f2bar-closed-form", (f2bar - yp).num))
    chain = ((-f2.derivative() - f2 * f2 - 2 * x * f2)
             - (f2bar.derivative() - f2bar * f2bar - 2 * x * f2bar))
    checks.append(Check("dressing-chain", chain.num))
    product = f2 * f2bar - (sigma_i_x / 2) * (sigma_k_x / 2) / (sigma_j_x / 2)
    checks.append(Check("product", product.num))
    sj_x = sigma_j.derivative()
    lhs = (2 * (x * sj_x - sigma_j) - sj_x.derivative()) \
        * (2 * (x * sj_x - sigma_j) + sj_x.derivative())
    rho_eq = lhs - 2 * sigma_i_x * sigma_j_x * sigma_k_x
    checks.append(Check("sigma-rho-equation", rho_eq.num))
    return VerificationReport("dressing-chain", tuple(checks),
                              metadata={"integration_constant": const})
