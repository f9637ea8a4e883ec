"""Exact arithmetic kernel: dense univariate polynomials and normalized rational
functions over arbitrary-precision rationals.

Scalars are ``fractions.Fraction`` (always gcd-reduced, positive denominator).
A ``Poly`` stores ascending coefficients with no trailing zero; the zero
polynomial has an empty coefficient tuple.  A ``RatFun`` keeps ``gcd(num, den)
= 1`` with a monic denominator, so equality is a plain field-by-field
comparison.  All values are immutable and every operation is pure.

JSON forms shared by the whole package: a scalar is the string ``"p/q"``
(``"p"`` when q = 1), a Poly is an ascending array of scalar strings, and a
RatFun is ``{"num": [...], "den": [...]}``.  Round-trips are bit-exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

from .errors import DivisionByZero, IrrationalMu, NonRationalIntegral

ScalarLike = Union[Fraction, int, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_fraction(value: ScalarLike) -> Fraction:
    """Coerce an int, string like ``"p/q"``, or Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def fraction_sqrt(value: Fraction) -> Fraction:
    """Exact square root of a non-negative rational; IrrationalMu if none exists."""
    if value < 0:
        raise IrrationalMu(f"{value} is negative")
    p, q = value.numerator, value.denominator
    rp, rq = isqrt(p), isqrt(q)
    if rp * rp != p or rq * rq != q:
        raise IrrationalMu(f"{value} is not a rational square")
    return Fraction(rp, rq)


class Poly:
    """Dense univariate polynomial with Fraction coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        """Leading coefficient (of the canonical representation)."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else _ZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        d, lc = other.degree, other.lc
        quo = [_ZERO] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                q = c / lc
                quo[i - d] = q
                for j, oc in enumerate(other.coeffs):
                    rem[i - d + j] -= q * oc
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def __truediv__(self, other) -> "RatFun":
        return RatFun(self, other)

    # -- calculus, evaluation ----------------------------------------------

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x0: ScalarLike) -> Fraction:
        x0 = as_fraction(x0)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lc = self.lc
        if lc == 1:
            return self
        return Poly([c / lc for c in self.coeffs])

    def scale(self, factor: ScalarLike) -> "Poly":
        factor = as_fraction(factor)
        return Poly([c * factor for c in self.coeffs])

    # -- text forms ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = abs(c)
                xs = "x" if i == 1 else f"x^{i}"
                term = xs if mag == 1 else f"{mag}*{xs}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[ScalarLike]) -> "Poly":
        return cls([as_fraction(c) for c in data])

    def to_latex(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            if mag.denominator == 1:
                coeff = str(mag.numerator)
            else:
                coeff = rf"\frac{{{mag.numerator}}}{{{mag.denominator}}}"
            if i == 0:
                term = coeff
            else:
                xs = "x" if i == 1 else f"x^{{{i}}}"
                term = xs if mag == 1 else f"{coeff} {xs}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _as_poly(value) -> "Poly":
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly([value])
    return NotImplemented


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
        b = b.monic() if not b.is_zero else b
    return a.monic()


def _exact_div(a: Poly, b: Poly) -> Poly:
    q, r = divmod(a, b)
    if not r.is_zero:
        raise ArithmeticError("division expected to be exact was not")
    return q


def det_polys(matrix: list[list[Poly]]) -> Poly:
    """Determinant of a square polynomial matrix by fraction-free Bareiss
    elimination (row pivoting with sign tracking; divisions are exact)."""
    n = len(matrix)
    if n == 0:
        return ONE
    m = [row[:] for row in matrix]
    sign = 1
    prev = ONE
    for p in range(n - 1):
        if m[p][p].is_zero:
            for r in range(p + 1, n):
                if not m[r][p].is_zero:
                    m[p], m[r] = m[r], m[p]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[p][p]
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                m[i][j] = _exact_div(pivot * m[i][j] - m[i][p] * m[p][j], prev)
            m[i][p] = ZERO
        prev = pivot
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def wronskian(entries: Sequence[Poly]) -> Poly:
    """Wronskian determinant: row r holds the r-th derivatives of the entries,
    columns in the given order.  The empty family yields 1."""
    entries = list(entries)
    if not entries:
        return ONE
    rows = [entries]
    for _ in range(len(entries) - 1):
        rows.append([p.derivative() for p in rows[-1]])
    return det_polys(rows)


class RatFun:
    """Normalized ratio of two polynomials: gcd-reduced, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Union[Poly, ScalarLike] = ZERO,
                 den: Union[Poly, ScalarLike] = ONE):
        num = num if isinstance(num, Poly) else Poly([as_fraction(num)])
        den = den if isinstance(den, Poly) else Poly([as_fraction(den)])
        if den.is_zero:
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero:
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = _exact_div(num, g), _exact_div(den, g)
            lc = den.lc
            if lc != 1:
                num, den = num.scale(1 / lc), den.scale(1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *_):
        raise AttributeError("RatFun is immutable")

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den == ONE

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatFun", self.num.coeffs, self.den.coeffs))

    # -- field arithmetic ----------------------------------------------------

    def __add__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        g = poly_gcd(self.den, other.den)
        if g.degree > 0:
            da, db = _exact_div(self.den, g), _exact_div(other.den, g)
            return RatFun(self.num * db + other.num * da, self.den * db)
        return RatFun(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        out = object.__new__(RatFun)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __sub__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        # cross-cancel first to keep the final gcd small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = _exact_div(self.num, g1) if g1.degree > 0 else self.num
        d2 = _exact_div(other.den, g1) if g1.degree > 0 else other.den
        n2 = _exact_div(other.num, g2) if g2.degree > 0 else other.num
        d1 = _exact_div(self.den, g2) if g2.degree > 0 else self.den
        return RatFun(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise DivisionByZero("division by the zero function")
        return self * RatFun(other.den, other.num)

    def __rtruediv__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "RatFun":
        if exponent < 0:
            if self.is_zero:
                raise DivisionByZero("negative power of the zero function")
            return RatFun(self.den, self.num) ** (-exponent)
        return RatFun(self.num ** exponent, self.den ** exponent)

    # -- calculus --------------------------------------------------------------

    def derivative(self) -> "RatFun":
        n, d = self.num, self.den
        return RatFun(n.derivative() * d - n * d.derivative(), d * d)

    def value_at(self, x0: ScalarLike) -> Fraction:
        x0 = as_fraction(x0)
        dv = self.den(x0)
        if dv == 0:
            raise DivisionByZero(f"pole at x = {x0}")
        return self.num(x0) / dv

    # -- text forms --------------------------------------------------------------

    def __repr__(self) -> str:
        return f"RatFun({self})"

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RatFun":
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))

    def to_latex(self) -> str:
        if self.den == ONE:
            return self.num.to_latex()
        return rf"\frac{{{self.num.to_latex()}}}{{{self.den.to_latex()}}}"


def _as_ratfun(value) -> "RatFun":
    if isinstance(value, RatFun):
        return value
    if isinstance(value, Poly):
        return RatFun(value)
    if isinstance(value, (int, Fraction)):
        return RatFun(Poly([value]))
    return NotImplemented


RF_ZERO = RatFun()
RF_ONE = RatFun(ONE)
RF_X = RatFun(X)


def log_derivative(f: RatFun) -> RatFun:
    """f_x / f, normalized.  For f = n/d this is n'/n - d'/d."""
    if f.is_zero:
        raise DivisionByZero("logarithmic derivative of the zero function")
    n, d = f.num, f.den
    return RatFun(n.derivative() * d - n * d.derivative(), n * d)


def _integrate_poly(p: Poly) -> Poly:
    return Poly([_ZERO] + [c / (i + 1) for i, c in enumerate(p.coeffs)])


def _solve_linear(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rhs)
    m = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular linear system")
        m[col], m[pivot] = m[pivot], m[col]
        pv = m[col][col]
        m[col] = [c / pv for c in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def integrate(f: RatFun) -> RatFun:
    """Rational antiderivative F with F_x = f, by polynomial division plus
    Hermite-Ostrogradsky reduction of the proper part.

    The free constant is fixed so that F(0) = 0 when F is finite at 0;
    otherwise the polynomial part has zero constant term.  Raises
    NonRationalIntegral when the reduction leaves a logarithmic remainder.
    """
    quo, rem = divmod(f.num, f.den)
    poly_part = _integrate_poly(quo)
    if rem.is_zero:
        result = RatFun(poly_part)
    else:
        d = f.den
        d1 = poly_gcd(d, d.derivative())
        if d1.degree == 0:
            # squarefree denominator: any nonzero proper part is logarithmic
            raise NonRationalIntegral(f"no rational antiderivative of {f}")
        d2 = _exact_div(d, d1)
        s = _exact_div(d1.derivative() * d2, d1)
        nb, nc = d1.degree, d2.degree
        size = nb + nc
        # unknown B (deg < nb), C (deg < nc) with  B'*d2 - B*s + C*d1 = rem
        cols = []
        for m_ in range(nb):
            basis = Poly([_ZERO] * m_ + [_ONE])
            cols.append(basis.derivative() * d2 - basis * s)
        for m_ in range(nc):
            basis = Poly([_ZERO] * m_ + [_ONE])
            cols.append(basis * d1)
        matrix = [[(col.coeffs[r] if r <= col.degree else _ZERO) for col in cols]
                  for r in range(size)]
        rhs = [(rem.coeffs[r] if r <= rem.degree else _ZERO) for r in range(size)]
        sol = _solve_linear(matrix, rhs)
        b = Poly(sol[:nb])
        c = Poly(sol[nb:])
        if not c.is_zero:
            raise NonRationalIntegral(f"logarithmic part remains in integral of {f}")
        result = RatFun(poly_part) + RatFun(b, d1)
    if result.den(0) != 0:
        result = result - result.value_at(0)
    return result
