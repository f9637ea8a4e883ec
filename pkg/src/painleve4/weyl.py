"""Extended affine Weyl group actions on multiplets and lattice parameters.

Positions (v1, v2, v3) of a VTriple carry the roles (j, i, k) of the
three-index notation, so the generator letters map as g1 = g_j, g2 = g_i,
g3 = g_k (same for G's), and the transpositions are positional: pi12 swaps
v1, v2 and so on.  Role-named aliases (gi, gj, gk, piij, piik, pijk, ...)
are accepted by the word parser.

Letter tables (L_m = (ln f_m)_x; words apply left to right):

    g1: (f1, f0+L1, f2-L1)   v -> (v1-1/3, v3-1/3, v2+2/3)
    g2: (f0-L2, f2, f1+L2)   v -> (v3-1/3, v2-1/3, v1+2/3)
    g3: (f2+L0, f1-L0, f0)   v -> (v2-1/3, v1+2/3, v3-1/3)
    pi: (f1, f2, f0)         v -> (v2-1/3, v3-1/3, v1+2/3)
    s0: (f0, f2+L0, f1-L0)   v -> (v3-1, v2, v1+1)
    s1: (f2-L1, f1, f0+L1)   v -> (v2, v1, v3)
    s2: (f1+L2, f0-L2, f2)   v -> (v1, v3, v2)

G_n = g_n^2, pi12 = s1, pi23 = s2, pi13 = s1 s2 s1; inverses are exact.
The alpha's of a transformed multiplet are recomputed from the new VTriple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroFunction
from .ratfun import RatFun, X, as_fraction, log_derivative
from .report import RelationCheck, RelationReport, VerificationReport
from .solutions import (P4Solution, SymMultiplet, alphas_from_v, v_components,
                        verify_symmetric)


@dataclass(frozen=True)
class VTriple:
    """Root-system parameters with v1 + v2 + v3 = 0 exactly."""

    v1: Fraction
    v2: Fraction
    v3: Fraction

    def __init__(self, v1, v2, v3):
        v1, v2, v3 = as_fraction(v1), as_fraction(v2), as_fraction(v3)
        if v1 + v2 + v3 != 0:
            raise ValueError("v1 + v2 + v3 must be exactly zero")
        object.__setattr__(self, "v1", v1)
        object.__setattr__(self, "v2", v2)
        object.__setattr__(self, "v3", v3)

    @classmethod
    def from_mu_nu(cls, mu, nu) -> "VTriple":
        return cls(*v_components(as_fraction(mu), as_fraction(nu)))

    @property
    def mu(self) -> Fraction:
        return self.v1 - self.v2

    @property
    def nu(self) -> Fraction:
        return -3 * self.v3

    def alphas(self) -> tuple[Fraction, Fraction, Fraction]:
        return alphas_from_v(self.v1, self.v2, self.v3)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.v1, self.v2, self.v3)

    def to_json(self) -> list[str]:
        return [str(self.v1), str(self.v2), str(self.v3)]

    @classmethod
    def from_json(cls, data) -> "VTriple":
        return cls(*data)


def seed_vtriple(mu_sq, nu, mu_sign: int = +1) -> VTriple:
    """Lattice coordinates of a rho-solution seed (mu must be rational)."""
    from .ratfun import fraction_sqrt
    return VTriple.from_mu_nu(mu_sign * fraction_sqrt(as_fraction(mu_sq)),
                              as_fraction(nu))


# -- letters -------------------------------------------------------------------

_THIRD = Fraction(1, 3)
_TWO_THIRDS = Fraction(2, 3)

_PARAM_RULES = {
    "g1": lambda a, b, c: (a - _THIRD, c - _THIRD, b + _TWO_THIRDS),
    "g2": lambda a, b, c: (c - _THIRD, b - _THIRD, a + _TWO_THIRDS),
    "g3": lambda a, b, c: (b - _THIRD, a + _TWO_THIRDS, c - _THIRD),
    "g1^-1": lambda a, b, c: (a + _THIRD, c - _TWO_THIRDS, b + _THIRD),
    "g2^-1": lambda a, b, c: (c - _TWO_THIRDS, b + _THIRD, a + _THIRD),
    "g3^-1": lambda a, b, c: (b - _TWO_THIRDS, a + _THIRD, c + _THIRD),
    "pi": lambda a, b, c: (b - _THIRD, c - _THIRD, a + _TWO_THIRDS),
    "pi^-1": lambda a, b, c: (c - _TWO_THIRDS, a + _THIRD, b + _THIRD),
    "s0": lambda a, b, c: (c - 1, b, a + 1),
    "s1": lambda a, b, c: (b, a, c),
    "s2": lambda a, b, c: (a, c, b),
}

# each function rule: (index of the f whose log-derivative is taken or None,
#                      builder(fs, L) -> new fs)
_FUNC_RULES = {
    "g1": (1, lambda f, L: (f[1], f[0] + L, f[2] - L)),
    "g2": (2, lambda f, L: (f[0] - L, f[2], f[1] + L)),
    "g3": (0, lambda f, L: (f[2] + L, f[1] - L, f[0])),
    "g1^-1": (0, lambda f, L: (f[1] - L, f[0], f[2] + L)),
    "g2^-1": (1, lambda f, L: (f[0] + L, f[2] - L, f[1])),
    "g3^-1": (2, lambda f, L: (f[2], f[1] + L, f[0] - L)),
    "pi": (None, lambda f, L: (f[1], f[2], f[0])),
    "pi^-1": (None, lambda f, L: (f[2], f[0], f[1])),
    "s0": (0, lambda f, L: (f[0], f[2] + L, f[1] - L)),
    "s1": (1, lambda f, L: (f[2] - L, f[1], f[0] + L)),
    "s2": (2, lambda f, L: (f[1] + L, f[0] - L, f[2])),
}

_COMPOSITES = {
    "G1": ("g1", "g1"), "G2": ("g2", "g2"), "G3": ("g3", "g3"),
    "G1^-1": ("g1^-1", "g1^-1"), "G2^-1": ("g2^-1", "g2^-1"),
    "G3^-1": ("g3^-1", "g3^-1"),
    "pi12": ("s1",), "pi23": ("s2",), "pi13": ("s1", "s2", "s1"),
}

# role aliases under (i, j, k) = (2, 1, 3)
_ALIASES = {
    "gj": "g1", "gi": "g2", "gk": "g3",
    "gj^-1": "g1^-1", "gi^-1": "g2^-1", "gk^-1": "g3^-1",
    "Gj": "G1", "Gi": "G2", "Gk": "G3",
    "Gj^-1": "G1^-1", "Gi^-1": "G2^-1", "Gk^-1": "G3^-1",
    "piij": "pi12", "piik": "pi23", "pijk": "pi13",
}

LETTERS = tuple(sorted(_PARAM_RULES) + sorted(_COMPOSITES))


def parse_word(text: str) -> tuple[str, ...]:
    """Whitespace-separated word, e.g. "gk gk pi s1 Gi^-1", to canonical letters."""
    letters = []
    for token in text.split():
        letter = _ALIASES.get(token, token)
        if letter not in _PARAM_RULES and letter not in _COMPOSITES:
            raise ValueError(f"unknown generator letter {token!r}")
        letters.append(letter)
    return tuple(letters)


def _primitives(letter: str) -> tuple[str, ...]:
    if letter in _PARAM_RULES:
        return (letter,)
    if letter in _COMPOSITES:
        return _COMPOSITES[letter]
    raise ValueError(f"unknown generator letter {letter!r}")


def act_params(letter: str, v: VTriple) -> VTriple:
    """Parameter-lattice action of a single letter (sum stays zero)."""
    a, b, c = v.as_tuple()
    for prim in _primitives(_ALIASES.get(letter, letter)):
        a, b, c = _PARAM_RULES[prim](a, b, c)
    return VTriple(a, b, c)


def act_multiplet(letter: str, m: SymMultiplet, v: VTriple
                  ) -> tuple[SymMultiplet, VTriple]:
    """Function-level action of a single letter together with its parameter
    action; the alpha's of the result come from the transformed VTriple."""
    fs = m.fs
    a, b, c = v.as_tuple()
    canonical = _ALIASES.get(letter, letter)
    for prim in _primitives(canonical):
        log_index, builder = _FUNC_RULES[prim]
        if log_index is None:
            ell = RatFun(0)
        else:
            f_log = fs[log_index]
            if f_log.is_zero:
                raise ZeroFunction(
                    f"letter {letter!r} needs f{log_index} nonzero")
            ell = log_derivative(f_log)
        fs = builder(fs, ell)
        a, b, c = _PARAM_RULES[prim](a, b, c)
    v_new = VTriple(a, b, c)
    a0, a1, a2 = v_new.alphas()
    return SymMultiplet(fs[0], fs[1], fs[2], a0, a1, a2), v_new


def apply_word(word, m: SymMultiplet, v: VTriple) -> tuple[SymMultiplet, VTriple]:
    """Apply letters left to right.  ZeroFunction gains the failing position."""
    if isinstance(word, str):
        word = parse_word(word)
    for idx, letter in enumerate(word):
        try:
            m, v = act_multiplet(letter, m, v)
        except ZeroFunction as exc:
            raise ZeroFunction(f"degenerate step {idx} ({letter}): {exc}",
                               position=idx) from None
    return m, v


def apply_word_params(word, v: VTriple) -> VTriple:
    if isinstance(word, str):
        word = parse_word(word)
    for letter in word:
        v = act_params(letter, v)
    return v


# -- Backlund transformation on a single y ---------------------------------------

def G_on_y(s: P4Solution, direction: int, nu=None) -> P4Solution:
    """Darboux-Backlund step on a y_+ solution (b = nu + 1):

    +1: y -> y - (ln(y_x + y^2 + 2xy + 2 nu + 4))_x,  (mu, nu) -> (mu, nu + 2)
    -1: y -> y + (ln(y_x - y^2 - 2xy - 2 nu))_x,      (mu, nu) -> (mu, nu - 2)

    A vanishing log argument marks the orbit boundary (ZeroFunction).
    """
    if direction not in (+1, -1):
        raise ValueError("direction must be +1 or -1")
    nu = s.b - 1 if nu is None else as_fraction(nu)
    x = RatFun(X)
    y = s.y
    if direction == +1:
        arg = y.derivative() + y * y + 2 * x * y + 2 * nu + 4
        if arg.is_zero:
            raise ZeroFunction("transformation degenerates on this seed")
        y_new = y - log_derivative(arg)
    else:
        arg = y.derivative() - y * y - 2 * x * y - 2 * nu
        if arg.is_zero:
            raise ZeroFunction("transformation degenerates on this seed")
        y_new = y + log_derivative(arg)
    return P4Solution(y_new, s.a, s.b + 2 * direction)


# -- AKNS J-variables and the Miura map -------------------------------------------

@dataclass(frozen=True)
class JPair:
    J: RatFun
    Jbar: RatFun


@dataclass(frozen=True)
class LittleJPair:
    j: RatFun
    jbar: RatFun


def miura(lj: LittleJPair) -> JPair:
    """J = -j - jbar + j_x/j,  Jbar = jbar * j."""
    if lj.j.is_zero:
        raise ZeroFunction("miura map needs j nonzero")
    return JPair(-lj.j - lj.jbar + lj.j.derivative() / lj.j, lj.jbar * lj.j)


def db_on_J(p: JPair, direction: int) -> JPair:
    """The Darboux-Backlund map on (J, Jbar):

    +1: (J + (ln(Jbar + J_x))_x,  Jbar + J_x)
    -1: (J - (ln Jbar)_x,  Jbar + (ln Jbar)_xx - J_x)
    """
    if direction == +1:
        arg = p.Jbar + p.J.derivative()
        if arg.is_zero:
            raise ZeroFunction("Jbar + J_x vanishes")
        return JPair(p.J + log_derivative(arg), arg)
    if direction == -1:
        if p.Jbar.is_zero:
            raise ZeroFunction("Jbar vanishes")
        ell = log_derivative(p.Jbar)
        return JPair(p.J - ell, p.Jbar + ell.derivative() - p.J.derivative())
    raise ValueError("direction must be +1 or -1")


def g_on_littlej(lj: LittleJPair, direction: int) -> LittleJPair:
    """The square-root map on (j, jbar):

    +1: (jbar - j_x/j,  j)        -1: (jbar,  j + jbar_x/jbar)
    """
    if direction == +1:
        if lj.j.is_zero:
            raise ZeroFunction("j vanishes")
        return LittleJPair(lj.jbar - lj.j.derivative() / lj.j, lj.j)
    if direction == -1:
        if lj.jbar.is_zero:
            raise ZeroFunction("jbar vanishes")
        return LittleJPair(lj.jbar, lj.j + lj.jbar.derivative() / lj.jbar)
    raise ValueError("direction must be +1 or -1")


# -- relations -----------------------------------------------------------------

# every entry states two words with equal action (the right one may be empty)
RELATIONS: tuple[tuple[str, str, str], ...] = (
    ("braid g1 g2", "g1 g2 g1", "g2 g1 g2"),
    ("braid g1 g3", "g1 g3 g1", "g3 g1 g3"),
    ("braid g2 g3", "g2 g3 g2", "g3 g2 g3"),
    ("(g1 g2 g1)^2", "g1 g2 g1 g1 g2 g1", ""),
    ("(g1 g3 g1)^2", "g1 g3 g1 g1 g3 g1", ""),
    ("(g2 g3 g2)^2", "g2 g3 g2 g2 g3 g2", ""),
    ("(g1^2 g2)^2", "g1 g1 g2 g1 g1 g2", ""),
    ("(g2^2 g1)^2", "g2 g2 g1 g2 g2 g1", ""),
    ("(g1^2 g3)^2", "g1 g1 g3 g1 g1 g3", ""),
    ("(g3^2 g1)^2", "g3 g3 g1 g3 g3 g1", ""),
    ("(g2^2 g3)^2", "g2 g2 g3 g2 g2 g3", ""),
    ("(g3^2 g2)^2", "g3 g3 g2 g3 g3 g2", ""),
    ("(g2 g1^2)^2", "g2 g1 g1 g2 g1 g1", ""),
    ("(g1 g2^2)^2", "g1 g2 g2 g1 g2 g2", ""),
    ("(g3 g1^2)^2", "g3 g1 g1 g3 g1 g1", ""),
    ("(g1 g3^2)^2", "g1 g3 g3 g1 g3 g3", ""),
    ("(g3 g2^2)^2", "g3 g2 g2 g3 g2 g2", ""),
    ("(g2 g3^2)^2", "g2 g3 g3 g2 g3 g3", ""),
    ("gk gi = pi^2", "gk gi", "pi pi"),
    ("gi gj = pi^2", "gi gj", "pi pi"),
    ("gj gk = pi^2", "gj gk", "pi pi"),
    ("g1^2 = G1", "g1 g1", "G1"),
    ("g2^2 = G2", "g2 g2", "G2"),
    ("g3^2 = G3", "g3 g3", "G3"),
    ("s0^2 = 1", "s0 s0", ""),
    ("s1^2 = 1", "s1 s1", ""),
    ("s2^2 = 1", "s2 s2", ""),
    ("pi^3 = 1", "pi pi pi", ""),
    ("gj = Gi^-1 piik", "gj", "Gi^-1 piik"),
    ("gi = Gj^-1 pijk", "gi", "Gj^-1 pijk"),
    ("gk = Gj^-1 piij", "gk", "Gj^-1 piij"),
    ("pi Gi = Gk pi", "pi Gi", "Gk pi"),
    ("pi Gk = Gj pi", "pi Gk", "Gj pi"),
    ("pi Gj = Gi pi", "pi Gj", "Gi pi"),
    ("Gj^-1 = gk Gj gk", "Gj^-1", "gk Gj gk"),
    ("Gi^-1 = gj Gi gj", "Gi^-1", "gj Gi gj"),
    ("Gk^-1 = gi Gk gi", "Gk^-1", "gi Gk gi"),
)


def parameter_relations_hold(v: VTriple) -> list[tuple[str, bool]]:
    """Evaluate every relation at parameter level on one triple."""
    results = []
    for name, left, right in RELATIONS:
        va = apply_word_params(left, v)
        vb = apply_word_params(right, v)
        results.append((name, va == vb))
    return results


def check_relations(seed: SymMultiplet, v: VTriple) -> RelationReport:
    """Verify the group relations on the parameter triple and, where the seed
    admits every step, on the multiplet itself.  ZeroFunction (with the word
    position) propagates when a function-level word degenerates."""
    checks = []
    for name, left, right in RELATIONS:
        ok_p = apply_word_params(left, v) == apply_word_params(right, v)
        checks.append(RelationCheck(name, "parameters", ok_p))
        ma, va = apply_word(left, seed, v)
        mb, vb = apply_word(right, seed, v)
        checks.append(RelationCheck(name, "functions", ma == mb and va == vb))
    return RelationReport(tuple(checks))


@dataclass(frozen=True)
class OrbitStep:
    index: int
    letter: str | None
    multiplet: SymMultiplet
    v: VTriple
    report: VerificationReport

    def to_json(self) -> dict:
        return {
            "step": self.index,
            "letter": self.letter,
            "multiplet": self.multiplet.to_json(),
            "v": self.v.to_json(),
            "ok": self.report.ok,
        }


def orbit(seed: SymMultiplet, v: VTriple, word) -> list[OrbitStep]:
    """Apply a word left to right, verifying the symmetric system after every
    step; returns the full trajectory including the seed."""
    if isinstance(word, str):
        word = parse_word(word)
    steps = [OrbitStep(0, None, seed, v, verify_symmetric(seed))]
    m = seed
    for idx, letter in enumerate(word):
        try:
            m, v = act_multiplet(letter, m, v)
        except ZeroFunction as exc:
            raise ZeroFunction(f"degenerate step {idx} ({letter}): {exc}",
                               position=idx) from None
        steps.append(OrbitStep(idx + 1, letter, m, v, verify_symmetric(m)))
    return steps
