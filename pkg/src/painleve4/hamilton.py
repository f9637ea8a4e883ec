"""Okamoto-type Hamiltonian frames.

H = 2 P^2 Q - eps (Q^2 + 2xQ + 2(v_i - v_j... see below)) P + (v_k - v_i) Q - 2 v_i x
with roles (i, j, k) at positions (2, 1, 3) of the VTriple, i.e. the frame
stores (v1, v2, v3) = (v_j, v_i, v_k).

From a rho-solution: H = (rho - 4 v_k x)/2 (the additive constant must be 0,
anything else breaks the x H_x - H combination of the quadratic identity), and

    Q = (2 (x H_x - H) - eps H_xx) / (-2 (H_x + 2 v_k))
    P = (2 (x H_x - H) + eps H_xx) / (4 eps (H_x + 2 v_j))
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateDenominator
from .ratfun import RatFun, X
from .report import Check, VerificationReport
from .solutions import RhoSolution, v_components, verify_rho
from .weyl import VTriple


@dataclass(frozen=True)
class HamiltonianFrame:
    epsilon: int
    v: VTriple
    H: RatFun
    Q: RatFun
    P: RatFun

    def __init__(self, epsilon, v, H, Q, P):
        if epsilon not in (+1, -1):
            raise ValueError("epsilon must be +1 or -1")
        object.__setattr__(self, "epsilon", int(epsilon))
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "H", H)
        object.__setattr__(self, "Q", Q)
        object.__setattr__(self, "P", P)

    @property
    def v_i(self) -> Fraction:
        return self.v.v2

    @property
    def v_j(self) -> Fraction:
        return self.v.v1

    @property
    def v_k(self) -> Fraction:
        return self.v.v3

    def to_json(self) -> dict:
        return {"epsilon": self.epsilon, "v": self.v.to_json(),
                "H": self.H.to_json(), "Q": self.Q.to_json(), "P": self.P.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "HamiltonianFrame":
        return cls(int(data["epsilon"]), VTriple.from_json(data["v"]),
                   RatFun.from_json(data["H"]), RatFun.from_json(data["Q"]),
                   RatFun.from_json(data["P"]))


def _qp_from_H(H: RatFun, v: VTriple, epsilon: int) -> tuple[RatFun, RatFun]:
    x = RatFun(X)
    H_x = H.derivative()
    H_xx = H_x.derivative()
    core = 2 * (x * H_x - H)
    den_q = H_x + 2 * v.v3
    den_p = H_x + 2 * v.v1
    if den_q.is_zero or den_p.is_zero:
        raise DegenerateDenominator("H_x + 2 v vanishes identically")
    q = (core - epsilon * H_xx) / (-2 * den_q)
    p = (core + epsilon * H_xx) / (4 * epsilon * den_p)
    return q, p


def frame_from_rho(r: RhoSolution, epsilon: int, mu_sign: int = +1) -> HamiltonianFrame:
    """Reconstruct (H, Q, P) from a rho-solution with rational mu."""
    if epsilon not in (+1, -1):
        raise ValueError("epsilon must be +1 or -1")
    mu = r.mu(mu_sign)
    v = VTriple(*v_components(mu, r.nu))
    H = (r.rho - 4 * v.v3 * RatFun(X)) / 2
    q, p = _qp_from_H(H, v, epsilon)
    return HamiltonianFrame(epsilon, v, H, q, p)


def verify_hamilton(f: HamiltonianFrame) -> VerificationReport:
    """The Hamilton equations and the identities rigidifying the frame:

    * Q_x = 4QP - eps (Q^2 + 2xQ + 2 (v_j - v_i))
    * P_x = -2P^2 + eps (2QP + 2xP) - (v_k - v_i)
    * the stored H equals H(Q, P, x)
    * H_x = -2 eps QP - 2 v_i  and  2QP = -eps (H_x + 2 v_i)
    * 2 (x H_x - H) = -Q (H_x + 2 v_k) + 2 eps P (H_x + 2 v_j)
    * (2(x H_x - H) - H_xx)(2(x H_x - H) + H_xx) = 4 prod_n (H_x + 2 v_n)
    * the quadratic identity is the factorized rho-equation of
      rho = 2H + 4 v_k x with mu^2 = (v_i - v_j)^2, nu = -3 v_k
    """
    eps, v = f.epsilon, f.v
    v_j, v_i, v_k = v.v1, v.v2, v.v3
    x = RatFun(X)
    H, Q, P = f.H, f.Q, f.P
    H_x = H.derivative()
    H_xx = H_x.derivative()
    checks = [
        Check("hamilton-Q", (Q.derivative()
                             - (4 * Q * P - eps * (Q * Q + 2 * x * Q
                                                   + 2 * (v_j - v_i)))).num),
        Check("hamilton-P", (P.derivative()
                             - (-2 * P * P + eps * (2 * Q * P + 2 * x * P)
                                - (v_k - v_i))).num),
        Check("hamiltonian-value",
              (H - (2 * P * P * Q - eps * (Q * Q + 2 * x * Q + 2 * (v_j - v_i)) * P
                    + (v_k - v_i) * Q - 2 * v_i * x)).num),
        Check("hamilton-Hx", (H_x + 2 * eps * Q * P + 2 * v_i).num),
        Check("qp-product", (2 * Q * P + eps * (H_x + 2 * v_i)).num),
        Check("xHH", (2 * (x * H_x - H)
                      + Q * (H_x + 2 * v_k) - 2 * eps * P * (H_x + 2 * v_j)).num),
        Check("quadratic-identity",
              ((2 * (x * H_x - H) - H_xx) * (2 * (x * H_x - H) + H_xx)
               - 4 * (H_x + 2 * v.v1) * (H_x + 2 * v.v2) * (H_x + 2 * v.v3)).num),
    ]
    rho = RhoSolution(2 * H + 4 * v_k * x, (v_i - v_j) ** 2, -3 * v_k)
    rho_report = verify_rho(rho, 0)
    checks.extend(Check(f"rho-crosscheck-{c.name}", c.residual)
                  for c in rho_report.checks)
    return VerificationReport("hamiltonian-frame", tuple(checks),
                              metadata={"epsilon": eps})


_SWAPS = {
    "pi12": (1, 0, 2), "pi13": (2, 1, 0), "pi23": (0, 2, 1),
    # role aliases under (i, j, k) = (2, 1, 3)
    "piij": (1, 0, 2), "pijk": (2, 1, 0), "piik": (0, 2, 1),
}


def pi_on_frame(perm: str, f: HamiltonianFrame) -> HamiltonianFrame:
    """Permute the v's, keep H fixed, and recompute Q, P with the new labels."""
    if perm not in _SWAPS:
        raise ValueError(f"unknown permutation {perm!r}")
    order = _SWAPS[perm]
    vs = f.v.as_tuple()
    v_new = VTriple(vs[order[0]], vs[order[1]], vs[order[2]])
    q, p = _qp_from_H(f.H, v_new, f.epsilon)
    return HamiltonianFrame(f.epsilon, v_new, f.H, q, p)
