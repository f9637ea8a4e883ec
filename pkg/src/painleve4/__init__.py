"""Exact construction and verification of rational Painleve IV solutions.

Rational solutions are built as logarithmic derivatives of Wronskians of
Hermite-type polynomial families, transformed by Darboux-Backlund maps and the
extended affine Weyl group of A2, and every claimed identity is checked in
exact rational arithmetic (residuals are polynomials, pass means zero).
"""

from .errors import (DegenerateDenominator, DegenerateRho, DivisionByZero,
                     IrrationalMu, NonRationalIntegral, P4Error, SingularFamily,
                     ZeroFunction)
from .hamilton import HamiltonianFrame, frame_from_rho, pi_on_frame, verify_hamilton
from .hierarchies import (cubic_seed, gen_1x, gen_2x, gen_2x3, rho_chain,
                          y_1x_wronskian_forms)
from .ratfun import (ONE, Poly, RatFun, X, ZERO, as_fraction, fraction_sqrt,
                     integrate, log_derivative, poly_gcd, wronskian)
from .report import Check, RelationCheck, RelationReport, VerificationReport
from .solutions import (P4Solution, RhoSolution, SymMultiplet, build_multiplet,
                        multiplet_context, rho_shift, verify_bilinear_and_riccati,
                        verify_dressing_chain, verify_p4, verify_rho,
                        verify_rho_third_order, verify_symmetric, y_from_rho,
                        y_minus_closed_form)
from .special import (GaugedFamily, gauged_log_wronskian, hermite, okamoto_poly,
                      pseudo_hermite)
from .weyl import (JPair, LittleJPair, VTriple, G_on_y, act_multiplet, act_params,
                   apply_word, apply_word_params, check_relations, db_on_J,
                   g_on_littlej, miura, orbit, parse_word, seed_vtriple)

__version__ = "0.1.0"
