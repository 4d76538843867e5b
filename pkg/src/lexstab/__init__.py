"""Exact computation of universal lex approximations and Hamilton numbers."""
from .approx import ApproxSequence, a_by_difference, b_sequence
from .bigcomb import bco, bcp, macaulay_growth, macaulay_rep
from .hamilton import ell, lucas_array, rho_estimate
from .lcbc import CoeffVector, ci_numerator, evaluate, fit, stable_polynomial
from .monomial import Monomial, MonomialIdeal, dim_degree, hilbert_numerator, minimalize
from .oracle import lex_approx_explicit, lex_approx_macaulay, stabilization
from .unilex import GammaSpec, generators_from_gamma, hf_from_b, hf_gamma

__version__ = "0.1.0"
