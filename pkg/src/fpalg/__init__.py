"""Certified normal forms for finitely presented algebras over Z and discrete
fields, with explicit equality witnesses, plus the same normal-form
discipline for finitely presented bounded distributive lattices."""

from .coeffs import GF, QQ, ZZ, CoeffRing, ext_gcd
from .poly import MonomialOrder, Polynomial, divide, g_poly, poly_to_str, s_poly
from .groebner import GroebnerBasis, autoreduce, buchberger, is_groebner
from .terms import (
    Add,
    Const,
    Mul,
    Neg,
    One,
    Term,
    Var,
    Zero,
    parse_poly,
    parse_term,
    poly_to_term,
    term_to_poly,
    term_to_str,
)
from .certificates import (
    CofactorCertificate,
    Derivation,
    check_derivation,
    expand_derivation,
    make_certificate,
    verify_certificate,
)
from .presentation import Morphism, Presentation, coherence_check, compose
from .lattice import (
    Antichain,
    LatticePresentation,
    lat_congruence,
    lat_decide_eq,
    lat_enumerate,
    lat_nf_free,
)

__all__ = [
    "GF", "QQ", "ZZ", "CoeffRing", "ext_gcd",
    "MonomialOrder", "Polynomial", "divide", "g_poly", "poly_to_str", "s_poly",
    "GroebnerBasis", "autoreduce", "buchberger", "is_groebner",
    "Add", "Const", "Mul", "Neg", "One", "Term", "Var", "Zero",
    "parse_poly", "parse_term", "poly_to_term", "term_to_poly", "term_to_str",
    "CofactorCertificate", "Derivation", "check_derivation", "expand_derivation",
    "make_certificate", "verify_certificate",
    "Morphism", "Presentation", "coherence_check", "compose",
    "Antichain", "LatticePresentation", "lat_congruence", "lat_decide_eq",
    "lat_enumerate", "lat_nf_free",
]
