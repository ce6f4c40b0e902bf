"""Chromatic polynomials and switching classes of signed multigraphs."""

from .book import BookSpec, build_book, classify_signature, enumerate_classes, formula_for_spec
from .chromatic import chromatic_poly, chromatic_poly_oracle, count_proper
from .graph import SignedMultigraph, apply_switching, switching_equivalent, switching_isomorphic
from .polynomials import IntPolynomial

__all__ = [
    "BookSpec", "IntPolynomial", "SignedMultigraph", "apply_switching", "build_book",
    "chromatic_poly", "chromatic_poly_oracle", "classify_signature", "count_proper",
    "enumerate_classes", "formula_for_spec", "switching_equivalent", "switching_isomorphic",
]
