"""Temperley-Lieb diagrams, dense reflection sets and Weyl-line varieties in type A.

The package computes, for every fully commutative permutation, the
Kazhdan-Lusztig basis diagram of the Temperley-Lieb algebra and the two
dense sets of commuting reflections attached to any of its reduced words,
and checks that the two descriptions agree.
"""
from .categorify import (
    DecompositionRecord,
    IntertwinedClass,
    StaircaseForm,
    VerificationReport,
    annihilator_varieties,
    classify_intertwined,
    decompose_product,
    dense_table,
    staircase_factorization,
    verify_correspondence,
)
from .coxeter import (
    catalan,
    enumerate_fully_commutative,
    is_fully_commutative,
    lex_min_reduced_word,
    reduced_words,
    word_to_permutation,
)
from .dense import DenseSet, ReflectionSet, dense_of_sequence, dense_to_sequence, enumerate_dense_sets, update
from .errors import CapacityError, DomainError, InputError, TLWeylError
from .laurent import DELTA, TAU, LaurentPoly
from .tl import TLDiagram, TLElement, boundary_arcs, enumerate_diagrams, kl_basis_of_fc, multiply_diagrams, word_diagram
from .weyl_lines import LineSet, WeylLine, act, all_lines, dot_extend, reflections_of, sequence_variety

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DELTA",
    "DecompositionRecord",
    "DenseSet",
    "DomainError",
    "InputError",
    "IntertwinedClass",
    "LaurentPoly",
    "LineSet",
    "ReflectionSet",
    "StaircaseForm",
    "TAU",
    "TLDiagram",
    "TLElement",
    "TLWeylError",
    "VerificationReport",
    "WeylLine",
    "act",
    "all_lines",
    "annihilator_varieties",
    "boundary_arcs",
    "catalan",
    "classify_intertwined",
    "decompose_product",
    "dense_of_sequence",
    "dense_table",
    "dense_to_sequence",
    "dot_extend",
    "enumerate_dense_sets",
    "enumerate_diagrams",
    "enumerate_fully_commutative",
    "is_fully_commutative",
    "kl_basis_of_fc",
    "lex_min_reduced_word",
    "multiply_diagrams",
    "reduced_words",
    "reflections_of",
    "sequence_variety",
    "staircase_factorization",
    "update",
    "verify_correspondence",
    "word_diagram",
    "word_to_permutation",
]
