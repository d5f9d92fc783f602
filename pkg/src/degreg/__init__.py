"""Degree-regular triangulations of closed surfaces: checks, invariants,
isomorphism, duals and exhaustive classification."""

from .complex import (
    TriangulationComplex,
    build_complex,
    euler_characteristic,
    is_combinatorial_2_manifold,
    load_complex,
    orientability,
    parse_face_list,
)
from .isomorphism import Permutation, are_isomorphic, automorphism_group, canonical_form

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "TriangulationComplex",
    "are_isomorphic",
    "automorphism_group",
    "build_complex",
    "canonical_form",
    "euler_characteristic",
    "is_combinatorial_2_manifold",
    "load_complex",
    "orientability",
    "parse_face_list",
]
