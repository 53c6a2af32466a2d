"""Picard lattices of del Pezzo surfaces, their Weyl groups and real structures."""
from .lattice import LatticeVector, canonical_class, enumerate_minus_one_classes, enumerate_roots, intersect, simple_roots
from .weyl import ClassInvariant, Isometry, carter_representative, class_invariant, generate_group, longest_element, reflection

__version__ = "0.1.0"

__all__ = [
    "ClassInvariant",
    "Isometry",
    "LatticeVector",
    "canonical_class",
    "carter_representative",
    "class_invariant",
    "enumerate_minus_one_classes",
    "enumerate_roots",
    "generate_group",
    "intersect",
    "longest_element",
    "reflection",
    "simple_roots",
]
