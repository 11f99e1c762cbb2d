"""Finite ring workbench: construction, properties, isomorphism and enumeration of small rings."""

from .claims import ClaimReport, run_all
from .enumerate import EnumFilter, enumerate_rings
from .errors import FinRingError, FormatError, RingAxiomError
from .groups import AdditiveGroup
from .iso import are_isomorphic, canonical_form
from .matrices import MatrixGenSpec, example1_ring, example2_ring, matrix_ring
from .properties import property_report
from .ring import FiniteRing, check_axioms, validate
from .ringfile import parse_ring, read_ring, serialize_ring, write_ring

__version__ = "0.1.0"

__all__ = [
    "AdditiveGroup",
    "ClaimReport",
    "EnumFilter",
    "FinRingError",
    "FiniteRing",
    "FormatError",
    "MatrixGenSpec",
    "RingAxiomError",
    "are_isomorphic",
    "canonical_form",
    "check_axioms",
    "enumerate_rings",
    "example1_ring",
    "example2_ring",
    "matrix_ring",
    "parse_ring",
    "property_report",
    "read_ring",
    "run_all",
    "serialize_ring",
    "validate",
    "write_ring",
]
