"""Steiner distances, Steiner k-diameters and the exact extremal function e_k(n, l, d)."""

from __future__ import annotations

from .canon import are_isomorphic, canonical_form, canonical_labelling
from .enumeration import EnumerationCapError, EnumFilter, generate
from .extremal import ExtremalQuery, ExtremalResult, compute_e
from .families import FamilySpec, build, expected_properties
from .graph import INF, Graph, from_edges, is_connected
from .graph6 import decode, encode
from .steiner import eccentricities, sdiam, srad, steiner_distance, steiner_tree
from .verify import ClaimId, run_all, run_claim

__all__ = [
    "INF", "ClaimId", "EnumFilter", "EnumerationCapError", "ExtremalQuery", "ExtremalResult", "FamilySpec",
    "Graph", "are_isomorphic", "build", "canonical_form", "canonical_labelling", "compute_e", "decode",
    "eccentricities", "encode", "expected_properties", "from_edges", "generate", "is_connected", "run_all",
    "run_claim", "sdiam", "srad", "steiner_distance", "steiner_tree",
]
__version__ = "0.1.0"
