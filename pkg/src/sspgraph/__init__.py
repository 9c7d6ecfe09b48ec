"""Exact certification of the strong spectral property for graphs.

Core entry points: :func:`classify` for graphs, :func:`has_property` for
single matrices, :func:`close` and :func:`replay` for forcing
certificates, :func:`verify_witness` for refutations.
"""

from .classify import Settings, Verdict, classify, classify_tree
from .forcing import ForcingCertificate, close, replay
from .graph import Graph, parse_graph6, to_graph6
from .linalg import RatMatrix
from .refute import Witness, verify_witness
from .strong import PropertyKind, has_property

__all__ = [
    "ForcingCertificate",
    "Graph",
    "PropertyKind",
    "RatMatrix",
    "Settings",
    "Verdict",
    "Witness",
    "classify",
    "classify_tree",
    "close",
    "has_property",
    "parse_graph6",
    "replay",
    "to_graph6",
    "verify_witness",
]
