"""Dimension and degree of singular vector varieties of hyperquiver representations."""
from .chow import RingShape, TruncPoly
from .degree import AnalysisResult, EmptyReason, analyze, chern_top_class, expected_dimension
from .model import (
    DimensionVector,
    EdgePartition,
    Hyperedge,
    Hyperquiver,
    HyperquiverError,
    singleton_partition,
    validate_hyperquiver,
    validate_partition,
)

__all__ = [
    "AnalysisResult",
    "DimensionVector",
    "EdgePartition",
    "EmptyReason",
    "Hyperedge",
    "Hyperquiver",
    "HyperquiverError",
    "RingShape",
    "TruncPoly",
    "analyze",
    "chern_top_class",
    "expected_dimension",
    "singleton_partition",
    "validate_hyperquiver",
    "validate_partition",
]
