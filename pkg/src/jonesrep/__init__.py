"""Exact Jones representations of braid groups from the Kauffman bracket skein module."""

from .arith import DomainError, InadmissibleColor, ParameterSpec, delta, quantum_integer
from .rep import RepresentationHandle, build, dimension, gram_matrix

__all__ = [
    "DomainError",
    "InadmissibleColor",
    "ParameterSpec",
    "RepresentationHandle",
    "build",
    "delta",
    "dimension",
    "gram_matrix",
    "quantum_integer",
]

__version__ = "0.1.0"
