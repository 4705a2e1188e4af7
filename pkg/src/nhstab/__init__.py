"""Exact Einstein-Hilbert stability analysis of normal homogeneous spaces."""

from .catalog import UnknownSpace, catalog, catalog_names, family_space, get_space
from .characters import dominant_character, sym2_decompose, tensor_decompose
from .embeddings import EmbeddingError, EmbeddingSpec
from .kernels import BACKEND
from .rootsystem import LieType, casimir_normalized, root_system, weyl_dim
from .spaces import ConfigError, NotEinstein, SpaceSpec, einstein_check, load_space
from .stability import StabilityAnalysis, StabilityReport, analyze

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ConfigError", "EmbeddingError", "EmbeddingSpec", "LieType", "NotEinstein",
    "SpaceSpec", "StabilityAnalysis", "StabilityReport", "UnknownSpace", "analyze",
    "casimir_normalized", "catalog", "catalog_names", "dominant_character", "einstein_check",
    "family_space", "get_space", "load_space", "root_system", "sym2_decompose",
    "tensor_decompose", "weyl_dim",
]
