"""Convex-hull-free vertex generation for the White Whale zonotope."""

from .comb import CanonicalVertex
from .engine import LayerRecord, RunConfig, generate, generate_generic, run
from .lp import FeasibilityResult, vertex_feasible, verify_certificate

__all__ = [
    "CanonicalVertex",
    "FeasibilityResult",
    "LayerRecord",
    "RunConfig",
    "generate",
    "generate_generic",
    "run",
    "vertex_feasible",
    "verify_certificate",
]
