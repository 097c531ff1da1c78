"""Slope functions, obstructions and functional equations of NET maps."""

from ._netmap import *  # noqa: F401,F403
from ._netmap import NetmapError, Presentation

__all__ = [
    "NetmapError",
    "Presentation",
    "load",
    "parse",
    "analyze",
    "sigma",
    "find_segment",
    "halfspace",
    "obstructions",
    "twist_equation",
    "affine_equation",
    "is_nonseparating",
    "search_nonseparating",
    "constant_teich_check",
]
