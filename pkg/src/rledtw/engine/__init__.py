"""Two interchangeable range engines over an integer array."""

from .base import DomainError, RayEvent
from .lazy import SLOPE_INF, LazyEngine
from .warmup import WarmupEngine

__all__ = ["DomainError", "LazyEngine", "RayEvent", "SLOPE_INF", "WarmupEngine"]
