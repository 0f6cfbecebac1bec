"""Utility functions for epiraudit."""

from .numbers import both_renderings, format_decimal
from .parallel import get_cpu_count, get_parallel_info, get_worker_count

__all__ = [
    "both_renderings",
    "format_decimal",
    "get_cpu_count",
    "get_parallel_info",
    "get_worker_count",
]
