"""Worker-count detection for the enumeration fan-out."""

import logging
import os
from typing import Dict, Optional

from ..config import InternalConfig

logger = logging.getLogger(__name__)


def get_cpu_count() -> int:
    """Usable CPUs for this process, falling back to os.cpu_count()."""
    try:
        return max(1, len(os.sched_getaffinity(0)))
    except (AttributeError, OSError):
        return max(1, os.cpu_count() or 1)


def get_worker_count(requested: Optional[int] = None) -> int:
    """Resolve the number of worker processes.

    An explicit request wins, then the ``EPIRAUDIT_WORKERS`` environment
    variable, then the CPU count.

    Returns:
        A worker count >= 1
    """
    if requested is not None:
        if requested < 1:
            raise ValueError(f"worker count must be >= 1, got {requested}")
        return requested
    env_value = os.environ.get(InternalConfig.workers_env_var)
    if env_value:
        try:
            workers = int(env_value)
            if workers >= 1:
                return workers
            logger.warning(f"{InternalConfig.workers_env_var}={env_value} is below 1; ignoring it")
        except ValueError:
            logger.warning(f"{InternalConfig.workers_env_var}={env_value!r} is not an integer; ignoring it")
    count = get_cpu_count()
    logger.debug(f"using {count} workers (detected CPUs)")
    return count


def get_parallel_info() -> Dict[str, object]:
    """Summary of the worker configuration, reported by ``--version -v``."""
    return {
        "cpu_count": get_cpu_count(),
        "env_var": InternalConfig.workers_env_var,
        "env_value": os.environ.get(InternalConfig.workers_env_var),
        "workers": get_worker_count(),
    }
