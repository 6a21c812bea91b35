"""Hot kernels with a compiled core and a pure-Python fallback.

The compiled extension is preferred when importable; set the environment
variable ``BEAMLOOP_NO_EXT`` to any non-empty value to force the fallback
(used by the benchmark to compare both backends).
"""

import os

from . import _pure

BACKEND = "python"
_impl = _pure

if not os.environ.get("BEAMLOOP_NO_EXT"):
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass


def partition_stats(psi, edges, gain, width):
    return _impl.partition_stats(psi, edges, gain, width)


def search_max_cardinality(b, d, max_cols):
    return _impl.search_max_cardinality(b, d, max_cols)


def partition_grid_dp(C, m):
    return _impl.partition_grid_dp(C, m)
