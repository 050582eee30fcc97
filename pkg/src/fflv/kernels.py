"""Backend selection for the integer kernels.

The compiled extension is used when it imports and ``FFLV_PURE_PYTHON`` is
unset. Inputs whose Bareiss intermediates could overflow int64 always take
the pure-Python path, so results never depend on the backend.
"""

from __future__ import annotations

import math
import os

from . import _purekernels as pure

try:
    if os.environ.get("FFLV_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels as compiled
except ImportError:
    compiled = None

BACKEND = "cython" if compiled is not None else "python"

_INT64_SAFE = 2**62


def _hadamard_ok(rows, k: int) -> bool:
    norms = sorted((math.isqrt(sum(v * v for v in r)) + 1 for r in rows), reverse=True)
    bound = 1
    for nrm in norms[:k]:
        bound *= nrm
    return bound * bound < _INT64_SAFE


def rank_int(rows, ncols: int, backend=None) -> int:
    """Exact rank of an integer matrix given as a sequence of rows."""
    rows = [[int(v) for v in r] for r in rows]
    mod = _pick(backend)
    if mod is compiled and not _hadamard_ok(rows, min(len(rows), ncols)):
        mod = pure
    return mod.rank_int(rows, ncols)


def det_int(rows, backend=None) -> int:
    rows = [[int(v) for v in r] for r in rows]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("determinant of a non-square matrix")
    mod = _pick(backend)
    if mod is compiled and not _hadamard_ok(rows, len(rows)):
        mod = pure
    return mod.det_int(rows)


def lattice_dfs(rows, rhs, ncols: int, max_nodes: int, collect: bool = True, backend=None):
    """Integer points of ``{x >= 0 : A x <= b}`` with entrywise ``A >= 0``.

    Returns ``(count, points)``; ``count`` is -1 when ``max_nodes`` search
    nodes were not enough.
    """
    rows = [[int(v) for v in r] for r in rows]
    if any(v < 0 for r in rows for v in r):
        raise ValueError("lattice_dfs needs a nonnegative constraint matrix")
    rhs = [int(v) for v in rhs]
    mod = _pick(backend)
    if mod is compiled and max(map(abs, rhs), default=0) >= _INT64_SAFE:
        mod = pure
    return mod.lattice_dfs(rows, rhs, ncols, max_nodes, collect)


def _pick(backend):
    if backend is None:
        return compiled if compiled is not None else pure
    if backend == "python":
        return pure
    if backend == "cython":
        if compiled is None:
            raise RuntimeError("compiled kernels are not built")
        return compiled
    raise ValueError(f"unknown backend {backend!r}")
