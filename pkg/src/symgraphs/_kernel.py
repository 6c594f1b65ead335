"""Hot inner loop of the matrix-enumeration oracle.

One kernel source, two compilations: numba nopython when available, plain
Python otherwise or when SYMGRAPHS_NO_NUMBA is set.  Both paths run the same
bytecode-level algorithm so the benchmark comparison is apples to apples.

Counts stay inside int64 at desk scale: with alphabet sizes |off| <= 4,
|diag| <= 4 and n <= 7 the search tree has at most 4^(n(n+1)/2) < 2^56
leaves.
"""
from __future__ import annotations

import os

import numpy as np


def _dfs_count(n, num_cells, ci, cj, off_vals, diag_vals, row_max, allowed):
    # Depth-first over upper-triangle cells in row-major order, diagonal
    # included.  Row i's sum is complete once cell (i, n-1) is assigned,
    # so each row constraint is checked at the earliest possible moment.
    # Diagonal entries contribute twice to their row sum.
    if num_cells == 0:
        return 1
    row_sum = np.zeros(n, dtype=np.int64)
    nxt = np.zeros(num_cells, dtype=np.int64)
    has = np.zeros(num_cells, dtype=np.bool_)
    aval = np.zeros(num_cells, dtype=np.int64)
    count = 0
    cell = 0
    while cell >= 0:
        i = ci[cell]
        j = cj[cell]
        if has[cell]:
            v = aval[cell]
            if i == j:
                row_sum[i] -= 2 * v
            else:
                row_sum[i] -= v
                row_sum[j] -= v
            has[cell] = False
        k = nxt[cell]
        nvals = diag_vals.shape[0] if i == j else off_vals.shape[0]
        if k >= nvals:
            nxt[cell] = 0
            cell -= 1
            continue
        nxt[cell] = k + 1
        v = diag_vals[k] if i == j else off_vals[k]
        if i == j:
            row_sum[i] += 2 * v
        else:
            row_sum[i] += v
            row_sum[j] += v
        has[cell] = True
        aval[cell] = v
        if row_sum[i] > row_max[i] or row_sum[j] > row_max[j]:
            # Values are sorted ascending; larger ones overflow too.
            nxt[cell] = nvals
            continue
        if j == n - 1 and not allowed[i, row_sum[i]]:
            continue
        cell += 1
        if cell == num_cells:
            count += 1
            cell -= 1
    return count


dfs_count_python = _dfs_count

try:
    import numba

    HAS_NUMBA = True
except ImportError:
    numba = None
    HAS_NUMBA = False

_DISABLED = os.environ.get("SYMGRAPHS_NO_NUMBA", "").strip().lower() in {
    "1",
    "true",
    "yes",
}

if HAS_NUMBA and not _DISABLED:
    dfs_count_numba = numba.njit(cache=True)(_dfs_count)
    dfs_count = dfs_count_numba
    BACKEND = "numba"
else:
    dfs_count_numba = None
    dfs_count = dfs_count_python
    BACKEND = "python"


def kernel_backend() -> str:
    """Which implementation count_matrices dispatches to: 'numba' or 'python'."""
    return BACKEND
