"""Brute-force oracle: direct enumeration of symmetric integer matrices.

A well-labelled multigraph on n vertices is exactly a symmetric n x n matrix
with off-diagonal entries in J union {0} and (by convention under test)
diagonal entries zero; the degree of vertex i is its row sum, diagonal
counted twice.  Enumerating matrices gives counts that share no code with
the symmetric-function pipeline, which is the point.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from ._kernel import dfs_count
from .extraction import count_table
from .graph_series import WeightProfile

RowConstraint = Union[frozenset, tuple]

DESK_BOUND = 6


@dataclass(frozen=True)
class OracleConfig:
    """One enumeration instance.

    row_sums is either a set (every row sum must lie in it) or an explicit
    per-row tuple.  0 must be an allowed off-diagonal value: absence of an
    edge is not optional.
    """

    n: int
    off_diagonal: frozenset[int]
    row_sums: RowConstraint
    diagonal: frozenset[int] = frozenset({0})

    def __post_init__(self) -> None:
        object.__setattr__(self, "off_diagonal", frozenset(int(v) for v in self.off_diagonal))
        object.__setattr__(self, "diagonal", frozenset(int(v) for v in self.diagonal))
        if isinstance(self.row_sums, (frozenset, set)):
            object.__setattr__(self, "row_sums", frozenset(int(v) for v in self.row_sums))
        else:
            object.__setattr__(self, "row_sums", tuple(int(v) for v in self.row_sums))
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if 0 not in self.off_diagonal:
            raise ValueError("off_diagonal must contain 0")
        if any(v < 0 for v in self.off_diagonal) or any(v < 0 for v in self.diagonal):
            raise ValueError("matrix entries must be >= 0")
        if not self.diagonal:
            raise ValueError("diagonal alphabet must be non-empty")
        if isinstance(self.row_sums, tuple):
            if len(self.row_sums) != self.n:
                raise ValueError("explicit row_sums vector must have length n")
            if any(v < 0 for v in self.row_sums):
                raise ValueError("row sums must be >= 0")
        else:
            if not self.row_sums or any(v < 0 for v in self.row_sums):
                raise ValueError("row_sums set must be non-empty with entries >= 0")


def kernel_arrays(config: OracleConfig) -> tuple:
    """The positional argument tuple the DFS kernels take, config pre-chewed."""
    n = config.n
    if isinstance(config.row_sums, tuple):
        targets = [frozenset({v}) for v in config.row_sums]
    else:
        targets = [config.row_sums] * n
    row_max = np.array([max(t) for t in targets], dtype=np.int64)
    width = int(row_max.max()) + 1 if n else 1
    allowed = np.zeros((n, width), dtype=np.bool_)
    for i, t in enumerate(targets):
        for v in t:
            allowed[i, v] = True
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    ci = np.array([c[0] for c in cells], dtype=np.int64)
    cj = np.array([c[1] for c in cells], dtype=np.int64)
    off_vals = np.array(sorted(config.off_diagonal), dtype=np.int64)
    diag_vals = np.array(sorted(config.diagonal), dtype=np.int64)
    return (n, len(cells), ci, cj, off_vals, diag_vals, row_max, allowed)


def count_matrices(config: OracleConfig, desk_bound: int = DESK_BOUND) -> int:
    """Number of symmetric matrices satisfying the config, by exhaustion.

    Refuses n beyond desk_bound: the search tree is exponential in n^2 and
    the bound keeps a typo from turning into an overnight job.  Raise the
    bound explicitly if the wait is intended.
    """
    if config.n > desk_bound:
        raise ValueError(
            f"n={config.n} exceeds the enumeration bound {desk_bound}; "
            "pass a larger desk_bound only if a long wait is acceptable"
        )
    if config.n == 0:
        return 1
    return int(dfs_count(*kernel_arrays(config)))


def oracle_m_coefficient(
    edge_weights: Iterable[int], degrees: Sequence[int], desk_bound: int = DESK_BOUND
) -> int:
    """Independent value of the monomial coefficient at this degree vector.

    Loop-free convention: diagonal entries are forced to zero.
    """
    d = tuple(int(x) for x in degrees)
    config = OracleConfig(
        n=len(d),
        off_diagonal=frozenset(edge_weights) | {0},
        diagonal=frozenset({0}),
        row_sums=d,
    )
    return count_matrices(config, desk_bound=desk_bound)


def probe_loop_conventions(
    edge_weights: Iterable[int],
    degree_set: Iterable[int],
    n_values: Sequence[int],
    desk_bound: int = DESK_BOUND,
) -> dict[str, dict]:
    """Which diagonal alphabet makes the enumeration match the loop-weighted series?

    The algebraic series with the h_2 kernel admits loops, but the matrix
    convention it corresponds to is not obvious a priori.  Two candidates are
    tried: diagonal entries from J union {0} (a loop is an edge like any
    other, counted twice in the degree), and diagonal entries from {0, 1}.
    Results are reported, not judged.
    """
    weights = frozenset(int(w) for w in edge_weights)
    ks = frozenset(int(k) for k in degree_set)
    profile = WeightProfile(edge_weights=weights, loops=True)
    n_values = [int(n) for n in n_values]
    table = count_table(profile, ks, max(n_values), degree_mode="assigned")
    candidates: Mapping[str, frozenset[int]] = {
        "diag=J|{0}": weights | {0},
        "diag={0,1}": frozenset({0, 1}),
    }
    report: dict[str, dict] = {}
    for label, diag in candidates.items():
        cases = []
        all_match = True
        for n in n_values:
            algebra = table[n]
            enumerated = count_matrices(
                OracleConfig(
                    n=n,
                    off_diagonal=weights | {0},
                    diagonal=diag,
                    row_sums=ks,
                ),
                desk_bound=desk_bound,
            )
            match = algebra == enumerated
            all_match = all_match and match
            cases.append(
                {"n": n, "algebra": algebra, "enumerated": enumerated, "match": match}
            )
        report[label] = {"all_match": all_match, "cases": cases}
    return report
