"""Type A FFLV polytopes: Dyck paths, the defining system, lattice points."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import Budget, BudgetExceeded, InvalidInput, default_budget
from .kernels import lattice_dfs
from .triangle import HRep, Pos, TriangleA, hrep_from_paths, positions_a, satisfies
from .weights import WeightA

DyckPath = tuple[Pos, ...]


def precedes(p: Pos, q: Pos) -> bool:
    """The partial order: (i1, j1) <= (i2, j2) iff i1 <= i2 and j1 <= j2."""
    return p[0] <= q[0] and p[1] <= q[1]


def comparable(p: Pos, q: Pos) -> bool:
    return precedes(p, q) or precedes(q, p)


def q_set(n: int, i: int) -> frozenset[Pos]:
    """Q_i = {(k, l) : k <= i < l <= n}."""
    if not 1 <= i <= n - 1:
        raise InvalidInput(f"Q_{i} undefined for n={n}")
    return frozenset((k, l) for k in range(1, i + 1) for l in range(i + 1, n + 1))


def is_dyck_path_a(path, n: int) -> bool:
    if not path:
        return False
    if any(not (1 <= i < j <= n) for i, j in path):
        return False
    if path[0][1] - path[0][0] != 1 or path[-1][1] - path[-1][0] != 1:
        return False
    return all(b in ((a[0] + 1, a[1]), (a[0], a[1] + 1)) for a, b in zip(path, path[1:]))


def _walk(n: int, inside, is_end) -> list[DyckPath]:
    # a path is reported every time it sits on an admissible end point;
    # the step (i, j+1) is tried before (i+1, j)
    found: list[DyckPath] = []

    def extend(path):
        i, j = path[-1]
        if is_end(i, j):
            found.append(tuple(path))
        for nxt in ((i, j + 1), (i + 1, j)):
            if inside(*nxt):
                path.append(nxt)
                extend(path)
                path.pop()

    for i in range(1, n + 1):
        if inside(i, i + 1):
            extend([(i, i + 1)])
    return found


@lru_cache(maxsize=None)
def _paths_a(n: int) -> tuple[DyckPath, ...]:
    return tuple(_walk(n, lambda i, j: 1 <= i < j <= n, lambda i, j: j - i == 1))


def enumerate_dyck_paths_a(n: int) -> list[DyckPath]:
    """All type A Dyck paths for sl_n, ordered by start and then step word."""
    if n < 2:
        raise InvalidInput("type A Dyck paths need n >= 2")
    return list(_paths_a(n))


def m_value_a(lam: WeightA, d: DyckPath) -> int:
    """M(lambda, d) = a_{i_1} + ... + a_{i_N}."""
    if not is_dyck_path_a(d, lam.n):
        raise InvalidInput(f"{d} is not a Dyck path for n={lam.n}")
    return sum(lam.coords[d[0][0] - 1:d[-1][0]])


def s_value(x, d) -> Fraction:
    """S(x, d): the sum of the entries of ``x`` along ``d``."""
    return sum((x[p] for p in d), Fraction(0))


def d_top(i: int, j: int, n: int) -> DyckPath:
    """The path through (i, j) that descends along row index i, then climbs along column j."""
    if not 1 <= i < j <= n:
        raise InvalidInput(f"({i},{j}) out of range for n={n}")
    return tuple((i, l) for l in range(i + 1, j + 1)) + tuple((k, j) for k in range(i + 1, j))


def hrep_a(lam: WeightA) -> HRep:
    """Nonnegativity rows, then one row per Dyck path (duplicates kept)."""
    n = lam.n
    paths = _paths_a(n)
    return hrep_from_paths(positions_a(n), paths, [m_value_a(lam, d) for d in paths])


def contains_a(lam: WeightA, x: TriangleA) -> bool:
    if x.kind != "A" or x.n != lam.n:
        raise InvalidInput("rank mismatch")
    return satisfies(hrep_a(lam), x.values)


def lattice_points_a(lam: WeightA, budget: Budget | None = None) -> list[TriangleA]:
    """All integer points of P_lambda.

    Box search with x_{i,j} <= M(lambda, d_top(i, j)), pruned by partial
    path sums. Raises BudgetExceeded past ``budget.lattice_nodes`` nodes.
    """
    budget = budget or default_budget()
    h = hrep_a(lam)
    return _lattice_points(h, TriangleA, lam.n, budget)


def _lattice_points(h: HRep, cls, n: int, budget: Budget):
    rows = [r.normal for r in h.path_rows()]
    rhs = [r.rhs for r in h.path_rows()]
    count, pts = lattice_dfs(rows, rhs, h.dim, budget.lattice_nodes, collect=True)
    if count < 0:
        raise BudgetExceeded(f"lattice enumeration needs more than {budget.lattice_nodes} nodes")
    return [cls(n, p) for p in pts]
