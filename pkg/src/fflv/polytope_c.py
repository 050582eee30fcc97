"""Type C FFLV polytopes and their vertices via the sl_2n machinery.

The type C triangle has positions 1 <= i < j <= 2n+1-i; its diagonal column
is i + j = 2n + 1. Two embeddings into the sl_2n triangle are used: ``iota``
copies coordinates, ``phi`` folds a point with its mirror image in the
diagonal (doubling the diagonal itself).
"""

from __future__ import annotations

from functools import lru_cache

from .errors import Budget, InvalidInput, default_budget
from .perm_simple import (
    SegmentFamily, all_segments, intersection, is_rp, nested, psi, seg_key, x_of_e,
)
from .polytope_a import DyckPath, _lattice_points, _walk, q_set
from .triangle import HRep, Pos, TriangleA, TriangleC, hrep_from_paths, positions_c, satisfies
from .vertices_a import AntichainTuple, _antichains, nice_tuples
from .weights import Perm, SignedPermC, WeightA, WeightC


def _inside(n: int, i: int, j: int) -> bool:
    return 1 <= i < j <= 2 * n + 1 - i


def is_dyck_path_c(path, n: int) -> bool:
    if not path or any(not _inside(n, i, j) for i, j in path):
        return False
    if path[0][1] - path[0][0] != 1:
        return False
    last = path[-1]
    if last[1] - last[0] != 1 and sum(last) != 2 * n + 1:
        return False
    return all(b in ((a[0] + 1, a[1]), (a[0], a[1] + 1)) for a, b in zip(path, path[1:]))


@lru_cache(maxsize=None)
def _paths_c(n: int) -> tuple[DyckPath, ...]:
    return tuple(_walk(n, lambda i, j: _inside(n, i, j),
                       lambda i, j: j - i == 1 or i + j == 2 * n + 1))


def enumerate_dyck_paths_c(n: int) -> list[DyckPath]:
    """Type C Dyck paths: start in the top row, end in it or on the diagonal."""
    if n < 1:
        raise InvalidInput("type C Dyck paths need n >= 1")
    return list(_paths_c(n))


def m_value_c(lam: WeightC, d: DyckPath) -> int:
    n = lam.n
    if not is_dyck_path_c(d, n):
        raise InvalidInput(f"{d} is not a type C Dyck path for n={n}")
    i1, (iN, jN) = d[0][0], d[-1]
    last = n if iN + jN == 2 * n + 1 else iN
    return sum(lam.coords[i1 - 1:last])


def d_top_c(i: int, j: int, n: int) -> DyckPath:
    """Down along row index i to (i, j), then up along column j while possible."""
    if not _inside(n, i, j):
        raise InvalidInput(f"({i},{j}) is not a type C position for n={n}")
    path = [(i, l) for l in range(i + 1, j + 1)]
    k = i
    while k + j < 2 * n + 1 and k + 1 < j:
        k += 1
        path.append((k, j))
    return tuple(path)


def hrep_c(lam: WeightC) -> HRep:
    n = lam.n
    paths = _paths_c(n)
    return hrep_from_paths(positions_c(n), paths, [m_value_c(lam, d) for d in paths])


def contains_c(lam: WeightC, x: TriangleC) -> bool:
    if x.kind != "C" or x.n != lam.n:
        raise InvalidInput("rank mismatch")
    return satisfies(hrep_c(lam), x.values)


def lattice_points_c(lam: WeightC, budget: Budget | None = None) -> list[TriangleC]:
    return _lattice_points(hrep_c(lam), TriangleC, lam.n, budget or default_budget())


def iota(x: TriangleC) -> TriangleA:
    """Coordinate copy into the sl_2n triangle; the other entries are zero."""
    return TriangleA.from_dict(2 * x.n, x.as_dict())


def iota_inv(y: TriangleA) -> TriangleC:
    if y.n % 2:
        raise InvalidInput("expected an sl_2n triangle")
    n = y.n // 2
    off = [p for p, v in y.items() if v and not _inside(n, *p)]
    if off:
        raise InvalidInput(f"point has entries outside the type C triangle: {off}")
    return TriangleC.from_dict(n, {p: y[p] for p in positions_c(n)})


def mirror(p: Pos, n: int) -> Pos:
    """Reflection (i, j) -> (2n+1-j, 2n+1-i) of the sl_2n triangle."""
    return (2 * n + 1 - p[1], 2 * n + 1 - p[0])


def phi(x: TriangleC) -> TriangleA:
    n = x.n
    out = {}
    for p, v in x.items():
        if sum(p) == 2 * n + 1:
            out[p] = 2 * v
        else:
            out[p] = v
            out[mirror(p, n)] = v
    return TriangleA.from_dict(2 * n, out)


def is_symmetric_point(y: TriangleA) -> bool:
    if y.n % 2:
        return False
    n = y.n // 2
    return all(v == y[mirror(p, n)] for p, v in y.items())


def phi_inv(y: TriangleA) -> TriangleC:
    if not is_symmetric_point(y):
        raise InvalidInput("phi_inv needs a point symmetric under the diagonal reflection")
    n = y.n // 2
    return TriangleC.from_dict(n, {p: (y[p] / 2 if sum(p) == 2 * n + 1 else y[p]) for p in positions_c(n)})


def lambda_zero(lam: WeightC) -> WeightA:
    """(a_1, ..., a_n, 0, ..., 0) for sl_2n."""
    return WeightA(list(lam.coords) + [0] * (lam.n - 1))


def lambda_bar(lam: WeightC) -> WeightA:
    """(a_1, ..., a_{n-1}, 2 a_n, a_{n-1}, ..., a_1) for sl_2n."""
    a = list(lam.coords)
    return WeightA(a[:-1] + [2 * a[-1]] + a[-2::-1])


def qc_set(n: int, i: int) -> frozenset[Pos]:
    """Q^C_i: elements (a, b) of Q_i (in sl_2n) with a + b <= 2n + 1."""
    return frozenset(p for p in q_set(2 * n, i) if sum(p) <= 2 * n + 1)


def tuple_point_c(lam: WeightC, t: AntichainTuple) -> TriangleC:
    if len(t) != lam.n or t.n != 2 * lam.n:
        raise InvalidInput("rank mismatch")
    acc: dict[Pos, int] = {}
    for i, a in enumerate(t.chains, start=1):
        c = lam.a(i)
        if c:
            for p in a.members:
                acc[p] = acc.get(p, 0) + c
    return TriangleC.from_dict(lam.n, acc)


def enumerate_vertices_c(lam: WeightC, budget: Budget | None = None) -> list[tuple[AntichainTuple, TriangleC]]:
    """Vertices sum a_i chi_{A_i}, A_i antichains of Q^C_i, adjacent pairs passing the sl_2n test."""
    budget = budget or default_budget()
    budget.check_rank_c(lam.n)
    n = lam.n
    lists = [_antichains(2 * n, i, qc_set(n, i)) for i in range(1, n + 1)]
    out: dict[TriangleC, AntichainTuple] = {}
    for chains in nice_tuples(lists):
        t = AntichainTuple(chains)
        pt = tuple_point_c(lam, t)
        if pt not in out:
            out[pt] = t
    return [(t, p) for p, t in out.items()]


def mirror_segment(s, n: int):
    return (2 * n + 1 - s[1], 2 * n + 1 - s[0])


def is_symmetric_family(E: SegmentFamily) -> bool:
    if E.n % 2:
        return False
    n = E.n // 2
    return all(mirror_segment(s, n) in E.segments for s in E.segments)


@lru_cache(maxsize=None)
def _symmetric_rp(n: int) -> tuple[SegmentFamily, ...]:
    groups = []
    seen = set()
    for s in all_segments(2 * n):
        if s not in seen:
            g = tuple(sorted({s, mirror_segment(s, n)}, key=seg_key))
            seen.update(g)
            groups.append(g)
    found = []
    fam: set = set()

    def ok(s):
        return all((cap := intersection(s, e)) is None or cap == s or cap in fam for e in fam)

    def walk(k):
        if k == len(groups):
            found.append(SegmentFamily(2 * n, frozenset(fam)))
            return
        walk(k + 1)
        added = []
        for s in groups[k]:
            if not ok(s):
                break
            fam.add(s)
            added.append(s)
        else:
            walk(k + 1)
        for s in added:
            fam.remove(s)

    walk(0)
    found.sort(key=lambda E: (len(E), [seg_key(s) for s in E.ordered()]))
    return tuple(found)


def enumerate_symmetric_rp(n: int, budget: Budget | None = None) -> list[SegmentFamily]:
    """Symmetric intersection-closed families on [1, 2n]."""
    (budget or default_budget()).check_rank_c(n)
    return list(_symmetric_rp(n))


def _require_symmetric_rp(E: SegmentFamily):
    if not is_symmetric_family(E) or not is_rp(E):
        raise InvalidInput(f"{E!r} is not a symmetric intersection-closed family")


def w_c_of_e(E: SegmentFamily, n: int) -> SignedPermC:
    """Signed permutation: product over [i, j] in E with i + j <= 2n + 1, shorter factors first.

    A factor is the transposition (i, jbar), jbar = j or 2n+1-j, with signs
    -1 at i and 2n+1-j when j > n.
    """
    if E.n != 2 * n:
        raise InvalidInput("family must live on [1, 2n]")
    _require_symmetric_rp(E)
    w = SignedPermC.identity(n)
    for i, j in E.ordered():
        if i + j > 2 * n + 1:
            continue
        if j <= n:
            f = SignedPermC(Perm.transposition(n, i, j), [1] * n)
        else:
            jb = 2 * n + 1 - j
            signs = [1] * n
            signs[i - 1] = signs[jb - 1] = -1
            sigma = Perm.transposition(n, i, jb) if jb != i else Perm.identity(n)
            f = SignedPermC(sigma, signs)
        w = f * w
    return w


def is_symmetric_perm(w: Perm) -> bool:
    m = w.size
    return all(w(i) + w(m + 1 - i) == m + 1 for i in range(1, m + 1))


def weyl_vertex_c(lam: WeightC, E: SegmentFamily) -> TriangleC:
    """phi^{-1}(x(E)) with x(E) taken in the polytope of lambda-bar."""
    _require_symmetric_rp(E)
    return phi_inv(x_of_e(lambda_bar(lam), E))


def weyl_vertices_c(lam: WeightC, budget: Budget | None = None) -> list[tuple[SegmentFamily, TriangleC, SignedPermC]]:
    return [(E, weyl_vertex_c(lam, E), w_c_of_e(E, lam.n)) for E in enumerate_symmetric_rp(lam.n, budget)]


def is_rs_c(E: SegmentFamily) -> bool:
    """Symmetric, intersection-closed, and nested among segments with i + j <= 2n + 1."""
    if not is_symmetric_family(E) or not is_rp(E):
        return False
    n = E.n // 2
    low = [s for s in E.segments if sum(s) <= 2 * n + 1]
    return all(intersection(s, t) is None or nested(s, t) for k, s in enumerate(low) for t in low[k + 1:])


def simple_vertices_c(lam: WeightC, budget: Budget | None = None) -> list[tuple[SegmentFamily, TriangleC]]:
    if not lam.regular():
        raise InvalidInput("simple-vertex classification assumes a regular weight (all a_i > 0)")
    return [(E, weyl_vertex_c(lam, E)) for E in enumerate_symmetric_rp(lam.n, budget) if is_rs_c(E)]


def psi_a_of_symmetric(E: SegmentFamily) -> Perm:
    """The sl_2n permutation of a symmetric family (always a symmetric permutation)."""
    _require_symmetric_rp(E)
    return psi(E)
