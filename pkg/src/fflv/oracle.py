"""Exact polyhedral checks that do not use the combinatorial descriptions.

Everything here works on an ``HRep`` and plain points: vertexhood by the rank
of the tight normals, tangent cones by double description, simplicity by a
determinant, vertex sets from Minkowski summands, and lattice counts by box
enumeration.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Sequence

import numpy as np

from .errors import Budget, BudgetExceeded, InvalidInput, default_budget
from .kernels import det_int, rank_int
from .triangle import HRep, scaled_integer_vector

log = logging.getLogger(__name__)


def _values(v) -> Sequence:
    return v.values if hasattr(v, "values") else v


def rank(M: Sequence[Sequence]) -> int:
    """Rank over the rationals; each row is scaled to integers first."""
    rows = [scaled_integer_vector(r)[0] for r in M]
    if not rows:
        return 0
    return rank_int(rows, len(rows[0]))


def determinant(M: Sequence[Sequence]) -> Fraction:
    scaled = [scaled_integer_vector(r) for r in M]
    den = prod(d for _, d in scaled)
    return Fraction(det_int([r for r, _ in scaled]), den)


class _System:
    """Integer-array view of an HRep for fast row evaluation."""

    __slots__ = ("h", "A", "b")

    def __init__(self, h: HRep):
        self.h = h
        self.A = np.array(h.matrix(), dtype=np.int64).reshape(len(h.rows), h.dim)
        self.b = np.array(h.rhs(), dtype=np.int64)

    def slack(self, v):
        ints, den = scaled_integer_vector(_values(v))
        if len(ints) != self.h.dim:
            raise InvalidInput(f"point has {len(ints)} coordinates, system has {self.h.dim}")
        if max(map(abs, ints), default=0) * max(1, int(np.abs(self.A).max(initial=0))) * self.h.dim > 2**60 \
                or den > 2**30:
            return [r.rhs * den - sum(a * x for a, x in zip(r.normal, ints)) for r in self.h.rows]
        return self.b * den - self.A @ np.array(ints, dtype=np.int64)


_cache: dict[int, _System] = {}


def _system(h: HRep) -> _System:
    s = _cache.get(id(h))
    if s is None or s.h is not h:
        if len(_cache) > 256:
            _cache.clear()
        s = _cache[id(h)] = _System(h)
    return s


def feasible(h: HRep, v) -> bool:
    return bool(np.all(np.asarray(_system(h).slack(v)) >= 0))


def tight_rows(h: HRep, v) -> list[int]:
    """Indices of the rows holding with equality at a feasible ``v``."""
    s = np.asarray(_system(h).slack(v))
    if np.any(s < 0):
        raise InvalidInput("point violates the system")
    return [int(k) for k in np.flatnonzero(s == 0)]


def is_vertex_oracle(h: HRep, v) -> bool:
    """Feasible and the tight normals span the whole space."""
    s = np.asarray(_system(h).slack(v))
    if np.any(s < 0):
        return False
    tight = [h.rows[k].normal for k in np.flatnonzero(s == 0)]
    if len(tight) < h.dim:
        return False
    return rank_int(_dedupe(tight), h.dim) == h.dim


def _dedupe(rows: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    seen = {}
    for r in rows:
        seen.setdefault(tuple(r), None)
    return list(seen)


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


@dataclass(frozen=True)
class Cone:
    """Pointed cone given by its extreme rays (primitive integer vectors)."""

    rays: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(sorted(set(primitive(r) for r in self.rays))))

    @property
    def dim(self) -> int:
        return len(self.rays[0]) if self.rays else 0

    def __len__(self):
        return len(self.rays)


def double_description(rows: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{y : a . y <= 0 for a in rows}``.

    Incremental double description over the integers with the combinatorial
    adjacency test. Raises InvalidInput when the rows do not have full rank.
    """
    rows = [tuple(int(x) for x in r) for r in _dedupe(rows) if any(r)]
    basis: list[tuple[int, ...]] = []
    rest: list[tuple[int, ...]] = []
    for r in rows:
        if len(basis) < dim and rank_int(basis + [r], dim) == len(basis) + 1:
            basis.append(r)
        else:
            rest.append(r)
    if len(basis) < dim:
        raise InvalidInput("cone is not pointed: constraint rows do not have full rank")

    # initial simplicial cone: columns of -B^{-1}, scaled to integers
    B = [[Fraction(x) for x in r] for r in basis]
    inv = _inverse(B)
    rays = []
    for k in range(dim):
        col = [-inv[i][k] for i in range(dim)]
        rays.append(primitive(scaled_integer_vector(col)[0]))
    done = list(basis)
    zmask = [sum(1 << q for q in range(dim) if q != k) for k in range(dim)]

    for a in rest:
        vals = [sum(x * y for x, y in zip(a, r)) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        if not pos:
            done.append(a)
            for k, v in enumerate(vals):
                if v == 0:
                    zmask[k] |= 1 << (len(done) - 1)
            continue
        neg = [k for k, v in enumerate(vals) if v < 0]
        bit = 1 << len(done)
        new_rays, new_masks = [], []
        for k, v in enumerate(vals):
            if v <= 0:
                new_rays.append(rays[k])
                new_masks.append(zmask[k] | (bit if v == 0 else 0))
        for p in pos:
            for q in neg:
                common = zmask[p] & zmask[q]
                if bin(common).count("1") < dim - 2:
                    continue
                if any(t != p and t != q and common & zmask[t] == common for t in range(len(rays))):
                    continue
                vp, vq = vals[p], vals[q]
                r = primitive([vp * y - vq * x for x, y in zip(rays[p], rays[q])])
                new_rays.append(r)
                new_masks.append(common | bit)
        rays, zmask = new_rays, new_masks
        done.append(a)
    return sorted(set(rays))


def _inverse(B: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(B)
    m = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(B)]
    for c in range(n):
        piv = next(r for r in range(c, n) if m[r][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def tangent_cone_rays(h: HRep, v) -> Cone:
    """Extreme rays of ``{y : N y <= 0}`` over the normals tight at vertex ``v``."""
    if not is_vertex_oracle(h, v):
        raise InvalidInput("tangent cone requested at a non-vertex")
    tight = [h.rows[k].normal for k in tight_rows(h, v)]
    return Cone(tuple(double_description(tight, h.dim)))


def is_simple_oracle(h: HRep, v) -> bool:
    """Tangent cone simplicial with a unimodular matrix of primitive rays."""
    cone = tangent_cone_rays(h, v)
    if len(cone) != h.dim:
        return False
    return abs(det_int([list(r) for r in cone.rays])) == 1


def vertex_enumeration(h: HRep) -> list[tuple[Fraction, ...]]:
    """All vertices of a bounded system by double description on its homogenization."""
    rows = [tuple(r.normal) + (-r.rhs,) for r in h.rows]
    rows.append((0,) * h.dim + (-1,))
    out = []
    for r in double_description(rows, h.dim + 1):
        t = r[-1]
        if t <= 0:
            raise InvalidInput("system is unbounded")
        out.append(tuple(Fraction(x, t) for x in r[:-1]))
    return sorted(out)


def coordinate_bounds(h: HRep) -> list[int]:
    """Per-coordinate upper bound from single path rows (nonnegative normals only)."""
    bounds = []
    for k in range(h.dim):
        cands = [r.rhs // r.normal[k] for r in h.path_rows() if r.normal[k] > 0]
        if not cands:
            raise InvalidInput(f"coordinate {h.positions[k]} is unbounded by any path row")
        bounds.append(max(0, min(cands)))
    return bounds


def summand_vertices(h: HRep, budget: Budget | None = None) -> tuple[list[tuple[int, ...]], bool]:
    """Vertices of a one-fundamental-weight polytope by brute force.

    Candidates are c * chi_S for every subset S of the support, where c is
    the common coordinate bound. Past ``budget.max_brute_support`` the
    candidates are restricted to sets no path row meets twice, and the
    second return value is False to mark the check as not independent.
    """
    budget = budget or default_budget()
    bounds = coordinate_bounds(h)
    support = [k for k, b in enumerate(bounds) if b > 0]
    if not support:
        return [tuple([0] * h.dim)], True
    scale = {bounds[k] for k in support}
    if len(scale) != 1:
        raise InvalidInput("summand is not a scaled 0/1 polytope: coordinate bounds differ")
    c = scale.pop()
    independent = len(support) <= budget.max_brute_support
    if independent:
        subsets = itertools.chain.from_iterable(
            itertools.combinations(support, r) for r in range(len(support) + 1))
    else:
        log.warning("support of size %d exceeds %d; using row-independent sets only",
                    len(support), budget.max_brute_support)
        subsets = _row_independent_sets(h, support)
    found = []
    for s in subsets:
        pt = [0] * h.dim
        for k in s:
            pt[k] = c
        if is_vertex_oracle(h, pt):
            found.append(tuple(pt))
    return found, independent


def _row_independent_sets(h: HRep, support):
    clash = {k: set() for k in support}
    for r in h.path_rows():
        ks = [k for k in support if r.normal[k]]
        for a in ks:
            clash[a].update(b for b in ks if b != a)
    chosen: list[int] = []

    def walk(start):
        yield tuple(chosen)
        for t in range(start, len(support)):
            k = support[t]
            if not any(k in clash[c] for c in chosen):
                chosen.append(k)
                yield from walk(t + 1)
                chosen.pop()

    yield from walk(0)


def candidate_vertices(summands: Sequence[HRep], budget: Budget | None = None) -> list[tuple[int, ...]]:
    """All sums v_1 + ... + v_k of summand vertices (deduplicated, sorted)."""
    budget = budget or default_budget()
    if not summands:
        raise InvalidInput("no summands")
    dim = summands[0].dim
    if any(s.dim != dim for s in summands):
        raise InvalidInput("summands live in different spaces")
    lists = []
    for s in summands:
        vs, independent = summand_vertices(s, budget)
        if not independent:
            log.warning("summand vertex list is not independently verified")
        lists.append(vs)
    total = prod(len(v) for v in lists)
    if total > budget.lattice_nodes:
        raise BudgetExceeded(f"{total} Minkowski candidates exceed the cap {budget.lattice_nodes}")
    sums = set()
    for combo in itertools.product(*lists):
        sums.add(tuple(map(sum, zip(*combo))))
    return sorted(sums)


def oracle_vertices(h: HRep, summands: Sequence[HRep], budget: Budget | None = None) -> list[tuple[int, ...]]:
    """Minkowski candidates that pass the rank test for ``h``."""
    return [v for v in candidate_vertices(summands, budget) if is_vertex_oracle(h, v)]


def count_lattice(h: HRep, budget: Budget | None = None) -> int:
    """Integer points by plain box enumeration plus membership."""
    budget = budget or default_budget()
    bounds = coordinate_bounds(h)
    box = prod(b + 1 for b in bounds)
    if box > budget.lattice_nodes:
        raise BudgetExceeded(f"box of {box} points exceeds the cap {budget.lattice_nodes}")
    A = np.array(h.matrix(), dtype=np.int64).reshape(len(h.rows), h.dim)
    b = np.array(h.rhs(), dtype=np.int64)
    # vectorize a trailing block of coordinates, loop over the rest
    split = h.dim
    inner = 1
    while split > 0 and inner * (bounds[split - 1] + 1) <= 1 << 16:
        split -= 1
        inner *= bounds[split] + 1
    grids = np.indices([bd + 1 for bd in bounds[split:]]).reshape(h.dim - split, -1)
    inner_vals = A[:, split:] @ grids
    count = 0
    for outer in itertools.product(*(range(bd + 1) for bd in bounds[:split])):
        part = A[:, :split] @ np.array(outer, dtype=np.int64) if split else 0
        count += int(np.count_nonzero(np.all(inner_vals <= (b - part)[:, None], axis=0)))
    return count
