"""Vertices of type A FFLV polytopes through tuples of antichains.

P_lambda is the Minkowski sum of the polytopes P_{a_i omega_i}, whose
vertices are a_i times indicator functions of antichains of Q_i. A tuple of
antichains gives a vertex exactly when every adjacent pair passes the local
test in ``is_vertex_pair``; such tuples are called nice.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import Budget, InvalidInput, default_budget
from .polytope_a import comparable, q_set
from .triangle import Pos, TriangleA
from .weights import WeightA

log = logging.getLogger(__name__)


def _key(p: Pos) -> tuple[int, int]:
    return (p[1] - p[0], p[0])


@dataclass(frozen=True)
class Antichain:
    """An antichain of Q_i inside the sl_n triangle."""

    n: int
    i: int
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(tuple(p) for p in self.members))
        q = q_set(self.n, self.i)
        if not self.members <= q:
            raise InvalidInput(f"{sorted(self.members)} is not inside Q_{self.i}")
        ms = list(self.members)
        for a in range(len(ms)):
            for b in range(a + 1, len(ms)):
                if comparable(ms[a], ms[b]):
                    raise InvalidInput(f"{ms[a]} and {ms[b]} are comparable")

    def sorted_members(self) -> list[Pos]:
        return sorted(self.members, key=_key)

    def order_key(self):
        return (len(self.members), tuple(_key(p) for p in self.sorted_members()))

    def __iter__(self):
        return iter(self.sorted_members())

    def __len__(self):
        return len(self.members)

    def __contains__(self, p):
        return p in self.members


@dataclass(frozen=True)
class AntichainTuple:
    """Antichains A_1, A_2, ... with A_i inside Q_i of one sl_n triangle.

    Type A uses all n-1 indices; type C certificates use the first n/2.
    """

    chains: tuple[Antichain, ...]

    def __post_init__(self):
        object.__setattr__(self, "chains", tuple(self.chains))
        if not self.chains:
            raise InvalidInput("empty antichain tuple")
        n = self.chains[0].n
        for k, a in enumerate(self.chains, start=1):
            if a.n != n or a.i != k:
                raise InvalidInput("antichain tuple must list A_1, A_2, ... of one triangle")

    @property
    def n(self) -> int:
        return self.chains[0].n

    def __getitem__(self, i: int) -> Antichain:
        return self.chains[i - 1]

    def __len__(self):
        return len(self.chains)


@dataclass(frozen=True)
class PairGraph:
    nodes: frozenset
    edges: frozenset
    delta: frozenset
    malformed: bool = False


@lru_cache(maxsize=None)
def _antichains(n: int, i: int, allowed: frozenset | None = None) -> tuple[Antichain, ...]:
    elems = sorted(q_set(n, i) if allowed is None else allowed, key=_key)
    found: list[frozenset] = []

    def grow(start, chosen):
        found.append(frozenset(chosen))
        for k in range(start, len(elems)):
            p = elems[k]
            if all(not comparable(p, c) for c in chosen):
                chosen.append(p)
                grow(k + 1, chosen)
                chosen.pop()

    grow(0, [])
    out = [Antichain(n, i, s) for s in found]
    out.sort(key=Antichain.order_key)
    return tuple(out)


def antichains_of_qi(n: int, i: int) -> list[Antichain]:
    """Every antichain of Q_i, the empty one first, by size then position."""
    if n < 2 or not 1 <= i <= n - 1:
        raise InvalidInput(f"Q_{i} undefined for n={n}")
    return list(_antichains(n, i))


def _outside(p: Pos, i: int) -> bool:
    # not in Q_i & Q_{i+1}; within A_i u A_{i+1} that means column i+1 or row i+1
    return p[1] == i + 1 or p[0] == i + 1


def pair_graph(a_i: Antichain, a_next: Antichain) -> PairGraph:
    """Comparability graph on A_i u A_{i+1} and its distinguished component."""
    if a_next.n != a_i.n or a_next.i != a_i.i + 1:
        raise InvalidInput("pair_graph needs antichains with consecutive indices")
    i = a_i.i
    nodes = a_i.members | a_next.members
    ordered = sorted(nodes, key=_key)
    edges = frozenset(frozenset((p, q)) for k, p in enumerate(ordered)
                      for q in ordered[k + 1:] if comparable(p, q))
    adj = {p: [] for p in ordered}
    for e in edges:
        p, q = tuple(e)
        adj[p].append(q)
        adj[q].append(p)
    outside = [p for p in ordered if _outside(p, i)]
    if not outside:
        return PairGraph(frozenset(nodes), edges, frozenset())
    seen = {outside[0]}
    queue = deque([outside[0]])
    while queue:
        p = queue.popleft()
        for q in adj[p]:
            if q not in seen:
                seen.add(q)
                queue.append(q)
    if not all(p in seen for p in outside):
        log.warning("nodes outside Q_%d & Q_%d lie in different components: %s", i, i + 1, outside)
        return PairGraph(frozenset(nodes), edges, frozenset(), malformed=True)
    return PairGraph(frozenset(nodes), edges, frozenset(seen))


def is_vertex_pair(a_i: Antichain, a_next: Antichain) -> bool:
    """Whether a_i chi_{A_i} + a_{i+1} chi_{A_{i+1}} is a vertex of the two-term sum."""
    g = pair_graph(a_i, a_next)
    if g.malformed:
        return False
    both = a_i.members & a_next.members
    return all(p in both or p in g.delta for p in g.nodes)


def is_nice_tuple(t: AntichainTuple) -> bool:
    return all(is_vertex_pair(t[i], t[i + 1]) for i in range(1, len(t)))


def tuple_point(lam: WeightA, t: AntichainTuple) -> TriangleA:
    """sum_i a_i chi_{A_i}."""
    if t.n != lam.n or len(t) != lam.n - 1:
        raise InvalidInput("rank mismatch")
    acc: dict[Pos, int] = {}
    for i, a in enumerate(t.chains, start=1):
        c = lam.a(i)
        if c:
            for p in a.members:
                acc[p] = acc.get(p, 0) + c
    return TriangleA.from_dict(lam.n, acc)


def nice_tuples(lists: Sequence[Sequence[Antichain]]) -> Iterable[tuple[Antichain, ...]]:
    """Depth-first product of per-index antichain lists, keeping nice prefixes.

    Pair tests depend only on the two antichains, so they are tabulated once.
    """
    m = len(lists)
    ok = [[[is_vertex_pair(a, b) for b in lists[k + 1]] for a in lists[k]] for k in range(m - 1)]
    chosen: list[int] = []

    def walk(k):
        if k == m:
            yield tuple(lists[j][c] for j, c in enumerate(chosen))
            return
        for c in range(len(lists[k])):
            if k and not ok[k - 1][chosen[-1]][c]:
                continue
            chosen.append(c)
            yield from walk(k + 1)
            chosen.pop()

    yield from walk(0)


def enumerate_vertices_a(lam: WeightA, budget: Budget | None = None) -> list[tuple[AntichainTuple, TriangleA]]:
    """All vertices of P_lambda with an antichain-tuple certificate each.

    For singular weights several nice tuples give one point; the first in
    enumeration order is kept, which is the least one at the zero-weight
    indices.
    """
    budget = budget or default_budget()
    budget.check_rank_a(lam.n)
    n = lam.n
    lists = [_antichains(n, i) for i in range(1, n)]
    out: dict[TriangleA, AntichainTuple] = {}
    for chains in nice_tuples(lists):
        t = AntichainTuple(chains)
        pt = tuple_point(lam, t)
        if pt not in out:
            out[pt] = t
    return [(t, p) for p, t in out.items()]
