"""Permutation vertices x(E), the bijection with S_n, and simple vertices.

A segment family E is a set of integer segments [i, j] of [1, n] with i < j.
Two segments intersect when they share at least one point; in particular
[1, 2] and [2, 3] intersect in a single point, which is never a segment, so
no family closed under intersection contains both.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import Budget, InvalidInput, default_budget
from .triangle import Pos, TriangleA
from .weights import Perm, WeightA

Segment = tuple[int, int]


def seg_key(s: Segment) -> tuple[int, int]:
    """Non-decreasing length, then left endpoint."""
    return (s[1] - s[0], s[0])


@dataclass(frozen=True)
class SegmentFamily:
    n: int
    segments: frozenset

    def __post_init__(self):
        segs = frozenset((int(i), int(j)) for i, j in self.segments)
        for i, j in segs:
            if not 1 <= i < j <= self.n:
                raise InvalidInput(f"segment [{i},{j}] is not a positive-length subsegment of [1,{self.n}]")
        object.__setattr__(self, "segments", segs)

    @classmethod
    def parse(cls, n: int, text: str | Iterable[str]) -> "SegmentFamily":
        """From ``"1-2,1-3"`` or an iterable of ``"i-j"`` strings."""
        items = text.split(",") if isinstance(text, str) else list(text)
        segs = []
        for item in items:
            item = item.strip()
            if not item:
                continue
            a, sep, b = item.partition("-")
            if not sep or not a.strip().isdigit() or not b.strip().isdigit():
                raise InvalidInput(f"bad segment {item!r}; expected i-j")
            segs.append((int(a), int(b)))
        return cls(n, frozenset(segs))

    def ordered(self) -> list[Segment]:
        return sorted(self.segments, key=seg_key)

    def labels(self) -> list[str]:
        return [f"{i}-{j}" for i, j in self.ordered()]

    def __iter__(self):
        return iter(self.ordered())

    def __len__(self):
        return len(self.segments)

    def __contains__(self, s):
        return tuple(s) in self.segments

    def __repr__(self):
        return "{" + ", ".join(f"[{i},{j}]" for i, j in self.ordered()) + "}"


def all_segments(n: int) -> list[Segment]:
    return sorted(((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)), key=seg_key)


def intersection(s: Segment, t: Segment) -> tuple[int, int] | None:
    lo, hi = max(s[0], t[0]), min(s[1], t[1])
    return (lo, hi) if lo <= hi else None


def nested(s: Segment, t: Segment) -> bool:
    return (s[0] <= t[0] and t[1] <= s[1]) or (t[0] <= s[0] and s[1] <= t[1])


def _rp_compatible(s: Segment, fam) -> bool:
    # a one-point intersection is never in fam, so touching segments fail here
    for e in fam:
        cap = intersection(s, e)
        if cap is not None and cap != s and cap not in fam:
            return False
    return True


def _rs_compatible(s: Segment, fam) -> bool:
    return all(intersection(s, e) is None or nested(s, e) for e in fam)


def is_rp(E: SegmentFamily) -> bool:
    """Closed under intersection: every nonempty intersection is in E."""
    segs = E.segments
    for s in segs:
        for t in segs:
            if s < t:
                cap = intersection(s, t)
                if cap is not None and cap not in segs:
                    return False
    return True


def is_rs(E: SegmentFamily) -> bool:
    """Any two intersecting segments are nested."""
    segs = list(E.segments)
    return all(intersection(s, t) is None or nested(s, t)
               for k, s in enumerate(segs) for t in segs[k + 1:])


def _dfs_families(segs: Sequence, compatible) -> list[frozenset]:
    # segments come in non-decreasing length, so every intersection a new
    # segment can create has already been decided
    found = []
    fam: set = set()

    def walk(k):
        if k == len(segs):
            found.append(frozenset(fam))
            return
        walk(k + 1)
        s = segs[k]
        if compatible(s, fam):
            fam.add(s)
            walk(k + 1)
            fam.remove(s)

    walk(0)
    return found


@lru_cache(maxsize=None)
def _rp(n: int) -> tuple[SegmentFamily, ...]:
    fams = _dfs_families(all_segments(n), _rp_compatible)
    return tuple(sorted((SegmentFamily(n, f) for f in fams), key=_fam_key))


@lru_cache(maxsize=None)
def _rs(n: int) -> tuple[SegmentFamily, ...]:
    fams = _dfs_families(all_segments(n), _rs_compatible)
    return tuple(sorted((SegmentFamily(n, f) for f in fams), key=_fam_key))


def _fam_key(E: SegmentFamily):
    return (len(E), [seg_key(s) for s in E.ordered()])


def enumerate_rp(n: int, budget: Budget | None = None) -> list[SegmentFamily]:
    """All intersection-closed families on [1, n], found by pruned search."""
    (budget or default_budget()).check_rank_a(n)
    return list(_rp(n))


def enumerate_rs(n: int, budget: Budget | None = None) -> list[SegmentFamily]:
    (budget or default_budget()).check_rank_a(n)
    return list(_rs(n))


def _d_top_segment(i: int, j: int) -> list[Pos]:
    return [(i, l) for l in range(i + 1, j + 1)] + [(k, j) for k in range(i + 1, j)]


def x_of_e(lam: WeightA, E: SegmentFamily) -> TriangleA:
    """The point vanishing off E whose d^{i,j} sums are tight on E.

    Entries are solved shortest segment first; the system is triangular.
    """
    if E.n != lam.n:
        raise InvalidInput("segment family and weight have different n")
    x: dict[Pos, Fraction] = {}
    for i, j in E.ordered():
        total = Fraction(sum(lam.coords[i - 1:j - 1]))
        for p in _d_top_segment(i, j):
            if p != (i, j):
                total -= x.get(p, 0)
        x[(i, j)] = total
    return TriangleA.from_dict(lam.n, x)


def _require_rp(E: SegmentFamily):
    if not is_rp(E):
        raise InvalidInput(f"{E!r} is not closed under intersection")


def transposition_product(n: int, segments: Iterable[Segment]) -> Perm:
    """Product of transpositions, the first listed applied first."""
    images = list(range(1, n + 1))
    # images[k] is w(k+1); left-multiplying by (i j) swaps values i and j
    for i, j in segments:
        images = [j if v == i else i if v == j else v for v in images]
    return Perm(images)


def psi(E: SegmentFamily) -> Perm:
    """w(E): product of the transpositions (i j), [i,j] in E, shorter ones applied first."""
    _require_rp(E)
    return transposition_product(E.n, E.ordered())


def psi_inv(w: Perm) -> SegmentFamily:
    """The intersection-closed family E with psi(E) = w.

    Segments are scanned by non-decreasing length; [i, j] is taken when
    u^{-1}(i) < w^{-1}(i) and u^{-1}(j) > w^{-1}(j), and then u <- (i j) u.
    """
    n = w.size
    winv = w.inverse().images
    uinv = list(range(1, n + 1))
    chosen = []
    for i, j in all_segments(n):
        if uinv[i - 1] < winv[i - 1] and uinv[j - 1] > winv[j - 1]:
            chosen.append((i, j))
            uinv[i - 1], uinv[j - 1] = uinv[j - 1], uinv[i - 1]
    if tuple(uinv) != winv:
        raise AssertionError(f"psi_inv did not terminate at w for {w}")
    return SegmentFamily(n, frozenset(chosen))


def simple_by_perm(w: Perm) -> bool:
    """For all i < j: w^{-1}(j) <= i implies w^{-1}(i+1) <= j."""
    winv = w.inverse()
    n = w.size
    return all(not (winv(j) <= i) or winv(i + 1) <= j
               for i in range(1, n + 1) for j in range(i + 1, n + 1))


@lru_cache(maxsize=None)
def schroder(k: int) -> int:
    """Large Schroeder numbers 1, 2, 6, 22, 90, ...

    X_m = X_{m-1} + sum_{t=0}^{m-1} X_t X_{m-1-t}.
    """
    if k < 0:
        raise InvalidInput("Schroeder index must be nonnegative")
    if k == 0:
        return 1
    return schroder(k - 1) + sum(schroder(t) * schroder(k - 1 - t) for t in range(k))


def b_stat(lam: WeightA, E: SegmentFamily) -> Fraction:
    """Coordinate sum of x(E), the PBW degree of the extremal weight w(E) lambda."""
    _require_rp(E)
    return sum(x_of_e(lam, E).values, Fraction(0))


def pbw_poly(lam: WeightA, budget: Budget | None = None) -> dict[int, int]:
    """sum over intersection-closed E of q^{b(E)}, as {exponent: multiplicity}."""
    counts = Counter()
    for E in enumerate_rp(lam.n, budget):
        b = b_stat(lam, E)
        counts[int(b) if b.denominator == 1 else b] += 1
    return dict(sorted(counts.items()))


def permutation_vertices_a(lam: WeightA, budget: Budget | None = None) -> list[tuple[SegmentFamily, TriangleA, Perm]]:
    """(E, x(E), w(E)) for every intersection-closed E."""
    return [(E, x_of_e(lam, E), psi(E)) for E in enumerate_rp(lam.n, budget)]


def simple_vertices_a(lam: WeightA, budget: Budget | None = None) -> list[tuple[SegmentFamily, TriangleA]]:
    """Simple vertices x(E) over nested families E; needs a regular weight."""
    if not lam.regular():
        raise InvalidInput("simple-vertex classification assumes a regular weight (all a_i > 0)")
    return [(E, x_of_e(lam, E)) for E in enumerate_rs(lam.n, budget)]
