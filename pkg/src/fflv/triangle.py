"""Number triangles (points of the ambient spaces) and inequality systems."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Mapping, Sequence

from .errors import InvalidInput

Pos = tuple[int, int]


@lru_cache(maxsize=None)
def positions_a(n: int) -> tuple[Pos, ...]:
    """Pairs 1 <= i < j <= n, row by row (j - i, then i)."""
    return tuple(sorted(((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)),
                        key=lambda p: (p[1] - p[0], p[0])))


@lru_cache(maxsize=None)
def positions_c(n: int) -> tuple[Pos, ...]:
    """Pairs 1 <= i < j <= 2n+1-i in the same row order."""
    return tuple(sorted(((i, j) for i in range(1, n + 1) for j in range(i + 1, 2 * n + 2 - i)),
                        key=lambda p: (p[1] - p[0], p[0])))


@lru_cache(maxsize=None)
def _index(kind: str, n: int) -> dict[Pos, int]:
    pos = positions_a(n) if kind == "A" else positions_c(n)
    return {p: k for k, p in enumerate(pos)}


class Triangle:
    """Exact-rational point indexed by root positions.

    Immutable and hashable; ``values`` follow the canonical position order.
    """

    kind = ""
    __slots__ = ("n", "values")

    def __init__(self, n: int, values: Iterable):
        vals = tuple(Fraction(v) for v in values)
        if len(vals) != len(self.positions_for(n)):
            raise InvalidInput(f"expected {len(self.positions_for(n))} entries, got {len(vals)}")
        self.n = n
        self.values = vals

    @staticmethod
    def positions_for(n: int) -> tuple[Pos, ...]:
        raise NotImplementedError

    @property
    def positions(self) -> tuple[Pos, ...]:
        return self.positions_for(self.n)

    @classmethod
    def zero(cls, n: int):
        return cls(n, [0] * len(cls.positions_for(n)))

    @classmethod
    def from_dict(cls, n: int, entries: Mapping[Pos, object]):
        idx = _index(cls.kind, n)
        vals = [Fraction(0)] * len(idx)
        for p, v in entries.items():
            if p not in idx:
                raise InvalidInput(f"position {p} is outside the type {cls.kind} triangle for n={n}")
            vals[idx[p]] = Fraction(v)
        return cls(n, vals)

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence]):
        """Build from rows of the triangle picture, top row first."""
        return cls(n, [v for row in rows for v in row])

    def __getitem__(self, p: Pos) -> Fraction:
        try:
            return self.values[_index(self.kind, self.n)[p]]
        except KeyError:
            raise InvalidInput(f"position {p} is outside the triangle") from None

    def get(self, p: Pos, default=Fraction(0)) -> Fraction:
        k = _index(self.kind, self.n).get(p)
        return default if k is None else self.values[k]

    def items(self):
        return zip(self.positions, self.values)

    def support(self) -> frozenset[Pos]:
        return frozenset(p for p, v in self.items() if v)

    def as_dict(self) -> dict[Pos, Fraction]:
        return dict(self.items())

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def __add__(self, other):
        self._check(other)
        return type(self)(self.n, (x + y for x, y in zip(self.values, other.values)))

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.n, (x - y for x, y in zip(self.values, other.values)))

    def scale(self, c) -> "Triangle":
        return type(self)(self.n, (c * v for v in self.values))

    def _check(self, other):
        if type(other) is not type(self) or other.n != self.n:
            raise InvalidInput("triangles of different shape")

    def __eq__(self, other):
        return type(other) is type(self) and other.n == self.n and other.values == self.values

    def __hash__(self):
        return hash((self.kind, self.n, self.values))

    def rows(self) -> list[list[Fraction]]:
        out: dict[int, list[Fraction]] = {}
        for (i, j), v in self.items():
            out.setdefault(j - i, []).append(v)
        return [out[k] for k in sorted(out)]

    def __repr__(self):
        body = "; ".join(",".join(str(v) for v in row) for row in self.rows())
        return f"{type(self).__name__}(n={self.n}, {body})"


class TriangleA(Triangle):
    kind = "A"
    __slots__ = ()

    @staticmethod
    def positions_for(n: int):
        if n < 2:
            raise InvalidInput("type A triangles need n >= 2")
        return positions_a(n)


class TriangleC(Triangle):
    kind = "C"
    __slots__ = ()

    @staticmethod
    def positions_for(n: int):
        if n < 1:
            raise InvalidInput("type C triangles need n >= 1")
        return positions_c(n)


@dataclass(frozen=True)
class Row:
    normal: tuple[int, ...]
    rhs: int
    kind: str  # "coordinate" or "path"
    tag: object


@dataclass(frozen=True)
class HRep:
    """Inequality system ``normal . x <= rhs`` over a fixed position order."""

    dim: int
    positions: tuple[Pos, ...]
    rows: tuple[Row, ...]

    def matrix(self) -> list[tuple[int, ...]]:
        return [r.normal for r in self.rows]

    def rhs(self) -> list[int]:
        return [r.rhs for r in self.rows]

    def path_rows(self) -> list[Row]:
        return [r for r in self.rows if r.kind == "path"]


def hrep_from_paths(positions: tuple[Pos, ...], paths, bounds) -> HRep:
    """Nonnegativity rows followed by one row per path."""
    idx = {p: k for k, p in enumerate(positions)}
    d = len(positions)
    rows = []
    for k, p in enumerate(positions):
        v = [0] * d
        v[k] = -1
        rows.append(Row(tuple(v), 0, "coordinate", p))
    for path, m in zip(paths, bounds):
        v = [0] * d
        for p in path:
            v[idx[p]] = 1
        rows.append(Row(tuple(v), m, "path", path))
    return HRep(d, positions, tuple(rows))


def scaled_integer_vector(values: Sequence) -> tuple[list[int], int]:
    """Clear denominators: returns ``(ints, L)`` with ``ints = L * values``."""
    fr = [Fraction(v) for v in values]
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    return [int(f * den) for f in fr], den


def satisfies(h: HRep, values: Sequence) -> bool:
    ints, den = scaled_integer_vector(values)
    for r in h.rows:
        if sum(a * x for a, x in zip(r.normal, ints) if a) > r.rhs * den:
            return False
    return True
