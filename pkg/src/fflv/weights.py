"""Weights, Weyl-group elements and weight arithmetic for A_{n-1} and C_n.

Weights are given in the fundamental-weight basis. The epsilon basis is used
for everything the Weyl group touches: in type A a weight is stored with n
epsilon coordinates and compared modulo adding (1, ..., 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from .errors import InvalidInput


def _coords(values: Iterable[int]) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or int(v) != v:
            raise InvalidInput(f"weight coordinate {v!r} is not an integer")
        if v < 0:
            raise InvalidInput(f"weight coordinate {v} is negative")
        out.append(int(v))
    return tuple(out)


@dataclass(frozen=True)
class WeightA:
    """Dominant sl_n weight with coordinates ``a[1..n-1]``."""

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        c = _coords(coords)
        if len(c) < 1:
            raise InvalidInput("a type A weight needs at least one coordinate (n >= 2)")
        object.__setattr__(self, "coords", c)

    @property
    def n(self) -> int:
        return len(self.coords) + 1

    def a(self, i: int) -> int:
        """1-based coordinate a_i."""
        return self.coords[i - 1]

    def regular(self) -> bool:
        return all(v > 0 for v in self.coords)

    def eps(self) -> tuple[int, ...]:
        """(lambda_1, ..., lambda_n) with lambda_i = a_i + ... + a_{n-1}."""
        tail = [0]
        for v in reversed(self.coords):
            tail.append(tail[-1] + v)
        return tuple(reversed(tail))

    def __add__(self, other: "WeightA") -> "WeightA":
        if other.n != self.n:
            raise InvalidInput("rank mismatch")
        return WeightA(x + y for x, y in zip(self.coords, other.coords))


@dataclass(frozen=True)
class WeightC:
    """Dominant sp_2n weight with coordinates ``a[1..n]``."""

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        c = _coords(coords)
        if len(c) < 1:
            raise InvalidInput("a type C weight needs at least one coordinate (n >= 1)")
        object.__setattr__(self, "coords", c)

    @property
    def n(self) -> int:
        return len(self.coords)

    def a(self, i: int) -> int:
        return self.coords[i - 1]

    def regular(self) -> bool:
        return all(v > 0 for v in self.coords)

    def eps(self) -> tuple[int, ...]:
        """lambda_i = a_i + ... + a_n."""
        out = []
        acc = 0
        for v in reversed(self.coords):
            acc += v
            out.append(acc)
        return tuple(reversed(out))


class EpsWeight:
    """A weight in epsilon coordinates.

    ``kind`` is ``"A"`` or ``"C"``. Type A values are equal when they differ
    by a multiple of (1, ..., 1), the relation sum(eps_i) = 0.
    """

    __slots__ = ("kind", "coords")

    def __init__(self, kind: str, coords: Iterable):
        if kind not in ("A", "C"):
            raise InvalidInput(f"unknown weight kind {kind!r}")
        self.kind = kind
        self.coords = tuple(Fraction(c) for c in coords)

    @property
    def n(self) -> int:
        return len(self.coords)

    def normalized(self) -> tuple[Fraction, ...]:
        """Type A: shift so the last coordinate is 0; type C: unchanged."""
        if self.kind == "A" and self.coords:
            last = self.coords[-1]
            return tuple(c - last for c in self.coords)
        return self.coords

    def __eq__(self, other):
        if not isinstance(other, EpsWeight):
            return NotImplemented
        return (self.kind, self.n, self.normalized()) == (other.kind, other.n, other.normalized())

    def __hash__(self):
        return hash((self.kind, self.n, self.normalized()))

    def __add__(self, other: "EpsWeight") -> "EpsWeight":
        self._check(other)
        return EpsWeight(self.kind, (x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "EpsWeight") -> "EpsWeight":
        self._check(other)
        return EpsWeight(self.kind, (x - y for x, y in zip(self.coords, other.coords)))

    def _check(self, other):
        if self.kind != other.kind or self.n != other.n:
            raise InvalidInput("incompatible weights")

    def __repr__(self):
        return f"EpsWeight({self.kind!r}, {tuple(str(c) for c in self.coords)})"


class Perm:
    """Permutation of 1..m in one-line notation.

    Products follow function composition: ``(u * v)(i) == u(v(i))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(v) for v in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise InvalidInput(f"{list(imgs)} is not a permutation of 1..{len(imgs)}")
        self.images = imgs

    @classmethod
    def identity(cls, m: int) -> "Perm":
        return cls(range(1, m + 1))

    @classmethod
    def transposition(cls, m: int, i: int, j: int) -> "Perm":
        imgs = list(range(1, m + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return cls(imgs)

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        if other.size != self.size:
            raise InvalidInput("permutation sizes differ")
        return Perm(self.images[v - 1] for v in other.images)

    def inverse(self) -> "Perm":
        inv = [0] * self.size
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Perm(inv)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm({list(self.images)})"


class SignedPermC:
    """Element (sigma, r) of S_n x| (Z/2)^n acting by eps_i -> r_sigma(i) eps_sigma(i)."""

    __slots__ = ("sigma", "signs")

    def __init__(self, sigma: Perm | Iterable[int], signs: Iterable[int]):
        self.sigma = sigma if isinstance(sigma, Perm) else Perm(sigma)
        self.signs = tuple(int(s) for s in signs)
        if len(self.signs) != self.sigma.size or any(s not in (1, -1) for s in self.signs):
            raise InvalidInput("signs must be one +1/-1 entry per index")

    @classmethod
    def identity(cls, n: int) -> "SignedPermC":
        return cls(Perm.identity(n), [1] * n)

    @property
    def n(self) -> int:
        return self.sigma.size

    def signed_image(self, i: int) -> int:
        """+k or -k when eps_i is sent to +eps_k or -eps_k."""
        k = self.sigma(i)
        return self.signs[k - 1] * k

    def __mul__(self, other: "SignedPermC") -> "SignedPermC":
        if other.n != self.n:
            raise InvalidInput("rank mismatch")
        sigma = [0] * self.n
        signs = [1] * self.n
        for i in range(1, self.n + 1):
            s1 = other.signed_image(i)
            s2 = self.signed_image(abs(s1))
            k = abs(s2)
            sigma[i - 1] = k
            signs[k - 1] = (1 if s1 > 0 else -1) * (1 if s2 > 0 else -1)
        return SignedPermC(sigma, signs)

    def __eq__(self, other):
        return isinstance(other, SignedPermC) and (self.sigma, self.signs) == (other.sigma, other.signs)

    def __hash__(self):
        return hash((self.sigma, self.signs))

    def __repr__(self):
        return f"SignedPermC({list(self.sigma.images)}, {list(self.signs)})"


def weyl_dim_a(lam: WeightA) -> int:
    """Dimension of the irreducible sl_n module with highest weight ``lam``."""
    n = lam.n
    shifted = [l + n - i for i, l in enumerate(lam.eps(), start=1)]
    num = prod(shifted[i] - shifted[j] for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def weyl_dim_c(lam: WeightC) -> int:
    """Dimension of the irreducible sp_2n module with highest weight ``lam``."""
    n = lam.n
    rho = [n - i for i in range(n)]
    shifted = [l + r for l, r in zip(lam.eps(), rho)]

    def product(v):
        p = prod(v)
        for i in range(n):
            for j in range(i + 1, n):
                p *= (v[i] - v[j]) * (v[i] + v[j])
        return p

    return product(shifted) // product(rho)


def act_perm_a(w: Perm, lam: WeightA) -> EpsWeight:
    """w . lambda in epsilon coordinates, using w eps_i = eps_w(i)."""
    if w.size != lam.n:
        raise InvalidInput("rank mismatch")
    eps = lam.eps()
    out = [0] * lam.n
    for i, c in enumerate(eps, start=1):
        out[w(i) - 1] = c
    return EpsWeight("A", out)


def act_signed_perm_c(w: SignedPermC, lam: WeightC) -> EpsWeight:
    if w.n != lam.n:
        raise InvalidInput("rank mismatch")
    out = [0] * lam.n
    for i, c in enumerate(lam.eps(), start=1):
        s = w.signed_image(i)
        out[abs(s) - 1] = c if s > 0 else -c
    return EpsWeight("C", out)


def act_eps_a(w: Perm, mu: EpsWeight) -> EpsWeight:
    """Action of S_n on an arbitrary type A epsilon weight."""
    out = [Fraction(0)] * mu.n
    for i, c in enumerate(mu.coords, start=1):
        out[w(i) - 1] = c
    return EpsWeight("A", out)


def root_a(i: int, j: int, n: int) -> tuple[int, ...]:
    """alpha_{i,j} = eps_i - eps_j."""
    v = [0] * n
    v[i - 1] += 1
    v[j - 1] -= 1
    return tuple(v)


def root_c(i: int, j: int, n: int) -> tuple[int, ...]:
    """alpha_{i,j} for 1 <= i < j <= 2n+1-i: eps_i - eps_j or eps_i + eps_{2n+1-j}."""
    if not 1 <= i < j <= 2 * n + 1 - i:
        raise InvalidInput(f"({i},{j}) is not a type C position for n={n}")
    v = [0] * n
    v[i - 1] += 1
    if j <= n:
        v[j - 1] -= 1
    else:
        v[2 * n - j] += 1
    return tuple(v)


def _mu(kind: str, base: Sequence[int], terms) -> EpsWeight:
    out = [Fraction(c) for c in base]
    for coef, root in terms:
        if coef:
            for k, r in enumerate(root):
                out[k] -= coef * r
    return EpsWeight(kind, out)


def mu_of_point_a(lam: WeightA, x) -> EpsWeight:
    """lambda - sum x_{i,j} alpha_{i,j}; ``x`` is a type A triangle."""
    if x.n != lam.n or x.kind != "A":
        raise InvalidInput("triangle does not match the weight")
    n = lam.n
    return _mu("A", lam.eps(), ((v, root_a(i, j, n)) for (i, j), v in x.items()))


def mu_of_point_c(lam: WeightC, x) -> EpsWeight:
    if x.n != lam.n or x.kind != "C":
        raise InvalidInput("triangle does not match the weight")
    n = lam.n
    return _mu("C", lam.eps(), ((v, root_c(i, j, n)) for (i, j), v in x.items()))


def eps_c_to_a(mu: EpsWeight) -> EpsWeight:
    """Linear map sending eps_i to eps^A_i - eps^A_{2n+1-i}."""
    if mu.kind != "C":
        raise InvalidInput("expected a type C weight")
    n = mu.n
    out = [Fraction(0)] * (2 * n)
    for i, c in enumerate(mu.coords, start=1):
        out[i - 1] += c
        out[2 * n - i] -= c
    return EpsWeight("A", out)
