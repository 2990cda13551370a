"""Simply-laced Dynkin trees with a fixed enumeration and orientation.

Enumeration (orientation in brackets):

    A_n : 1 -> 2 -> ... -> n
    D_n : 1 -> 2 -> ... -> n-2 -> n-1, plus n-2 -> n
    E_n : 1 -> 2 -> ... -> n-3 -> n-2 -> n-1, plus n-3 -> n

The orientation is never varied; the translation quiver ZQ does not depend on it
up to isomorphism.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

KINDS = ("A", "D", "E")


class DynkinError(ValueError):
    pass


def _edges(kind: str, n: int) -> tuple[tuple[int, int], ...]:
    if kind == "A":
        return tuple((i, i + 1) for i in range(1, n))
    if kind == "D":
        return tuple((i, i + 1) for i in range(1, n - 1)) + ((n - 2, n),)
    if kind == "E":
        return tuple((i, i + 1) for i in range(1, n - 1)) + ((n - 3, n),)
    raise DynkinError(f"unknown kind {kind!r}")


@dataclass(frozen=True)
class DynkinGraph:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DynkinError(f"unknown kind {self.kind!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise DynkinError(f"rank must be a positive integer, got {self.n!r}")
        if self.kind == "D" and self.n < 4:
            raise DynkinError("D_n requires n >= 4")
        if self.kind == "E" and self.n not in (6, 7, 8):
            raise DynkinError("E_n requires n in {6, 7, 8}")

    def __str__(self):
        return f"{self.kind}{self.n}"

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Oriented edges ``(tail, head)``."""
        return _edges(self.kind, self.n)

    @cached_property
    def neighbours(self) -> dict[int, frozenset[int]]:
        nb = {v: set() for v in self.vertices}
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return {v: frozenset(s) for v, s in nb.items()}


def coxeter_number(g: DynkinGraph) -> int:
    if g.kind == "A":
        return g.n + 1
    if g.kind == "D":
        return 2 * g.n - 2
    return {6: 12, 7: 18, 8: 30}[g.n]


@dataclass(frozen=True)
class GraphAutomorphism:
    """A permutation of ``1..n`` stored as the tuple of images."""

    images: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.images[v - 1]

    def __matmul__(self, other: "GraphAutomorphism") -> "GraphAutomorphism":
        # (self @ other)(v) = self(other(v))
        return GraphAutomorphism(tuple(self(other(v)) for v in range(1, len(self.images) + 1)))

    def inverse(self) -> "GraphAutomorphism":
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images, start=1):
            inv[w - 1] = v
        return GraphAutomorphism(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(w == v for v, w in enumerate(self.images, start=1))

    def order(self) -> int:
        k, g = 1, self
        while not g.is_identity:
            g = g @ self
            k += 1
        return k

    @classmethod
    def identity(cls, n: int) -> "GraphAutomorphism":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: tuple[int, ...]) -> "GraphAutomorphism":
        img = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b
        return cls(tuple(img))


def graph_automorphisms(g: DynkinGraph) -> list[GraphAutomorphism]:
    """All automorphisms of the underlying (unoriented) tree, identity first."""
    n = g.n
    ident = GraphAutomorphism.identity(n)
    if g.kind == "A":
        if n == 1:
            return [ident]
        return [ident, GraphAutomorphism(tuple(n + 1 - v for v in range(1, n + 1)))]
    if g.kind == "D":
        if n == 4:
            # vertex 2 is the centre; permute the leaves 1, 3, 4
            out = []
            for perm in itertools.permutations((1, 3, 4)):
                img = list(range(1, 5))
                for a, b in zip((1, 3, 4), perm):
                    img[a - 1] = b
                out.append(GraphAutomorphism(tuple(img)))
            return out
        return [ident, GraphAutomorphism.from_cycles(n, (n - 1, n))]
    if n == 6:
        return [ident, GraphAutomorphism((5, 4, 3, 2, 1, 6))]
    return [ident]


def twist_of_order(g: DynkinGraph, t: int) -> GraphAutomorphism | None:
    """The distinguished automorphism of order ``t`` used as a twist, if any."""
    if t == 1:
        return GraphAutomorphism.identity(g.n)
    if g.kind == "D" and g.n == 4 and t == 3:
        return GraphAutomorphism.from_cycles(4, (1, 3, 4))
    for z in graph_automorphisms(g):
        if z.order() == t:
            if g.kind == "D" and g.n == 4:
                # the swap of the two high vertices
                return GraphAutomorphism.from_cycles(4, (3, 4))
            return z
    return None


def high_vertices(g: DynkinGraph) -> frozenset[int]:
    if g.kind != "D":
        raise DynkinError(f"high vertices are only defined for type D, not {g}")
    return frozenset({g.n - 1, g.n})
