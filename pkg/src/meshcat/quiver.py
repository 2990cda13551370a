"""Finite quivers and paths in them.

Paths are stored in traversal order: ``arrows[0]`` is applied first.  In the
usual right-to-left notation the path ``b a`` (first ``a``, then ``b``) is the
tuple ``(a, b)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterator, Sequence


@dataclass(frozen=True)
class PathSeq:
    source: Hashable
    target: Hashable
    arrows: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __len__(self):
        return len(self.arrows)


class Quiver:
    """A finite quiver with hashable vertex keys and indexed arrows.

    ``arrows[i] = (source, target)``; ``names[i]`` is an optional display name.
    """

    def __init__(self, vertices: Sequence[Hashable], arrows: Sequence[tuple[Hashable, Hashable]],
                 names: Sequence[str] | None = None):
        self.vertices = tuple(vertices)
        self.arrows = tuple((s, t) for s, t in arrows)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        if len(self.index) != len(self.vertices):
            raise ValueError("duplicate vertices")
        for s, t in self.arrows:
            if s not in self.index or t not in self.index:
                raise ValueError(f"arrow {s}->{t} has an endpoint outside the vertex set")
        self.names = tuple(names) if names is not None else tuple(f"a{i}" for i in range(len(self.arrows)))

    def __repr__(self):
        return f"<{type(self).__name__} |Q0|={len(self.vertices)} |Q1|={len(self.arrows)}>"

    @cached_property
    def out_arrows(self) -> dict[Hashable, tuple[int, ...]]:
        out = {v: [] for v in self.vertices}
        for i, (s, _) in enumerate(self.arrows):
            out[s].append(i)
        return {v: tuple(a) for v, a in out.items()}

    @cached_property
    def in_arrows(self) -> dict[Hashable, tuple[int, ...]]:
        inn = {v: [] for v in self.vertices}
        for i, (_, t) in enumerate(self.arrows):
            inn[t].append(i)
        return {v: tuple(a) for v, a in inn.items()}

    @cached_property
    def arrow_index(self) -> dict[tuple[Hashable, Hashable], int]:
        """``(source, target) -> arrow``; only meaningful without multiple arrows."""
        return {st: i for i, st in enumerate(self.arrows)}

    def source(self, a: int):
        return self.arrows[a][0]

    def target(self, a: int):
        return self.arrows[a][1]

    def is_path(self, arrows: Sequence[int]) -> bool:
        return all(self.arrows[a][1] == self.arrows[b][0] for a, b in zip(arrows, arrows[1:]))

    def path(self, source, arrows: Sequence[int]) -> PathSeq:
        arrows = tuple(arrows)
        if arrows:
            if self.arrows[arrows[0]][0] != source or not self.is_path(arrows):
                raise ValueError("arrows are not composable")
            return PathSeq(source, self.arrows[arrows[-1]][1], arrows)
        return PathSeq(source, source, ())

    def path_through(self, vertices: Sequence[Hashable]) -> PathSeq:
        """The path visiting ``vertices`` in order (requires single arrows)."""
        arrows = []
        for u, v in zip(vertices, vertices[1:]):
            try:
                arrows.append(self.arrow_index[(u, v)])
            except KeyError:
                raise ValueError(f"no arrow {u} -> {v}") from None
        return self.path(vertices[0], arrows)

    def enumerate_paths(self, x, y, length: int) -> list[PathSeq]:
        """All paths ``x -> y`` of exactly ``length`` arrows, lexicographic in arrow indices."""
        if length < 0:
            raise ValueError("length must be non-negative")
        out: list[PathSeq] = []
        # prune with reachability in the remaining number of steps
        reach = [{y}]
        for _ in range(length):
            prev = reach[-1]
            reach.append({self.arrows[a][0] for v in prev for a in self.in_arrows[v]})

        def walk(v, word: list[int]):
            left = length - len(word)
            if left == 0:
                if v == y:
                    out.append(PathSeq(x, y, tuple(word)))
                return
            for a in self.out_arrows[v]:
                t = self.arrows[a][1]
                if t in reach[left - 1]:
                    word.append(a)
                    walk(t, word)
                    word.pop()

        if x in reach[length]:
            walk(x, [])
        return out

    def iter_paths_from(self, x, length: int) -> Iterator[tuple[int, ...]]:
        """All arrow words of the given length starting at ``x``."""
        def walk(v, word):
            if len(word) == length:
                yield tuple(word)
                return
            for a in self.out_arrows[v]:
                word.append(a)
                yield from walk(self.arrows[a][1], word)
                word.pop()
        yield from walk(x, [])

    def label(self, v) -> str:
        return str(v)
