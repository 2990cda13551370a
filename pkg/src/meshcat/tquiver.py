"""Translation quivers ZQ/<zeta tau^-r> and their extensions by projective vertices.

Coordinates follow one convention throughout the package.  A vertex of ZQ is
``(p, q)`` with ``p`` an integer layer and ``q`` a vertex of the Dynkin tree.
For every oriented tree edge ``q -> q'`` there are arrows

    (p, q) -> (p, q')        and        (p, q') -> (p + 1, q),

and ``tau(p, q) = (p - 1, q)``.  The mesh starting at ``x`` ends at
``tau^-1 x``.

A graph automorphism ``zeta`` of the tree is lifted to ZQ as
``(p, q) -> (p + shift[q], zeta(q))``; the shifts are forced by the fixed
orientation and are all zero when ``zeta`` preserves it (the D_n high-vertex
swap).  The quotient identifies ``x`` with ``zeta tau^-r x``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple

from .dynkin import (
    DynkinError,
    DynkinGraph,
    GraphAutomorphism,
    coxeter_number,
    twist_of_order,
)
from .quiver import PathSeq, Quiver


class InvalidType(ValueError):
    """Raised for a (Q, f, t) triple outside the admissible table."""


class TqVertex(NamedTuple):
    p: int
    q: int
    proj: bool = False

    def __str__(self):
        return f"P({self.p}:{self.q})" if self.proj else f"{self.p}:{self.q}"

    @property
    def label(self) -> str:
        return str(self)


def parse_vertex(text: str) -> TqVertex:
    """Inverse of ``str(TqVertex)``; accepts ``"p:q"``, ``"(p,q)"`` and ``"P(p:q)"``."""
    s = text.strip()
    proj = False
    if s.startswith("P(") and s.endswith(")"):
        proj, s = True, s[2:-1]
    s = s.strip("()")
    sep = ":" if ":" in s else ","
    p, q = (int(part) for part in s.split(sep))
    return TqVertex(p, q, proj)


@dataclass(frozen=True)
class RfsType:
    graph: DynkinGraph
    frequency: Fraction
    torsion: int
    r: int
    twist: GraphAutomorphism
    nonstandard: bool = False

    def __str__(self):
        return f"({self.graph}, {self.frequency}, {self.torsion})"

    def as_dict(self) -> dict:
        return {
            "kind": self.graph.kind,
            "n": self.graph.n,
            "f": str(self.frequency),
            "t": self.torsion,
            "r": self.r,
            "twist": list(self.twist.images),
            "nonstandard_capable": self.nonstandard,
        }


def _as_fraction(f) -> Fraction:
    if isinstance(f, Fraction):
        return f
    if isinstance(f, int):
        return Fraction(f)
    if isinstance(f, str):
        try:
            return Fraction(f.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidType(f"malformed rational {f!r}") from None
    raise InvalidType(f"frequency must be a rational, got {f!r}")


def validate_type(kind: str, n: int, f, t: int) -> RfsType:
    """Check ``(kind_n, f, t)`` against the table of admissible types.

    Returns the type with ``r = f (h_Q - 1)`` and the twist resolved.  The
    ``nonstandard`` flag marks ``(D_3m, 1/3, 1)``, the only types admitting a
    nonstandard algebra (in characteristic 2).
    """
    try:
        g = DynkinGraph(kind, n)
    except DynkinError as exc:
        raise InvalidType(str(exc)) from None
    f = _as_fraction(f)
    if f <= 0:
        raise InvalidType(f"frequency must be positive, got {f}")
    h = coxeter_number(g)
    r = f * (h - 1)
    if r.denominator != 1:
        raise InvalidType(f"r = f (h_Q - 1) = {r} is not an integer")
    r = int(r)
    integral = f.denominator == 1

    ok = False
    if t == 1:
        if kind == "A":
            ok = (f * n).denominator == 1
        elif kind == "D":
            ok = integral or (n % 3 == 0 and n >= 6 and f.denominator == 3)
        else:
            ok = integral
    elif t == 2:
        if kind == "A":
            ok = integral and n % 2 == 1 and n >= 3
        elif kind == "D":
            ok = integral
        else:
            ok = integral and n == 6
    elif t == 3:
        ok = kind == "D" and n == 4 and integral
    if not ok:
        raise InvalidType(f"({kind}{n}, {f}, {t}) is not an admissible type")

    twist = twist_of_order(g, t)
    if twist is None or twist.order() != t:
        raise InvalidType(f"{g} has no automorphism of order {t}")
    nonstandard = kind == "D" and n % 3 == 0 and n >= 6 and f == Fraction(1, 3) and t == 1
    return RfsType(g, f, t, r, twist, nonstandard)


def twist_shifts(g: DynkinGraph, zeta: GraphAutomorphism) -> dict[int, int]:
    """Layer shifts making ``(p, q) -> (p + shift[q], zeta(q))`` an automorphism of ZQ.

    The root is a zeta-fixed vertex with shift 0, which makes the lift have the
    same order as ``zeta``.
    """
    edges = set(g.edges)
    fixed = [v for v in g.vertices if zeta(v) == v]
    root = fixed[0] if fixed else 1
    shift = {root: 0}
    todo = deque([root])
    while todo:
        u = todo.popleft()
        for v in sorted(g.neighbours[u]):
            if v in shift:
                continue
            zu, zv = zeta(u), zeta(v)
            # tree edge u -> v gives arrows (p,u)->(p,v) and (p,v)->(p+1,u)
            if (u, v) in edges:
                shift[v] = shift[u] if (zu, zv) in edges else shift[u] + 1
            else:
                shift[v] = shift[u] if (zv, zu) in edges else shift[u] - 1
            todo.append(v)
    return shift


class TranslationQuiver(Quiver):
    """A finite translation quiver with coordinates ``(p, q)``.

    ``tau`` is defined exactly on the non-projective vertices.  ``sigma`` sends
    an arrow ``y -> z`` with ``z`` non-projective to the arrow ``tau z -> y``.
    """

    def __init__(self, vertices, arrows, tau: dict, *, rfs: RfsType | None = None,
                 shifts: dict[int, int] | None = None, configuration: Iterable = ()):
        super().__init__(vertices, arrows, names=[f"{s}->{t}" for s, t in arrows])
        if len(self.arrow_index) != len(self.arrows):
            raise ValueError("translation quivers here have no multiple arrows")
        self.tau = dict(tau)
        self.tau_inv = {v: u for u, v in self.tau.items()}
        self.rfs = rfs
        self.shifts = shifts or {}
        self.configuration = frozenset(configuration)

    # -- coordinates ---------------------------------------------------
    @property
    def graph(self) -> DynkinGraph | None:
        return self.rfs.graph if self.rfs else None

    @property
    def r(self) -> int:
        return self.rfs.r

    def _lift_step(self, p: int, q: int) -> tuple[int, int]:
        z = self.rfs.twist
        return p + self.rfs.r + self.shifts.get(q, 0), z(q)

    def canon(self, p: int, q: int) -> TqVertex:
        """The stored representative of the orbit of the ZQ vertex ``(p, q)``."""
        period = self.rfs.r * self.rfs.torsion
        cur = (p % period, q)
        best = cur
        for _ in range(self.rfs.torsion - 1):
            pp, qq = self._lift_step(*cur)
            cur = (pp % period, qq)
            best = min(best, cur)
        return TqVertex(*best)

    def v(self, p: int, q: int) -> TqVertex:
        return self.canon(p, q)

    @cached_property
    def projectives(self) -> frozenset:
        return frozenset(v for v in self.vertices if v not in self.tau)

    @property
    def stable_vertices(self) -> tuple:
        return tuple(v for v in self.vertices if v in self.tau)

    @property
    def is_stable(self) -> bool:
        return not self.projectives

    @cached_property
    def sigma(self) -> dict[int, int]:
        out = {}
        for i, (y, z) in enumerate(self.arrows):
            if z in self.tau:
                j = self.arrow_index.get((self.tau[z], y))
                if j is None:
                    raise ValueError(f"no sigma-partner for arrow {y}->{z}")
                out[i] = j
        return out

    def label(self, v) -> str:
        return str(v)

    def arrow(self, src, tgt) -> int:
        return self.arrow_index[(src, tgt)]

    def arrow_at(self, p1: int, q1: int, p2: int, q2: int) -> int:
        """Index of the arrow between the ZQ coordinates ``(p1,q1) -> (p2,q2)``."""
        return self.arrow_index[(self.canon(p1, q1), self.canon(p2, q2))]

    def path_at(self, coords) -> PathSeq:
        return self.path_through([self.canon(p, q) for p, q in coords])


def build_quotient(ty: RfsType) -> TranslationQuiver:
    g = ty.graph
    shifts = twist_shifts(g, ty.twist)
    # a bare instance is enough to use canon() while building
    proto = TranslationQuiver.__new__(TranslationQuiver)
    proto.rfs, proto.shifts = ty, shifts
    verts = sorted({proto.canon(p, q) for p in range(ty.r * ty.torsion) for q in g.vertices})
    arrows = set()
    for v in verts:
        for a, b in g.edges:
            if v.q == a:
                arrows.add((v, proto.canon(v.p, b)))
            if v.q == b:
                arrows.add((v, proto.canon(v.p + 1, a)))
    tau = {v: proto.canon(v.p - 1, v.q) for v in verts}
    tq = TranslationQuiver(verts, sorted(arrows), tau, rfs=ty, shifts=shifts)
    if len(verts) != ty.r * g.n:
        raise AssertionError(f"expected {ty.r * g.n} vertices, built {len(verts)}")
    return tq


def attach_projectives(tq: TranslationQuiver, C: Iterable) -> TranslationQuiver:
    """Adjoin a projective vertex ``P(c)`` with arrows ``c -> P(c) -> tau^-1 c`` for each ``c``."""
    C = sorted(set(C))
    for c in C:
        if c not in tq.tau:
            raise ValueError(f"{c} is not a non-projective vertex of the quiver")
    if not C:
        return tq
    new_v = [TqVertex(c.p, c.q, True) for c in C]
    new_a = []
    for c, pc in zip(C, new_v):
        new_a += [(c, pc), (pc, tq.tau_inv[c])]
    return TranslationQuiver(
        list(tq.vertices) + new_v,
        list(tq.arrows) + sorted(new_a),
        tq.tau,
        rfs=tq.rfs,
        shifts=tq.shifts,
        configuration=tq.configuration | frozenset(C),
    )


def stable_part(tq: TranslationQuiver) -> TranslationQuiver:
    """Delete projective vertices (arrow indices of the stable part are preserved)."""
    if tq.is_stable:
        return tq
    keep = [v for v in tq.vertices if v in tq.tau]
    arrows = [(s, t) for s, t in tq.arrows if s in tq.tau and t in tq.tau]
    return TranslationQuiver(keep, arrows, tq.tau, rfs=tq.rfs, shifts=tq.shifts)


def mesh_summands(tq: TranslationQuiver, x) -> list[tuple[int, int]]:
    """Arms ``(alpha: x -> y, beta: y -> tau^-1 x)`` of the mesh starting at ``x``."""
    if x not in tq.tau_inv:
        raise ValueError(f"tau^-1 is undefined at {x}")
    z = tq.tau_inv[x]
    return [(tq.sigma[b], b) for b in tq.in_arrows[z]]


def build_path_p(m: int, tq: TranslationQuiver | None = None) -> PathSeq:
    """The length-4m path from ``(0, 3m-1)`` to ``(1, 3m-1)`` deforming one mesh."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if tq is None:
        tq = build_quotient(validate_type("D", 3 * m, Fraction(1, 3), 1))
    n = 3 * m
    coords = [(0, n - 1), (1, n - 2), (2, n - 3)]
    for k in range(2, 2 * m):
        coords += [(k, n - 2), (k + 1, n - 3)]
    coords += [(2 * m, n - 2), (2 * m, n - 1)]
    return tq.path_at(coords)


def lambda_quiver(m: int) -> TranslationQuiver:
    """The stable quotient ZD_3m / <tau^(2m-1)>."""
    return build_quotient(validate_type("D", 3 * m, Fraction(1, 3), 1))


# ----------------------------------------------------------------------
# automorphisms
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class TqAutomorphism:
    """A vertex bijection of a translation quiver preserving arrows and commuting with tau."""

    quiver: TranslationQuiver = field(repr=False, compare=False, hash=False)
    images: tuple  # images of quiver.vertices, in order
    label: tuple[int, int] | None = field(default=None, compare=False)

    def __call__(self, v):
        return self.images[self.quiver.index[v]]

    @cached_property
    def vertex_map(self) -> dict:
        return dict(zip(self.quiver.vertices, self.images))

    @cached_property
    def arrow_map(self) -> tuple[int, ...]:
        ai = self.quiver.arrow_index
        return tuple(ai[(self(s), self(t))] for s, t in self.quiver.arrows)

    def __matmul__(self, other: "TqAutomorphism") -> "TqAutomorphism":
        return TqAutomorphism(self.quiver, tuple(self(other(v)) for v in self.quiver.vertices))

    def inverse(self) -> "TqAutomorphism":
        inv = {w: v for v, w in self.vertex_map.items()}
        return TqAutomorphism(self.quiver, tuple(inv[v] for v in self.quiver.vertices))

    def power(self, k: int) -> "TqAutomorphism":
        base = self if k >= 0 else self.inverse()
        out = identity_automorphism(self.quiver)
        for _ in range(abs(k)):
            out = base @ out
        return out

    @property
    def is_identity(self) -> bool:
        return self.images == self.quiver.vertices

    def image_set(self, S) -> frozenset:
        return frozenset(self(v) for v in S)

    def with_label(self, label) -> "TqAutomorphism":
        return TqAutomorphism(self.quiver, self.images, label)

    def __str__(self):
        if self.label is not None:
            a, b = self.label
            return f"tau^{a} eta^{b}"
        return "{" + ", ".join(f"{v}->{w}" for v, w in self.vertex_map.items() if v != w) + "}"


def identity_automorphism(tq: TranslationQuiver) -> TqAutomorphism:
    return TqAutomorphism(tq, tq.vertices)


def tau_automorphism(tq: TranslationQuiver) -> TqAutomorphism:
    if not tq.is_stable:
        raise ValueError("tau is a vertex bijection only on stable quivers")
    return TqAutomorphism(tq, tuple(tq.tau[v] for v in tq.vertices))


def is_automorphism(tq: TranslationQuiver, vmap: dict) -> bool:
    if sorted(vmap.values()) != sorted(tq.vertices):
        return False
    arrows = tq.arrow_index
    if any((vmap[s], vmap[t]) not in arrows for s, t in tq.arrows):
        return False
    for v in tq.vertices:
        if (v in tq.tau) != (vmap[v] in tq.tau):
            return False
        if v in tq.tau and vmap[tq.tau[v]] != tq.tau[vmap[v]]:
            return False
    return True


def _search_automorphisms(tq: TranslationQuiver) -> list[dict]:
    verts = tq.vertices
    succ = {v: frozenset(t for _, t in (tq.arrows[a] for a in tq.out_arrows[v])) for v in verts}
    pred = {v: frozenset(s for s, _ in (tq.arrows[a] for a in tq.in_arrows[v])) for v in verts}
    sig = {v: (len(succ[v]), len(pred[v]), v in tq.tau) for v in verts}
    N = len(verts)
    found: list[dict] = []

    def propagate(mapping: dict, used: set, stack: list) -> bool:
        while stack:
            u = stack.pop()
            gu = mapping[u]
            if sig[u] != sig[gu]:
                return False
            for w in succ[u]:
                if w in mapping and mapping[w] not in succ[gu]:
                    return False
            for w in pred[u]:
                if w in mapping and mapping[w] not in pred[gu]:
                    return False
            for f in (tq.tau, tq.tau_inv):
                if u in f:
                    if gu not in f:
                        return False
                    v, gv = f[u], f[gu]
                    if v in mapping:
                        if mapping[v] != gv:
                            return False
                    else:
                        if gv in used:
                            return False
                        mapping[v] = gv
                        used.add(gv)
                        stack.append(v)
        return True

    def extend(mapping: dict, used: set):
        if len(mapping) == N:
            if is_automorphism(tq, mapping):
                found.append(dict(mapping))
            return
        best = None
        for u, gu in mapping.items():
            for w in succ[u]:
                if w not in mapping:
                    cands = [c for c in succ[gu] if c not in used]
                    if best is None or len(cands) < len(best[1]):
                        best = (w, cands)
            for w in pred[u]:
                if w not in mapping:
                    cands = [c for c in pred[gu] if c not in used]
                    if best is None or len(cands) < len(best[1]):
                        best = (w, cands)
            if best is not None and len(best[1]) <= 1:
                break
        if best is None:
            w = next(v for v in verts if v not in mapping)
            best = (w, [c for c in verts if c not in used])
        w, cands = best
        for c in sorted(cands):
            m2, u2 = dict(mapping), set(used)
            m2[w] = c
            u2.add(c)
            if propagate(m2, u2, [w]):
                extend(m2, u2)

    v0 = verts[0]
    for c in verts:
        if sig[c] != sig[v0]:
            continue
        mapping, used = {v0: c}, {c}
        if propagate(mapping, used, [v0]):
            extend(mapping, used)
    return found


def eta_map(tq: TranslationQuiver) -> dict:
    """Vertex map of the high-vertex swap on a type-D quotient with trivial twist."""
    g = tq.graph
    if g is None or g.kind != "D" or tq.rfs.torsion != 1:
        raise ValueError("eta is defined on D-type quotients with trivial twist")
    n = g.n
    swap = {n - 1: n, n: n - 1}
    out = {}
    for v in tq.vertices:
        if v.proj:
            raise ValueError("eta is defined on stable quivers")
        out[v] = TqVertex(v.p, swap.get(v.q, v.q))
    return out


def automorphism_group(tq: TranslationQuiver) -> list[TqAutomorphism]:
    """All automorphisms, found by fixing the image of one vertex and propagating.

    When the group is ``<tau> x <eta>`` (type D, trivial twist, order 2r) the
    elements carry canonical labels ``(a, b)`` meaning ``tau^a eta^b``.
    """
    maps = _search_automorphisms(tq)
    auts = [TqAutomorphism(tq, tuple(m[v] for v in tq.vertices)) for m in maps]
    auts.sort(key=lambda g: tuple(tq.index[w] for w in g.images))
    g = tq.graph
    if tq.is_stable and g is not None and g.kind == "D" and tq.rfs.torsion == 1 and len(auts) == 2 * tq.r:
        tau = tau_automorphism(tq)
        emap = eta_map(tq)
        eta = TqAutomorphism(tq, tuple(emap[v] for v in tq.vertices))
        labels = {}
        for a in range(tq.r):
            ta = tau.power(a)
            for b in range(2):
                h = ta @ eta if b else ta
                labels[h.images] = (a, b)
        if len(labels) == len(auts) and all(h.images in labels for h in auts):
            auts = [h.with_label(labels[h.images]) for h in auts]
            auts.sort(key=lambda h: h.label)
    return auts
