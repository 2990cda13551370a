"""Configurations of stable translation quivers.

A configuration ``C`` is a vertex set with

1. ``Hom(e, f) = 0`` for distinct ``e, f`` in ``C`` and ``End(e) = k``;
2. for every vertex ``e`` some ``f`` in ``C`` with ``Hom(e, f) != 0``.

Homs are taken in the mesh category of the stable quiver.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .pathcat import QuotientCategory
from .tquiver import (
    RfsType,
    TqAutomorphism,
    TranslationQuiver,
    automorphism_group,
)


class CatalogError(ValueError):
    pass


@dataclass
class ConfigReport:
    verdict: bool
    axiom1_violations: list = field(default_factory=list)
    axiom2_violations: list = field(default_factory=list)
    witnesses: dict = field(default_factory=dict, repr=False)

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "axiom1_violations": self.axiom1_violations,
            "axiom2_violations": self.axiom2_violations,
        }


def check_configuration(qc: QuotientCategory, C: Iterable) -> ConfigReport:
    tq = qc.quiver
    C = sorted(set(C))
    missing = [c for c in C if c not in tq.index]
    if missing:
        raise ValueError(f"not vertices of the quiver: {[str(c) for c in missing]}")
    ax1 = []
    for e in C:
        for f in C:
            d = qc.hom_dim(e, f)
            want = 1 if e == f else 0
            if d != want:
                ax1.append({"source": str(e), "target": str(f), "dim": d})
    ax2 = []
    wit = {}
    for e in tq.vertices:
        for f in C:
            if qc.hom_dim(e, f):
                wit[e] = f
                break
        else:
            ax2.append(str(e))
    return ConfigReport(not ax1 and not ax2, ax1, ax2, wit)


# ----------------------------------------------------------------------
# catalog
# ----------------------------------------------------------------------

E_PERIOD = {6: 11, 7: 17, 8: 29}


def _catalog_points(ty: RfsType) -> list[tuple[int, int]]:
    g, t = ty.graph, ty.torsion
    n, f = g.n, ty.frequency
    pts = []
    if g.kind == "A" and t == 1:
        s = ty.r
        pts = [(i, n) for i in range(s)]
    elif g.kind == "A" and t == 2:
        p = (n - 1) // 2
        s = int(f)
        for i in range(s):
            for j in range(p):
                # top row offset j - p; an offset of j + p + 1 would collide with (j, 1) under the twist
                pts += [((2 * p + 1) * i + j, 1), ((2 * p + 1) * i + j - p, 2 * p + 1)]
            pts.append(((2 * p + 1) * i + p, p + 1))
    elif g.kind == "D" and t == 3:
        for i in range(int(f)):
            pts += [(5 * i, 3), (5 * i, 4), (5 * i + 3, 2), (5 * i + 1, 1)]
    elif g.kind == "D" and f.denominator == 3:
        m = n // 3
        s = f.numerator
        for i in range(s):
            pts.append(((2 * m - 1) * i, 3 * m - 1))
            pts += [((2 * m - 1) * i + j, 1) for j in range(m, 2 * m - 1)]
    elif g.kind == "D":
        k = 2 * n - 3
        for i in range(int(f)):
            pts += [(k * i, n - 1), (k * i, n), (k * i + n - 1, n - 2)]
            pts += [(k * i + j, 1) for j in range(1, n - 2)]
    elif g.kind == "E":
        mn = E_PERIOD[n]
        for i in range(int(f)):
            pts += [(mn * i + j, 1) for j in range(n - 4)]
            pts += [(mn * i - 1, n), (mn * i - 2, n - 1), (mn * i - 1, n - 1),
                    (mn * i + (mn - 1) // 2, n - 3)]
    else:  # pragma: no cover - the type table is exhaustive
        raise CatalogError(f"no catalog entry for {ty}")
    return pts


def catalog_configuration(tq: TranslationQuiver, preset: str = "catalog") -> frozenset:
    """The radical-of-projectives positions for the quiver's type.

    ``preset="simples"`` (nonstandard type only) gives the positions of the
    simple modules instead, ``{(0, 3m), (2m-1-j, 1)}``.  Negative layers in the
    formulas are reduced to canonical representatives.
    """
    ty = tq.rfs
    if ty is None:
        raise CatalogError("the quiver carries no type")
    if preset == "simples":
        if not ty.nonstandard:
            raise CatalogError("the simples preset exists only for (D3m, 1/3, 1)")
        m = ty.graph.n // 3
        pts = [(0, 3 * m)] + [(2 * m - 1 - j, 1) for j in range(1, m)]
    elif preset == "lambda":
        if not ty.nonstandard:
            raise CatalogError("the lambda preset exists only for (D3m, 1/3, 1)")
        m = ty.graph.n // 3
        pts = [(0, 3 * m - 1)] + [(2 * m - 1 - j, 1) for j in range(1, m)]
    elif preset == "catalog":
        pts = _catalog_points(ty)
    else:
        raise CatalogError(f"unknown preset {preset!r}")
    C = frozenset(tq.canon(p, q) for p, q in pts)
    if len(C) != len(pts):
        raise CatalogError(f"catalog points collide in {ty}")
    return C


def lambda_configuration(m: int, tq: TranslationQuiver) -> frozenset:
    return frozenset(tq.canon(p, q) for p, q in [(0, 3 * m - 1)] + [(2 * m - 1 - j, 1) for j in range(1, m)])


def configuration_stabilizer(tq: TranslationQuiver, C, group: list | None = None) -> list[TqAutomorphism]:
    C = frozenset(C)
    group = group if group is not None else automorphism_group(tq)
    return [g for g in group if g.image_set(C) == C]


def configurations_isomorphic(tq: TranslationQuiver, C1, C2, group: list | None = None) -> TqAutomorphism | None:
    C1, C2 = frozenset(C1), frozenset(C2)
    if len(C1) != len(C2):
        return None
    group = group if group is not None else automorphism_group(tq)
    for g in group:
        if g.image_set(C1) == C2:
            return g
    return None
