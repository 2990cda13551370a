"""Functors on path categories induced by quiver automorphisms, and their corrections.

An :class:`ArrowAssignment` sends every arrow ``a: x -> y`` to a linear
combination of paths ``g(x) -> g(y)``; it extends multiplicatively to all
paths.  For the nonstandard quotient the plain high-vertex swap does not
preserve the modified mesh ideal, and the arrows ending at ``(1, 3m-2)`` from
the high vertices, together with the arrows ``(0, i+1) -> (1, i)``, need
long parallel correction terms.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .pathcat import FieldSpec, IdealSpec, PathVector, QuotientCategory, _axpy
from .tquiver import (
    TqAutomorphism,
    TranslationQuiver,
    automorphism_group,
    eta_map,
    identity_automorphism,
    lambda_quiver,
    tau_automorphism,
)

MAX_UNKNOWNS = 24


def eta_automorphism(tq: TranslationQuiver) -> TqAutomorphism:
    """The swap of the two high vertices in every layer."""
    e = eta_map(tq)
    return TqAutomorphism(tq, tuple(e[v] for v in tq.vertices), (0, 1))


@dataclass
class ArrowAssignment:
    quiver: TranslationQuiver = field(repr=False)
    vertex_map: dict
    images: list  # images[a] = {word: coeff}, a path vector vertex_map[s] -> vertex_map[t]
    field: FieldSpec = FieldSpec(2)

    def __post_init__(self):
        q = self.quiver
        for a, img in enumerate(self.images):
            s, t = q.arrows[a]
            gs, gt = self.vertex_map[s], self.vertex_map[t]
            for w in img:
                if not w:
                    if gs != gt:
                        raise ValueError(f"image of arrow {q.names[a]} has mismatched endpoints")
                    continue
                if q.arrows[w[0]][0] != gs or q.arrows[w[-1]][1] != gt or not q.is_path(w):
                    raise ValueError(f"image of arrow {q.names[a]} is not a path {gs} -> {gt}")

    @classmethod
    def from_automorphism(cls, g: TqAutomorphism, fld: FieldSpec = FieldSpec(2)) -> "ArrowAssignment":
        return cls(g.quiver, g.vertex_map, [{(b,): 1} for b in g.arrow_map], fld)

    def apply_word(self, w) -> dict:
        acc = {(): 1}
        for a in w:
            nxt: dict = {}
            for u, c in acc.items():
                for v, d in self.images[a].items():
                    x = self.field.norm(nxt.get(u + v, 0) + c * d)
                    if x:
                        nxt[u + v] = x
                    else:
                        nxt.pop(u + v, None)
            acc = nxt
            if not acc:
                break
        return acc

    def apply(self, vec: PathVector) -> PathVector:
        acc: dict = {}
        for w, c in vec.terms.items():
            _axpy(self.field, acc, c, self.apply_word(w))
        return PathVector(self.vertex_map[vec.source], self.vertex_map[vec.target], acc)

    def with_corrections(self, extra: dict) -> "ArrowAssignment":
        imgs = [dict(i) for i in self.images]
        for a, vec in extra.items():
            _axpy(self.field, imgs[a], 1, vec)
        return ArrowAssignment(self.quiver, self.vertex_map, imgs, self.field)


# ----------------------------------------------------------------------
# the paths used by the explicit formula
# ----------------------------------------------------------------------


def correction_paths(m: int, tq: TranslationQuiver | None = None) -> dict:
    """Named paths on the (D_3m, 1/3, 1) quotient, as arrow words.

    ``q[i]`` (1 <= i <= 3m-3) is the cycle at ``(0, i+1)`` going down to
    ``(1, i)`` and alternating up/down until it returns, length ``4m-2``.
    ``l[i]``, ``h[i]``, ``p[i]`` run from ``(i, 3m-2)`` to ``(i+1, 3m-2)``
    through ``3m``, ``3m-1`` and ``(i+1, 3m-3)`` respectively.
    """
    tq = tq or lambda_quiver(m)
    n, r = 3 * m, 2 * m - 1
    q = {}
    for i in range(1, n - 2):
        coords = [(0, i + 1)]
        for k in range(1, r + 1):
            coords += [(k, i), (k, i + 1)]
        q[i] = tq.path_at(coords).arrows
    l, h, p = {}, {}, {}
    for i in range(r):
        l[i] = tq.path_at([(i, n - 2), (i, n), (i + 1, n - 2)]).arrows
        h[i] = tq.path_at([(i, n - 2), (i, n - 1), (i + 1, n - 2)]).arrows
        p[i] = tq.path_at([(i, n - 2), (i + 1, n - 3), (i + 1, n - 2)]).arrows
    return {"q": q, "l": l, "h": h, "p": p}


def _chain(paths: dict, m: int, odd: str, even: str) -> tuple:
    """``l_1 h_2 l_3 ...`` style chain from (1, 3m-2) around to itself (indices mod 2m-1)."""
    r = 2 * m - 1
    word = ()
    for k in range(1, r + 1):
        word += paths[odd if k % 2 else even][k % r]
    return word


def correction_arrows(m: int, tq: TranslationQuiver, swap: bool = False) -> dict:
    """The arrows called alpha, gamma and delta_i."""
    n = 3 * m
    hi_a, hi_g = (n - 1, n) if swap else (n, n - 1)
    return {
        "alpha": tq.arrow_at(0, hi_a, 1, n - 2),
        "gamma": tq.arrow_at(0, hi_g, 1, n - 2),
        "delta": {i: tq.arrow_at(0, i + 1, 1, i) for i in range(1, n - 2)},
    }


def explicit_Hprime(m: int, tq: TranslationQuiver | None = None, swap: bool = False) -> ArrowAssignment:
    """The swap functor with its corrections, written out on arrows."""
    tq = tq or lambda_quiver(m)
    eta = eta_automorphism(tq)
    base = ArrowAssignment.from_automorphism(eta)
    paths = correction_paths(m, tq)
    arr = correction_arrows(m, tq, swap)
    extra = {
        arr["alpha"]: {(arr["gamma"],) + _chain(paths, m, "l", "h"): 1},
        arr["gamma"]: {(arr["alpha"],) + _chain(paths, m, "h", "l"): 1},
    }
    for i, d in arr["delta"].items():
        extra[d] = {paths["q"][i] + (d,): 1}
    return base.with_corrections(extra)


# ----------------------------------------------------------------------
# certification
# ----------------------------------------------------------------------


@dataclass
class IdealCertificate:
    verdict: bool
    rows: list  # (generator, image normal form) pairs, rendered

    def as_dict(self) -> dict:
        return {"verdict": self.verdict, "generators": self.rows}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=1)


def preserves_ideal(F: ArrowAssignment, ideal: IdealSpec, qc: QuotientCategory) -> IdealCertificate:
    q = qc.quiver
    rows = []
    ok = True
    for g in ideal.generators:
        img = F.apply(g)
        nf = qc.normal_form(img)
        ok &= nf.is_zero
        rows.append({
            "generator": g.render(q),
            "source": q.label(g.source),
            "image_normal_form": "" if nf.is_zero else nf.render(q),
        })
    return IdealCertificate(ok, rows)


@dataclass
class CorrectionTemplate:
    """Candidate correction words per arrow; one unknown scalar per candidate."""

    candidates: dict = field(default_factory=dict)  # arrow -> list of words

    @property
    def unknowns(self) -> list[tuple[int, tuple]]:
        return [(a, w) for a in sorted(self.candidates) for w in self.candidates[a]]

    def check(self, g: TqAutomorphism):
        q = g.quiver
        for a, w in self.unknowns:
            s, t = q.arrows[a]
            if q.arrows[w[0]][0] != g(s) or q.arrows[w[-1]][1] != g(t) or not q.is_path(w):
                raise ValueError(f"candidate for {q.names[a]} is not parallel to its image")


def default_template(m: int, tq: TranslationQuiver | None = None) -> CorrectionTemplate:
    tq = tq or lambda_quiver(m)
    paths = correction_paths(m, tq)
    arr = correction_arrows(m, tq)
    cands = {
        arr["alpha"]: [(arr["gamma"],) + _chain(paths, m, "l", "h")],
        arr["gamma"]: [(arr["alpha"],) + _chain(paths, m, "h", "l")],
    }
    for i, d in arr["delta"].items():
        cands[d] = [paths["q"][i] + (d,)]
    return CorrectionTemplate(cands)


def solve_lift(g: TqAutomorphism, template: CorrectionTemplate, ideal: IdealSpec,
               qc: QuotientCategory) -> list[dict]:
    """Every scalar assignment making ``g`` plus corrections preserve the ideal.

    Returns a list of ``{(arrow, word): scalar}`` dictionaries (nonzero
    scalars only).  Exhaustive over ``F_p^unknowns``.
    """
    fld = qc.field
    if fld.p is None:
        raise ValueError("solve_lift enumerates scalars and needs a finite field")
    unknowns = template.unknowns
    if len(unknowns) > MAX_UNKNOWNS:
        raise ValueError(f"{len(unknowns)} unknowns exceed the brute-force bound {MAX_UNKNOWNS}")
    template.check(g)
    base = ArrowAssignment.from_automorphism(g, fld)
    touched = {a for a, _ in unknowns}
    fixed, varying = [], []
    for gen in ideal.generators:
        (varying if any(a in touched for w in gen.terms for a in w) else fixed).append(gen)
    # generators avoiding the template arrows are settled once
    for gen in fixed:
        if not qc.normal_form(base.apply(gen)).is_zero:
            return []
    out = []
    for scalars in itertools.product(range(fld.p), repeat=len(unknowns)):
        extra: dict = {}
        for (a, w), c in zip(unknowns, scalars):
            if c:
                extra.setdefault(a, {})[w] = c
        F = base.with_corrections(extra)
        if all(qc.normal_form(F.apply(gen)).is_zero for gen in varying):
            out.append({u: c for u, c in zip(unknowns, scalars) if c})
    return out


def assignment_from_solution(g: TqAutomorphism, solution: dict, fld: FieldSpec = FieldSpec(2)) -> ArrowAssignment:
    extra: dict = {}
    for (a, w), c in solution.items():
        extra.setdefault(a, {})[w] = c
    return ArrowAssignment.from_automorphism(g, fld).with_corrections(extra)


# ----------------------------------------------------------------------
# vertex-level bookkeeping
# ----------------------------------------------------------------------


def omega_candidates(tq: TranslationQuiver, S, C, group: list | None = None) -> list[TqAutomorphism]:
    """Automorphisms carrying ``S`` onto ``C`` setwise."""
    S, C = frozenset(S), frozenset(C)
    group = group if group is not None else automorphism_group(tq)
    return [g for g in group if g.image_set(S) == C]


def coset_label(g: TqAutomorphism) -> tuple[int, int]:
    """``(a, b)`` with ``g = tau^a eta^b``."""
    tq = g.quiver
    tau = tau_automorphism(tq)
    eta = eta_automorphism(tq)
    cur = identity_automorphism(tq)
    for a in range(tq.r):
        if cur.images == g.images:
            return (a, 0)
        if (cur @ eta).images == g.images:
            return (a, 1)
        cur = tau @ cur
    raise ValueError("automorphism is not of the form tau^a eta^b")
