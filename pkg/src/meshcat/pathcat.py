"""Exact linear algebra in path categories modulo an ideal.

Elements of the path category are sparse dictionaries ``word -> coefficient``
where a word is a tuple of arrow indices in traversal order.  All words of one
element share their source and target.  Words are compared by
``(length, word)``; the leading word of an element is the largest one.

Two normal-form engines are provided.

``degree``
    For ideals generated in a single degree.  The quotient is built one
    path length at a time from each source vertex, as the cokernel of the
    relations inside ``V_{d-1} (x) arrows``.
``rewrite``
    For arbitrary ideals.  The generators are completed to a confluent
    rewriting system (Buchberger completion for path algebras under the
    degree-lexicographic order).

Both report the same normal words on homogeneous input.
"""
from __future__ import annotations

import heapq
import json
import time
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from .quiver import PathSeq, Quiver
from .tquiver import TranslationQuiver, TqVertex, build_path_p, mesh_summands


class EngineError(RuntimeError):
    pass


class BudgetExceeded(RuntimeError):
    """A time or reduction budget ran out before the engine finished."""


# ----------------------------------------------------------------------
# fields
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """``p`` a small prime for F_p, or ``None`` for the rationals."""

    p: int | None = 2

    def __post_init__(self):
        if self.p is not None:
            if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p ** 0.5) + 1)):
                raise ValueError(f"{self.p} is not a prime")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().upper()
        if t in ("Q", "QQ"):
            return cls(None)
        if t.startswith("F") and t[1:].isdigit():
            return cls(int(t[1:]))
        raise ValueError(f"unknown field {text!r} (use F<p> or Q)")

    @property
    def characteristic(self) -> int:
        return self.p or 0

    def __str__(self):
        return "Q" if self.p is None else f"F{self.p}"

    def el(self, x):
        if self.p is None:
            return Fraction(x)
        return int(x) % self.p

    def inv(self, x):
        if self.p is None:
            return 1 / Fraction(x)
        return pow(int(x), self.p - 2, self.p)

    def norm(self, x):
        return x % self.p if self.p is not None else x


# ----------------------------------------------------------------------
# sparse elements
# ----------------------------------------------------------------------


def _key(w):
    return (len(w), w)


def lead_word(vec: dict):
    return max(vec, key=_key)


def _axpy(field: FieldSpec, acc: dict, c, vec: dict):
    """acc += c * vec, dropping zeros."""
    p = field.p
    for w, v in vec.items():
        x = acc.get(w, 0) + c * v
        if p is not None:
            x %= p
        if x:
            acc[w] = x
        else:
            acc.pop(w, None)


@dataclass
class PathVector:
    """A linear combination of parallel paths ``source -> target``."""

    source: object
    target: object
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(w): c for w, c in self.terms.items() if c}

    @classmethod
    def from_path(cls, path: PathSeq, coeff=1) -> "PathVector":
        return cls(path.source, path.target, {path.arrows: coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def lead(self):
        return lead_word(self.terms)

    def add(self, other: "PathVector", fld: FieldSpec, c=1) -> "PathVector":
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("adding non-parallel path vectors")
        acc = dict(self.terms)
        _axpy(fld, acc, c, other.terms)
        return PathVector(self.source, self.target, acc)

    def then(self, other: "PathVector", fld: FieldSpec) -> "PathVector":
        """Compose: first ``self``, then ``other``."""
        if self.target != other.source:
            raise ValueError("path vectors are not composable")
        acc: dict = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                x = fld.norm(acc.get(w, 0) + a * b)
                if x:
                    acc[w] = x
                else:
                    acc.pop(w, None)
        return PathVector(self.source, other.target, acc)

    def render(self, quiver: Quiver) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=_key):
            c = self.terms[w]
            name = "*".join(quiver.names[a] for a in reversed(w)) if w else f"e[{quiver.label(self.source)}]"
            parts.append(name if c == 1 else f"{c}.{name}")
        return " + ".join(parts)


@dataclass
class IdealSpec:
    generators: list
    homogeneous: bool = field(init=False)

    def __post_init__(self):
        degs = set()
        for g in self.generators:
            if g.is_zero:
                raise ValueError("zero generator")
            if () in g.terms:
                raise ValueError("generators must lie in the arrow ideal")
            degs |= {frozenset(g.degrees)}
        self.homogeneous = all(len(d) == 1 for d in degs)

    @property
    def degrees(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(g.degrees)) for g in self.generators]


# ----------------------------------------------------------------------
# ideals built from translation quivers
# ----------------------------------------------------------------------


def mesh_relation(tq: TranslationQuiver, x) -> PathVector:
    terms = {(a, b): 1 for a, b in mesh_summands(tq, x)}
    return PathVector(x, tq.tau_inv[x], terms)


def mesh_ideal(tq: TranslationQuiver) -> IdealSpec:
    # on A_1 quotients the stable meshes are empty sums
    rels = (mesh_relation(tq, x) for x in tq.vertices if x in tq.tau_inv)
    return IdealSpec([r for r in rels if not r.is_zero])


def modified_mesh_ideal(tq: TranslationQuiver, m: int, fld: FieldSpec = FieldSpec(2)) -> IdealSpec:
    """Mesh ideal with the generator at ``(0, 3m-1)`` replaced by ``m_x + p``."""
    if fld.characteristic != 2:
        raise ValueError("the modified mesh ideal requires characteristic 2")
    g = tq.graph
    if g is None or (g.kind, g.n) != ("D", 3 * m) or tq.r != 2 * m - 1 or tq.rfs.torsion != 1:
        raise ValueError(f"modified mesh ideal needs the (D{3 * m}, 1/3, 1) quotient")
    x0 = TqVertex(0, 3 * m - 1)
    p = build_path_p(m, tq)
    gens = []
    for x in tq.vertices:
        if x not in tq.tau_inv:
            continue
        rel = mesh_relation(tq, x)
        if x == x0:
            rel = PathVector(x, rel.target, {**rel.terms, p.arrows: 1})
        gens.append(rel)
    return IdealSpec(gens)


# ----------------------------------------------------------------------
# budgets
# ----------------------------------------------------------------------


@dataclass
class Budget:
    seconds: float | None = None
    max_reductions: int = 10 ** 6
    _start: float = field(default_factory=time.monotonic, repr=False)

    def check_time(self):
        if self.seconds is not None and time.monotonic() - self._start > self.seconds:
            raise BudgetExceeded(f"time budget of {self.seconds:g}s exhausted")

    def restart(self):
        self._start = time.monotonic()


# ----------------------------------------------------------------------
# rewriting engine
# ----------------------------------------------------------------------


class RewriteEngine:
    """Completion of the ideal to a confluent, interreduced rewriting system."""

    name = "rewrite"

    def __init__(self, quiver: Quiver, ideal: IdealSpec, fld: FieldSpec, budget: Budget):
        self.quiver = quiver
        self.field = fld
        self.budget = budget
        self.rules: dict[tuple, dict] = {}
        self.lengths: list[int] = []
        self.reductions = 0
        self._by_first: dict[int, set] = defaultdict(set)
        self._by_last: dict[int, set] = defaultdict(set)
        self._nf_cache: dict = {}
        self._complete([dict(g.terms) for g in ideal.generators])

    # -- reduction -------------------------------------------------------
    def _find(self, w):
        rules = self.rules
        n = len(w)
        for L in self.lengths:
            if L > n:
                break
            for i in range(n - L + 1):
                sub = w[i:i + L]
                if sub in rules:
                    return i, sub
        return None

    def is_normal(self, w) -> bool:
        return self._find(w) is None

    def reduce(self, vec: dict) -> dict:
        """Full normal form of ``vec``: pop the largest word, rewrite if reducible."""
        fld = self.field
        p = fld.p
        acc = {w: c for w, c in vec.items() if c}
        heap = [(-len(w), tuple(-a for a in w), w) for w in acc]
        heapq.heapify(heap)
        out = {}
        cache = self._nf_cache if self._frozen else None
        while heap:
            _, _, w = heapq.heappop(heap)
            c = acc.pop(w, 0)
            if not c:
                continue
            if cache is not None and w in cache:
                _axpy(fld, out, c, cache[w])
                continue
            hit = self._find(w)
            if hit is None:
                x = out.get(w, 0) + c
                if p is not None:
                    x %= p
                if x:
                    out[w] = x
                else:
                    out.pop(w, None)
                continue
            self.reductions += 1
            if self.reductions > self.budget.max_reductions:
                raise BudgetExceeded(
                    f"rewriting exceeded {self.budget.max_reductions} reductions; raise the cap")
            if self.reductions & 0x3FF == 0:
                self.budget.check_time()
            i, sub = hit
            pre, post = w[:i], w[i + len(sub):]
            for v, d in self.rules[sub].items():
                u = pre + v + post
                old = acc.get(u)
                x = (old or 0) + c * d
                if p is not None:
                    x %= p
                if x:
                    if old is None:
                        heapq.heappush(heap, (-len(u), tuple(-a for a in u), u))
                    acc[u] = x
                else:
                    acc.pop(u, None)
        return out

    _frozen = False

    def nf_word(self, w) -> dict:
        w = tuple(w)
        if w in self._nf_cache:
            return self._nf_cache[w]
        r = self.reduce({w: 1})
        self._nf_cache[w] = r
        return r

    # -- completion --------------------------------------------------------
    def _add_rule(self, lead, rhs):
        self.rules[lead] = rhs
        self._by_first[lead[0]].add(lead)
        self._by_last[lead[-1]].add(lead)
        self.lengths = sorted({len(w) for w in self.rules})

    def _drop_rule(self, lead):
        rhs = self.rules.pop(lead)
        self._by_first[lead[0]].discard(lead)
        self._by_last[lead[-1]].discard(lead)
        self.lengths = sorted({len(w) for w in self.rules})
        return rhs

    def _overlaps(self, L):
        """Words ``u v w`` with ``L = u v`` and ``M = v w`` (or the reverse) for rules M."""
        n = len(L)
        for k in range(1, n):
            # suffix of L of length k is a proper prefix of M
            suf = L[n - k:]
            for M in self._by_first.get(suf[0], ()):
                if len(M) > k and M[:k] == suf:
                    yield L, M, L[:n - k], M[k:]
            # prefix of L of length k is a proper suffix of M
            pre = L[:k]
            for M in self._by_last.get(pre[-1], ()):
                if M != L and len(M) > k and M[len(M) - k:] == pre:
                    yield M, L, M[:len(M) - k], L[k:]

    def _spoly(self, L, M, u, w):
        # (L - rL) w - u (M - rM) = u rM - rL w
        fld = self.field
        acc: dict = {}
        _axpy(fld, acc, 1, {u + v: c for v, c in self.rules[M].items()})
        _axpy(fld, acc, -1, {v + w: c for v, c in self.rules[L].items()})
        return acc

    def _complete(self, gens: list[dict]):
        fld = self.field
        pending: list = []
        counter = 0

        def push(vec):
            nonlocal counter
            if vec:
                lw = lead_word(vec)
                heapq.heappush(pending, (len(lw), lw, counter, vec))
                counter += 1

        for g in gens:
            push({w: fld.el(c) for w, c in g.items()})
        while pending:
            self.budget.check_time()
            *_, vec = heapq.heappop(pending)
            f = self.reduce(vec)
            if not f:
                continue
            lead = lead_word(f)
            inv = fld.inv(f[lead])
            rhs = {w: fld.norm(-c * inv) for w, c in f.items() if w != lead}
            rhs = {w: c for w, c in rhs.items() if c}
            # rules whose lead contains the new lead are no longer reduced
            for M in [M for M in self.rules if len(M) >= len(lead) and _contains(M, lead)]:
                old = self._drop_rule(M)
                back = dict({w: fld.norm(-c) for w, c in old.items()})
                back[M] = 1
                push(back)
            self._add_rule(lead, rhs)
            for L, M, u, w in list(self._overlaps(lead)):
                push(self._spoly(L, M, u, w))
        # interreduce right-hand sides
        for lead in sorted(self.rules, key=_key):
            self.rules[lead] = self.reduce(self.rules[lead])
        self._frozen = True
        self._nf_cache = {}

    # -- queries -----------------------------------------------------------
    def normal_words_from(self, x, max_len: int | None = None) -> list[tuple]:
        q = self.quiver
        out = []
        stack = [((), x)]
        limit = max_len if max_len is not None else 10 ** 9
        lengths = self.lengths
        rules = self.rules
        while stack:
            w, v = stack.pop()
            out.append((w, v))
            if len(w) >= limit:
                continue
            for a in q.out_arrows[v]:
                w2 = w + (a,)
                n = len(w2)
                if any(L <= n and w2[n - L:] in rules for L in lengths):
                    continue
                if n > 10 ** 4:
                    raise EngineError("normal words are unbounded; the quotient is infinite-dimensional")
                stack.append((w2, q.arrows[a][1]))
        return out

    def right_mult(self, vec: dict, a: int) -> dict:
        return self.reduce({w + (a,): c for w, c in vec.items()})


def _contains(big, small) -> bool:
    n, k = len(big), len(small)
    return any(big[i:i + k] == small for i in range(n - k + 1))


# ----------------------------------------------------------------------
# per-degree engine
# ----------------------------------------------------------------------


class DegreeEngine:
    """Graded quotient for ideals generated in one degree, built source by source."""

    name = "degree"

    def __init__(self, quiver: Quiver, ideal: IdealSpec, fld: FieldSpec, budget: Budget,
                 max_degree: int = 10 ** 4):
        if not ideal.homogeneous:
            raise EngineError("the per-degree engine needs a homogeneous ideal")
        self.quiver = quiver
        self.field = fld
        self.budget = budget
        self.gens_at = defaultdict(list)
        for g in ideal.generators:
            self.gens_at[g.source].append((len(next(iter(g.terms))), g.terms))
        self.max_gen = max((k for gs in self.gens_at.values() for k, _ in gs), default=1)
        # per source: list over degree of (std words, pivots)
        self.std: dict = {}
        self.piv: dict = {}
        for x in quiver.vertices:
            self._build(x, max_degree)

    def _lift(self, x, d: int, vec: dict, a: int) -> dict:
        """Image of ``vec`` (in degree ``d``) times arrow ``a`` before reducing in degree d+1."""
        q = self.quiver
        s = q.arrows[a][0]
        out = {}
        for w, c in vec.items():
            tgt = q.arrows[w[-1]][1] if w else x
            if tgt == s:
                out[w + (a,)] = c
        return out

    def _reduce(self, x, d: int, vec: dict) -> dict:
        if d >= len(self.piv[x]):
            return {}
        piv = self.piv[x][d]
        out = dict(vec)
        for w in [w for w in vec if w in piv]:
            c = out.pop(w, 0)
            if c:
                _axpy(self.field, out, -c, piv[w])
        return out

    def mult(self, x, d: int, vec: dict, a: int) -> dict:
        return self._reduce(x, d + 1, self._lift(x, d, vec, a))

    def _build(self, x, max_degree: int):
        fld = self.field
        q = self.quiver
        std = [[()]]
        piv = [{}]
        self.std[x], self.piv[x] = std, piv
        d = 0
        while std[d]:
            d += 1
            if d > max_degree:
                raise EngineError("graded quotient did not terminate; infinite-dimensional?")
            self.budget.check_time()
            # candidate monomials b.a
            cand = []
            for b in std[d - 1]:
                v = q.arrows[b[-1]][1] if b else x
                for a in q.out_arrows[v]:
                    cand.append(b + (a,))
            piv.append({})
            rels = []
            for e, b in ((e, b) for e in range(max(0, d - self.max_gen), d) for b in std[e]):
                v = q.arrows[b[-1]][1] if b else x
                for k, g in self.gens_at.get(v, ()):
                    if e + k != d:
                        continue
                    acc: dict = {}
                    for word, c in g.items():
                        cur = {b: 1}
                        for j, a in enumerate(word):
                            cur = self._lift(x, e + j, cur, a)
                            if e + j + 1 < d:
                                cur = self._reduce(x, e + j + 1, cur)
                            if not cur:
                                break
                        _axpy(fld, acc, c, cur)
                    if acc:
                        rels.append(acc)
            pivots = _rref(fld, rels)
            piv[d] = pivots
            std.append(sorted((w for w in cand if w not in pivots), key=_key))

    def normal_words_from(self, x, max_len=None):
        q = self.quiver
        out = []
        for d, words in enumerate(self.std[x]):
            if max_len is not None and d > max_len:
                break
            for w in words:
                out.append((w, q.arrows[w[-1]][1] if w else x))
        return out

    def nf_path(self, x, word) -> dict:
        cur = {(): 1}
        for j, a in enumerate(word):
            cur = self.mult(x, j, cur, a)
            if not cur:
                return {}
        return cur


def _rref(fld: FieldSpec, rows: list[dict]) -> dict:
    """Reduced row echelon form: leading word -> the rest of its (monic) row."""
    piv: dict = {}
    for row in rows:
        v = dict(row)
        for w in [w for w in v if w in piv]:
            c = v.get(w)
            if c:
                _axpy(fld, v, -c, piv[w])
        if not v:
            continue
        lw = lead_word(v)
        inv = fld.inv(v[lw])
        v = {w: fld.norm(c * inv) for w, c in v.items()}
        for other in piv.values():
            c = other.get(lw)
            if c:
                _axpy(fld, other, -c, v)
        piv[lw] = v
    return {lw: {w: c for w, c in row.items() if w != lw} for lw, row in piv.items()}


# ----------------------------------------------------------------------
# the quotient category
# ----------------------------------------------------------------------


ENGINES = ("auto", "rewrite", "degree")


class QuotientCategory:
    """A quiver, an ideal and a completed normal-form engine."""

    def __init__(self, quiver: Quiver, ideal: IdealSpec, fld: FieldSpec = FieldSpec(2),
                 engine: str = "auto", budget: Budget | None = None):
        if engine not in ENGINES:
            raise ValueError(f"engine must be one of {ENGINES}")
        self.quiver = quiver
        self.ideal = ideal
        self.field = fld
        self.budget = budget or Budget()
        if engine == "auto":
            engine = "degree" if ideal.homogeneous else "rewrite"
        if engine == "degree":
            self.engine = DegreeEngine(quiver, ideal, fld, self.budget)
        else:
            self.engine = RewriteEngine(quiver, ideal, fld, self.budget)
        self._words = {}

    @property
    def engine_name(self) -> str:
        return self.engine.name

    def _target(self, x, w):
        return self.quiver.arrows[w[-1]][1] if w else x

    def normal_words(self, x) -> list[tuple]:
        """All normal words from ``x`` paired with their targets."""
        if x not in self._words:
            self._words[x] = self.engine.normal_words_from(x)
        return self._words[x]

    def normal_form(self, vec: PathVector) -> PathVector:
        if isinstance(self.engine, RewriteEngine):
            return PathVector(vec.source, vec.target, self.engine.reduce(vec.terms))
        acc: dict = {}
        for w, c in vec.terms.items():
            _axpy(self.field, acc, c, self.engine.nf_path(vec.source, w))
        return PathVector(vec.source, vec.target, acc)

    def nf_word(self, x, w) -> dict:
        if isinstance(self.engine, RewriteEngine):
            return self.engine.nf_word(w)
        return self.engine.nf_path(x, w)

    def right_mult(self, x, vec: dict, a: int) -> dict:
        """Normal form of ``vec`` followed by the arrow ``a`` (``vec`` in normal form)."""
        if isinstance(self.engine, RewriteEngine):
            return self.engine.right_mult(vec, a)
        # the degree engine works one degree at a time
        acc: dict = {}
        by_deg = defaultdict(dict)
        for w, c in vec.items():
            by_deg[len(w)][w] = c
        for d, part in by_deg.items():
            _axpy(self.field, acc, 1, self.engine.mult(x, d, part, a))
        return acc

    def hom_basis(self, x, y) -> list[PathVector]:
        return [PathVector(x, y, {w: 1}) for w, t in self.normal_words(x) if t == y]

    def hom_dim(self, x, y) -> int:
        return sum(1 for _, t in self.normal_words(x) if t == y)

    def hom_dim_table(self, with_bases: bool = False) -> "HomTable":
        dims = {}
        bases = {} if with_bases else None
        for x in self.quiver.vertices:
            counts = defaultdict(int)
            for w, t in self.normal_words(x):
                counts[t] += 1
                if with_bases:
                    bases.setdefault((x, t), []).append(w)
            for y in self.quiver.vertices:
                dims[(x, y)] = counts.get(y, 0)
        return HomTable(dims, self.quiver, bases)

    def total_dimension(self) -> int:
        return sum(len(self.normal_words(x)) for x in self.quiver.vertices)


@dataclass
class HomTable:
    dims: dict
    quiver: Quiver = field(repr=False, compare=False)
    bases: dict | None = field(default=None, repr=False, compare=False)

    def __getitem__(self, key) -> int:
        return self.dims[key]

    def rows(self) -> list[dict]:
        idx = self.quiver.index
        keys = sorted(self.dims, key=lambda k: (idx[k[0]], idx[k[1]]))
        lab = self.quiver.label
        return [{"source": lab(x), "target": lab(y), "dim": self.dims[(x, y)]} for x, y in keys]

    def to_json(self) -> str:
        return json.dumps(self.rows(), sort_keys=True, indent=1)

    def nonzero(self) -> dict:
        return {k: v for k, v in self.dims.items() if v}


# ----------------------------------------------------------------------
# derived quantities
# ----------------------------------------------------------------------


@dataclass
class NilpotencyCertificate:
    index: int
    witness: tuple          # a path of length index-1 with nonzero normal form
    witness_source: object
    layer_dims: list        # dim of the span of all length-d paths, d = 0..index


def _span_layers(qc: QuotientCategory, x, max_steps: int | None = None):
    """Bases of span{length-d paths from x} in the quotient, as (word, normal form) pairs."""
    fld = qc.field
    q = qc.quiver
    layer = [((), {(): 1})]
    out = [layer]
    while layer:
        qc.budget.check_time()
        piv: dict = {}
        nxt = []
        for w, vec in layer:
            t = q.arrows[w[-1]][1] if w else x
            for a in q.out_arrows[t]:
                v = qc.right_mult(x, vec, a)
                red = dict(v)
                # incremental elimination; keep the word when independent
                while red:
                    lw = lead_word(red)
                    if lw not in piv:
                        break
                    _axpy(fld, red, -red[lw], piv[lw])
                if red:
                    lw = lead_word(red)
                    inv = fld.inv(red[lw])
                    piv[lw] = {u: fld.norm(c * inv) for u, c in red.items()}
                    nxt.append((w + (a,), v))
        layer = nxt
        out.append(layer)
        if max_steps is not None and len(out) > max_steps:
            raise EngineError("path spans do not vanish within the step bound")
    return out


def nilpotency_index(qc: QuotientCategory) -> NilpotencyCertificate:
    """Smallest ``N`` with every length-``N`` path zero, plus a witness of length ``N-1``."""
    best = None
    dims: dict = defaultdict(int)
    bound = qc.total_dimension() + 1
    for x in qc.quiver.vertices:
        layers = _span_layers(qc, x, bound)
        for d, lay in enumerate(layers):
            dims[d] += len(lay)
        n = len(layers) - 1  # first empty layer
        if best is None or n > best[0]:
            best = (n, layers[n - 1][0][0], x)
    n, wit, src = best
    return NilpotencyCertificate(n, wit, src, [dims[d] for d in range(n + 1)])


def is_zero_path(qc: QuotientCategory, x, word) -> bool:
    return not qc.nf_word(x, tuple(word))


def radical_layers(qc: QuotientCategory, x) -> list[int]:
    """Loewy layer dimensions rad^k e_x / rad^(k+1) e_x of the projective at ``x``."""
    fld = qc.field
    layers = _span_layers(qc, x)
    piv: dict = {}
    sizes = []
    # dim rad^k = dim span of all paths of length >= k; accumulate from the top degree down
    for lay in reversed(layers):
        for _, vec in lay:
            red = dict(vec)
            while red:
                lw = lead_word(red)
                if lw not in piv:
                    break
                _axpy(fld, red, -red[lw], piv[lw])
            if red:
                lw = lead_word(red)
                inv = fld.inv(red[lw])
                piv[lw] = {u: fld.norm(c * inv) for u, c in red.items()}
        sizes.append(len(piv))
    sizes = sizes[::-1]  # sizes[k] = dim rad^k
    return [a - b for a, b in zip(sizes, sizes[1:] + [0]) if a - b or a][: len(sizes) - 1]


def _check_admissible(qc: QuotientCategory):
    for g in qc.ideal.generators:
        if any(len(w) < 2 for w in g.terms):
            raise ValueError("ideal is not admissible: a generator has a term of length < 2")


def loewy_data(qc: QuotientCategory, x) -> list[int]:
    _check_admissible(qc)
    return radical_layers(qc, x)


def projective_dimensions(qc: QuotientCategory) -> dict:
    return {x: len(qc.normal_words(x)) for x in qc.quiver.vertices}


@dataclass
class StableComparison:
    dim_full: int
    dim_stable: int
    dim_projective_factoring: int


def stable_vs_full(full: QuotientCategory, stable: QuotientCategory, x, y) -> StableComparison:
    """Compare Hom(x, y) with and without projective vertices.

    The projective-factoring part is computed directly, as the span of the
    normal forms of all paths through a projective vertex, and checked against
    ``dim_full - dim_stable``.
    """
    fq, sq = full.quiver, stable.quiver
    if not isinstance(fq, TranslationQuiver) or x not in sq.index or y not in sq.index:
        raise ValueError("x and y must be stable vertices present in both quivers")
    if set(sq.vertices) != set(fq.stable_vertices):
        raise ValueError("mismatched quivers: the stable quiver is not the stable part")
    fld = full.field
    piv: dict = {}
    for c in sorted(fq.projectives):
        c0 = TqVertex(c.p, c.q)
        through = (fq.arrow_index[(c0, c)], fq.arrow_index[(c, fq.tau_inv[c0])])
        tail = [w for w, t in full.normal_words(fq.tau_inv[c0]) if t == y]
        for w1, t in full.normal_words(x):
            if t != c0:
                continue
            for w2 in tail:
                red = full.nf_word(x, w1 + through + w2)
                red = dict(red)
                while red:
                    lw = lead_word(red)
                    if lw not in piv:
                        break
                    _axpy(fld, red, -red[lw], piv[lw])
                if red:
                    lw = lead_word(red)
                    inv = fld.inv(red[lw])
                    piv[lw] = {u: fld.norm(c_ * inv) for u, c_ in red.items()}
    df, ds = full.hom_dim(x, y), stable.hom_dim(x, y)
    if df - ds != len(piv):
        raise EngineError(
            f"projective-factoring dimension {len(piv)} disagrees with {df} - {ds}")
    return StableComparison(df, ds, len(piv))


# ----------------------------------------------------------------------
# algebra presentations
# ----------------------------------------------------------------------


def algebra_presentation_lambda(m: int, fld: FieldSpec = FieldSpec(2), **kw) -> QuotientCategory:
    """Cyclic quiver ``1 -> 2 -> ... -> m -> 1`` with a loop at 1, and three relation families."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if fld.characteristic != 2:
        raise ValueError("the algebra Lambda lives in characteristic 2")
    verts = list(range(1, m + 1))
    arrows = [(i, i % m + 1) for i in verts] + [(1, 1)]
    names = [f"alpha{i}" for i in verts] + ["beta"]
    q = Quiver(verts, arrows, names)
    al = list(range(m))  # al[i-1] is alpha_i
    beta = m
    rels = [PathVector(1, 1, {tuple(al): 1, (beta, beta): fld.el(-1)})]
    for i in range(m):
        word = tuple(al[(i + k) % m] for k in range(m + 1))
        rels.append(PathVector(i + 1, i % m + 2 if i + 1 < m else 2, {word: 1}))
    rels.append(PathVector(m, 2, {(al[m - 1], al[0]): 1, (al[m - 1], beta, al[0]): fld.el(-1)}))
    return QuotientCategory(q, IdealSpec(rels), fld, **kw)


def algebra_presentation_nakayama(n: int, s: int, fld: FieldSpec = FieldSpec(2), **kw) -> QuotientCategory:
    """Cyclic quiver on ``s`` vertices with all paths of length ``n+1`` zero."""
    if n < 1 or s < 1:
        raise ValueError("n and s must be positive")
    verts = list(range(1, s + 1))
    arrows = [(i, i % s + 1) for i in verts]
    q = Quiver(verts, arrows, [f"alpha{i}" for i in verts])
    rels = []
    for i in range(s):
        word = tuple((i + k) % s for k in range(n + 1))
        rels.append(PathVector(i + 1, (i + n + 1) % s + 1, {word: 1}))
    return QuotientCategory(q, IdealSpec(rels), fld, **kw)


def mesh_category(tq: TranslationQuiver, fld: FieldSpec = FieldSpec(2), **kw) -> QuotientCategory:
    return QuotientCategory(tq, mesh_ideal(tq), fld, **kw)


def modified_mesh_category(tq: TranslationQuiver, m: int, fld: FieldSpec = FieldSpec(2), **kw) -> QuotientCategory:
    return QuotientCategory(tq, modified_mesh_ideal(tq, m, fld), fld, **kw)
