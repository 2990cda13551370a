"""Independent oracles.  Nothing here calls the normal-form engines."""
from __future__ import annotations

# positive-root counts, written down by hand: A_n n(n+1)/2, D_n n(n-1), E 36/63/120
POSITIVE_ROOTS = {
    **{("A", n): n * (n + 1) // 2 for n in range(1, 9)},
    **{("D", n): n * (n - 1) for n in range(4, 9)},
    ("E", 6): 36, ("E", 7): 63, ("E", 8): 120,
}

# Dynkin edge tables copied from the pictures, unoriented-as-written (tail, head)
EDGE_TABLE = {
    ("A", 1): [],
    ("A", 2): [(1, 2)],
    ("A", 3): [(1, 2), (2, 3)],
    ("A", 4): [(1, 2), (2, 3), (3, 4)],
    ("A", 5): [(1, 2), (2, 3), (3, 4), (4, 5)],
    ("A", 6): [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)],
    ("A", 7): [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)],
    ("A", 8): [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)],
    ("D", 4): [(1, 2), (2, 3), (2, 4)],
    ("D", 5): [(1, 2), (2, 3), (3, 4), (3, 5)],
    ("D", 6): [(1, 2), (2, 3), (3, 4), (4, 5), (4, 6)],
    ("D", 7): [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7)],
    ("D", 8): [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (6, 8)],
    ("E", 6): [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)],
    ("E", 7): [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)],
    ("E", 8): [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)],
}


# ----------------------------------------------------------------------
# serial algebras
# ----------------------------------------------------------------------
#
# Nakayama algebra with s simples on a cyclic quiver and Loewy length n+1.
# M(a, l) is the uniserial module with top a and composition factors
# a, a+1, ..., a+l-1 (mod s) from top to socle.  A map M -> N with image of
# length k exists iff the top k factors of M are the bottom k factors of N,
# and it factors through a projective iff it lifts to the projective cover of
# N, i.e. iff k + (n + 1 - len N) <= len M.


def serial_hom(s: int, M: tuple[int, int], N: tuple[int, int]) -> list[int]:
    (a, lm), (b, ln) = M, N
    return [k for k in range(1, min(lm, ln) + 1) if (a - (b + ln - k)) % s == 0]


def serial_hom_dim(s, M, N) -> int:
    return len(serial_hom(s, M, N))


def serial_stable_hom_dim(n: int, s: int, M, N) -> int:
    return sum(1 for k in serial_hom(s, M, N) if k + (n + 1 - N[1]) > M[1])


def vertex_module(s: int, p: int, q: int, proj: bool = False, n: int | None = None) -> tuple[int, int]:
    """Module at a vertex of ZA_n/tau^s (projective vertices sit over (p, n))."""
    if proj:
        return ((-p - n - 1) % s, n + 1)
    return ((-p - q) % s, q)


# ----------------------------------------------------------------------
# automorphisms by plain backtracking
# ----------------------------------------------------------------------


def brute_force_automorphisms(vertices, arrows, tau) -> int:
    """Count vertex bijections preserving arrows and tau, assigning vertices in a fixed order."""
    verts = list(vertices)
    arrow_set = set(arrows)
    out_nb = {v: set() for v in verts}
    in_nb = {v: set() for v in verts}
    for s, t in arrows:
        out_nb[s].add(t)
        in_nb[t].add(s)
    count = 0
    img: dict = {}
    used: set = set()

    def ok(v, w):
        for u in out_nb[v]:
            if u in img and (w, img[u]) not in arrow_set:
                return False
        for u in in_nb[v]:
            if u in img and (img[u], w) not in arrow_set:
                return False
        if v in tau and tau[v] in img and tau.get(w) != img[tau[v]]:
            return False
        for u, tu in tau.items():
            if tu == v and u in img and tau.get(img[u]) != w:
                return False
        return len(out_nb[v]) == len(out_nb[w]) and len(in_nb[v]) == len(in_nb[w])

    def go(i):
        nonlocal count
        if i == len(verts):
            count += 1
            return
        v = verts[i]
        for w in verts:
            if w not in used and ok(v, w):
                img[v] = w
                used.add(w)
                go(i + 1)
                del img[v]
                used.discard(w)

    go(0)
    return count


# ----------------------------------------------------------------------
# Loewy diagrams of the projectives of Lambda, transcribed layer by layer
# ----------------------------------------------------------------------


def lambda_loewy_diagram(m: int) -> dict[int, list[list[int]]]:
    """Composition factors of each projective, one list per radical layer.

    P_1: top 1, then m layers each holding two factors (the alpha-branch
    2, 3, ..., m, 1 next to the beta-branch 1, 2, ..., m), socle 1.
    P_j (j >= 2): a single chain j, j+1, ..., m, 1, 1, 2, ..., j.
    """
    p1 = [[1]]
    for k in range(m):
        p1.append([2 + k if k < m - 1 else 1, 1 + k])
    p1.append([1])
    out = {1: p1}
    for j in range(2, m + 1):
        chain = list(range(j, m + 1)) + [1, 1] + list(range(2, j + 1))
        out[j] = [[c] for c in chain]
    return out
