"""Shared test utilities: independent brute-force oracles and random inputs.

Everything here recomputes quantities from first principles (subset scans,
list-based polynomial expansion, dense Fraction elimination) precisely so
the library is never checked against itself.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from srbetti import Complex, Graph, complex_from_facets, graph_from_edges


def bits(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if (mask >> v) & 1]


# ---------------------------------------------------------------------------
# complexes

def random_complex(rnd: random.Random, max_n: int = 7, max_facets: int = 6) -> Complex:
    pool = [chr(ord("a") + i) for i in range(rnd.randint(1, max_n))]
    facets = []
    for _ in range(rnd.randint(1, max_facets)):
        facets.append(rnd.sample(pool, rnd.randint(1, len(pool))))
    return complex_from_facets(facets)


def brute_face_masks(c: Complex) -> set[int]:
    """Every subset of the vertex set that sits inside some facet."""
    out = set()
    for mask in range(1 << c.n):
        if any(mask & f == mask for f in c.facets):
            out.add(mask)
    return out


def brute_minimal_non_faces(c: Complex) -> set[frozenset[str]]:
    """Direct scan over all subsets: non-faces all of whose proper subsets are faces."""
    faces = brute_face_masks(c)
    out = set()
    for mask in range(1 << c.n):
        if mask in faces:
            continue
        if all((mask ^ (1 << v)) in faces for v in bits(mask)):
            out.add(frozenset(c.labels[v] for v in bits(mask)))
    return out


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def h_by_expansion(f_entries: tuple[int, ...]) -> list[int]:
    """h-vector as coefficients of sum_i f_{i-1} t^i (1-t)^(d-i), via list arithmetic."""
    d = len(f_entries) - 1
    acc = [0] * (d + 1)
    for i in range(d + 1):
        term = [1]
        for _ in range(d - i):
            term = poly_mul(term, [1, -1])
        term = [0] * i + [f_entries[i] * c for c in term]
        for k, c in enumerate(term):
            acc[k] += c
    return acc


def count_monomials(c: Complex, s: int) -> int:
    """Degree-s monomials whose support is a face, by explicit enumeration."""
    if s == 0:
        return 1
    count = 0
    for combo in combinations_with_replacement(range(c.n), s):
        support = 0
        for v in combo:
            support |= 1 << v
        if c.is_face(support):
            count += 1
    return count


# ---------------------------------------------------------------------------
# graphs

def random_graph(rnd: random.Random, n: int, p: float = 0.5) -> Graph:
    labels = [str(i + 1) for i in range(n)]
    edges = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n) if rnd.random() < p]
    return graph_from_edges(edges, vertices=labels)


def brute_is_chordal(g: Graph) -> bool:
    """A graph is chordal iff no vertex subset induces a cycle of length >= 4.

    An induced subgraph is such a cycle iff it is connected and 2-regular.
    """
    n = g.n
    for smask in range(1 << n):
        members = bits(smask)
        if len(members) < 4:
            continue
        if any((g.adj[v] & smask).bit_count() != 2 for v in members):
            continue
        seen = 1 << members[0]
        frontier = [members[0]]
        while frontier:
            v = frontier.pop()
            for u in bits(g.adj[v] & smask & ~seen):
                seen |= 1 << u
                frontier.append(u)
        if seen == smask:
            return False
    return True


def brute_maximal_cliques(g: Graph) -> set[int]:
    """All maximal cliques by scanning every vertex subset."""
    n = g.n
    cliques = set()
    for mask in range(1, 1 << n):
        vs = bits(mask)
        if all((g.adj[u] >> v) & 1 for u, v in combinations(vs, 2)):
            cliques.add(mask)
    return {m for m in cliques if not any(m != o and m & o == m for o in cliques)}


# ---------------------------------------------------------------------------
# linear algebra

def frac_rank(dense: list[list[int]]) -> int:
    """Dense Gaussian elimination over Q with Fractions; the rank oracle."""
    a = [[Fraction(x) for x in row] for row in dense]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rnk = 0
    for col in range(cols):
        piv = next((i for i in range(rnk, rows) if a[i][col]), None)
        if piv is None:
            continue
        a[rnk], a[piv] = a[piv], a[rnk]
        for i in range(rows):
            if i != rnk and a[i][col]:
                factor = a[i][col] / a[rnk][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[rnk])]
        rnk += 1
    return rnk
