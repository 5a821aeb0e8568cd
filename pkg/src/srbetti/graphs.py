"""Simple graphs with bitset adjacency: complements, chordality, cliques.

Chordality is decided by maximum-cardinality search followed by explicit
verification of the produced elimination ordering, so a positive answer
always carries a checked witness.  Clique enumeration is Bron-Kerbosch with
pivoting over a degeneracy ordering; facet output is canonicalized by
sorting, so results do not depend on traversal order.

The seeded generator is built on a fixed xorshift64* contract (documented on
Xorshift64Star) so corpora are bit-reproducible across implementations.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import NotChordalError, ParseError
from .simplicial import Complex, _bits, complex_from_facets

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class Xorshift64Star:
    """xorshift64* with a splitmix64-mixed seed.

    Contract (all arithmetic mod 2^64):
      seeding   state = splitmix(seed + 0x9E3779B97F4A7C15); if 0, use that constant
                where splitmix(z): z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
                                   z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
                                   z = z ^ (z >> 31)
      next_u64  state ^= state >> 12; state ^= state << 25; state ^= state >> 27;
                return state * 0x2545F4914F6CDD1D
      below(m)  next_u64() % m        (modulo reduction, documented bias accepted)
      unit()    next_u64() >> 11, scaled by 2^-53
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        z = (seed + _GOLDEN) & _MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z = z ^ (z >> 31)
        self.state = z if z else _GOLDEN

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x = (x ^ (x << 25)) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def below(self, m: int) -> int:
        if m <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % m

    def unit(self) -> float:
        return (self.next_u64() >> 11) * 2.0 ** -53


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; adj[v] is the neighbor bitmask of vertex v."""

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate vertex labels")
        if tuple(sorted(self.labels)) != self.labels:
            raise ValueError("labels must be sorted")
        if len(self.adj) != n:
            raise ValueError("adjacency length mismatch")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError("adjacency mask out of range")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {self.labels[v]!r}")
        for v in range(n):
            for u in _bits(self.adj[v]):
                if not (self.adj[u] >> v) & 1:
                    raise ValueError("adjacency not symmetric")

    @property
    def n(self) -> int:
        return len(self.labels)

    def edges(self) -> list[tuple[str, str]]:
        out = []
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if u > v:
                    out.append((self.labels[v], self.labels[u]))
        return out

    def has_edge(self, u: str, v: str) -> bool:
        iu = self.labels.index(u)
        iv = self.labels.index(v)
        return bool((self.adj[iu] >> iv) & 1)


def _default_labels(n: int) -> tuple[str, ...]:
    width = len(str(n))
    return tuple(str(i).zfill(width) for i in range(1, n + 1))


def graph_from_edges(edges: Iterable[tuple[str, str]], vertices: Iterable[str] | None = None) -> Graph:
    """Build a graph from labeled edges, plus optional isolated vertices."""
    tokens: set[str] = set(vertices) if vertices is not None else set()
    edge_list = []
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge {u!r}")
        tokens.add(u)
        tokens.add(v)
        edge_list.append((u, v))
    labels = tuple(sorted(tokens))
    index = {t: k for k, t in enumerate(labels)}
    adj = [0] * len(labels)
    for u, v in edge_list:
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]
    return Graph(labels, tuple(adj))


def cycle_graph(n: int) -> Graph:
    labels = _default_labels(n)
    return graph_from_edges([(labels[i], labels[(i + 1) % n]) for i in range(n)])


def path_graph(n: int) -> Graph:
    labels = _default_labels(n)
    return graph_from_edges([(labels[i], labels[i + 1]) for i in range(n - 1)], vertices=labels)


def complete_graph(n: int) -> Graph:
    labels = _default_labels(n)
    return graph_from_edges(
        [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n)], vertices=labels
    )


def complement(g: Graph) -> Graph:
    """Edge complement within all unordered pairs; an involution."""
    full = (1 << g.n) - 1
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.labels, adj)


def is_chordal(g: Graph) -> tuple[bool, tuple[str, ...] | None]:
    """Chordality test with a verified perfect-elimination-order witness.

    Runs maximum-cardinality search (ties broken by smallest index) and then
    checks directly that each vertex's later neighbors in the candidate
    elimination order form a clique; MCS yields such an order iff the graph
    is chordal, and the explicit check doubles as a self-test.
    """
    n = g.n
    if n == 0:
        return True, ()
    weight = [0] * n
    numbered = 0
    selection: list[int] = []
    for _ in range(n):
        best = -1
        for u in range(n):
            if not (numbered >> u) & 1 and (best < 0 or weight[u] > weight[best]):
                best = u
        selection.append(best)
        numbered |= 1 << best
        for u in _bits(g.adj[best]):
            if not (numbered >> u) & 1:
                weight[u] += 1
    # selection reversed is the candidate PEO; walking the selection forward,
    # `seen` is exactly the set of vertices later in that elimination order.
    seen = 0
    for v in selection:
        later = g.adj[v] & seen
        for u in _bits(later):
            if later & ~g.adj[u] & ~(1 << u):
                return False, None
        seen |= 1 << v
    elim = tuple(g.labels[v] for v in reversed(selection))
    return True, elim


def maximal_cliques(adj: Sequence[int]) -> list[int]:
    """All maximal cliques as bitmasks, sorted ascending (Bron-Kerbosch, pivoting)."""
    n = len(adj)
    out: list[int] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pool = p | x
        pivot = -1
        best = -1
        for u in _bits(pool):
            c = (p & adj[u]).bit_count()
            if c > best:
                best = c
                pivot = u
        for v in _bits(p & ~adj[pivot]):
            bk(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    # degeneracy order: repeatedly remove a vertex of minimum residual degree
    alive = (1 << n) - 1
    order = []
    while alive:
        v = min(_bits(alive), key=lambda u: ((adj[u] & alive).bit_count(), u))
        order.append(v)
        alive &= ~(1 << v)
    pos = {v: k for k, v in enumerate(order)}
    for v in order:
        later = 0
        earlier = 0
        for u in _bits(adj[v]):
            if pos[u] > pos[v]:
                later |= 1 << u
            else:
                earlier |= 1 << u
        bk(1 << v, later, earlier)
    return sorted(out)


def clique_complex(g: Graph) -> Complex:
    """The flag complex whose faces are the cliques of g."""
    masks = maximal_cliques(g.adj)
    return complex_from_facets([[g.labels[v] for v in _bits(m)] for m in masks])


def gen_chordal(n: int, density: float, seed: int) -> Graph:
    """Seeded random chordal graph by incremental simplicial-vertex insertion.

    Vertex k (k >= 1 previously placed) attaches to a clique of the existing
    graph, grown greedily to a target size of max(1, floor(density*k + 0.5)):
    draw a vertex, then repeatedly draw from the common neighbors of the
    clique so far.  The growth can stop short when no common neighbor
    remains; at density 1.0 it never does, so the output is complete.
    Attaching to a clique keeps the insertion order a reversed perfect
    elimination order, hence the result is always chordal.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = Xorshift64Star(seed)
    adj = [0] * n
    for k in range(1, n):
        target = max(1, int(density * k + 0.5))
        cand = list(range(k))
        clique = 0
        while cand and clique.bit_count() < target:
            v = cand[rng.below(len(cand))]
            clique |= 1 << v
            cand = [u for u in cand if u != v and (adj[u] >> v) & 1]
        adj[k] |= clique
        for v in _bits(clique):
            adj[v] |= 1 << k
    labels = _default_labels(n)
    return Graph(labels, tuple(adj))


def write_graph(g: Graph, path) -> None:
    """Edge-list .graph format with an explicit vertex header."""
    lines = ["vertices " + " ".join(g.labels)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_graph(path) -> Graph:
    """Parse a .graph file: '#' comment lines, optional vertex header, edge lines."""
    vertices: list[str] | None = None
    edges: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "vertices":
                if vertices is not None:
                    raise ParseError(path, lineno, "duplicate vertex header")
                if edges:
                    raise ParseError(path, lineno, "vertex header must precede edges")
                vertices = parts[1:]
                continue
            if len(parts) != 2:
                raise ParseError(path, lineno, f"expected 'u v', got {line!r}")
            u, v = parts
            if u == v:
                raise ParseError(path, lineno, f"loop edge {u!r}")
            if vertices is not None and (u not in vertices or v not in vertices):
                raise ParseError(path, lineno, f"edge uses undeclared vertex in {line!r}")
            edges.append((u, v))
    if vertices is None and not edges:
        raise ParseError(path, 1, "no vertices or edges found")
    return graph_from_edges(edges, vertices=vertices)


def require_chordal(g: Graph) -> tuple[str, ...]:
    """Elimination-order witness, or NotChordalError."""
    ok, order = is_chordal(g)
    if not ok:
        raise NotChordalError("graph has a chordless cycle of length >= 4")
    return order
