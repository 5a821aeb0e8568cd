"""Graded Betti numbers of the face ring, by the subset homology formula.

beta_{i,j} = sum over j-element vertex subsets W of the dimension of reduced
homology in degree j-i-1 of the restriction of the complex to W.  This is
the oracle everything else is checked against: it sums nonnegative homology
dimensions, so accumulation order cannot matter.

Two optimizations, neither affecting results:
  - restrictions that are cones (some vertex lies in every facet of the
    restriction) are skipped; cones are contractible and contribute nothing;
  - homology of a restriction is cached on its relabeled facet signature,
    since isomorphic restrictions recur massively across sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPureError, TooManyVerticesError
from .exactla import GF_DEFAULT, FieldSpec
from .homology import reduced_dims_from_facets
from .simplicial import Complex, _bits, _compact, _maximal_masks

DEFAULT_VERTEX_CAP = 20

_HOM_CACHE: dict[tuple, tuple[int, ...]] = {}
_HOM_CACHE_LIMIT = 1 << 20


@dataclass(frozen=True)
class BettiTable:
    """Nonzero graded Betti numbers as sorted (i, j, value) cells.

    i is the homological degree (0 for the ring itself, so the only i = 0
    cell is (0, 0, 1)), j the internal degree.  Absent cells are zero.
    """

    cells: tuple[tuple[int, int, int], ...]
    n: int
    field: FieldSpec

    def entry(self, i: int, j: int) -> int:
        for a, b, v in self.cells:
            if a == i and b == j:
                return v
        return 0

    @property
    def pdim(self) -> int:
        """Projective dimension: the largest homological degree present."""
        return max(a for a, _, _ in self.cells)

    def degrees_of(self, i: int) -> tuple[int, ...]:
        return tuple(b for a, b, _ in self.cells if a == i)

    def total(self, i: int) -> int:
        return sum(v for a, _, v in self.cells if a == i)

    def max_j(self) -> int:
        return max(b for _, b, _ in self.cells)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(a, b): v for a, b, v in self.cells}


def _restriction_dims(facets: tuple[int, ...], w: int, field: FieldSpec) -> tuple[int, ...] | None:
    """Homology dims of the restriction to vertex mask w, or None for a cone."""
    inter = -1
    restricted = []
    for f in facets:
        fw = f & w
        restricted.append(fw)
        inter &= fw
    if inter:
        return None
    fac_w = _maximal_masks(restricted)
    apex = -1
    for m in fac_w:
        apex &= m
    if apex:
        return None
    positions = _bits(w)
    key_facets = tuple(_compact(m, positions) for m in fac_w)
    key = (field.p, key_facets)
    dims = _HOM_CACHE.get(key)
    if dims is None:
        dims = reduced_dims_from_facets(len(positions), key_facets, field)
        if len(_HOM_CACHE) < _HOM_CACHE_LIMIT:
            _HOM_CACHE[key] = dims
    return dims


def graded_betti(c: Complex, field: FieldSpec = GF_DEFAULT, n_cap: int = DEFAULT_VERTEX_CAP) -> BettiTable:
    """Exact graded Betti numbers of the face ring of c over the field.

    Sweeps all vertex subsets; cost is 2^n times a small homology problem,
    so n is capped (default 20).
    """
    if c.n > n_cap:
        raise TooManyVerticesError(f"{c.n} vertices exceeds the sweep cap {n_cap}")
    acc: dict[tuple[int, int], int] = {}
    facets = c.facets
    for w in range(1 << c.n):
        dims = _restriction_dims(facets, w, field)
        if dims is None:
            continue
        j = w.bit_count()
        for r_idx, b in enumerate(dims):
            if b:
                # reduced degree r = r_idx - 1 contributes at i = j - r - 1
                acc[(j - r_idx, j)] = acc.get((j - r_idx, j), 0) + b
    cells = tuple(sorted((i, j, v) for (i, j), v in acc.items()))
    return BettiTable(cells, c.n, field)


@dataclass(frozen=True)
class ResolutionShape:
    """Classification of a Betti table.

    kind is one of:
      "trivial"  zero ideal: only the (0, 0) cell, no resolution data
      "linear"   pure with consecutive degrees d_i = t + i
      "pure"     one internal degree per homological degree, not linear
      "general"  anything else
    For pure/linear shapes, `degrees` and `p` use the convention that the
    ring itself is displayed separately: index i covers homological degree
    i+1 of the table and p = pdim - 1.
    """

    kind: str
    degrees: tuple[int, ...] | None = None
    t: int | None = None
    p: int | None = None

    @property
    def is_pure(self) -> bool:
        return self.kind in ("pure", "linear")


def classify(table: BettiTable) -> ResolutionShape:
    """Pure / linear / general classification of a Betti table.

    Pure means every homological degree >= 1 carries exactly one internal
    degree; linear additionally has consecutive degrees.  The zero ideal
    (a full simplex, nothing beyond beta_{0,0}) gets the distinguished
    "trivial" shape rather than an error.
    """
    by_i: dict[int, list[int]] = {}
    for a, b, _ in table.cells:
        if a >= 1:
            by_i.setdefault(a, []).append(b)
    if not by_i:
        return ResolutionShape("trivial")
    pdim = max(by_i)
    if set(by_i) != set(range(1, pdim + 1)):
        return ResolutionShape("general")
    if any(len(js) > 1 for js in by_i.values()):
        return ResolutionShape("general")
    degrees = tuple(by_i[i][0] for i in range(1, pdim + 1))
    if any(degrees[i] >= degrees[i + 1] for i in range(len(degrees) - 1)):
        return ResolutionShape("general")
    p = pdim - 1
    if all(degrees[i] == degrees[0] + i for i in range(len(degrees))):
        return ResolutionShape("linear", degrees=degrees, t=degrees[0], p=p)
    return ResolutionShape("pure", degrees=degrees, p=p)


@dataclass(frozen=True)
class ResolutionView:
    """Pure-resolution data with the ring displayed separately: indices 0..p."""

    p: int
    degrees: tuple[int, ...]
    betti: tuple[int, ...]


def resolution_view(table: BettiTable, shape: ResolutionShape) -> ResolutionView:
    """Degrees and Betti numbers of a pure table, reindexed from 0.

    beta_i here is the table entry at homological degree i+1 and internal
    degree d_i.  Raises NotPureError for general shapes and for the trivial
    zero-ideal shape, where p is undefined.
    """
    if not shape.is_pure:
        raise NotPureError(f"no pure-resolution view for a {shape.kind!r} table")
    betti = tuple(table.entry(i + 1, d) for i, d in enumerate(shape.degrees))
    return ResolutionView(shape.p, shape.degrees, betti)


def clear_homology_cache() -> None:
    _HOM_CACHE.clear()
