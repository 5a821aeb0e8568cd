"""Closed-form Betti numbers and h-vector relations for pure resolutions.

Given the shape (degrees) of a pure resolution of the face ring, the Betti
numbers are alternating binomial sums of the h-vector; for linear shapes the
same expansion forces a system of linear relations on the h-vector in all
degrees above p+t.  These are the formulas the oracle table is checked
against; the shape is always taken from the oracle, never guessed from h.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .betti import ResolutionShape, classify, graded_betti, resolution_view
from .errors import NonPositiveResultError, NotChordalError
from .exactla import GF_DEFAULT, FieldSpec
from .graphs import Graph, clique_complex, is_chordal
from .simplicial import HVector, f_vector, h_vector


@dataclass(frozen=True)
class FormulaInput:
    """Data feeding the closed forms: h-vector, ambient n, dimension d, shape.

    n is the number of vertices (= ambient variables), d the Krull dimension
    of the face ring (complex dimension + 1), so n - d is the codimension.
    """

    h: HVector
    n: int
    d: int
    shape: ResolutionShape

    def __post_init__(self):
        if not self.n >= self.d >= 1:
            raise ValueError(f"need n >= d >= 1, got n={self.n}, d={self.d}")
        if not self.shape.is_pure:
            raise ValueError(f"formula input requires a pure shape, got {self.shape.kind!r}")


def _betti_sum(h: HVector, m: int, i: int, di: int) -> int:
    return sum((-1) ** (ell + i + 1) * comb(m, ell) * h.get(di - ell) for ell in range(di + 1))


def betti_from_h(inp: FormulaInput) -> tuple[int, ...]:
    """beta_i = sum_{ell=0}^{d_i} (-1)^(ell+i+1) C(n-d, ell) h_{d_i - ell}.

    One value per shape index i in 0..p.  h indices beyond d read as zero.
    A result <= 0 means the degree data cannot be the shape of a minimal
    resolution for this h-vector, and raises NonPositiveResultError.
    """
    m = inp.n - inp.d
    out = []
    for i, di in enumerate(inp.shape.degrees):
        s = _betti_sum(inp.h, m, i, di)
        if s <= 0:
            raise NonPositiveResultError(
                f"beta_{i} = {s} <= 0 for degrees {inp.shape.degrees}; inconsistent degree data"
            )
        out.append(s)
    return tuple(out)


def betti_from_h_linear(h: HVector, t: int, p: int, n: int, d: int) -> tuple[int, ...]:
    """The linear-shape specialization, with d_i = t + i.

    Identical to betti_from_h on the degree sequence (t, t+1, ..., t+p).
    """
    if not n >= d >= 1:
        raise ValueError(f"need n >= d >= 1, got n={n}, d={d}")
    m = n - d
    out = []
    for i in range(p + 1):
        s = _betti_sum(h, m, i, t + i)
        if s <= 0:
            raise NonPositiveResultError(f"beta_{i} = {s} <= 0 for t={t}; inconsistent degree data")
        out.append(s)
    return tuple(out)


def h_relations(h: HVector, n: int, d: int, p: int, t: int) -> tuple[int, ...]:
    """Residuals sum_{ell=0}^{j} (-1)^ell h_{j-ell} C(n-d, ell) for j in (p+t, n].

    All must vanish when the face ring has a t-linear resolution of length
    p+1; residuals beyond j = n vanish identically and are not emitted.
    Nonzero residuals are returned as data, not raised as errors.
    """
    m = n - d
    return tuple(
        sum((-1) ** ell * h.get(j - ell) * comb(m, ell) for ell in range(j + 1))
        for j in range(p + t + 1, n + 1)
    )


def chordal_h_relations(g: Graph, field: FieldSpec = GF_DEFAULT) -> tuple[int, ...]:
    """The linear-relation residuals for the clique complex of a chordal graph.

    Builds the clique complex, takes p from the oracle table (t = 2: the
    non-faces of a flag complex are generated by quadrics) and evaluates
    h_relations; all residuals are zero for chordal input.  A complete graph
    has zero ideal and no relations: the empty tuple is returned.  Raises
    NotChordalError otherwise.
    """
    ok, _ = is_chordal(g)
    if not ok:
        raise NotChordalError("clique-complex relations require a chordal graph")
    c = clique_complex(g)
    table = graded_betti(c, field)
    shape = classify(table)
    if shape.kind == "trivial":
        return ()
    view = resolution_view(table, shape)
    f = f_vector(c)
    return h_relations(h_vector(f), c.n, f.d, view.p, 2)


def check_lower_bound(betti: tuple[int, ...], p: int) -> tuple[bool, ...]:
    """Per-index verdicts beta_i >= C(p, i) for a pure resolution of length p+1."""
    if len(betti) != p + 1:
        raise ValueError(f"expected {p + 1} Betti numbers, got {len(betti)}")
    return tuple(betti[i] >= comb(p, i) for i in range(p + 1))
