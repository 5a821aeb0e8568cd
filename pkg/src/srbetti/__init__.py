"""Betti tables, Hilbert series and h-vector identities of face rings.

Everything is exact integer (or Fraction) arithmetic over bitmask
combinatorics; all values are immutable and every operation is a pure
function, so the API is safe to call concurrently.
"""

from .betti import (
    DEFAULT_VERTEX_CAP,
    BettiTable,
    ResolutionView,
    ResolutionShape,
    classify,
    graded_betti,
    resolution_view,
)
from .errors import (
    DimensionOutOfRangeError,
    EmptyInputError,
    NonPositiveResultError,
    NotChordalError,
    NotPureError,
    ParseError,
    TooManyVerticesError,
)
from .exactla import GF_DEFAULT, QQ, FieldSpec, SparseMatrix, rank
from .formulas import (
    FormulaInput,
    betti_from_h,
    betti_from_h_linear,
    check_lower_bound,
    chordal_h_relations,
    h_relations,
)
from .graphs import (
    Graph,
    Xorshift64Star,
    clique_complex,
    complement,
    complete_graph,
    cycle_graph,
    gen_chordal,
    graph_from_edges,
    is_chordal,
    maximal_cliques,
    path_graph,
    read_graph,
    write_graph,
)
from .hilbert import (
    HilbertPolynomial,
    HilbertSeries,
    IntPolynomial,
    hilbert_polynomial,
    multiplicity,
    numerator_from_resolution,
    series_from_f,
    verify_series_identity,
)
from .homology import ReducedBetti, boundary_matrix, boundary_squared_is_zero, reduced_homology_dims
from .simplicial import (
    MAX_VERTICES,
    Complex,
    FVector,
    HVector,
    complex_from_facets,
    f_from_h,
    f_vector,
    h_vector,
    induced_subcomplex,
    minimal_non_faces,
    read_complex,
    write_complex,
)
from .verify import (
    CorpusSummary,
    SweepResult,
    VerificationReport,
    fingerprint,
    froberg_exhaustive,
    verify_chordal_corpus,
    verify_complex,
)

__version__ = "0.1.0"

from pathlib import Path as _Path

DATA_DIR = _Path(__file__).resolve().parent / "data"


def fixture_path(name: str) -> _Path:
    """Path of a bundled example file (e.g. 'c4.cplx', 'rp2.cplx', 'k3.graph')."""
    path = DATA_DIR / name
    if not path.is_file():
        raise FileNotFoundError(f"no bundled fixture {name!r} in {DATA_DIR}")
    return path
