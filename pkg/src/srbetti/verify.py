"""End-to-end verification: compute everything for a complex, cross-check
every identity, and emit a structured, deterministic report.

Reports never raise on a mathematical disagreement; surfacing disagreements
is their purpose.  Only resource and validation problems raise.

JSON schema ("srbetti-report/1"):  math values that can grow without bound
(f/h entries, Betti values, residual coefficients, multiplicities) are
encoded as decimal strings so consumers are not bound by 53-bit floats;
small structural integers (n, d, p, degrees, indices) stay JSON numbers.
Absent sections are null.  Serialization is sorted-key JSON with no
timestamps, so identical inputs give byte-identical reports.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .betti import BettiTable, ResolutionView, ResolutionShape, classify, graded_betti, resolution_view
from .betti import DEFAULT_VERTEX_CAP
from .errors import NonPositiveResultError
from .exactla import GF_DEFAULT, QQ, FieldSpec
from .formulas import FormulaInput, betti_from_h, check_lower_bound, h_relations
from .graphs import Graph, Xorshift64Star, _default_labels, clique_complex, cycle_graph, gen_chordal, is_chordal
from .hilbert import IntPolynomial, verify_series_identity
from .simplicial import Complex, FVector, HVector, f_vector, h_vector


def fingerprint(c: Complex) -> str:
    """Stable identity of a complex: sha256 over n and the facet masks."""
    blob = f"{c.n}:{','.join(map(str, c.facets))}".encode()
    return hashlib.sha256(blob).hexdigest()[:16]


@dataclass(frozen=True)
class MultiplicityCheck:
    h_sum: int
    f_top: int
    equal: bool


@dataclass(frozen=True)
class VerificationReport:
    """Everything computed for one complex, plus per-identity outcomes."""

    n: int
    facet_hash: str
    field: FieldSpec
    f: FVector
    h: HVector
    table: BettiTable
    shape: ResolutionShape
    pdim: int
    codim: int
    resolution: ResolutionView | None
    formula_betti: tuple[int, ...] | None
    match: tuple[bool, ...] | None
    multiplicity_check: MultiplicityCheck
    series_residual: IntPolynomial | None
    relation_residuals: tuple[int, ...] | None
    bound_verdicts: tuple[bool, ...] | None
    char_zero_agrees: bool | None

    def all_identities_hold(self) -> bool:
        ok = self.multiplicity_check.equal and self.pdim >= self.codim
        if self.shape.is_pure:
            ok = ok and self.match is not None and all(self.match)
            ok = ok and self.series_residual is not None and self.series_residual.is_zero
            ok = ok and self.bound_verdicts is not None and all(self.bound_verdicts)
        if self.shape.kind == "linear":
            ok = ok and self.relation_residuals is not None
            ok = ok and all(r == 0 for r in self.relation_residuals)
        return ok

    def to_json_dict(self) -> dict:
        shape = {
            "kind": self.shape.kind,
            "degrees": list(self.shape.degrees) if self.shape.degrees is not None else None,
            "t": self.shape.t,
            "p": self.shape.p,
        }
        resolution = None
        if self.resolution is not None:
            resolution = {
                "p": self.resolution.p,
                "degrees": list(self.resolution.degrees),
                "betti": [str(b) for b in self.resolution.betti],
            }
        return {
            "schema": "srbetti-report/1",
            "identity": {"n": self.n, "facets_sha256": self.facet_hash},
            "field": str(self.field),
            "f_vector": [str(x) for x in self.f.entries],
            "h_vector": [str(x) for x in self.h.entries],
            "dimension_d": self.f.d,
            "codim": self.codim,
            "pdim": self.pdim,
            "pdim_ge_codim": self.pdim >= self.codim,
            "betti_table": [[i, j, str(v)] for i, j, v in self.table.cells],
            "shape": shape,
            "resolution_view": resolution,
            "formula_betti": [str(b) for b in self.formula_betti] if self.formula_betti is not None else None,
            "match": list(self.match) if self.match is not None else None,
            "multiplicity_check": {
                "h_sum": str(self.multiplicity_check.h_sum),
                "f_top": str(self.multiplicity_check.f_top),
                "equal": self.multiplicity_check.equal,
            },
            "series_residual": [str(a) for a in self.series_residual.coeffs] if self.series_residual is not None else None,
            "relation_residuals": [str(r) for r in self.relation_residuals] if self.relation_residuals is not None else None,
            "bound_verdicts": list(self.bound_verdicts) if self.bound_verdicts is not None else None,
            "char_zero_agrees": self.char_zero_agrees,
            "all_identities_hold": self.all_identities_hold(),
        }


def verify_complex(
    c: Complex,
    field: FieldSpec = GF_DEFAULT,
    n_cap: int = DEFAULT_VERTEX_CAP,
    check_char_zero: bool = True,
) -> VerificationReport:
    """Full cross-check of one complex over the given field.

    Per-identity outcomes land in report fields; nothing mathematical raises.
    When the field is finite and check_char_zero is set, the Betti table is
    recomputed over the rationals and compared, so characteristic dependence
    is reported rather than hidden.
    """
    f = f_vector(c)
    h = h_vector(f)
    table = graded_betti(c, field, n_cap)
    shape = classify(table)
    pdim = table.pdim
    codim = c.n - f.d

    mult = MultiplicityCheck(h.total(), f.entries[-1], h.total() == f.entries[-1])

    resolution = None
    formula = None
    match = None
    residual = None
    relations = None
    bounds = None
    if shape.is_pure:
        resolution = resolution_view(table, shape)
        try:
            formula = betti_from_h(FormulaInput(h, c.n, f.d, shape))
            match = tuple(a == b for a, b in zip(formula, resolution.betti))
        except NonPositiveResultError:
            formula = None
            match = tuple(False for _ in resolution.betti)
        residual = verify_series_identity(h, c.n, f.d, resolution.p, resolution.degrees, resolution.betti)
        bounds = check_lower_bound(resolution.betti, resolution.p)
        if shape.kind == "linear":
            relations = h_relations(h, c.n, f.d, resolution.p, shape.t)

    char_zero = None
    if field.p is not None and check_char_zero:
        char_zero = graded_betti(c, QQ, n_cap).cells == table.cells

    return VerificationReport(
        n=c.n,
        facet_hash=fingerprint(c),
        field=field,
        f=f,
        h=h,
        table=table,
        shape=shape,
        pdim=pdim,
        codim=codim,
        resolution=resolution,
        formula_betti=formula,
        match=match,
        multiplicity_check=mult,
        series_residual=residual,
        relation_residuals=relations,
        bound_verdicts=bounds,
        char_zero_agrees=char_zero,
    )


# Identity checks tallied by the corpus runner.  "froberg_linear" is the
# forward direction: a chordal graph's clique complex must classify linear
# (or trivial, for a complete graph, where the ideal is zero).
CHECK_NAMES = (
    "theorem_formula",
    "multiplicity",
    "series_identity",
    "h_relations",
    "lower_bound",
    "froberg_linear",
    "pdim_codim",
    "char_zero",
)

# Converse fixtures: chordless cycles, whose clique complexes must NOT
# classify linear.
NONCHORDAL_FIXTURES = ("C4", "C5", "C6")


def _nonchordal_graph(name: str) -> Graph:
    return cycle_graph(int(name[1:]))


@dataclass(frozen=True)
class CheckCounts:
    passed: int
    failed: int
    na: int


@dataclass(frozen=True)
class CorpusSummary:
    count: int
    n_max: int
    seed: int
    field: FieldSpec
    checks: dict
    converse: tuple[tuple[str, str, bool], ...]  # (name, shape kind, not linear?)
    first_failure: str | None

    def gate_passed(self) -> bool:
        """Exit-status verdict: every tallied identity and the converse hold.

        char_zero is informational (field dependence is legitimate data) and
        does not gate.
        """
        for name, counts in self.checks.items():
            if name != "char_zero" and counts.failed:
                return False
        return all(flag for _, _, flag in self.converse)

    def to_json_dict(self) -> dict:
        return {
            "schema": "srbetti-corpus/1",
            "params": {
                "count": self.count,
                "n_max": self.n_max,
                "seed": self.seed,
                "field": str(self.field),
            },
            "checks": {
                name: {"pass": c.passed, "fail": c.failed, "na": c.na}
                for name, c in self.checks.items()
            },
            "converse_nonchordal": [
                {"graph": name, "shape": kind, "not_linear": flag}
                for name, kind, flag in self.converse
            ],
            "first_failure": self.first_failure,
            "all_passed": self.gate_passed(),
        }


def _tally(tallies: dict, name: str, outcome: bool | None) -> bool:
    p, f, na = tallies[name]
    if outcome is None:
        tallies[name] = (p, f, na + 1)
        return True
    if outcome:
        tallies[name] = (p + 1, f, na)
        return True
    tallies[name] = (p, f + 1, na)
    return False


def corpus_graphs(count: int, n_max: int, seed: int) -> list[Graph]:
    """The seeded chordal corpus: per-graph (n, density, subseed) drawn from
    one master stream, so the corpus is a pure function of its parameters."""
    if count < 1 or n_max < 2:
        raise ValueError("need count >= 1 and n_max >= 2")
    rng = Xorshift64Star(seed)
    out = []
    for _ in range(count):
        n = 2 + rng.below(n_max - 1)
        density = (20 + rng.below(61)) / 100.0
        subseed = rng.next_u64()
        out.append(gen_chordal(n, density, subseed))
    return out


def report_checks(rep: VerificationReport) -> dict[str, bool | None]:
    """Per-identity outcomes of one report (None where not applicable)."""
    pure = rep.shape.is_pure
    linear = rep.shape.kind == "linear"
    return {
        "theorem_formula": (rep.match is not None and all(rep.match)) if pure else None,
        "multiplicity": rep.multiplicity_check.equal,
        "series_identity": rep.series_residual.is_zero if pure else None,
        "h_relations": all(r == 0 for r in rep.relation_residuals) if linear else None,
        "lower_bound": all(rep.bound_verdicts) if pure else None,
        "pdim_codim": rep.pdim >= rep.codim,
        "char_zero": rep.char_zero_agrees,
    }


def verify_chordal_corpus(
    count: int,
    n_max: int,
    seed: int,
    field: FieldSpec = GF_DEFAULT,
) -> CorpusSummary:
    """Generate seeded chordal graphs, verify every identity on each clique
    complex, and check the converse on the chordless-cycle fixtures."""
    tallies = {name: (0, 0, 0) for name in CHECK_NAMES}
    first_failure = None
    for g in corpus_graphs(count, n_max, seed):
        c = clique_complex(g)
        rep = verify_complex(c, field)
        outcomes = report_checks(rep)
        outcomes["froberg_linear"] = rep.shape.kind in ("linear", "trivial")
        ok = True
        for name in CHECK_NAMES:
            good = _tally(tallies, name, outcomes[name])
            if name != "char_zero":
                ok = ok and good
        if not ok and first_failure is None:
            first_failure = rep.facet_hash
    converse = []
    for name in NONCHORDAL_FIXTURES:
        g = _nonchordal_graph(name)
        shape = classify(graded_betti(clique_complex(g), field))
        converse.append((name, shape.kind, shape.kind not in ("linear", "trivial")))
    checks = {name: CheckCounts(*tallies[name]) for name in CHECK_NAMES}
    return CorpusSummary(count, n_max, seed, field, checks, tuple(converse), first_failure)


@dataclass(frozen=True)
class SweepResult:
    n: int
    checked: int
    mismatches: tuple[int, ...]  # edge bitmasks of failing graphs

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json_dict(self) -> dict:
        return {
            "schema": "srbetti-sweep/1",
            "n": self.n,
            "checked": self.checked,
            "mismatches": list(self.mismatches),
            "all_passed": self.passed,
        }


def froberg_exhaustive(n: int = 6, field: FieldSpec = GF_DEFAULT) -> SweepResult:
    """Two-sided linearity/chordality sweep over ALL graphs on n labeled vertices.

    For every edge set: the clique complex's Betti table classifies linear
    (trivial counting as vacuously linear, the zero-ideal case) iff the graph
    is chordal.  2^C(n,2) graphs; n = 6 takes minutes and is the strongest
    acceptance check in the suite.
    """
    pair_list = [(i, j) for i in range(n) for j in range(i + 1, n)]
    labels = _default_labels(n)
    mismatches = []
    checked = 0
    for edge_mask in range(1 << len(pair_list)):
        adj = [0] * n
        for bit, (i, j) in enumerate(pair_list):
            if (edge_mask >> bit) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        g = Graph(labels, tuple(adj))
        chordal, _ = is_chordal(g)
        shape = classify(graded_betti(clique_complex(g), field))
        linear = shape.kind in ("linear", "trivial")
        if linear != chordal:
            mismatches.append(edge_mask)
        checked += 1
    return SweepResult(n, checked, tuple(mismatches))


def dumps_report(obj: dict) -> str:
    """Canonical JSON encoding used everywhere reports are written."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
