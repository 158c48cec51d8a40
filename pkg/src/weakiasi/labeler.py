"""Construct explicit set-labelings that realize a mono pattern.

Mono vertices receive distinct singletons drawn from a greedy Sidon
sequence, so sums along mono-mono edges are automatically pairwise
distinct.  Non-mono vertices receive 2-element sets with pairwise distinct
gaps: edges at different non-mono vertices then get sumsets with different
gaps, and edges at the same non-mono vertex get translates by distinct
singletons.  Every constructed labeling is certified by the verifier
before it is returned; certification failing is a defect, not a condition
the caller handles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .setlabels import SetLabel, VertexLabeling, verify
from .solver import (
    DEFAULT_TIMEOUT_SECS,
    InvalidPatternError,
    MonoPattern,
    SparingResult,
    pattern_is_valid,
    pattern_mono_edges,
    sparing_exact,
)

_MAX_ATTEMPTS = 8


class LabelingConstructionError(RuntimeError):
    """Construction retries exhausted; indicates a defect, not bad input."""


@dataclass(frozen=True)
class SidonSequence:
    """Strictly increasing positive integers with all pairwise sums distinct."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        terms = self.terms
        if any(t <= 0 for t in terms):
            raise ValueError("Sidon terms must be positive")
        if any(a >= b for a, b in zip(terms, terms[1:])):
            raise ValueError("Sidon terms must be strictly increasing")
        sums = [terms[i] + terms[j] for i in range(len(terms)) for j in range(i + 1, len(terms))]
        if len(sums) != len(set(sums)):
            raise ValueError("pairwise sums of a Sidon sequence must be distinct")

    def __len__(self) -> int:
        return len(self.terms)


def sidon(k: int) -> SidonSequence:
    """First k terms of the greedy Sidon sequence 1, 2, 3, 5, 8, 13, ..."""
    if k < 1:
        raise ValueError("k must be at least 1")
    terms: list[int] = []
    sums: set[int] = set()
    candidate = 1
    while len(terms) < k:
        new_sums = {t + candidate for t in terms}
        if not new_sums & sums:
            sums |= new_sums
            terms.append(candidate)
        candidate += 1
    return SidonSequence(tuple(terms))


def _build(g: Graph, p: MonoPattern, offset: int) -> VertexLabeling:
    mono = [v for v in range(g.vertex_count) if v not in p.non_mono]
    labels: dict[int, SetLabel] = {}
    base = offset
    if mono:
        terms = sidon(len(mono)).terms
        for v, term in zip(mono, terms):
            labels[v] = SetLabel((term + offset,))
        base = terms[-1] + offset + 1
    for j, v in enumerate(sorted(p.non_mono)):
        labels[v] = SetLabel((base + j, base + j + j + 1))
    return VertexLabeling(labels)


def construct_weak_iasi(g: Graph, p: MonoPattern) -> VertexLabeling:
    """A verified weak IASI whose mono edges are exactly the pattern's.

    Deterministic for fixed input.  If verification of the candidate
    labeling fails, the candidate pool is shifted upward and construction
    retried; exhausting the retries raises LabelingConstructionError.
    """
    if not pattern_is_valid(g, p):
        raise InvalidPatternError(
            f"non-mono set {sorted(p.non_mono)} is not independent"
        )
    expected_mono_edges = pattern_mono_edges(g, p)
    for attempt in range(_MAX_ATTEMPTS):
        labeling = _build(g, p, offset=attempt * (g.vertex_count + 8))
        verdict = verify(g, labeling)
        if verdict.is_weak_iasi and verdict.mono_edge_count == expected_mono_edges:
            return labeling
    raise LabelingConstructionError(
        f"no verified labeling after {_MAX_ATTEMPTS} attempts "
        f"(graph with {g.vertex_count} vertices, pattern {sorted(p.non_mono)})"
    )


def construct_optimal(
    g: Graph, timeout_secs: float | None = DEFAULT_TIMEOUT_SECS
) -> tuple[SparingResult, VertexLabeling]:
    """Solve for the sparing number and realize its witness as a labeling."""
    result = sparing_exact(g, timeout_secs)
    labeling = construct_weak_iasi(g, result.witness)
    return result, labeling
