"""Integer set labels, sumsets, and weak-IASI verification.

A vertex labeling assigns each vertex a nonempty finite set of non-negative
integers.  The induced edge label is the sumset of the endpoint labels.  A
labeling is a weak IASI when vertex labels are pairwise distinct, induced
edge labels are pairwise distinct, and every edge's sumset is exactly as
large as its bigger endpoint label.  Verification always computes the real
sumsets; the endpoint-cardinality shortcut is a theorem under test here,
never the implementation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .graphs import Graph


class MissingLabelError(ValueError):
    """A labeling left some vertex of the graph unlabeled."""

    def __init__(self, vertex: int):
        super().__init__(f"no label for vertex {vertex}")
        self.vertex = vertex


@dataclass(frozen=True)
class SetLabel:
    """Nonempty finite set of non-negative integers, stored sorted."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        canon = tuple(sorted(set(self.elements)))
        if not canon:
            raise ValueError("set label must be nonempty")
        if canon[0] < 0:
            raise ValueError("set label elements must be non-negative")
        object.__setattr__(self, "elements", canon)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def is_singleton(self) -> bool:
        return len(self.elements) == 1

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"


def sumset(a: SetLabel, b: SetLabel) -> SetLabel:
    """All pairwise sums {x + y : x in a, y in b}."""
    return SetLabel(tuple({x + y for x in a.elements for y in b.elements}))


@dataclass(frozen=True)
class VertexLabeling:
    """Map from vertex id to set label; totality is checked at use time."""

    labels: dict[int, SetLabel] = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "vertex_labels": {
                str(v): list(label.elements) for v, label in self.labels.items()
            }
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "VertexLabeling":
        if not isinstance(data, Mapping) or "vertex_labels" not in data:
            raise ValueError('labeling JSON must be an object with "vertex_labels"')
        raw = data["vertex_labels"]
        if not isinstance(raw, Mapping):
            raise ValueError('"vertex_labels" must map vertex ids to integer arrays')
        labels: dict[int, SetLabel] = {}
        for key, value in raw.items():
            try:
                vertex = int(key)
            except (TypeError, ValueError):
                raise ValueError(f"vertex id {key!r} is not a decimal string")
        # second pass keeps error messages tied to the offending key
        for key, value in raw.items():
            vertex = int(key)
            if vertex < 0:
                raise ValueError(f"vertex id {key!r} is negative")
            if not isinstance(value, (list, tuple)) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in value
            ):
                raise ValueError(f"label for vertex {key} must be an integer array")
            labels[vertex] = SetLabel(tuple(value))
        return cls(labels)


@dataclass(frozen=True)
class IASIVerdict:
    """Outcome of checking a labeling against the weak-IASI conditions."""

    vertex_injective: bool
    edge_injective: bool
    weak_condition: bool
    mono_vertex_count: int
    mono_edge_count: int
    first_violation: str | None = None

    @property
    def is_weak_iasi(self) -> bool:
        return self.vertex_injective and self.edge_injective and self.weak_condition

    def to_json_dict(self) -> dict:
        return {
            "vertex_injective": self.vertex_injective,
            "edge_injective": self.edge_injective,
            "weak_condition": self.weak_condition,
            "is_weak_iasi": self.is_weak_iasi,
            "mono_vertex_count": self.mono_vertex_count,
            "mono_edge_count": self.mono_edge_count,
            "first_violation": self.first_violation,
        }


def _require_total(g: Graph, f: VertexLabeling) -> None:
    for v in range(g.vertex_count):
        if v not in f.labels:
            raise MissingLabelError(v)


def induced_edge_labels(g: Graph, f: VertexLabeling) -> dict[tuple[int, int], SetLabel]:
    """Sumset label for every edge, keyed by canonical edge pair."""
    _require_total(g, f)
    return {(u, v): sumset(f.labels[u], f.labels[v]) for u, v in g.edges}


def count_mono_elements(g: Graph, f: VertexLabeling) -> tuple[int, int]:
    """(mono vertices, mono edges): elements whose label is a singleton.

    Edge counts come from the actual induced sumsets.
    """
    _require_total(g, f)
    mono_vertices = sum(
        1 for v in range(g.vertex_count) if f.labels[v].is_singleton
    )
    edge_labels = induced_edge_labels(g, f)
    mono_edges = sum(1 for label in edge_labels.values() if label.is_singleton)
    return mono_vertices, mono_edges


def verify(g: Graph, f: VertexLabeling) -> IASIVerdict:
    """Check vertex injectivity, edge injectivity, and the weak condition.

    All three are decided from the labels and their real sumsets.  The first
    violation found (vertices in id order, then edges in canonical order) is
    reported for diagnosis.
    """
    _require_total(g, f)

    violations: list[str] = []

    vertex_injective = True
    seen_labels: dict[tuple[int, ...], int] = {}
    for v in range(g.vertex_count):
        key = f.labels[v].elements
        if key in seen_labels:
            vertex_injective = False
            violations.append(
                f"vertices {seen_labels[key]} and {v} share label {f.labels[v]}"
            )
            break
        seen_labels[key] = v

    edge_labels = induced_edge_labels(g, f)

    weak_condition = True
    for (u, v), label in edge_labels.items():
        expected = max(len(f.labels[u]), len(f.labels[v]))
        if len(label) != expected:
            weak_condition = False
            violations.append(
                f"edge ({u}, {v}) sumset {label} has size {len(label)}, "
                f"expected {expected}"
            )
            break

    edge_injective = True
    seen_edge_labels: dict[tuple[int, ...], tuple[int, int]] = {}
    for edge, label in edge_labels.items():
        key = label.elements
        if key in seen_edge_labels:
            edge_injective = False
            violations.append(
                f"edges {seen_edge_labels[key]} and {edge} share sumset {label}"
            )
            break
        seen_edge_labels[key] = edge

    mono_vertices, mono_edges = count_mono_elements(g, f)
    return IASIVerdict(
        vertex_injective=vertex_injective,
        edge_injective=edge_injective,
        weak_condition=weak_condition,
        mono_vertex_count=mono_vertices,
        mono_edge_count=mono_edges,
        first_violation=violations[0] if violations else None,
    )
