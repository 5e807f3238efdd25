"""Total labellings, edge weights and the irregularity verifier.

A total k-labelling assigns an integer in [1, k] to every vertex and every
edge.  The weight of an edge (u, v) is the edge label plus both endpoint
labels; a labelling is edge irregular when all weights are pairwise distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from tesgraph.graph import Edge, Graph, canonical_edge


class LabellingError(Exception):
    """Raised when a labelling does not cover the graph it is applied to."""


@dataclass(frozen=True)
class TotalLabelling:
    """A labelling certificate: vertex labels, edge labels, and the claimed bound.

    bound_k is the claim being certified, not the maximum label used; the
    verifier checks every label against it.
    """

    vertex_labels: tuple[int, ...]
    edge_labels: Mapping[Edge, int]
    bound_k: int

    @staticmethod
    def build(vertex_labels, edge_labels, bound_k) -> "TotalLabelling":
        canon = {canonical_edge(u, v): int(lbl) for (u, v), lbl in edge_labels.items()}
        return TotalLabelling(tuple(int(x) for x in vertex_labels), canon, int(bound_k))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of verify_irregular; ok iff violations is empty."""

    ok: bool
    violations: tuple[tuple, ...]

    def kinds(self) -> set[str]:
        return {v[0] for v in self.violations}


def edge_weight(g: Graph, labelling: TotalLabelling, e: Edge) -> int:
    """f(e) + f(u) + f(v) for an edge of the graph."""
    u, v = canonical_edge(e[0], e[1])
    if not g.has_edge(u, v):
        raise LabellingError(f"edge ({u}, {v}) not in graph")
    if (u, v) not in labelling.edge_labels:
        raise LabellingError(f"edge ({u}, {v}) missing from labelling")
    return labelling.edge_labels[(u, v)] + labelling.vertex_labels[u] + labelling.vertex_labels[v]


def verify_irregular(g: Graph, labelling: TotalLabelling) -> VerificationReport:
    """Check a certificate, reporting every violation instead of raising.

    Violation kinds: "label-out-of-range", "missing-edge-label",
    "duplicate-weight".  Labels attached to pairs that are not edges of g are
    reported as label-out-of-range with an "unknown-edge" payload.
    """
    violations: list[tuple] = []
    k = labelling.bound_k
    if k < 1:
        violations.append(("label-out-of-range", "bound", k))

    if len(labelling.vertex_labels) != g.vertex_count:
        violations.append(
            ("label-out-of-range", "vertex-labels-length", len(labelling.vertex_labels), g.vertex_count)
        )
    for v, lbl in enumerate(labelling.vertex_labels[: g.vertex_count]):
        if not (1 <= lbl <= k):
            violations.append(("label-out-of-range", "vertex", v, lbl))

    edge_set = set(g.edges)
    for e, lbl in sorted(labelling.edge_labels.items()):
        if e not in edge_set:
            violations.append(("label-out-of-range", "unknown-edge", e, lbl))
        elif not (1 <= lbl <= k):
            violations.append(("label-out-of-range", "edge", e, lbl))

    weights: dict[int, list[Edge]] = {}
    for e in g.edges:
        if e not in labelling.edge_labels:
            violations.append(("missing-edge-label", e))
            continue
        if len(labelling.vertex_labels) != g.vertex_count:
            continue
        w = labelling.edge_labels[e] + labelling.vertex_labels[e[0]] + labelling.vertex_labels[e[1]]
        weights.setdefault(w, []).append(e)

    # exhaustive: list every duplicated weight with all of its edges
    for w in sorted(weights):
        if len(weights[w]) > 1:
            violations.append(("duplicate-weight", w, tuple(weights[w])))

    return VerificationReport(ok=not violations, violations=tuple(violations))


def weight_multiset(g: Graph, labelling: TotalLabelling) -> list[int]:
    """Sorted edge weights, duplicates retained."""
    return sorted(edge_weight(g, labelling, e) for e in g.edges)
