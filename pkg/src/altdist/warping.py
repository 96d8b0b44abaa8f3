"""Edge weights along components and the warping span of a diagram."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import PlanarDiagram
from .errors import CrossinglessComponentError, DiagramError


@dataclass(frozen=True)
class WeightedTraversal:
    component: int
    edges: tuple[int, ...]
    weights: tuple[int, ...]
    # weight change from the last edge back to the first; 0 when the traversal closes up
    net_change: int = 0

    @property
    def span(self) -> Fraction:
        """``w_k = (max d - min d - 1) / 2``."""
        return Fraction(max(self.weights) - min(self.weights) - 1, 2)

    @property
    def closes_up(self) -> bool:
        """Does the weight return to its starting value after one full turn?"""
        return self.net_change == 0


def edge_weights(d: PlanarDiagram, k: int, base: int | None = None) -> WeightedTraversal:
    """Weights along component ``k`` starting from edge index ``base`` (weight 0).

    Passing over a crossing adds 1 to the weight of the next edge and passing
    under subtracts 1.
    """
    if k < 0 or k >= d.component_count:
        raise DiagramError(f"component index {k} out of range")
    if k >= len(d.components):
        raise CrossinglessComponentError(f"component {k} has no crossings")
    comp = d.components[k]
    base = 0 if base is None else base
    if not 0 <= base < len(comp):
        raise DiagramError(f"base edge index {base} out of range for component {k}")
    edges = comp[base:] + comp[:base]
    weights = [0]
    for e in edges[:-1]:
        weights.append(weights[-1] + (1 if d.passes_over(e) else -1))
    total = weights[-1] + (1 if d.passes_over(edges[-1]) else -1)
    return WeightedTraversal(k, tuple(edges), tuple(weights), total)


def component_warp(d: PlanarDiagram, k: int) -> Fraction:
    if k >= len(d.components):
        return Fraction(0)
    return edge_weights(d, k).span


def warping_span_diagram(d: PlanarDiagram) -> Fraction:
    """Maximum of ``w_k`` over components; crossingless components count 0."""
    if not d.components:
        return Fraction(0)
    return max(max(component_warp(d, k) for k in range(len(d.components))), Fraction(0))
