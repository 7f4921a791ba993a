"""Genus of oriented chord diagrams: boundary walk, uniform generation, bound checks."""

from ._core import (
    ChordError,
    PartialDiagram,
    __version__,
    boundary_count,
    decompose,
    diagram_count,
    edge_order,
    enumerate_diagrams,
    exact_stats,
    find_plugs,
    genus,
    gluing_oracle_d,
    mc_stats,
    plug_mc_stats,
    run_procedure,
)


def parse(text):
    """Parse "n=3;(1,3)" or "(1,3),(2,4)" into a PartialDiagram."""
    return PartialDiagram.parse(text)


__all__ = [
    "ChordError",
    "PartialDiagram",
    "__version__",
    "boundary_count",
    "decompose",
    "diagram_count",
    "edge_order",
    "enumerate_diagrams",
    "exact_stats",
    "find_plugs",
    "genus",
    "gluing_oracle_d",
    "mc_stats",
    "parse",
    "plug_mc_stats",
    "run_procedure",
]
