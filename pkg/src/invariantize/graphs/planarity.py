"""Planarity testing and minimal nonplanar subgraph extraction.

Loops and parallel edges never change planarity, so the test collapses each
parallel class to one edge and drops loops before running the left-right
planarity check (networkx).  Direction is likewise ignored.

``kuratowski_extract`` deletes, in ascending edge-id order, every edge whose
removal keeps the graph nonplanar.  Once an edge's removal would make the
current graph planar that stays true for every subgraph, so a single pass
yields an edge-minimal nonplanar subgraph, necessarily a subdivision of one
of the two minimal nonplanar graphs (5-clique or 3,3-biclique).
"""

from __future__ import annotations

import networkx as nx

from ..errors import PreconditionViolated
from .model import Graph


def planarity_test(g: Graph) -> bool:
    simple = nx.Graph()
    simple.add_nodes_from(g.vertex_ids)
    for e in g.edges:
        if e.u != e.v:
            simple.add_edge(e.u, e.v)
    ok, _ = nx.check_planarity(simple)
    return bool(ok)


def kuratowski_extract(g: Graph) -> Graph:
    """An edge-minimal nonplanar subgraph of a nonplanar graph.

    Edge ids are preserved; vertices not touching a surviving edge are
    dropped.  Raises PreconditionViolated on planar input.
    """
    if planarity_test(g):
        raise PreconditionViolated("graph is planar; nothing to extract")
    keep = set(g.edge_ids)
    for eid in g.edge_ids:
        trial = keep - {eid}
        if not planarity_test(g.edge_subgraph(trial)):
            keep = trial
    return g.edge_subgraph(keep)


def classify_kuratowski(g: Graph) -> str:
    """Which minimal nonplanar graph an edge-minimal nonplanar one subdivides:
    'k5' (five branch vertices of degree 4) or 'k33' (six of degree 3)."""
    degrees = sorted(
        sum(1 for e in g.edges if v in (e.u, e.v)) for v in g.vertex_ids
    )
    branch = [d for d in degrees if d >= 3]
    if branch == [4] * 5:
        return "k5"
    if branch == [3] * 6:
        return "k33"
    raise PreconditionViolated("graph is not an edge-minimal nonplanar subdivision")
