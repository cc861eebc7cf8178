"""Finite graph model.

Graphs are optionally directed, with integer vertex ids, optional integer
colors on vertices and edges, and integer edge ids that survive every
subgraph operation (deletion never renumbers).  Loops and parallel edges are
allowed.  The JSON form is::

    {"directed": false,
     "vertices": [{"id": 0}, {"id": 1, "color": 2}],
     "edges": [{"id": 0, "u": 0, "v": 1}]}

Edge-set files are JSON arrays of edge ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from ..errors import ParseError


@dataclass(frozen=True)
class Vertex:
    id: int
    color: int | None = None


@dataclass(frozen=True)
class Edge:
    id: int
    u: int
    v: int
    color: int | None = None


@dataclass(frozen=True)
class Graph:
    directed: bool
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        vids = [v.id for v in self.vertices]
        if len(set(vids)) != len(vids):
            raise ValueError("duplicate vertex ids")
        eids = [e.id for e in self.edges]
        if len(set(eids)) != len(eids):
            raise ValueError("duplicate edge ids")
        vset = set(vids)
        for e in self.edges:
            if e.u not in vset or e.v not in vset:
                raise ValueError(f"edge {e.id} has unknown endpoint")

    @classmethod
    def build(cls, vertices: Iterable, edges: Iterable, directed: bool = False) -> "Graph":
        """Convenience factory: vertices as ids or (id, color) pairs, edges as
        (id, u, v) or (id, u, v, color) tuples."""
        vs = tuple(
            v if isinstance(v, Vertex) else Vertex(*v) if isinstance(v, tuple) else Vertex(v)
            for v in vertices
        )
        es = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)
        return cls(directed=directed, vertices=vs, edges=es)

    @cached_property
    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(sorted(v.id for v in self.vertices))

    @cached_property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(sorted(e.id for e in self.edges))

    @cached_property
    def vertex_by_id(self) -> dict[int, Vertex]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def edge_by_id(self) -> dict[int, Edge]:
        return {e.id: e for e in self.edges}

    def endpoint_pair(self, edge: Edge) -> tuple[int, int]:
        """Endpoints as an ordered pair; sorted when undirected."""
        if self.directed:
            return (edge.u, edge.v)
        return (edge.u, edge.v) if edge.u <= edge.v else (edge.v, edge.u)

    @cached_property
    def parallel_classes(self) -> dict[tuple, tuple[int, ...]]:
        """Edge ids grouped by (endpoint pair, color), each group sorted."""
        classes: dict[tuple, list[int]] = {}
        for e in self.edges:
            classes.setdefault((self.endpoint_pair(e), e.color), []).append(e.id)
        return {key: tuple(sorted(ids)) for key, ids in classes.items()}

    @cached_property
    def incident_edges(self) -> dict[int, tuple[int, ...]]:
        inc: dict[int, list[int]] = {v.id: [] for v in self.vertices}
        for e in self.edges:
            inc[e.u].append(e.id)
            if e.v != e.u:
                inc[e.v].append(e.id)
        return {v: tuple(sorted(ids)) for v, ids in inc.items()}

    def delete_edges(self, edge_ids: Iterable[int]) -> "Graph":
        """Remove the given edges, keeping every vertex."""
        drop = set(edge_ids)
        return Graph(
            directed=self.directed,
            vertices=self.vertices,
            edges=tuple(e for e in self.edges if e.id not in drop),
        )

    def edge_subgraph(self, edge_ids: Iterable[int]) -> "Graph":
        """The subgraph of the given edges and their endpoints only."""
        keep = set(edge_ids)
        edges = tuple(e for e in self.edges if e.id in keep)
        touched = {e.u for e in edges} | {e.v for e in edges}
        return Graph(
            directed=self.directed,
            vertices=tuple(v for v in self.vertices if v.id in touched),
            edges=edges,
        )


def graph_to_json(g: Graph) -> dict:
    def vert(v: Vertex) -> dict:
        d = {"id": v.id}
        if v.color is not None:
            d["color"] = v.color
        return d

    def edge(e: Edge) -> dict:
        d = {"id": e.id, "u": e.u, "v": e.v}
        if e.color is not None:
            d["color"] = e.color
        return d

    return {
        "directed": g.directed,
        "vertices": [vert(v) for v in g.vertices],
        "edges": [edge(e) for e in g.edges],
    }


def graph_from_json(data: dict) -> Graph:
    try:
        vertices = tuple(Vertex(id=v["id"], color=v.get("color")) for v in data["vertices"])
        edges = tuple(
            Edge(id=e["id"], u=e["u"], v=e["v"], color=e.get("color")) for e in data["edges"]
        )
        return Graph(directed=bool(data.get("directed", False)), vertices=vertices, edges=edges)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph object: {exc}") from exc


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    return graph_from_json(data)


def load_edge_set(path: str) -> frozenset[int]:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise ParseError(f"{path} must be a JSON array of integer ids")
    return frozenset(data)
