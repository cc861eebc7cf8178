"""Constrained subgraph embedding.

An embedding of a pattern graph into a host is an injective vertex map plus
an injective edge map, preserving endpoints (orientation included when the
host is directed), vertex colors, and edge colors.  Each pattern edge may
additionally be restricted to a caller-supplied set of allowed host edges;
the pattern's edge list order fixes which restriction applies to which edge.
Loops must map to loops, and parallel pattern edges consume distinct parallel
host edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import PreconditionViolated
from .model import Edge, Graph


@dataclass(frozen=True)
class Embedding:
    vertex_map: dict[int, int]
    edge_map: dict[int, int]


def _edge_order(pattern: Graph) -> list[int]:
    """Process order: most-connected-first, deterministic."""
    remaining = list(range(len(pattern.edges)))
    placed_vertices: set[int] = set()
    order: list[int] = []
    while remaining:
        def score(idx: int) -> tuple:
            e = pattern.edges[idx]
            touched = (e.u in placed_vertices) + (e.v in placed_vertices)
            return (-touched, idx)

        nxt = min(remaining, key=score)
        remaining.remove(nxt)
        order.append(nxt)
        e = pattern.edges[nxt]
        placed_vertices.update((e.u, e.v))
    return order


def embed_constrained(
    pattern: Graph,
    host: Graph,
    allowed: Sequence[frozenset[int] | set[int]],
) -> Embedding | None:
    """Find one embedding, or None.

    ``allowed[j]`` lists the host edge ids permitted for the j-th pattern
    edge, in pattern edge-list order.  Directedness of pattern and host must
    agree.
    """
    if pattern.directed != host.directed:
        raise PreconditionViolated("pattern and host directedness differ")
    if len(allowed) != len(pattern.edges):
        raise PreconditionViolated(
            f"need {len(pattern.edges)} allowed sets, got {len(allowed)}"
        )
    allowed_sets = [frozenset(a) for a in allowed]
    host_edges = host.edge_by_id
    by_vertex = host.incident_edges
    order = _edge_order(pattern)
    vmap: dict[int, int] = {}
    used_vertices: set[int] = set()
    used_edges: set[int] = set()
    emap: dict[int, int] = {}

    def vertex_ok(pv: int, hv: int) -> bool:
        return pattern.vertex_by_id[pv].color == host.vertex_by_id[hv].color

    def candidate_edges(idx: int) -> list[int]:
        e = pattern.edges[idx]
        pool = allowed_sets[idx]
        if e.u in vmap:
            pool = pool & set(by_vertex.get(vmap[e.u], ()))
        if e.v in vmap:
            pool = pool & set(by_vertex.get(vmap[e.v], ()))
        return sorted(pool - used_edges)

    def feasible_assignments(e: Edge, he: Edge) -> list[list[tuple[int, int]]]:
        """Per feasible orientation, the new vertex assignments forcing e onto he.

        Both orientations of an undirected host edge can be locally feasible
        while only one extends to a full embedding, so every one is returned
        for the backtracking loop to try.
        """
        if he.color != e.color:
            return []
        orientations = [(he.u, he.v)]
        if not host.directed and he.u != he.v:
            orientations.append((he.v, he.u))
        if e.u == e.v:  # pattern loop needs a host loop
            if he.u != he.v:
                return []
            orientations = [(he.u, he.u)]
        out: list[list[tuple[int, int]]] = []
        for hu, hv in orientations:
            new: list[tuple[int, int]] = []
            ok = True
            for pv, hv_img in ((e.u, hu), (e.v, hv)):
                if pv in vmap:
                    if vmap[pv] != hv_img:
                        ok = False
                        break
                elif any(p == pv for p, _ in new):
                    if next(h for p, h in new if p == pv) != hv_img:
                        ok = False
                        break
                else:
                    if hv_img in used_vertices or not vertex_ok(pv, hv_img):
                        ok = False
                        break
                    new.append((pv, hv_img))
            if ok:
                images = [h for _, h in new]
                if len(set(images)) == len(images) and new not in out:
                    out.append(new)
        return out

    def place(k: int) -> bool:
        if k == len(order):
            return finish_isolated()
        idx = order[k]
        e = pattern.edges[idx]
        for hid in candidate_edges(idx):
            he = host_edges[hid]
            for new in feasible_assignments(e, he):
                for pv, hv in new:
                    vmap[pv] = hv
                    used_vertices.add(hv)
                used_edges.add(hid)
                emap[e.id] = hid
                if place(k + 1):
                    return True
                del emap[e.id]
                used_edges.discard(hid)
                for pv, hv in new:
                    del vmap[pv]
                    used_vertices.discard(hv)
        return False

    def finish_isolated() -> bool:
        lonely = [v.id for v in pattern.vertices if v.id not in vmap]
        free = [v for v in host.vertex_ids if v not in used_vertices]
        chosen: list[tuple[int, int]] = []
        for pv in lonely:
            image = next((hv for hv in free if vertex_ok(pv, hv)), None)
            if image is None:
                return False
            free.remove(image)
            chosen.append((pv, image))
        for pv, hv in chosen:
            vmap[pv] = hv
            used_vertices.add(hv)
        return True

    if place(0):
        return Embedding(vertex_map=dict(vmap), edge_map=dict(emap))
    return None


def embeds_into(pattern: Graph, host: Graph) -> bool:
    """Unconstrained subgraph embedding test."""
    everything = frozenset(host.edge_ids)
    return embed_constrained(pattern, host, [everything] * len(pattern.edges)) is not None
