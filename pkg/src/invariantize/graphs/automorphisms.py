"""Graph automorphisms by partition refinement plus backtracking.

A vertex permutation is an automorphism when it preserves vertex colors and,
for every vertex pair, the multiset of (color, direction) of edges between
the pair, which covers direction, edge colors, loops, and parallel
multiplicities.  Parallel edges of equal color are interchangeable, so a
vertex permutation induces a canonical edge permutation by matching parallel
classes in ascending id order.

``automorphism_group`` returns generators found along a stabilizer chain over
the sorted vertex list: for each level k it searches, for every candidate
image w, one automorphism fixing the first k vertices and sending vertex k to
w.  The found coset representatives generate the full group and the product
of the per-level orbit sizes is its exact order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ..errors import CapExceeded, InvariantViolation
from .model import Graph

DEFAULT_NODE_CAP = 2_000_000


@dataclass(frozen=True)
class AutomorphismGroup:
    """Vertex-permutation generators over ``domain`` (sorted vertex ids)."""

    domain: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    order: int

    def as_mappings(self) -> list[dict[int, int]]:
        return [dict(zip(self.domain, images)) for images in self.generators]


def _pair_profile(g: Graph) -> dict[tuple[int, int], Counter]:
    """For every ordered pair (undirected: sorted pair) the multiset of
    (color, direction tag) of edges between them."""
    prof: dict[tuple[int, int], Counter] = {}
    for e in g.edges:
        if g.directed:
            key, tag = (e.u, e.v), 1
        else:
            key, tag = ((e.u, e.v) if e.u <= e.v else (e.v, e.u)), 0
        prof.setdefault(key, Counter())[(e.color, tag)] += 1
    return prof


def _color_key(color: int | None) -> tuple[bool, int]:
    # optional colors sort with None first; keeps mixed None/int sortable
    return (color is not None, 0 if color is None else color)


def refinement_labels(g: Graph) -> dict[int, int]:
    """Stable vertex labels: equal labels are necessary for orbit equivalence."""
    labels = {}
    for v in g.vertices:
        loops = tuple(sorted(_color_key(e.color) for e in g.edges if e.u == e.v == v.id))
        labels[v.id] = (_color_key(v.color), loops, len(g.incident_edges[v.id]))
    labels = _densify(labels)
    while True:
        signatures = {}
        for v in g.vertex_ids:
            neigh = []
            for eid in g.incident_edges[v]:
                e = g.edge_by_id[eid]
                if e.u == e.v:
                    continue
                other = e.v if e.u == v else e.u
                out = e.u == v
                tag = (1 if out else 2) if g.directed else 0
                neigh.append((_color_key(e.color), tag, labels[other]))
            signatures[v] = (labels[v], tuple(sorted(neigh)))
        refined = _densify(signatures)
        if refined == labels:
            return labels
        labels = refined


def _densify(raw: Mapping[int, object]) -> dict[int, int]:
    distinct = sorted(set(raw.values()), key=repr)
    index = {sig: i for i, sig in enumerate(distinct)}
    return {v: index[sig] for v, sig in raw.items()}


class _Search:
    def __init__(self, g: Graph, cap: int):
        self.g = g
        self.domain = g.vertex_ids
        self.labels = refinement_labels(g)
        self.pairs = _pair_profile(g)
        self.cap = cap
        self.nodes = 0

    def _pair(self, a: int, b: int) -> Counter:
        if not self.g.directed and a > b:
            a, b = b, a
        return self.pairs.get((a, b), _EMPTY)

    def consistent(self, assigned: dict[int, int], v: int, w: int) -> bool:
        if self.labels[v] != self.labels[w]:
            return False
        if self._pair(v, v) != self._pair(w, w):
            return False
        for src, dst in assigned.items():
            if self._pair(v, src) != self._pair(w, dst):
                return False
            if self.g.directed and self._pair(src, v) != self._pair(dst, w):
                return False
        return True

    def extend(self, assigned: dict[int, int]) -> dict[int, int] | None:
        """Complete a partial vertex map to a full automorphism, or None."""
        self.nodes += 1
        if self.nodes > self.cap:
            raise CapExceeded(f"automorphism search exceeded {self.cap} nodes")
        if len(assigned) == len(self.domain):
            return dict(assigned)
        used = set(assigned.values())
        best_v, best_cands = None, None
        for v in self.domain:
            if v in assigned:
                continue
            cands = [
                w
                for w in self.domain
                if w not in used and self.consistent(assigned, v, w)
            ]
            if best_cands is None or len(cands) < len(best_cands):
                best_v, best_cands = v, cands
                if not cands:
                    return None
        for w in best_cands:
            assigned[best_v] = w
            found = self.extend(assigned)
            if found is not None:
                return found
            del assigned[best_v]
        return None


_EMPTY = Counter()


def automorphism_group(g: Graph, cap: int = DEFAULT_NODE_CAP) -> AutomorphismGroup:
    """Generators and exact order of the vertex automorphism group."""
    domain = g.vertex_ids
    if not domain:
        return AutomorphismGroup(domain=(), generators=(), order=1)
    search = _Search(g, cap)
    generators: list[tuple[int, ...]] = []
    order = 1
    for level, base in enumerate(domain):
        prefix = {v: v for v in domain[:level]}
        orbit = 1
        for w in domain:
            if w == base or w in prefix:
                continue
            assigned = dict(prefix)
            if not search.consistent(assigned, base, w):
                continue
            assigned[base] = w
            found = search.extend(assigned)
            if found is not None:
                orbit += 1
                generators.append(tuple(found[v] for v in domain))
        order *= orbit
    for images in generators:
        if not is_automorphism(g, dict(zip(domain, images))):
            raise InvariantViolation("search produced a non-automorphism")
    return AutomorphismGroup(domain=domain, generators=tuple(sorted(set(generators))), order=order)


def is_automorphism(g: Graph, vmap: Mapping[int, int]) -> bool:
    """Full check that a vertex map preserves colors and all pair profiles."""
    domain = g.vertex_ids
    if sorted(vmap) != list(domain) or sorted(vmap.values()) != list(domain):
        return False
    for v in domain:
        if g.vertex_by_id[v].color != g.vertex_by_id[vmap[v]].color:
            return False
    # image pairs are distinct, so matching every edged pair's profile onto its
    # image accounts for all edges on both sides
    prof = _pair_profile(g)
    for (a, b), counter in prof.items():
        ia, ib = vmap[a], vmap[b]
        if not g.directed and ia > ib:
            ia, ib = ib, ia
        if prof.get((ia, ib), _EMPTY) != counter:
            return False
    return True


def edge_action(g: Graph, vmap: Mapping[int, int]) -> dict[int, int]:
    """The canonical edge permutation induced by a vertex automorphism.

    Edges of one parallel class (same endpoints, same color) map onto the
    image class in ascending id order.
    """
    classes = g.parallel_classes
    action: dict[int, int] = {}
    for (pair, color), ids in classes.items():
        iu, iv = vmap[pair[0]], vmap[pair[1]]
        if not g.directed and iu > iv:
            iu, iv = iv, iu
        image_ids = classes.get(((iu, iv), color))
        if image_ids is None or len(image_ids) != len(ids):
            raise InvariantViolation("vertex map does not act on edges")
        for eid, image in zip(ids, image_ids):
            action[eid] = image
    return action


def parallel_swap_maps(g: Graph) -> list[dict[int, int]]:
    """Edge transpositions within each class of interchangeable parallels."""
    identity = {e.id: e.id for e in g.edges}
    swaps = []
    for ids in g.parallel_classes.values():
        for a, b in zip(ids, ids[1:]):
            swap = dict(identity)
            swap[a], swap[b] = b, a
            swaps.append(swap)
    return swaps


def symmetry_edge_maps(g: Graph, aut: AutomorphismGroup | None = None, cap: int = DEFAULT_NODE_CAP) -> list[dict[int, int]]:
    """Edge-id maps generating the full symmetry action on edge sets:
    canonical actions of the vertex generators plus parallel-class swaps."""
    if aut is None:
        aut = automorphism_group(g, cap)
    identity = {e.id: e.id for e in g.edges}
    seen = {}
    for vmap in aut.as_mappings():
        m = edge_action(g, vmap)
        if m != identity:
            seen[tuple(sorted(m.items()))] = m
    for m in parallel_swap_maps(g):
        seen[tuple(sorted(m.items()))] = m
    return [seen[k] for k in sorted(seen)]


def edge_orbits(g: Graph, gens: Iterable[Mapping[int, int]] | AutomorphismGroup) -> list[frozenset[int]]:
    """Orbit partition of the induced action on edge ids."""
    if isinstance(gens, AutomorphismGroup):
        maps = [edge_action(g, vmap) for vmap in gens.as_mappings()]
    else:
        maps = [edge_action(g, vmap) for vmap in gens]
    parent = {eid: eid for eid in g.edge_ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in maps:
        for a, b in m.items():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    orbits: dict[int, set[int]] = {}
    for eid in g.edge_ids:
        orbits.setdefault(find(eid), set()).add(eid)
    return sorted((frozenset(o) for o in orbits.values()), key=lambda o: min(o))
