"""Stock graph builders used by tests, the CLI, and the ring family.

All builders produce undirected, uncolored graphs with vertex ids 0..n-1 and
edge ids 0..m-1 in a fixed documented order, so frozen expectations elsewhere
can name edges by id.
"""

from __future__ import annotations

from itertools import combinations

from .model import Edge, Graph, Vertex


def complete_graph(n: int) -> Graph:
    """K_n; edge ids enumerate vertex pairs in lexicographic order."""
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    pairs = list(combinations(range(n), 2))
    return Graph.build(
        vertices=[(v, None) for v in range(n)],
        edges=[(i, u, v, None) for i, (u, v) in enumerate(pairs)],
    )


def cycle_graph(n: int) -> Graph:
    """C_n for n >= 3; edge i joins i and i+1 mod n."""
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return Graph.build(
        vertices=[(v, None) for v in range(n)],
        edges=[(i, i, (i + 1) % n, None) for i in range(n)],
    )


def path_graph(n: int) -> Graph:
    """P_n on n vertices; edge i joins i and i+1."""
    if n < 1:
        raise ValueError("path_graph needs n >= 1")
    return Graph.build(
        vertices=[(v, None) for v in range(n)],
        edges=[(i, i, i + 1, None) for i in range(n - 1)],
    )


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}; left part 0..a-1, right part a..a+b-1, edge id = i*b + j."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs both parts nonempty")
    return Graph.build(
        vertices=[(v, None) for v in range(a + b)],
        edges=[(i * b + j, i, a + j, None) for i in range(a) for j in range(b)],
    )


def triangle() -> Graph:
    return complete_graph(3)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union; h's vertex and edge ids are shifted past g's maxima."""
    if g.directed != h.directed:
        raise ValueError("cannot union directed with undirected")
    voff = max(g.vertex_ids, default=-1) + 1
    eoff = max(g.edge_ids, default=-1) + 1
    return Graph(
        directed=g.directed,
        vertices=tuple(g.vertices)
        + tuple(Vertex(v.id + voff, v.color) for v in h.vertices),
        edges=tuple(g.edges)
        + tuple(Edge(e.id + eoff, e.u + voff, e.v + voff, e.color) for e in h.edges),
    )


def subdivided_k5_ring(n: int) -> tuple[Graph, frozenset[int]]:
    """A ring of n interleaved K5 subdivisions sharing one long cycle.

    Take a 5-cycle of K5 and subdivide each of its edges into n parts,
    giving a cycle on the 5n vertices 0..5n-1 (cycle edge j joins j and
    j+1 mod 5n).  Then lay down n rotated copies of the five pentagram
    diagonals: copy i (0 <= i < n) joins j*n+i to ((j+2)%5)*n+i for
    j = 0..4, with edge id 5n + 5i + j.  Total 10n edges.

    Copy i's diagonals together with the long cycle form a K5 subdivision
    on branch vertices {i, n+i, 2n+i, 3n+i, 4n+i}, so the graph is
    nonplanar for every n, while rotation by one cycle step is an
    automorphism carrying copy i to copy i+1.

    Also returns the five designated cycle edges {0, n, 2n, 3n, 4n}
    (every n-th edge along the cycle); deleting them leaves a planar
    graph.
    """
    if n < 1:
        raise ValueError("subdivided_k5_ring needs n >= 1")
    m = 5 * n
    cycle = [(j, j, (j + 1) % m, None) for j in range(m)]
    diagonals = [
        (m + 5 * i + j, j * n + i, ((j + 2) % 5) * n + i, None)
        for i in range(n)
        for j in range(5)
    ]
    g = Graph.build(
        vertices=[(v, None) for v in range(m)],
        edges=cycle + diagonals,
    )
    designated = frozenset(j * n for j in range(5))
    return g, designated


def ring_rotation(n: int) -> dict[int, int]:
    """The one-step rotation automorphism of subdivided_k5_ring(n)."""
    m = 5 * n
    return {v: (v + 1) % m for v in range(m)}
