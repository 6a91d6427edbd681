"""Simple undirected graphs, the matching-union random bipartite model, and the vertex blowup."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    pass


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n_vertices-1``.

    ``bipartition`` is an optional pair ``(side1, side2)``; when present every
    edge must cross it.
    """

    n_vertices: int
    edges: frozenset[Edge] = field(default_factory=frozenset)
    bipartition: tuple[frozenset[int], frozenset[int]] | None = None

    def __post_init__(self) -> None:
        if self.n_vertices < 0:
            raise ValueError("n_vertices must be nonnegative")
        normed = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge ({u}, {v}) out of range")
            normed.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normed))
        if self.bipartition is not None:
            s1, s2 = (frozenset(int(x) for x in s) for s in self.bipartition)
            if s1 & s2 or (s1 | s2) != frozenset(range(self.n_vertices)):
                raise ValueError("bipartition must split the vertex set")
            for u, v in self.edges:
                if (u in s1) == (v in s1):
                    raise ValueError(f"edge ({u}, {v}) does not cross the bipartition")
            object.__setattr__(self, "bipartition", (s1, s2))

    @classmethod
    def from_edges(cls, n: int, edges, bipartite_n1: int | None = None) -> Graph:
        """Build a graph; ``bipartite_n1`` declares vertices ``0..n1-1`` as side 1."""
        bip = None
        if bipartite_n1 is not None:
            bip = (frozenset(range(bipartite_n1)), frozenset(range(bipartite_n1, n)))
        return cls(n, frozenset(_norm_edge(int(u), int(v)) for u, v in edges), bip)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an integer bitmask."""
        return tuple(sum(1 << w for w in a) for a in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def is_independent(self, vertices) -> bool:
        vs = set(vertices)
        return not any(u in vs and v in vs for u, v in self.edges)

    def sides(self) -> tuple[list[int], list[int]]:
        if self.bipartition is None:
            raise ValueError("graph has no bipartition")
        return sorted(self.bipartition[0]), sorted(self.bipartition[1])

    def without_vertex(self, v: int) -> Graph:
        """Delete ``v`` and relabel the remaining vertices in order."""
        relabel = {u: (u if u < v else u - 1) for u in range(self.n_vertices) if u != v}
        edges = [(relabel[a], relabel[b]) for a, b in self.edges if v not in (a, b)]
        bip = None
        if self.bipartition is not None:
            bip = tuple(frozenset(relabel[x] for x in s if x != v) for s in self.bipartition)
        return Graph(self.n_vertices - 1, frozenset(edges), bip)


def generate_bipartite_regular(n: int, delta: int, seed: int) -> Graph:
    """Union of ``delta`` uniform perfect matchings between sides ``0..n-1`` and ``n..2n-1``.

    Multi-edges are collapsed, so degrees are at most ``delta``.
    """
    if n < 1 or delta < 1:
        raise ValueError("need n >= 1 and delta >= 1")
    rng = np.random.default_rng(np.uint64(seed))
    edges = set()
    for _ in range(delta):
        perm = rng.permutation(n)
        edges.update((i, n + int(perm[i])) for i in range(n))
    return Graph.from_edges(2 * n, edges, bipartite_n1=n)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the n(n-1)/2 pairs is an edge independently with probability p."""
    if n < 0 or not 0 <= p <= 1:
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = np.random.default_rng(np.uint64(seed))
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(iu.size) < p
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def blowup(g: Graph, k: int) -> Graph:
    """Replace each vertex by ``k`` non-adjacent copies and each edge by K_{k,k}.

    Copy ``j`` of vertex ``v`` is vertex ``v*k + j``.
    """
    if k < 2:
        raise ValueError("blowup factor must be at least 2")
    edges = [
        (u * k + i, v * k + j) for u, v in g.edges for i in range(k) for j in range(k)
    ]
    bip = None
    if g.bipartition is not None:
        bip = tuple(frozenset(v * k + j for v in side for j in range(k)) for side in g.bipartition)
    return Graph(g.n_vertices * k, frozenset(_norm_edge(a, b) for a, b in edges), bip)


def format_edge_list(g: Graph) -> str:
    header = f"n {g.n_vertices}"
    if g.bipartition is not None:
        s1, _ = g.bipartition
        if s1 != frozenset(range(len(s1))):
            raise GraphFormatError("edge-list format needs side 1 to be vertices 0..n1-1")
        header += f" bipartite {len(s1)}"
    lines = [header] + [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count> [bipartite <n1>]`` followed by ``u v`` lines (``#`` comments allowed)."""
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or rows[0][0] != "n":
        raise GraphFormatError("missing header line 'n <count> [bipartite <n1>]'")
    head = rows[0]
    try:
        n = int(head[1])
        n1 = None
        if len(head) == 4 and head[2] == "bipartite":
            n1 = int(head[3])
        elif len(head) != 2:
            raise GraphFormatError(f"bad header: {' '.join(head)}")
        edges = []
        for r in rows[1:]:
            if len(r) != 2:
                raise GraphFormatError(f"bad edge line: {' '.join(r)}")
            edges.append((int(r[0]), int(r[1])))
    except (ValueError, IndexError) as exc:
        if isinstance(exc, GraphFormatError):
            raise
        raise GraphFormatError(str(exc)) from exc
    if n1 is not None and not 0 <= n1 <= n:
        raise GraphFormatError("bipartite side size out of range")
    try:
        return Graph.from_edges(n, edges, bipartite_n1=n1)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def save_graph(g: Graph, path) -> None:
    Path(path).write_text(format_edge_list(g))


def load_graph(path) -> Graph:
    return parse_edge_list(Path(path).read_text())

