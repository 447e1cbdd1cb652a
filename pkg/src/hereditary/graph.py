"""Immutable small simple graphs stored as per-vertex neighbour bitsets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64


class CapacityError(ValueError):
    """Raised when a graph exceeds the supported vertex count."""


def bits_of(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an integer bitset of the neighbours of ``v``.  Equality is
    labelled equality; use :meth:`is_isomorphic` or :attr:`canonical_code`
    to compare isomorphism types.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"graph has {self.n} vertices; at most {MAX_VERTICES} supported")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits_of(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # construction

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"graph has {n} vertices; at most {MAX_VERTICES} supported")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_graph6(cls, text: str) -> Graph:
        from hereditary.graph6 import parse_graph6

        return parse_graph6(text)

    # accessors

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for graph on {self.n} vertices")

    def neighborhood(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(bits_of(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits_of(self.adj[v] & ((1 << v) - 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    # derived graphs

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Return ``G:X``, relabelled ``0..|X|-1`` in ascending original order."""
        xs = sorted(set(vertices))
        for v in xs:
            self._check_vertex(v)
        return self._induced(xs)

    def induced_by_mask(self, mask: int) -> Graph:
        if mask & ~self.vertex_mask:
            raise IndexError("vertex mask out of range")
        return self._induced(list(bits_of(mask)))

    def _induced(self, xs: list[int]) -> Graph:
        pos = {v: i for i, v in enumerate(xs)}
        rows = []
        for v in xs:
            r = 0
            for u in bits_of(self.adj[v]):
                i = pos.get(u)
                if i is not None:
                    r |= 1 << i
            rows.append(r)
        return Graph(len(xs), tuple(rows))

    def delete_vertex(self, v: int) -> Graph:
        self._check_vertex(v)
        return self.induced_by_mask(self.vertex_mask & ~(1 << v))

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("relabelling is not a permutation of the vertices")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            rows[p[v]] = mask_of(p[u] for u in bits_of(row))
        return Graph(self.n, tuple(rows))

    def add_vertex(self, neighbours: int) -> Graph:
        """Append vertex ``n`` adjacent to the vertices in bitset ``neighbours``."""
        if neighbours & ~self.vertex_mask:
            raise IndexError("neighbour mask out of range")
        v = self.n
        rows = [row | ((neighbours >> u & 1) << v) for u, row in enumerate(self.adj)]
        rows.append(neighbours)
        return Graph(v + 1, tuple(rows))

    def is_connected_mask(self, mask: int) -> bool:
        """True when ``G:mask`` is connected (the empty set counts as connected)."""
        if not mask:
            return True
        seen = mask & -mask
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= self.adj[v]
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        return seen == mask

    # isomorphism

    @cached_property
    def canonical_labeling(self) -> tuple[int, ...]:
        from hereditary.canon import canonical_labeling

        return canonical_labeling(self)

    @cached_property
    def canonical_code(self) -> bytes:
        from hereditary.canon import code_from_labeling

        return code_from_labeling(self, self.canonical_labeling)

    def canonical_form(self) -> Graph:
        lab = self.canonical_labeling
        perm = [0] * self.n
        for position, v in enumerate(lab):
            perm[v] = position
        return self.relabel(perm)

    def is_isomorphic(self, other: Graph) -> bool:
        if self.n != other.n or self.num_edges != other.num_edges:
            return False
        if sorted(self.degrees()) != sorted(other.degrees()):
            return False
        return self.canonical_code == other.canonical_code

    def to_graph6(self) -> str:
        from hereditary.graph6 import to_graph6

        return to_graph6(self)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighborhood(v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    return g.induced_subgraph(vertices)


def complement(g: Graph) -> Graph:
    return g.complement()


def canonical_code(g: Graph) -> bytes:
    return g.canonical_code


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.is_isomorphic(h)


# named families


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (``P4`` has four vertices and three edges)."""
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
