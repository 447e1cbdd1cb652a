"""Canonical labelling by individualisation and refinement.

The search tree is the usual one: refine the ordered partition to an
equitable one, branch on the first largest non-singleton cell, and score
each discrete leaf by the bit string of the relabelled upper-triangle
adjacency matrix (graph6 column order).  The least string wins.  Leaves that
tie with the current best yield automorphisms, which are used twice: to skip
children lying in an orbit already explored, and to abandon a subtree as
soon as it is known to be an image of one already searched.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from hereditary.graph import Graph


def refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Each cell is split by the vector of neighbour counts into every current
    cell; sub-cells keep their parent's position and are ordered by that
    vector, so the result does not depend on vertex names.
    """
    cells = [c for c in cells]
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple((adj[v] & m).bit_count() for m in masks) for v in c}
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                out.extend(groups[k] for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def unit_refinement(g: Graph) -> list[list[int]]:
    """Equitable refinement of the one-cell partition of ``g``."""
    if g.n == 0:
        return []
    return refine(g.adj, [list(range(g.n))])


def _leaf_key(adj: tuple[int, ...], lab: list[int]) -> int:
    key = 0
    for j in range(1, len(lab)):
        row = adj[lab[j]]
        for i in range(j):
            key = (key << 1) | (row >> lab[i] & 1)
    return key


class _Search:
    def __init__(self, adj: tuple[int, ...]) -> None:
        self.adj = adj
        self.best_key: int | None = None
        self.best_lab: list[int] = []
        self.best_path: list[int] = []
        self.autos: list[list[int]] = []

    def run(self, cells: list[list[int]], path: list[int]) -> int | None:
        """Explore a node; return a depth to unwind to, or None when done."""
        cells = refine(self.adj, cells)
        if all(len(c) == 1 for c in cells):
            return self._leaf([c[0] for c in cells], path)

        target = max(range(len(cells)), key=lambda i: (len(cells[i]), -i))
        cell = cells[target]
        depth = len(path)
        explored: list[int] = []
        for v in sorted(cell):
            if explored and self._same_orbit(v, explored, path):
                continue
            explored.append(v)
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            back = self.run(child, path + [v])
            if back is not None and back < depth:
                return back
        return None

    def _leaf(self, lab: list[int], path: list[int]) -> int | None:
        key = _leaf_key(self.adj, lab)
        if self.best_key is None or key < self.best_key:
            self.best_key, self.best_lab, self.best_path = key, lab, path
            return None
        if key == self.best_key:
            gamma = [0] * len(lab)
            for a, b in zip(self.best_lab, lab):
                gamma[a] = b
            self.autos.append(gamma)
            # this subtree is the image of one already searched
            common = 0
            for a, b in zip(self.best_path, path):
                if a != b:
                    break
                common += 1
            return common
        return None

    def _same_orbit(self, v: int, explored: list[int], fixed: list[int]) -> bool:
        usable = [g for g in self.autos if all(g[u] == u for u in fixed)]
        if not usable:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in usable:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(u in orbit for u in explored)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Return ``lab`` with ``lab[position] = vertex`` for the canonical form."""
    if g.n == 0:
        return ()
    search = _Search(g.adj)
    search.run([list(range(g.n))], [])
    return tuple(search.best_lab)


def code_from_labeling(g: Graph, lab: tuple[int, ...]) -> bytes:
    n = g.n
    nbits = n * (n - 1) // 2
    key = _leaf_key(g.adj, list(lab))
    return bytes([n]) + key.to_bytes((nbits + 7) // 8, "big")

