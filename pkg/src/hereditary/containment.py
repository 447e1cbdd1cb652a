"""Deciders, with witnesses, for five containment orders on graphs.

* ``SUBGRAPH``: an injective map sending pattern edges to host edges.
* ``INDUCED``: as above, and pattern non-edges go to host non-edges.
* ``TOPOLOGICAL_SUBGRAPH``: a subdivision of the pattern is a subgraph.
* ``TOPOLOGICAL_INDUCED``: a subdivision of the pattern is an induced subgraph.
* ``MINOR``: disjoint connected branch sets, adjacent wherever the pattern is.

All searches are plain backtracking.  Pattern vertices are placed most
constrained first; host candidates are tried by descending degree, then
ascending index, and the first witness found is returned, so results are
deterministic.  Running time is exponential; hosts beyond a dozen or so
vertices are not the intended use.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator

from hereditary.graph import Graph, bits_of, complete, complete_bipartite


class OrderKind(str, enum.Enum):
    SUBGRAPH = "sub"
    TOPOLOGICAL_SUBGRAPH = "top"
    MINOR = "minor"
    INDUCED = "ind"
    TOPOLOGICAL_INDUCED = "topind"


@dataclass(frozen=True)
class Witness:
    """An embedding of a pattern in a host.

    ``vertex_map`` sends pattern vertices to host vertices (for minors, to a
    representative of the branch set).  ``path_routes`` maps each pattern
    edge ``(x, y)`` with ``x < y`` to the host path from ``vertex_map[x]`` to
    ``vertex_map[y]``, endpoints included; it is filled for the topological
    kinds.  ``branch_sets`` is filled for minors.
    """

    kind: OrderKind
    vertex_map: dict[int, int]
    path_routes: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)
    branch_sets: dict[int, frozenset[int]] = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict = {
            "kind": self.kind.value,
            "vertex_map": {str(x): v for x, v in sorted(self.vertex_map.items())},
        }
        if self.path_routes:
            out["path_routes"] = {f"{x}-{y}": list(p) for (x, y), p in sorted(self.path_routes.items())}
        if self.branch_sets:
            out["branch_sets"] = {str(x): sorted(s) for x, s in sorted(self.branch_sets.items())}
        return out

    @classmethod
    def from_json(cls, data: dict) -> Witness:
        routes = {}
        for key, p in data.get("path_routes", {}).items():
            x, y = key.split("-")
            routes[(int(x), int(y))] = tuple(p)
        return cls(
            OrderKind(data["kind"]),
            {int(x): int(v) for x, v in data["vertex_map"].items()},
            routes,
            {int(x): frozenset(s) for x, s in data.get("branch_sets", {}).items()},
        )


def _pattern_order(pattern: Graph) -> list[int]:
    """Most constrained first: most already-placed neighbours, then degree, then index."""
    deg = pattern.degrees()
    order: list[int] = []
    placed = 0
    remaining = set(range(pattern.n))
    while remaining:
        x = min(remaining, key=lambda v: (-(pattern.adj[v] & placed).bit_count(), -deg[v], v))
        order.append(x)
        placed |= 1 << x
        remaining.discard(x)
    return order


def _host_order(host: Graph) -> list[int]:
    deg = host.degrees()
    return sorted(range(host.n), key=lambda v: (-deg[v], v))


def _degrees_dominated(host: Graph, pattern: Graph) -> bool:
    hd = sorted(host.degrees(), reverse=True)
    pd = sorted(pattern.degrees(), reverse=True)
    return all(p <= h for p, h in zip(pd, hd))


# subgraph and induced subgraph


def _embed(host: Graph, pattern: Graph, induced: bool) -> dict[int, int] | None:
    order = _pattern_order(pattern)
    hosts = _host_order(host)
    hdeg = host.degrees()
    pdeg = pattern.degrees()
    full = host.vertex_mask
    phi: dict[int, int] = {}

    def rec(k: int, used: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        allowed = full & ~used
        for y, c in phi.items():
            if pattern.adj[x] >> y & 1:
                allowed &= host.adj[c]
            elif induced:
                allowed &= ~host.adj[c]
        if not allowed:
            return False
        for c in hosts:
            if allowed >> c & 1 and hdeg[c] >= pdeg[x]:
                phi[x] = c
                if rec(k + 1, used | 1 << c):
                    return True
                del phi[x]
        return False

    return dict(phi) if rec(0, 0) else None


# topological containment


def _paths(host: Graph, a: int, b: int, free: int) -> list[tuple[int, tuple[int, ...]]]:
    """Simple ``a``-``b`` paths with interior in ``free``, one per interior set, shortest first."""
    found: dict[int, tuple[int, ...]] = {}
    stack = [a]

    def dfs(v: int, interior: int) -> None:
        if host.adj[v] >> b & 1 and v != a:
            found.setdefault(interior, tuple(stack) + (b,))
        for u in bits_of(host.adj[v] & free & ~interior):
            stack.append(u)
            dfs(u, interior | 1 << u)
            stack.pop()

    dfs(a, 0)
    return sorted(found.items(), key=lambda item: (item[0].bit_count(), item[0]))


def _induced_paths(host: Graph, a: int, b: int, free: int, taken: int) -> list[tuple[int, tuple[int, ...]]]:
    """Chordless ``a``-``b`` paths of length at least two whose interior sees nothing
    in ``taken`` except its own path neighbours and ``b``."""
    found: dict[int, tuple[int, ...]] = {}
    stack = [a]
    target = 1 << b

    def dfs(v: int, interior: int) -> None:
        for u in bits_of(host.adj[v] & free & ~interior):
            seen = host.adj[u] & (taken | interior)
            if seen & ~(1 << v) & ~target:
                continue
            stack.append(u)
            if seen & target:
                found.setdefault(interior | 1 << u, tuple(stack) + (b,))
            else:
                dfs(u, interior | 1 << u)
            stack.pop()

    dfs(a, 0)
    return sorted(found.items(), key=lambda item: (item[0].bit_count(), item[0]))


def _topological(host: Graph, pattern: Graph, induced: bool) -> Witness | None:
    order = _pattern_order(pattern)
    hosts = _host_order(host)
    hdeg = host.degrees()
    pdeg = pattern.degrees()
    full = host.vertex_mask
    phi: dict[int, int] = {}
    routes: dict[tuple[int, int], tuple[int, ...]] = {}

    def place(k: int, used: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        nbrs = [y for y in phi if pattern.adj[x] >> y & 1]
        allowed_adj = 0
        for y in nbrs:
            allowed_adj |= 1 << phi[y]
        for c in hosts:
            if used >> c & 1 or hdeg[c] < pdeg[x]:
                continue
            if induced and host.adj[c] & used & ~allowed_adj:
                continue
            phi[x] = c
            if route(k, x, nbrs, 0, used | 1 << c):
                return True
            del phi[x]
        return False

    def route(k: int, x: int, nbrs: list[int], i: int, used: int) -> bool:
        if i == len(nbrs):
            return place(k + 1, used)
        y = nbrs[i]
        a, b = phi[y], phi[x]
        key = (min(x, y), max(x, y))
        if host.adj[a] >> b & 1:
            # a direct edge costs no vertices; when induced it is also forced
            routes[key] = (a, b) if key[0] == y else (b, a)
            if route(k, x, nbrs, i + 1, used):
                return True
            del routes[key]
            return False
        free = full & ~used
        options = _induced_paths(host, a, b, free, used) if induced else _paths(host, a, b, free)
        for interior, p in options:
            routes[key] = p if key[0] == y else tuple(reversed(p))
            if route(k, x, nbrs, i + 1, used | interior):
                return True
            del routes[key]
        return False

    if not place(0, 0):
        return None
    kind = OrderKind.TOPOLOGICAL_INDUCED if induced else OrderKind.TOPOLOGICAL_SUBGRAPH
    return Witness(kind, dict(phi), dict(routes))


# minors


def connected_sets(host: Graph, allowed: int, root: int, max_size: int) -> Iterator[int]:
    """Each connected subset of ``allowed`` whose least vertex is ``root``, exactly once."""
    below = (1 << (root + 1)) - 1
    pool = allowed & ~below

    def grow(s: int, cand: int, excl: int, size: int) -> Iterator[int]:
        yield s
        if size == max_size:
            return
        while cand:
            v = cand & -cand
            cand ^= v
            nxt = cand | (host.adj[v.bit_length() - 1] & pool & ~s & ~excl & ~v)
            yield from grow(s | v, nxt, excl, size + 1)
            excl |= v

    yield from grow(1 << root, host.adj[root] & pool, 0, 1)


def _minor(host: Graph, pattern: Graph) -> Witness | None:
    order = _pattern_order(pattern)
    k_total = len(order)
    full = host.vertex_mask
    branch: dict[int, int] = {}
    reach: dict[int, int] = {}

    def nbr_mask(s: int) -> int:
        m = 0
        for v in bits_of(s):
            m |= host.adj[v]
        return m & ~s

    def rec(k: int, used: int) -> bool:
        if k == k_total:
            return True
        x = order[k]
        free = full & ~used
        spare = free.bit_count() - (k_total - k - 1)
        if spare < 1:
            return False
        need = [reach[y] for y in branch if pattern.adj[x] >> y & 1]
        pending = any(pattern.adj[x] >> y & 1 and y not in branch for y in range(pattern.n))
        for root in bits_of(free):
            for s in connected_sets(host, free, root, spare):
                if any(not (s & r) for r in need):
                    continue
                out = nbr_mask(s)
                if pending and not out & free & ~s:
                    continue
                branch[x], reach[x] = s, out
                if rec(k + 1, used | s):
                    return True
                del branch[x], reach[x]
        return False

    if not rec(0, 0):
        return None
    sets = {x: frozenset(bits_of(s)) for x, s in branch.items()}
    return Witness(OrderKind.MINOR, {x: min(s) for x, s in sets.items()}, branch_sets=sets)


def contains(host: Graph, pattern: Graph, kind: OrderKind | str) -> Witness | None:
    """Return a witness that ``pattern <= host`` in the order ``kind``, or None."""
    kind = OrderKind(kind)
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return None
    if kind is OrderKind.MINOR:
        return _minor(host, pattern)
    if not _degrees_dominated(host, pattern):
        return None
    if kind in (OrderKind.SUBGRAPH, OrderKind.INDUCED):
        phi = _embed(host, pattern, kind is OrderKind.INDUCED)
        return None if phi is None else Witness(kind, phi)
    return _topological(host, pattern, kind is OrderKind.TOPOLOGICAL_INDUCED)


# verification


def _is_host_path(host: Graph, p: tuple[int, ...]) -> bool:
    if len(p) < 2 or len(set(p)) != len(p):
        return False
    if not all(0 <= v < host.n for v in p):
        return False
    return all(host.adj[p[i]] >> p[i + 1] & 1 for i in range(len(p) - 1))


def verify_witness(host: Graph, pattern: Graph, w: Witness) -> bool:
    """Structural check of a witness of any kind; never raises."""
    try:
        return _verify(host, pattern, w)
    except (KeyError, TypeError, ValueError, IndexError, AttributeError):
        return False


def _verify(host: Graph, pattern: Graph, w: Witness) -> bool:
    phi = w.vertex_map
    if set(phi) != set(range(pattern.n)):
        return False
    if not all(0 <= v < host.n for v in phi.values()):
        return False
    pedges = pattern.edges()
    kind = OrderKind(w.kind)

    if kind is OrderKind.MINOR:
        sets = w.branch_sets
        if set(sets) != set(range(pattern.n)):
            return False
        masks = {}
        for x, s in sets.items():
            if not s or not all(0 <= v < host.n for v in s):
                return False
            m = 0
            for v in s:
                m |= 1 << v
            if not host.is_connected_mask(m) or phi[x] not in s:
                return False
            masks[x] = m
        union = 0
        for m in masks.values():
            if union & m:
                return False
            union |= m
        for x, y in pedges:
            if not any(host.adj[v] & masks[y] for v in bits_of(masks[x])):
                return False
        return True

    if len(set(phi.values())) != len(phi):
        return False

    if kind in (OrderKind.SUBGRAPH, OrderKind.INDUCED):
        for x in range(pattern.n):
            for y in range(x + 1, pattern.n):
                if pattern.adj[x] >> y & 1:
                    if not host.adj[phi[x]] >> phi[y] & 1:
                        return False
                elif kind is OrderKind.INDUCED and host.adj[phi[x]] >> phi[y] & 1:
                    return False
        return True

    # topological kinds
    if set(w.path_routes) != set(pedges):
        return False
    branch = set(phi.values())
    interiors: set[int] = set()
    sub_edges: set[tuple[int, int]] = set()
    for (x, y), p in w.path_routes.items():
        p = tuple(p)
        if not _is_host_path(host, p) or p[0] != phi[x] or p[-1] != phi[y]:
            return False
        inner = set(p[1:-1])
        if inner & branch or inner & interiors:
            return False
        interiors |= inner
        sub_edges.update((min(p[i], p[i + 1]), max(p[i], p[i + 1])) for i in range(len(p) - 1))
    if kind is OrderKind.TOPOLOGICAL_INDUCED:
        used = sorted(branch | interiors)
        for i, u in enumerate(used):
            for v in used[i + 1 :]:
                if bool(host.adj[u] >> v & 1) != ((u, v) in sub_edges):
                    return False
    return True


# planarity by Kuratowski exclusion


K5 = complete(5)
K33 = complete_bipartite(3, 3)
K4 = complete(4)
K23 = complete_bipartite(2, 3)


def is_planar(g: Graph) -> bool:
    return (
        contains(g, K5, OrderKind.TOPOLOGICAL_SUBGRAPH) is None
        and contains(g, K33, OrderKind.TOPOLOGICAL_SUBGRAPH) is None
    )


def is_outerplanar(g: Graph) -> bool:
    return (
        contains(g, K4, OrderKind.TOPOLOGICAL_SUBGRAPH) is None
        and contains(g, K23, OrderKind.TOPOLOGICAL_SUBGRAPH) is None
    )


def is_outerplanar_by_minors(g: Graph) -> bool:
    return contains(g, K4, OrderKind.MINOR) is None and contains(g, K23, OrderKind.MINOR) is None
