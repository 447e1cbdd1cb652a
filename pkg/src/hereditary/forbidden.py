"""Exhaustive graph generation and minimal forbidden induced subgraphs.

Graphs on ``n`` vertices are produced by canonical augmentation: every
canonical ``(n-1)``-vertex graph is extended by one new vertex in every
possible way, and a child is kept only when the new vertex could be the last
vertex of the child's canonical labelling (that is, deleting it gives the
same isomorphism type as deleting the canonical last vertex).  Children of a
single parent are deduplicated locally, so no table of all graphs on ``n``
vertices is ever consulted during generation.
"""

from __future__ import annotations

import json
import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from hereditary.canon import unit_refinement
from hereditary.graph import Graph

log = logging.getLogger(__name__)

MAX_GENERATION = 10
DEFAULT_MAX_N = 8


class HereditaryViolation(Exception):
    """A membership predicate is not closed under vertex deletion."""

    def __init__(self, name: str, graph: Graph, vertex: int) -> None:
        super().__init__(
            f"class {name!r} is not hereditary: {graph.to_graph6()} is a member "
            f"but deleting vertex {vertex} gives a non-member"
        )
        self.graph = graph
        self.vertex = vertex


@dataclass(frozen=True)
class ClassSpec:
    name: str
    member: Callable[[Graph], bool]
    claimed_hereditary: bool = True


@dataclass
class ForbiddenReport:
    name: str
    max_n: int
    forbidden: dict[int, list[str]] = field(default_factory=dict)

    @property
    def phi(self) -> list[int]:
        """``phi[k]`` counts minimal non-members on ``k + 1`` vertices, ``k < max_n``."""
        return [len(self.forbidden.get(n, [])) for n in range(1, self.max_n + 1)]

    def graphs(self) -> list[Graph]:
        return [Graph.from_graph6(s) for n in sorted(self.forbidden) for s in self.forbidden[n]]

    def to_json(self) -> dict:
        return {
            "class": self.name,
            "max_n": self.max_n,
            "forbidden": [
                {"n": n, "graph6": s} for n in sorted(self.forbidden) for s in self.forbidden[n]
            ],
            "phi": self.phi,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > MAX_GENERATION:
        raise ValueError(f"exhaustive generation is capped at n = {MAX_GENERATION}")
    if n > DEFAULT_MAX_N:
        warnings.warn(f"exhaustive work over all graphs on {n} vertices is slow", stacklevel=3)


def _children(parent: Graph) -> list[Graph]:
    """Accepted canonical children of one canonical parent."""
    v = parent.n
    pdeg = parent.degrees()
    pcode = parent.canonical_code
    seen: set[bytes] = set()
    out = []
    for nbrs in range(1 << parent.n):
        d = nbrs.bit_count()
        # the canonical last vertex always lies in the final (highest degree) cell
        if any(pdeg[u] + (nbrs >> u & 1) > d for u in range(parent.n)):
            continue
        child = parent.add_vertex(nbrs)
        if v not in unit_refinement(child)[-1]:
            continue
        lab = child.canonical_labeling
        w = lab[-1]
        if w != v and child.delete_vertex(w).canonical_code != pcode:
            continue
        code = child.canonical_code
        if code in seen:
            continue
        seen.add(code)
        out.append(child.canonical_form())
    return out


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    graphs = [c for parent in _level(n - 1) for c in _children(parent)]
    graphs.sort(key=lambda g: g.canonical_code)
    log.debug("generated %d graphs on %d vertices", len(graphs), n)
    return tuple(graphs)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class on ``n`` vertices.

    Order is ascending canonical code, so it is reproducible across runs.
    """
    _check_n(n)
    yield from _level(n)


@lru_cache(maxsize=None)
def _deletion_codes(n: int) -> tuple[tuple[bytes, ...], ...]:
    return tuple(tuple(g.delete_vertex(v).canonical_code for v in range(g.n)) for g in _level(n))


def _memberships(spec: ClassSpec, max_n: int, workers: int) -> dict[bytes, bool]:
    member: dict[bytes, bool] = {}
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for n in range(max_n + 1):
            graphs = _level(n)
            if pool is None:
                verdicts = map(spec.member, graphs)
            else:
                verdicts = pool.map(spec.member, graphs, chunksize=64)
            for g, ok in zip(graphs, verdicts):
                member[g.canonical_code] = bool(ok)
    finally:
        if pool is not None:
            pool.shutdown()
    return member


def _find_violation(member: dict[bytes, bool], max_n: int) -> tuple[Graph, int] | None:
    for n in range(1, max_n + 1):
        for g, dels in zip(_level(n), _deletion_codes(n)):
            if member[g.canonical_code]:
                for v, code in enumerate(dels):
                    if not member[code]:
                        return g, v
    return None


def verify_hereditary(spec: ClassSpec, max_n: int = DEFAULT_MAX_N) -> tuple[Graph, int] | None:
    """Return ``(g, v)`` with ``g`` a member and ``g - v`` not, or None if closed."""
    _check_n(max_n)
    return _find_violation(_memberships(spec, max_n, 1), max_n)


def minimal_forbidden(spec: ClassSpec, max_n: int = DEFAULT_MAX_N, workers: int = 1) -> ForbiddenReport:
    """Compute every minimal non-member of ``spec`` on at most ``max_n`` vertices."""
    _check_n(max_n)
    member = _memberships(spec, max_n, workers)
    if spec.claimed_hereditary:
        bad = _find_violation(member, max_n)
        if bad is not None:
            raise HereditaryViolation(spec.name, *bad)

    report = ForbiddenReport(spec.name, max_n)
    # contains_forbidden[code]: some listed graph is an induced subgraph
    contains_forbidden: dict[bytes, bool] = {}
    for n in range(max_n + 1):
        found = []
        for g, dels in zip(_level(n), _deletion_codes(n)):
            code = g.canonical_code
            below = any(contains_forbidden[c] for c in dels)
            if not member[code] and all(member[c] for c in dels):
                found.append(g.to_graph6())
                contains_forbidden[code] = True
            else:
                contains_forbidden[code] = below
            if spec.claimed_hereditary and member[code] == contains_forbidden[code]:
                raise AssertionError(
                    f"forbidden set for {spec.name!r} does not characterise {g.to_graph6()}"
                )
        if found:
            report.forbidden[n] = found
    return report


def phi_sequence(spec: ClassSpec, max_n: int = DEFAULT_MAX_N) -> list[int]:
    return minimal_forbidden(spec, max_n).phi
