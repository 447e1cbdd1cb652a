"""Membership tests with checkable certificates for hereditary graph classes.

A positive answer carries a vertex ordering, a bipartition or a pair of
cliques; a negative answer carries a forbidden induced subgraph together with
its embedding.  :func:`verify_certificate` replays either kind independently
of the search that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Literal, Union

from hereditary.containment import OrderKind, Witness, contains, verify_witness
from hereditary.graph import CapacityError, Graph, bits_of, complement, cycle, disjoint_union, path, complete

Parity = Literal["any", "odd", "even"]

PERFECT_LIMIT = 12
ORDERING_SEARCH_LIMIT = 16


@dataclass(frozen=True)
class Ordering:
    perm: tuple[int, ...]


@dataclass(frozen=True)
class ForbiddenWitness:
    pattern: Graph
    embed: Witness


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]


@dataclass(frozen=True)
class CliquePair:
    first: frozenset[int]
    second: frozenset[int]


Certificate = Union[Ordering, ForbiddenWitness, Bipartition, CliquePair]


@dataclass(frozen=True)
class Classification:
    class_name: str
    member: bool
    certificate: Certificate | None


# holes and antiholes


def _parity_ok(length: int, parity: Parity) -> bool:
    if parity == "any":
        return True
    return (length % 2 == 1) == (parity == "odd")


def _induced_cycle(g: Graph, parity: Parity, min_len: int) -> tuple[int, ...] | None:
    """First chordless cycle of length >= ``min_len`` (>= 3) with the given parity.

    Cycles are grown as induced paths from their least vertex ``s``: a vertex
    may extend the path only if it sees the last path vertex and nothing else
    on the path, except ``s`` when it closes the cycle.
    """
    if parity not in ("any", "odd", "even"):
        raise ValueError(f"unknown parity {parity!r}")
    adj = g.adj
    for s in range(g.n):
        higher = g.vertex_mask & ~((1 << (s + 1)) - 1)
        stack = [s]

        def extend(body: int) -> tuple[int, ...] | None:
            # body: path vertices other than s and the last one
            last = stack[-1]
            for u in bits_of(adj[last] & higher & ~body & ~(1 << last)):
                if adj[u] & body:
                    continue
                closes = len(stack) >= 2 and adj[u] >> s & 1
                length = len(stack) + 1
                if closes:
                    if length >= min_len and _parity_ok(length, parity):
                        return tuple(stack) + (u,)
                    continue
                stack.append(u)
                found = extend(body | (1 << last if len(stack) > 2 else 0))
                stack.pop()
                if found:
                    return found
            return None

        found = extend(0)
        if found:
            return found
    return None


def find_hole(g: Graph, parity: Parity = "any", min_len: int = 4) -> tuple[int, ...] | None:
    """Return the vertices of an induced cycle of length >= ``min_len``, in cyclic order."""
    if min_len < 4:
        raise ValueError("holes have at least four vertices; min_len must be >= 4")
    return _induced_cycle(g, parity, min_len)


def find_antihole(g: Graph, parity: Parity = "any", min_len: int = 4) -> tuple[int, ...] | None:
    """Like :func:`find_hole` on the complement; the cycle is listed in complement order."""
    return find_hole(complement(g), parity, min_len)


def _cycle_witness(cyc: tuple[int, ...], anti: bool = False) -> ForbiddenWitness:
    pattern = cycle(len(cyc))
    if anti:
        pattern = complement(pattern)
    return ForbiddenWitness(pattern, Witness(OrderKind.INDUCED, dict(enumerate(cyc))))


def _subgraph_witness(g: Graph, vertices: list[int]) -> ForbiddenWitness:
    vs = sorted(vertices)
    return ForbiddenWitness(g.induced_subgraph(vs), Witness(OrderKind.INDUCED, dict(enumerate(vs))))


def _minimal_non_member(g: Graph, member: Callable[[Graph], bool]) -> ForbiddenWitness:
    """Shrink a non-member to a minimal one by single vertex deletions.

    One pass suffices for a hereditary class: a vertex kept because its
    deletion gave a member still gives a member after later deletions.
    """
    keep = g.vertex_mask
    for v in range(g.n):
        trial = keep & ~(1 << v)
        if not member(g.induced_by_mask(trial)):
            keep = trial
    return _subgraph_witness(g, list(bits_of(keep)))


# ordering rules


def _prefix_neighbours(g: Graph, perm: tuple[int, ...]) -> list[tuple[int, int]]:
    """``(i, mask)`` for each position: 1-based index and the neighbours among earlier vertices."""
    out = []
    prefix = 0
    for i, v in enumerate(perm, start=1):
        out.append((i, g.adj[v] & prefix))
        prefix |= 1 << v
    return out


def _is_clique_mask(g: Graph, mask: int) -> bool:
    return all((g.adj[v] | 1 << v) & mask == mask for v in bits_of(mask))


def _mcs_order(g: Graph, mask: int) -> list[int]:
    """Maximum cardinality search over ``G:mask``, ties to the least vertex."""
    weight = {v: 0 for v in bits_of(mask)}
    order = []
    while weight:
        v = max(weight, key=lambda u: (weight[u], -u))
        del weight[v]
        order.append(v)
        for u in bits_of(g.adj[v] & mask):
            if u in weight:
                weight[u] += 1
    return order


def _dirac_ok(g: Graph, order: list[int]) -> bool:
    prefix = 0
    for v in order:
        if not _is_clique_mask(g, g.adj[v] & prefix):
            return False
        prefix |= 1 << v
    return True


def _is_chordal_mask(g: Graph, mask: int) -> bool:
    return _dirac_ok(g, _mcs_order(g, mask))


def _rule_forest(g: Graph, i: int, nbrs: int) -> bool:
    return nbrs.bit_count() <= 1


def _rule_chordal(g: Graph, i: int, nbrs: int) -> bool:
    return _is_clique_mask(g, nbrs)


def _rule_threshold(g: Graph, i: int, nbrs: int) -> bool:
    d = nbrs.bit_count()
    return d == 0 or d == i - 1


def _rule_mock_threshold(g: Graph, i: int, nbrs: int) -> bool:
    d = nbrs.bit_count()
    return d <= 1 or d >= i - 2


def _rule_chordal_neighbourhood(g: Graph, i: int, nbrs: int) -> bool:
    return _is_chordal_mask(g, nbrs)


ORDERING_RULES = {
    "forest": _rule_forest,
    "chordal": _rule_chordal,
    "threshold": _rule_threshold,
    "mock_threshold": _rule_mock_threshold,
    "even_hole_free": _rule_chordal_neighbourhood,
}


def check_ordering(g: Graph, perm, class_name: str) -> bool:
    rule = ORDERING_RULES.get(class_name)
    perm = tuple(perm)
    if rule is None or sorted(perm) != list(range(g.n)):
        return False
    return all(rule(g, i, nbrs) for i, nbrs in _prefix_neighbours(g, perm))


def _peel(g: Graph, rule: Callable[[int, int], bool]) -> list[int] | None:
    """Greedy reverse elimination: repeatedly delete the highest vertex that may
    come last among those remaining.  Returns the ordering, or None if stuck."""
    alive = g.vertex_mask
    removed = []
    while alive:
        size = alive.bit_count()
        for v in sorted(bits_of(alive), reverse=True):
            if rule(size, g.adj[v] & alive):
                removed.append(v)
                alive &= ~(1 << v)
                break
        else:
            return None
    return removed[::-1]


# forests


def is_forest(g: Graph) -> bool:
    return _peel(g, lambda i, nbrs: nbrs.bit_count() <= 1) is not None


def recognize_forest(g: Graph) -> Classification:
    order = _peel(g, lambda i, nbrs: nbrs.bit_count() <= 1)
    if order is not None:
        return Classification("forest", True, Ordering(tuple(order)))
    return Classification("forest", False, _cycle_witness(_induced_cycle(g, "any", 3)))


# chordal graphs


def is_chordal(g: Graph) -> bool:
    return _dirac_ok(g, _mcs_order(g, g.vertex_mask))


def recognize_chordal(g: Graph) -> Classification:
    order = _mcs_order(g, g.vertex_mask)
    if _dirac_ok(g, order):
        return Classification("chordal", True, Ordering(tuple(order)))
    return Classification("chordal", False, _cycle_witness(find_hole(g, "any", 4)))


# bipartite and co-bipartite


def _two_colouring(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    colour: dict[int, int] = {}
    for s in range(g.n):
        if s in colour:
            continue
        colour[s] = 0
        queue = [s]
        while queue:
            v = queue.pop()
            for u in bits_of(g.adj[v]):
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    return (
        frozenset(v for v, c in colour.items() if c == 0),
        frozenset(v for v, c in colour.items() if c == 1),
    )


def is_bipartite(g: Graph) -> bool:
    return _two_colouring(g) is not None


def recognize_bipartite(g: Graph) -> Classification:
    sides = _two_colouring(g)
    if sides is not None:
        return Classification("bipartite", True, Bipartition(*sides))
    # a shortest odd cycle is chordless
    return Classification("bipartite", False, _cycle_witness(_induced_cycle(g, "odd", 3)))


def is_co_bipartite(g: Graph) -> bool:
    return _two_colouring(complement(g)) is not None


def recognize_co_bipartite(g: Graph) -> Classification:
    h = complement(g)
    sides = _two_colouring(h)
    if sides is not None:
        return Classification("co_bipartite", True, CliquePair(*sides))
    # independent triple (length 3) or odd antihole
    return Classification("co_bipartite", False, _cycle_witness(_induced_cycle(h, "odd", 3), anti=True))


# threshold graphs

P4 = path(4)
C4 = cycle(4)
TWO_K2 = disjoint_union(complete(2), complete(2))
THRESHOLD_OBSTRUCTIONS = (P4, C4, TWO_K2)


def _threshold_rule(i: int, nbrs: int) -> bool:
    d = nbrs.bit_count()
    return d == 0 or d == i - 1


def is_threshold(g: Graph) -> bool:
    return _peel(g, _threshold_rule) is not None


def recognize_threshold(g: Graph) -> Classification:
    order = _peel(g, _threshold_rule)
    if order is not None:
        return Classification("threshold", True, Ordering(tuple(order)))
    for pattern in THRESHOLD_OBSTRUCTIONS:
        w = contains(g, pattern, OrderKind.INDUCED)
        if w is not None:
            return Classification("threshold", False, ForbiddenWitness(pattern, w))
    raise AssertionError(f"threshold elimination failed but no P4, C4 or 2K2 found in {g.to_graph6()}")


# mock threshold graphs


def _mt_rule(i: int, nbrs: int) -> bool:
    d = nbrs.bit_count()
    return d <= 1 or d >= i - 2


def _mt_backtrack(g: Graph) -> list[int] | None:
    failed: set[bytes] = set()

    def search(alive: int) -> list[int] | None:
        size = alive.bit_count()
        if size <= 4:
            # every degree satisfies d <= 1 or d >= i - 2 when i <= 4
            return list(bits_of(alive))
        code = g.induced_by_mask(alive).canonical_code
        if code in failed:
            return None
        cands = [v for v in bits_of(alive) if _mt_rule(size, g.adj[v] & alive)]
        cands.sort(key=lambda v: ((g.adj[v] & alive).bit_count(), v))
        for v in cands:
            rest = search(alive & ~(1 << v))
            if rest is not None:
                return rest + [v]
        failed.add(code)
        return None

    return search(g.vertex_mask)


def _mt_greedy(g: Graph) -> list[int] | None:
    alive = g.vertex_mask
    removed = []
    while alive:
        size = alive.bit_count()
        cands = [v for v in bits_of(alive) if _mt_rule(size, g.adj[v] & alive)]
        if not cands:
            return None
        v = min(cands, key=lambda u: ((g.adj[u] & alive).bit_count(), u))
        removed.append(v)
        alive &= ~(1 << v)
    return removed[::-1]


def is_mock_threshold(g: Graph, mode: str = "backtracking") -> bool:
    if mode == "greedy":
        return _mt_greedy(g) is not None
    if mode == "backtracking":
        return _mt_backtrack(g) is not None
    raise ValueError(f"unknown mode {mode!r}")


def recognize_mock_threshold(g: Graph, mode: str = "backtracking") -> Classification:
    if mode not in ("greedy", "backtracking"):
        raise ValueError(f"unknown mode {mode!r}")
    order = _mt_greedy(g) if mode == "greedy" else _mt_backtrack(g)
    if order is not None:
        return Classification("mock_threshold", True, Ordering(tuple(order)))
    witness = _minimal_non_member(g, lambda h: _mt_backtrack(h) is not None)
    return Classification("mock_threshold", False, witness)


# clique number, chromatic number, perfection


def clique_number(g: Graph) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = cand & -cand
            expand(size + 1, cand & g.adj[v.bit_length() - 1])
            cand ^= v

    expand(0, g.vertex_mask)
    return best


def _dsatur_pick(g: Graph, colour: list[int], uncoloured: int) -> int:
    best, best_key = -1, None
    for v in bits_of(uncoloured):
        sat = len({colour[u] for u in bits_of(g.adj[v]) if colour[u] >= 0})
        key = (sat, (g.adj[v] & uncoloured).bit_count(), -v)
        if best_key is None or key > best_key:
            best, best_key = v, key
    return best


def _greedy_colours(g: Graph) -> int:
    colour = [-1] * g.n
    uncoloured = g.vertex_mask
    used = 0
    while uncoloured:
        v = _dsatur_pick(g, colour, uncoloured)
        taken = {colour[u] for u in bits_of(g.adj[v])}
        c = next(c for c in range(g.n) if c not in taken)
        colour[v] = c
        used = max(used, c + 1)
        uncoloured &= ~(1 << v)
    return used


def _colourable(g: Graph, k: int) -> bool:
    colour = [-1] * g.n

    def rec(uncoloured: int, used: int) -> bool:
        if not uncoloured:
            return True
        v = _dsatur_pick(g, colour, uncoloured)
        taken = {colour[u] for u in bits_of(g.adj[v])}
        # a fresh colour is interchangeable with any other fresh colour
        for c in range(min(k, used + 1)):
            if c in taken:
                continue
            colour[v] = c
            if rec(uncoloured & ~(1 << v), max(used, c + 1)):
                return True
        colour[v] = -1
        return False

    return rec(g.vertex_mask, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number: DSATUR branch and bound between ω and a greedy bound."""
    if g.n == 0:
        return 0
    lower = clique_number(g)
    upper = _greedy_colours(g)
    for k in range(lower, upper):
        if _colourable(g, k):
            return k
    return upper


_PERFECT_MEMO: dict[bytes, bool] = {}


def is_perfect(g: Graph) -> bool:
    """χ = ω on every induced subgraph.

    Induced subgraphs are reached by single deletions and deduplicated by
    canonical code; verdicts are memoised across calls, keyed by that code.
    """
    if g.n > PERFECT_LIMIT:
        raise CapacityError(f"perfection sweep limited to {PERFECT_LIMIT} vertices")

    def rec(h: Graph) -> bool:
        code = h.canonical_code
        hit = _PERFECT_MEMO.get(code)
        if hit is not None:
            return hit
        ok = all(rec(h.delete_vertex(v)) for v in range(h.n)) and chromatic_number(h) == clique_number(h)
        _PERFECT_MEMO[code] = ok
        return ok

    return rec(g)


def recognize_perfect(g: Graph) -> Classification:
    if is_perfect(g):
        return Classification("perfect", True, None)
    return Classification("perfect", False, _minimal_non_member(g, is_perfect))


def is_berge(g: Graph) -> bool:
    return find_hole(g, "odd", 5) is None and find_antihole(g, "odd", 5) is None


def recognize_berge(g: Graph) -> Classification:
    hole = find_hole(g, "odd", 5)
    if hole is not None:
        return Classification("berge", False, _cycle_witness(hole))
    anti = find_antihole(g, "odd", 5)
    if anti is not None:
        return Classification("berge", False, _cycle_witness(anti, anti=True))
    return Classification("berge", True, None)


# even holes


def even_hole_free_ordering(g: Graph) -> tuple[int, ...] | None:
    """An ordering in which every vertex's earlier neighbours induce a chordal graph.

    Found by reverse deletion with backtracking, memoising dead vertex sets.
    Graphs without even holes always have one; some graphs with even holes
    have one too, so success proves nothing about even holes.
    """
    if g.n > ORDERING_SEARCH_LIMIT:
        raise CapacityError(f"ordering search limited to {ORDERING_SEARCH_LIMIT} vertices")
    dead: set[int] = set()

    def search(alive: int) -> list[int] | None:
        if not alive:
            return []
        if alive in dead:
            return None
        for v in bits_of(alive):
            if _is_chordal_mask(g, g.adj[v] & alive):
                rest = search(alive & ~(1 << v))
                if rest is not None:
                    return rest + [v]
        dead.add(alive)
        return None

    order = search(g.vertex_mask)
    return None if order is None else tuple(order)


def is_even_hole_free(g: Graph) -> bool:
    return find_hole(g, "even", 4) is None


def recognize_even_hole_free(g: Graph) -> Classification:
    hole = find_hole(g, "even", 4)
    if hole is not None:
        return Classification("even_hole_free", False, _cycle_witness(hole))
    order = even_hole_free_ordering(g) if g.n <= ORDERING_SEARCH_LIMIT else None
    return Classification("even_hole_free", True, None if order is None else Ordering(order))


# roster

RECOGNIZERS: dict[str, Callable[[Graph], Classification]] = {
    "forest": recognize_forest,
    "chordal": recognize_chordal,
    "bipartite": recognize_bipartite,
    "co_bipartite": recognize_co_bipartite,
    "threshold": recognize_threshold,
    "mock_threshold": recognize_mock_threshold,
    "berge": recognize_berge,
    "perfect": recognize_perfect,
    "even_hole_free": recognize_even_hole_free,
}

PREDICATES: dict[str, Callable[[Graph], bool]] = {
    "forest": is_forest,
    "chordal": is_chordal,
    "bipartite": is_bipartite,
    "co_bipartite": is_co_bipartite,
    "threshold": is_threshold,
    "mock_threshold": is_mock_threshold,
    "berge": is_berge,
    "perfect": is_perfect,
    "even_hole_free": is_even_hole_free,
}

CLASS_NAMES = tuple(RECOGNIZERS)


def classify(g: Graph, class_name: str) -> Classification:
    try:
        return RECOGNIZERS[class_name](g)
    except KeyError:
        raise ValueError(f"unknown class {class_name!r}") from None


# certificate checking


def _is_cycle_graph(h: Graph) -> bool:
    return h.n >= 3 and all(d == 2 for d in h.degrees()) and h.is_connected_mask(h.vertex_mask)


def _obstruction_ok(pattern: Graph, class_name: str) -> bool:
    n = pattern.n
    if class_name == "forest":
        return _is_cycle_graph(pattern)
    if class_name == "chordal":
        return _is_cycle_graph(pattern) and n >= 4
    if class_name == "bipartite":
        return _is_cycle_graph(pattern) and n % 2 == 1
    if class_name == "co_bipartite":
        return _is_cycle_graph(complement(pattern)) and n % 2 == 1
    if class_name == "threshold":
        return any(pattern.is_isomorphic(h) for h in THRESHOLD_OBSTRUCTIONS)
    if class_name == "mock_threshold":
        return _mt_backtrack(pattern) is None
    if class_name == "berge":
        return n >= 5 and n % 2 == 1 and (_is_cycle_graph(pattern) or _is_cycle_graph(complement(pattern)))
    if class_name == "perfect":
        return chromatic_number(pattern) != clique_number(pattern)
    if class_name == "even_hole_free":
        return _is_cycle_graph(pattern) and n >= 4 and n % 2 == 0
    return False


def _partition_ok(g: Graph, a: frozenset[int], b: frozenset[int]) -> bool:
    return not (a & b) and (a | b) == set(range(g.n))


def verify_certificate(g: Graph, c: Certificate | None, class_name: str) -> bool:
    """Replay a certificate; True iff it proves the verdict it stands for.

    Orderings, bipartitions and clique pairs prove membership; a forbidden
    witness proves non-membership.  Malformed input gives False.
    """
    try:
        if isinstance(c, Ordering):
            return check_ordering(g, c.perm, class_name)
        if isinstance(c, Bipartition):
            if class_name != "bipartite" or not _partition_ok(g, c.left, c.right):
                return False
            return all(not (g.adj[v] & (1 << u)) for side in (c.left, c.right) for v in side for u in side)
        if isinstance(c, CliquePair):
            if class_name != "co_bipartite" or not _partition_ok(g, c.first, c.second):
                return False
            return all(_is_clique_mask(g, sum(1 << v for v in side)) for side in (c.first, c.second))
        if isinstance(c, ForbiddenWitness):
            if OrderKind(c.embed.kind) is not OrderKind.INDUCED:
                return False
            return verify_witness(g, c.pattern, c.embed) and _obstruction_ok(c.pattern, class_name)
    except (TypeError, ValueError, KeyError, IndexError):
        return False
    return False


# JSON


def certificate_to_json(c: Certificate | None) -> dict | None:
    if c is None:
        return None
    if isinstance(c, Ordering):
        return {"type": "ordering", "perm": list(c.perm)}
    if isinstance(c, Bipartition):
        return {"type": "bipartition", "sides": [sorted(c.left), sorted(c.right)]}
    if isinstance(c, CliquePair):
        return {"type": "clique_pair", "sides": [sorted(c.first), sorted(c.second)]}
    return {"type": "forbidden", "pattern": c.pattern.to_graph6(), "embed": c.embed.to_json()}


def certificate_from_json(data: dict | None) -> Certificate | None:
    if data is None:
        return None
    kind = data["type"]
    if kind == "ordering":
        return Ordering(tuple(data["perm"]))
    if kind == "bipartition":
        a, b = data["sides"]
        return Bipartition(frozenset(a), frozenset(b))
    if kind == "clique_pair":
        a, b = data["sides"]
        return CliquePair(frozenset(a), frozenset(b))
    if kind == "forbidden":
        return ForbiddenWitness(Graph.from_graph6(data["pattern"]), Witness.from_json(data["embed"]))
    raise ValueError(f"unknown certificate type {kind!r}")
