"""Finite simple graphs, the named families, and exact alpha/beta.

Vertices are ``0..m-1``.  Adjacency is kept as one int bit-vector per vertex
next to the canonical sorted edge list.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Iterator

from .errors import BudgetExceeded, InvalidInput

MAX_ENUM_VERTICES = 7


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, vertex_count: int, edges: Iterable = ()):
        if not isinstance(vertex_count, int) or isinstance(vertex_count, bool) or vertex_count < 0:
            raise InvalidInput(f"vertex count must be a non-negative integer, got {vertex_count!r}")
        norm = set()
        for e in edges:
            u, v = e
            for x in (u, v):
                if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < vertex_count:
                    raise InvalidInput(f"edge endpoint {x!r} outside [0, {vertex_count - 1}]")
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            norm.add((min(u, v), max(u, v)))
        adj = [0] * vertex_count
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        object.__setattr__(self, "adjacency", tuple(adj))

    @property
    def m(self) -> int:
        return self.vertex_count

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        a = self.adjacency[v]
        return tuple(u for u in range(self.vertex_count) if a >> u & 1)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.vertex_count and 0 <= v < self.vertex_count and bool(self.adjacency[u] >> v & 1)

    def has_isolated_vertices(self) -> bool:
        return any(a == 0 for a in self.adjacency)

    def components(self) -> list[tuple[int, ...]]:
        seen = 0
        out = []
        for s in range(self.vertex_count):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adjacency[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(tuple(_bits(comp)))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def edge_mask(self) -> int:
        """Index of this graph in :func:`enumerate_graphs` order."""
        index = {p: i for i, p in enumerate(combinations(range(self.vertex_count), 2))}
        return sum(1 << index[e] for e in self.edges)

    def relabel(self, perm) -> Graph:
        """Graph with vertex v renamed to ``perm[v]``."""
        return Graph(self.vertex_count, ((perm[u], perm[v]) for u, v in self.edges))

    def to_json(self) -> dict:
        return {"m": self.vertex_count, "edges": [list(e) for e in self.edges]}

    def __str__(self) -> str:
        return f"Graph(m={self.vertex_count}, edges={list(self.edges)})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# ------------------------------------------------------------------ families


def path(m: int) -> Graph:
    _at_least("path", m, 1)
    return Graph(m, ((i, i + 1) for i in range(m - 1)))


def cycle(m: int) -> Graph:
    _at_least("cycle", m, 3)
    return Graph(m, ((i, (i + 1) % m) for i in range(m)))


def wheel(m: int) -> Graph:
    """W_{m+1}: hub 0 joined to the rim cycle 1..m."""
    _at_least("wheel", m, 3)
    rim = [(1 + i, 1 + (i + 1) % m) for i in range(m)]
    return Graph(m + 1, rim + [(0, 1 + i) for i in range(m)])


def helm(m: int) -> Graph:
    """Wheel on hub 0 and rim 1..m, plus pendant m+i hanging off rim vertex i."""
    _at_least("helm", m, 3)
    w = wheel(m)
    return Graph(2 * m + 1, list(w.edges) + [(i, m + i) for i in range(1, m + 1)])


def ladder(m: int) -> Graph:
    """P_m x P_2: rails 0..m-1 and m..2m-1, rung i -- m+i."""
    _at_least("ladder", m, 2)
    edges = [(i, i + 1) for i in range(m - 1)]
    edges += [(m + i, m + i + 1) for i in range(m - 1)]
    edges += [(i, m + i) for i in range(m)]
    return Graph(2 * m, edges)


def complete(m: int) -> Graph:
    _at_least("complete", m, 1)
    return Graph(m, combinations(range(m), 2))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    _at_least("star", leaves, 1)
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts 0..a-1 and a..a+b-1."""
    _at_least("complete_bipartite", a, 1)
    _at_least("complete_bipartite", b, 1)
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def _at_least(kind, value, low):
    if not isinstance(value, int) or isinstance(value, bool) or value < low:
        raise InvalidInput(f"{kind} needs size >= {low}, got {value!r}")


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "wheel": wheel,
    "helm": helm,
    "ladder": ladder,
    "complete": complete,
    "star": star,
    "complete_bipartite": complete_bipartite,
    "petersen": petersen,
}


def generate_family(kind: str, size: int | None = None, size2: int | None = None) -> Graph:
    try:
        build = FAMILIES[kind]
    except KeyError:
        raise InvalidInput(f"unknown family {kind!r}; choose from {sorted(FAMILIES)}") from None
    if kind == "petersen":
        return build()
    if size is None:
        raise InvalidInput(f"family {kind!r} needs a size")
    if kind == "complete_bipartite":
        if size2 is None:
            raise InvalidInput("complete_bipartite needs two part sizes")
        return build(size, size2)
    return build(size)


# ---------------------------------------------------------------- invariants


def is_bipartite(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-colouring by BFS layers, or None if an odd cycle exists.

    The side containing the smallest vertex of each component comes first.
    """
    color = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side0 = frozenset(v for v in range(g.vertex_count) if color[v] == 0)
    return side0, frozenset(range(g.vertex_count)) - side0


def _is_cover(g: Graph, cover: int) -> bool:
    return all(cover >> u & 1 or cover >> v & 1 for u, v in g.edges)


def _is_independent(g: Graph, subset: int) -> bool:
    return all(g.adjacency[v] & subset == 0 for v in _bits(subset))


def _min_cover_size(g: Graph) -> int:
    """Branch on an uncovered edge (u, v): either u joins the cover or all of N(u) does."""
    best = g.vertex_count

    def rec(alive: int, size: int):
        # alive: vertices not yet removed; edges live only between alive vertices
        nonlocal best
        if size >= best:
            return
        u_pick, deg_pick = -1, 0
        for u in _bits(alive):
            d = (g.adjacency[u] & alive).bit_count()
            if d > deg_pick:
                u_pick, deg_pick = u, d
        if deg_pick == 0:
            best = size
            return
        # a max-degree vertex bound: remaining edges / max degree
        edges_left = sum((g.adjacency[u] & alive).bit_count() for u in _bits(alive)) // 2
        if size + -(-edges_left // deg_pick) >= best:
            return
        rec(alive & ~(1 << u_pick), size + 1)
        nbrs = g.adjacency[u_pick] & alive
        rec(alive & ~nbrs & ~(1 << u_pick), size + nbrs.bit_count())

    rec((1 << g.vertex_count) - 1, 0)
    return best


def _max_clique_size(adj: list[int], m: int) -> int:
    best = 0

    def rec(size: int, cand: int):
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            rec(size + 1, cand & adj[v])

    rec(0, (1 << m) - 1)
    return best


def _lex_smallest(g: Graph, size: int, test) -> tuple[int, ...]:
    for combo in combinations(range(g.vertex_count), size):
        if test(g, sum(1 << v for v in combo)):
            return combo
    raise AssertionError("no witness of the computed optimum size")  # pragma: no cover


def covering_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Minimum vertex cover size and the lexicographically smallest minimum cover."""
    alpha = _min_cover_size(g)
    return alpha, _lex_smallest(g, alpha, _is_cover)


def independence_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Maximum independent set size (as a clique of the complement) and a lex-smallest witness."""
    m = g.vertex_count
    full = (1 << m) - 1
    comp = [full & ~g.adjacency[v] & ~(1 << v) for v in range(m)]
    beta = _max_clique_size(comp, m)
    return beta, _lex_smallest(g, beta, _is_independent)


# ---------------------------------------------------------------- enumeration


def enumerate_graphs(m: int, require_no_isolated: bool = False) -> Iterator[Graph]:
    """Every labeled simple graph on m vertices, by ascending edge mask.

    Bit i of the mask selects the i-th pair of ``combinations(range(m), 2)``.
    """
    if not isinstance(m, int) or m < 0:
        raise InvalidInput(f"vertex count must be a non-negative integer, got {m!r}")
    if m > MAX_ENUM_VERTICES:
        raise BudgetExceeded(f"enumeration over {m} vertices exceeds the limit of {MAX_ENUM_VERTICES}")
    pairs = list(combinations(range(m), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(m, (p for i, p in enumerate(pairs) if mask >> i & 1))
        if require_no_isolated and g.has_isolated_vertices():
            continue
        yield g


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Smallest edge mask over all vertex relabelings, with the permutation reaching it.

    ``g.relabel(perm)`` has edge mask equal to the returned mask.  Intended for
    memoising isomorphism-invariant results on small graphs.
    """
    m = g.vertex_count
    index = {p: i for i, p in enumerate(combinations(range(m), 2))}
    best, best_perm = None, None
    for perm in permutations(range(m)):
        mask = 0
        for u, v in g.edges:
            a, b = perm[u], perm[v]
            mask |= 1 << index[(a, b) if a < b else (b, a)]
        if best is None or mask < best:
            best, best_perm = mask, perm
    return best, best_perm


def graph_from_mask(m: int, mask: int) -> Graph:
    pairs = combinations(range(m), 2)
    return Graph(m, (p for i, p in enumerate(pairs) if mask >> i & 1))
