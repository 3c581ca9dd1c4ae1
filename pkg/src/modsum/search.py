"""Backtracking search for labelings with a target property, and minimum-modulus search.

Labels are the nonempty subsets of Z_n indexed ``i <-> mask i + 1`` so that
ascending index is ascending bit-pattern.  Vertices are assigned in a fixed
order (descending degree, ties by index) and each vertex tries labels in
ascending order, so the first witness found is the lexicographically least
one, comparing label masks in vertex-order sequence.

Pruning, all of it sound:

* forward checking: assigning label ``i`` to v restricts every unassigned
  neighbour's domain to labels forming a valid edge with ``i``; the edge
  predicates of every property except INDEXER are pairwise, so a label
  removed this way can never appear in a solution extending the current one;
* a Hall-type counting test: for every distinct live domain D, the number
  of unassigned vertices whose domain lies inside D may not exceed |D|
  (labels are used at most once);
* WEAK only: the vertices of one minimum vertex cover are restricted to
  singleton labels.  A weak labeling (singleton-end form) exists over Z_n
  iff n >= alpha and m <= 2^n - 1.  Necessity: its singleton vertices cover
  every edge and are pairwise distinct, and all m labels are distinct.
  Sufficiency within the restricted space: give the fixed cover alpha
  singletons, and the complementary independent set the remaining
  n - alpha singletons plus up to 2^n - n - 1 larger sets.  So the
  restriction never turns a satisfiable instance into an exhausted one; it
  does change which witness is least.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import comb

import numpy as np

from . import _kernels
from .errors import InvalidInput
from .graph import Graph, covering_number, independence_number
from .labeling import (
    Labeling,
    is_exquisite,
    is_indexer,
    is_injective_labeling,
    is_maximal,
    is_strong,
    is_weak,
    is_weak_paper_form,
)
from .zn import ZnSet, _rotl, modular_difference_set

DEFAULT_NODE_BUDGET = 10**7
DEFAULT_SECONDS_BUDGET = 60.0
MAX_PAIR_TABLE_MODULUS = 12


class Kind(enum.Enum):
    PLAIN = "plain"
    INDEXER = "indexer"
    WEAK = "weak"
    WEAK_LITERAL = "weak-literal"
    WEAK_K_UNIFORM = "weak-k-uniform"
    STRONG = "strong"
    STRONG_K_UNIFORM = "strong-k-uniform"
    MAXIMAL = "maximal"
    EXQUISITE = "exquisite"


_NEEDS_K = {Kind.WEAK_K_UNIFORM, Kind.STRONG_K_UNIFORM}


@dataclass(frozen=True)
class PropertySpec:
    """Target property of a search.

    ``k`` is the required edge-label size for the k-uniform kinds, and an
    optional extra uniformity constraint for WEAK_LITERAL.  With
    ``forbid_monocardinal_edges`` no edge label may be a singleton.
    """

    kind: Kind
    k: int | None = None
    forbid_monocardinal_edges: bool = False

    def __post_init__(self):
        if self.kind in _NEEDS_K and self.k is None:
            raise InvalidInput(f"{self.kind.value} needs k")
        if self.k is not None:
            if self.kind not in _NEEDS_K and self.kind is not Kind.WEAK_LITERAL:
                raise InvalidInput(f"{self.kind.value} takes no k")
            if not isinstance(self.k, int) or self.k < 1:
                raise InvalidInput(f"k must be a positive integer, got {self.k!r}")

    @classmethod
    def parse(cls, name: str, k: int | None = None) -> PropertySpec:
        try:
            kind = Kind(name.lower().replace("_", "-"))
        except ValueError:
            raise InvalidInput(f"unknown spec {name!r}; choose from {[x.value for x in Kind]}") from None
        return cls(kind, k)

    def __str__(self):
        s = self.kind.value
        if self.k is not None:
            s += f"(k={self.k})"
        if self.forbid_monocardinal_edges:
            s += "[no monocardinal edges]"
        return s

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "k": self.k, "forbid_monocardinal_edges": self.forbid_monocardinal_edges}


class Status(enum.Enum):
    FOUND = "FOUND"
    EXHAUSTED = "EXHAUSTED"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


@dataclass(frozen=True)
class Budget:
    nodes: int = DEFAULT_NODE_BUDGET
    seconds: float = DEFAULT_SECONDS_BUDGET


@dataclass
class SearchOutcome:
    status: Status
    witness: Labeling | None = None
    nodes_expanded: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict:
        from .io import labeling_to_json

        return {
            "status": self.status.value,
            "witness": labeling_to_json(self.witness) if self.witness is not None else None,
            "nodes_expanded": self.nodes_expanded,
        }


@dataclass
class MinResult:
    value: int | None
    per_n: list[tuple[int, SearchOutcome]] = field(default_factory=list)
    exact: bool = False

    @property
    def witness(self) -> Labeling | None:
        for n, out in self.per_n:
            if n == self.value:
                return out.witness
        return None

    def to_json(self) -> dict:
        from .io import labeling_to_json

        w = self.witness
        return {
            "value": self.value,
            "exact": self.exact,
            "witness": labeling_to_json(w) if w is not None else None,
            "per_n": [{"n": n, **out.to_json()} for n, out in self.per_n],
        }


# ------------------------------------------------------------ verification


def satisfies(lab: Labeling, spec: PropertySpec) -> bool:
    """Check a labeling against a spec using only the labeling module."""
    if not is_injective_labeling(lab)[0]:
        return False
    sizes = [len(s) for s in lab.edge_labels().values()]
    if spec.forbid_monocardinal_edges and 1 in sizes:
        return False
    if spec.k is not None and any(s != spec.k for s in sizes):
        return False
    kind = spec.kind
    if kind is Kind.PLAIN:
        return True
    if kind is Kind.INDEXER:
        return is_indexer(lab)[0]
    if kind in (Kind.WEAK, Kind.WEAK_K_UNIFORM):
        return is_weak_paper_form(lab)
    if kind is Kind.WEAK_LITERAL:
        return is_weak(lab)
    if kind in (Kind.STRONG, Kind.STRONG_K_UNIFORM):
        return is_strong(lab)
    if kind is Kind.MAXIMAL:
        return is_maximal(lab)
    if kind is Kind.EXQUISITE:
        return is_exquisite(lab)
    raise AssertionError(kind)  # pragma: no cover


# ------------------------------------------------------------- pair tables


@lru_cache(maxsize=16)
def _base_tables(n):
    table = _kernels.sumset_table(n)
    pc = _kernels.popcounts(n).astype(np.int64)
    diff = np.array([0] + [modular_difference_set(ZnSet(n, b)).bits for b in range(1, 1 << n)], dtype=np.uint64)
    return table, pc, diff


@lru_cache(maxsize=64)
def pair_table(n: int, spec: PropertySpec) -> np.ndarray | None:
    """Boolean ``ok[a, b]`` over masks: may an edge carry labels a and b?

    None when every pair is allowed (PLAIN, INDEXER).
    """
    kind = spec.kind
    if kind in (Kind.PLAIN, Kind.INDEXER) and not spec.forbid_monocardinal_edges:
        return None
    if n > MAX_PAIR_TABLE_MODULUS:
        raise InvalidInput(f"{spec} search supports n <= {MAX_PAIR_TABLE_MODULUS}")
    table, pc, diff = _base_tables(n)
    pa, pb = pc[:, None], pc[None, :]
    ps = pc[table]
    size = 1 << n
    masks = np.arange(size, dtype=np.uint64)
    if kind in (Kind.PLAIN, Kind.INDEXER):
        ok = np.ones((size, size), dtype=bool)
    elif kind in (Kind.WEAK, Kind.WEAK_K_UNIFORM):
        ok = (pa == 1) | (pb == 1)
    elif kind is Kind.WEAK_LITERAL:
        ok = (ps == pa) | (ps == pb)
    elif kind in (Kind.STRONG, Kind.STRONG_K_UNIFORM):
        # disjoint modular difference sets <=> all |a||b| sums distinct
        ok = (diff[:, None] & diff[None, :]) == 0
    elif kind is Kind.MAXIMAL:
        # implies the weaker necessary test |a||b| >= n
        ok = table == np.uint64(size - 1)
    elif kind is Kind.EXQUISITE:
        ok = ((table & masks[:, None]) == masks[:, None]) & ((table & masks[None, :]) == masks[None, :])
    else:  # pragma: no cover
        raise AssertionError(kind)
    if spec.k is not None:
        ok = ok & (ps == spec.k)
    if spec.forbid_monocardinal_edges:
        ok = ok & (ps > 1)
    ok[0, :] = False
    ok[:, 0] = False
    return ok


def _rows_as_ints(ok: np.ndarray) -> list[int]:
    """Row i of the result has bit j set iff ok[i+1, j+1] (label indices)."""
    sub = np.ascontiguousarray(ok[1:, 1:])
    packed = np.packbits(sub, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


# ------------------------------------------------------------------ search


def _sum_bits(a: int, b: int, n: int) -> int:
    out = 0
    x = 0
    while a:
        if a & 1:
            out |= _rotl(b, x, n)
        a >>= 1
        x += 1
    return out


class _OutOfBudget(Exception):
    pass


def vertex_order(g: Graph) -> list[int]:
    return sorted(range(g.vertex_count), key=lambda v: (-g.degree(v), v))


class _Searcher:
    def __init__(self, g: Graph, n: int, spec: PropertySpec, budget: Budget):
        self.g, self.n, self.spec, self.budget = g, n, spec, budget
        self.nodes = 0
        self.start = time.perf_counter()
        self.order = vertex_order(g)
        self.nlabels = (1 << n) - 1
        ok = pair_table(n, spec)
        self.compat = None if ok is None else _rows_as_ints(ok)
        self.indexer = spec.kind is Kind.INDEXER

        full = (1 << self.nlabels) - 1
        dom = [full] * g.vertex_count
        if self.compat is not None:
            has_partner = sum(1 << i for i, row in enumerate(self.compat) if row & ~(1 << i))
            for v in range(g.vertex_count):
                if g.adjacency[v]:
                    dom[v] = has_partner
        if spec.kind is Kind.WEAK and not spec.forbid_monocardinal_edges:
            singletons = sum(1 << ((1 << x) - 1) for x in range(n))
            for v in covering_number(g)[1]:
                dom[v] &= singletons
        self.dom = dom
        self.assigned = [-1] * g.vertex_count
        self.used = 0
        self.seen_edges = set()

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget.nodes:
            raise _OutOfBudget
        if self.nodes & 1023 == 0 and time.perf_counter() - self.start > self.budget.seconds:
            raise _OutOfBudget

    def _hall_ok(self, rest) -> bool:
        if not rest:
            return True
        free = ~self.used
        doms = [self.dom[w] & free for w in rest]
        union = 0
        for d in doms:
            if d == 0:
                return False
            union |= d
        if union.bit_count() < len(doms):
            return False
        for d in set(doms):
            if d == union:
                continue
            cnt = 0
            for e in doms:
                if e & ~d == 0:
                    cnt += 1
            if cnt > d.bit_count():
                return False
        return True

    def run(self) -> bool:
        if not self._hall_ok(self.order):
            return False
        return self._rec(0)

    def _rec(self, depth: int) -> bool:
        g, order = self.g, self.order
        if depth == len(order):
            return True
        v = order[depth]
        cand = self.dom[v] & ~self.used
        nbrs = g.neighbors(v)
        while cand:
            low = cand & -cand
            cand ^= low
            i = low.bit_length() - 1
            self._tick()

            new_edges = []
            if self.indexer:
                mask = i + 1
                clash = False
                for w in nbrs:
                    if self.assigned[w] >= 0:
                        e = _sum_bits(mask, self.assigned[w] + 1, self.n)
                        if e in self.seen_edges or e in new_edges:
                            clash = True
                            break
                        new_edges.append(e)
                if clash:
                    continue

            saved = []
            dead = False
            if self.compat is not None:
                row = self.compat[i]
                taken = self.used | low
                for w in nbrs:
                    if self.assigned[w] < 0:
                        nd = self.dom[w] & row
                        if nd & ~taken == 0:
                            dead = True
                            break
                        if nd != self.dom[w]:
                            saved.append((w, self.dom[w]))
                            self.dom[w] = nd
            if not dead:
                self.used |= low
                self.assigned[v] = i
                self.seen_edges.update(new_edges)
                if self._hall_ok(order[depth + 1:]) and self._rec(depth + 1):
                    return True
                self.seen_edges.difference_update(new_edges)
                self.assigned[v] = -1
                self.used ^= low
            for w, d in saved:
                self.dom[w] = d
        return False

    def witness(self) -> Labeling:
        return Labeling.from_masks(self.g, self.n, [i + 1 for i in self.assigned])


def exists_labeling(
    g: Graph,
    n: int,
    spec: PropertySpec,
    budget: Budget | None = None,
    *,
    prune: bool = True,
) -> SearchOutcome:
    """Search for a labeling of ``g`` over Z_n with property ``spec``.

    FOUND carries the lexicographically least witness (in the restricted
    space for WEAK, see the module docstring); EXHAUSTED proves that none
    exists over this n.  ``prune=False`` runs a plain enumeration of injective
    assignments checked only at the leaves, used to validate the pruning.
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidInput(f"modulus must be a positive integer, got {n!r}")
    if g.vertex_count < 1:
        raise InvalidInput("graph must have at least one vertex")
    budget = budget or Budget()
    if not prune:
        return _brute_force(g, n, spec, budget)
    s = _Searcher(g, n, spec, budget)
    try:
        found = s.run()
    except _OutOfBudget:
        return SearchOutcome(Status.BUDGET_EXCEEDED, None, s.nodes, time.perf_counter() - s.start)
    elapsed = time.perf_counter() - s.start
    if not found:
        return SearchOutcome(Status.EXHAUSTED, None, s.nodes, elapsed)
    w = s.witness()
    if not satisfies(w, spec):  # pragma: no cover - would be a pruning bug
        raise AssertionError(f"search produced a witness failing {spec}: {w}")
    return SearchOutcome(Status.FOUND, w, s.nodes, elapsed)


def _brute_force(g, n, spec, budget):
    start = time.perf_counter()
    order = vertex_order(g)
    nodes = 0
    for combo in permutations(range(1, 1 << n), g.vertex_count):
        nodes += 1
        if nodes > budget.nodes:
            return SearchOutcome(Status.BUDGET_EXCEEDED, None, nodes, time.perf_counter() - start)
        masks = [0] * g.vertex_count
        for v, b in zip(order, combo):
            masks[v] = b
        lab = Labeling.from_masks(g, n, masks)
        if satisfies(lab, spec):
            return SearchOutcome(Status.FOUND, lab, nodes, time.perf_counter() - start)
    return SearchOutcome(Status.EXHAUSTED, None, nodes, time.perf_counter() - start)


def min_modulus(
    g: Graph,
    spec: PropertySpec,
    n_max: int | None = None,
    budget: Budget | None = None,
    n_min: int = 1,
) -> MinResult:
    """Try n = n_min, n_min + 1, ..., n_max and stop at the first FOUND."""
    if n_max is None:
        n_max = g.vertex_count + 2
    if n_max < 1:
        raise InvalidInput(f"n_max must be positive, got {n_max}")
    per_n = []
    for n in range(n_min, n_max + 1):
        out = exists_labeling(g, n, spec, budget)
        per_n.append((n, out))
        if out.status is Status.FOUND:
            exact = n_min == 1 and all(o.status is Status.EXHAUSTED for _, o in per_n[:-1])
            return MinResult(n, per_n, exact)
    return MinResult(None, per_n, False)


# --------------------------------------------------------------- formulas


def sigma_formula(m: int) -> int:
    """1 + floor(log2 m), via bit length."""
    if not isinstance(m, int) or m < 1:
        raise InvalidInput(f"vertex count must be a positive integer, got {m!r}")
    return m.bit_length()


def _smallest_r(pred) -> int:
    r = 1
    while not pred(r):
        r += 1
    return r


def weak_number_formula(g: Graph) -> int:
    """max(alpha, r) with r the least positive integer such that 2^r - r - 1 >= beta."""
    alpha, _ = covering_number(g)
    beta, _ = independence_number(g)
    r = _smallest_r(lambda r: 2**r - r - 1 >= beta)
    return max(alpha, r)


def weak_uniform_min_formula(g: Graph, k: int) -> int:
    """Ground-set size predicted for a weakly k-uniform labeling.

    For k < alpha: max(alpha, r) with r least such that C(r, k) >= beta.
    For k >= alpha: the least n with C(n, k) >= beta.
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidInput(f"k must be a positive integer, got {k!r}")
    alpha, _ = covering_number(g)
    beta, _ = independence_number(g)
    r = _smallest_r(lambda r: comb(r, k) >= beta)
    if k >= alpha:
        return r
    return max(alpha, r)
