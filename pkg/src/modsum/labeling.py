"""Set-labelings of graphs by subsets of Z_n, and their classification.

Every predicate here works straight from the definitions (sumsets computed
per edge), so it can serve as the independent check for the search code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidInput, InvalidLabeling
from .graph import Graph
from .zn import ZnSet, modular_difference_set, paper_difference_set, sumset


@dataclass(frozen=True)
class Labeling:
    graph: Graph
    modulus: int
    labels: tuple[ZnSet, ...]

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.graph.vertex_count:
            raise InvalidLabeling(f"{len(labels)} labels for {self.graph.vertex_count} vertices")
        for v, lab in enumerate(labels):
            if not isinstance(lab, ZnSet):
                raise InvalidLabeling(f"label of vertex {v} is not a ZnSet")
            if lab.modulus != self.modulus:
                raise InvalidLabeling(f"label of vertex {v} lives in Z_{lab.modulus}, expected Z_{self.modulus}")
            if not lab:
                raise InvalidLabeling(f"label of vertex {v} is empty")

    @classmethod
    def from_masks(cls, graph: Graph, modulus: int, masks: Sequence[int]) -> Labeling:
        return cls(graph, modulus, tuple(ZnSet(modulus, b) for b in masks))

    @classmethod
    def from_lists(cls, graph: Graph, modulus: int, members: Sequence[Sequence[int]]) -> Labeling:
        return cls(graph, modulus, tuple(ZnSet.from_members(modulus, m) for m in members))

    def edge_label(self, u: int, v: int) -> ZnSet:
        return induced_edge_label(self, u, v)

    def edge_labels(self) -> dict[tuple[int, int], ZnSet]:
        return {(u, v): sumset(self.labels[u], self.labels[v]) for u, v in self.graph.edges}

    def relabel(self, perm) -> Labeling:
        """Move the label of vertex v to vertex ``perm[v]`` of the relabeled graph."""
        labels = [None] * len(self.labels)
        for v, lab in enumerate(self.labels):
            labels[perm[v]] = lab
        return Labeling(self.graph.relabel(perm), self.modulus, tuple(labels))


def induced_edge_label(lab: Labeling, u: int, v: int) -> ZnSet:
    if not lab.graph.has_edge(u, v):
        raise InvalidInput(f"({u}, {v}) is not an edge")
    return sumset(lab.labels[u], lab.labels[v])


def is_injective_labeling(lab: Labeling) -> tuple[bool, tuple[int, int] | None]:
    first = {}
    for v, s in enumerate(lab.labels):
        if s.bits in first:
            return False, (first[s.bits], v)
        first[s.bits] = v
    return True, None


def _require_injective(lab: Labeling):
    ok, clash = is_injective_labeling(lab)
    if not ok:
        raise InvalidLabeling(f"vertices {clash[0]} and {clash[1]} share the label {lab.labels[clash[0]]}")


def is_indexer(lab: Labeling) -> tuple[bool, tuple[tuple[int, int], tuple[int, int]] | None]:
    """True iff the induced edge labels are pairwise distinct."""
    _require_injective(lab)
    first = {}
    for e, s in lab.edge_labels().items():
        if s.bits in first:
            return False, (first[s.bits], e)
        first[s.bits] = e
    return True, None


# ------------------------------------------------------------ edge predicates


def edge_is_weak(a: ZnSet, b: ZnSet, s: ZnSet | None = None) -> bool:
    s = s if s is not None else sumset(a, b)
    return len(s) in (len(a), len(b))


def edge_is_weak_singleton(a: ZnSet, b: ZnSet) -> bool:
    return len(a) == 1 or len(b) == 1


def edge_is_strong(a: ZnSet, b: ZnSet, s: ZnSet | None = None) -> bool:
    s = s if s is not None else sumset(a, b)
    return len(s) == len(a) * len(b)


def edge_strong_by_differences(a: ZnSet, b: ZnSet) -> bool:
    """Strong-edge test through modular difference sets."""
    return (modular_difference_set(a).bits & modular_difference_set(b).bits) == 0 and len(a) * len(b) <= a.modulus


def edge_strong_absolute_differences(a: ZnSet, b: ZnSet) -> bool:
    """The absolute-value difference-set criterion; disagrees with the true one in Z_n."""
    return not (paper_difference_set(a) & paper_difference_set(b))


def edge_is_maximal(a: ZnSet, b: ZnSet, s: ZnSet | None = None) -> bool:
    s = s if s is not None else sumset(a, b)
    return s.is_full


def edge_is_exquisite(a: ZnSet, b: ZnSet, s: ZnSet | None = None) -> bool:
    s = s if s is not None else sumset(a, b)
    return a.issubset(s) and b.issubset(s)


def covered_by_sums(a: ZnSet, b: ZnSet, *, distinct: bool = False) -> bool:
    """Every x in a equals y + z (mod n) for some y in a, z in b.

    With ``distinct=True`` the summand y must differ from x, which is the
    stricter elementwise reading; it is not equivalent to ``a`` being a
    subset of ``a + b`` (``{0} + {0}`` is the smallest counterexample).
    """
    n = a.modulus
    bm = b.members
    for x in a.members:
        if not any((x - z) % n in a and (not distinct or (x - z) % n != x) for z in bm):
            return False
    return True


# ------------------------------------------------------- labeling predicates


def _first_bad_edge(lab: Labeling, pred):
    g, L = lab.graph, lab.labels
    for u, v in g.edges:
        if not pred(L[u], L[v]):
            return (u, v)
    return None


def is_weak(lab: Labeling) -> bool:
    return _first_bad_edge(lab, edge_is_weak) is None


def is_weak_paper_form(lab: Labeling) -> bool:
    return _first_bad_edge(lab, edge_is_weak_singleton) is None


def is_strong(lab: Labeling) -> bool:
    return _first_bad_edge(lab, edge_is_strong) is None


def strong_paper_criterion(lab: Labeling) -> bool:
    return _first_bad_edge(lab, edge_strong_absolute_differences) is None


def is_maximal(lab: Labeling) -> bool:
    return _first_bad_edge(lab, edge_is_maximal) is None


def is_exquisite(lab: Labeling) -> bool:
    return _first_bad_edge(lab, edge_is_exquisite) is None


def exquisite_by_sums(lab: Labeling, *, distinct: bool = False) -> bool:
    """Exquisiteness evaluated elementwise through :func:`covered_by_sums`."""
    return _first_bad_edge(
        lab, lambda a, b: covered_by_sums(a, b, distinct=distinct) and covered_by_sums(b, a, distinct=distinct)
    ) is None


def edge_uniformity(lab: Labeling) -> int | None:
    """Common edge-label size k, or None when sizes differ or there are no edges."""
    sizes = {len(s) for s in lab.edge_labels().values()}
    return sizes.pop() if len(sizes) == 1 else None


def vertex_uniformity(lab: Labeling) -> int | None:
    sizes = {len(s) for s in lab.labels}
    return sizes.pop() if len(sizes) == 1 else None


def monocardinal_vertices(lab: Labeling) -> frozenset[int]:
    return frozenset(v for v, s in enumerate(lab.labels) if len(s) == 1)


def monocardinal_edges(lab: Labeling) -> frozenset[tuple[int, int]]:
    return frozenset(e for e, s in lab.edge_labels().items() if len(s) == 1)


@dataclass(frozen=True)
class ClassificationReport:
    is_injective: bool
    is_indexer: bool
    weak: bool
    weak_paper_form: bool
    edge_uniform_k: int | None
    vertex_uniform_l: int | None
    strong: bool
    strong_paper_criterion: bool
    maximal: bool
    exquisite: bool
    monocardinal_vertices: frozenset[int]
    monocardinal_edges: frozenset[tuple[int, int]]
    # flag name -> violating edge, vertex or pair of edges
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "is_injective": self.is_injective,
            "is_indexer": self.is_indexer,
            "weak": self.weak,
            "weak_paper_form": self.weak_paper_form,
            "edge_uniform_k": self.edge_uniform_k,
            "vertex_uniform_l": self.vertex_uniform_l,
            "strong": self.strong,
            "strong_paper_criterion": self.strong_paper_criterion,
            "maximal": self.maximal,
            "exquisite": self.exquisite,
            "monocardinal_vertices": sorted(self.monocardinal_vertices),
            "monocardinal_edges": [list(e) for e in sorted(self.monocardinal_edges)],
            "witnesses": {k: _jsonable(v) for k, v in sorted(self.witnesses.items())},
        }
        return out


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    return x


def classify(lab: Labeling) -> ClassificationReport:
    _require_injective(lab)
    g, L = lab.graph, lab.labels
    sums = lab.edge_labels()
    witnesses = {}

    def scan(name, pred):
        for (u, v), s in sums.items():
            if not pred(L[u], L[v], s):
                witnesses[name] = (u, v)
                return False
        return True

    weak = scan("weak", edge_is_weak)
    weak_single = scan("weak_paper_form", lambda a, b, s: edge_is_weak_singleton(a, b))
    strong = scan("strong", edge_is_strong)
    strong_abs = scan("strong_paper_criterion", lambda a, b, s: edge_strong_absolute_differences(a, b))
    maximal = scan("maximal", edge_is_maximal)
    exquisite = scan("exquisite", edge_is_exquisite)

    indexer, clash = is_indexer(lab)
    if not indexer:
        witnesses["is_indexer"] = clash

    k = {len(s) for s in sums.values()}
    edge_k = k.pop() if len(k) == 1 else None
    if edge_k is None and sums:
        first = next(iter(sums))
        other = next(e for e, s in sums.items() if len(s) != len(sums[first]))
        witnesses["edge_uniform_k"] = (first, other)
    vl = vertex_uniformity(lab)
    if vl is None and L:
        witnesses["vertex_uniform_l"] = (0, next(v for v in range(g.vertex_count) if len(L[v]) != len(L[0])))

    return ClassificationReport(
        is_injective=True,
        is_indexer=indexer,
        weak=weak,
        weak_paper_form=weak_single,
        edge_uniform_k=edge_k,
        vertex_uniform_l=vl,
        strong=strong,
        strong_paper_criterion=strong_abs,
        maximal=maximal,
        exquisite=exquisite,
        monocardinal_vertices=monocardinal_vertices(lab),
        monocardinal_edges=frozenset(e for e, s in sums.items() if len(s) == 1),
        witnesses=witnesses,
    )
