"""Registry of checkable claims about modular sumset labelings, and the audit harness.

Each claim pairs a predicted statement with a brute-force or exact-search
oracle over a bounded instance range.  Verdicts:

* ``CONFIRMED_EXHAUSTIVE``: every instance in range was decided and agreed;
* ``CONFIRMED_WITHIN_BUDGET``: no disagreement, but some instance was only
  checked up to a modulus bound (a "no labeling for any n" direction) or a
  predicted labeling was not found within range;
* ``REFUTED``: a disagreement, with a replayable witness;
* ``INCONCLUSIVE``: nothing could be decided.

Weak-related claims are evaluated under both readings of "weak": the
singleton-end form (every edge has a singleton endpoint) decides the status,
and the literal cardinality form is reported in ``details``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations
from math import isqrt
from typing import Callable

import numpy as np

from . import _kernels
from .errors import InvalidInput
from .graph import (
    Graph,
    canonical_form,
    complete,
    complete_bipartite,
    covering_number,
    cycle,
    enumerate_graphs,
    helm,
    is_bipartite,
    ladder,
    path,
    petersen,
    star,
    wheel,
)
from .io import graph_from_json, labeling_from_json, labeling_to_json
from .labeling import (
    Labeling,
    classify,
    covered_by_sums,
    edge_is_strong,
    edge_strong_absolute_differences,
    edge_strong_by_differences,
    is_exquisite,
    is_maximal,
    is_weak,
    is_weak_paper_form,
)
from .search import (
    Budget,
    Kind,
    PropertySpec,
    SearchOutcome,
    Status,
    exists_labeling,
    min_modulus,
    satisfies,
    sigma_formula,
    weak_number_formula,
    weak_uniform_min_formula,
)
from .zn import (
    ZnSet,
    check_bounds,
    is_arithmetic_progression,
    modular_difference_set,
    paper_difference_set,
    stabilizer,
    sumset,
)


class Verdict(enum.Enum):
    CONFIRMED_EXHAUSTIVE = "CONFIRMED_EXHAUSTIVE"
    CONFIRMED_WITHIN_BUDGET = "CONFIRMED_WITHIN_BUDGET"
    REFUTED = "REFUTED"
    INCONCLUSIVE = "INCONCLUSIVE"


class Expectation(enum.Enum):
    CONFIRM = "confirm"
    REFUTE = "refute"
    OPEN = "open"


@dataclass(frozen=True)
class AuditParams:
    max_vertices: int = 5
    max_modulus: int = 6
    family_min: int = 3
    family_max: int = 8
    # labeling enumerations (every labeling of every graph) are far larger
    label_max_vertices: int = 4
    label_max_modulus: int = 4
    uniform_ks: tuple[int, ...] = (2, 3)
    cd_primes: tuple[int, ...] = (2, 3, 5, 7, 11)
    star_max_leaves: int = 6
    budget: Budget = field(default_factory=Budget)


@dataclass
class ClaimOutcome:
    claim_id: str
    status: Verdict
    witness: dict | None = None
    instances_checked: int = 0
    budget_spent: int = 0
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "status": self.status.value,
            "witness": self.witness,
            "instances_checked": self.instances_checked,
            "budget_spent": self.budget_spent,
            "details": self.details,
        }


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    expected: Expectation
    run: Callable[[AuditParams], ClaimOutcome]
    replay: Callable[[dict], bool]

    @property
    def anchor(self) -> tuple[str, str]:
        return anchors()[self.id]


@lru_cache(maxsize=1)
def anchors() -> dict[str, tuple[str, str]]:
    """claim id -> (location, verbatim quote), from the bundled anchors.txt."""
    text = resources.files("modsum").joinpath("anchors.txt").read_text(encoding="utf-8")
    out = {}
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        cid, loc, quote = (x.strip() for x in line.split("|", 2))
        if cid in out:
            raise ValueError(f"duplicate anchor for {cid}")
        out[cid] = (loc, quote)
    return out


# ---------------------------------------------------------------- helpers


class _Tally:
    def __init__(self):
        self.instances = 0
        self.nodes = 0
        self.witness = None
        self.unbounded = 0  # confirmed only up to a modulus bound
        self.undetermined = 0  # predicted existence not found in range

    def refute(self, witness):
        if self.witness is None:
            self.witness = witness

    def search(self, g, n, spec, budget):
        out = _cached_search(g, n, spec, budget)
        self.nodes += out.nodes_expanded
        return out

    def outcome(self, cid, **details) -> ClaimOutcome:
        if self.witness is not None:
            status = Verdict.REFUTED
        elif self.instances == 0 or self.undetermined >= self.instances:
            status = Verdict.INCONCLUSIVE
        elif self.unbounded or self.undetermined:
            status = Verdict.CONFIRMED_WITHIN_BUDGET
        else:
            status = Verdict.CONFIRMED_EXHAUSTIVE
        details = dict(details)
        if self.unbounded:
            details["checked_only_up_to_modulus_bound"] = self.unbounded
        if self.undetermined:
            details["undetermined_instances"] = self.undetermined
        return ClaimOutcome(cid, status, self.witness, self.instances, self.nodes, details)


@lru_cache(maxsize=4096)
def _canon(g: Graph):
    return canonical_form(g)


_SEARCH_CACHE: dict = {}


def _cached_search(g: Graph, n: int, spec: PropertySpec, budget: Budget) -> SearchOutcome:
    """exists_labeling memoised per isomorphism class; witnesses are mapped back to ``g``."""
    if g.vertex_count > 7:
        return exists_labeling(g, n, spec, budget)
    mask, perm = _canon(g)
    key = (g.vertex_count, mask, n, spec, budget)
    out = _SEARCH_CACHE.get(key)
    if out is None:
        out = exists_labeling(g.relabel(perm), n, spec, budget)
        _SEARCH_CACHE[key] = out
        nodes = out.nodes_expanded
    else:
        nodes = 0
    witness = None
    if out.witness is not None:
        masks = [out.witness.labels[perm[v]].bits for v in range(g.vertex_count)]
        witness = Labeling.from_masks(g, n, masks)
        assert satisfies(witness, spec)
    return SearchOutcome(out.status, witness, nodes, out.elapsed)


def clear_cache():
    _SEARCH_CACHE.clear()


def _graphs(p: AuditParams, max_vertices=None):
    top = p.max_vertices if max_vertices is None else max_vertices
    for m in range(2, top + 1):
        yield from enumerate_graphs(m, require_no_isolated=True)


def _pairs(n, *, distinct=False):
    sets = [ZnSet(n, b) for b in range(1, 1 << n)]
    for a in sets:
        for b in sets:
            if distinct and a == b:
                continue
            yield a, b


def _pair_witness(a: ZnSet, b: ZnSet, **extra) -> dict:
    return {"type": "set_pair", "n": a.modulus, "A": list(a.members), "B": list(b.members), **extra}


def _lab_witness(lab: Labeling, **extra) -> dict:
    return {"type": "labeling", "labeling": labeling_to_json(lab), **extra}


def _none_witness(g: Graph, n: int, spec: PropertySpec, **extra) -> dict:
    return {"type": "nonexistence", "graph": g.to_json(), "n": n, "spec": spec.to_json(), **extra}


def _wpair(w):
    a = ZnSet.from_members(w["n"], w["A"])
    b = ZnSet.from_members(w["n"], w["B"])
    return a, b


def _spec_from_json(obj) -> PropertySpec:
    return PropertySpec(Kind(obj["kind"]), obj.get("k"), obj.get("forbid_monocardinal_edges", False))


def _replay_nonexistence(w) -> bool:
    g = graph_from_json(w["graph"])
    return exists_labeling(g, w["n"], _spec_from_json(w["spec"])).status is Status.EXHAUSTED


def _is_square(k: int) -> bool:
    return isqrt(k) ** 2 == k


def _is_star(g: Graph) -> bool:
    m = g.vertex_count
    if m < 2 or len(g.edges) != m - 1:
        return False
    return any(g.degree(v) == m - 1 for v in range(m))


def _divisor_pairs(k: int) -> int:
    return sum(1 for r in range(1, isqrt(k) + 1) if k % r == 0)


def _nonbipartite_components(g: Graph) -> int:
    count = 0
    for comp in g.components():
        idx = {v: i for i, v in enumerate(comp)}
        sub = Graph(len(comp), ((idx[u], idx[v]) for u, v in g.edges if u in idx))
        if is_bipartite(sub) is None:
            count += 1
    return count


WEAK = PropertySpec(Kind.WEAK)
PLAIN = PropertySpec(Kind.PLAIN)
INDEXER = PropertySpec(Kind.INDEXER)


# ------------------------------------------------------------ set-level claims


def _run_t11(p):
    t = _Tally()
    violations = 0
    full_set = []
    for n in range(1, p.max_modulus + 1):
        for a, b in _pairs(n):
            t.instances += 1
            if not check_bounds(a, b).paper_lower_holds:
                violations += 1
                t.refute(_pair_witness(a, b))
        z = ZnSet.full(n)
        if not check_bounds(z, z).paper_lower_holds:
            full_set.append(n)
    if 4 in full_set:
        # report the full-set pair Z_4 + Z_4 (|A+B| = 4 < 7) as the illustrative witness
        z4 = ZnSet.full(4)
        t.witness = _pair_witness(z4, z4)
    return t.outcome("CL-T11", violations=violations, full_set_violations=full_set)


def _replay_t11(w):
    a, b = _wpair(w)
    return not check_bounds(a, b).paper_lower_holds


def _run_cd(p):
    t = _Tally()
    per_prime = {}
    for n in p.cd_primes:
        if n > _kernels.MAX_TABLE_MODULUS:
            raise InvalidInput(f"prime {n} exceeds the table limit {_kernels.MAX_TABLE_MODULUS}")
        sizes = _kernels.sumset_size_table(n).astype(np.int64)[1:, 1:]
        pc = _kernels.popcounts(n).astype(np.int64)[1:]
        lower = np.minimum(n, pc[:, None] + pc[None, :] - 1)
        upper = np.minimum(n, pc[:, None] * pc[None, :])
        bad = (sizes < lower) | (sizes > upper)
        t.instances += bad.size
        per_prime[str(n)] = int(bad.sum())
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            t.refute(_pair_witness(ZnSet(n, i + 1), ZnSet(n, j + 1)))
    return t.outcome("CL-CD", violations_by_prime=per_prime)


def _replay_cd(w):
    a, b = _wpair(w)
    r = check_bounds(a, b)
    return r.actual < r.lower_safe or r.actual > r.upper


def _ap_match(a: ZnSet, b: ZnSet) -> bool:
    da, db = is_arithmetic_progression(a), is_arithmetic_progression(b)
    if da is None or db is None:
        return False
    # a singleton is a progression of every common difference
    return da == 0 or db == 0 or da == db


def _cyclic_ap_differences(a: ZnSet) -> set[int]:
    """Differences d in [1, n-1] with a = {x, x+d, ..., x+(k-1)d} mod n for some x."""
    n, k = a.modulus, len(a)
    out = set()
    for d in range(1, n):
        for x in a.members:
            if {(x + i * d) % n for i in range(k)} == set(a.members):
                out.add(d)
                break
    return out


def _cyclic_ap_match(a: ZnSet, b: ZnSet) -> bool:
    if len(a) == 1 or len(b) == 1:
        return bool(_cyclic_ap_differences(a if len(b) == 1 else b)) or len(a) == len(b) == 1
    return bool(_cyclic_ap_differences(a) & _cyclic_ap_differences(b))


def _run_apeq(p):
    t = _Tally()
    eq_not_ap = ap_not_eq = cyclic = 0
    for n in range(1, p.max_modulus + 1):
        for a, b in _pairs(n):
            if len(a) + len(b) - 1 >= n:
                continue  # saturated: the sumset cannot exceed Z_n
            t.instances += 1
            eq = len(sumset(a, b)) == len(a) + len(b) - 1
            ap = _ap_match(a, b)
            cyclic += eq != _cyclic_ap_match(a, b)
            if eq != ap:
                eq_not_ap += eq
                ap_not_eq += ap
                t.refute(_pair_witness(a, b, minimal_size=eq, same_difference_progressions=ap))
    return t.outcome(
        "CL-APEQ",
        minimal_but_not_progressions=eq_not_ap,
        progressions_but_not_minimal=ap_not_eq,
        cyclic_progression_mismatches=cyclic,
    )


def _replay_apeq(w):
    a, b = _wpair(w)
    return (len(sumset(a, b)) == len(a) + len(b) - 1) != _ap_match(a, b)


def _t23_holds(a, b):
    s = len(sumset(a, b))
    return len(a) + len(b) - 1 <= s <= len(a) * len(b) <= a.modulus


def _run_t23(p):
    t = _Tally()
    lower_fails = product_exceeds_n = upper_fails = 0
    for n in range(1, p.max_modulus + 1):
        for a, b in _pairs(n, distinct=True):
            t.instances += 1
            s = len(sumset(a, b))
            lower_fails += len(a) + len(b) - 1 > s
            upper_fails += s > len(a) * len(b)
            product_exceeds_n += len(a) * len(b) > n
            if not _t23_holds(a, b):
                t.refute(_pair_witness(a, b))
    return t.outcome(
        "CL-T23", lower_bound_fails=lower_fails, sumset_exceeds_product=upper_fails, product_exceeds_n=product_exceeds_n
    )


def _replay_t23(w):
    return not _t23_holds(*_wpair(w))


def _p31_literal(a, b):
    return (a.is_full and b.is_full) or len(b) == 1


def _p31_true(a, b):
    # |A+B| = |A| iff B lies in one coset of the stabiliser of A
    b0 = b.members[0]
    return b.translate(-b0).issubset(stabilizer(a))


def _run_p31(p):
    t = _Tally()
    mismatches = moreover_mismatches = true_mismatches = coset_cases = 0
    for n in range(1, p.max_modulus + 1):
        for a, b in _pairs(n):
            t.instances += 1
            s = len(sumset(a, b))
            lhs = s == len(a)
            if lhs != _p31_literal(a, b):
                mismatches += 1
                t.refute(_pair_witness(a, b, sumset_size=s))
            both = s == len(a) == len(b)
            moreover_mismatches += both != (a.is_full and b.is_full)
            true_mismatches += lhs != _p31_true(a, b)
            coset_cases += lhs and len(b) > 1 and not a.is_full
    return t.outcome(
        "CL-P31",
        literal_mismatches=mismatches,
        equal_size_clause_mismatches=moreover_mismatches,
        stabilizer_characterization_mismatches=true_mismatches,
        coset_cases=coset_cases,
    )


def _replay_p31(w):
    a, b = _wpair(w)
    return (len(sumset(a, b)) == len(a)) != _p31_literal(a, b)


def _run_str(p):
    t = _Tally()
    literal = modular = 0
    for n in range(1, p.max_modulus + 1):
        for a, b in _pairs(n, distinct=True):
            strong = edge_is_strong(a, b)
            modular += strong != edge_strong_by_differences(a, b)
            if len(a) * len(b) > n:
                continue
            t.instances += 1
            if strong != edge_strong_absolute_differences(a, b):
                literal += 1
                t.refute(_pair_witness(a, b, sumset_size=len(sumset(a, b))))
    return t.outcome("CL-STR", absolute_difference_mismatches=literal, modular_difference_mismatches=modular)


def _replay_str(w):
    a, b = _wpair(w)
    return len(a) * len(b) <= a.modulus and edge_is_strong(a, b) != edge_strong_absolute_differences(a, b)


def _maxc_predicted(a, b, dset):
    n = a.modulus
    if dset(a) & dset(b):
        return len(a) + len(b) >= n
    return len(a) * len(b) >= n


def _abs_d(a):
    return paper_difference_set(a)


def _mod_d(a):
    return set(modular_difference_set(a).members)


def _run_maxc(p):
    t = _Tally()
    literal = modular = 0
    for n in range(1, p.max_modulus + 1):
        for a, b in _pairs(n, distinct=True):
            t.instances += 1
            full = sumset(a, b).is_full
            modular += full != _maxc_predicted(a, b, _mod_d)
            if full != _maxc_predicted(a, b, _abs_d):
                literal += 1
                t.refute(_pair_witness(a, b, maximal=full))
    return t.outcome("CL-MAXC", absolute_difference_mismatches=literal, modular_difference_mismatches=modular)


def _replay_maxc(w):
    a, b = _wpair(w)
    return sumset(a, b).is_full != _maxc_predicted(a, b, _abs_d)


def _run_esub(p):
    t = _Tally()
    literal = plain = 0
    for n in range(1, p.max_modulus + 1):
        for a, b in _pairs(n):
            t.instances += 1
            sub = a.issubset(sumset(a, b))
            plain += sub != covered_by_sums(a, b)
            if sub != covered_by_sums(a, b, distinct=True):
                literal += 1
                t.refute(_pair_witness(a, b))
    return t.outcome("CL-ESUB", distinct_summand_mismatches=literal, any_summand_mismatches=plain)


def _replay_esub(w):
    a, b = _wpair(w)
    return a.issubset(sumset(a, b)) != covered_by_sums(a, b, distinct=True)


def _edge_exquisite(a, b):
    s = sumset(a, b)
    return a.issubset(s) and b.issubset(s)


def _run_e0(p):
    t = _Tally()
    for n in range(1, p.max_modulus + 1):
        for a, b in _pairs(n, distinct=True):
            if 0 in a and 0 in b:
                t.instances += 1
                if not _edge_exquisite(a, b):
                    t.refute(_pair_witness(a, b))
    return t.outcome("CL-E0")


def _replay_e0(w):
    a, b = _wpair(w)
    return 0 in a and 0 in b and not _edge_exquisite(a, b)


def _run_maxe(p):
    t = _Tally()
    for n in range(1, p.max_modulus + 1):
        for a, b in _pairs(n, distinct=True):
            if sumset(a, b).is_full:
                t.instances += 1
                if not _edge_exquisite(a, b):
                    t.refute(_pair_witness(a, b))
    return t.outcome("CL-MAXE")


def _replay_maxe(w):
    a, b = _wpair(w)
    return sumset(a, b).is_full and not _edge_exquisite(a, b)


# ------------------------------------------------------------- graph claims


def _run_t24(p):
    t = _Tally()
    for g in _graphs(p):
        t.instances += 1
        m = g.vertex_count
        if t.search(g, sigma_formula(m), PLAIN, p.budget).status is not Status.FOUND:
            t.refute(_none_witness(g, sigma_formula(m), PLAIN))
            continue
        found = False
        for n in range(1, max(p.max_modulus, m + 2) + 1):
            if t.search(g, n, INDEXER, p.budget).status is Status.FOUND:
                found = True
                break
        t.undetermined += not found
    return t.outcome("CL-T24")


def _replay_t24(w):
    return _replay_nonexistence(w)


def family_instances(max_vertices: int = 12):
    """Every generated family member with at most ``max_vertices`` vertices, all connected."""
    out = []
    for m in range(1, max_vertices + 1):
        out.append(("path", m, path(m)))
    for m in range(3, max_vertices + 1):
        out.append(("cycle", m, cycle(m)))
    for m in range(3, max_vertices):
        out.append(("wheel", m, wheel(m)))
    for m in range(3, (max_vertices - 1) // 2 + 1):
        out.append(("helm", m, helm(m)))
    for m in range(2, max_vertices // 2 + 1):
        out.append(("ladder", m, ladder(m)))
    for m in range(1, max_vertices + 1):
        out.append(("complete", m, complete(m)))
    for m in range(1, max_vertices):
        out.append(("star", m, star(m)))
    for a in range(1, max_vertices):
        for b in range(a, max_vertices - a + 1):
            out.append(("complete_bipartite", (a, b), complete_bipartite(a, b)))
    if max_vertices >= 10:
        out.append(("petersen", None, petersen()))
    return out


def _run_t26(p):
    t = _Tally()
    rows = []
    instances = [("enumerated", g.edge_mask(), g) for g in _graphs(p)] + family_instances(12)
    for name, size, g in instances:
        t.instances += 1
        r = min_modulus(g, PLAIN, budget=p.budget)
        t.nodes += sum(o.nodes_expanded for _, o in r.per_n)
        expected = sigma_formula(g.vertex_count)
        if not r.exact:
            t.undetermined += 1
            continue
        if r.value != expected:
            if r.value < expected:
                t.refute(_lab_witness(r.witness, predicted=expected))
            else:
                t.refute(_none_witness(g, expected, PLAIN, predicted=expected))
        if name != "enumerated":
            rows.append({"family": name, "size": list(size) if isinstance(size, tuple) else size, "vertices": g.vertex_count, "formula": expected, "search": r.value})
    return t.outcome("CL-T26", families=rows)


def _replay_t26(w):
    if w["type"] == "nonexistence":
        return _replay_nonexistence(w)
    lab = labeling_from_json(w["labeling"])
    return satisfies(lab, PLAIN) and lab.modulus < w["predicted"]


def _run_w1(p):
    t = _Tally()
    literal_witness = None
    literal_hits = 0
    for g in _graphs(p):
        t.instances += 1
        if is_bipartite(g) is not None:
            if t.search(g, g.vertex_count, WEAK, p.budget).status is not Status.FOUND:
                t.refute(_none_witness(g, g.vertex_count, WEAK))
            continue
        # non-bipartite: every weak labeling must have a monocardinal edge
        spec = PropertySpec(Kind.WEAK, forbid_monocardinal_edges=True)
        lit = PropertySpec(Kind.WEAK_LITERAL, forbid_monocardinal_edges=True)
        closed = True
        for n in range(1, p.max_modulus + 1):
            out = t.search(g, n, spec, p.budget)
            if out.status is Status.FOUND:
                t.refute(_lab_witness(out.witness, reading="singleton-end"))
            closed &= out.status is Status.EXHAUSTED
            if literal_witness is None:
                lo = t.search(g, n, lit, p.budget)
                if lo.status is Status.FOUND:
                    literal_witness = _lab_witness(lo.witness, reading="literal")
                    literal_hits += 1
        t.unbounded += closed
        t.undetermined += not closed
    return t.outcome("CL-W1", literal_reading_counterexample=literal_witness)


def _replay_w1(w):
    if w["type"] == "nonexistence":
        return _replay_nonexistence(w)
    lab = labeling_from_json(w["labeling"])
    weak = is_weak(lab) if w.get("reading") == "literal" else is_weak_paper_form(lab)
    mono = any(len(s) == 1 for s in lab.edge_labels().values())
    return weak and not mono and is_bipartite(lab.graph) is None


def _run_w2(p):
    t = _Tally()
    literal_witness = None
    for g in _graphs(p):
        t.instances += 1
        bip = is_bipartite(g) is not None
        hit = None
        exhausted = True
        for k in p.uniform_ks:
            for n in range(1, p.max_modulus + 1):
                out = t.search(g, n, PropertySpec(Kind.WEAK_K_UNIFORM, k), p.budget)
                if out.status is Status.FOUND:
                    hit = out.witness
                    break
                exhausted &= out.status is Status.EXHAUSTED
            if hit is not None:
                break
        if bip:
            t.undetermined += hit is None
        elif hit is not None:
            t.refute(_lab_witness(hit, reading="singleton-end"))
        else:
            t.unbounded += exhausted
            t.undetermined += not exhausted
        if not bip and literal_witness is None:
            for k in p.uniform_ks:
                for n in range(1, p.max_modulus + 1):
                    lo = t.search(g, n, PropertySpec(Kind.WEAK_LITERAL, k), p.budget)
                    if lo.status is Status.FOUND:
                        literal_witness = _lab_witness(lo.witness, reading="literal")
                        break
                if literal_witness:
                    break
    return t.outcome("CL-W2", uniform_sizes=list(p.uniform_ks), literal_reading_counterexample=literal_witness)


def _replay_w2(w):
    lab = labeling_from_json(w["labeling"])
    sizes = {len(s) for s in lab.edge_labels().values()}
    weak = is_weak(lab) if w.get("reading") == "literal" else is_weak_paper_form(lab)
    return weak and len(sizes) == 1 and min(sizes) >= 2 and is_bipartite(lab.graph) is None


def _weak_mismatch_witness(g, predicted, r):
    if r.value < predicted:
        return _lab_witness(r.witness, predicted=predicted)
    return _none_witness(g, predicted, WEAK, predicted=predicted)


def _run_wnum(p):
    t = _Tally()
    too_high = too_low = alt = 0
    for g in _graphs(p):
        t.instances += 1
        r = min_modulus(g, WEAK, budget=p.budget)
        t.nodes += sum(o.nodes_expanded for _, o in r.per_n)
        if not r.exact:
            t.undetermined += 1
            continue
        f = weak_number_formula(g)
        alt += r.value == max(covering_number(g)[0], sigma_formula(g.vertex_count))
        if f != r.value:
            too_high += f > r.value
            too_low += f < r.value
            t.refute(_weak_mismatch_witness(g, f, r))
    return t.outcome(
        "CL-WNUM",
        formula_above_search=too_high,
        formula_below_search=too_low,
        search_equals_max_alpha_and_sigma=alt,
    )


def _replay_weak_value(w):
    if w["type"] == "nonexistence":
        return _replay_nonexistence(w)
    lab = labeling_from_json(w["labeling"])
    return is_weak_paper_form(lab) and is_injective_ok(lab) and lab.modulus < w["predicted"]


def is_injective_ok(lab):
    return satisfies(lab, PLAIN)


_FAMILY_FORMS = {
    "CL-PATH": ("path", path, lambda m: m if m <= 2 else m // 2, 3),
    "CL-CYCLE": ("cycle", cycle, lambda m: m - 1 if m in (3, 4) else -(-m // 2), 3),
    "CL-WHEEL": ("wheel", wheel, lambda m: 1 + -(-m // 2), 3),
    "CL-HELM": ("helm", helm, lambda m: m, 3),
    "CL-LADDER": ("ladder", ladder, lambda m: m, 3),
    "CL-COMPLETE": ("complete", complete, lambda m: m - 1, 4),
}


def _run_family(cid):
    name, build, closed_form, low = _FAMILY_FORMS[cid]

    def run(p):
        t = _Tally()
        rows = []
        for m in range(max(low, p.family_min), p.family_max + 1):
            g = build(m)
            t.instances += 1
            r = min_modulus(g, WEAK, budget=p.budget)
            t.nodes += sum(o.nodes_expanded for _, o in r.per_n)
            cf = closed_form(m)
            row = {
                "m": m,
                "vertices": g.vertex_count,
                "closed_form": cf,
                "theorem_formula": weak_number_formula(g),
                "search": r.value,
                "search_exact": r.exact,
            }
            if not r.exact:
                t.undetermined += 1
                row["verdict"] = "undetermined"
            elif r.value == cf:
                row["verdict"] = "agree"
            else:
                row["verdict"] = "refuted"
                if cf < r.value and cf >= 1:
                    plain = exists_labeling(g, cf, PLAIN, p.budget)
                    row["plain_at_closed_form"] = plain.status.value
                t.refute(_weak_mismatch_witness(g, cf, r) | {"m": m})
            rows.append(row)
        return t.outcome(cid, family=name, rows=rows)

    return run


def _run_wku(p):
    t = _Tally()
    mismatches = []
    for g in _graphs(p):
        if is_bipartite(g) is None:
            continue
        for k in p.uniform_ks:
            t.instances += 1
            f = weak_uniform_min_formula(g, k)
            spec = PropertySpec(Kind.WEAK_K_UNIFORM, k)
            r = min_modulus(g, spec, n_max=max(p.max_modulus, f), budget=p.budget)
            t.nodes += sum(o.nodes_expanded for _, o in r.per_n)
            if not r.exact:
                t.undetermined += 1
                continue
            if r.value != f:
                mismatches.append({"graph": g.to_json(), "k": k, "formula": f, "search": r.value})
                if r.value < f:
                    t.refute(_lab_witness(r.witness, predicted=f, k=k))
                else:
                    t.refute(_none_witness(g, f, spec, predicted=f, k=k))
    return t.outcome("CL-WKU", uniform_sizes=list(p.uniform_ks), mismatch_count=len(mismatches), first_mismatches=mismatches[:5])


def _replay_wku(w):
    if w["type"] == "nonexistence":
        return _replay_nonexistence(w)
    lab = labeling_from_json(w["labeling"])
    return satisfies(lab, PropertySpec(Kind.WEAK_K_UNIFORM, w["k"])) and lab.modulus < w["predicted"]


def _strong_uniform_search(t, g, k, p, n_lo=None):
    """First strongly k-uniform labeling over Z_n, n in [k, max_modulus]; (witness, all exhausted)."""
    exhausted = True
    for n in range(n_lo or k, p.max_modulus + 1):
        out = t.search(g, n, PropertySpec(Kind.STRONG_K_UNIFORM, k), p.budget)
        if out.status is Status.FOUND:
            return out.witness, False
        exhausted &= out.status is Status.EXHAUSTED
    return None, exhausted


def _run_sku(p):
    t = _Tally()
    for g in _graphs(p):
        bip = is_bipartite(g) is not None
        for k in range(1, p.max_modulus + 1):
            t.instances += 1
            predicted = _is_square(k) or bip
            w, exhausted = _strong_uniform_search(t, g, k, p)
            if w is not None and not predicted:
                t.refute(_lab_witness(w, k=k))
            elif w is None and predicted:
                t.undetermined += 1
            elif w is None:
                t.unbounded += exhausted
                t.undetermined += not exhausted
    return t.outcome("CL-SKU")


def _strong_k(lab, k):
    return satisfies(lab, PropertySpec(Kind.STRONG_K_UNIFORM, k))


def _replay_sku(w):
    lab = labeling_from_json(w["labeling"])
    return _strong_k(lab, w["k"]) and not _is_square(w["k"]) and is_bipartite(lab.graph) is None


def _run_scomp(p):
    t = _Tally()
    for g in _graphs(p):
        comps = len(g.components())
        for k in range(1, p.max_modulus + 1):
            t.instances += 1
            if comps <= _divisor_pairs(k):
                continue
            w, _ = _strong_uniform_search(t, g, k, p)
            if w is not None:
                t.refute(_lab_witness(w, k=k, components=comps, divisor_pairs=_divisor_pairs(k)))
            else:
                t.undetermined += 1
    return t.outcome("CL-SCOMP")


def _replay_scomp(w):
    lab = labeling_from_json(w["labeling"])
    return _strong_k(lab, w["k"]) and len(lab.graph.components()) > _divisor_pairs(w["k"])


def _run_snb(p):
    t = _Tally()
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    graphs = list(_graphs(p)) + [two_triangles]
    for g in graphs:
        nb = _nonbipartite_components(g)
        if nb == 0:
            continue
        for k in range(1, p.max_modulus + 1):
            if nb == 1 and _is_square(k):
                continue  # allowed by the claim; nothing to refute
            t.instances += 1
            w, exhausted = _strong_uniform_search(t, g, k, p)
            if w is not None:
                t.refute(_lab_witness(w, k=k, nonbipartite_components=nb))
            else:
                t.unbounded += exhausted
                t.undetermined += not exhausted
    return t.outcome("CL-SNB")


def _replay_snb(w):
    lab = labeling_from_json(w["labeling"])
    nb = _nonbipartite_components(lab.graph)
    return _strong_k(lab, w["k"]) and (nb > 1 or (nb == 1 and not _is_square(w["k"])))


def _run_smax(p):
    t = _Tally()
    unpredicted = missing_square = missing_bipartite = 0
    bipartite_example = None
    for g in _graphs(p):
        bip = is_bipartite(g) is not None
        for n in range(2, p.max_modulus + 1):
            t.instances += 1
            predicted = _is_square(n) or bip
            spec = PropertySpec(Kind.STRONG_K_UNIFORM, n)
            out = t.search(g, n, spec, p.budget)
            if out.status is Status.BUDGET_EXCEEDED:
                t.undetermined += 1
            elif out.status is Status.FOUND and not predicted:
                unpredicted += 1
                t.refute(_lab_witness(out.witness))
            elif out.status is Status.EXHAUSTED and predicted:
                w = _none_witness(g, n, spec, square=_is_square(n), bipartite=bip)
                if bip:
                    missing_bipartite += 1
                    bipartite_example = bipartite_example or w
                else:
                    missing_square += 1
                t.refute(w)
    return t.outcome(
        "CL-SMAX",
        found_but_not_predicted=unpredicted,
        square_modulus_without_labeling=missing_square,
        bipartite_without_labeling=missing_bipartite,
        bipartite_example=bipartite_example,
    )


def _replay_smax(w):
    if w["type"] == "nonexistence":
        g = graph_from_json(w["graph"])
        return (_is_square(w["n"]) or is_bipartite(g) is not None) and _replay_nonexistence(w)
    lab = labeling_from_json(w["labeling"])
    return (
        is_strong_ok(lab)
        and is_maximal(lab)
        and not _is_square(lab.modulus)
        and is_bipartite(lab.graph) is None
    )


def is_strong_ok(lab):
    return satisfies(lab, PropertySpec(Kind.STRONG))


# --------------------------------------------- full labeling enumerations


@lru_cache(maxsize=64)
def _edge_tables(n):
    table = _kernels.sumset_table(n)
    pc = _kernels.popcounts(n).astype(np.int64)
    size = 1 << n
    masks = np.arange(size, dtype=np.uint64)
    pa, pb = pc[:, None], pc[None, :]
    ps = pc[table]
    return {
        "maximal": table == np.uint64(size - 1),
        "exquisite": ((table & masks[:, None]) == masks[:, None]) & ((table & masks[None, :]) == masks[None, :]),
        "weak": (pa == 1) | (pb == 1),
        "weak_literal": (ps == pa) | (ps == pb),
    }


def _graphs_within(m: int, allowed: int):
    """Graphs on m vertices without isolated vertices whose edge mask is a submask of ``allowed``."""
    sub = allowed
    out = []
    while True:
        g = _graph_cache(m, sub)
        if not g.has_isolated_vertices():
            out.append(g)
        if sub == 0:
            break
        sub = (sub - 1) & allowed
    return out


@lru_cache(maxsize=None)
def _graph_cache(m, mask):
    pairs = list(combinations(range(m), 2))
    return Graph(m, (pr for i, pr in enumerate(pairs) if mask >> i & 1))


def _scan_labelings(p, good_table, bad_graph, extra=None):
    """Run over every labeling with m <= label_max_vertices, n <= label_max_modulus.

    ``good_table(n)`` is the pair table an edge must satisfy; for every graph
    (no isolated vertices) all of whose edges are good, ``bad_graph(g, labels,
    n)`` says whether the pair refutes the claim.  Labelings with identical
    allowed-edge masks are grouped.  Returns (instances, first_bad_labeling).
    """
    instances = 0
    first = None
    for m in range(2, p.label_max_vertices + 1):
        for n in range(1, p.label_max_modulus + 1):
            if (1 << n) - 1 < m:
                continue
            labels, allowed = _kernels.allowed_edge_masks(good_table(n), m)
            keys = allowed if extra is None else allowed * 2 + extra(labels, n)
            uniq, idx, counts = np.unique(keys, return_index=True, return_counts=True)
            for key, i, c in zip(uniq.tolist(), idx.tolist(), counts.tolist()):
                al = int(allowed[i])
                for g in _graphs_within(m, al):
                    instances += c
                    if first is None and bad_graph(g, labels, i, n):
                        first = Labeling.from_masks(g, n, [int(x) for x in labels[i]])
    return instances, first


def _constructive_star(leaves):
    n = leaves + 1
    g = star(leaves)
    labs = [ZnSet.full(n)] + [ZnSet.from_members(n, [i]) for i in range(leaves)]
    return Labeling(g, n, tuple(labs))


def _run_wmax(p):
    t = _Tally()
    construct_ok = 0
    for leaves in range(1, p.star_max_leaves + 1):
        t.instances += 1
        rep = classify(_constructive_star(leaves))
        if rep.maximal and rep.weak_paper_form and rep.weak and rep.exquisite:
            construct_ok += 1
        else:
            t.refute(_lab_witness(_constructive_star(leaves), direction="constructive"))
    readings = {}
    for reading, key in (("singleton-end", "weak"), ("literal", "weak_literal")):

        def table(n, key=key):
            tabs = _edge_tables(n)
            return tabs[key] & tabs["maximal"]

        inst, bad = _scan_labelings(p, table, lambda g, L, i, n: not _is_star(g))
        readings[reading] = {"instances": inst, "counterexample": _lab_witness(bad) if bad else None}
        if reading == "singleton-end":
            t.instances += inst
            if bad is not None:
                t.refute(_lab_witness(bad, direction="converse", reading=reading))
    return t.outcome("CL-WMAX", constructive_stars=construct_ok, converse=readings)


def _replay_wmax(w):
    lab = labeling_from_json(w["labeling"])
    rep = classify(lab)
    if w.get("direction") == "constructive":
        return not (rep.maximal and rep.weak_paper_form and rep.exquisite)
    weak = rep.weak if w.get("reading") == "literal" else rep.weak_paper_form
    return weak and rep.maximal and not _is_star(lab.graph)


def _zero_everywhere(labels, n):
    return np.all(labels & 1, axis=1).astype(np.int64)


def _run_eiff(p):
    t = _Tally()

    def bad(g, labels, i, n):
        lab = Labeling.from_masks(g, n, [int(x) for x in labels[i]])
        return not all(0 in s for s in lab.labels) and not is_maximal(lab)

    inst, first = _scan_labelings(p, lambda n: _edge_tables(n)["exquisite"], bad, extra=_zero_everywhere)
    t.instances += inst
    if first is not None:
        t.refute(_lab_witness(first))
    return t.outcome("CL-EIFF")


def _replay_eiff(w):
    lab = labeling_from_json(w["labeling"])
    return is_exquisite(lab) and not all(0 in s for s in lab.labels) and not is_maximal(lab)


def _run_ews(p):
    t = _Tally()
    constructive = 0
    for leaves in range(1, p.star_max_leaves + 1):
        t.instances += 1
        rep = classify(_constructive_star(leaves))
        constructive += rep.exquisite and rep.weak_paper_form
        if not (rep.exquisite and rep.weak_paper_form):
            t.refute(_lab_witness(_constructive_star(leaves), direction="constructive"))
    readings = {}
    for reading, key in (("singleton-end", "weak"), ("literal", "weak_literal")):

        def table(n, key=key):
            tabs = _edge_tables(n)
            return tabs[key] & tabs["exquisite"]

        inst, bad = _scan_labelings(p, table, lambda g, L, i, n: not _is_star(g))
        readings[reading] = {"instances": inst, "counterexample": _lab_witness(bad) if bad else None}
        if reading == "singleton-end":
            t.instances += inst
            if bad is not None:
                t.refute(_lab_witness(bad, direction="converse", reading=reading))
    return t.outcome("CL-EWS", constructive_stars=constructive, converse=readings)


def _replay_ews(w):
    lab = labeling_from_json(w["labeling"])
    rep = classify(lab)
    if w.get("direction") == "constructive":
        return not (rep.exquisite and rep.weak_paper_form)
    weak = rep.weak if w.get("reading") == "literal" else rep.weak_paper_form
    return weak and rep.exquisite and not _is_star(lab.graph)


# ---------------------------------------------------------------- registry


def _claim(cid, description, expected, run, replay):
    return Claim(cid, description, expected, run, replay)


C, R, O = Expectation.CONFIRM, Expectation.REFUTE, Expectation.OPEN

_REGISTRY = (
    _claim("CL-T11", "|A|+|B|-1 <= |A+B| for all nonempty A, B in Z_n (no min(n, .) guard)", R, _run_t11, _replay_t11),
    _claim("CL-CD", "prime n: min(n, |A|+|B|-1) <= |A+B| <= min(n, |A||B|)", C, _run_cd, _replay_cd),
    _claim(
        "CL-APEQ",
        "unsaturated pairs: |A+B| = |A|+|B|-1 iff A, B are progressions with one common difference",
        O,
        _run_apeq,
        _replay_apeq,
    ),
    _claim("CL-T23", "every edge: |f(u)|+|f(v)|-1 <= |f+(uv)| <= |f(u)||f(v)| <= n", R, _run_t23, _replay_t23),
    _claim("CL-T24", "every graph has a modular sumset labeling and, for large n, an indexer", C, _run_t24, _replay_t24),
    _claim("CL-T26", "least n admitting a labeling is 1 + floor(log2 m)", C, _run_t26, _replay_t26),
    _claim("CL-P31", "|A+B| = |A| iff A = B = Z_n or |B| = 1", R, _run_p31, _replay_p31),
    _claim(
        "CL-W1",
        "a non-bipartite graph has no weak labeling without monocardinal edges; bipartite graphs have one",
        C,
        _run_w1,
        _replay_w1,
    ),
    _claim(
        "CL-W2",
        "a weakly k-uniform labeling (k >= 2) exists iff the graph is bipartite",
        C,
        _run_w2,
        _replay_w2,
    ),
    _claim("CL-WNUM", "weak number = max(alpha, r), r least with 2^r - r - 1 >= beta", R, _run_wnum, _replay_weak_value),
    _claim("CL-PATH", "weak number of P_m is floor(m/2) for m > 2", R, _run_family("CL-PATH"), _replay_weak_value),
    _claim("CL-CYCLE", "weak number of C_m is m-1 for m in {3,4}, ceil(m/2) otherwise", C, _run_family("CL-CYCLE"), _replay_weak_value),
    _claim("CL-WHEEL", "weak number of W_{m+1} is 1 + ceil(m/2)", C, _run_family("CL-WHEEL"), _replay_weak_value),
    _claim("CL-HELM", "weak number of H_m is m", C, _run_family("CL-HELM"), _replay_weak_value),
    _claim("CL-LADDER", "weak number of L_m is m (m > 2)", C, _run_family("CL-LADDER"), _replay_weak_value),
    _claim("CL-COMPLETE", "weak number of K_m is m-1 (m >= 4)", C, _run_family("CL-COMPLETE"), _replay_weak_value),
    _claim(
        "CL-WKU",
        "weakly k-uniform minimum ground set: max(alpha, r) with C(r,k) >= beta, or least n with C(n,k) >= beta if k >= alpha",
        O,
        _run_wku,
        _replay_wku,
    ),
    _claim(
        "CL-STR",
        "|A||B| <= n: |A+B| = |A||B| iff absolute difference sets are disjoint (modular form also checked)",
        R,
        _run_str,
        _replay_str,
    ),
    _claim(
        "CL-SKU",
        "a strongly k-uniform labeling (some n >= k) exists iff k is square or the graph is bipartite",
        C,
        _run_sku,
        _replay_sku,
    ),
    _claim(
        "CL-SCOMP",
        "a strongly k-uniform graph has at most as many components as factor pairs r*s = k",
        R,
        _run_scomp,
        _replay_scomp,
    ),
    _claim(
        "CL-SNB",
        "a strongly k-uniform graph has a non-bipartite component only for square k, and at most one",
        R,
        _run_snb,
        _replay_snb,
    ),
    _claim(
        "CL-MAXC",
        "edge label is Z_n iff |A|+|B| >= n (difference sets meet) or |A||B| >= n (disjoint)",
        R,
        _run_maxc,
        _replay_maxc,
    ),
    _claim("CL-WMAX", "a weak labeling is maximal iff the graph is a star", C, _run_wmax, _replay_wmax),
    _claim(
        "CL-SMAX",
        "a strong maximal labeling over Z_n (n >= 2) exists iff n is square or the graph is bipartite",
        R,
        _run_smax,
        _replay_smax,
    ),
    _claim(
        "CL-ESUB",
        "A is in A+B iff each a in A is a' + b with a' in A, a' != a, b in B",
        R,
        _run_esub,
        _replay_esub,
    ),
    _claim("CL-E0", "labels all containing 0 give an exquisite labeling", C, _run_e0, _replay_e0),
    _claim("CL-MAXE", "maximal labelings are exquisite", C, _run_maxe, _replay_maxe),
    _claim("CL-EIFF", "exquisite iff every label contains 0 or the labeling is maximal", O, _run_eiff, _replay_eiff),
    _claim("CL-EWS", "a weak labeling is exquisite iff the graph is a star", R, _run_ews, _replay_ews),
)


def registry() -> list[Claim]:
    return list(_REGISTRY)


def get_claim(claim_id: str) -> Claim:
    for c in _REGISTRY:
        if c.id == claim_id:
            return c
    raise InvalidInput(f"unknown claim id {claim_id!r}")


def audit(claim_id: str, params: AuditParams | None = None) -> ClaimOutcome:
    claim = get_claim(claim_id)
    # a fresh cache per claim keeps node counts independent of audit order
    clear_cache()
    return claim.run(params or AuditParams())


def audit_all(params: AuditParams | None = None, claim_ids=None) -> list[ClaimOutcome]:
    params = params or AuditParams()
    ids = [c.id for c in _REGISTRY] if claim_ids is None else list(claim_ids)
    return [audit(cid, params) for cid in ids]


def replay_witness(outcome: ClaimOutcome) -> bool:
    """Re-derive the violation behind a REFUTED outcome from its witness alone."""
    if outcome.witness is None:
        return False
    return bool(get_claim(outcome.claim_id).replay(json.loads(json.dumps(outcome.witness))))


# ------------------------------------------------------------------ report


@dataclass
class AuditReport:
    text: str
    data: dict
    exit_code: int


def audit_report(outcomes: list[ClaimOutcome]) -> AuditReport:
    order = {c.id: i for i, c in enumerate(_REGISTRY)}
    outcomes = sorted(outcomes, key=lambda o: order.get(o.claim_id, len(order)))
    broken = [
        o.claim_id
        for o in outcomes
        if o.status is Verdict.REFUTED and o.claim_id in order and get_claim(o.claim_id).expected is Expectation.CONFIRM
    ]
    summary = {v.value: sum(o.status is v for o in outcomes) for v in Verdict}
    lines = []
    for v in Verdict:
        group = [o for o in outcomes if o.status is v]
        if not group:
            continue
        lines.append(f"== {v.value} ({len(group)})")
        for o in group:
            exp = get_claim(o.claim_id).expected.value if o.claim_id in order else "?"
            lines.append(
                f"{o.claim_id:<12} expected={exp:<8} instances={o.instances_checked} nodes={o.budget_spent}"
            )
            if o.witness is not None:
                lines.append(f"    witness: {json.dumps(o.witness, sort_keys=True)}")
    if broken:
        lines.append("unexpected refutations: " + ", ".join(broken))
    data = {
        "claims": [o.to_json() for o in outcomes],
        "summary": summary,
        "unexpected_refutations": broken,
    }
    exit_code = 1 if broken else 0
    data["exit_code"] = exit_code
    return AuditReport("\n".join(lines) + ("\n" if lines else ""), data, exit_code)
