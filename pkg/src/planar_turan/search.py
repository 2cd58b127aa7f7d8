"""Exhaustive extremal search over small planar family-free graphs.

Enumeration is canonical augmentation: a child on i+1 vertices is kept
only when deleting the vertex at its last canonical position recreates
the parent's canonical form.  Children of one parent are deduplicated
by canonical form, so each isomorphism class appears exactly once
globally without a cross-level lookup table.  Planarity and forbidden
cycles are hereditary under vertex deletion, which makes pruning during
augmentation sound.

Disconnected graphs are part of the search space: the extremal maximum
quantifies over all graphs on n vertices, not only connected ones.
"""

from __future__ import annotations

import json
import math
import os
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .canonical import CanonicalForm, canonical_form, canonical_labeling
from .constructions import ConstructionSpec, build_construction, probe_count
from .counting import Pattern, count_copies
from .cycles import EMPTY_FAMILY, ForbiddenFamily, count_cycles, is_family_free
from .graph import Graph, build_graph, empty_graph, is_connected
from .graph6 import from_graph6, to_graph6
from .planarity import is_planar

CACHE_ENV = "PLANAR_TURAN_CACHE"
DEFAULT_VERTEX_CAP = 8
HARD_VERTEX_CAP = 9


class SearchIncomplete(RuntimeError):
    """Raised by the raw enumeration stream when its deadline passes."""


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = DEFAULT_VERTEX_CAP
    time_limit: float | None = None  # seconds
    parallel_width: int = 1

    def __post_init__(self) -> None:
        if self.max_vertices < 1 or self.parallel_width < 1:
            raise ValueError("budget values must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass(frozen=True)
class ExtremalRecord:
    n: int
    pattern: Pattern
    family: ForbiddenFamily
    max_count: int
    witnesses: tuple[CanonicalForm, ...]
    graphs_explored: int
    elapsed: float = field(compare=False)
    status: str = "complete"  # "complete" or "incomplete"


@dataclass(frozen=True)
class GrowthProbe:
    spec: ConstructionSpec
    points: tuple[tuple[int, int], ...]  # (n, count)
    slope: float
    intercept: float
    residuals: tuple[float, ...]


# ======================================================================
# Canonical augmentation
# ======================================================================

def _accepted_children(parent: Graph, family: ForbiddenFamily,
                       require_planar: bool) -> list[Graph]:
    """Canonical representatives of the constrained one-vertex extensions
    whose canonical deletion reproduces the parent, each class once."""
    parent_form = canonical_form(parent)
    seen: set[CanonicalForm] = set()
    accepted: list[CanonicalForm] = []
    for mask in range(1 << parent.n):
        attach = [i for i in range(parent.n) if mask >> i & 1]
        child = parent.with_vertex(attach)
        if not is_family_free(child, family):
            continue
        if require_planar and not is_planar(child).is_planar:
            continue
        form, pos = canonical_labeling(child)
        if form in seen:
            continue
        seen.add(form)
        last = pos.index(child.n - 1)
        if canonical_form(child.delete_vertex(last)) != parent_form:
            continue
        accepted.append(form)
    accepted.sort()
    return [f.as_graph() for f in accepted]


def _check_cap(n: int, budget: SearchBudget) -> None:
    cap = min(budget.max_vertices, HARD_VERTEX_CAP)
    if n > cap:
        raise ValueError(
            f"n = {n} exceeds the vertex cap {cap}; pass a SearchBudget with "
            f"max_vertices up to {HARD_VERTEX_CAP} to opt in to larger runs")


def enumerate_constrained(n: int, family: ForbiddenFamily = EMPTY_FAMILY,
                          require_planar: bool = True, *,
                          require_connected: bool = False,
                          budget: SearchBudget | None = None):
    """Yield one representative per isomorphism class of n-vertex graphs
    satisfying the constraints.  Raises SearchIncomplete if the budget's
    time limit passes mid-stream; partial output is never silent."""
    budget = budget or SearchBudget()
    _check_cap(n, budget)
    if n < 1:
        raise ValueError("n must be >= 1")
    deadline = None
    if budget.time_limit is not None:
        deadline = time.monotonic() + budget.time_limit
    level: list[Graph] = [empty_graph(1)]
    for _ in range(n - 1):
        nxt: list[Graph] = []
        for parent in level:
            if deadline is not None and time.monotonic() > deadline:
                raise SearchIncomplete(
                    f"time limit {budget.time_limit}s passed during enumeration")
            nxt.extend(_accepted_children(parent, family, require_planar))
        level = nxt
    for g in level:
        if require_connected and not is_connected(g):
            continue
        yield g


# ======================================================================
# Extremal numbers
# ======================================================================

def _cycle_length_of(h: Graph) -> int | None:
    if h.n >= 3 and is_connected(h) and all(d == 2 for d in h.degree_sequence()):
        return h.n
    return None


def _count_pattern(pattern: Pattern, cycle_len: int | None, g: Graph) -> int:
    if cycle_len is not None:
        return count_cycles(g, cycle_len)
    return count_copies(pattern, g)


def _subtree_task(args: tuple) -> tuple[int, int, list[str]]:
    """Extend one parent to the target level and scan it; returns
    (explored, local_max, graph6 of witnesses attaining local_max)."""
    (pn, pedges, target_n, fam_lengths, require_planar, require_connected,
     hn, hedges, aut, cycle_len) = args
    parent = build_graph(pn, list(pedges))
    family = ForbiddenFamily(frozenset(fam_lengths))
    pattern = Pattern(build_graph(hn, list(hedges)), aut)
    level = [parent]
    for _ in range(target_n - pn):
        level = [c for p in level
                 for c in _accepted_children(p, family, require_planar)]
    explored = 0
    best = -1
    witnesses: list[str] = []
    for g in level:
        if require_connected and not is_connected(g):
            continue
        explored += 1
        c = _count_pattern(pattern, cycle_len, g)
        if c > best:
            best = c
            witnesses = [to_graph6(g)]
        elif c == best:
            witnesses.append(to_graph6(g))
    return explored, best, witnesses


def extremal_number(n: int, pattern: Graph | Pattern,
                    family: ForbiddenFamily, budget: SearchBudget | None = None,
                    *, require_planar: bool = True,
                    require_connected: bool = False,
                    use_cache: bool = True) -> ExtremalRecord:
    """Exact maximum of the pattern count over every (planar) family-free
    graph on n vertices, with all maximizing classes as witnesses."""
    budget = budget or SearchBudget()
    _check_cap(n, budget)
    if isinstance(pattern, Graph):
        pattern = Pattern.from_graph(pattern)
    cycle_len = _cycle_length_of(pattern.graph)
    use_cache = use_cache and not require_connected
    cached = _cache_lookup(n, pattern, family, require_planar) if use_cache else None
    if cached is not None:
        return cached
    start = time.monotonic()
    deadline = None
    if budget.time_limit is not None:
        deadline = start + budget.time_limit

    # Serial trunk to level n-2, then one task per trunk graph for the
    # final two augmentation levels plus counting.
    split = max(1, n - 2)
    trunk: list[Graph] = [empty_graph(1)]
    status = "complete"
    for _ in range(split - 1):
        nxt: list[Graph] = []
        for parent in trunk:
            if deadline is not None and time.monotonic() > deadline:
                status = "incomplete"
                break
            nxt.extend(_accepted_children(parent, family, require_planar))
        if status == "incomplete":
            break
        trunk = nxt

    explored = 0
    best = -1
    witness_g6: list[str] = []

    def fold(result: tuple[int, int, list[str]]) -> None:
        nonlocal explored, best, witness_g6
        sub_explored, sub_best, sub_wits = result
        explored += sub_explored
        if sub_best > best:
            best = sub_best
            witness_g6 = list(sub_wits)
        elif sub_best == best:
            witness_g6.extend(sub_wits)

    if status == "complete":
        tasks = [(p.n, p.edges, n, family.sorted_lengths, require_planar,
                  require_connected, pattern.graph.n, pattern.graph.edges,
                  pattern.automorphisms, cycle_len) for p in trunk]
        if budget.parallel_width > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=budget.parallel_width) as pool:
                futures = [pool.submit(_subtree_task, t) for t in tasks]
                for fut in futures:
                    if deadline is not None and time.monotonic() > deadline:
                        status = "incomplete"
                        for other in futures:
                            other.cancel()
                        break
                    fold(fut.result())
        else:
            for t in tasks:
                if deadline is not None and time.monotonic() > deadline:
                    status = "incomplete"
                    break
                fold(_subtree_task(t))

    if best < 0:
        best = 0
        witness_g6 = []
    witnesses = tuple(sorted(canonical_form(from_graph6(s)) for s in set(witness_g6)))
    record = ExtremalRecord(n, pattern, family, best, witnesses, explored,
                            time.monotonic() - start, status)
    if status == "complete":
        _recertify(record, require_planar, cycle_len)
        if use_cache:
            _cache_store(record, require_planar)
    return record


def _recertify(record: ExtremalRecord, require_planar: bool,
               cycle_len: int | None) -> None:
    for form in record.witnesses:
        g = form.as_graph()
        ok = (is_family_free(g, record.family)
              and (not require_planar or is_planar(g).is_planar)
              and _count_pattern(record.pattern, cycle_len, g) == record.max_count)
        if not ok:
            raise RuntimeError(f"witness failed re-certification: {to_graph6(g)}")


# ======================================================================
# Growth probes
# ======================================================================

def growth_probe(spec: ConstructionSpec, n_values: list[int]) -> GrowthProbe:
    """Build the family at each n, count its own pattern, and fit a
    least-squares line to log(count) versus log(n)."""
    if len(set(n_values)) < 3:
        raise ValueError("need at least 3 distinct n values")
    points: list[tuple[int, int]] = []
    for n in sorted(set(n_values)):
        out = build_construction(spec, n=n, count_cap=0)
        c = probe_count(spec, out.graph)
        if c > 0:
            points.append((n, c))
    if len(points) < 3:
        raise ValueError(f"only {len(points)} usable points (zero counts dropped)")
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(c) for _, c in points]
    if len(set(xs)) == 1:
        raise ValueError("all n values coincide after filtering")
    slope, intercept = statistics.linear_regression(xs, ys)
    residuals = tuple(y - (slope * x + intercept) for x, y in zip(xs, ys))
    return GrowthProbe(spec, tuple(points), slope, intercept, residuals)


# ======================================================================
# JSON-lines cache and record serialization
# ======================================================================

def record_to_json(record: ExtremalRecord, require_planar: bool = True) -> dict:
    return {
        "n": record.n,
        "pattern": to_graph6(record.pattern.graph),
        "pattern_name": record.pattern.name,
        "family": list(record.family.sorted_lengths),
        "require_planar": require_planar,
        "max_count": record.max_count,
        "witnesses": [to_graph6(f.as_graph()) for f in record.witnesses],
        "graphs_explored": record.graphs_explored,
        "elapsed": record.elapsed,
        "status": record.status,
    }


def record_from_json(data: dict) -> ExtremalRecord:
    pattern = Pattern.from_graph(from_graph6(data["pattern"]),
                                 data.get("pattern_name"))
    family = ForbiddenFamily(frozenset(data["family"]))
    witnesses = tuple(sorted(canonical_form(from_graph6(s))
                             for s in data["witnesses"]))
    return ExtremalRecord(data["n"], pattern, family, data["max_count"],
                          witnesses, data["graphs_explored"],
                          data["elapsed"], data["status"])


def _cache_file() -> str | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    os.makedirs(root, exist_ok=True)
    return os.path.join(root, "extremal.jsonl")


def _cache_key(n: int, pattern: Pattern, family: ForbiddenFamily,
               require_planar: bool) -> tuple:
    return (n, to_graph6(canonical_form(pattern.graph).as_graph()),
            family.sorted_lengths, require_planar)


def _cache_lookup(n: int, pattern: Pattern, family: ForbiddenFamily,
                  require_planar: bool) -> ExtremalRecord | None:
    path = _cache_file()
    if path is None or not os.path.exists(path):
        return None
    want = _cache_key(n, pattern, family, require_planar)
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            got = (data["n"],
                   to_graph6(canonical_form(from_graph6(data["pattern"])).as_graph()),
                   tuple(data["family"]), data["require_planar"])
            if got == want and data["status"] == "complete":
                return record_from_json(data)
    return None


def _cache_store(record: ExtremalRecord, require_planar: bool) -> None:
    path = _cache_file()
    if path is None:
        return
    with open(path, "a", encoding="ascii") as fh:
        fh.write(json.dumps(record_to_json(record, require_planar),
                            sort_keys=True) + "\n")
