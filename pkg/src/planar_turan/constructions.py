"""Certified lower-bound constructions.

Every builder returns a ConstructionOutput whose certification facts
(planarity, forbidden-family freeness, pattern count) are recomputed by
the planarity/cycles/counting modules, never asserted blindly.  A
builder that fails its own certification raises CertificationError:
that is a bug or an impossible parameter choice, not a soft warning.

Multiplicity conventions follow the source formulas: cycle blow-ups use
floor(2n/k) - 1 copies, tree blow-ups floor(n/(2*beta)), and the
parallel-path families use the largest multiplicity that fits n
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counting import Pattern, count_copies
from .cycles import ForbiddenFamily, count_cycles, is_family_free
from .graph import Graph, build_graph, cycle_graph, is_tree
from .params import beta
from .planarity import is_planar

COUNT_CERT_CAP = 80  # recount pattern copies during certification up to this order


class ConstructionError(ValueError):
    """Raised for parameter choices the construction cannot realize."""


class CertificationError(RuntimeError):
    """Raised when a built graph contradicts its declared facts."""


@dataclass(frozen=True)
class Certification:
    planar: bool
    family_lengths: tuple[int, ...]
    family_free: bool
    pattern_name: str
    declared_count: int
    computed_count: int | None  # None when the instance exceeded the recount cap
    count_is_exact: bool  # declared == computed vs declared <= computed


@dataclass(frozen=True)
class ConstructionOutput:
    graph: Graph
    label_table: dict[str, int]
    certification: Certification


def _certify(graph: Graph, family_lengths: tuple[int, ...], pattern_name: str,
             count_fn, declared: int, exact: bool,
             count_cap: int) -> Certification:
    planar_ok = is_planar(graph).is_planar
    family_free = is_family_free(graph, ForbiddenFamily(frozenset(family_lengths)))
    computed: int | None = None
    count_ok = True
    if graph.n <= count_cap:
        computed = count_fn(graph)
        count_ok = computed == declared if exact else computed >= declared
    if not (planar_ok and family_free and count_ok):
        raise CertificationError(
            f"certification failed for {pattern_name} construction on "
            f"{graph.n} vertices: planar={planar_ok}, family_free={family_free}, "
            f"declared={declared}, computed={computed}")
    return Certification(planar_ok, family_lengths, family_free, pattern_name,
                         declared, computed, exact)


# ======================================================================
# Blow-up primitive
# ======================================================================

def blowup_independent_set(g: Graph, s, m: int) -> Graph:
    """Replace each vertex of the independent set s by m clones sharing its
    neighborhood.  Originals keep their ids; clone j of the i-th set member
    (sorted) gets id n + i*(m-1) + (j-1)."""
    members = sorted(set(s))
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    for a in members:
        for b in members:
            if a < b and g.has_edge(a, b):
                raise ValueError(f"set is not independent: edge ({a}, {b})")
    if m < 1:
        raise ValueError(f"multiplicity must be >= 1, got {m}")
    edges = list(g.edges)
    nid = g.n
    for v in members:
        for _ in range(m - 1):
            edges.extend((nid, w) for w in g.adj[v])
            nid += 1
    return build_graph(nid, edges)


# ======================================================================
# Families
# ======================================================================

def tree_beta_blowup(t: Graph, n: int, *,
                     count_cap: int = COUNT_CERT_CAP) -> ConstructionOutput:
    """Blow up a maximum degree-<=2 independent witness of the tree by
    floor(n / (2*beta))."""
    if not is_tree(t):
        raise ConstructionError("tree_beta_blowup requires a tree")
    if n < 2 * t.n:
        raise ConstructionError(f"need n >= {2 * t.n} for a tree on {t.n} vertices")
    wit = beta(t, 1)
    if wit.value == 0:
        raise ConstructionError("tree has no degree-1/2 witness vertices")
    b = wit.value
    chosen = sorted(c[0] for c in wit.components)
    m = n // (2 * b)
    graph = blowup_independent_set(t, chosen, m)
    labels = {f"v{i}": i for i in range(t.n)}
    nid = t.n
    for v in chosen:
        for j in range(1, m):
            labels[f"v{v}.{j}"] = nid
            nid += 1
    pattern = Pattern.from_graph(t, "tree")
    cert = _certify(graph, (), "tree", lambda g: count_copies(pattern, g),
                    m ** b, False, count_cap)
    return ConstructionOutput(graph, labels, cert)


def cycle_blowup(k: int, n: int, *,
                 count_cap: int = COUNT_CERT_CAP) -> ConstructionOutput:
    """Blow up the alternating maximum independent set of C_k by
    floor(2n/k) - 1 clones."""
    if k < 3:
        raise ConstructionError(f"cycle length must be >= 3, got {k}")
    if n < k:
        raise ConstructionError(f"need n >= {k}")
    m = max(1, 2 * n // k - 1)
    base = cycle_graph(k)
    s = list(range(1, k, 2)) if k % 2 == 0 else list(range(1, k - 1, 2))
    graph = blowup_independent_set(base, s, m)
    if graph.n > n:
        raise ConstructionError("blow-up exceeded the vertex budget")
    labels = {f"x{i}": i for i in range(k)}
    nid = k
    for v in s:
        for j in range(1, m):
            labels[f"x{v}.{j}"] = nid
            nid += 1
    # k = 4 is special: both blown classes share both junctions (K_{2,2m}),
    # so pairs within one class also close 4-cycles.
    declared = m * (2 * m - 1) if k == 4 else m ** (k // 2)
    cert = _certify(graph, (), f"C{k}", lambda g: count_cycles(g, k),
                    declared, True, count_cap)
    return ConstructionOutput(graph, labels, cert)


def _path_order(t: Graph, comp: tuple[int, ...]) -> list[int]:
    """Order the vertices of a path component from one endpoint."""
    if len(comp) == 1:
        return [comp[0]]
    inside = set(comp)
    ends = [v for v in comp if sum(1 for w in t.adj[v] if w in inside) == 1]
    start = min(ends)
    order = [start]
    prev = None
    cur = start
    while len(order) < len(comp):
        nxt = next(w for w in t.adj[cur] if w in inside and w != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def even_tree_parallel_paths(t: Graph, ell: int, n: int, *,
                             count_cap: int = COUNT_CERT_CAP) -> ConstructionOutput:
    """Replace each component of a beta_ell witness of the tree by parallel
    copies joined to the same neighbors, certified free of even cycles of
    length <= 2*ell."""
    if not is_tree(t):
        raise ConstructionError("even_tree_parallel_paths requires a tree")
    if ell < 1:
        raise ConstructionError(f"ell must be >= 1, got {ell}")
    wit = beta(t, ell)
    if wit.value == 0:
        raise ConstructionError(f"tree has beta_{ell} = 0, nothing to parallelize")
    b = wit.value
    replaced = sum(len(c) for c in wit.components)
    m = (n - t.n + replaced) // replaced
    if m < 1:
        raise ConstructionError(
            f"n = {n} gives multiplicity < 1 (need at least {t.n})")
    edges = list(t.edges)
    labels = {f"v{i}": i for i in range(t.n)}
    nid = t.n
    for ci, comp in enumerate(wit.components):
        order = _path_order(t, comp)
        inside = set(comp)
        start_anchors = [w for w in t.adj[order[0]] if w not in inside]
        end_anchors = [w for w in t.adj[order[-1]] if w not in inside]
        for j in range(1, m):
            ids = list(range(nid, nid + len(order)))
            nid += len(order)
            for pos, vid in enumerate(ids):
                labels[f"c{ci}.{j}.{pos}"] = vid
            edges.extend((ids[p], ids[p + 1]) for p in range(len(ids) - 1))
            edges.extend((a, ids[0]) for a in start_anchors)
            if len(ids) > 1:
                edges.extend((a, ids[-1]) for a in end_anchors)
    graph = build_graph(nid, edges)
    if graph.n > n:
        raise ConstructionError("parallel copies exceeded the vertex budget")
    family = tuple(range(4, 2 * ell + 1, 2))
    pattern = Pattern.from_graph(t, "tree")
    cert = _certify(graph, family, "tree", lambda g: count_copies(pattern, g),
                    m ** b, False, count_cap)
    return ConstructionOutput(graph, labels, cert)


def pentagon_extremal(t: int, s: int, *,
                      count_cap: int = COUNT_CERT_CAP) -> ConstructionOutput:
    """The C4-free plane graph on n = 5 + 3t + 2s vertices with n - 4
    pentagons: a pentagon core, t parallel length-4 paths between two core
    vertices threaded by a path through the opposite core vertex, and a
    zig-zag strip of 2s vertices alternating between two core vertices."""
    if t < 0 or s < 0:
        raise ConstructionError("t and s must be >= 0")
    # core pentagon x1..x5 as ids 0..4
    x1, x2, x3, x4, x5 = range(5)
    edges = [(x1, x2), (x2, x3), (x3, x4), (x4, x5), (x5, x1)]
    labels = {f"x{i + 1}": i for i in range(5)}
    nid = 5
    prev_y4 = x4
    for i in range(1, t + 1):
        y5, y4, y3 = nid, nid + 1, nid + 2
        nid += 3
        labels[f"y5.{i}"] = y5
        labels[f"y4.{i}"] = y4
        labels[f"y3.{i}"] = y3
        edges += [(x1, y5), (y5, y4), (y4, y3), (y3, x2), (prev_y4, y4)]
        prev_y4 = y4
    prev_z = None
    for i in range(1, 2 * s + 1):
        z = nid
        nid += 1
        labels[f"z{i}"] = z
        if i == 1:
            edges.append((z, x1))
        if prev_z is not None:
            edges.append((prev_z, z))
        edges.append((z, x5 if i % 4 in (0, 1) else x3))
        prev_z = z
    graph = build_graph(nid, edges)
    cert = _certify(graph, (4,), "C5", lambda g: count_cycles(g, 5),
                    graph.n - 4, True, count_cap)
    return ConstructionOutput(graph, labels, cert)


def _segment_lengths(k: int) -> list[int]:
    """Bundle segment lengths for ck_c4free_parallel, chosen so that no
    segment has twice its length equal to k (which would add same-bundle
    k-cycles); k = 6 cannot avoid it and is handled by its count formula."""
    q, r = divmod(k, 3)
    if r == 0:
        return [3] * q
    if r == 1:
        return [3] * (q - 1) + [4]
    return [3] * (q - 1) + [5]


def ck_c4free_parallel(k: int, n: int, *,
                       count_cap: int = COUNT_CERT_CAP) -> ConstructionOutput:
    """C4-free planar graph rich in k-cycles: junction vertices in a cyclic
    layout, consecutive pairs joined by m internally disjoint paths."""
    if k < 5:
        raise ConstructionError(f"need k >= 5, got {k}")
    if k == 5:
        # one bundle of length-3 paths plus a fixed length-2 arc
        m = (n - 3) // 2
        if m < 1:
            raise ConstructionError("need n >= 5 for k = 5")
        j0, j1, arc = 0, 1, 2
        edges = [(j0, arc), (arc, j1)]
        labels = {"J0": j0, "J1": j1, "A.0": arc}
        nid = 3
        for j in range(m):
            a, b = nid, nid + 1
            nid += 2
            labels[f"P0.{j}.0"] = a
            labels[f"P0.{j}.1"] = b
            edges += [(j0, a), (a, b), (b, j1)]
        graph = build_graph(nid, edges)
        declared = m
    else:
        segments = _segment_lengths(k)
        q = len(segments)
        variable = sum(length - 1 for length in segments)
        m = (n - q) // variable
        if m < 1:
            raise ConstructionError(f"need n >= {q + variable} for k = {k}")
        edges = []
        labels = {f"J{i}": i for i in range(q)}
        nid = q
        for si, length in enumerate(segments):
            a, b = si, (si + 1) % q
            for j in range(m):
                ids = list(range(nid, nid + length - 1))
                nid += length - 1
                for pos, vid in enumerate(ids):
                    labels[f"P{si}.{j}.{pos}"] = vid
                chain = [a] + ids + [b]
                edges.extend((chain[p], chain[p + 1]) for p in range(len(chain) - 1))
        graph = build_graph(nid, edges)
        declared = 2 * m * m - m if k == 6 else m ** q
    if graph.n > n:
        raise ConstructionError("bundles exceeded the vertex budget")
    cert = _certify(graph, (4,), f"C{k}", lambda g: count_cycles(g, k),
                    declared, True, count_cap)
    return ConstructionOutput(graph, labels, cert)


def conjecture_family(k: int, ell: int, n: int, *,
                      count_cap: int = COUNT_CERT_CAP) -> ConstructionOutput:
    """Parallelize the beta_ell witness of C_k: floor(k/(ell+1)) runs of
    ell consecutive vertices each become m parallel copies, giving at least
    m^floor(k/(ell+1)) k-cycles while staying planar and free of even
    cycles of length <= 2*ell."""
    if ell < 1:
        raise ConstructionError(f"ell must be >= 1, got {ell}")
    if k < 2 * (ell + 1):
        raise ConstructionError(f"need k >= {2 * (ell + 1)} for ell = {ell}")
    b, r = divmod(k, ell + 1)
    fixed = b + r  # one separator per run plus the remainder arc
    m = (n - fixed) // (b * ell)
    if m < 1:
        raise ConstructionError(f"need n >= {fixed + b * ell} for k = {k}")
    # fixed backbone: separators S0..S_{b-1}; remainder arc R0..R_{r-1}
    # cyclic order: [run 0] S0 [run 1] S1 ... [run b-1] S_{b-1} R0..R_{r-1}
    labels = {f"S{i}": i for i in range(b)}
    for j in range(r):
        labels[f"R{j}"] = b + j
    edges = []
    if r:
        chain = [b - 1] + [b + j for j in range(r)]
        edges.extend((chain[p], chain[p + 1]) for p in range(len(chain) - 1))
    nid = fixed
    for run in range(b):
        before = (b + r - 1) if (run == 0 and r) else (run - 1) % b
        after = run
        for j in range(m):
            ids = list(range(nid, nid + ell))
            nid += ell
            for pos, vid in enumerate(ids):
                labels[f"W{run}.{j}.{pos}"] = vid
            chain = [before] + ids + [after]
            edges.extend((chain[p], chain[p + 1]) for p in range(len(chain) - 1))
    graph = build_graph(nid, edges)
    if graph.n > n:
        raise ConstructionError("parallel runs exceeded the vertex budget")
    family = tuple(range(4, 2 * ell + 1, 2))
    cert = _certify(graph, family, f"C{k}", lambda g: count_cycles(g, k),
                    m ** b, False, count_cap)
    return ConstructionOutput(graph, labels, cert)


# ======================================================================
# Registry used by the CLI and the growth probes
# ======================================================================

@dataclass(frozen=True)
class ConstructionSpec:
    """A construction family name plus its non-size parameters; the vertex
    budget n may live in params or be supplied per call."""
    family: str
    params: dict


def build_construction(spec: ConstructionSpec, n: int | None = None,
                       *, count_cap: int = COUNT_CERT_CAP) -> ConstructionOutput:
    """Dispatch on spec.family.  `n` overrides params['n'] when given."""
    family = spec.family
    p = dict(spec.params)
    if n is not None:
        p["n"] = n
    try:
        if family == "tree_beta_blowup":
            return tree_beta_blowup(p["tree"], p["n"], count_cap=count_cap)
        if family == "cycle_blowup":
            return cycle_blowup(p["k"], p["n"], count_cap=count_cap)
        if family == "even_tree_parallel_paths":
            return even_tree_parallel_paths(p["tree"], p["ell"], p["n"],
                                            count_cap=count_cap)
        if family == "pentagon_extremal":
            return pentagon_extremal(p["t"], p["s"], count_cap=count_cap)
        if family == "ck_c4free_parallel":
            return ck_c4free_parallel(p["k"], p["n"], count_cap=count_cap)
        if family == "conjecture_family":
            return conjecture_family(p["k"], p["ell"], p["n"], count_cap=count_cap)
    except KeyError as missing:
        raise ConstructionError(f"family {family!r} needs parameter {missing}")
    raise ConstructionError(f"unknown construction family {family!r}")


CONSTRUCTION_FAMILIES = (
    "tree_beta_blowup", "cycle_blowup", "even_tree_parallel_paths",
    "pentagon_extremal", "ck_c4free_parallel", "conjecture_family")


def probe_count(spec: ConstructionSpec, graph: Graph) -> int:
    """Count the family's own pattern in a built instance, using the cycle
    counter for cycle patterns and the copy counter for tree patterns."""
    family = spec.family
    if family in ("cycle_blowup", "ck_c4free_parallel", "conjecture_family"):
        return count_cycles(graph, spec.params["k"])
    if family == "pentagon_extremal":
        return count_cycles(graph, 5)
    if family in ("tree_beta_blowup", "even_tree_parallel_paths"):
        return count_copies(spec.params["tree"], graph)
    raise ConstructionError(f"unknown construction family {family!r}")
