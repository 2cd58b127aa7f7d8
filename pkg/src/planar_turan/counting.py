"""Copy, embedding, path and tripod counts.

Copies of a pattern h in a host g are subgraphs of g isomorphic to h;
the optimized route counts injective homomorphisms by backtracking in a
connectivity-first vertex order with bitmask candidate filtering, then
divides by |Aut(h)|.  The plain injective-homomorphism counter walks
pattern vertices in id order with no candidate masks, so the two sides
share no pruning logic and can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import automorphism_count
from .cycles import ForbiddenFamily, is_family_free
from .graph import Graph
from .graph6 import to_graph6


@dataclass(frozen=True)
class Pattern:
    """A pattern graph with its automorphism count precomputed."""

    graph: Graph
    automorphisms: int
    name: str | None = None

    @classmethod
    def from_graph(cls, g: Graph, name: str | None = None) -> Pattern:
        return cls(g, automorphism_count(g), name)


@dataclass(frozen=True)
class EmpiricalBound:
    quantity_name: str
    observed_max: int
    parameters: dict[str, int]
    witness_graph6: str | None = None
    witness_pair: tuple[int, int] | None = None


def _embedding_order(h: Graph) -> list[int]:
    """Max-connectivity-first static order: most already-placed neighbors,
    ties broken by higher degree then lower id."""
    remaining = set(range(h.n))
    order: list[int] = []
    while remaining:
        best = max(remaining, key=lambda v: (
            sum(1 for w in h.adj[v] if w in set(order)),
            h.degree(v), -v))
        order.append(best)
        remaining.discard(best)
    return order


def _count_embeddings(h: Graph, g: Graph) -> int:
    if h.n > g.n:
        return 0
    if h.n == 0:
        return 1
    order = _embedding_order(h)
    rank = {v: i for i, v in enumerate(order)}
    placed_nbrs: list[list[int]] = [
        [w for w in h.adj[v] if rank[w] < i] for i, v in enumerate(order)]
    hdeg = [h.degree(v) for v in order]
    gbits = g.bits
    gdeg = [g.degree(w) for w in range(g.n)]
    full = (1 << g.n) - 1
    images = [0] * h.n

    def rec(i: int, used: int) -> int:
        if i == h.n:
            return 1
        cand = full & ~used
        for u in placed_nbrs[i]:
            cand &= gbits[images[u]]
        need = hdeg[i]
        v = order[i]
        total = 0
        m = cand
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            if gdeg[w] >= need:
                images[v] = w
                total += rec(i + 1, used | low)
        return total

    return rec(0, 0)


def count_copies(h: Graph | Pattern, g: Graph) -> int:
    """Number of subgraphs of g isomorphic to h."""
    if isinstance(h, Pattern):
        pattern_graph, aut = h.graph, h.automorphisms
    else:
        pattern_graph, aut = h, automorphism_count(h)
    embeddings = _count_embeddings(pattern_graph, g)
    assert embeddings % aut == 0, "embedding count must be divisible by |Aut|"
    return embeddings // aut


def count_injective_homs(h: Graph, g: Graph) -> int:
    """Injective edge-preserving maps V(h) -> V(g), vertices in id order."""
    if h.n > g.n:
        return 0
    images = [-1] * h.n

    def rec(v: int, used: int) -> int:
        if v == h.n:
            return 1
        total = 0
        for w in range(g.n):
            if used >> w & 1:
                continue
            if all(g.has_edge(images[u], w) for u in h.adj[v] if u < v):
                images[v] = w
                total += rec(v + 1, used | 1 << w)
        images[v] = -1
        return total

    return rec(0, 0)


def has_injective_hom(h: Graph, g: Graph) -> bool:
    """Early-exit variant: does g contain a copy of h at all?"""
    if h.n > g.n or h.edge_count > g.edge_count:
        return False
    order = _embedding_order(h)
    rank = {v: i for i, v in enumerate(order)}
    placed_nbrs = [[w for w in h.adj[v] if rank[w] < i] for i, v in enumerate(order)]
    full = (1 << g.n) - 1
    images = [0] * h.n

    def rec(i: int, used: int) -> bool:
        if i == h.n:
            return True
        cand = full & ~used
        for u in placed_nbrs[i]:
            cand &= g.bits[images[u]]
        v = order[i]
        m = cand
        while m:
            low = m & -m
            w = low.bit_length() - 1
            m ^= low
            if g.degree(w) >= h.degree(v):
                images[v] = w
                if rec(i + 1, used | low):
                    return True
        return False

    return rec(0, 0)


def count_paths_between(g: Graph, u: int, v: int, k: int) -> int:
    """Paths from u to v with exactly k edges (internally simple)."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("endpoint out of range")
    if u == v:
        raise ValueError("endpoints must be distinct")
    if k <= 0:
        return 0
    if k == 1:
        return 1 if g.has_edge(u, v) else 0
    bits = g.bits
    adj = g.adj
    vbit = 1 << v

    def rec(cur: int, visited: int, r: int) -> int:
        if r == 2:
            return (bits[cur] & bits[v] & ~visited & ~vbit).bit_count()
        total = 0
        for w in adj[cur]:
            if w != v and not visited >> w & 1:
                total += rec(w, visited | 1 << w, r - 1)
        return total

    return rec(u, 1 << u, k)


def _simple_path_masks(g: Graph, x: int, target: int, length: int) -> list[int]:
    """Vertex masks (endpoints included) of simple x->target paths with
    exactly `length` edges."""
    if length == 0:
        return [1 << x] if x == target else []
    if x == target:
        return []
    out: set[int] = set()
    tbit = 1 << target

    def rec(cur: int, mask: int, r: int) -> None:
        if r == 1:
            if g.has_edge(cur, target):
                out.add(mask | tbit)
            return
        for w in g.adj[cur]:
            if w != target and not mask >> w & 1:
                rec(w, mask | 1 << w, r - 1)

    rec(x, 1 << x, length)
    return sorted(out)


def count_tripod_vertices(g: Graph, v: int, u: int, w: int,
                          n1: int, n2: int, n3: int) -> int:
    """Vertices x with three paths to v, u, w of lengths n1, n2, n3 that
    pairwise share only x."""
    if len({v, u, w}) != 3:
        raise ValueError("v, u, w must be three distinct vertices")
    for t in (v, u, w):
        if not 0 <= t < g.n:
            raise ValueError(f"vertex {t} out of range")
    if min(n1, n2, n3) < 0:
        raise ValueError("path lengths must be >= 0")
    count = 0
    for x in range(g.n):
        sets1 = _simple_path_masks(g, x, v, n1)
        if not sets1:
            continue
        sets2 = _simple_path_masks(g, x, u, n2)
        if not sets2:
            continue
        sets3 = _simple_path_masks(g, x, w, n3)
        if not sets3:
            continue
        xbit = 1 << x
        if any(a & b == xbit and a & c == xbit and b & c == xbit
               for a in sets1 for b in sets2 for c in sets3):
            count += 1
    return count


def probe_bounded_paths(graphs, ell: int, k: int) -> EmpiricalBound:
    """Max of count_paths_between(g, u, v, k) over all pairs in a stream of
    graphs that must avoid even cycles of length <= 2*ell."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if not 1 <= k <= ell:
        raise ValueError(f"need 1 <= k <= ell, got k={k}, ell={ell}")
    family = ForbiddenFamily.even_cycles_through(ell)
    best = -1
    best_graph: Graph | None = None
    best_pair: tuple[int, int] | None = None
    instances = 0
    for g in graphs:
        instances += 1
        if not is_family_free(g, family):
            raise ValueError(
                f"probe instance {instances} contains a forbidden even cycle "
                f"(family C4..C{2 * ell})")
        for a in range(g.n):
            for b in range(a + 1, g.n):
                c = count_paths_between(g, a, b, k)
                if c > best:
                    best, best_graph, best_pair = c, g, (a, b)
    if instances == 0:
        raise ValueError("empty probe stream")
    assert best_graph is not None
    return EmpiricalBound(
        quantity_name=f"max-paths-length-{k}",
        observed_max=best,
        parameters={"ell": ell, "k": k, "instances": instances},
        witness_graph6=to_graph6(best_graph) if best_graph.n <= 258047 else None,
        witness_pair=best_pair)
