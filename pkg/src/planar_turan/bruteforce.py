"""Exhaustive reference implementations used as oracles.

Nothing here is clever on purpose: each function is the transparent,
factorial-cost version of an operation that the main modules implement
with pruning or smarter data structures.  Tests and `verify` claims
compare the two sides; keep these independent of the optimized code
paths.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .graph import Graph


def canon_code_by_permutations(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Lexicographically least edge list over all n! relabelings."""
    best: tuple[tuple[int, int], ...] | None = None
    verts = range(g.n)
    for perm in permutations(verts):
        edges = tuple(sorted(
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in g.edges))
        if best is None or edges < best:
            best = edges
    assert best is not None or g.n == 0
    return g.n, best if best is not None else ()


def are_isomorphic_brute(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    target = set(h.edges)
    for perm in permutations(range(g.n)):
        mapped = {(perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                  for u, v in g.edges}
        if mapped == target:
            return True
    return False


def automorphism_count_brute(g: Graph) -> int:
    edge_set = set(g.edges)
    count = 0
    for perm in permutations(range(g.n)):
        mapped = {(perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
                  for u, v in g.edges}
        if mapped == edge_set:
            count += 1
    return count


def count_cycles_brute(g: Graph, k: int) -> int:
    """Count k-cycles by labeled closed walks; each cycle appears 2k times."""
    if k < 3 or g.n < k:
        return 0
    total = 0
    for seq in permutations(range(g.n), k):
        ok = all(g.has_edge(seq[i], seq[i + 1]) for i in range(k - 1))
        if ok and g.has_edge(seq[-1], seq[0]):
            total += 1
    assert total % (2 * k) == 0
    return total // (2 * k)


def count_copies_brute(h: Graph, g: Graph) -> int:
    """Count subgraphs of g isomorphic to h, as distinct (vertices, edges) sets.

    For every |V(h)|-subset and every bijection onto it, the image of
    E(h) is collected when all its edges exist in g; distinct images are
    the copies.  No automorphism division is involved, which keeps this
    independent of the embedding-count route.
    """
    if h.n > g.n:
        return 0
    found: set[tuple[tuple[int, ...], frozenset[tuple[int, int]]]] = set()
    hedges = h.edges
    for subset in combinations(range(g.n), h.n):
        for perm in permutations(subset):
            image = []
            ok = True
            for u, v in hedges:
                a, b = perm[u], perm[v]
                if not g.has_edge(a, b):
                    ok = False
                    break
                image.append((a, b) if a < b else (b, a))
            if ok:
                # the vertex image is all of subset, so copies that differ
                # only in isolated-vertex placement stay distinct
                found.add((subset, frozenset(image)))
    return len(found)


def count_paths_brute(g: Graph, u: int, v: int, k: int) -> int:
    """Paths with exactly k edges from u to v, by enumerating internals."""
    if u == v:
        raise ValueError("endpoints must differ")
    if k == 0:
        return 0
    if k == 1:
        return 1 if g.has_edge(u, v) else 0
    others = [w for w in range(g.n) if w != u and w != v]
    total = 0
    for internals in permutations(others, k - 1):
        seq = (u,) + internals + (v,)
        if all(g.has_edge(seq[i], seq[i + 1]) for i in range(k)):
            total += 1
    return total


# ======================================================================
# Kuratowski-style planarity oracle: exhaustive search for a K5 or
# K3,3 subdivision.  Correct for any graph, practical for <= 8 or so
# vertices.
# ======================================================================

def _paths_between(g: Graph, a: int, b: int, allowed_mask: int):
    """Yield internal-vertex masks of a->b paths whose internals lie in
    allowed_mask.  The direct edge contributes the empty mask."""
    if g.has_edge(a, b):
        yield 0

    def rec(cur: int, used: int):
        for w in g.adj[cur]:
            if w == b:
                if used:
                    yield used
            elif allowed_mask >> w & 1 and not used >> w & 1:
                yield from rec(w, used | 1 << w)

    yield from rec(a, 0)


def _place_paths(g: Graph, pairs: list[tuple[int, int]], i: int,
                 free_mask: int) -> bool:
    if i == len(pairs):
        return True
    a, b = pairs[i]
    for internals in _paths_between(g, a, b, free_mask):
        if _place_paths(g, pairs, i + 1, free_mask & ~internals):
            return True
    return False


def has_k5_subdivision(g: Graph) -> bool:
    if g.n < 5:
        return False
    eligible = [v for v in range(g.n) if g.degree(v) >= 4]
    full = (1 << g.n) - 1
    for branch in combinations(eligible, 5):
        pairs = [(a, b) for a, b in combinations(branch, 2)]
        branch_mask = sum(1 << v for v in branch)
        if _place_paths(g, pairs, 0, full & ~branch_mask):
            return True
    return False


def has_k33_subdivision(g: Graph) -> bool:
    if g.n < 6:
        return False
    eligible = [v for v in range(g.n) if g.degree(v) >= 3]
    full = (1 << g.n) - 1
    for six in combinations(eligible, 6):
        rest = set(six)
        first = six[0]
        rest.discard(first)
        for two in combinations(sorted(rest), 2):
            left = (first,) + two
            right = tuple(sorted(rest - set(two)))
            pairs = [(a, b) for a in left for b in right]
            branch_mask = sum(1 << v for v in six)
            if _place_paths(g, pairs, 0, full & ~branch_mask):
                return True
    return False


def is_planar_by_subdivision(g: Graph) -> bool:
    """Kuratowski: planar iff no K5 and no K3,3 subdivision."""
    return not (has_k5_subdivision(g) or has_k33_subdivision(g))
