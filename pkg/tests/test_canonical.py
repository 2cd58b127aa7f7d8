"""Canonical labeling checked against permutation brute force.

The brute oracle tries every vertex permutation, so cross-checks stay
at 6 vertices or fewer; the fast path is additionally exercised on
larger random graphs through relabel invariance.
"""

import random
from itertools import combinations

import pytest

from planar_turan.bruteforce import are_isomorphic_brute, automorphism_count_brute
from planar_turan.canonical import (
    are_isomorphic,
    automorphism_count,
    canonical_form,
    canonical_labeling,
)
from planar_turan.graph import (
    build_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_with_edges,
    star_graph,
)


def _all_labeled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs))
                              if mask >> i & 1])


def _random_graph(rng, n, p):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                           if rng.random() < p])


def test_eleven_classes_on_four_vertices():
    forms = {}
    for g in _all_labeled_graphs(4):
        forms.setdefault(canonical_form(g), 0)
        forms[canonical_form(g)] += 1
    assert len(forms) == 11
    assert sum(forms.values()) == 64


def test_relabel_invariance():
    rng = random.Random(4242)
    for _ in range(120):
        n = rng.randint(1, 8)
        g = _random_graph(rng, n, rng.uniform(0.1, 0.9))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_isomorphism_agrees_with_brute():
    rng = random.Random(99)
    agree_true = agree_false = 0
    for _ in range(200):
        n = rng.randint(1, 5)
        g = _random_graph(rng, n, rng.uniform(0.2, 0.8))
        h = _random_graph(rng, n, rng.uniform(0.2, 0.8))
        want = are_isomorphic_brute(g, h)
        assert are_isomorphic(g, h) == want
        if want:
            agree_true += 1
        else:
            agree_false += 1
    assert agree_true > 0 and agree_false > 0


def test_different_order_never_isomorphic():
    assert not are_isomorphic(empty_graph(3), empty_graph(4))


def test_automorphism_counts_exhaustive_small():
    for n in range(1, 5):
        for g in _all_labeled_graphs(n):
            assert automorphism_count(g) == automorphism_count_brute(g)


def test_automorphism_counts_random():
    rng = random.Random(555)
    for _ in range(60):
        n = rng.randint(5, 6)
        g = _random_graph(rng, n, rng.uniform(0.2, 0.8))
        assert automorphism_count(g) == automorphism_count_brute(g)


@pytest.mark.parametrize("g,count", [
    (cycle_graph(5), 10),
    (cycle_graph(6), 12),
    (complete_graph(4), 24),
    (path_with_edges(3), 2),
    (star_graph(3), 6),
    (complete_bipartite(3, 3), 72),
    (empty_graph(4), 24),
])
def test_automorphism_counts_named(g, count):
    assert automorphism_count(g) == count


def test_canonical_labeling_realizes_form():
    rng = random.Random(808)
    for _ in range(80):
        n = rng.randint(1, 7)
        g = _random_graph(rng, n, rng.uniform(0.1, 0.9))
        form, pos = canonical_labeling(g)
        assert sorted(pos) == list(range(n))
        assert g.relabel(pos) == form.as_graph()
        # applying a canonical form to its own graph is a fixed point
        assert canonical_form(form.as_graph()) == form


def test_forms_order_deterministically():
    forms = sorted(canonical_form(g) for g in _all_labeled_graphs(3))
    again = sorted(canonical_form(g) for g in reversed(list(_all_labeled_graphs(3))))
    assert forms == again


def test_vertex_cap():
    with pytest.raises(ValueError):
        canonical_form(empty_graph(65))
