"""Copy counting via two independent routes plus the path/tripod helpers."""

import random

import pytest

from planar_turan.bruteforce import count_copies_brute, count_paths_brute
from planar_turan.canonical import automorphism_count
from planar_turan.counting import (
    EmpiricalBound,
    Pattern,
    count_copies,
    count_injective_homs,
    count_paths_between,
    count_tripod_vertices,
    has_injective_hom,
    probe_bounded_paths,
)
from planar_turan.graph import (
    build_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_with_edges,
    star_graph,
)


def _random_graph(rng, n, p):
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                           if rng.random() < p])


@pytest.mark.parametrize("h,g,copies", [
    (star_graph(3), complete_graph(4), 4),
    (path_with_edges(2), cycle_graph(5), 5),
    (path_with_edges(3), complete_graph(4), 12),
    (cycle_graph(3), complete_graph(5), 10),
    (complete_graph(5), complete_graph(6), 6),
    (empty_graph(1), empty_graph(2), 2),
    (cycle_graph(4), cycle_graph(5), 0),
])
def test_frozen_copy_counts(h, g, copies):
    assert count_copies(h, g) == copies
    assert count_copies_brute(h, g) == copies


def test_copies_times_automorphisms_is_injective_homs():
    assert count_injective_homs(path_with_edges(2), cycle_graph(5)) == 10
    rng = random.Random(321)
    for _ in range(150):
        h = _random_graph(rng, rng.randint(1, 4), rng.uniform(0.2, 0.9))
        g = _random_graph(rng, rng.randint(1, 7), rng.uniform(0.1, 0.8))
        copies = count_copies(h, g)
        assert copies * automorphism_count(h) == count_injective_homs(h, g)
        assert copies == count_copies_brute(h, g)


def test_pattern_reuse():
    pat = Pattern.from_graph(cycle_graph(5), "C5")
    assert pat.automorphisms == 10
    assert pat.name == "C5"
    assert count_copies(pat, cycle_graph(5)) == 1


def test_pattern_larger_than_host():
    assert count_copies(complete_graph(5), complete_graph(4)) == 0
    assert count_injective_homs(complete_graph(5), complete_graph(4)) == 0
    assert not has_injective_hom(complete_graph(5), complete_graph(4))


def test_has_injective_hom():
    assert has_injective_hom(path_with_edges(3), cycle_graph(6))
    assert has_injective_hom(star_graph(3), complete_graph(4))
    assert not has_injective_hom(cycle_graph(4), cycle_graph(5))
    assert not has_injective_hom(star_graph(3), cycle_graph(8))
    rng = random.Random(654)
    for _ in range(120):
        h = _random_graph(rng, rng.randint(1, 4), rng.uniform(0.2, 0.9))
        g = _random_graph(rng, rng.randint(1, 7), rng.uniform(0.1, 0.8))
        assert has_injective_hom(h, g) == (count_copies(h, g) > 0)


def test_count_paths_between_frozen():
    c6 = cycle_graph(6)
    assert count_paths_between(c6, 0, 3, 3) == 2
    assert count_paths_between(c6, 0, 3, 1) == 0
    assert count_paths_between(c6, 0, 1, 1) == 1
    assert count_paths_between(complete_graph(4), 0, 1, 2) == 2
    assert count_paths_between(complete_graph(4), 0, 1, 3) == 2


def test_count_paths_between_matches_brute():
    rng = random.Random(987)
    for _ in range(100):
        n = rng.randint(2, 7)
        g = _random_graph(rng, n, rng.uniform(0.2, 0.9))
        u, v = rng.sample(range(n), 2)
        for k in range(1, 5):
            assert count_paths_between(g, u, v, k) == count_paths_brute(g, u, v, k)


def test_count_paths_between_validation():
    with pytest.raises(ValueError):
        count_paths_between(cycle_graph(4), 0, 0, 2)
    with pytest.raises(ValueError):
        count_paths_between(cycle_graph(4), 0, 9, 2)


def test_tripod_vertices():
    assert count_tripod_vertices(star_graph(3), 1, 2, 3, 1, 1, 1) == 1
    assert count_tripod_vertices(complete_graph(4), 0, 1, 2, 1, 1, 1) == 1
    # on a path no vertex reaches three distinct ends disjointly
    p = path_with_edges(4)
    assert count_tripod_vertices(p, 0, 2, 4, 1, 1, 1) == 0
    with pytest.raises(ValueError):
        count_tripod_vertices(star_graph(3), 1, 1, 2, 1, 1, 1)
    with pytest.raises(ValueError):
        count_tripod_vertices(star_graph(3), 1, 2, 9, 1, 1, 1)
    with pytest.raises(ValueError):
        count_tripod_vertices(star_graph(3), 1, 2, 3, -1, 1, 1)


def test_probe_bounded_paths():
    hosts = [path_with_edges(5), star_graph(4), cycle_graph(5)]
    bound = probe_bounded_paths(hosts, 2, 1)
    assert isinstance(bound, EmpiricalBound)
    assert bound.observed_max == 1
    assert bound.parameters == {"ell": 2, "k": 1, "instances": 3}
    assert bound.witness_pair is not None


def test_probe_bounded_paths_validation():
    with pytest.raises(ValueError):
        probe_bounded_paths([], 2, 1)
    with pytest.raises(ValueError):
        probe_bounded_paths([path_with_edges(3)], 2, 3)
    with pytest.raises(ValueError):
        # hosts must avoid the even cycles the probe is studying
        probe_bounded_paths([cycle_graph(4)], 2, 1)
