"""Permutation type, metric, and enumeration streams."""

import itertools
import random

import pytest

from permarray.exactmath import binomial, derangement_count, factorial
from permarray.perm import (
    Permutation,
    compose,
    distance_matrix,
    hamming_distance,
    identity,
    inverse,
    iterate_all,
    iterate_derangements_on,
    iterate_weight,
    support,
    weight,
)


def test_constructor_accepts_bijections():
    assert Permutation((2, 0, 1)) == (2, 0, 1)
    assert identity(4) == (0, 1, 2, 3)
    assert identity(0) == ()


@pytest.mark.parametrize("bad", [(0, 0, 1), (0, 2), (1, 2, 3), (-1, 0), (0, 1.5)])
def test_constructor_rejects_non_bijections(bad):
    with pytest.raises(ValueError):
        Permutation(bad)


def test_distance_basics():
    assert hamming_distance((0, 1, 2), (0, 2, 1)) == 2
    assert hamming_distance((0, 1, 2), (0, 1, 2)) == 0
    with pytest.raises(ValueError):
        hamming_distance((0, 1), (0, 1, 2))


def test_weight_and_support():
    p = Permutation((1, 0, 2, 4, 3))
    assert weight(p) == 4
    assert support(p) == (0, 1, 3, 4)
    assert weight(identity(6)) == 0
    assert support(identity(6)) == ()


def test_compose_and_inverse():
    a = Permutation((1, 2, 0))
    b = Permutation((0, 2, 1))
    # (a after b)(i) = a[b[i]]
    assert compose(a, b) == (1, 0, 2)
    assert compose(a, inverse(a)) == identity(3)
    assert compose(inverse(a), a) == identity(3)
    with pytest.raises(ValueError):
        compose(a, identity(4))


def test_distance_is_weight_of_relative_permutation():
    rng = random.Random(20260819)
    perms = [Permutation(p) for p in itertools.permutations(range(7))]
    for _ in range(1000):
        x, y = rng.choice(perms), rng.choice(perms)
        assert hamming_distance(x, y) == weight(compose(x, inverse(y)))


def test_metric_and_left_invariance_samples():
    rng = random.Random(7)
    perms = [Permutation(p) for p in itertools.permutations(range(6))]
    for _ in range(300):
        x, y, z = (rng.choice(perms) for _ in range(3))
        dxy = hamming_distance(x, y)
        assert dxy == hamming_distance(y, x)
        assert (dxy == 0) == (x == y)
        assert dxy <= hamming_distance(x, z) + hamming_distance(z, y)
        # composing on the left with z preserves distance
        assert hamming_distance(compose(z, x), compose(z, y)) == dxy


@pytest.mark.parametrize("n", range(2, 6))
def test_no_pair_at_distance_one(n):
    perms = list(iterate_all(n))
    for x, y in itertools.combinations(perms, 2):
        assert hamming_distance(x, y) >= 2


@pytest.mark.parametrize("n", range(8))
def test_iterate_all_is_exhaustive_and_lexicographic(n):
    perms = list(iterate_all(n))
    assert len(perms) == factorial(n)
    assert perms == sorted(perms)
    assert len(set(perms)) == len(perms)


@pytest.mark.parametrize("n", range(2, 8))
def test_iterate_weight_cardinalities(n):
    for w in [0] + list(range(2, n + 1)):
        stream = list(iterate_weight(n, w))
        assert len(stream) == binomial(n, w) * derangement_count(w)
        assert all(weight(p) == w for p in stream)
        assert len(set(stream)) == len(stream)


def test_iterate_weight_rejects_weight_one():
    with pytest.raises(ValueError):
        list(iterate_weight(5, 1))
    with pytest.raises(ValueError):
        list(iterate_weight(5, 6))


def test_iterate_weight_is_support_first():
    stream = list(iterate_weight(4, 2))
    supports = [support(p) for p in stream]
    assert supports == sorted(supports)
    # and within one support, image tuples ascend
    by_support = itertools.groupby(stream, key=support)
    for _, group in by_support:
        tuples = list(group)
        assert tuples == sorted(tuples)


def test_iterate_derangements_on():
    on_012 = list(iterate_derangements_on((0, 1, 2), 5))
    assert len(on_012) == 2
    assert all(support(p) == (0, 1, 2) for p in on_012)
    assert list(iterate_derangements_on((3,), 5)) == []
    assert list(iterate_derangements_on((), 4)) == [identity(4)]
    with pytest.raises(ValueError):
        list(iterate_derangements_on((1, 1), 4))
    with pytest.raises(ValueError):
        list(iterate_derangements_on((4,), 4))


def test_distance_matrix_matches_pairwise():
    perms = list(iterate_weight(5, 3))
    dist = distance_matrix(perms)
    for i, x in enumerate(perms):
        for j, y in enumerate(perms):
            assert dist[i, j] == hamming_distance(x, y)
    assert distance_matrix([]).shape == (0, 0)
