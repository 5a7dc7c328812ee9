"""Permutations of {0..n-1} as image tuples, with the Hamming metric and
fixed-order enumeration streams.

The distance between two permutations is the number of positions where their
images differ; the weight of a permutation is its distance from the identity,
i.e. the number of points it moves. Distinct permutations always differ in at
least two positions, so weight 1 is impossible.

Every enumeration stream in this module yields image tuples in lexicographic
order; ``iterate_weight`` is support-first (supports ascend lexicographically,
then the derangements of each support ascend lexicographically), which is the
order the search module relies on for reproducible witnesses.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence

import numpy as np


class Permutation(tuple):
    """A bijection on {0..n-1} stored as its tuple of images.

    Ordering and hashing are inherited from ``tuple``, so sorting a collection
    of permutations sorts lexicographically on images.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]) -> "Permutation":
        self = super().__new__(cls, images)
        n = len(self)
        seen = bytearray(n)
        for v in self:
            if not isinstance(v, int) or not 0 <= v < n or seen[v]:
                raise ValueError(f"not a bijection on 0..{n - 1}: {tuple(self)!r}")
            seen[v] = 1
        return self


def identity(n: int) -> Permutation:
    """Return the identity permutation on n points."""
    if n < 0:
        raise ValueError(f"negative length: {n}")
    return Permutation(range(n))


def hamming_distance(a: Sequence[int], b: Sequence[int]) -> int:
    """Return the number of positions where a and b differ."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(x != y for x, y in zip(a, b))


def weight(a: Sequence[int]) -> int:
    """Return the number of points a moves (its distance from the identity)."""
    return sum(v != i for i, v in enumerate(a))


def support(a: Sequence[int]) -> tuple[int, ...]:
    """Return the moved points of a as a sorted tuple."""
    return tuple(i for i, v in enumerate(a) if v != i)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return a after b: the permutation sending i to a[b[i]]."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return Permutation(a[v] for v in b)


def inverse(a: Permutation) -> Permutation:
    """Return the inverse permutation of a."""
    images = [0] * len(a)
    for i, v in enumerate(a):
        images[v] = i
    return Permutation(images)


def iterate_all(n: int) -> Iterator[Permutation]:
    """Yield every permutation of n points in lexicographic order."""
    if n < 0:
        raise ValueError(f"negative length: {n}")
    for images in itertools.permutations(range(n)):
        yield Permutation(images)


def iterate_derangements_on(moved: Sequence[int], n: int) -> Iterator[Permutation]:
    """Yield the permutations of n points that move exactly the given set of
    positions, in lexicographic image order.

    The stream is empty when the set admits no derangement (a single point
    cannot move to itself, so a size-1 set yields nothing).
    """
    points = tuple(sorted(moved))
    if len(set(points)) != len(points):
        raise ValueError(f"duplicate positions in support: {moved!r}")
    if points and not (0 <= points[0] and points[-1] < n):
        raise ValueError(f"support {moved!r} outside 0..{n - 1}")
    base = list(range(n))
    for assignment in itertools.permutations(points):
        if any(img == pos for img, pos in zip(assignment, points)):
            continue
        images = base.copy()
        for pos, img in zip(points, assignment):
            images[pos] = img
        yield Permutation(images)


def iterate_weight(n: int, w: int) -> Iterator[Permutation]:
    """Yield every permutation of n points with weight exactly w, support
    first: supports in lexicographic order, then each support's derangements
    in lexicographic image order.

    Weight 1 is impossible for a permutation and is rejected.
    """
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} outside valid range 0..{n}")
    if w == 1:
        raise ValueError("weight 1 is impossible: a single moved point has nowhere to go")
    if w == 0:
        yield identity(n)
        return
    for points in itertools.combinations(range(n), w):
        yield from iterate_derangements_on(points, n)


def distance_matrix(perms: Sequence[Sequence[int]]) -> np.ndarray:
    """Return the matrix of pairwise Hamming distances between the given
    equal-length permutations, as a square numpy array.

    Vectorized one position at a time, so memory stays at O(m^2) for m inputs.
    """
    m = len(perms)
    if m == 0:
        return np.zeros((0, 0), dtype=np.int16)
    arr = np.asarray(perms, dtype=np.int16)
    if arr.ndim != 2:
        raise ValueError("permutations must share a common length")
    agreements = np.zeros((m, m), dtype=np.int16)
    for col in range(arr.shape[1]):
        agreements += arr[:, col, None] == arr[None, :, col]
    return arr.shape[1] - agreements
