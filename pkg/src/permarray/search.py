"""Exhaustive search oracles for small permutation arrays and constant-weight
codes, via branch-and-bound maximum-clique search.

Vertices are the eligible objects in their fixed enumeration order (see
``perm``); two vertices are adjacent when their distance clears the target.
At every node the candidates are greedily colored in that order (classes with
no internal edge; a clique takes at most one vertex per class), and branching
walks the candidates in descending color order so the color number doubles as
a per-branch bound. Everything is a deterministic function of the input, so
identical inputs and limits always reproduce the same witness. For full-array
searches the identity can be assumed to be a member (composing every member
with one member's inverse preserves all distances), so the search runs over
permutations at distance >= d from the identity and adds the identity back to
the witness.

Node limits are deterministic; wall-clock limits are checked periodically and
are therefore best-effort.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .constructions import BinaryCwCode, PermutationArray
from .perm import Permutation, distance_matrix, identity, iterate_all, iterate_weight, weight

STATUS_EXACT = "exact"
STATUS_LOWER_BOUND_ONLY = "lower-bound-only"
STATUS_INCOMPLETE = "incomplete"


@dataclass(frozen=True)
class SearchLimits:
    """Budget for one search; None disables that limit."""

    max_nodes: int | None = 100_000_000
    max_seconds: float | None = 300.0


DEFAULT_LIMITS = SearchLimits()


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a search: ``value`` is exact when ``status`` is "exact",
    otherwise a witnessed lower bound ("incomplete" means the search was
    interrupted mid-run; "lower-bound-only" means the limits were exhausted
    before any search node ran, so only a greedy witness was built).
    ``witness`` always verifies at the target distance."""

    status: str
    value: int
    witness: PermutationArray | BinaryCwCode
    nodes: int = 0


class _LimitHit(Exception):
    pass


class _Budget:
    __slots__ = ("max_nodes", "deadline", "nodes")

    def __init__(self, limits: SearchLimits) -> None:
        self.max_nodes = limits.max_nodes
        self.deadline = (
            None if limits.max_seconds is None else time.monotonic() + limits.max_seconds
        )
        self.nodes = 0

    def spend(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise _LimitHit
        if self.deadline is not None and (self.nodes & 255) == 1:
            if time.monotonic() > self.deadline:
                raise _LimitHit


def _greedy_clique(adjacency: list[int]) -> list[int]:
    """Clique built by repeatedly taking the lowest-index compatible vertex."""
    chosen: list[int] = []
    allowed = (1 << len(adjacency)) - 1
    while allowed:
        v = (allowed & -allowed).bit_length() - 1
        chosen.append(v)
        allowed &= adjacency[v]
    return chosen


def _color_order(cand: int, adjacency: list[int]) -> list[tuple[int, int]]:
    """Greedy coloring of the candidate set, scanned in index order.

    Returns (color, vertex) pairs sorted ascending; the color of a vertex
    bounds any clique drawn from it and the vertices colored before it."""
    classes: list[int] = []
    order: list[tuple[int, int]] = []
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        neighbors = adjacency[v]
        for i, cls in enumerate(classes):
            if not neighbors & cls:
                classes[i] = cls | low
                order.append((i + 1, v))
                break
        else:
            classes.append(low)
            order.append((len(classes), v))
    order.sort()
    return order


def _max_clique(adjacency: list[int], limits: SearchLimits) -> tuple[list[int], bool, int]:
    """Largest clique among vertices 0..m-1 with the given neighbor bitmasks.

    Returns (vertex indices ascending, exhausted, nodes). When the budget
    runs out the best clique found so far is returned with exhausted False.
    """
    m = len(adjacency)
    if m == 0:
        return [], True, 0
    best = _greedy_clique(adjacency)
    budget = _Budget(limits)
    current: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best
        budget.spend()
        if len(current) + cand.bit_count() <= len(best):
            return
        for color, v in reversed(_color_order(cand, adjacency)):
            # every unprocessed candidate has color <= this one, so the node
            # cannot beat the incumbent once the check fails
            if len(current) + color <= len(best):
                return
            cand ^= 1 << v
            current.append(v)
            sub = cand & adjacency[v]
            if sub:
                expand(sub)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, m + 1000))
    try:
        expand((1 << m) - 1)
        exhausted = True
    except _LimitHit:
        exhausted = False
    finally:
        sys.setrecursionlimit(old_limit)
    return best, exhausted, budget.nodes


def _adjacency_at_distance(vectors: list, d: int) -> list[int]:
    """Neighbor bitmasks for "coordinate-wise distance >= d" on equal-length
    integer vectors."""
    dist = distance_matrix(vectors)
    ok = dist >= d
    np.fill_diagonal(ok, False)
    packed = np.packbits(ok, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _over_budget_upfront(m: int, limits: SearchLimits) -> bool:
    if limits.max_nodes is not None and m > limits.max_nodes:
        return True
    return limits.max_seconds is not None and limits.max_seconds <= 0


def _greedy_at_distance(vectors: list, d: int) -> list[int]:
    """Greedy clique indices without building the full graph (used when the
    budget rules out a real search)."""
    chosen: list[int] = []
    for i, vec in enumerate(vectors):
        if all(
            sum(x != y for x, y in zip(vec, vectors[j])) >= d for j in chosen
        ):
            chosen.append(i)
    return chosen


def exact_p(n: int, d: int, limits: SearchLimits = DEFAULT_LIMITS) -> SearchOutcome:
    """Exact maximum size of a permutation array on n points with pairwise
    distance >= d, by clique search with the identity forced in. Practical up
    to n = 7 (and small distances only below n = 6) under default limits."""
    if n < 1:
        raise ValueError(f"need n >= 1: {n}")
    if not 1 <= d <= n:
        raise ValueError(f"distance {d} outside valid range 1..{n}")
    ident = identity(n)
    vertices = [p for p in iterate_all(n) if weight(p) >= d]
    if _over_budget_upfront(len(vertices), limits):
        chosen = _greedy_at_distance(vertices, d)
        witness = PermutationArray(n, [ident] + [vertices[i] for i in chosen])
        return SearchOutcome(STATUS_LOWER_BOUND_ONLY, len(witness), witness)
    adjacency = _adjacency_at_distance(vertices, d)
    clique, exhausted, nodes = _max_clique(adjacency, limits)
    witness = PermutationArray(n, [ident] + [vertices[i] for i in clique])
    status = STATUS_EXACT if exhausted else STATUS_INCOMPLETE
    return SearchOutcome(status, len(witness), witness, nodes)


def exact_p_cw(n: int, d: int, w: int, limits: SearchLimits = DEFAULT_LIMITS) -> SearchOutcome:
    """Exact maximum size of a permutation array on n points with pairwise
    distance >= d and every member of weight exactly w. The identity is not a
    member (its weight is 0), so the clique runs over the whole weight-w
    stream."""
    if n < 1:
        raise ValueError(f"need n >= 1: {n}")
    if d < 1:
        raise ValueError(f"distance must be positive: {d}")
    vertices = list(iterate_weight(n, w))
    if _over_budget_upfront(len(vertices), limits):
        chosen = _greedy_at_distance(vertices, d)
        witness = PermutationArray(n, [vertices[i] for i in chosen])
        return SearchOutcome(STATUS_LOWER_BOUND_ONLY, len(witness), witness)
    adjacency = _adjacency_at_distance(vertices, d)
    clique, exhausted, nodes = _max_clique(adjacency, limits)
    witness = PermutationArray(n, [vertices[i] for i in clique])
    status = STATUS_EXACT if exhausted else STATUS_INCOMPLETE
    return SearchOutcome(status, len(witness), witness, nodes)


def exact_a_cw(n: int, d: int, w: int, limits: SearchLimits = DEFAULT_LIMITS) -> SearchOutcome:
    """Exact maximum size of a binary code of length n, constant weight w,
    minimum distance d (even: distances between equal-weight words are always
    even)."""
    if n < 1:
        raise ValueError(f"need n >= 1: {n}")
    if d <= 0 or d % 2 != 0:
        raise ValueError(f"constant-weight distance must be a positive even integer: {d}")
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} outside valid range 0..{n}")
    words = list(combinations(range(n), w))
    indicators = [[1 if i in set(word) else 0 for i in range(n)] for word in words]
    if _over_budget_upfront(len(words), limits):
        chosen = _greedy_at_distance(indicators, d)
        witness = BinaryCwCode(n, w, tuple(words[i] for i in chosen), d)
        return SearchOutcome(STATUS_LOWER_BOUND_ONLY, len(witness), witness)
    adjacency = _adjacency_at_distance(indicators, d)
    clique, exhausted, nodes = _max_clique(adjacency, limits)
    witness = BinaryCwCode(n, w, tuple(words[i] for i in clique), d)
    status = STATUS_EXACT if exhausted else STATUS_INCOMPLETE
    return SearchOutcome(status, len(witness), witness, nodes)


def min_distance(array: PermutationArray) -> int:
    """Exact pairwise minimum distance of the array; needs >= 2 members."""
    return array.min_distance()


def verify_pa(array: PermutationArray, d: int) -> list[tuple[Permutation, Permutation, int]]:
    """All member pairs at distance below d; an empty list means the array
    verifies at distance d."""
    members = array.members
    if len(members) < 2:
        return []
    dist = distance_matrix(members)
    bad = np.argwhere(np.triu(dist < d, k=1))
    return [(members[i], members[j], int(dist[i, j])) for i, j in bad]
