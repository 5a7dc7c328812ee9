"""Constructions of permutation arrays and the constant-weight codes that
feed them.

The named families here ("perfect" families) meet the quotient bound
n!/(d-1)! with equality: translations of a cyclic group at distance n, the
full symmetric group at distance 2, the even permutations at distance 3, the
affine maps x -> ax + b over a prime field at distance p - 1, and the
fractional-linear maps over a prime field acting on the projective line at
distance p - 1. Block k-cycles and support lifting build constant-weight
arrays matching the exact values the bounds module reports.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from .exactmath import factorial
from .perm import Permutation, distance_matrix


class PermutationArray:
    """A set of distinct permutations of a common length, kept sorted in
    lexicographic image order. The pairwise minimum distance is computed on
    first request and cached; constructors never stamp a claimed distance
    into the cache, so verification always measures."""

    def __init__(self, n: int, members: Iterable[Permutation]) -> None:
        unique = sorted(set(members))
        for p in unique:
            if len(p) != n:
                raise ValueError(f"member of length {len(p)} in an array on {n} points")
        self.n = n
        self.members: tuple[Permutation, ...] = tuple(unique)
        self._min_distance: int | None = None

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, p: object) -> bool:
        return p in set(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermutationArray):
            return NotImplemented
        return self.n == other.n and self.members == other.members

    def __repr__(self) -> str:
        return f"PermutationArray(n={self.n}, size={len(self.members)})"

    def min_distance(self) -> int:
        """Exact pairwise minimum Hamming distance; needs >= 2 members."""
        if len(self.members) < 2:
            raise ValueError("minimum distance needs at least two members")
        if self._min_distance is None:
            dist = distance_matrix(self.members)
            m = len(self.members)
            self._min_distance = int(
                min(dist[i, j] for i in range(m) for j in range(i + 1, m))
            )
        return self._min_distance


@dataclass(frozen=True)
class BinaryCwCode:
    """A binary constant-weight code stored as sorted support tuples, with
    the distance its builder promises (indicator distance between two words
    is 2 * (weight - overlap), always even)."""

    n: int
    weight: int
    words: tuple[tuple[int, ...], ...]
    distance: int

    def __post_init__(self) -> None:
        seen = set()
        for word in self.words:
            if tuple(sorted(word)) != word or len(set(word)) != len(word):
                raise ValueError(f"word {word!r} is not a sorted duplicate-free tuple")
            if len(word) != self.weight:
                raise ValueError(f"word {word!r} does not have weight {self.weight}")
            if word and not (0 <= word[0] and word[-1] < self.n):
                raise ValueError(f"word {word!r} outside 0..{self.n - 1}")
            if word in seen:
                raise ValueError(f"duplicate word {word!r}")
            seen.add(word)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def violations(self, d: int) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """All word pairs at indicator distance below d."""
        out = []
        for a, b in combinations(self.words, 2):
            dist = 2 * (self.weight - len(set(a) & set(b)))
            if dist < d:
                out.append((a, b, dist))
        return out


def block_cycle_cwpa(n: int, k: int) -> PermutationArray:
    """The floor(n/k) permutations of n points that each cycle one block
    [ik, ik + k - 1] of k consecutive points and fix everything else.

    Supports are disjoint, so with at least two members the pairwise distance
    is exactly 2k; every member has weight exactly k. Meets the exact value
    floor(n/k) for weight-k arrays at distance 2k.
    """
    if k < 2:
        raise ValueError(f"block size must be at least 2: {k}")
    if n < k:
        raise ValueError(f"need n >= k; got n={n}, k={k}")
    members = []
    for i in range(n // k):
        images = list(range(n))
        for j in range(i * k, i * k + k - 1):
            images[j] = j + 1
        images[i * k + k - 1] = i * k
        members.append(Permutation(images))
    return PermutationArray(n, members)


def greedy_partial_steiner(n: int, blocksize: int) -> BinaryCwCode:
    """Greedy lexicographic partial Steiner packing: scan the size-
    ``blocksize`` subsets of {0..n-1} in lexicographic order, keeping each
    block that meets every kept block in at most one point.

    The result is a constant-weight code with indicator distance at least
    2 * (blocksize - 1). Greedy is not always maximum, but at (7, 3) it does
    reach the full 7-block packing.
    """
    if blocksize < 2:
        raise ValueError(f"block size must be at least 2: {blocksize}")
    if n < blocksize:
        raise ValueError(f"need n >= blocksize; got n={n}, blocksize={blocksize}")
    kept: list[frozenset[int]] = []
    words = []
    for block in combinations(range(n), blocksize):
        candidate = frozenset(block)
        if all(len(candidate & other) <= 1 for other in kept):
            kept.append(candidate)
            words.append(block)
    return BinaryCwCode(n, blocksize, tuple(words), 2 * (blocksize - 1))


def lift_binary_cw_code(code: BinaryCwCode, k: int) -> PermutationArray:
    """Turn a weight-(k+1) binary code with pairwise support overlap at most
    one point into a permutation array of weight k+1 and distance >= 2k + 1:
    each word becomes the cycle sending every support point to the next in
    sorted order (the largest wraps to the smallest).

    Two lifted members disagree on every point where exactly one support is
    present (>= 2k of them) and on at least one shared point when the
    supports meet, which is where the odd extra position comes from; disjoint
    supports give distance 2k + 2.
    """
    if k < 1:
        raise ValueError(f"need k >= 1: {k}")
    if code.weight != k + 1:
        raise ValueError(f"lift needs weight {k + 1} words, code has weight {code.weight}")
    for a, b in combinations(code.words, 2):
        overlap = set(a) & set(b)
        if len(overlap) > 1:
            raise ValueError(
                f"supports {a!r} and {b!r} share {len(overlap)} points; at most 1 allowed"
            )
    members = []
    for word in code.words:
        images = list(range(code.n))
        for idx, point in enumerate(word):
            images[point] = word[(idx + 1) % len(word)]
        members.append(Permutation(images))
    return PermutationArray(code.n, members)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return False


def _cyclic(n: int) -> PermutationArray:
    if n < 1:
        raise ValueError(f"need n >= 1: {n}")
    members = [Permutation((i + c) % n for i in range(n)) for c in range(n)]
    return PermutationArray(n, members)


def _symmetric(n: int) -> PermutationArray:
    if n < 1:
        raise ValueError(f"need n >= 1: {n}")
    from .perm import iterate_all

    return PermutationArray(n, iterate_all(n))


def _parity(p: Permutation) -> int:
    seen = [False] * len(p)
    transpositions = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        transpositions += length - 1
    return transpositions % 2


def _alternating(n: int) -> PermutationArray:
    if n < 1:
        raise ValueError(f"need n >= 1: {n}")
    from .perm import iterate_all

    return PermutationArray(n, (p for p in iterate_all(n) if _parity(p) == 0))


def _affine(p: int) -> PermutationArray:
    """All maps x -> ax + b over the field of prime order p: p(p-1)
    permutations, pairwise distance p - 1 (two distinct affine maps agree on
    at most one point)."""
    if not _is_prime(p):
        raise ValueError(f"affine family needs a prime modulus: {p}")
    members = [
        Permutation((a * x + b) % p for x in range(p))
        for a in range(1, p)
        for b in range(p)
    ]
    return PermutationArray(p, members)


def _projective(p: int) -> PermutationArray:
    """All fractional-linear maps x -> (ax + b)/(cx + d), ad - bc != 0 over
    the field of prime order p, acting on the projective line {0..p-1, inf}
    with inf encoded as index p: (p+1)p(p-1) permutations of p + 1 points at
    pairwise distance p - 1 (two distinct maps agree on at most two points).
    """
    if not _is_prime(p):
        raise ValueError(f"projective family needs a prime modulus: {p}")
    images = set()
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 0:
                        continue
                    img = []
                    for x in range(p):
                        den = (c * x + d) % p
                        if den == 0:
                            img.append(p)
                        else:
                            img.append((a * x + b) * pow(den, p - 2, p) % p)
                    if c == 0:
                        img.append(p)
                    else:
                        img.append(a * pow(c, p - 2, p) % p)
                    images.add(tuple(img))
    return PermutationArray(p + 1, (Permutation(t) for t in images))


# family name -> (builder, length, claimed distance, size meeting n!/(d-1)!)
_PERFECT_FAMILIES = {
    "cyclic": (_cyclic, lambda n: n, lambda n: n, lambda n: n),
    "symmetric": (_symmetric, lambda n: n, lambda n: 2, factorial),
    "alternating": (_alternating, lambda n: n, lambda n: 3, lambda n: factorial(n) // 2),
    "agl": (_affine, lambda p: p, lambda p: p - 1, lambda p: p * (p - 1)),
    "pgl2": (_projective, lambda p: p + 1, lambda p: p - 1, lambda p: (p + 1) * p * (p - 1)),
}


def perfect_families() -> tuple[str, ...]:
    """Names accepted by ``perfect_pa``."""
    return tuple(_PERFECT_FAMILIES)


def perfect_pa(family: str, param: int) -> PermutationArray:
    """Build a member of one of the distance-optimal families by name:
    "cyclic", "symmetric" or "alternating" (param = number of points), or
    "agl" / "pgl2" (param = a prime modulus; composite moduli are rejected,
    prime-power fields are out of scope)."""
    try:
        builder = _PERFECT_FAMILIES[family][0]
    except KeyError:
        raise ValueError(
            f"unknown family {family!r}; expected one of {', '.join(_PERFECT_FAMILIES)}"
        ) from None
    return builder(param)


def family_length(family: str, param: int) -> int:
    """Number of points the family's members permute."""
    return _PERFECT_FAMILIES[family][1](param)


def family_distance(family: str, param: int) -> int:
    """The pairwise distance the family guarantees."""
    return _PERFECT_FAMILIES[family][2](param)


def family_size(family: str, param: int) -> int:
    """The member count the family reaches, equal to n!/(d-1)!."""
    return _PERFECT_FAMILIES[family][3](param)


def known_perfect(n: int, d: int) -> bool:
    """Whether (n, d) is on the list of parameters where the quotient bound
    n!/(d-1)! is known to be met with equality.

    Covers the constructible families above (extended to prime-power fields,
    where the same constructions work but are not built here) and the two
    sporadic multiply-transitive families at (11, 8) and (12, 8).
    """
    if not 1 <= d <= n:
        return False
    if d == n or d == 2:
        return True
    if d == 3 and n >= 3:
        return True
    if d == n - 1 and _is_prime_power(n):
        return True
    if d == n - 2 and _is_prime_power(n - 1):
        return True
    return (n, d) in ((11, 8), (12, 8))


def perfect_size(n: int, d: int) -> int | None:
    """Size n!/(d-1)! when (n, d) is on the known-perfect list, else None."""
    if not known_perfect(n, d):
        return None
    return factorial(n) // factorial(d - 1)
