"""Upper bounds on the maximum size of permutation arrays.

P(n, d) is the largest number of permutations of n points with pairwise
Hamming distance at least d; P(n, d, w) restricts members to weight exactly w,
and A(n, d, w) is the analogous maximum for binary constant-weight codes.

Every bound here is computed in exact integer or rational arithmetic
(``fractions.Fraction``) with a single floor at the very end; flooring
intermediate quantities would break the gap inequalities the test suite
checks. Each result carries a derivation trace naming the rules that
produced it:

==================  =========================================================
tag                 rule
==================  =========================================================
DV                  quotient bound n! / (d-1)!
SP                  sphere packing: floor(n! / V(n, floor((d-1)/2)))
ME                  even-distance refinement of SP for d = 2k
MO-corollary        odd-distance refinement of SP for d = 2k+1, constant-
                    weight sizes estimated by the Johnson-style ceiling
MO-exact-A          same, but at least one size came from a table of exact
                    constant-weight code values
subset-average      averaging over a subset of the symmetric group
recursive(m=..)     lifting a bound from m points to n points
cw-binary-spread    A(n, d, w) = 1 when d > 2w
cw-binary-partition A(n, 2w, w) = floor(n/w)
cw-binary-johnson   A(n, 2k, k+1) <= floor(n/(k+1) * floor((n-1)/k))
cw-table            value taken from a user-supplied table
cw-pa-I .. cw-pa-VI constant-weight permutation-array rules (the roman
                    labels skip V; there is no rule V)
d1-as-d2            distance 1 rewritten as distance 2 (distinct
                    permutations always differ in >= 2 positions)
==================  =========================================================
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .exactmath import ball_volume, binomial, derangement_count, factorial

KIND_EXACT = "exact"
KIND_UPPER = "upper"
KIND_LOWER = "lower"
_KINDS = (KIND_EXACT, KIND_UPPER, KIND_LOWER)


@dataclass(frozen=True)
class BoundResult:
    """A bound value plus how it was obtained.

    ``value`` is None exactly when ``applicable`` is False, which is how
    out-of-range requests are reported (callers fall back to other rules
    instead of receiving a silently weakened number).
    """

    value: int | None
    kind: str
    derivation: tuple[str, ...]
    applicable: bool = True

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown bound kind: {self.kind!r}")
        if not self.derivation:
            raise ValueError("derivation trace must be non-empty")
        if self.applicable != (self.value is not None):
            raise ValueError("value must be present exactly when applicable")


def _exact(value: int, *tags: str) -> BoundResult:
    return BoundResult(value, KIND_EXACT, tags)


def _upper(value: int, *tags: str) -> BoundResult:
    return BoundResult(value, KIND_UPPER, tags)


def _not_applicable(*tags: str) -> BoundResult:
    return BoundResult(None, KIND_UPPER, tags, applicable=False)


def _floor(x: Fraction) -> int:
    return math.floor(x)


def dv_ratio(n: int, d: int) -> Fraction:
    """The quotient bound n!/(d-1)! as an exact rational (always integral)."""
    if not 1 <= d <= n:
        raise ValueError(f"distance {d} outside valid range 1..{n}")
    return Fraction(factorial(n), factorial(d - 1))


def dv_bound(n: int, d: int) -> BoundResult:
    """Upper bound P(n, d) <= n!/(d-1)!, from the quotient by a stabilizer
    chain; the division is always exact."""
    return _upper(_floor(dv_ratio(n, d)), "DV")


def sp_ratio(n: int, d: int) -> Fraction:
    """The sphere-packing quantity n! / V(n, floor((d-1)/2)) pre-floor."""
    if not 1 <= d <= n:
        raise ValueError(f"distance {d} outside valid range 1..{n}")
    return Fraction(factorial(n), ball_volume(n, (d - 1) // 2))


def sp_bound(n: int, d: int) -> BoundResult:
    """Sphere-packing upper bound: balls of radius floor((d-1)/2) around
    members are disjoint, so P(n, d) <= floor(n! / V(n, r))."""
    return _upper(_floor(sp_ratio(n, d)), "SP")


def me_ratio(n: int, k: int) -> Fraction:
    """Pre-floor value of the even-distance bound on P(n, 2k).

    Strengthens sphere packing by charging each member, on top of its
    radius-(k-1) ball, an equal share of the weight-k permutations it can
    see: the denominator grows by C(n, k) * D_k / floor(n/k).
    """
    if not 2 <= k <= n // 2:
        raise ValueError(f"k={k} outside valid range 2..{n // 2}")
    shared = Fraction(binomial(n, k) * derangement_count(k), n // k)
    return Fraction(factorial(n)) / (ball_volume(n, k - 1) + shared)


def me_bound(n: int, k: int) -> BoundResult:
    """Upper bound on P(n, 2k) for 2 <= k <= floor(n/2); out-of-range k
    reports not-applicable so callers fall back to DV/SP."""
    if not 2 <= k <= n // 2:
        return _not_applicable("ME")
    return _upper(_floor(me_ratio(n, k)), "ME")


def johnson_ceiling(m: int, k: int) -> int:
    """Upper bound floor(m/(k+1) * floor((m-1)/k)) on the size of a binary
    code of length m, weight k+1, minimum distance 2k (pairwise supports
    meeting in at most one point)."""
    if m < 0 or k < 1:
        raise ValueError(f"invalid Johnson ceiling arguments m={m}, k={k}")
    return _floor(Fraction(m, k + 1) * ((m - 1) // k))


def _cw_size_estimate(m: int, k: int, table: "CwTable | None") -> tuple[int, bool]:
    """Best available upper value for A(m, 2k, k+1): an exact table entry if
    one exists, else the Johnson ceiling. Returns (value, came_from_table)."""
    if table is not None:
        entry = table.get(m, 2 * k, k + 1)
        if entry is not None and entry.kind == KIND_EXACT:
            return entry.value, True
    return johnson_ceiling(m, k), False


def mo_ratio(n: int, k: int, table: "CwTable | None" = None) -> Fraction:
    """Pre-floor value of the odd-distance bound on P(n, 2k+1).

    Charges each member its radius-k ball plus a share of the weight-(k+1)
    shell; the share T is clamped at zero, so the result never drops below
    plain sphere packing. Estimating both constant-weight code sizes from
    above only weakens the bound, so any valid upper estimate keeps it safe.
    """
    if k < 2 or 2 * k > n - k - 1:
        raise ValueError(f"odd-distance bound needs k >= 2 and n >= 3k+1; got n={n}, k={k}")
    a_full, _ = _cw_size_estimate(n, k, table)
    a_reduced, _ = _cw_size_estimate(n - k, k, table)
    numerator = (
        binomial(n, k + 1) * derangement_count(k + 1)
        - a_reduced * binomial(n, k) * derangement_count(k)
    )
    share = max(Fraction(0), Fraction(numerator, a_full))
    return Fraction(factorial(n)) / (ball_volume(n, k) + share)


def mo_bound(n: int, k: int, table: "CwTable | None" = None) -> BoundResult:
    """Upper bound on P(n, 2k+1) for k >= 2 and n >= 3k+1; out-of-range
    requests report not-applicable.

    With ``table`` entries of kind exact for A(m, 2k, k+1), those values
    replace the Johnson ceiling and the trace says "MO-exact-A".
    """
    if k < 2 or 2 * k > n - k - 1:
        return _not_applicable("MO-corollary")
    _, full_from_table = _cw_size_estimate(n, k, table)
    _, reduced_from_table = _cw_size_estimate(n - k, k, table)
    tag = "MO-exact-A" if (full_from_table or reduced_from_table) else "MO-corollary"
    return _upper(_floor(mo_ratio(n, k, table)), tag)


def subset_bound(n: int, d: int, omega_size: int, p_omega: int) -> BoundResult:
    """Averaging bound: if a subset of size ``omega_size`` of the permutations
    of n points contains at most ``p_omega`` members of any array with
    distance d, then P(n, d) <= floor(n! * p_omega / omega_size)."""
    if not 1 <= d <= n:
        raise ValueError(f"distance {d} outside valid range 1..{n}")
    if not 0 < omega_size <= factorial(n):
        raise ValueError(f"subset size {omega_size} outside valid range 1..n!")
    if p_omega < 0:
        raise ValueError(f"negative member count: {p_omega}")
    return _upper(factorial(n) * p_omega // omega_size, "subset-average")


def recursive_bound(n: int, d: int, m: int, bound_at_m: BoundResult) -> BoundResult:
    """Lift a bound on P(m, d) to P(n, d) <= floor(n! * P(m, d) / m!) by
    grouping permutations that agree on the last n - m points.

    ``m = n`` is the identity lift and returns the input value unchanged.
    """
    if not d <= m <= n:
        raise ValueError(f"need d <= m <= n; got n={n}, d={d}, m={m}")
    if not bound_at_m.applicable:
        raise ValueError("cannot lift a not-applicable bound")
    if bound_at_m.kind == KIND_LOWER:
        raise ValueError("cannot lift a lower bound through an upper-bound rule")
    value = factorial(n) * bound_at_m.value // factorial(m)
    kind = bound_at_m.kind if m == n else KIND_UPPER
    return BoundResult(value, kind, (f"recursive(m={m})", *bound_at_m.derivation))


def cw_binary_bound(n: int, d: int, w: int, table: "CwTable | None" = None) -> BoundResult:
    """Upper bound (exact where an identity applies) on A(n, d, w), the
    maximum binary code of length n, constant weight w, minimum distance d.

    Only even distances occur for constant-weight words, so odd d is
    rejected. Dispatch: d > 2w forces a single word; d = 2w means pairwise
    disjoint supports, giving exactly floor(n/w); d = 2k with w = k+1 gives
    the Johnson ceiling; anything else is answered from ``table`` or
    reported not-applicable.
    """
    if d <= 0 or d % 2 != 0:
        raise ValueError(f"constant-weight distance must be a positive even integer: {d}")
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} outside valid range 0..{n}")
    if d > 2 * w:
        return _exact(1, "cw-binary-spread")
    if d == 2 * w:
        return _exact(n // w, "cw-binary-partition")
    k = d // 2
    if w == k + 1:
        return _upper(johnson_ceiling(n, k), "cw-binary-johnson")
    if table is not None:
        entry = table.get(n, d, w)
        if entry is not None:
            return BoundResult(entry.value, entry.kind, ("cw-table",))
    return _not_applicable("cw-binary")


def cw_pa_bound(n: int, d: int, w: int) -> BoundResult:
    """Upper bound (exact where known) on P(n, d, w), the maximum permutation
    array of n points with pairwise distance >= d and every member of weight
    exactly w.

    Weight 1 is impossible and rejected. Rules, tried in order:

    - II:  d > 2w forces a single member (w != 1).
    - III: (d, w) = (2k, k) with 2 <= k <= floor(n/2) gives exactly
           floor(n/k), met by disjoint k-cycles.
    - IV:  (d, w) = (2k+1, k+1) with k <= floor((n-1)/2) equals
           A(n, 2k, k+1); the kind mirrors the constant-weight answer.
    - VI:  (d, w) = (4, 3) with n >= 4 gives floor(2 * C(n, 2) / 3).
    - I:   d > w gives P(n, d, w) <= A(n, 2d - 2w, w).
    """
    if not 0 <= w <= n:
        raise ValueError(f"weight {w} outside valid range 0..{n}")
    if w == 1:
        raise ValueError("weight 1 is impossible for a permutation")
    if d < 1:
        raise ValueError(f"distance must be positive: {d}")
    if d > 2 * w:
        return _exact(1, "cw-pa-II")
    if d % 2 == 0:
        k = d // 2
        if w == k and 2 <= k <= n // 2:
            return _exact(n // k, "cw-pa-III")
    else:
        k = (d - 1) // 2
        if w == k + 1 and 1 <= k <= (n - 1) // 2:
            inner = cw_binary_bound(n, 2 * k, k + 1)
            if not inner.applicable:
                return _not_applicable("cw-pa-IV")
            return BoundResult(inner.value, inner.kind, ("cw-pa-IV", *inner.derivation))
    if (d, w) == (4, 3) and n >= 4:
        return _upper(2 * binomial(n, 2) // 3, "cw-pa-VI")
    if d > w:
        inner = cw_binary_bound(n, 2 * d - 2 * w, w)
        if not inner.applicable:
            return _not_applicable("cw-pa-I")
        return _upper(inner.value, "cw-pa-I", *inner.derivation)
    return _not_applicable("cw-pa")


def best_upper_bound(n: int, d: int, table: "CwTable | None" = None) -> BoundResult:
    """The smallest applicable upper bound on P(n, d) among DV, SP, ME (even
    d) and MO (odd d). Ties go to the shorter derivation, then to the rule
    order just given. Distance 1 is rewritten as distance 2, since distinct
    permutations always differ in at least two positions."""
    tags: tuple[str, ...] = ()
    if d == 1 and n >= 2:
        tags = ("d1-as-d2",)
        d = 2
    if not 2 <= d <= n:
        raise ValueError(f"distance {d} outside valid range 2..{n}")
    candidates = [dv_bound(n, d), sp_bound(n, d)]
    if d % 2 == 0:
        candidates.append(me_bound(n, d // 2))
    else:
        candidates.append(mo_bound(n, (d - 1) // 2, table))
    best = min(
        (c for c in candidates if c.applicable),
        key=lambda c: (c.value, len(c.derivation)),
    )
    if tags:
        return BoundResult(best.value, best.kind, tags + best.derivation)
    return best


class CwTable:
    """Known sizes and bounds for binary constant-weight codes, keyed by
    (n, d, w).

    Entries are validated against the structural identities on insert, so a
    stored value can never contradict them: when d > 2w the only code is a
    single word, when d = 2w the maximum is exactly floor(n/w), and when
    d = 2k, w = k+1 nothing exceeds the Johnson ceiling. Reads are lock-free;
    writes take a lock, matching the read-mostly usage.
    """

    def __init__(self) -> None:
        self._entries: dict[tuple[int, int, int], BoundResult] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(sorted(self._entries.items()))

    def get(self, n: int, d: int, w: int) -> BoundResult | None:
        return self._entries.get((n, d, w))

    def insert(self, n: int, d: int, w: int, value: int, kind: str) -> None:
        if kind not in _KINDS:
            raise ValueError(f"unknown bound kind: {kind!r}")
        if d <= 0 or d % 2 != 0:
            raise ValueError(f"constant-weight distance must be a positive even integer: {d}")
        if not 0 <= w <= n:
            raise ValueError(f"weight {w} outside valid range 0..{n}")
        if value < 1:
            raise ValueError(f"a constant-weight code always has at least one word: {value}")
        if kind in (KIND_EXACT, KIND_LOWER) and value > binomial(n, w):
            raise ValueError(f"value {value} exceeds the C({n},{w}) words available")
        self._check_identities(n, d, w, value, kind)
        with self._lock:
            self._entries[(n, d, w)] = BoundResult(value, kind, ("cw-table",))

    @staticmethod
    def _check_identities(n: int, d: int, w: int, value: int, kind: str) -> None:
        known_exact: int | None = None
        known_upper: int | None = None
        if d > 2 * w:
            known_exact = 1
        elif d == 2 * w:
            known_exact = n // w
        elif w == d // 2 + 1:
            known_upper = johnson_ceiling(n, d // 2)
        if known_exact is not None:
            if kind == KIND_EXACT and value != known_exact:
                raise ValueError(
                    f"entry ({n},{d},{w})={value} contradicts the exact value {known_exact}"
                )
            if kind == KIND_UPPER and value < known_exact:
                raise ValueError(
                    f"upper entry ({n},{d},{w})={value} is below the exact value {known_exact}"
                )
            if kind == KIND_LOWER and value > known_exact:
                raise ValueError(
                    f"lower entry ({n},{d},{w})={value} is above the exact value {known_exact}"
                )
        if known_upper is not None and kind in (KIND_EXACT, KIND_LOWER) and value > known_upper:
            raise ValueError(
                f"entry ({n},{d},{w})={value} exceeds the Johnson ceiling {known_upper}"
            )

    @classmethod
    def loads(cls, text: str) -> "CwTable":
        """Parse a table from text: one entry per line, five whitespace-
        separated fields "n d w value kind", with '#' comments and blank
        lines ignored."""
        table = cls()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 5:
                raise ValueError(f"line {lineno}: expected 'n d w value kind', got {raw!r}")
            try:
                n, d, w, value = (int(f) for f in fields[:4])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: non-integer field in {raw!r}") from exc
            try:
                table.insert(n, d, w, value, fields[4])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from exc
        return table

    @classmethod
    def load(cls, path: str | Path) -> "CwTable":
        """Read a table from a file in the ``loads`` format."""
        return cls.loads(Path(path).read_text(encoding="utf-8"))
