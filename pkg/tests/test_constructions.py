"""Constructions: explicit arrays, binary codes, the support-lifting map,
and the group families that meet the quotient bound."""

import pytest

from permarray.bounds import dv_bound
from permarray.constructions import (
    BinaryCwCode,
    PermutationArray,
    block_cycle_cwpa,
    family_distance,
    family_length,
    family_size,
    greedy_partial_steiner,
    known_perfect,
    lift_binary_cw_code,
    perfect_families,
    perfect_pa,
    perfect_size,
)
from permarray.exactmath import factorial
from permarray.perm import Permutation, identity, weight


class TestPermutationArray:
    def test_members_are_sorted_and_deduplicated(self):
        a = Permutation((1, 0, 2))
        b = Permutation((0, 2, 1))
        array = PermutationArray(3, [a, b, a])
        assert len(array) == 2
        assert tuple(array) == (b, a)
        assert a in array

    def test_min_distance(self):
        array = PermutationArray(4, [identity(4), Permutation((1, 0, 3, 2))])
        assert array.min_distance() == 4

    def test_min_distance_needs_two_members(self):
        with pytest.raises(ValueError):
            PermutationArray(3, [identity(3)]).min_distance()

    def test_mixed_lengths_rejected(self):
        with pytest.raises(ValueError):
            PermutationArray(3, [identity(3), identity(4)])

    def test_equality(self):
        members = [identity(3), Permutation((1, 2, 0))]
        assert PermutationArray(3, members) == PermutationArray(3, list(reversed(members)))


class TestBinaryCwCode:
    def test_validation(self):
        code = BinaryCwCode(5, 2, ((0, 1), (2, 3)), 4)
        assert code.violations(4) == []
        with pytest.raises(ValueError):
            BinaryCwCode(5, 2, ((1, 0), (2, 3)), 4)  # unsorted word
        with pytest.raises(ValueError):
            BinaryCwCode(5, 2, ((0, 1), (0, 1)), 4)  # duplicate word
        with pytest.raises(ValueError):
            BinaryCwCode(5, 2, ((0, 5),), 4)  # coordinate out of range
        with pytest.raises(ValueError):
            BinaryCwCode(5, 2, ((0, 1, 2),), 4)  # wrong weight

    def test_violations_lists_close_pairs(self):
        code = BinaryCwCode(5, 3, ((0, 1, 2), (0, 1, 3)), 2)
        assert code.violations(2) == []
        assert code.violations(4) == [((0, 1, 2), (0, 1, 3), 2)]


class TestBlockCycles:
    def test_length_six_weight_two(self):
        array = block_cycle_cwpa(6, 2)
        assert len(array) == 3
        assert array.min_distance() == 4
        assert all(weight(p) == 2 for p in array)

    def test_length_four_members(self):
        array = block_cycle_cwpa(4, 2)
        expected = {
            Permutation((1, 0, 2, 3)),
            Permutation((0, 1, 3, 2)),
        }
        assert set(array) == expected

    def test_matches_floor_count(self):
        for n in range(4, 11):
            for k in range(2, n // 2 + 1):
                array = block_cycle_cwpa(n, k)
                assert len(array) == n // k
                assert all(weight(p) == k for p in array)
                if len(array) >= 2:
                    assert array.min_distance() == 2 * k

    def test_single_block_has_no_pairs(self):
        array = block_cycle_cwpa(5, 3)
        assert len(array) == 1

    def test_errors(self):
        with pytest.raises(ValueError):
            block_cycle_cwpa(4, 1)
        with pytest.raises(ValueError):
            block_cycle_cwpa(4, 5)


class TestGreedyPartialSteiner:
    def test_seven_points_triples(self):
        code = greedy_partial_steiner(7, 3)
        assert len(code.words) == 7
        assert code.words[0] == (0, 1, 2)
        assert code.distance == 4
        assert code.violations(4) == []
        # every pair of blocks shares at most one point
        for i, a in enumerate(code.words):
            for b in code.words[i + 1 :]:
                assert len(set(a) & set(b)) <= 1

    def test_small_cases(self):
        assert len(greedy_partial_steiner(5, 3).words) == 2
        assert len(greedy_partial_steiner(3, 3).words) == 1

    def test_errors(self):
        with pytest.raises(ValueError):
            greedy_partial_steiner(4, 1)
        with pytest.raises(ValueError):
            greedy_partial_steiner(3, 4)


class TestSupportLifting:
    def test_two_overlapping_triples(self):
        code = BinaryCwCode(5, 3, ((0, 1, 2), (0, 3, 4)), 4)
        array = lift_binary_cw_code(code, 2)
        assert len(array) == 2
        assert array.min_distance() == 5
        assert all(weight(p) == 3 for p in array)
        # each image cycles its sorted support
        assert Permutation((1, 2, 0, 3, 4)) in array
        assert Permutation((3, 1, 2, 4, 0)) in array

    def test_disjoint_supports_gain_distance(self):
        code = BinaryCwCode(6, 3, ((0, 1, 2), (3, 4, 5)), 6)
        array = lift_binary_cw_code(code, 2)
        assert array.min_distance() == 6

    def test_fano_lift_reaches_declared_distance(self):
        code = greedy_partial_steiner(7, 3)
        array = lift_binary_cw_code(code, 2)
        assert len(array) == 7
        assert array.min_distance() >= 5

    def test_weight_mismatch_rejected(self):
        code = BinaryCwCode(5, 2, ((0, 1), (2, 3)), 4)
        with pytest.raises(ValueError):
            lift_binary_cw_code(code, 2)

    def test_overlap_violation_names_the_pair(self):
        code = BinaryCwCode(5, 3, ((0, 1, 2), (0, 1, 3)), 2)
        with pytest.raises(ValueError, match=r"\(0, 1, 2\).*\(0, 1, 3\)"):
            lift_binary_cw_code(code, 2)


class TestPerfectFamilies:
    def test_registry_names(self):
        assert set(perfect_families()) == {
            "cyclic",
            "symmetric",
            "alternating",
            "agl",
            "pgl2",
        }

    @pytest.mark.parametrize("n", range(2, 9))
    def test_cyclic(self, n):
        array = perfect_pa("cyclic", n)
        assert len(array) == family_size("cyclic", n) == n
        assert family_length("cyclic", n) == n
        if n >= 2:
            assert array.min_distance() == family_distance("cyclic", n) == n
        assert len(array) == dv_bound(n, n).value

    @pytest.mark.parametrize("n", range(2, 7))
    def test_symmetric(self, n):
        array = perfect_pa("symmetric", n)
        assert len(array) == factorial(n)
        assert array.min_distance() == 2
        assert len(array) == dv_bound(n, 2).value

    @pytest.mark.parametrize("n", range(4, 7))
    def test_alternating(self, n):
        array = perfect_pa("alternating", n)
        assert len(array) == factorial(n) // 2
        assert array.min_distance() == 3
        assert len(array) == dv_bound(n, 3).value

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_affine(self, p):
        array = perfect_pa("agl", p)
        assert family_length("agl", p) == p
        assert len(array) == p * (p - 1)
        assert array.min_distance() == p - 1
        assert len(array) == dv_bound(p, p - 1).value

    @pytest.mark.parametrize("p", [3, 5])
    def test_projective(self, p):
        array = perfect_pa("pgl2", p)
        assert family_length("pgl2", p) == p + 1
        assert len(array) == (p + 1) * p * (p - 1)
        assert array.min_distance() == p - 1
        assert len(array) == dv_bound(p + 1, p - 1).value

    def test_non_prime_parameters_rejected(self):
        with pytest.raises(ValueError):
            perfect_pa("agl", 4)
        with pytest.raises(ValueError):
            perfect_pa("pgl2", 6)
        with pytest.raises(ValueError):
            perfect_pa("agl", 1)

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            perfect_pa("dihedral", 5)


class TestKnownPerfect:
    def test_family_cases(self):
        assert known_perfect(9, 9)  # cyclic
        assert known_perfect(9, 2)  # symmetric
        assert known_perfect(9, 3)  # alternating
        assert known_perfect(7, 6)  # affine line, p = 7
        assert known_perfect(8, 6)  # projective line, p = 7
        assert known_perfect(9, 8)  # prime power 9, sharply 2-transitive
        assert known_perfect(11, 8)  # sporadic
        assert known_perfect(12, 8)  # sporadic

    def test_negative_cases(self):
        assert not known_perfect(6, 5)  # 6 is not a prime power
        assert not known_perfect(7, 5)
        assert not known_perfect(13, 9)
        assert not known_perfect(5, 6)  # d above n

    def test_perfect_size_matches_quotient_bound(self):
        assert perfect_size(9, 9) == 9
        assert perfect_size(7, 6) == 42
        assert perfect_size(8, 6) == 336
        assert perfect_size(6, 4) == 120  # fractional-linear maps over F_5
        assert perfect_size(6, 5) is None
