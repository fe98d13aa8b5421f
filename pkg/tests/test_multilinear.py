import itertools
from math import comb

import pytest

from utils.multilinear import (alt_basis, altij_basis, altij_index, basis_descriptor,
                               permutation_sign, wedge_coeff)


class TestBases:
    def test_alt_basis_is_lexicographic(self):
        assert alt_basis(3, 1) == ((1,), (2,), (3,))
        assert alt_basis(3, 2) == ((1, 2), (1, 3), (2, 3))
        assert alt_basis(3, 0) == ((),)

    def test_degree_above_dimension_is_empty(self):
        assert alt_basis(3, 4) == ()

    @pytest.mark.parametrize("n", range(0, 7))
    def test_altij_dimension(self, n):
        for i in range(n + 1):
            for J in range(n + 1):
                assert len(altij_basis(n, i, J)) == comb(n, i) * comb(n, J)

    def test_altij_ordering(self):
        basis = altij_basis(2, 1, 1)
        assert basis == (((1,), (1,)), ((1,), (2,)), ((2,), (1,)), ((2,), (2,)))
        assert altij_index(2, 1, 1, (2,), (1,)) == 2
        assert len(altij_basis(2, 1, 2)) == 2

    def test_descriptor_is_json_ready(self):
        assert basis_descriptor(2, 0, 1) == [[[], [1]], [[], [2]]]


class TestWedge:
    def test_examples(self):
        assert wedge_coeff((2, 1)) == (-1, (1, 2))
        assert wedge_coeff((1, 1)) == (0, None)
        assert wedge_coeff((3, 1, 2)) == (1, (1, 2, 3))
        assert wedge_coeff(()) == (1, ())

    @pytest.mark.parametrize("k", range(1, 6))
    def test_sign_matches_inversion_parity(self, k):
        for perm in itertools.permutations(range(1, k + 1)):
            inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
            assert permutation_sign(perm) == (-1) ** inversions

    @pytest.mark.parametrize("k", range(1, 6))
    def test_reversal_sign(self, k):
        for perm in itertools.permutations(range(1, k + 1)):
            forward, _ = wedge_coeff(perm)
            backward, _ = wedge_coeff(tuple(reversed(perm)))
            assert forward * backward == (-1) ** (k * (k - 1) // 2)
