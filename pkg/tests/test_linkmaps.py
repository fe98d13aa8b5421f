import pytest

from utils.exactla import LinearMap, rank
from utils.linkmaps import (check_inj_surj, expected_inj_surj, s_matrix, sident_check, t_matrix,
                            tsst_check, w_basis, w_invariance_check, y_block_compatibility,
                            y_block_decomposition)


class TestS:
    def test_zero_forms_to_one_forms_is_identity(self):
        assert s_matrix(2, 0, 1) == LinearMap.identity(2)
        assert t_matrix(2, 0, 1) == LinearMap.identity(2)

    def test_shapes(self):
        assert s_matrix(3, 1, 1).shape == (3, 9)
        assert s_matrix(3, 1, 0).shape == (0, 3)
        assert s_matrix(3, 3, 1).shape == (0, 3)

    def test_entries_are_signs(self):
        for n in range(1, 5):
            for i in range(n + 1):
                for J in range(n + 1):
                    assert {v for _, _, v in s_matrix(n, i, J).nonzero()} <= {-1, 1}

    def test_top_forms_rank_one(self):
        assert rank(s_matrix(3, 2, 1)) == 1

    def test_labels(self):
        s = s_matrix(3, 1, 2)
        assert s.domain_label == "Alt^{1,2}(R^3)"
        assert s.codomain_label == "Alt^{2,1}(R^3)"

    @pytest.mark.parametrize("n", range(1, 6))
    def test_injective_surjective_law(self, n):
        for J in range(n):
            for i in range(n):
                injective, surjective = check_inj_surj(n, i, J + 1)
                want_inj, want_surj = expected_inj_surj(i, J)
                if want_inj:
                    assert injective, (n, i, J)
                if want_surj:
                    assert surjective, (n, i, J)

    def test_bijective_on_the_diagonal(self):
        assert check_inj_surj(3, 1, 2) == (True, True)
        assert check_inj_surj(3, 0, 2) == (True, False)
        assert check_inj_surj(3, 2, 2)[1]

    @pytest.mark.parametrize("n,i,J", [(3, 1, 2), (3, 2, 1), (4, 1, 3), (4, 2, 2), (2, 0, 2)])
    def test_tsst(self, n, i, J):
        assert tsst_check(n, i, J) == (True, True)


class TestW:
    def test_signs(self):
        w = w_basis(2, 1).basis_vectors
        assert w.shape == (4, 2)
        assert list(w.nonzero()) == [(1, 0, 1), (2, 1, -1)]

    def test_counts(self):
        assert w_basis(2, 0).basis_vectors.cols == 1
        assert w_basis(4, 2).basis_vectors.cols == 6

    def test_columns_orthonormal(self):
        w = w_basis(4, 2).basis_vectors
        assert w.T @ w == LinearMap.identity(6)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_sident_vanishes(self, n):
        for k in range(n):
            assert sident_check(n, k).is_zero(), (n, k)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_s_preserves_w(self, n):
        for k in range(n):
            assert w_invariance_check(n, k)


class TestYBlocks:
    def test_two_dimensional_split(self):
        blocks = y_block_decomposition(2, 2, 1)
        assert {key: len(pos) for key, pos in blocks.items()} == {(1, 1): 1, (1, 2): 2, (2, 2): 1}

    def test_block_size(self):
        assert len(y_block_decomposition(3, 2, 1)[(1, 2)]) == 2

    def test_blocks_partition_the_basis(self):
        blocks = y_block_decomposition(3, 3, 1)
        positions = sorted(p for pos in blocks.values() for p in pos)
        assert positions == list(range(9))

    @pytest.mark.parametrize("n", range(1, 5))
    def test_s_is_block_compatible(self, n):
        for p in range(2 * n + 1):
            for k in range(p + 1):
                assert y_block_compatibility(n, p, k)
