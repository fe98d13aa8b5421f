import logging
from collections import OrderedDict, namedtuple
from functools import lru_cache

from utils.exactla import LinearMap, projector_onto_kernel, projector_onto_range, pseudoinverse, rank
from utils.multilinear import (alt_basis, altij_basis, altij_dim, altij_index, altij_label,
                               complement, permutation_sign, wedge_coeff)

WSpace = namedtuple("WSpace", ["n", "k", "basis_vectors"])


@lru_cache(maxsize=None)
def s_matrix(n: int, i: int, J: int) -> LinearMap:
    """Matrix of s^{i,J}: Alt^{i,J} -> Alt^{i+1,J-1}.

    s(dx^σ ⊗ dx^τ) = Σ_j (-1)^{j-1} (dx^{τ_j} ∧ dx^σ) ⊗ dx^{τ without τ_j}.
    Out-of-range degrees give zero-dimensional maps.
    """
    rows = altij_dim(n, i + 1, J - 1)
    cols = altij_dim(n, i, J)
    triplets = []
    if rows and cols:
        for col, (sigma, tau) in enumerate(altij_basis(n, i, J)):
            for j, t in enumerate(tau):
                sign, merged = wedge_coeff((t,) + sigma)
                if not sign:
                    continue
                rest = tau[:j] + tau[j + 1:]
                row = altij_index(n, i + 1, J - 1, merged, rest)
                triplets.append((row, col, sign * (-1) ** j))
    return LinearMap.from_entries(rows, cols, triplets,
                                  domain_label=altij_label(n, i, J),
                                  codomain_label=altij_label(n, i + 1, J - 1))


@lru_cache(maxsize=None)
def t_matrix(n: int, i: int, J: int) -> LinearMap:
    return pseudoinverse(s_matrix(n, i, J))


def check_inj_surj(n: int, i: int, J: int):
    s = s_matrix(n, i, J)
    r = rank(s)
    return r == s.cols, r == s.rows


def expected_inj_surj(i: int, J: int):
    """What the family law promises for s^{i,J+1}: injective for i <= J, surjective for i >= J."""
    return i <= J, i >= J


def tsst_check(n: int, i: int, J: int):
    """(t·s == P_{ker(s)⊥}, s·t == P_{ran(s)}) for s = s^{i,J}."""
    s = s_matrix(n, i, J)
    t = t_matrix(n, i, J)
    ker_perp = LinearMap.identity(s.cols) - projector_onto_kernel(s)
    return (t @ s) == ker_perp, (s @ t) == projector_onto_range(s)


@lru_cache(maxsize=None)
def w_basis(n: int, k: int) -> WSpace:
    """ω(I) = sign(I, Iᶜ) dx^I ⊗ dx^{Iᶜ} for each increasing I of length k."""
    triplets = []
    for col, sigma in enumerate(alt_basis(n, k)):
        rest = complement(n, sigma)
        triplets.append((altij_index(n, k, n - k, sigma, rest), col, permutation_sign(sigma + rest)))
    vectors = LinearMap.from_entries(altij_dim(n, k, n - k), len(alt_basis(n, k)), triplets,
                                     codomain_label=altij_label(n, k, n - k))
    return WSpace(n, k, vectors)


def sident_check(n: int, k: int) -> LinearMap:
    """Residual of ⟨sρ,sτ⟩ - ⟨s*ρ,s*τ⟩ - (n-2k)⟨ρ,τ⟩ over W(n,k); zero when the identity holds."""
    w = w_basis(n, k).basis_vectors
    s = s_matrix(n, k, n - k)
    s_prev = s_matrix(n, k - 1, n - k + 1)
    sw = s @ w
    adj_w = s_prev.T @ w
    residual = sw.T @ sw - adj_w.T @ adj_w - LinearMap.identity(w.cols) * (n - 2 * k)
    logging.debug(f"sident n={n} k={k}: residual nnz {residual.nnz}")
    return residual


def w_invariance_check(n: int, k: int) -> bool:
    """s maps W(n,k) into W(n,k+1)."""
    w = w_basis(n, k).basis_vectors
    image = s_matrix(n, k, n - k) @ w
    target = w_basis(n, k + 1).basis_vectors if k < n else LinearMap.zeros(image.rows, 0)
    return target @ target.T @ image == image


def y_block_decomposition(n: int, p: int, k: int) -> OrderedDict:
    """Positions of the Alt^{k,p-k} basis grouped by the sorted concatenation of (σ, τ)."""
    blocks = {}
    for pos, (sigma, tau) in enumerate(altij_basis(n, k, p - k)):
        blocks.setdefault(tuple(sorted(sigma + tau)), []).append(pos)
    return OrderedDict(sorted(blocks.items()))


def y_block_compatibility(n: int, p: int, k: int) -> bool:
    """Every nonzero entry of s^{k,p-k} stays inside one Y block."""
    source = altij_basis(n, k, p - k)
    target = altij_basis(n, k + 1, p - k - 1)
    for row, col, _ in s_matrix(n, k, p - k).nonzero():
        if sorted(source[col][0] + source[col][1]) != sorted(target[row][0] + target[row][1]):
            return False
    return True
