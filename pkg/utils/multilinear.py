import itertools
from functools import lru_cache
from math import comb


def permutation_sign(seq) -> int:
    """Sign of the permutation that sorts `seq`; 0 if an entry repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return sign


def wedge_coeff(sigma):
    """Normalize dx^{σ_1} ∧ … ∧ dx^{σ_k} to ±dx^{sorted σ}.

    Returns (sign, sorted tuple), or (0, None) when an index repeats.
    """
    sign = permutation_sign(sigma)
    if sign == 0:
        return 0, None
    return sign, tuple(sorted(sigma))


@lru_cache(maxsize=None)
def alt_basis(n: int, k: int) -> tuple:
    """Increasing multi-indices of length k in 1..n, lexicographic."""
    if k < 0 or k > n:
        return ()
    return tuple(itertools.combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def alt_index(n: int, k: int) -> dict:
    return {sigma: pos for pos, sigma in enumerate(alt_basis(n, k))}


@lru_cache(maxsize=None)
def altij_basis(n: int, i: int, J: int) -> tuple:
    """Basis pairs (σ, τ) of Alt^i ⊗ Alt^J, σ-major then τ."""
    return tuple((sigma, tau) for sigma in alt_basis(n, i) for tau in alt_basis(n, J))


def altij_index(n: int, i: int, J: int, sigma, tau) -> int:
    return alt_index(n, i)[sigma] * len(alt_basis(n, J)) + alt_index(n, J)[tau]


def alt_dim(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


def altij_dim(n: int, i: int, J: int) -> int:
    return alt_dim(n, i) * alt_dim(n, J)


def complement(n: int, sigma) -> tuple:
    return tuple(a for a in range(1, n + 1) if a not in sigma)


def altij_label(n: int, i: int, J: int) -> str:
    return f"Alt^{{{i},{J}}}(R^{n})"


def basis_descriptor(n: int, i: int, J: int) -> list:
    """JSON-ready list of [σ, τ] index lists."""
    return [[list(sigma), list(tau)] for sigma, tau in altij_basis(n, i, J)]
