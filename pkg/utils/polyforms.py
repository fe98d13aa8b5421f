import logging
from fractions import Fraction
from functools import lru_cache

from pydantic import BaseModel, ConfigDict

from utils.exactla import DimensionMismatch, LinearMap, kron, rank, to_fraction
from utils.linkmaps import s_matrix
from utils.multilinear import altij_basis, altij_dim, altij_index, wedge_coeff


@lru_cache(maxsize=None)
def monomials(n: int, r: int) -> tuple:
    """Exponent vectors with |α| <= r in graded-lex order."""
    if r < 0:
        return ()
    out = []
    for degree in range(r + 1):
        out.extend(sorted(_compositions(n, degree), reverse=True))
    return tuple(out)


def _compositions(n: int, total: int):
    if n == 0:
        return [()] if total == 0 else []
    return [(head,) + tail for head in range(total + 1) for tail in _compositions(n - 1, total - head)]


@lru_cache(maxsize=None)
def monomial_index(n: int, r: int) -> dict:
    return {alpha: pos for pos, alpha in enumerate(monomials(n, r))}


class PolySpace(BaseModel):
    """Polynomials of degree <= r with values in Alt^{i,J}(R^n); r < 0 is the zero space."""

    model_config = ConfigDict(frozen=True)

    n: int
    r: int
    i: int
    J: int

    @property
    def fiber(self) -> int:
        return altij_dim(self.n, self.i, self.J)

    @property
    def mono_count(self) -> int:
        return len(monomials(self.n, self.r))

    @property
    def dim(self) -> int:
        return self.mono_count * self.fiber

    @property
    def label(self) -> str:
        return f"P{self.r}Alt^{{{self.i},{self.J}}}(R^{self.n})"

    def shifted(self, dr: int = 0, di: int = 0, dJ: int = 0) -> "PolySpace":
        return PolySpace(n=self.n, r=self.r + dr, i=self.i + di, J=self.J + dJ)

    def index(self, alpha, sigma, tau) -> int:
        return monomial_index(self.n, self.r)[alpha] * self.fiber + altij_index(self.n, self.i, self.J, sigma, tau)

    def basis(self):
        """Yield (position, α, σ, τ) in storage order."""
        pos = 0
        for alpha in monomials(self.n, self.r):
            for sigma, tau in altij_basis(self.n, self.i, self.J):
                yield pos, alpha, sigma, tau
                pos += 1

    def describe(self) -> dict:
        return {"n": self.n, "r": self.r, "i": self.i, "J": self.J, "dim": self.dim}


class DegreeSchedule(BaseModel):
    """Degree caps of a truncated de Rham row P_{<=r} ⊗ Alt^{•,J}: cap(i) = r - i."""

    model_config = ConfigDict(frozen=True)

    n: int
    J: int
    r: int

    def cap(self, i: int) -> int:
        return self.r - i

    def space(self, i: int) -> PolySpace:
        return PolySpace(n=self.n, r=self.cap(i), i=i, J=self.J)

    def spaces(self) -> list:
        return [self.space(i) for i in range(self.n + 1)]

    def check(self) -> bool:
        """Every d lands in the next scheduled space."""
        for i in range(self.n):
            if self.space(i).shifted(dr=-1, di=1) != self.space(i + 1):
                return False
        return True


def _assemble(source: PolySpace, target: PolySpace, triplets) -> LinearMap:
    m = LinearMap.from_entries(target.dim, source.dim, triplets,
                               domain_label=source.label, codomain_label=target.label)
    logging.debug(f"assembled {target.label} <- {source.label}: {m.rows}x{m.cols}, nnz {m.nnz}")
    return m


def _bump(alpha, a: int, by: int):
    out = list(alpha)
    out[a - 1] += by
    return tuple(out)


@lru_cache(maxsize=None)
def d_matrix(space: PolySpace) -> LinearMap:
    """Exterior derivative on the first factor: (r, i, J) -> (r-1, i+1, J)."""
    target = space.shifted(dr=-1, di=1)
    triplets = []
    if target.dim:
        for col, alpha, sigma, tau in space.basis():
            for a in range(1, space.n + 1):
                if not alpha[a - 1]:
                    continue
                sign, merged = wedge_coeff((a,) + sigma)
                if not sign:
                    continue
                triplets.append((target.index(_bump(alpha, a, -1), merged, tau), col, sign * alpha[a - 1]))
    return _assemble(space, target, triplets)


@lru_cache(maxsize=None)
def koszul_matrix(space: PolySpace) -> LinearMap:
    """Contraction of the second factor with the Euler field: (r, i, J) -> (r+1, i, J-1)."""
    target = space.shifted(dr=1, dJ=-1)
    triplets = []
    if target.dim:
        for col, alpha, sigma, tau in space.basis():
            for j, t in enumerate(tau):
                rest = tau[:j] + tau[j + 1:]
                triplets.append((target.index(_bump(alpha, t, 1), sigma, rest), col, (-1) ** j))
    return _assemble(space, target, triplets)


@lru_cache(maxsize=None)
def homotopy_P_matrix(space: PolySpace) -> LinearMap:
    """First-factor Koszul contraction scaled by 1/(m+i) on degree-m parts: (r, i, J) -> (r+1, i-1, J)."""
    target = space.shifted(dr=1, di=-1)
    triplets = []
    if target.dim:
        for col, alpha, sigma, tau in space.basis():
            scale = Fraction(1, sum(alpha) + space.i)
            for j, t in enumerate(sigma):
                rest = sigma[:j] + sigma[j + 1:]
                triplets.append((target.index(_bump(alpha, t, 1), rest, tau), col, (-1) ** j * scale))
    return _assemble(space, target, triplets)


@lru_cache(maxsize=None)
def homotopy_L_matrix(space: PolySpace) -> LinearMap:
    """Constant-term projector on 0-forms, zero otherwise."""
    triplets = []
    if space.i == 0 and space.r >= 0:
        triplets = [(k, k, 1) for k in range(space.fiber)]
    return _assemble(space, space, triplets)


@lru_cache(maxsize=None)
def s_operator_matrix(space: PolySpace) -> LinearMap:
    """Pointwise s^{i,J}: (r, i, J) -> (r, i+1, J-1)."""
    target = space.shifted(di=1, dJ=-1)
    m = kron(LinearMap.identity(space.mono_count), s_matrix(space.n, space.i, space.J))
    return m.relabel(space.label, target.label)


@lru_cache(maxsize=None)
def K_matrix(space: PolySpace) -> LinearMap:
    """K = P·S + L·K̃: (r, i, J) -> (r+1, i, J-1), with dK - Kd = S."""
    lifted = s_operator_matrix(space)
    p = homotopy_P_matrix(space.shifted(di=1, dJ=-1))
    correction = homotopy_L_matrix(space.shifted(dr=1, dJ=-1)) @ koszul_matrix(space)
    return p @ lifted + correction


def evaluate(space: PolySpace, coeffs, point) -> list:
    """Exact values in Alt^{i,J} of the form with the given coefficients at `point`."""
    if len(coeffs) != space.dim:
        raise DimensionMismatch(f"{len(coeffs)} coefficients for {space.label} of dim {space.dim}")
    if len(point) != space.n:
        raise DimensionMismatch(f"point of length {len(point)} in R^{space.n}")
    point = [to_fraction(x) for x in point]
    values = [Fraction(0)] * space.fiber
    for pos, alpha, sigma, tau in space.basis():
        c = to_fraction(coeffs[pos])
        if not c:
            continue
        term = c
        for x, e in zip(point, alpha):
            term *= x ** e
        values[pos % space.fiber] += term
    return values


def row_cohomology(schedule: DegreeSchedule) -> list:
    """dim ker d^i - rank d^{i-1} along a truncated de Rham row."""
    ranks = [rank(d_matrix(space)) for space in schedule.spaces()]
    dims = []
    for i, space in enumerate(schedule.spaces()):
        before = ranks[i - 1] if i else 0
        dims.append(space.dim - ranks[i] - before)
    return dims
