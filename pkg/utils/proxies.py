import logging
from collections import namedtuple
from functools import lru_cache

import constants.constants as constants
from utils.bgg import BasisSpace, BGGDiagram, ComplexSpec, output_complex, validate_diagram
from utils.exactla import DimensionMismatch, LinearMap, inverse, kron, to_fraction
from utils.linkmaps import s_matrix
from utils.multilinear import alt_basis, altij_dim, altij_label, complement, permutation_sign
from utils.polyforms import PolySpace, d_matrix, monomials

ProxyFiber = namedtuple("ProxyFiber", ["name", "n", "dim", "projector"])

NAMED = list(constants.NAMED_DIAGRAMS)


class UnknownName(KeyError):
    """Unknown algebraic map, fiber, named diagram or identity check."""

    reason = "UnknownName"

    def __str__(self):
        return str(self.args[0]) if self.args else ""


def _check_dim(n: int):
    if n not in (2, 3):
        raise DimensionMismatch(f"proxies exist in 2 and 3 dimensions, not {n}")


# ── algebraic maps on 𝕄 coordinates ──────────────────────────
def _transpose(n: int) -> LinearMap:
    return LinearMap.from_entries(n * n, n * n, [(b * n + a, a * n + b, 1) for a in range(n) for b in range(n)])


def _trace(n: int) -> LinearMap:
    return LinearMap.from_entries(1, n * n, [(0, a * n + a, 1) for a in range(n)])


def _levi_civita(a: int, b: int, k: int) -> int:
    return permutation_sign((a, b, k))


def _mskw(n: int) -> LinearMap:
    if n == 3:
        triplets = [(a * 3 + b, k, -_levi_civita(a, b, k))
                    for a in range(3) for b in range(3) for k in range(3) if _levi_civita(a, b, k)]
        return LinearMap.from_entries(9, 3, triplets)
    return LinearMap.from_entries(4, 1, [(1, 0, 1), (2, 0, -1)])


def _vskw(n: int) -> LinearMap:
    triplets = [(k, a * 3 + b, to_fraction(-_levi_civita(k, a, b)) / 2)
                for a in range(3) for b in range(3) for k in range(3) if _levi_civita(k, a, b)]
    return LinearMap.from_entries(3, 9, triplets)


def _sskw(n: int) -> LinearMap:
    return LinearMap.from_entries(1, 4, [(0, 1, to_fraction("1/2")), (0, 2, to_fraction("-1/2"))])


@lru_cache(maxsize=None)
def algebraic_map(name: str, n: int) -> LinearMap:
    """Pointwise algebraic map in proxy coordinates; matrices are row-major on 𝕄."""
    _check_dim(n)
    m = n * n
    ident = LinearMap.identity(m)
    if name == "id_R":
        return LinearMap.identity(1)
    if name == "id_V":
        return LinearMap.identity(n)
    if name == "id_M":
        return ident
    if name == "transpose":
        return _transpose(n)
    if name == "sym":
        return (ident + _transpose(n)) * to_fraction("1/2")
    if name == "skw":
        return (ident - _transpose(n)) * to_fraction("1/2")
    if name == "tr":
        return _trace(n)
    if name == "iota":
        return _trace(n).T
    if name == "dev":
        return ident - _trace(n).T @ _trace(n) * to_fraction(f"1/{n}")
    if name == "Sop":
        return _transpose(n) - _trace(n).T @ _trace(n)
    if name == "mskw":
        return _mskw(n)
    if name == "vskw" and n == 3:
        return _vskw(n)
    if name == "sskw" and n == 2:
        return _sskw(n)
    raise UnknownName(f"no algebraic map {name!r} in {n} dimensions")


def fiber(name: str, n: int) -> ProxyFiber:
    """Fiber ℝ, 𝕍, 𝕄 or a subspace of 𝕄 given by its Frobenius-orthogonal projector."""
    _check_dim(n)
    dims = constants.PROXY_FIBERS[n]
    if name not in dims:
        raise UnknownName(f"no proxy fiber {name!r}")
    projectors = {
        "R": LinearMap.identity(1),
        "V": LinearMap.identity(n),
        "M": LinearMap.identity(n * n),
        "S": algebraic_map("sym", n),
        "T": algebraic_map("dev", n),
        "K": algebraic_map("skw", n),
        "ST": algebraic_map("dev", n) @ algebraic_map("sym", n),
    }
    return ProxyFiber(name, n, dims[name], projectors[name])


# ── the dictionary between Alt^{i,J} and proxies ─────────────
def cell_fiber(n: int, i: int, J: int) -> str:
    scalar = [k in (0, n) for k in (i, J)]
    if all(scalar):
        return "R"
    if any(scalar):
        return "V"
    return "M"


@lru_cache(maxsize=None)
def proxy_matrix(n: int, k: int) -> LinearMap:
    """Alt^k(R^n) -> ℝ or 𝕍: constants and volume forms to scalars, 1-forms to vectors, 2-forms in 3D to axial vectors."""
    _check_dim(n)
    size = len(alt_basis(n, k))
    if k in (0, n) or k == 1:
        return LinearMap.identity(size)
    triplets = []
    for col, sigma in enumerate(alt_basis(n, k)):
        (rest,) = complement(n, sigma)
        triplets.append((rest - 1, col, permutation_sign(sigma + (rest,))))
    return LinearMap.from_entries(size, size, triplets)


@lru_cache(maxsize=None)
def dictionary(n: int, i: int, J: int) -> LinearMap:
    """Orthogonal change of coordinates Alt^{i,J}(R^n) -> proxy fiber; its inverse is the transpose."""
    return kron(proxy_matrix(n, i), proxy_matrix(n, J)).relabel(altij_label(n, i, J), cell_fiber(n, i, J))


def link_label_check(n: int, i: int, J: int) -> bool:
    """s^{i,J} conjugated into proxies equals its labeled algebraic map."""
    try:
        name, scale = constants.LINK_LABELS[n][(i, J)]
    except KeyError:
        raise UnknownName(f"no labeled link s^({i},{J}) in {n} dimensions")
    conjugated = dictionary(n, i + 1, J - 1) @ s_matrix(n, i, J) @ dictionary(n, i, J).T
    return conjugated == algebraic_map(name, n) * scale


def _pointwise(n: int, cap: int, fiber_map: LinearMap) -> LinearMap:
    return kron(LinearMap.identity(len(monomials(n, cap))), fiber_map.unlabeled())


def conjugate(op: LinearMap, source: PolySpace, target: PolySpace) -> LinearMap:
    """An Alt-model operator rewritten in proxy coordinates on both sides."""
    left = _pointwise(target.n, target.r, dictionary(target.n, target.i, target.J))
    right = _pointwise(source.n, source.r, dictionary(source.n, source.i, source.J))
    return (left @ op.unlabeled() @ right.T).relabel(_space_label(source), _space_label(target))


def _space_label(space: PolySpace) -> str:
    return f"P{space.r}⊗{cell_fiber(space.n, space.i, space.J)}"


@lru_cache(maxsize=None)
def proxy_d(n: int, i: int, J: int, cap: int) -> LinearMap:
    """grad, curl, div or rot on P_{<=cap} ⊗ Alt^{i,J}, acting on the form index (columnwise on matrices)."""
    _check_dim(n)
    space = PolySpace(n=n, r=cap, i=i, J=J)
    return conjugate(d_matrix(space), space, space.shifted(dr=-1, di=1))


def proxy_link(n: int, i: int, J: int, steps: int, cap: int) -> LinearMap:
    """s^{i+steps-1,J-steps+1} ∘ … ∘ s^{i,J} on P_{<=cap}, in proxy coordinates."""
    composite = LinearMap.identity(altij_dim(n, i, J))
    for step in range(steps):
        composite = s_matrix(n, i + step, J - step).unlabeled() @ composite
    fiber_map = dictionary(n, i + steps, J - steps).unlabeled() @ composite @ dictionary(n, i, J).unlabeled().T
    return _pointwise(n, cap, fiber_map)


# ── rows and named diagrams ──────────────────────────────────
def proxy_row(n: int, J: int, r: int, offset: int = 0, length: int = None, name: str = "") -> ComplexSpec:
    """De Rham row P_{<=r-p} ⊗ Alt^{p-offset,J} at positions p, zero where p - offset is out of range."""
    _check_dim(n)
    length = length if length is not None else n + 1 + offset
    cells = []
    for p in range(length):
        k = p - offset
        cells.append(PolySpace(n=n, r=r - p, i=k, J=J) if 0 <= k <= n else None)
    spaces = [BasisSpace(_space_label(c), c.dim, n=n, cap=c.r, ambient_fiber=c.fiber) if c else BasisSpace.zero()
              for c in cells]
    diffs = []
    for p in range(length - 1):
        source, target = cells[p], cells[p + 1]
        diffs.append(conjugate(d_matrix(source), source, target) if source and target else None)
    return ComplexSpec(spaces, diffs, name=name or f"derham n={n} J={J}")


def _rows_diagram(name: str, info: dict, r: int) -> BGGDiagram:
    n = info["n"]
    top_J, bottom_J = info["rows"]
    offset = bottom_J - top_J - 1
    length = n + 1 + offset
    top = proxy_row(n, top_J, r, length=length)
    bottom = proxy_row(n, bottom_J, r - 1, offset=offset, length=length)
    coefficients = {i: to_fraction(c) for i, c in info.get("coefficients", {}).items()}
    links = []
    for i in range(length - 1):
        k = i - offset
        coefficient = coefficients.get(i, 1 if offset == 0 else 0)
        if not (0 <= k <= n and i + 1 <= n) or not coefficient:
            links.append(None)
            continue
        links.append(proxy_link(n, k, bottom_J, offset + 1, r - 1 - i) * coefficient)
    return validate_diagram(top, bottom, links, name=name)


def _input_row(n: int, ref: str, cap: int) -> ComplexSpec:
    if ref == "derham":
        return proxy_row(n, 0, cap)
    return named_complex(ref, cap)


def _composed_diagram(name: str, info: dict, r: int) -> BGGDiagram:
    n = info["n"]
    top = _input_row(n, info["top"], r + info.get("top_shift", 0))
    bottom = _input_row(n, info["bottom"], r + info.get("bottom_shift", 0))
    links = []
    for i, (map_name, scale) in enumerate(info["links"]):
        cap = bottom.space(i).cap
        links.append(_pointwise(n, cap, algebraic_map(map_name, n) * scale))
    return validate_diagram(top, bottom, links, name=name)


@lru_cache(maxsize=64)
def named_diagram(name: str, degree_cap: int = None) -> BGGDiagram:
    """Assemble and validate a named diagram; degree_cap bounds the top-left space."""
    info = constants.NAMED_DIAGRAMS.get(name)
    if info is None:
        raise UnknownName(f"no named diagram {name!r}")
    r = degree_cap if degree_cap is not None else constants.default_degree(name)
    logging.info(f"assembling {name} at degree {r}")
    if "rows" in info:
        return _rows_diagram(name, info, r)
    return _composed_diagram(name, info, r)


def named_complex(name: str, degree_cap: int = None) -> ComplexSpec:
    """Output complex of a named diagram, with spaces labeled by their proxy fibers."""
    out = output_complex(named_diagram(name, degree_cap))
    labels = constants.NAMED_DIAGRAMS[name].get("fibers", ())
    for space, label in zip(out.spaces, labels):
        space.label = f"P{space.cap}⊗{label}"
    return out


# ── operator identities ──────────────────────────────────────
def _sop_inverse(cap: int) -> LinearMap:
    return _pointwise(3, cap, inverse(algebraic_map("Sop", 3)))


def _curl(J: int, cap: int) -> LinearMap:
    return proxy_d(3, 1, J, cap).unlabeled()


def _identity_checks(name: str, c: int) -> dict:
    sym = _pointwise(3, c - 1, algebraic_map("sym", 3))
    if name == "inc_sym_transpose":
        inc = named_complex("elasticity3d", c).D(1)
        rhs = _curl(2, c - 2) @ _pointwise(3, c - 2, algebraic_map("transpose", 3)) @ _curl(1, c - 1) @ sym
        return {"inc == curl T curl on S": inc == rhs}
    if name == "inc_skew_zero":
        skw = _pointwise(3, c - 1, algebraic_map("skw", 3))
        return {"curl S^-1 curl on K == 0": (_curl(2, c - 2) @ _sop_inverse(c - 2) @ _curl(1, c - 1) @ skw).is_zero()}
    if name == "curl_sym_tracefree":
        trace = _pointwise(3, c - 2, algebraic_map("tr", 3))
        return {"tr curl on S == 0": (trace @ _curl(1, c - 1) @ sym).is_zero()}
    if name == "cinc_three_forms":
        cinc = named_complex("conformal_elasticity3d", c).D(1)
        st = _pointwise(3, c - 1, fiber("ST", 3).projector)
        first = _curl(2, c - 1) @ st
        three = _curl(2, c - 3) @ _sop_inverse(c - 3) @ _curl(1, c - 2) @ _sop_inverse(c - 2) @ first
        inc = named_complex("elasticity3d", c - 1).D(1)
        return {"cinc == curl S^-1 curl S^-1 curl": cinc == three,
                "cinc == inc S^-1 curl": cinc == inc @ _sop_inverse(c - 2) @ first}
    raise UnknownName(f"no operator identity {name!r}")


def operator_identity_check(name: str, degree_cap: int = None) -> dict:
    """Exact matrix identities between named-complex operators and curl, transpose and S⁻¹."""
    if name not in constants.OPERATOR_IDENTITIES:
        raise UnknownName(f"no operator identity {name!r}")
    owner = "conformal_elasticity3d" if name == "cinc_three_forms" else "elasticity3d"
    c = degree_cap if degree_cap is not None else constants.default_degree(owner)
    checks = _identity_checks(name, c)
    holds = all(checks.values())
    if not holds:
        logging.warning(f"operator identity {name} fails at degree {c}")
    return {"name": name, "degree": c, "holds": holds,
            "checks": [{"identity": k, "holds": v} for k, v in checks.items()]}
