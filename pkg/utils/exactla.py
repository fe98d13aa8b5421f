import logging
from fractions import Fraction
from math import gcd, lcm


class ExactLAError(Exception):
    pass


class DimensionMismatch(ExactLAError):
    """Raised when shapes or vector lengths break an operation's contract."""


class LabelMismatch(ExactLAError):
    """Raised when composing maps whose basis labels disagree."""


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"{value!r} is not an exact scalar")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"{value!r} is not an exact scalar")


def format_fraction(value) -> str:
    return str(to_fraction(value))


def _labels_agree(a, b) -> bool:
    return a is None or b is None or a == b


class LinearMap:
    """Exact rational matrix with basis labels on both sides.

    Entries are held sparsely (row -> column -> Fraction, zeros dropped) and are
    read-only after construction. `entries` gives the row-major view.
    """

    __slots__ = ("rows", "cols", "_data", "domain_label", "codomain_label")

    def __init__(self, rows: int, cols: int, data=None, domain_label=None, codomain_label=None):
        if rows < 0 or cols < 0:
            raise DimensionMismatch(f"negative shape {rows}x{cols}")
        clean = {}
        for i, row in (data or {}).items():
            if not 0 <= i < rows:
                raise DimensionMismatch(f"row {i} outside {rows}x{cols}")
            kept = {}
            for j, value in row.items():
                if not 0 <= j < cols:
                    raise DimensionMismatch(f"column {j} outside {rows}x{cols}")
                value = to_fraction(value)
                if value:
                    kept[j] = value
            if kept:
                clean[i] = kept
        self.rows = rows
        self.cols = cols
        self._data = clean
        self.domain_label = domain_label
        self.codomain_label = codomain_label

    @classmethod
    def _from_clean(cls, rows, cols, data, domain_label=None, codomain_label=None):
        m = object.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = data
        m.domain_label = domain_label
        m.codomain_label = codomain_label
        return m

    # ── constructors ──────────────────────────────────────────
    @classmethod
    def zeros(cls, rows: int, cols: int, domain_label=None, codomain_label=None):
        return cls._from_clean(rows, cols, {}, domain_label, codomain_label)

    @classmethod
    def identity(cls, n: int, label=None):
        return cls._from_clean(n, n, {i: {i: Fraction(1)} for i in range(n)}, label, label)

    @classmethod
    def diagonal(cls, values, label=None):
        values = [to_fraction(v) for v in values]
        data = {i: {i: v} for i, v in enumerate(values) if v}
        return cls._from_clean(len(values), len(values), data, label, label)

    @classmethod
    def from_rows(cls, rows, cols: int = None, domain_label=None, codomain_label=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged rows")
        data = {i: {j: v for j, v in enumerate(r)} for i, r in enumerate(rows)}
        return cls(len(rows), cols, data, domain_label, codomain_label)

    @classmethod
    def from_columns(cls, columns, rows: int, domain_label=None, codomain_label=None):
        data = {}
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise DimensionMismatch(f"column {j} has length {len(column)}, expected {rows}")
            for i, value in enumerate(column):
                value = to_fraction(value)
                if value:
                    data.setdefault(i, {})[j] = value
        return cls._from_clean(rows, len(columns), data, domain_label, codomain_label)

    @classmethod
    def from_entries(cls, rows: int, cols: int, triplets, domain_label=None, codomain_label=None):
        data = {}
        for i, j, value in triplets:
            data.setdefault(i, {})
            data[i][j] = data[i].get(j, 0) + to_fraction(value)
        return cls(rows, cols, data, domain_label, codomain_label)

    # ── views ─────────────────────────────────────────────────
    @property
    def shape(self):
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._data.values())

    @property
    def entries(self) -> list:
        out = [Fraction(0)] * (self.rows * self.cols)
        for i, row in self._data.items():
            for j, value in row.items():
                out[i * self.cols + j] = value
        return out

    def __getitem__(self, key) -> Fraction:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self._data.get(i, {}).get(j, Fraction(0))

    def row(self, i: int) -> dict:
        return dict(self._data.get(i, {}))

    def nonzero(self):
        for i in sorted(self._data):
            row = self._data[i]
            for j in sorted(row):
                yield i, j, row[j]

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for i, row in self._data.items():
            for j, value in row.items():
                out[i][j] = value
        return out

    def column(self, j: int) -> list:
        return [self._data.get(i, {}).get(j, Fraction(0)) for i in range(self.rows)]

    def columns(self) -> list:
        dense = self.to_dense()
        return [[dense[i][j] for i in range(self.rows)] for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not self._data

    def relabel(self, domain_label=None, codomain_label=None):
        return LinearMap._from_clean(self.rows, self.cols, self._data, domain_label, codomain_label)

    def unlabeled(self):
        return self.relabel()

    # ── algebra ───────────────────────────────────────────────
    def transpose(self):
        data = {}
        for i, row in self._data.items():
            for j, value in row.items():
                data.setdefault(j, {})[i] = value
        return LinearMap._from_clean(self.cols, self.rows, data, self.codomain_label, self.domain_label)

    @property
    def T(self):
        return self.transpose()

    def __matmul__(self, other):
        if not isinstance(other, LinearMap):
            return self.apply(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot compose {self.shape} after {other.shape}")
        if not _labels_agree(self.domain_label, other.codomain_label):
            raise LabelMismatch(f"{self.domain_label!r} != {other.codomain_label!r}")
        data = {}
        other_data = other._data
        for i, row in self._data.items():
            acc = {}
            for k, a in row.items():
                orow = other_data.get(k)
                if orow is None:
                    continue
                for j, b in orow.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                data[i] = acc
        return LinearMap._from_clean(self.rows, other.cols, data, other.domain_label, self.codomain_label)

    def apply(self, vector) -> list:
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.shape} map")
        vector = [to_fraction(v) for v in vector]
        out = [Fraction(0)] * self.rows
        for i, row in self._data.items():
            out[i] = sum((value * vector[j] for j, value in row.items()), Fraction(0))
        return out

    def _combine(self, other, sign):
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")
        if not (_labels_agree(self.domain_label, other.domain_label)
                and _labels_agree(self.codomain_label, other.codomain_label)):
            raise LabelMismatch("adding maps between different spaces")
        data = {i: dict(row) for i, row in self._data.items()}
        for i, row in other._data.items():
            target = data.setdefault(i, {})
            for j, value in row.items():
                new = target.get(j, 0) + sign * value
                if new:
                    target[j] = new
                else:
                    target.pop(j, None)
            if not target:
                del data[i]
        return LinearMap._from_clean(self.rows, self.cols, data,
                                     self.domain_label or other.domain_label,
                                     self.codomain_label or other.codomain_label)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, scalar):
        if isinstance(scalar, LinearMap):
            return NotImplemented
        scalar = to_fraction(scalar)
        if not scalar:
            return LinearMap.zeros(self.rows, self.cols, self.domain_label, self.codomain_label)
        data = {i: {j: v * scalar for j, v in row.items()} for i, row in self._data.items()}
        return LinearMap._from_clean(self.rows, self.cols, data, self.domain_label, self.codomain_label)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    __hash__ = None

    def select(self, row_idx, col_idx):
        col_pos = {j: k for k, j in enumerate(col_idx)}
        data = {}
        for a, i in enumerate(row_idx):
            row = self._data.get(i)
            if not row:
                continue
            kept = {col_pos[j]: v for j, v in row.items() if j in col_pos}
            if kept:
                data[a] = kept
        return LinearMap._from_clean(len(row_idx), len(col_idx), data)

    def select_rows(self, row_idx):
        return self.select(row_idx, range(self.cols)).relabel(self.domain_label, None)

    def select_cols(self, col_idx):
        return self.select(range(self.rows), col_idx).relabel(None, self.codomain_label)

    def __repr__(self):
        return f"LinearMap({self.rows}x{self.cols}, nnz={self.nnz}, {self.domain_label!r} -> {self.codomain_label!r})"


# ── assembly helpers ──────────────────────────────────────────
def block(grid, row_dims, col_dims) -> LinearMap:
    """Assemble a block matrix; `None` cells are zero blocks."""
    data = {}
    row_off = 0
    for bi, grid_row in enumerate(grid):
        col_off = 0
        for bj, cell in enumerate(grid_row):
            if cell is not None:
                if cell.shape != (row_dims[bi], col_dims[bj]):
                    raise DimensionMismatch(f"block ({bi},{bj}) is {cell.shape}, "
                                            f"expected {(row_dims[bi], col_dims[bj])}")
                for i, row in cell._data.items():
                    target = data.setdefault(row_off + i, {})
                    for j, value in row.items():
                        target[col_off + j] = value
            col_off += col_dims[bj]
        row_off += row_dims[bi]
    return LinearMap._from_clean(sum(row_dims), sum(col_dims), data)


def hstack(maps) -> LinearMap:
    maps = list(maps)
    return block([maps], [maps[0].rows], [m.cols for m in maps])


def vstack(maps) -> LinearMap:
    maps = list(maps)
    return block([[m] for m in maps], [m.rows for m in maps], [maps[0].cols])


def direct_sum(*maps) -> LinearMap:
    grid = [[m if a == b else None for b in range(len(maps))] for a, m in enumerate(maps)]
    return block(grid, [m.rows for m in maps], [m.cols for m in maps])


def kron(a: LinearMap, b: LinearMap) -> LinearMap:
    data = {}
    for i, arow in a._data.items():
        for k, brow in b._data.items():
            target = {}
            for j, x in arow.items():
                for l, y in brow.items():
                    target[j * b.cols + l] = x * y
            data[i * b.rows + k] = target
    return LinearMap._from_clean(a.rows * b.rows, a.cols * b.cols, data)


# ── fraction-free elimination ─────────────────────────────────
def _primitive(row: dict) -> dict:
    g = 0
    for value in row.values():
        g = gcd(g, value)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def _integer_row(row: dict) -> dict:
    den = 1
    for value in row.values():
        den = lcm(den, value.denominator)
    return _primitive({j: v.numerator * (den // v.denominator) for j, v in row.items()})


def _eliminate(target: dict, pivot_row: dict, col: int) -> dict:
    a = pivot_row[col]
    b = target[col]
    g = gcd(a, b)
    ma, mb = a // g, b // g
    out = {j: v * ma for j, v in target.items()}
    for j, v in pivot_row.items():
        new = out.get(j, 0) - v * mb
        if new:
            out[j] = new
        else:
            out.pop(j, None)
    return _primitive(out)


def _reduce(rows) -> dict:
    """Bareiss-style Gauss-Jordan over the integers.

    Returns {pivot column: reduced integer row}. Every reduced row vanishes on the
    other pivot columns; the pivot is the first nonzero entry left after reduction.
    """
    pivots = {}
    for row in rows:
        row = dict(row)
        for col in [c for c in row if c in pivots]:
            if col in row:
                row = _eliminate(row, pivots[col], col)
        if not row:
            continue
        col = min(row)
        for other_col, other in list(pivots.items()):
            if col in other:
                pivots[other_col] = _eliminate(other, row, col)
        pivots[col] = row
    return pivots


def _rref(m: LinearMap) -> dict:
    rows = [_integer_row(m._data[i]) for i in sorted(m._data)]
    pivots = _reduce(rows)
    logging.debug(f"eliminated {m.rows}x{m.cols} map, rank {len(pivots)}")
    return pivots


def rank(m: LinearMap) -> int:
    return len(_rref(m))


def nullspace_basis(m: LinearMap) -> LinearMap:
    """Columns spanning ker(m), one per free column of the reduced echelon form."""
    pivots = _rref(m)
    free = [j for j in range(m.cols) if j not in pivots]
    free_pos = {j: k for k, j in enumerate(free)}
    data = {j: {free_pos[j]: Fraction(1)} for j in free}
    for col, prow in pivots.items():
        a = prow[col]
        kept = {free_pos[j]: Fraction(-v, a) for j, v in prow.items() if j != col}
        if kept:
            data[col] = kept
    return LinearMap._from_clean(m.cols, len(free), data, None, m.domain_label)


def column_space_basis(m: LinearMap) -> LinearMap:
    return m.select_cols(sorted(_rref(m)))


def inverse(m: LinearMap) -> LinearMap:
    if m.rows != m.cols:
        raise DimensionMismatch(f"inverse of non-square {m.shape} map")
    n = m.rows
    rows = []
    for i in range(n):
        row = dict(m._data.get(i, {}))
        row[n + i] = Fraction(1)
        rows.append(_integer_row(row))
    pivots = _reduce(rows)
    if sorted(pivots) != list(range(n)):
        raise ExactLAError(f"{m.shape} map is singular")
    data = {}
    for col, prow in pivots.items():
        a = prow[col]
        data[col] = {j - n: Fraction(v, a) for j, v in prow.items() if j >= n}
    return LinearMap._from_clean(n, n, data, m.codomain_label, m.domain_label)


def _components(m: LinearMap):
    parent = list(range(m.rows + m.cols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, row in m._data.items():
        ri = find(i)
        for j in row:
            rj = find(m.rows + j)
            if ri != rj:
                parent[rj] = ri
    groups = {}
    for i in m._data:
        groups.setdefault(find(i), ([], []))[0].append(i)
    for j in range(m.cols):
        root = find(m.rows + j)
        if root in groups:
            groups[root][1].append(j)
    return sorted(((sorted(r), sorted(c)) for r, c in groups.values()), key=lambda g: g[1][0])


def _pinv_block(m: LinearMap) -> LinearMap:
    if m.rows == m.cols:
        try:
            return inverse(m)
        except ExactLAError:
            pass
    pivots = _rref(m)
    order = sorted(pivots)
    c = m.select_cols(order)
    f_data = {}
    for k, col in enumerate(order):
        prow = pivots[col]
        a = prow[col]
        f_data[k] = {j: Fraction(v, a) for j, v in prow.items()}
    f = LinearMap._from_clean(len(order), m.cols, f_data)
    ct = c.transpose()
    ft = f.transpose()
    return ft @ inverse(f @ ft) @ inverse(ct @ c) @ ct


def pseudoinverse(m: LinearMap) -> LinearMap:
    """Exact Moore-Penrose inverse via rank factorization, block by block.

    The map is split into the connected components of its row/column incidence
    graph; each component is factored as C·F and inverted as Fᵀ(FFᵀ)⁻¹(CᵀC)⁻¹Cᵀ.
    """
    data = {}
    for row_idx, col_idx in _components(m):
        part = _pinv_block(m.select(row_idx, col_idx))
        for a, prow in part._data.items():
            target = data.setdefault(col_idx[a], {})
            for b, value in prow.items():
                target[row_idx[b]] = value
    return LinearMap._from_clean(m.cols, m.rows, data, m.codomain_label, m.domain_label)


def projector_onto_range(m: LinearMap) -> LinearMap:
    p = m @ pseudoinverse(m)
    return p.relabel(m.codomain_label, m.codomain_label)


def projector_onto_kernel(m: LinearMap) -> LinearMap:
    p = LinearMap.identity(m.cols) - pseudoinverse(m) @ m
    return p.relabel(m.domain_label, m.domain_label)


def projector_onto_span(basis: LinearMap) -> LinearMap:
    """Orthogonal projector onto the span of the columns of `basis`."""
    return projector_onto_range(basis)


def _particular_solution(a: LinearMap, b: list):
    aug = a.cols
    rows = []
    for i in range(a.rows):
        row = dict(a._data.get(i, {}))
        if b[i]:
            row[aug] = b[i]
        if row:
            rows.append(_integer_row(row))
    pivots = _reduce(rows)
    if aug in pivots:
        return None
    y = [Fraction(0)] * a.cols
    for col, prow in pivots.items():
        y[col] = Fraction(prow.get(aug, 0), prow[col])
    return y


def solve(m: LinearMap, b) -> list:
    """Minimum-norm exact solution of m·x = b, or None when b is not in ran(m).

    Solves (m mᵀ) y = b and returns x = mᵀ y, which lies in ran(mᵀ) = ker(m)⊥.
    """
    if len(b) != m.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {m.shape} map")
    b = [to_fraction(v) for v in b]
    mt = m.transpose()
    y = _particular_solution(m @ mt, b)
    if y is None:
        return None
    return mt.apply(y)
