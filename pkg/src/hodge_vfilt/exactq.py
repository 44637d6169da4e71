"""Exact rational linear algebra.

Everything here works over Q with ``fractions.Fraction`` scalars.  Elimination
is fraction-free: each row is first scaled to integers and reduced with the
Bareiss recurrence, so intermediate entries stay bounded by minors of the input.
Subspaces are kept as reduced row echelon bases, which makes equality a plain
tuple comparison.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rat = Fraction


class AmbientMismatch(ValueError):
    """Two subspaces (or a subspace and a matrix) live in different spaces."""


def rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused on purpose.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot make an exact rational from {type(value).__name__}")


def fmt_rat(q) -> str:
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    den = 1
    for x in row:
        den = lcm(den, x.denominator)
    return [int(x * den) for x in row]


def _bareiss_echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination.  Returns echelon rows and pivot columns."""
    m = [r[:] for r in rows]
    nrows = len(m)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            mi = m[i]
            f = mi[c]
            mr = m[r]
            # exact division is the Bareiss invariant
            for j in range(c, ncols):
                mi[j] = (piv * mi[j] - f * mr[j]) // prev
        for i in range(r + 1, nrows):
            m[i][c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def _rref(vectors: Iterable[Sequence[Fraction]], ncols: int) -> tuple[tuple[Fraction, ...], ...]:
    rows = [_integer_row(v) for v in vectors]
    rows = [row for row in rows if any(row)]
    if not rows:
        return ()
    ech, pivots = _bareiss_echelon(rows, ncols)
    # reduce each row by its gcd to keep numbers small before back substitution
    red = []
    for row in ech:
        g = 0
        for x in row:
            g = gcd(g, x)
        red.append([Fraction(x // g) for x in row])
    for k in range(len(red) - 1, -1, -1):
        c = pivots[k]
        lead = red[k][c]
        if lead != 1:
            red[k] = [x / lead for x in red[k]]
        pk = red[k]
        for i in range(k):
            f = red[i][c]
            if f:
                ri = red[i]
                red[i] = [ri[j] - f * pk[j] for j in range(ncols)]
    return tuple(tuple(row) for row in red)


class QMat:
    """Dense matrix of Fractions.  ``rows`` x ``cols``, immutable by convention."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows))
        else:
            d = tuple(tuple(rat(x) for x in row) for row in data)
            if len(d) != rows or any(len(row) != cols for row in d):
                raise ValueError(f"matrix data does not have shape {rows}x{cols}")
            self.data = d

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "QMat":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer the column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMat":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int, scale=1) -> "QMat":
        s = rat(scale)
        z = Fraction(0)
        return cls._raw(n, n, tuple(tuple(s if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns, rows: int) -> "QMat":
        cols = [list(c) for c in columns]
        return cls(rows, len(cols), [[cols[j][i] for j in range(len(cols))] for i in range(rows)])

    @classmethod
    def _raw(cls, rows, cols, data) -> "QMat":
        m = cls.__new__(cls)
        m.rows, m.cols, m.data = rows, cols, data
        return m

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other) -> bool:
        return isinstance(other, QMat) and self.shape == other.shape and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(fmt_rat(x) for x in row) for row in self.data)
        return f"QMat({self.rows}x{self.cols}: {body})"

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def T(self) -> "QMat":
        return QMat._raw(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)))

    def __add__(self, other: "QMat") -> "QMat":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return QMat._raw(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.data, other.data)))

    def __neg__(self) -> "QMat":
        return QMat._raw(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.data))

    def __sub__(self, other: "QMat") -> "QMat":
        return self + (-other)

    def scale(self, c) -> "QMat":
        c = rat(c)
        return QMat._raw(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.data))

    def __matmul__(self, other: "QMat") -> "QMat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        zero = Fraction(0)
        out = []
        for row in self.data:
            nz = [(k, a) for k, a in enumerate(row) if a]
            out.append(tuple(sum((a * col[k] for k, a in nz), zero) for col in ocols))
        return QMat._raw(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length does not match matrix columns")
        zero = Fraction(0)
        nz = [(k, a) for k, a in enumerate(v) if a]
        return tuple(sum((row[k] * a for k, a in nz), zero) for row in self.data)

    def power(self, k: int) -> "QMat":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        out = QMat.identity(self.rows)
        base = self
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def rank(self) -> int:
        return rank(self)

    def kernel(self) -> "Subspace":
        return kernel(self)

    def image(self) -> "Subspace":
        return image(self)


def hstack(blocks: Sequence[QMat], rows: int) -> QMat:
    data = [[] for _ in range(rows)]
    cols = 0
    for b in blocks:
        if b.rows != rows:
            raise ValueError("row count mismatch in hstack")
        for i in range(rows):
            data[i].extend(b.data[i])
        cols += b.cols
    return QMat(rows, cols, data)


def block_matrix(blocks: Sequence[Sequence[QMat | None]], row_dims: Sequence[int], col_dims: Sequence[int]) -> QMat:
    """Assemble a block matrix; ``None`` entries are zero blocks."""
    total_r, total_c = sum(row_dims), sum(col_dims)
    data = [[Fraction(0)] * total_c for _ in range(total_r)]
    r0 = 0
    for bi, rd in enumerate(row_dims):
        c0 = 0
        for bj, cd in enumerate(col_dims):
            b = blocks[bi][bj]
            if b is not None:
                if b.shape != (rd, cd):
                    raise ValueError(f"block ({bi},{bj}) has shape {b.shape}, expected {(rd, cd)}")
                for i in range(rd):
                    row = data[r0 + i]
                    for j, x in enumerate(b.data[i]):
                        if x:
                            row[c0 + j] = x
            c0 += cd
        r0 += rd
    return QMat._raw(total_r, total_c, tuple(tuple(r) for r in data))


def rank(m: QMat) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_rref(m.data, m.cols))


def kernel(m: QMat) -> "Subspace":
    n = m.cols
    red = _rref(m.data, n)
    pivots = [next(j for j, x in enumerate(row) if x) for row in red]
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return Subspace(n, basis)


def inverse(m: QMat) -> QMat:
    if m.rows != m.cols:
        raise ValueError("only square matrices have inverses")
    n = m.rows
    aug = [list(m.data[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red = _rref(aug, 2 * n)
    if len(red) != n or any(red[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is singular")
    return QMat._raw(n, n, tuple(tuple(row[n:]) for row in red))


def image(m: QMat) -> "Subspace":
    return Subspace(m.rows, m.columns())


class Subspace:
    """A subspace of Q^n given by its reduced row echelon basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        vecs = []
        for v in vectors:
            v = tuple(rat(x) for x in v)
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
            vecs.append(v)
        self.ambient_dim = ambient_dim
        self.basis = _rref(vecs, ambient_dim)

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        s = cls.__new__(cls)
        s.ambient_dim = n
        s.basis = QMat.identity(n).data
        return s

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        vecs = []
        for i in indices:
            v = [0] * n
            v[i] = 1
            vecs.append(v)
        return cls(n, vecs)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} in Q^{self.ambient_dim})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def _same(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"Q^{self.ambient_dim} vs Q^{other.ambient_dim}")

    def matrix(self) -> QMat:
        """Basis vectors as rows."""
        return QMat._raw(self.dim, self.ambient_dim, self.basis)

    def annihilator(self) -> "Subspace":
        return kernel(self.matrix())

    def __add__(self, other: "Subspace") -> "Subspace":
        self._same(other)
        if not other.basis:
            return self
        if not self.basis:
            return other
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: "Subspace") -> "Subspace":
        self._same(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        if self.dim == self.ambient_dim:
            return other
        if other.dim == other.ambient_dim:
            return self
        return (self.annihilator() + other.annihilator()).annihilator()

    intersect = __and__

    def contains(self, v: Sequence) -> bool:
        v = tuple(rat(x) for x in v)
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length differs from ambient dimension")
        if not any(v):
            return True
        # reduce against the RREF basis
        w = list(v)
        for row in self.basis:
            p = next(j for j, x in enumerate(row) if x)
            f = w[p]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        return not any(w)

    def __le__(self, other: "Subspace") -> bool:
        self._same(other)
        return all(other.contains(v) for v in self.basis)

    def __ge__(self, other: "Subspace") -> bool:
        return other <= self

    def image_under(self, m: QMat) -> "Subspace":
        if m.cols != self.ambient_dim:
            raise AmbientMismatch(f"matrix with {m.cols} columns applied to Q^{self.ambient_dim}")
        return Subspace(m.rows, [m.apply(v) for v in self.basis])

    def preimage_under(self, m: QMat) -> "Subspace":
        """All v with m v in self."""
        if m.rows != self.ambient_dim:
            raise AmbientMismatch(f"matrix with {m.rows} rows mapping into Q^{self.ambient_dim}")
        ann = self.annihilator().matrix()
        if ann.rows == 0:
            return Subspace.full(m.cols)
        return kernel(ann @ m)

    def quotient_dim(self, other: "Subspace") -> int:
        """Dimension of the image of self in Q^n / other."""
        self._same(other)
        return (self + other).dim - other.dim


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def direct_sum(parts: Sequence[Subspace]) -> Subspace:
    """Block direct sum of subspaces of Q^{n_1}, ..., Q^{n_k}."""
    total = sum(p.ambient_dim for p in parts)
    vecs = []
    off = 0
    for p in parts:
        for v in p.basis:
            w = [Fraction(0)] * total
            w[off:off + p.ambient_dim] = v
            vecs.append(w)
        off += p.ambient_dim
    return Subspace(total, vecs)


class Flag:
    """Finite increasing filtration of Q^n.

    ``steps`` maps an integer index to a subspace.  Looking up an index between
    two declared ones returns the lower declared step; below the first declared
    index the step is zero and above the last it is the last step.  A valid flag
    is nested and its last step is the whole space.
    """

    __slots__ = ("ambient_dim", "_steps", "_keys")

    def __init__(self, ambient_dim: int, steps: dict[int, Subspace] | Iterable[tuple[int, Subspace]]):
        items = dict(steps)
        for k, s in items.items():
            if not isinstance(k, int) or isinstance(k, bool):
                raise TypeError("flag indices are integers")
            if s.ambient_dim != ambient_dim:
                raise AmbientMismatch(f"flag step {k} lives in Q^{s.ambient_dim}, not Q^{ambient_dim}")
        self.ambient_dim = ambient_dim
        self._keys = tuple(sorted(items))
        self._steps = {k: items[k] for k in self._keys}

    @classmethod
    def trivial(cls, n: int, at: int = 0) -> "Flag":
        """Single jump at ``at``: zero below, everything from ``at`` on."""
        return cls(n, {at - 1: Subspace.zero(n), at: Subspace.full(n)})

    @property
    def indices(self) -> tuple[int, ...]:
        return self._keys

    def items(self):
        return [(k, self._steps[k]) for k in self._keys]

    def step(self, k: int) -> Subspace:
        best = None
        for key in self._keys:
            if key <= k:
                best = key
            else:
                break
        if best is None:
            return Subspace.zero(self.ambient_dim)
        return self._steps[best]

    __getitem__ = step

    def low(self) -> int:
        """Largest index whose step is zero, everything at or below it is zero."""
        for k in self._keys:
            if self._steps[k].dim:
                return k - 1
        return self._keys[-1] if self._keys else 0

    def high(self) -> int:
        """Smallest index at which the flag is the whole space."""
        for k in self._keys:
            if self._steps[k].dim == self.ambient_dim:
                return k
        return self._keys[-1] + 1 if self._keys else 0

    def span(self) -> range:
        return range(self.low(), self.high() + 1)

    def gr_dim(self, k: int) -> int:
        return self.step(k).dim - self.step(k - 1).dim

    def gr_dims(self) -> dict[int, int]:
        return {k: self.gr_dim(k) for k in self.span() if self.gr_dim(k)}

    def jumps(self) -> list[int]:
        return sorted(self.gr_dims())

    def is_valid(self) -> bool:
        prev = Subspace.zero(self.ambient_dim)
        for k in self._keys:
            s = self._steps[k]
            if not prev <= s:
                return False
            prev = s
        return prev.dim == self.ambient_dim

    def canonical(self) -> tuple:
        """Index-to-subspace data at every jump, for equality tests."""
        return tuple((k, self.step(k)) for k in self.span())

    def __eq__(self, other) -> bool:
        return isinstance(other, Flag) and self.ambient_dim == other.ambient_dim and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self) -> str:
        return f"Flag(Q^{self.ambient_dim}, gr={self.gr_dims()})"

    def shifted(self, by: int) -> "Flag":
        """The flag G with G_k = self_{k - by}."""
        return Flag(self.ambient_dim, {k + by: s for k, s in self._steps.items()})

    def transported(self, m: QMat) -> "Flag":
        """Image of every step under an invertible matrix."""
        return Flag(m.rows, {k: s.image_under(m) for k, s in self._steps.items()})

    def restricted(self, sub: Subspace) -> dict[int, Subspace]:
        return {k: s & sub for k, s in self._steps.items()}


def direct_sum_flag(parts: Sequence[Flag]) -> Flag:
    total = sum(p.ambient_dim for p in parts)
    if not parts:
        return Flag(0, {0: Subspace.zero(0)})
    keys = sorted({k for p in parts for k in p.indices} | {min(p.low() for p in parts)})
    return Flag(total, {k: direct_sum([p.step(k) for p in parts]) for k in keys})
