"""Dense exact linear algebra over Q(zeta_n).

A ``Matrix`` over Q(zeta_n) is stored as its coordinates in the power basis:
one rational ``flint.fmpq_mat`` per power of zeta_n, so M = sum_k M_k zeta^k.
Rational matrices have a single component and take the fast flint path.

Elimination over Q(zeta_n) is done on the realification (each entry replaced
by the phi(n) x phi(n) matrix of multiplication by it).  With columns ordered
(j, k) the rational reduced row echelon form has a pivot in (j, 0) exactly
when column j is a pivot over Q(zeta_n), so pivots, ranks and kernel bases
read off from it coincide with those of elimination over the extension.

Kronecker convention: in kron(a, b) the index of the left factor varies
slowest, so (a x b)[(i1, i2), (j1, j2)] = a[i1, j1] * b[i2, j2].
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import flint

from .scalar import Scalar, ScalarError, _q, cyclotomic, embed, embed_poly, phi, power_table

ZERO = flint.fmpq(0)


class LinalgError(ValueError):
    pass


def _zeros(r: int, c: int) -> flint.fmpq_mat:
    return flint.fmpq_mat(r, c)


def _mat(r: int, c: int, entries) -> flint.fmpq_mat:
    if r == 0 or c == 0:
        return flint.fmpq_mat(r, c)
    return flint.fmpq_mat(r, c, entries)


def _is_zero_mat(m: flint.fmpq_mat) -> bool:
    return m == flint.fmpq_mat(m.nrows(), m.ncols())


def _kron_q(a: flint.fmpq_mat, b: flint.fmpq_mat) -> flint.fmpq_mat:
    r1, c1, r2, c2 = a.nrows(), a.ncols(), b.nrows(), b.ncols()
    ea, eb = a.entries(), b.entries()
    brows = [eb[i * c2:(i + 1) * c2] for i in range(r2)]
    out = []
    for i1 in range(r1):
        arow = ea[i1 * c1:(i1 + 1) * c1]
        for brow in brows:
            for x in arow:
                if x == 0:
                    out.extend([ZERO] * c2)
                else:
                    out.extend([x * y for y in brow])
    return _mat(r1 * r2, c1 * c2, out)


class Matrix:
    """Immutable matrix over Q(zeta_order)."""

    __slots__ = ("rows", "cols", "order", "comps")

    def __init__(self, rows: int, cols: int, order: int = 1, comps=None):
        self.rows = rows
        self.cols = cols
        self.order = order
        d = phi(order)
        if comps is None:
            comps = [None] * d
        comps = list(comps) + [None] * (d - len(comps))
        if len(comps) != d:
            raise LinalgError(f"expected {d} components, got {len(comps)}")
        for c in comps:
            if c is not None and (c.nrows() != rows or c.ncols() != cols):
                raise LinalgError("component shape mismatch")
        self.comps = tuple(comps)

    # construction -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, order: int = 1) -> "Matrix":
        return cls(rows, cols, order)

    @classmethod
    def identity(cls, n: int, order: int = 1) -> "Matrix":
        m = flint.fmpq_mat(n, n)
        for i in range(n):
            m[i, i] = 1
        return cls(n, n, order, [m])

    @classmethod
    def from_rational(cls, m: flint.fmpq_mat, order: int = 1) -> "Matrix":
        return cls(m.nrows(), m.ncols(), order, [m])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], order: int | None = None) -> "Matrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = [x for row in rows for x in row]
        if any(len(row) != c for row in rows):
            raise LinalgError("ragged rows")
        return cls.from_entries(r, c, flat, order)

    @classmethod
    def from_entries(cls, r: int, c: int, flat: Sequence, order: int | None = None) -> "Matrix":
        if len(flat) != r * c:
            raise LinalgError(f"expected {r * c} entries, got {len(flat)}")
        if order is None:
            order = 1
            for x in flat:
                if isinstance(x, Scalar) and x.order != 1:
                    order = _lcm(order, x.order)
        d = phi(order)
        comps = [[ZERO] * (r * c) for _ in range(d)]
        used = [False] * d
        for idx, x in enumerate(flat):
            if isinstance(x, Scalar):
                if order % x.order:
                    raise ScalarError(f"order {x.order} does not divide {order}")
                co = embed(x, order).fmpq_coeffs() if x.order != order else x.fmpq_coeffs()
                for k, v in enumerate(co):
                    if v != 0:
                        comps[k][idx] = v
                        used[k] = True
            else:
                v = _q(x)
                if v != 0:
                    comps[0][idx] = v
                    used[0] = True
        return cls(r, c, order, [_mat(r, c, comps[k]) if used[k] else None for k in range(d)])

    @classmethod
    def column_vector(cls, values: Sequence, order: int | None = None) -> "Matrix":
        return cls.from_entries(len(values), 1, list(values), order)

    # access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def comp(self, k: int) -> flint.fmpq_mat:
        c = self.comps[k]
        return c if c is not None else _zeros(self.rows, self.cols)

    def is_rational(self) -> bool:
        return all(c is None or _is_zero_mat(c) for c in self.comps[1:])

    def entry(self, i: int, j: int) -> Scalar:
        co = [ZERO if c is None else c[i, j] for c in self.comps]
        return Scalar(self.order, co)

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.entry(i, j)

    def entries(self) -> list[Scalar]:
        return [self.entry(i, j) for i in range(self.rows) for j in range(self.cols)]

    def to_rows(self) -> list[list[Scalar]]:
        e = self.entries()
        return [e[i * self.cols:(i + 1) * self.cols] for i in range(self.rows)]

    def rational_entries(self) -> list[Fraction]:
        if not self.is_rational():
            raise LinalgError("matrix is not rational")
        return [Fraction(int(x.p), int(x.q)) for x in self.comp(0).entries()]

    def _map(self, fn, shape=None) -> "Matrix":
        r, c = shape or (self.rows, self.cols)
        return Matrix(r, c, self.order, [None if m is None else fn(m) for m in self.comps])

    def select_columns(self, js: Sequence[int]) -> "Matrix":
        js = list(js)

        def pick(c):
            e = c.entries()
            return _mat(self.rows, len(js), [e[i * self.cols + j] for i in range(self.rows) for j in js])
        return self._map(pick, (self.rows, len(js)))

    def select_rows(self, is_: Sequence[int]) -> "Matrix":
        is_ = list(is_)

        def pick(c):
            e = c.entries()
            out = []
            for i in is_:
                out.extend(e[i * self.cols:(i + 1) * self.cols])
            return _mat(len(is_), self.cols, out)
        return self._map(pick, (len(is_), self.cols))

    def column(self, j: int) -> "Matrix":
        return self.select_columns([j])

    def reshape(self, rows: int, cols: int) -> "Matrix":
        """Reinterpret the row-major entry list with a new shape."""
        if rows * cols != self.rows * self.cols:
            raise LinalgError("reshape size mismatch")
        return Matrix(rows, cols, self.order,
                      [None if c is None else _mat(rows, cols, c.entries()) for c in self.comps])

    # arithmetic -------------------------------------------------------------

    def embed(self, order: int) -> "Matrix":
        if order == self.order:
            return self
        if order % self.order:
            raise ScalarError(f"order {self.order} does not divide {order}")
        d = phi(order)
        step = order // self.order
        out: list = [None] * d
        if self.is_rational():
            out[0] = self.comps[0]
            return Matrix(self.rows, self.cols, order, out)
        for k, c in enumerate(self.comps):
            if c is None:
                continue
            coeffs = embed_poly(flint.fmpq_poly([0] * k + [1]), self.order, order).coeffs()
            for l, v in enumerate(coeffs):
                if v != 0:
                    term = c * flint.fmpq(v)
                    out[l] = term if out[l] is None else out[l] + term
        return Matrix(self.rows, self.cols, order, out)

    def _align(self, other: "Matrix") -> tuple["Matrix", "Matrix"]:
        if self.order == other.order:
            return self, other
        n = _lcm(self.order, other.order)
        return self.embed(n), other.embed(n)

    def __add__(self, other: "Matrix") -> "Matrix":
        a, b = self._align(other)
        if a.shape != b.shape:
            raise LinalgError(f"shape mismatch {a.shape} vs {b.shape}")
        out = []
        for x, y in zip(a.comps, b.comps):
            out.append(y if x is None else x if y is None else x + y)
        return Matrix(a.rows, a.cols, a.order, out)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return self._map(lambda c: -c)

    def scale(self, s) -> "Matrix":
        if not isinstance(s, Scalar):
            q = _q(s)
            return self._map(lambda c: c * q)
        a = self
        if s.order != self.order:
            n = _lcm(s.order, self.order)
            a, s = self.embed(n), embed(s, n)
        sm = Matrix(1, 1, a.order, [None if v == 0 else _mat(1, 1, [v]) for v in s.fmpq_coeffs()])
        return a._conv(sm, lambda x, y: x * y[0, 0])

    def __mul__(self, s) -> "Matrix":
        return self.scale(s)

    __rmul__ = __mul__

    def _conv(self, other: "Matrix", op) -> "Matrix":
        n = self.order
        d = phi(n)
        table = power_table(n)
        acc: list = [None] * (2 * d - 1 if d > 1 else 1)
        shape = None
        for j, x in enumerate(self.comps):
            if x is None:
                continue
            for k, y in enumerate(other.comps):
                if y is None:
                    continue
                p = op(x, y)
                shape = (p.nrows(), p.ncols())
                acc[j + k] = p if acc[j + k] is None else acc[j + k] + p
        if shape is None:
            probe = op(_zeros(self.rows, self.cols), other.comp(0))
            return Matrix(probe.nrows(), probe.ncols(), n)
        out: list = [None] * d
        for m, p in enumerate(acc):
            if p is None:
                continue
            if m < d:
                out[m] = p if out[m] is None else out[m] + p
                continue
            for l, v in enumerate(table[m]):
                if v != 0:
                    term = p * v
                    out[l] = term if out[l] is None else out[l] + term
        return Matrix(shape[0], shape[1], n, out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        a, b = self._align(other)
        if a.cols != b.rows:
            raise LinalgError(f"cannot multiply {a.shape} by {b.shape}")
        if a.is_rational() and b.is_rational():
            x, y = a.comps[0], b.comps[0]
            if x is None or y is None:
                return Matrix(a.rows, b.cols, a.order)
            return Matrix(a.rows, b.cols, a.order, [x * y])
        return a._conv(b, lambda x, y: x * y)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, self.order,
                      [None if c is None else c.transpose() for c in self.comps])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def is_zero(self) -> bool:
        return all(c is None or _is_zero_mat(c) for c in self.comps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.rows, self.cols))

    def __repr__(self) -> str:
        rows = self.to_rows() if self.rows * self.cols <= 400 else None
        if rows is None:
            return f"Matrix({self.rows}x{self.cols}, order={self.order})"
        return "Matrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in rows) + "])"

    # elimination ----------------------------------------------------------------

    def realify(self) -> flint.fmpq_mat:
        """Rational matrix of the underlying Q-linear map, indices (i, k)."""
        d = phi(self.order)
        if d == 1:
            return self.comp(0)
        table = power_table(self.order)
        r, c = self.rows, self.cols
        out = [ZERO] * (r * d * c * d)
        width = c * d
        for l, m in enumerate(self.comps):
            if m is None:
                continue
            e = m.entries()
            for k in range(d):
                col = table[l + k]
                for idx, v in enumerate(e):
                    if v == 0:
                        continue
                    i, j = divmod(idx, c)
                    base = i * d * width + j * d + k
                    for p in range(d):
                        if col[p] != 0:
                            out[base + p * width] += v * col[p]
        return _mat(r * d, c * d, out)

    def vec(self) -> flint.fmpq_mat:
        """Columns realified: entry ((i, k), j) = coefficient k of self[i, j]."""
        d = phi(self.order)
        if d == 1:
            return self.comp(0)
        r, c = self.rows, self.cols
        out = [ZERO] * (r * d * c)
        for k, m in enumerate(self.comps):
            if m is None:
                continue
            e = m.entries()
            for idx, v in enumerate(e):
                if v != 0:
                    i, j = divmod(idx, c)
                    out[(i * d + k) * c + j] = v
        return _mat(r * d, c, out)

    @classmethod
    def unvec(cls, m: flint.fmpq_mat, order: int) -> "Matrix":
        d = phi(order)
        if d == 1:
            return cls.from_rational(m, order)
        rd, c = m.nrows(), m.ncols()
        r = rd // d
        e = m.entries()
        comps = []
        for k in range(d):
            block = []
            for i in range(r):
                block.extend(e[(i * d + k) * c:(i * d + k + 1) * c])
            comps.append(_mat(r, c, block))
        return cls(r, c, order, comps)

    def _rref_q(self):
        """(rref entries, rank, pivot columns) of the realification."""
        m = self.realify()
        if m.nrows() == 0 or m.ncols() == 0:
            return [], 0, []
        rr, rank = m.rref()
        e = rr.entries()
        w = m.ncols()
        pivots = []
        for i in range(rank):
            row = e[i * w:(i + 1) * w]
            start = pivots[-1] + 1 if pivots else 0
            for j in range(start, w):
                if row[j] != 0:
                    pivots.append(j)
                    break
        return e, rank, pivots

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        if phi(self.order) == 1 or self.is_rational():
            return self.comp(0).rank() if self.comps[0] is not None else 0
        return self.realify().rank() // phi(self.order)

    def pivot_columns(self) -> list[int]:
        d = phi(self.order)
        if d > 1 and self.is_rational():
            return Matrix(self.rows, self.cols, 1, [self.comps[0]]).pivot_columns()
        _, _, piv = self._rref_q()
        return [p // d for p in piv if p % d == 0]

    def kernel_basis(self) -> "Subspace":
        d = phi(self.order)
        if d > 1 and self.is_rational():
            k = Matrix(self.rows, self.cols, 1, [self.comps[0]]).kernel_basis()
            return Subspace(k.ambient_dim, k.basis.embed(self.order), _free=k._free)
        c = self.cols
        if self.rows == 0 or self.is_zero():
            return Subspace(c, Matrix.identity(c, self.order), _free=list(range(c)))
        e, rank, piv = self._rref_q()
        w = c * d
        pivset = set(piv)
        free = [j for j in range(c) if j * d not in pivset]
        cols = []
        for f in free:
            x = [ZERO] * w
            x[f * d] = flint.fmpq(1)
            for row, p in enumerate(piv):
                v = e[row * w + f * d]
                if v != 0:
                    x[p] = -v
            cols.append(x)
        n = len(free)
        flat = [cols[j][i] for i in range(w) for j in range(n)]
        basis = Matrix.unvec(_mat(w, n, flat), self.order) if n else Matrix(c, 0, self.order)
        return Subspace(c, basis, _free=free)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise LinalgError("inverse of non-square matrix")
        if self.rows == 0:
            return self
        if phi(self.order) == 1 or self.is_rational():
            try:
                inv = self.comp(0).inv()
            except ZeroDivisionError:
                raise LinalgError("matrix is singular") from None
            return Matrix(self.rows, self.cols, self.order, [inv])
        try:
            inv = self.realify().inv()
        except ZeroDivisionError:
            raise LinalgError("matrix is singular") from None
        d = phi(self.order)
        n = self.rows
        e = inv.entries()
        w = n * d
        sel = _mat(w, n, [e[i * w + j * d] for i in range(w) for j in range(n)])
        return Matrix.unvec(sel, self.order)

    def charpoly_rational(self) -> flint.fmpq_poly:
        """Characteristic polynomial of the realification (a rational polynomial)."""
        return self.realify().charpoly()


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


class Subspace:
    """Column span of ``basis`` (linearly independent columns) in an ambient space."""

    __slots__ = ("ambient_dim", "basis", "_free", "_coord")

    def __init__(self, ambient_dim: int, basis: Matrix, _free=None):
        if basis.rows != ambient_dim:
            raise LinalgError("basis rows differ from ambient dimension")
        self.ambient_dim = ambient_dim
        self.basis = basis
        self._free = _free
        self._coord = None

    @classmethod
    def span(cls, vectors: Matrix) -> "Subspace":
        """Subspace spanned by the columns of ``vectors`` (a basis is extracted)."""
        piv = vectors.pivot_columns()
        return cls(vectors.rows, vectors.select_columns(piv))

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def order(self) -> int:
        return self.basis.order

    def _coordinate_data(self):
        if self._coord is None:
            b = self.basis
            if self._free is not None:
                rows = list(self._free)
                inv = None
            else:
                rows = b.transpose().pivot_columns()
                inv = b.select_rows(rows).inverse()
            self._coord = (rows, inv)
        return self._coord

    def coordinates(self, vectors: Matrix, check: bool = True) -> Matrix:
        """Coefficients x with basis @ x = vectors; raises if not contained."""
        if vectors.rows != self.ambient_dim:
            raise LinalgError("vector dimension mismatch")
        if self.dim == 0:
            x = Matrix(0, vectors.cols, _lcm(self.order, vectors.order))
        else:
            rows, inv = self._coordinate_data()
            x = vectors.select_rows(rows)
            if inv is not None:
                x = inv @ x
        bad = not (self.basis @ x - vectors).is_zero() if self.dim else not vectors.is_zero()
        if check and bad:
            raise LinalgError("vectors do not lie in the subspace")
        return x

    def contains(self, vectors: Matrix) -> bool:
        try:
            self.coordinates(vectors)
        except LinalgError:
            return False
        return True

    def __contains__(self, v: Matrix) -> bool:
        return self.contains(v)

    def equals(self, other: "Subspace") -> bool:
        return self.ambient_dim == other.ambient_dim and self.dim == other.dim and \
            hstack([self.basis, other.basis]).rank() == self.dim

    def intersect(self, other: "Subspace") -> "Subspace":
        k = hstack([self.basis, -other.basis]).kernel_basis().basis
        return Subspace.span(self.basis @ k.select_rows(range(self.dim)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


# module-level operations ------------------------------------------------------

def kernel_basis(m: Matrix) -> Subspace:
    return m.kernel_basis()


def kron(a: Matrix, b: Matrix) -> Matrix:
    a, b = a._align(b)
    if a.is_rational() and b.is_rational():
        if a.comps[0] is None or b.comps[0] is None:
            return Matrix(a.rows * b.rows, a.cols * b.cols, a.order)
        return Matrix(a.rows * b.rows, a.cols * b.cols, a.order, [_kron_q(a.comps[0], b.comps[0])])
    return a._conv(b, _kron_q)


def kron_all(ms: Iterable[Matrix]) -> Matrix:
    out = None
    for m in ms:
        out = m if out is None else kron(out, m)
    if out is None:
        return Matrix.identity(1)
    return out


def hstack(ms: Sequence[Matrix]) -> Matrix:
    ms = list(ms)
    order = 1
    for m in ms:
        order = _lcm(order, m.order)
    ms = [m.embed(order) for m in ms]
    r = ms[0].rows
    if any(m.rows != r for m in ms):
        raise LinalgError("hstack row mismatch")
    c = sum(m.cols for m in ms)
    comps = []
    for k in range(phi(order)):
        if all(m.comps[k] is None for m in ms):
            comps.append(None)
            continue
        parts = [m.comp(k).entries() for m in ms]
        out = []
        for i in range(r):
            for m, e in zip(ms, parts):
                out.extend(e[i * m.cols:(i + 1) * m.cols])
        comps.append(_mat(r, c, out))
    return Matrix(r, c, order, comps)


def vstack(ms: Sequence[Matrix]) -> Matrix:
    ms = list(ms)
    order = 1
    for m in ms:
        order = _lcm(order, m.order)
    ms = [m.embed(order) for m in ms]
    c = ms[0].cols
    if any(m.cols != c for m in ms):
        raise LinalgError("vstack column mismatch")
    r = sum(m.rows for m in ms)
    comps = []
    for k in range(phi(order)):
        if all(m.comps[k] is None for m in ms):
            comps.append(None)
            continue
        out = []
        for m in ms:
            out.extend(m.comp(k).entries())
        comps.append(_mat(r, c, out))
    return Matrix(r, c, order, comps)


def equalizer(f: Matrix, g: Matrix) -> Subspace:
    if f.shape != g.shape:
        raise LinalgError(f"shape mismatch {f.shape} vs {g.shape}")
    return (f - g).kernel_basis()


def trace(m: Matrix) -> Scalar:
    if m.rows != m.cols:
        raise LinalgError("trace of non-square matrix")
    co = []
    for c in m.comps:
        s = ZERO
        if c is not None:
            for i in range(m.rows):
                s += c[i, i]
        co.append(s)
    return Scalar(m.order, co)


def idempotent_image(p: Matrix) -> tuple[Subspace, Matrix, Matrix]:
    """Image of an idempotent p with inclusion j and projection q, j q = p, q j = id."""
    if p.rows != p.cols:
        raise LinalgError("idempotent must be square")
    if not (p @ p - p).is_zero():
        raise LinalgError("matrix is not idempotent")
    image = Subspace.span(p)
    j = image.basis
    q = image.coordinates(p)
    return image, j, q


def column_space(m: Matrix) -> Subspace:
    return Subspace.span(m)


def apply_on_legs(g: Matrix, state: Matrix, dims: Sequence[int], start: int, width: int) -> Matrix:
    """Apply g to tensor legs [start, start+width) of each column of ``state``.

    ``state`` has rows indexed by the tensor product of ``dims`` (left slowest);
    the result has those legs replaced by the rows of g.  No identity
    Kronecker factors are formed.
    """
    left = 1
    for x in dims[:start]:
        left *= x
    inner = 1
    for x in dims[start:start + width]:
        inner *= x
    right = 1
    for x in dims[start + width:]:
        right *= x
    if g.cols != inner:
        raise LinalgError(f"map with {g.cols} inputs applied to legs of size {inner}")
    if state.rows != left * inner * right:
        raise LinalgError("state size does not match leg dimensions")
    k = state.cols
    rk = right * k
    if left == 1:
        out = g @ state.reshape(inner, rk)
        return out.reshape(g.rows * right, k)
    moved = _swap_blocks(state, left, inner, rk)
    out = g @ moved
    return _swap_blocks(out, g.rows, left, rk).reshape(left * g.rows * right, k)


def _swap_blocks(m: Matrix, a: int, b: int, chunk: int) -> Matrix:
    """Entries viewed as (a, b, chunk) -> reorder to (b, a, chunk); result b x (a*chunk)."""
    def swap(c):
        e = c.entries()
        out = []
        for j in range(b):
            for i in range(a):
                s = (i * b + j) * chunk
                out.extend(e[s:s + chunk])
        return _mat(b, a * chunk, out)
    return Matrix(b, a * chunk, m.order, [None if c is None else swap(c) for c in m.comps])


def permute_legs(state: Matrix, dims: Sequence[int], perm: Sequence[int]) -> Matrix:
    """Reorder tensor legs of the rows: new leg p is old leg perm[p]."""
    n = len(dims)
    strides = [1] * n
    for i in range(n - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    new_dims = [dims[p] for p in perm]
    total = state.rows
    index = [0] * total
    pos = 0
    counters = [0] * n
    for pos in range(total):
        index[pos] = sum(counters[q] * strides[perm[q]] for q in range(n))
        for q in range(n - 1, -1, -1):
            counters[q] += 1
            if counters[q] < new_dims[q]:
                break
            counters[q] = 0
    return state.select_rows(index)
