"""Finite-dimensional ribbon Hopf algebras given by structure constants.

Conventions: the basis is b_0..b_{d-1}; ``mult`` has column i*d+j equal to
b_i b_j; ``comult`` has column i equal to Delta(b_i) in the basis
b_a (x) b_b indexed a*d+b.  Elements of H (x) H are handled as d x d
matrices X with X[a, b] the coefficient of b_a (x) b_b, so (f (x) g)X is
F X G^T and the multiplication of H (x) H never forms d^2 x d^2 matrices
unless both factors are dense.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .linalg import LinalgError, Matrix, Subspace, apply_on_legs, hstack, kron, trace
from .report import Report
from .scalar import Scalar


class HopfError(ValueError):
    pass


def nonzeros(m: Matrix) -> list[tuple[int, int, Scalar]]:
    idx = set()
    for c in m.comps:
        if c is None:
            continue
        for k, v in enumerate(c.entries()):
            if v != 0:
                idx.add(k)
    return [(k // m.cols, k % m.cols, m.entry(k // m.cols, k % m.cols)) for k in sorted(idx)]


def _basis_vector(d: int, i: int, order: int) -> Matrix:
    return Matrix.from_entries(d, 1, [1 if k == i else 0 for k in range(d)], order)


def _first_diff(a: Matrix, b: Matrix):
    diff = a - b
    nz = nonzeros(diff)
    return nz[0] if nz else None


@dataclass(eq=False)
class HopfData:
    dim: int
    field_order: int
    mult: Matrix
    unit: Matrix
    comult: Matrix
    counit: Matrix
    antipode: Matrix
    r_summands: list = field(default_factory=list)
    ribbon: Matrix | None = None
    pivot: Matrix | None = None
    name: str = "H"

    def __post_init__(self):
        d, n = self.dim, self.field_order
        shapes = {
            "mult": (self.mult, (d, d * d)),
            "unit": (self.unit, (d, 1)),
            "comult": (self.comult, (d * d, d)),
            "counit": (self.counit, (1, d)),
            "antipode": (self.antipode, (d, d)),
        }
        for key, (m, shape) in shapes.items():
            if m.shape != shape:
                raise HopfError(f"{key} has shape {m.shape}, expected {shape}")
        for key in ("ribbon", "pivot"):
            m = getattr(self, key)
            if m is not None and m.shape != (d, 1):
                raise HopfError(f"{key} has shape {m.shape}, expected {(d, 1)}")
        for t, (r, s) in enumerate(self.r_summands):
            if r.shape != (d, 1) or s.shape != (d, 1):
                raise HopfError(f"R-summand {t} is not a pair of vectors of length {d}")
        if n % self.mult.order:
            raise HopfError("field order is not a multiple of the data's order")
        for key in ("mult", "unit", "comult", "counit", "antipode", "ribbon", "pivot"):
            m = getattr(self, key)
            if m is not None:
                object.__setattr__(self, key, m.embed(n))
        self.r_summands = [(r.embed(n), s.embed(n)) for r, s in self.r_summands]

    # basic structure --------------------------------------------------------

    @property
    def order(self) -> int:
        return self.field_order

    def basis_vector(self, i: int) -> Matrix:
        return _basis_vector(self.dim, i, self.field_order)

    def scalar(self, x) -> Scalar:
        return x if isinstance(x, Scalar) else Scalar.rational(x, self.field_order)

    @cached_property
    def identity(self) -> Matrix:
        return Matrix.identity(self.dim, self.field_order)

    @cached_property
    def left_basis(self) -> list[Matrix]:
        d = self.dim
        return [self.mult.select_columns(range(i * d, i * d + d)) for i in range(d)]

    @cached_property
    def right_basis(self) -> list[Matrix]:
        d = self.dim
        return [self.mult.select_columns([j * d + i for j in range(d)]) for i in range(d)]

    def _combine(self, mats: Sequence[Matrix], x: Matrix) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim, self.field_order)
        for i, _, c in nonzeros(x):
            out = out + mats[i].scale(c)
        return out

    def lmul(self, x: Matrix) -> Matrix:
        """Matrix of y -> x y."""
        return self._combine(self.left_basis, x)

    def rmul(self, x: Matrix) -> Matrix:
        """Matrix of y -> y x."""
        return self._combine(self.right_basis, x)

    def mul(self, x: Matrix, y: Matrix) -> Matrix:
        return self.lmul(x) @ y

    def delta(self, x: Matrix) -> Matrix:
        """Delta(x) as a d x d matrix."""
        return (self.comult @ x).reshape(self.dim, self.dim)

    def eps(self, x: Matrix) -> Scalar:
        return (self.counit @ x).entry(0, 0)

    def S(self, x: Matrix) -> Matrix:
        return self.antipode @ x

    @cached_property
    def antipode_inverse(self) -> Matrix:
        return self.antipode.inverse()

    def inv(self, x: Matrix) -> Matrix:
        try:
            return self.lmul(x).inverse() @ self.unit
        except LinalgError:
            raise HopfError("element is not invertible") from None

    def mul_vec(self, X: Matrix) -> Matrix:
        """mu applied to an element of H (x) H given as a d x d matrix."""
        return self.mult @ X.reshape(self.dim * self.dim, 1)

    # H (x) H -----------------------------------------------------------------

    def t2_mul(self, X: Matrix, Y: Matrix) -> Matrix:
        """Product of two elements of H (x) H (d x d matrices)."""
        nx, ny = nonzeros(X), nonzeros(Y)
        out = Matrix.zeros(self.dim, self.dim, self.field_order)
        if len(ny) <= len(nx):
            for a, b, c in ny:
                out = out + (self.right_basis[a] @ X @ self.right_basis[b].T).scale(c)
        else:
            for a, b, c in nx:
                out = out + (self.left_basis[a] @ Y @ self.left_basis[b].T).scale(c)
        return out

    @cached_property
    def r_matrix(self) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim, self.field_order)
        for r, s in self.r_summands:
            out = out + r @ s.T
        return out

    @cached_property
    def r21(self) -> Matrix:
        return self.r_matrix.T

    @cached_property
    def r_inverse(self) -> Matrix:
        """(S (x) id) R, which is R^{-1} for a quasitriangular structure."""
        return self.antipode @ self.r_matrix

    @cached_property
    def monodromy_element(self) -> Matrix:
        """R21 R as a d x d matrix."""
        return self.t2_mul(self.r21, self.r_matrix)

    @cached_property
    def drinfeld_element(self) -> Matrix:
        """u = sum S(R2) R1."""
        return self.mul_vec((self.antipode @ self.r21))

    @cached_property
    def pivot_inverse(self) -> Matrix:
        return self.inv(self.pivot)

    @cached_property
    def ribbon_inverse(self) -> Matrix:
        return self.inv(self.ribbon)

    @cached_property
    def unit_tensor(self) -> Matrix:
        return self.unit @ self.unit.T

    @cached_property
    def generators(self) -> list[int]:
        """Indices of basis elements generating H as an algebra (greedy)."""
        d, n = self.dim, self.field_order
        span = Subspace.span(self.unit)
        gens: list[int] = []
        for i in range(d):
            v = self.basis_vector(i)
            if span.contains(v):
                continue
            gens.append(i)
            span = self._closure(span, gens)
            if span.dim == d:
                break
        return gens

    def _closure(self, span: Subspace, gens: list[int]) -> Subspace:
        while True:
            blocks = [span.basis] + [self.right_basis[g] @ span.basis for g in gens]
            new = Subspace.span(hstack(blocks))
            if new.dim == span.dim:
                return span
            span = new


# verification ------------------------------------------------------------------

def verify_hopf(h: HopfData) -> Report:
    """Bialgebra and antipode axioms, each with its first violating basis tuple."""
    rep = Report()
    d, n = h.dim, h.field_order
    I = h.identity
    L, R = h.left_basis, h.right_basis

    # associativity: L_i R_k = R_k L_i
    wit = None
    for i in range(d):
        for k in range(d):
            diff = _first_diff(L[i] @ R[k], R[k] @ L[i])
            if diff:
                wit = f"(b{i}, b{diff[1]}, b{k})"
                break
        if wit:
            break
    rep.add("associativity", wit is None, wit)

    lu, ru = h.lmul(h.unit), h.rmul(h.unit)
    diff = _first_diff(lu, I) or _first_diff(ru, I)
    rep.add("unit", diff is None, diff and f"b{diff[1]}")

    # coassociativity per basis element
    wit = None
    for b in range(d):
        C = h.delta(h.basis_vector(b))
        lhs = (h.comult @ C).reshape(d ** 3, 1)
        rhs = (C @ h.comult.T).reshape(d ** 3, 1)
        diff = _first_diff(lhs, rhs)
        if diff:
            a, rest = divmod(diff[0], d * d)
            wit = f"b{b}: component (b{a}, b{rest // d}, b{rest % d})"
            break
    rep.add("coassociativity", wit is None, wit)

    wit = None
    for b in range(d):
        C = h.delta(h.basis_vector(b))
        e = h.basis_vector(b)
        if (h.counit @ C).T != e or C @ h.counit.T != e:
            wit = f"b{b}"
            break
    rep.add("counit", wit is None, wit)

    # Delta is an algebra map
    wit = None
    deltas = [h.delta(h.basis_vector(i)) for i in range(d)]
    for i in range(d):
        for j in range(d):
            prod = h.delta(L[i].select_columns([j]))
            if prod != h.t2_mul(deltas[i], deltas[j]):
                wit = f"(b{i}, b{j})"
                break
        if wit:
            break
    if wit is None and h.delta(h.unit) != h.unit_tensor:
        wit = "Delta(1) != 1 (x) 1"
    rep.add("comult_algebra_map", wit is None, wit)

    wit = None
    em = h.counit @ h.mult
    ee = kron(h.counit, h.counit)
    diff = _first_diff(em, ee)
    if diff:
        wit = f"(b{diff[1] // d}, b{diff[1] % d})"
    elif h.eps(h.unit) != 1:
        wit = "eps(1) != 1"
    rep.add("counit_algebra_map", wit is None, wit)

    wit = None
    for b in range(d):
        C = deltas[b]
        target = h.unit.scale(h.eps(h.basis_vector(b)))
        left = h.mul_vec(h.antipode @ C)
        right = h.mul_vec(C @ h.antipode.T)
        if left != target or right != target:
            wit = f"b{b}"
            break
    rep.add("antipode", wit is None, wit)
    return rep


def _leg_mul(h: HopfData, state: Matrix, pairs: Sequence[tuple[Matrix, Matrix]], legs: tuple[int, int],
             side: str) -> Matrix:
    """Multiply an element of H^{(x)3} (a d^3 x 1 vector) by sum x_t (x) y_t on two legs."""
    d = h.dim
    dims = [d, d, d]
    out = Matrix.zeros(d ** 3, 1, h.field_order)
    for x, y in pairs:
        mx, my = (h.rmul(x), h.rmul(y)) if side == "right" else (h.lmul(x), h.lmul(y))
        s = apply_on_legs(mx, state, dims, legs[0], 1)
        s = apply_on_legs(my, s, dims, legs[1], 1)
        out = out + s
    return out


def _leg_vector(h: HopfData, pairs, legs) -> Matrix:
    d = h.dim
    out = Matrix.zeros(d ** 3, 1, h.field_order)
    one = h.unit
    for x, y in pairs:
        factors = [one, one, one]
        factors[legs[0]] = x
        factors[legs[1]] = y
        out = out + kron(kron(factors[0], factors[1]), factors[2])
    return out


def verify_quasitriangular_ribbon_pivotal(h: HopfData) -> Report:
    rep = Report()
    d = h.dim
    Rm = h.r_matrix
    one2 = h.unit_tensor
    if not h.r_summands:
        rep.add("r_matrix_present", False, "no R-matrix summands")
        return rep

    Rinv = h.r_inverse
    ok = h.t2_mul(Rm, Rinv) == one2 and h.t2_mul(Rinv, Rm) == one2
    rep.add("r_invertible", ok, "R (S (x) id)(R) != 1 (x) 1")

    wit = None
    for b in range(d):
        C = h.delta(h.basis_vector(b))
        if h.t2_mul(C.T, Rm) != h.t2_mul(Rm, C):
            wit = f"b{b}"
            break
    rep.add("r_intertwines_coproduct", wit is None, wit)

    # (Delta (x) id) R = R13 R23, both as d x d^2 arrays
    lhs = (h.comult @ Rm).reshape(d, d * d)
    rhs = Matrix.zeros(d, d * d, h.field_order)
    for r, s in h.r_summands:
        rhs = rhs + r @ (Rm @ h.lmul(s).T).reshape(1, d * d)
    rep.add("hexagon_delta_left", lhs == rhs, "(Delta (x) id)R != R13 R23")

    lhs = Rm @ h.comult.T
    rhs = Matrix.zeros(d * d, d, h.field_order)
    for r, s in h.r_summands:
        rhs = rhs + (h.lmul(r) @ Rm).reshape(d * d, 1) @ s.T
    rep.add("hexagon_delta_right", lhs.reshape(d, d * d) == rhs.reshape(d, d * d), "(id (x) Delta)R != R13 R12")

    unit_row = h.unit.T
    ok = h.counit @ Rm == unit_row and Rm @ h.counit.T == h.unit
    rep.add("r_counit", ok, "(eps (x) id)R or (id (x) eps)R differs from 1")

    pairs = h.r_summands
    r12 = _leg_vector(h, pairs, (0, 1))
    lhs = _leg_mul(h, _leg_mul(h, r12, pairs, (0, 2), "right"), pairs, (1, 2), "right")
    r23 = _leg_vector(h, pairs, (1, 2))
    rhs = _leg_mul(h, _leg_mul(h, r23, pairs, (0, 2), "right"), pairs, (0, 1), "right")
    diff = _first_diff(lhs, rhs)
    wit = None
    if diff:
        a, rest = divmod(diff[0], d * d)
        wit = f"component (b{a}, b{rest // d}, b{rest % d})"
    rep.add("yang_baxter", diff is None, wit)

    # ribbon element
    v = h.ribbon
    if v is None:
        rep.add("ribbon_present", False, "no ribbon element")
    else:
        rep.add("ribbon_central", h.lmul(v) == h.rmul(v), "v is not central")
        try:
            vinv = h.inv(v)
            rep.add("ribbon_invertible", True)
        except HopfError:
            vinv = None
            rep.add("ribbon_invertible", False, "v is not invertible")
        rep.add("ribbon_antipode", h.S(v) == v, "S(v) != v")
        rep.add("ribbon_counit", h.eps(v) == 1, "eps(v) != 1")
        ok = h.t2_mul(h.monodromy_element, h.delta(v)) == v @ v.T
        rep.add("ribbon_coproduct", ok, "(R21 R) Delta(v) != v (x) v")

    w = h.pivot
    if w is None:
        rep.add("pivot_present", False, "no pivot")
        return rep
    rep.add("pivot_grouplike", h.delta(w) == w @ w.T and h.eps(w) == 1, "Delta(w) != w (x) w")
    try:
        winv = h.inv(w)
        rep.add("pivot_invertible", True)
    except HopfError:
        winv = None
        rep.add("pivot_invertible", False, "w is not invertible")
    if winv is not None:
        s2 = h.antipode @ h.antipode
        conj = h.lmul(w) @ h.rmul(winv)
        diff = _first_diff(s2, conj)
        rep.add("pivot_square_antipode", diff is None, diff and f"b{diff[1]}")
    if v is not None and w is not None:
        try:
            ok = h.mul(h.drinfeld_element, h.inv(v)) == w
        except HopfError:
            ok = False
        rep.add("pivot_drinfeld_ribbon", ok, "w != u v^{-1}")
    return rep


def monodromy(h: HopfData) -> Matrix:
    """Matrix of f -> (f (x) id)(R21 R) from the dual basis of H* to H."""
    return h.monodromy_element.T


def is_factorizable(h: HopfData) -> bool:
    return monodromy(h).rank() == h.dim


# constructions -------------------------------------------------------------------

def _validate_group(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise HopfError("multiplication table must be square and non-empty")
    if any(not (0 <= x < n) for row in table for x in row):
        raise HopfError("table entries out of range")
    units = [e for e in range(n) if all(table[e][g] == g and table[g][e] == g for g in range(n))]
    if not units:
        raise HopfError("no identity element")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise HopfError(f"table is not associative at ({a}, {b}, {c})")
    e = units[0]
    for g in range(n):
        if not any(table[g][k] == e for k in range(n)):
            raise HopfError(f"element {g} has no inverse")
    return e


def group_algebra(table: Sequence[Sequence[int]], field_order: int = 1, name: str = "k[G]") -> HopfData:
    """k[G] with Delta(g) = g (x) g, trivial R-matrix, ribbon and pivot 1."""
    e = _validate_group(table)
    n = len(table)
    inv = [next(k for k in range(n) if table[g][k] == e) for g in range(n)]
    mult = [[0] * (n * n) for _ in range(n)]
    comult = [[0] * n for _ in range(n * n)]
    anti = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            mult[table[a][b]][a * n + b] = 1
        comult[a * n + a][a] = 1
        anti[inv[a]][a] = 1
    unit = [[1 if g == e else 0] for g in range(n)]
    one = Matrix.from_rows(unit)
    return HopfData(
        dim=n, field_order=field_order,
        mult=Matrix.from_rows(mult), unit=one, comult=Matrix.from_rows(comult),
        counit=Matrix.from_rows([[1] * n]), antipode=Matrix.from_rows(anti),
        r_summands=[(one, one)], ribbon=one, pivot=one, name=name,
    )


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def symmetric_group_table(k: int) -> list[list[int]]:
    from itertools import permutations
    elems = sorted(permutations(range(k)))
    index = {p: i for i, p in enumerate(elems)}
    return [[index[tuple(p[q[i]] for i in range(k))] for q in elems] for p in elems]


def drinfeld_double(h: HopfData, name: str | None = None) -> HopfData:
    """D(H) = H*^cop (x) H with basis e^i (x) b_j at index i*d + j.

    Algebra: H* has the convolution product dual to Delta; H is a subalgebra;
    the cross relation is a f = f(S^{-1}(a_3) ? a_1) a_2.  Coalgebra: H*^cop (x) H.
    R = sum_i (1 (x) b_i) (x) (e^i (x) 1).  Ribbon and pivot are not set.
    """
    d, n = h.dim, h.field_order
    D = d * d
    Sinv = h.antipode_inverse
    mu = h.mult
    # structure constants as nested lists of Scalars for the combinatorial assembly
    m_c = [[[x for x in row] for row in mu.to_rows()]][0]  # m_c[k][i*d+j]
    dl = h.comult.to_rows()  # dl[a*d+b][i]
    zero = Scalar.rational(0, n)

    def mc(i, j, k):
        return m_c[k][i * d + j]

    # delta2[i] : list of (a, b, c) -> coefficient for (Delta (x) id) Delta(b_i)
    deltas = []
    for i in range(d):
        terms = []
        for a in range(d):
            for b in range(d):
                c = dl[a * d + b][i]
                if not c.is_zero():
                    terms.append((a, b, c))
        deltas.append(terms)
    delta3 = []
    for i in range(d):
        terms = {}
        for a, b, c in deltas[i]:
            for a1, a2, c2 in deltas[a]:
                key = (a1, a2, b)
                terms[key] = terms.get(key, zero) + c * c2
        delta3.append([(k, v) for k, v in terms.items() if not v.is_zero()])
    sinv = Sinv.to_rows()  # sinv[x][i] = coefficient of b_x in S^{-1}(b_i)

    # f(x ? y) for f = e^g: z -> e^g(x z y); as a matrix on H*: column z
    # (e^g(x ? y))(b_z) = coefficient of b_g in x b_z y
    Lm = h.left_basis
    Rb = h.right_basis

    # a . e^g = sum over Delta^(2)(a) = a1 (x) a2 (x) a3 of [e^g(S^{-1}(a3) ? a1)] a2
    # coefficient of e^p in e^g(x ? y) is (x b_p y)_g
    def cross(a: int, g: int) -> dict:
        out: dict = {}
        for (a1, a2, a3), c in delta3[a]:
            # x = S^{-1}(b_a3), y = b_a1; e^g(x b_p y) for all p
            xv = Sinv.select_columns([a3])
            mat = h.lmul(xv) @ Rb[a1]  # column p: x b_p b_a1
            row = mat.select_rows([g])
            for p, _, val in nonzeros(row.T):
                key = (p, a2)
                out[key] = out.get(key, zero) + c * val
        return {k: v for k, v in out.items() if not v.is_zero()}

    cross_table = [[cross(a, g) for g in range(d)] for a in range(d)]

    # convolution in H*: (e^p e^q)(b_z) = sum Delta(b_z)[p, q] -> coefficient of e^z
    def conv(p: int, q: int) -> list:
        return [(z, dl[p * d + q][z]) for z in range(d) if not dl[p * d + q][z].is_zero()]

    conv_table = [[conv(p, q) for q in range(d)] for p in range(d)]

    mult_entries: dict = {}
    for f in range(d):
        for a in range(d):
            for g in range(d):
                for b in range(d):
                    col = (f * d + a) * D + (g * d + b)
                    acc: dict = {}
                    for (p, a2), c in cross_table[a][g].items():
                        for z, c1 in conv_table[f][p]:
                            for k in range(d):
                                c2 = mc(a2, b, k)
                                if c2.is_zero():
                                    continue
                                key = z * d + k
                                acc[key] = acc.get(key, zero) + c * c1 * c2
                    for key, val in acc.items():
                        if not val.is_zero():
                            mult_entries[(key, col)] = val
    mult = _sparse(D, D * D, mult_entries, n)

    unit_entries = {}
    eps = h.counit.to_rows()[0]
    # unit of H* is eps = sum eps(b_i) e^i
    for i in range(d):
        if not eps[i].is_zero():
            for k, _, c in nonzeros(h.unit):
                unit_entries[(i * d + k, 0)] = eps[i] * c
    unit = _sparse(D, 1, unit_entries, n)

    # coproduct: Delta(e^f (x) b_a) = (f_2 (x) a_1) (x) (f_1 (x) a_2) with e^f(xy) = f_1(x) f_2(y)
    # e^f(b_p b_q) = mc(p, q, f) so Delta_{H*}(e^f) = sum mc(p,q,f) e^p (x) e^q
    comult_entries: dict = {}
    for f in range(d):
        for a in range(d):
            col = f * d + a
            for a1, a2, c in deltas[a]:
                for p in range(d):
                    for q in range(d):
                        cf = mc(p, q, f)
                        if cf.is_zero():
                            continue
                        row = (q * d + a1) * D + (p * d + a2)
                        comult_entries[(row, col)] = comult_entries.get((row, col), zero) + cf * c
    comult = _sparse(D * D, D, comult_entries, n)

    counit_entries = {}
    one_coeffs = h.unit.to_rows()
    for f in range(d):
        for a in range(d):
            val = one_coeffs[f][0] * eps[a]
            if not val.is_zero():
                counit_entries[(0, f * d + a)] = val
    counit = _sparse(1, D, counit_entries, n)

    # antipode: S(e^f (x) b_a) = (1 (x) S(b_a)) ((e^f o S^{-1}) (x) 1)
    anti_entries: dict = {}
    sinv_rows = Sinv.to_rows()
    srows = h.antipode.to_rows()
    unit_h = nonzeros(h.unit)
    one_star = [(i, eps[i]) for i in range(d) if not eps[i].is_zero()]
    for f in range(d):
        for a in range(d):
            col = f * d + a
            # e^f o S^{-1} = sum_p Sinv[f][p] e^p
            fs = [(p, sinv_rows[f][p]) for p in range(d) if not sinv_rows[f][p].is_zero()]
            sa = [(x, srows[x][a]) for x in range(d) if not srows[x][a].is_zero()]
            for x, cx in sa:
                for p, cp in fs:
                    # b_x . e^p = sum cross_table[x][p]
                    for (q, y), cc in cross_table[x][p].items():
                        key = (q * d + y, col)
                        anti_entries[key] = anti_entries.get(key, zero) + cx * cp * cc
    antipode = _sparse(D, D, anti_entries, n)

    r_summands = []
    eps_vec = [(i * d + k, eps[i] * c) for i in range(d) if not eps[i].is_zero() for k, _, c in unit_h]
    for i in range(d):
        left = _sparse(D, 1, {(idx, 0): c for idx, c in
                              [(e_i * d + i, ce) for e_i, ce in one_star]}, n)
        right = _sparse(D, 1, {(i * d + k, 0): c for k, _, c in unit_h}, n)
        r_summands.append((left, right))
    return HopfData(D, n, mult, unit, comult, counit, antipode, r_summands,
                    name=name or f"D({h.name})")


def _sparse(r: int, c: int, entries: dict, order: int) -> Matrix:
    flat = [0] * (r * c)
    for (i, j), v in entries.items():
        if not v.is_zero():
            flat[i * c + j] = v
    return Matrix.from_entries(r, c, flat, order)


def with_ribbon(h: HopfData, ribbon: Matrix, pivot: Matrix, name: str | None = None) -> HopfData:
    return HopfData(h.dim, h.field_order, h.mult, h.unit, h.comult, h.counit, h.antipode,
                    list(h.r_summands), ribbon, pivot, name or h.name)


def drinfeld_double_of_group(table: Sequence[Sequence[int]], field_order: int = 1, name: str | None = None) -> HopfData:
    """D(k[G]) with its canonical R-matrix, ribbon element v = u and pivot 1."""
    g = group_algebra(table, field_order)
    dd = drinfeld_double(g, name or "D(k[G])")
    u = dd.drinfeld_element
    return with_ribbon(dd, u, dd.unit)


def grouplikes_of_double(h: HopfData, dd: HopfData) -> list[Matrix]:
    """Products chi (x) g of characters of H and grouplike elements of H, inside D(H)."""
    d = h.dim
    chars = algebra_characters(h)
    glikes = grouplike_elements(h)
    out = []
    for chi in chars:
        for g in glikes:
            flat = [0] * (d * d)
            for i in range(d):
                for j in range(d):
                    flat[i * d + j] = chi[i] * g.entry(j, 0)
            out.append(Matrix.from_entries(d * d, 1, flat, h.field_order))
    return out


def grouplike_elements(h: HopfData) -> list[Matrix]:
    """Grouplikes among the basis vectors and their negatives' absence: basis search."""
    out = []
    for i in range(h.dim):
        b = h.basis_vector(i)
        if h.delta(b) == b @ b.T and h.eps(b) == 1:
            out.append(b)
    return out


def algebra_characters(h: HopfData) -> list[list[Scalar]]:
    """Algebra maps H -> k taking values in {0, +1, -1} on the basis (small search)."""
    from itertools import product
    d, n = h.dim, h.field_order
    gens = h.generators
    found = []
    values = [Scalar.rational(v, n) for v in (1, -1, 0)]
    for choice in product(values, repeat=len(gens)):
        chi = _extend_character(h, dict(zip(gens, choice)))
        if chi is not None:
            found.append(chi)
    return found


def _extend_character(h: HopfData, vals: dict) -> list[Scalar] | None:
    d, n = h.dim, h.field_order
    known = {i: v for i, v in vals.items()}
    one = nonzeros(h.unit)
    # solve chi on the basis: chi is linear, chi(1) = 1, chi(b_g x) = chi(b_g) chi(x)
    # unknown vector c with constraints c @ L_g = chi(g) c for generators, c @ unit = 1
    rows = []
    for g, v in known.items():
        rows.append(h.left_basis[g].T - h.identity.scale(v))
    from .linalg import vstack
    A = vstack(rows + [h.unit.T])
    rhs = Matrix.from_entries(A.rows, 1, [0] * (A.rows - 1) + [1], n)
    aug = hstack([A, rhs])
    if aug.rank() != A.rank():
        return None
    ker = A.kernel_basis()
    # particular solution via least pivot substitution
    sol = _particular(A, rhs)
    if sol is None:
        return None
    chi = [sol.entry(i, 0) for i in range(d)]
    for g, v in known.items():
        if chi[g] != v:
            return None
    if ker.dim:
        return None
    return chi


def _particular(A: Matrix, b: Matrix) -> Matrix | None:
    aug = hstack([A, b])
    k = aug.kernel_basis()
    last = A.cols
    for j in range(k.dim):
        col = k.basis.column(j)
        c = col.entry(last, 0)
        if not c.is_zero():
            return col.select_rows(range(last)).scale(-(c.inverse()))
    return None


def sweedler_algebra() -> HopfData:
    """Sweedler's 4-dimensional Hopf algebra, basis (1, g, x, gx)."""
    # words: index 0 = 1, 1 = g, 2 = x, 3 = gx; products as (sign, index)
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (1, 0), (1, 2): (1, 3), (1, 3): (1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (0, 0), (2, 3): (0, 0),
        (3, 0): (1, 3), (3, 1): (-1, 2), (3, 2): (0, 0), (3, 3): (0, 0),
    }
    mult = [[0] * 16 for _ in range(4)]
    for (i, j), (s, k) in table.items():
        if s:
            mult[k][i * 4 + j] = s
    comult = [[0] * 4 for _ in range(16)]
    comult[0][0] = 1
    comult[1 * 4 + 1][1] = 1
    comult[2 * 4 + 0][2] = 1
    comult[1 * 4 + 2][2] = 1
    comult[3 * 4 + 1][3] = 1
    comult[0 * 4 + 3][3] = 1
    anti = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    return HopfData(
        dim=4, field_order=1, mult=Matrix.from_rows(mult),
        unit=Matrix.from_rows([[1], [0], [0], [0]]), comult=Matrix.from_rows(comult),
        counit=Matrix.from_rows([[1, 1, 0, 0]]), antipode=Matrix.from_rows(anti), name="H4",
    )
