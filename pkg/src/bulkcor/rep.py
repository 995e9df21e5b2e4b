"""Finite-dimensional left modules over a Hopf algebra and their category.

Tensor products use the Kronecker convention of ``linalg`` (left factor
slowest).  The dual carries rho(S(b))^T; the pivot enters only through the
right evaluation and coevaluation.  The twist is rho(v^{-1}) for the ribbon
element v, which is the choice that satisfies the balancing identity
theta_{X (x) Y} = c_{Y,X} c_{X,Y} (theta_X (x) theta_Y) for the braiding
c = flip o R together with Delta(v) = (R21 R)^{-1} (v (x) v).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

import flint

from .hopf import HopfData, HopfError, nonzeros
from .linalg import LinalgError, Matrix, Subspace, hstack, kron, trace, vstack
from .scalar import Scalar, phi


class RepError(ValueError):
    pass


class ModuleRep:
    """Module given by the action matrices of the Hopf basis (computed lazily)."""

    def __init__(self, hopf: HopfData, dim: int, action: Sequence[Matrix] | Callable[[int], Matrix],
                 name: str = "M"):
        self.hopf = hopf
        self.dim = dim
        self.name = name
        self._cache: dict[int, Matrix] = {}
        if callable(action):
            self._make = action
        else:
            action = list(action)
            if len(action) != hopf.dim:
                raise RepError(f"expected {hopf.dim} action matrices, got {len(action)}")
            for i, m in enumerate(action):
                if m.shape != (dim, dim):
                    raise RepError(f"action matrix {i} has shape {m.shape}, expected {(dim, dim)}")
                self._cache[i] = m.embed(hopf.field_order) if m.order != hopf.field_order else m
            self._make = None

    def __repr__(self):
        return f"ModuleRep({self.name}, dim={self.dim})"

    @property
    def order(self) -> int:
        return self.hopf.field_order

    def act(self, i: int) -> Matrix:
        m = self._cache.get(i)
        if m is None:
            m = self._make(i)
            if m.order != self.order:
                m = m.embed(self.order)
            self._cache[i] = m
        return m

    @property
    def action(self) -> list[Matrix]:
        return [self.act(i) for i in range(self.hopf.dim)]

    def rho(self, x: Matrix) -> Matrix:
        """Action of an element x of H (a d x 1 vector)."""
        out = Matrix.zeros(self.dim, self.dim, self.order)
        for i, _, c in nonzeros(x):
            out = out + self.act(i).scale(c)
        return out

    @cached_property
    def identity(self) -> Matrix:
        return Matrix.identity(self.dim, self.order)

    def generator_actions(self) -> list[Matrix]:
        return [self.act(g) for g in self.hopf.generators]

    def verify(self) -> bool:
        """rho(1) = id and rho(g) rho(b) = rho(g b) for generators g and all b."""
        h = self.hopf
        if self.rho(h.unit) != self.identity:
            return False
        for g in h.generators:
            for j in range(h.dim):
                prod = h.left_basis[g].select_columns([j])
                if self.act(g) @ self.act(j) != self.rho(prod):
                    return False
        return True

    # derived modules -------------------------------------------------------------

    def restrict(self, sub: Subspace, name: str | None = None) -> "ModuleRep":
        """Submodule on the span of ``sub`` (basis order kept)."""
        basis = sub.basis

        def make(i):
            return sub.coordinates(self.act(i) @ basis)
        return ModuleRep(self.hopf, sub.dim, make, name or f"sub({self.name})")

    def is_invariant(self, sub: Subspace) -> bool:
        return all(sub.contains(a @ sub.basis) for a in self.generator_actions())


@dataclass
class ModuleMap:
    source: ModuleRep
    target: ModuleRep
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise RepError(f"map matrix {self.matrix.shape} does not fit {self.source.dim} -> {self.target.dim}")

    def is_intertwiner(self) -> bool:
        if self.source.hopf is not self.target.hopf:
            return False
        h = self.source.hopf
        return all(self.matrix @ self.source.act(g) == self.target.act(g) @ self.matrix for g in h.generators)

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self o other."""
        return ModuleMap(other.source, self.target, self.matrix @ other.matrix)


@dataclass
class HomSpace:
    source: ModuleRep
    target: ModuleRep
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def maps(self) -> list[Matrix]:
        b = self.subspace.basis
        return [b.column(j).reshape(self.target.dim, self.source.dim) for j in range(self.dim)]

    def coordinates(self, f: Matrix) -> Matrix:
        return self.subspace.coordinates(f.reshape(f.rows * f.cols, 1))


def _same_hopf(m: ModuleRep, n: ModuleRep) -> HopfData:
    if m.hopf is not n.hopf:
        raise RepError("modules over different Hopf algebras")
    return m.hopf


def hom_basis(m: ModuleRep, n: ModuleRep) -> HomSpace:
    """All intertwiners m -> n as a subspace of row-major vectorised matrices.

    The solution space is cut down one generator at a time: the constraint
    X a - b X is evaluated on the current basis only, so later generators
    work on a much smaller system.
    """
    h = _same_hopf(m, n)
    order = h.field_order
    size = m.dim * n.dim
    if size == 0:
        return HomSpace(m, n, Subspace(size, Matrix(size, 0, order)))
    basis = None
    for g in h.generators:
        a, b = m.act(g), n.act(g)
        if basis is None:
            if m.dim == 1:
                cons = Matrix.identity(n.dim, order).scale(a.entry(0, 0)) - b
            elif n.dim == 1:
                cons = a.T - Matrix.identity(m.dim, order).scale(b.entry(0, 0))
            else:
                cons = kron(Matrix.identity(n.dim, order), a.T) - kron(b, Matrix.identity(m.dim, order))
            basis = cons.kernel_basis().basis
        else:
            cons = _intertwiner_defect(basis, a, b, m.dim, n.dim)
            if cons.is_zero():
                continue
            basis = basis @ cons.kernel_basis().basis
        if basis.cols == 0:
            break
    if basis is None:
        basis = Matrix.identity(size, order)
    return HomSpace(m, n, Subspace(size, basis))


def _intertwiner_defect(basis: Matrix, a: Matrix, b: Matrix, p: int, q: int) -> Matrix:
    """Columns vec(X_k a - b X_k) for the q x p matrices X_k stored in ``basis``."""
    k = basis.cols
    left = (b @ basis.reshape(q, p * k)).reshape(q * p, k)
    right = (basis.T.reshape(k * q, p) @ a).reshape(k, q * p).T
    return right - left


def invariants(m: ModuleRep) -> Subspace:
    """hom(I, m) realised as the subspace of invariant vectors of m."""
    h = m.hopf
    if m.dim == 0:
        return Subspace(0, Matrix(0, 0, m.order))
    rows = []
    for g in h.generators:
        e = h.eps(h.basis_vector(g))
        rows.append(m.act(g) - m.identity.scale(e))
    if not rows:
        return Subspace(m.dim, m.identity)
    return vstack(rows).kernel_basis()


# basic modules -------------------------------------------------------------------

def regular(h: HopfData) -> ModuleRep:
    return ModuleRep(h, h.dim, h.left_basis, "H_reg")


def trivial(h: HopfData) -> ModuleRep:
    eps = h.counit
    return ModuleRep(h, 1, [eps.select_columns([i]) for i in range(h.dim)], "I")


def unit_object(h: HopfData) -> ModuleRep:
    return trivial(h)


def tensor(m: ModuleRep, n: ModuleRep, name: str | None = None) -> ModuleRep:
    h = _same_hopf(m, n)
    deltas: dict[int, list] = {}

    def make(i):
        C = h.delta(h.basis_vector(i))
        out = Matrix.zeros(m.dim * n.dim, m.dim * n.dim, h.field_order)
        for a, b, c in nonzeros(C):
            out = out + kron(m.act(a), n.act(b)).scale(c)
        return out
    return ModuleRep(h, m.dim * n.dim, make, name or f"({m.name}*{n.name})")


def tensor_all(ms: Sequence[ModuleRep]) -> ModuleRep:
    out = ms[0]
    for m in ms[1:]:
        out = tensor(out, m)
    return out


def dual(m: ModuleRep, name: str | None = None) -> ModuleRep:
    h = m.hopf
    S = h.antipode

    def make(i):
        return m.rho(S.select_columns([i])).T
    return ModuleRep(h, m.dim, make, name or f"{m.name}^")


def direct_sum(ms: Sequence[ModuleRep], name: str | None = None) -> ModuleRep:
    h = ms[0].hopf
    total = sum(m.dim for m in ms)

    def make(i):
        out = Matrix.zeros(total, total, h.field_order)
        blocks = []
        for k, m in enumerate(ms):
            row = [Matrix.zeros(m.dim, x.dim, h.field_order) if j != k else m.act(i) for j, x in enumerate(ms)]
            blocks.append(hstack(row))
        return vstack(blocks)
    return ModuleRep(h, total, make, name or "(+)".join(m.name for m in ms))


def adjoint_module(h: HopfData) -> ModuleRep:
    """H_adj with b . x = b_(1) x S(b_(2))."""
    R = h.right_basis
    Sv = h.antipode

    def make(i):
        C = h.delta(h.basis_vector(i))
        out = Matrix.zeros(h.dim, h.dim, h.field_order)
        for a, b, c in nonzeros(C):
            out = out + (h.left_basis[a] @ h.rmul(Sv.select_columns([b]))).scale(c)
        return out
    return ModuleRep(h, h.dim, make, "A")


def coadjoint_module(h: HopfData) -> ModuleRep:
    return dual(adjoint_module(h), "F_coadj")


# duality, braiding, twist ----------------------------------------------------------------

def flip(m_dim: int, n_dim: int, order: int = 1) -> Matrix:
    """Permutation M (x) N -> N (x) M."""
    flat = [0] * (m_dim * n_dim) ** 2
    size = m_dim * n_dim
    for i in range(m_dim):
        for j in range(n_dim):
            flat[(j * m_dim + i) * size + (i * n_dim + j)] = 1
    return Matrix.from_entries(size, size, flat, order)


def ev_left(m: ModuleRep) -> Matrix:
    """m^ (x) m -> I, phi (x) x -> phi(x)."""
    n = m.dim
    return Matrix.from_entries(1, n * n, [1 if i == j else 0 for i in range(n) for j in range(n)], m.order)


def coev_left(m: ModuleRep) -> Matrix:
    """I -> m (x) m^, 1 -> sum e_i (x) e^i."""
    return ev_left(m).T


def ev_right(m: ModuleRep) -> Matrix:
    """m (x) m^ -> I, x (x) phi -> phi(omega x)."""
    w = m.rho(m.hopf.pivot)
    return w.T.reshape(1, m.dim * m.dim)


def coev_right(m: ModuleRep) -> Matrix:
    """I -> m^ (x) m, 1 -> sum e^i (x) omega^{-1} e_i."""
    winv = m.rho(m.hopf.pivot_inverse)
    return winv.T.reshape(m.dim * m.dim, 1)


def quantum_dimension(m: ModuleRep) -> Scalar:
    return (ev_right(m) @ coev_left(m)).entry(0, 0)


def braiding(m: ModuleRep, n: ModuleRep) -> Matrix:
    """c_{m,n} = flip o (rho_m(R1) (x) rho_n(R2))."""
    h = _same_hopf(m, n)
    acc = Matrix.zeros(m.dim * n.dim, m.dim * n.dim, h.field_order)
    for r, s in h.r_summands:
        acc = acc + kron(m.rho(r), n.rho(s))
    return flip(m.dim, n.dim, h.field_order) @ acc


def braiding_inverse(m: ModuleRep, n: ModuleRep) -> Matrix:
    """c_{m,n}^{-1}: n (x) m -> m (x) n, equal to R^{-1} o flip with R^{-1} = (S (x) id)R."""
    h = _same_hopf(m, n)
    acc = Matrix.zeros(m.dim * n.dim, m.dim * n.dim, h.field_order)
    for r, s in h.r_summands:
        acc = acc + kron(m.rho(h.S(r)), n.rho(s))
    return acc @ flip(n.dim, m.dim, h.field_order)


def twist(m: ModuleRep) -> Matrix:
    return m.rho(m.hopf.ribbon_inverse)


def dual_map(f: Matrix) -> Matrix:
    """f^: N^ -> M^ for f: M -> N (the transpose in dual bases)."""
    return f.T


# Wedderburn decomposition and projective covers ------------------------------------------

class WedderburnError(RepError):
    pass


def trace_form_radical(h: HopfData) -> Subspace:
    """Radical of (x, y) -> tr L_{xy}, the Jacobson radical in characteristic 0."""
    d = h.dim
    traces = Matrix.from_entries(1, d, [trace(L) for L in h.left_basis], h.field_order)
    form = (traces @ h.mult).reshape(d, d)
    return form.kernel_basis()


def _factor_over_field(p: flint.fmpq_poly, order: int) -> list[list[Scalar]]:
    """Distinct monic irreducible factors over Q(zeta_order), coefficient lists low to high."""
    _, facs = p.factor()
    out = []
    for f, _ in facs:
        coeffs = [flint.fmpq(c) for c in f.coeffs()]
        if order == 1 or phi(order) == 1 or f.degree() == 1:
            lead = coeffs[-1]
            out.append([Scalar.rational(c / lead, order) for c in coeffs])
            continue
        out.extend(_factor_sympy(coeffs, order))
    return out


def _factor_sympy(coeffs: list, order: int) -> list[list[Scalar]]:
    import sympy as sp
    x = sp.Symbol("x")
    zeta = sp.exp(2 * sp.pi * sp.I / order)
    K = sp.QQ.algebraic_field(zeta)
    poly = sp.Poly([sp.Rational(int(c.p), int(c.q)) for c in reversed(coeffs)], x, domain=K)
    _, facs = poly.factor_list()
    mod = K.mod.to_list()  # minimal polynomial of the generator, high to low
    cyc = [int(c) for c in flint.fmpz_poly.cyclotomic(order).coeffs()][::-1]
    if [sp.Rational(c) for c in mod] != [sp.Rational(c) for c in cyc]:
        raise WedderburnError("unexpected generator for the cyclotomic field")
    out = []
    for f, _ in facs:
        f = f.monic()
        cs = []
        for anp in reversed(f.rep.to_list()):
            vec = [sp.Rational(v) for v in (anp.to_list() if hasattr(anp, "to_list") else [anp])][::-1]
            vec += [0] * (phi(order) - len(vec))
            cs.append(Scalar(order, [flint.fmpq(int(sp.numer(v)), int(sp.denom(v))) for v in vec]))
        out.append(cs)
    return out


def _poly_at(coeffs: list[Scalar], A: Matrix) -> Matrix:
    out = Matrix.zeros(A.rows, A.cols, A.order)
    I = Matrix.identity(A.rows, A.order)
    for c in reversed(coeffs):
        out = out @ A + I.scale(c)
    return out


def _fitting_split(M: ModuleRep, phi_: Matrix) -> tuple[list[Subspace], bool]:
    """Generalised eigenspace decomposition of an endomorphism over the base field.

    Returns the nonzero primary components and whether some component belongs
    to an irreducible factor of degree > 1 (an eigenvalue outside the field).
    """
    facs = _factor_over_field(phi_.charpoly_rational(), M.order)
    parts = []
    nonsplit = False
    for f in facs:
        p = _poly_at(f, phi_)
        power = p
        for _ in range(max(1, M.dim.bit_length())):
            power = power @ power
        ker = power.kernel_basis()
        if ker.dim:
            parts.append(ker)
            if len(f) > 2:
                nonsplit = True
    return parts, nonsplit


def _candidates(endos: list[Matrix]) -> list[Matrix]:
    out = list(endos)
    for i in range(len(endos)):
        for j in range(i + 1, len(endos)):
            out.append(endos[i] + endos[j].scale(j + 2))
    return out


def _split_module(M: ModuleRep, endos: list[Matrix], label: str) -> list[Subspace] | None:
    """Split M using one of the candidate endomorphisms; None if none splits."""
    nonsplit_seen = False
    for phi_ in _candidates(endos):
        parts, nonsplit = _fitting_split(M, phi_)
        if len(parts) > 1:
            return parts
        nonsplit_seen = nonsplit_seen or nonsplit
    if nonsplit_seen:
        raise WedderburnError(f"{label}: endomorphism algebra is not split over Q(zeta_{M.order})")
    return None


@dataclass
class Wedderburn:
    radical: Subspace
    quotient: ModuleRep
    projection: Matrix
    section: Matrix
    summands: list[Subspace]
    summand_class: list[int]
    simples: list[ModuleRep]


def semisimple_quotient(h: HopfData) -> tuple[Subspace, ModuleRep, Matrix, Matrix]:
    J = trace_form_radical(h)
    d = h.dim
    full = hstack([J.basis, h.identity])
    piv = full.pivot_columns()
    comp = [p - J.dim for p in piv if p >= J.dim]
    section = h.identity.select_columns(comp)
    basis = hstack([J.basis, section])
    proj = basis.inverse().select_rows(range(J.dim, d))

    def make(i):
        return proj @ h.left_basis[i] @ section
    return J, ModuleRep(h, d - J.dim, make, "H/J"), proj, section


def wedderburn(h: HopfData) -> Wedderburn:
    J, A, proj, section = semisimple_quotient(h)
    # right multiplications span End(A_reg); compressing them to a summand along
    # its complement spans the endomorphisms of the summand, so a summand is
    # simple exactly when the compressed maps are all scalar
    right = [proj @ h.right_basis[i] @ section for i in range(h.dim)]
    stack = [(Subspace(A.dim, A.identity), right)]
    done: list[Subspace] = []
    while stack:
        sub, endos = stack.pop(0)
        M = A.restrict(sub)
        span = Subspace.span(hstack([e.reshape(M.dim * M.dim, 1) for e in endos]))
        if span.dim == 1:
            done.append(sub)
            continue
        endos = [span.basis.column(j).reshape(M.dim, M.dim) for j in range(span.dim)]
        parts = _split_module(M, endos, f"block of dim {sub.dim}")
        if parts is None:
            raise WedderburnError(f"block of dim {sub.dim} could not be split (dim End = {span.dim})")
        inv = hstack([p.basis for p in parts]).inverse()
        start = 0
        for p in parts:
            pr = inv.select_rows(range(start, start + p.dim))
            start += p.dim
            stack.append((Subspace(A.dim, sub.basis @ p.basis), [pr @ e @ p.basis for e in endos]))
    # the block order from the splitting is deterministic; sort simples by dimension
    reps = [A.restrict(s) for s in done]
    classes: list[int] = []
    simples_idx: list[int] = []
    for k, M in enumerate(reps):
        for c, j in enumerate(simples_idx):
            if reps[j].dim == M.dim and hom_basis(reps[j], M).dim:
                classes.append(c)
                break
        else:
            classes.append(len(simples_idx))
            simples_idx.append(k)
    order = sorted(range(len(simples_idx)), key=lambda c: (reps[simples_idx[c]].dim, c))
    rank = {c: r for r, c in enumerate(order)}
    simples = []
    for r, c in enumerate(order):
        S = _pull_back(h, reps[simples_idx[c]], proj, f"S{r}")
        simples.append(S)
    return Wedderburn(J, A, proj, section, done, [rank[c] for c in classes], simples)


def _pull_back(h: HopfData, M: ModuleRep, proj: Matrix, name: str) -> ModuleRep:
    mats = [M.act(i) for i in range(h.dim)]
    return ModuleRep(h, M.dim, mats, name)


@dataclass
class PIM:
    module: ModuleRep
    idempotent: Matrix
    top: int


def lift_idempotent(h: HopfData, e: Matrix, max_iter: int | None = None) -> Matrix:
    """Newton iteration e <- 3e^2 - 2e^3 until e^2 = e."""
    limit = max_iter if max_iter is not None else h.dim
    for _ in range(limit + 1):
        e2 = h.mul(e, e)
        if e2 == e:
            return e
        e3 = h.mul(e2, e)
        e = e2.scale(3) - e3.scale(2)
    raise RepError(f"idempotent lifting did not converge within {limit} iterations")


def pims(h: HopfData, wd: Wedderburn | None = None) -> list[PIM]:
    wd = wd or wedderburn(h)
    A = wd.quotient
    basis = hstack([s.basis for s in wd.summands])
    one = wd.projection @ h.unit
    coeffs = basis.inverse() @ one
    out: dict[int, PIM] = {}
    start = 0
    for sub, cls in zip(wd.summands, wd.summand_class):
        part = coeffs.select_rows(range(start, start + sub.dim))
        start += sub.dim
        if cls in out:
            continue
        e_bar = sub.basis @ part
        e = lift_idempotent(h, wd.section @ e_bar)
        space = Subspace.span(h.rmul(e))
        P = regular(h).restrict(space, f"P{cls}")
        P = ModuleRep(h, P.dim, [P.act(i) for i in range(h.dim)], f"P{cls}")
        out[cls] = PIM(P, e, cls)
    return [out[c] for c in sorted(out)]


def cartan_matrix(h: HopfData, projectives: list[PIM] | None = None) -> list[list[int]]:
    ps = projectives or pims(h)
    return [[hom_basis(p.module, q.module).dim for q in ps] for p in ps]


def find_isomorphic(m: ModuleRep, candidates: Sequence[ModuleRep]) -> int:
    """Index of the candidate isomorphic to an indecomposable m (hom in both directions)."""
    for i, c in enumerate(candidates):
        if c.dim != m.dim:
            continue
        a, b = hom_basis(m, c), hom_basis(c, m)
        if a.dim == 0 or b.dim == 0:
            continue
        for f in a.maps():
            try:
                f.inverse()
                return i
            except LinalgError:
                continue
    raise RepError(f"no isomorphic module found for {m.name}")
