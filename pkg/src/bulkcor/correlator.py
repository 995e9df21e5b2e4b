"""The end, the cylinder idempotent, the bulk object and torus data.

Coordinates.  The ambient space of the end is H^ (x) F (x) H with the
regular module in both outer slots; a vector t has entries t[(b, f, h)]
at index b*(n*d) + f*d + h and is read as the linear map
T: H -> F (x) H, T(e_b) = sum t[(b, f, h)] e_f (x) e_h.  Dinaturality
against right multiplications forces T(x) = t0 . (1 (x) x) for a single
t0 in F (x) H, so the end has the "t0 coordinates" F (x) H, basis
e_f (x) b_a at index f*d + a.  All endomorphisms of the end (the cylinder
idempotent, the H-action) are stored in t0 coordinates, and the matrix
``EndSubspace.basis`` converts them to ambient vectors.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

from .frobenius import (FrobeniusError, FrobeniusObject, canonical_vn, is_special, special_constant,
                        trivial_frobenius)
from .hopf import HopfData, nonzeros
from .linalg import (LinalgError, Matrix, Subspace, apply_on_legs, hstack, idempotent_image, kron,
                     permute_legs, trace, vstack)
from .diagram import Diagram, apply, packaged
from .rep import (ModuleMap, ModuleRep, adjoint_module, braiding_inverse, coadjoint_module, dual, flip, hom_basis, invariants,
                  regular, tensor)
from .report import Report
from .scalar import Scalar


class CorrelatorError(ValueError):
    pass


def _unit(rows: int, cols: int, i: int, j: int, order: int) -> Matrix:
    flat = [0] * (rows * cols)
    flat[i * cols + j] = 1
    return Matrix.from_entries(rows, cols, flat, order)


def _delta_blocks(h: HopfData) -> list[Matrix]:
    """D_i with D_i[j, a] = coefficient of b_i (x) b_j in Delta(b_a)."""
    d = h.dim
    # comult rows are (i, j), columns a
    return [h.comult.select_rows(range(i * d, i * d + d)) for i in range(d)]


# the end ------------------------------------------------------------------------------

@dataclass(eq=False)
class EndSubspace:
    frobenius: FrobeniusObject
    basis: Matrix
    subspace: Subspace = field(repr=False)

    @property
    def hopf(self) -> HopfData:
        return self.frobenius.hopf

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def ambient_dims(self) -> list[int]:
        d, n = self.hopf.dim, self.frobenius.dim
        return [d, n, d]

    @cached_property
    def free_module(self) -> ModuleRep:
        """F (x) H_reg, the module that t0 lives in."""
        return tensor(self.frobenius.object, regular(self.hopf), f"{self.frobenius.name}(x)H")

    @cached_property
    def module(self) -> ModuleRep:
        """The end as an H-module in t0 coordinates: b . (f (x) a) = b2 f (x) b3 a S(b1)."""
        h, F = self.hopf, self.frobenius.object
        d = h.dim

        def make(i):
            out = Matrix.zeros(self.dim, self.dim, h.field_order)
            for k1, rest, c in nonzeros(_coproduct2(h, i)):
                k2, k3 = divmod(rest, d)
                sa = h.S(h.basis_vector(k1))
                right = h.left_basis[k3] @ h.rmul(sa)
                out = out + kron(F.act(k2), right).scale(c)
            return out
        return ModuleRep(h, self.dim, make, f"B0({self.frobenius.name})")

    def to_maps(self, vectors: Matrix) -> list[Matrix]:
        """Ambient vectors as matrices T of shape (n*d) x d."""
        d, n = self.hopf.dim, self.frobenius.dim
        return [vectors.column(k).reshape(d, n * d).T for k in range(vectors.cols)]


def _coproduct2(h: HopfData, i: int) -> Matrix:
    """(Delta (x) id) Delta(b_i) as a d x d^2 matrix (first leg rows)."""
    d = h.dim
    once = h.delta(h.basis_vector(i))
    out = Matrix.zeros(d * d * d, 1, h.field_order)
    for a, b, c in nonzeros(once):
        out = out + kron(h.delta(h.basis_vector(a)).reshape(d * d, 1), h.basis_vector(b)).scale(c)
    return out.reshape(d, d * d)


def end_basis_matrix(f: FrobeniusObject) -> Matrix:
    """Ambient vectors of the t0 basis: E[(b, f', h), f*d + a] = delta(f, f') (b_a b_b)_h."""
    h = f.hopf
    d, n = h.dim, f.dim
    # mu has rows h and columns (a, b); reorder to rows (b, h), columns a
    mu = permute_legs(h.mult.reshape(d * d * d, 1), [d, d, d], [2, 0, 1]).reshape(d * d, d)
    state = kron(Matrix.identity(n, h.field_order), mu)     # rows (f', b, h), cols (f, a)
    return permute_legs(state, [n, d, d], [1, 0, 2])


def end_object(f: FrobeniusObject) -> EndSubspace:
    """The end of X^ (x) F (x) X as the dinatural subspace of H^ (x) F (x) H."""
    E = end_basis_matrix(f)
    return EndSubspace(f, E, Subspace(E.rows, E, _free=None))


def dinaturality_defect(f: FrobeniusObject, c: Matrix, vectors: Matrix) -> Matrix:
    """((R_c)^ (x) id (x) id) t - (id (x) id (x) R_c) t for the right multiplication R_c."""
    h = f.hopf
    d, n = h.dim, f.dim
    rc = h.rmul(c)
    left = apply_on_legs(rc.T, vectors, [d, n, d], 0, 1)
    right = apply_on_legs(rc, vectors, [d, n, d], 2, 1)
    return left - right


def end_by_kernel(f: FrobeniusObject, maps: list[Matrix] | None = None) -> Subspace:
    """Brute-force dinatural subspace: kernel of the defects over the given endomorphisms of H_reg.

    Defaults to the right multiplications by algebra generators, which
    generate End(H_reg) as an algebra.
    """
    h = f.hopf
    d, n = h.dim, f.dim
    size = d * n * d
    basis = Matrix.identity(size, h.field_order)
    if maps is None:
        maps = [h.rmul(h.basis_vector(g)) for g in h.generators]
    for m in maps:
        left = apply_on_legs(m.T, basis, [d, n, d], 0, 1)
        right = apply_on_legs(m, basis, [d, n, d], 2, 1)
        k = (left - right).kernel_basis().basis
        basis = basis @ k
    return Subspace(size, basis)


def end_module_consistent(end: EndSubspace) -> bool:
    """The t0 action agrees with the tensor action of H^ (x) F (x) H on the ambient vectors."""
    h, F = end.hopf, end.frobenius.object
    d = h.dim
    Hd = dual(regular(h))
    E = end.basis
    for g in h.generators:
        acc = Matrix.zeros(E.rows, E.cols, h.field_order)
        for k1, rest, c in nonzeros(_coproduct2(h, g)):
            k2, k3 = divmod(rest, d)
            s = apply_on_legs(Hd.act(k1), E, end.ambient_dims, 0, 1)
            s = apply_on_legs(F.act(k2), s, end.ambient_dims, 1, 1)
            s = apply_on_legs(h.left_basis[k3], s, end.ambient_dims, 2, 1)
            acc = acc + s.scale(c)
        if acc != E @ end.module.act(g):
            return False
    return True


def end_component(end: EndSubspace, x: ModuleRep, vectors: Matrix) -> Matrix:
    """Components in X^ (x) F (x) X of end vectors given in t0 coordinates.

    The component at X of t0 = sum f (x) a is the map x -> sum f (x) a . x,
    with entries [(phi_j, f, x_k)] = sum_a t0[f, a] rho_X(b_a)[k, j].
    """
    h = end.hopf
    d, n, m = h.dim, end.frobenius.dim, x.dim
    # columns a of vec(rho(b_a)^T): entries (j, k)
    acts = hstack([x.act(a).T.reshape(m * m, 1) for a in range(d)])
    out = []
    for col in range(vectors.cols):
        t0 = vectors.column(col).reshape(n, d)
        block = (acts @ t0.T).reshape(m * m * n, 1)            # rows (j, k, f)
        out.append(permute_legs(block, [m, m, n], [0, 2, 1]))
    return hstack(out)


def _distinct(x: ModuleRep, y: ModuleRep) -> ModuleRep:
    if x is not y:
        return y
    return ModuleRep(y.hopf, y.dim, [y.act(i) for i in range(y.hopf.dim)], y.name + "'")


def dinaturality_by_diagram(end: EndSubspace, x: ModuleRep, y: ModuleRep, g: Matrix, vectors: Matrix) -> bool:
    """The two sides of the dinaturality relation for g: X -> Y, through the packaged diagrams."""
    y = _distinct(x, y)
    ctx = {"X": x, "Y": y, "F": end.frobenius, "f": ModuleMap(x, y, g)}
    left, right = packaged("b1.sd", ctx)
    return apply(left, end_component(end, y, vectors)) == apply(right, end_component(end, x, vectors))


def b2_defect(end: EndSubspace, vectors: Matrix) -> Matrix:
    """Left minus right side of the extra bulk relation on end vectors in t0 coordinates."""
    left, right = packaged("b2.sd", {"X": regular(end.hopf), "F": end.frobenius})
    state = cf_component_state(end) @ vectors
    return apply(left, state) - apply(right, end.basis @ vectors)


# the cylinder idempotent --------------------------------------------------------------------

def _mult3(f: FrobeniusObject) -> Matrix:
    return f.mult_n(3)


def cylinder_idempotent(f: FrobeniusObject, end: EndSubspace | None = None) -> Matrix:
    """C_F in t0 coordinates.

    The H-component of C_F t applies the three-fold product to
    psi^{-1}(e^g) (x) T_{F (x) H}(e_g (x) -), summed over a basis of F,
    where T_{F (x) H}(m) = sum f_i (x) a_i . m.  In t0 coordinates this is
    C(f (x) b_a) = sum mu3(c2 (x) f (x) b_(1) c1) (x) b_(2) over the
    copairing c1 (x) c2 and Delta(b_a) = b_(1) (x) b_(2).
    """
    h = f.hopf
    d, n = h.dim, f.dim
    order = h.field_order
    mu3 = _mult3(f)
    cmat = f.copairing.reshape(n, n)
    out = Matrix.zeros(n * d, n * d, order)
    blocks = _delta_blocks(h)
    for i in range(d):
        D = blocks[i]
        if D.is_zero():
            continue
        z = f.object.act(i) @ cmat                         # z[k, c2]
        v = z.T.reshape(n * n, 1)                          # index (c2, k)
        w = permute_legs(kron(v, Matrix.identity(n, order)), [n, n, n], [0, 2, 1])
        out = out + kron(mu3 @ w, D)
    return out


def cf_component_state(end: EndSubspace, columns: list[int] | None = None) -> Matrix:
    """The F (x) H component of end vectors, written in H^ (x) F^ (x) F (x) F (x) H.

    The component T_{F (x) H} in (F (x) H)^ (x) F (x) (F (x) H) has
    entries T(e_m)[f', w]; the dual of F (x) H is reordered to H^ (x) F^.
    """
    h = end.hopf
    d, n = h.dim, end.frobenius.dim
    FH = end.free_module
    cols = range(end.dim) if columns is None else columns
    states = []
    for col in cols:
        fi, a = divmod(col, d)
        rho = FH.act(a)                                    # (n d) x (n d), [w, m]
        # entries (m, f', w) = delta(f', fi) rho[w, m]
        block = rho.T.reshape(n * d * n * d, 1)
        e = _unit(n, 1, fi, 0, h.field_order)
        s = permute_legs(kron(e, block), [n, n * d, n * d], [1, 0, 2])
        s = permute_legs(s, [n, d, n, n * d], [1, 0, 2, 3])
        states.append(s)
    return hstack(states)


def cylinder_idempotent_by_diagram(f: FrobeniusObject, end: EndSubspace | None = None) -> Matrix:
    """C_F in t0 coordinates through the packaged component diagram, an independent route."""
    end = end or end_object(f)
    (dg,) = packaged("cf_component.sd", {"X": regular(f.hopf), "F": f})
    image = apply(dg, cf_component_state(end))
    try:
        return end.subspace.coordinates(image)
    except LinalgError as exc:
        raise CorrelatorError("the cylinder map leaves the end") from exc


# bulk ---------------------------------------------------------------------------------------

@dataclass(eq=False)
class BulkObject:
    end: EndSubspace
    idempotent: Matrix
    inclusion: Matrix
    projection: Matrix
    psi_end: Matrix
    self_duality: Matrix

    @property
    def dim(self) -> int:
        return self.inclusion.cols

    @cached_property
    def subspace(self) -> Subspace:
        return Subspace(self.end.basis.rows, self.end.basis @ self.inclusion)

    @cached_property
    def module(self) -> ModuleRep:
        sub = Subspace(self.end.dim, self.inclusion)
        return self.end.module.restrict(sub, f"B({self.end.frobenius.name})")


def left_cointegral(h: HopfData) -> Matrix:
    """A non-zero left cointegral lambda in H^ (row vector): (id (x) lambda) Delta = lambda 1."""
    d = h.dim
    rows = []
    for a in range(d):
        rows.append(h.delta(h.basis_vector(a)) - h.unit @ _unit(1, d, 0, a, h.field_order))
    k = vstack(rows).kernel_basis()
    if k.dim != 1:
        raise CorrelatorError(f"space of left cointegrals has dimension {k.dim}")
    return k.basis.T


def braid_iso(end: EndSubspace) -> Matrix:
    """B0 -> F (x) B0(I), f (x) a -> R2 f (x) a S(R1), induced by c_{X^, F} on the components."""
    h, F = end.hopf, end.frobenius.object
    out = Matrix.zeros(end.dim, end.dim, h.field_order)
    for r, s in h.r_summands:
        out = out + kron(F.rho(s), h.rmul(h.S(r)))
    return out


def end_self_duality(end: EndSubspace) -> Matrix:
    """psi0: B0 -> B0^ in t0 coordinates.

    B0 is identified with F (x) B0(I) by ``braid_iso``; B0(I) = H with
    b . a = b2 a S(b1) is self-dual through a -> lambda(a -), lambda a left
    cointegral, and the two self-dualities are combined through the inverse
    braiding of the duals, (F (x) E)^ = E^ (x) F^.
    """
    f = end.frobenius
    h = end.hopf
    d, n = h.dim, f.dim
    lam = left_cointegral(h)
    E = end_object(trivial_frobenius(h)).module
    rows = [[(lam @ h.mul(h.basis_vector(a), h.basis_vector(b))).entry(0, 0) for a in range(d)]
            for b in range(d)]
    psi_e = Matrix.from_rows(rows, h.field_order)
    inner = flip(d, n, h.field_order) @ braiding_inverse(dual(E), dual(f.object)) @ kron(f.psi, psi_e)
    phi_ = braid_iso(end)
    return phi_.T @ inner @ phi_


def bulk_object(f: FrobeniusObject, end: EndSubspace | None = None,
                idempotent: Matrix | None = None) -> BulkObject:
    end = end or end_object(f)
    C = idempotent if idempotent is not None else cylinder_idempotent(f, end)
    try:
        _, j, p = idempotent_image(C)
    except LinalgError:
        lam = special_constant(f)
        raise CorrelatorError(f"cylinder map is not idempotent (mult o comult = {lam} id)") from None
    psi0 = end_self_duality(end)
    psi = j.T @ psi0 @ j
    return BulkObject(end, C, j, p, psi0, psi)


def verify_bulk(b: BulkObject) -> Report:
    rep = Report()
    C, j, p = b.idempotent, b.inclusion, b.projection
    rep.add("j_p_is_idempotent", j @ p == C)
    rep.add("p_j_is_identity", p @ j == Matrix.identity(b.dim, C.order))
    rep.add("b2_on_bulk", C @ j == j)
    rep.add("idempotent_preserves_end", True)
    M = b.end.module
    rep.add("idempotent_intertwines", all(C @ M.act(g) == M.act(g) @ C for g in b.end.hopf.generators))
    psi0 = b.psi_end
    rep.add("psi_end_invariant", ModuleMap(M, dual(M), psi0).is_intertwiner())
    rep.add("psi_end_nondegenerate", psi0.rank() == psi0.rows)
    rep.add("psi_end_compatible", psi0 @ C == C.T @ psi0)
    rep.add("psi_relation", p.T @ b.self_duality == psi0 @ j)
    rep.add("psi_nondegenerate", b.self_duality.rank() == b.dim)
    return rep


# the end over free modules ---------------------------------------------------------------

def _free_actions(end: EndSubspace) -> list[Matrix]:
    FH = end.free_module
    return [FH.act(j) for j in range(end.hopf.dim)]


def free_module_map(end: EndSubspace, m: Matrix, actions: list[Matrix] | None = None) -> Matrix:
    """h_m: H_reg -> F (x) H_reg, x -> x . m, the module map with h_m(1) = m."""
    acts = actions if actions is not None else _free_actions(end)
    return hstack([a @ m for a in acts])


def free_module_relation(end: EndSubspace, m: Matrix, vectors: Matrix,
                         actions: list[Matrix] | None = None) -> Matrix:
    """Left minus right side of the relation for the free-module morphism h_m, on ambient vectors.

    Left: (mult (x) id)(id_F (x) h_m) T.  Right: comult on the F leg, then
    the first comult output is turned into F^ by the self-duality and
    combined with H^ into (F (x) H)^, which h_m^ sends back to H^.
    """
    f = end.frobenius
    h = end.hopf
    d, n = h.dim, f.dim
    hm = free_module_map(end, m, actions)
    left = apply_on_legs(hm, vectors, [d, n, d], 2, 1)
    left = apply_on_legs(f.mult, left, [d, n, n, d], 1, 2)
    k_m = hm.T @ flip(d, n, h.field_order) @ kron(Matrix.identity(d, h.field_order), f.psi)
    right = apply_on_legs(f.comult, vectors, [d, n, d], 1, 1)
    right = apply_on_legs(k_m, right, [d, n, n, d], 0, 2)
    return left - right


def free_module_internal_end(f: FrobeniusObject, end: EndSubspace | None = None,
                             every_morphism: bool = False) -> Subspace:
    """The subspace of H^ (x) F (x) H cut out by the free-module relation for all h: H -> F (x) H.

    The relations for h = unit (x) R_c are exactly the dinaturality
    relations, whose solution space is the end.  Every module map is some
    h_m, and on the end the relation for h_m o R_c = h_{c.m} is the relation
    for h_m followed by R_c^ on the first leg, so the relations for the free
    generators m = e_g (x) 1 of F (x) H imply all others.  With
    ``every_morphism`` the relations for a full basis of F (x) H are imposed.
    """
    end = end or end_object(f)
    h = f.hopf
    d, n = h.dim, f.dim
    acts = _free_actions(end)
    basis = end.basis
    one = h.unit
    ms = [kron(_unit(n, 1, g, 0, h.field_order), one) for g in range(n)]
    if every_morphism:
        ms += [_unit(n * d, 1, k, 0, h.field_order) for k in range(n * d)]
    for m in ms:
        if basis.cols == 0:
            break
        defect = free_module_relation(end, m, basis, acts)
        if defect.is_zero():
            continue
        basis = basis @ defect.kernel_basis().basis
    return Subspace(basis.rows, basis)


# bulk algebra ----------------------------------------------------------------------------

def _end_product_parts(end: EndSubspace) -> tuple[Matrix, Matrix]:
    h = end.hopf
    d = h.dim
    w = _pivot(h)
    # op[c, (a, b)] = (b_b w b_a)_c
    cols = []
    for a in range(d):
        wa = h.lmul(w) @ h.basis_vector(a)
        cols.append(h.rmul(wa))                    # b -> b w b_a, columns b
    op = hstack(cols)
    return end.frobenius.mult, op.T


def _pivot(h: HopfData) -> Matrix:
    return h.pivot if h.pivot is not None else h.unit


def end_product(end: EndSubspace, x: Matrix, y: Matrix) -> Matrix:
    """Product of the end: pair the inner X (x) X^ by the right evaluation and multiply in F.

    In t0 coordinates (f (x) a)(g (x) b) = fg (x) b w a for the pivot w.
    """
    n, d = end.frobenius.dim, end.hopf.dim
    mu, opT = _end_product_parts(end)
    X, Y = x.reshape(n, d), y.reshape(n, d)
    return (mu @ kron(X, Y) @ opT).reshape(n * d, 1)


def end_unit(end: EndSubspace) -> Matrix:
    h = end.hopf
    return kron(end.frobenius.unit, h.inv(_pivot(h)))


@dataclass(eq=False)
class BulkAlgebra:
    bulk: BulkObject
    table: list[list[Matrix]]
    unit: Matrix

    def product(self, x: Matrix, y: Matrix) -> Matrix:
        out = Matrix.zeros(self.bulk.dim, 1, x.order)
        for i, _, a in nonzeros(x):
            for k, _, b in nonzeros(y):
                out = out + self.table[i][k].scale(a * b)
        return out


def bulk_multiplication(b: BulkObject) -> BulkAlgebra:
    """The componentwise product on the end, restricted to the bulk through j and p."""
    end = b.end
    j, p = b.inclusion, b.projection
    cols = [j.column(k) for k in range(b.dim)]
    table = []
    for x in cols:
        row = []
        for y in cols:
            z = end_product(end, x, y)
            if b.idempotent @ z != z:
                raise CorrelatorError("the product of two bulk vectors left the bulk")
            row.append(p @ z)
        table.append(row)
    unit = end_unit(end)
    if b.idempotent @ unit != unit:
        raise CorrelatorError("the unit of the end is not in the bulk")
    return BulkAlgebra(b, table, p @ unit)


def verify_bulk_algebra(alg: BulkAlgebra, triples: list[tuple[int, int, int]] | None = None) -> Report:
    rep = Report()
    n = alg.bulk.dim
    order = alg.unit.order
    basis = [_unit(n, 1, i, 0, order) for i in range(n)]
    unital = all(alg.product(alg.unit, e) == e and alg.product(e, alg.unit) == e for e in basis)
    rep.add("bulk_unit", unital)
    if triples is None:
        triples = [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]
    assoc = True
    for a, b, c in triples:
        if alg.product(alg.table[a][b], basis[c]) != alg.product(basis[a], alg.table[b][c]):
            assoc = False
            break
    rep.add("bulk_associative", assoc)
    M = alg.bulk.module
    # the product is a module map B (x) B -> B
    prod = hstack([alg.table[a][b] for a in range(n) for b in range(n)])
    rep.add("bulk_product_intertwines", ModuleMap(tensor(M, M), M, prod).is_intertwiner())
    return rep


def invariant_subalgebra(alg: BulkAlgebra) -> tuple[Subspace, Report]:
    """hom(I, bulk) with the restricted product: closed, commutative, semisimple."""
    inv = invariants(alg.bulk.module)
    rep = Report()
    vecs = [inv.basis.column(k) for k in range(inv.dim)]
    closed = True
    commutative = True
    for x in vecs:
        for y in vecs:
            xy = alg.product(x, y)
            if not inv.contains(xy):
                closed = False
            if xy != alg.product(y, x):
                commutative = False
    rep.add("invariants_closed", closed)
    rep.add("invariants_commutative", commutative)
    if closed and inv.dim:
        # trace form of the regular representation of the invariant subalgebra
        mats = [inv.coordinates(hstack([alg.product(x, y) for y in vecs])) for x in vecs]
        form = Matrix.from_rows([[trace(a @ b) for b in mats] for a in mats], inv.order)
        rep.info("invariants_trace_form_rank", form.rank())
    return inv, rep


# degree-zero Hochschild comparison --------------------------------------------------------

def free_module_endomorphisms(end: EndSubspace) -> list[Matrix]:
    """G_m = (mult (x) id)(id_F (x) h_m) for m over the basis of F (x) H, as maps of F (x) H."""
    f = end.frobenius
    h = end.hopf
    d, n = h.dim, f.dim
    acts = _free_actions(end)
    out = []
    for k in range(n * d):
        hm = free_module_map(end, _unit(n * d, 1, k, 0, h.field_order), acts)
        # (f (x) x) -> mult(f (x) h_m(x)_F) (x) h_m(x)_H
        out.append(kron(f.mult, Matrix.identity(d, h.field_order)) @ kron(f.id, hm))
    return out


def center_dimension(gs: list[Matrix]) -> int:
    """dim of the center of the algebra spanned by G_m with G_a G_b = G_{G_a(b)}."""
    size = len(gs)
    if size == 0:
        return 0
    order = gs[0].order
    basis = Matrix.identity(size, order)
    for k in range(size):
        # c -> G_c(e_k) - G_{e_k}(c)
        left = hstack([g.column(k) for g in gs])
        cons = (left - gs[k]) @ basis
        if cons.is_zero():
            continue
        basis = basis @ cons.kernel_basis().basis
        if basis.cols == 0:
            break
    return basis.cols


def hh0_check(f: FrobeniusObject, bulk: BulkObject | None = None) -> Report:
    rep = Report()
    bulk = bulk or bulk_object(f)
    a = invariants(bulk.module).dim
    b = center_dimension(free_module_endomorphisms(bulk.end))
    rep.info("dim_bulk_invariants", a)
    rep.info("dim_center_free_module_endomorphisms", b)
    rep.info("hh0_dimensions_agree", "yes" if a == b else "no")
    return rep


# torus ------------------------------------------------------------------------------

def torus_block_space(h: HopfData) -> Subspace:
    """V = hom(I, H^_coadj): the invariant linear forms, in the dual basis of H."""
    return invariants(coadjoint_module(h))


def _action_columns(q: ModuleRep) -> Matrix:
    """Columns vec(rho(b_i)^T), so that row(vec(A)) @ columns gives tr(A rho(b_i))."""
    n = q.dim
    return hstack([q.act(i).T.reshape(n * n, 1) for i in range(q.hopf.dim)])


def proj_class(q: ModuleRep, f: Matrix, columns: Matrix | None = None) -> Matrix:
    """[f](b) = tr(rho(w) f rho(b)) as a column vector in the dual basis of H."""
    n = q.dim
    wf = q.rho(_pivot(q.hopf)) @ f
    cols = columns if columns is not None else _action_columns(q)
    return (wf.reshape(1, n * n) @ cols).T


def class_dinaturality(q: ModuleRep, r: ModuleRep, g: Matrix, f: Matrix) -> bool:
    """[g f] = [f g] for g: q -> r and f: r -> q."""
    return proj_class(q, f @ g) == proj_class(r, g @ f)


def _z_context(f: FrobeniusObject, q: ModuleRep, q_end: Matrix) -> dict:
    return {"F": f, "Q": q, "f": ModuleMap(q, q, q_end)}


def z_f_endomorphism(f: FrobeniusObject, q: ModuleRep, q_end: Matrix) -> Matrix:
    """The endomorphism z_f of F (x) Q: the F loop braided around Q and closed by the vertices."""
    if not ModuleMap(q, q, q_end).is_intertwiner():
        raise CorrelatorError("the endomorphism of Q is not an intertwiner")
    (dg,) = packaged("zf.sd", _z_context(f, q, q_end))
    return apply(dg, Matrix.identity(f.dim * q.dim, f.order))


def _sphere(f: FrobeniusObject, p: ModuleRep, q: ModuleRep) -> Diagram:
    (dg,) = packaged("sphere_closure.sd", {"P": p, "F": f, "Q": q})
    return dg


@dataclass(eq=False)
class PhiIdempotent:
    blocks: Subspace                  # hom(I, P (x) F (x) Q) inside P (x) F (x) Q
    matrix: Matrix                    # the closure map in the coordinates of ``blocks``

    @property
    def trace(self) -> Scalar:
        return trace(self.matrix)

    def is_idempotent(self) -> bool:
        return self.matrix @ self.matrix == self.matrix


def phi_idempotent(f: FrobeniusObject, p: ModuleRep, q: ModuleRep) -> PhiIdempotent:
    """Postcomposition with the sphere closure on hom(I, P (x) F (x) Q)."""
    blocks = invariants(tensor(tensor(p, f.object), q))
    if blocks.dim == 0:
        return PhiIdempotent(blocks, Matrix.zeros(0, 0, f.order))
    image = apply(_sphere(f, p, q), blocks.basis)
    try:
        coords = blocks.coordinates(image)
    except LinalgError as exc:
        raise CorrelatorError("the sphere closure leaves the invariants") from exc
    return PhiIdempotent(blocks, coords)


def _as_natural(s: Scalar) -> int | None:
    if not s.is_rational():
        return None
    x = s.to_fraction()
    if x.denominator != 1 or x < 0:
        return None
    return int(x)


@dataclass
class Coefficient:
    value: int
    bound: int
    idempotent: bool


def partition_coefficient(f: FrobeniusObject, p: ModuleRep, q: ModuleRep) -> Coefficient:
    """Z_{P,Q} as the trace of the sphere-closure idempotent, with its bound dim hom(P^, F (x) Q)."""
    phi = phi_idempotent(f, p, q)
    tr = phi.trace if phi.blocks.dim else Scalar.rational(0, f.order)
    value = _as_natural(tr)
    if value is None:
        raise CorrelatorError(f"Z[{p.name},{q.name}] = {tr} is not a non-negative integer")
    bound = hom_basis(dual(p), tensor(f.object, q)).dim
    return Coefficient(value, bound, phi.is_idempotent())


@dataclass
class PartitionTable:
    names: list[str]
    matrix: list[list[int]]
    report: Report


def partition_table(f: FrobeniusObject, projectives: list[ModuleRep], threads: int = 1) -> PartitionTable:
    """All Z_{P,Q}; the grid runs on a thread pool and is assembled in index order."""
    pairs = [(i, k) for i in range(len(projectives)) for k in range(len(projectives))]

    def job(ik):
        i, k = ik
        return partition_coefficient(f, projectives[i], projectives[k])

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(job, pairs))
    else:
        results = [job(ik) for ik in pairs]
    size = len(projectives)
    matrix = [[0] * size for _ in range(size)]
    rep = Report()
    for (i, k), c in zip(pairs, results):
        matrix[i][k] = c.value
        tag = f"{projectives[i].name},{projectives[k].name}"
        rep.add(f"phi_idempotent[{tag}]", c.idempotent)
        rep.add(f"coefficient_bound[{tag}]", c.value <= c.bound, f"{c.value} > {c.bound}")
    return PartitionTable([p.name for p in projectives], matrix, rep)


# class functions --------------------------------------------------------------------

def coend_map(x: ModuleRep) -> Matrix:
    """The structure map X^ (x) X -> H^_coadj, phi (x) x -> (b -> phi(S^{-1}(b) x)), as a d x n^2 matrix."""
    h = x.hopf
    n = x.dim
    si = h.antipode_inverse
    return vstack([x.rho(si.column(a)).reshape(1, n * n) for a in range(h.dim)])


def _paired_actions(f: FrobeniusObject, elements: Matrix) -> Matrix:
    """Columns vec(B rho(e_a)) with B[i, k] = beta(e_i, e_k), one per column of ``elements``."""
    n = f.dim
    B = f.pairing.reshape(n, n)
    F = f.object
    return hstack([(B @ F.rho(elements.column(a))).reshape(n * n, 1) for a in range(elements.cols)])


def elliptic_class_function(f: FrobeniusObject) -> Matrix:
    """zeta[a, b] = zeta(b_a (x) b_b) = sum_R <v1, S(b_b) R1 . v3> <v2, R2 S(b_a) . v4>."""
    h = f.hopf
    n = f.dim
    v = canonical_vn(f, 4)
    # (i, k) x (j, l) arrangement of v_4 so that both pairings become one bilinear form
    vp = permute_legs(v, [n] * 4, [0, 2, 1, 3]).reshape(n * n, n * n)
    sb = h.antipode
    out = Matrix.zeros(h.dim, h.dim, h.field_order)
    for r, s in h.r_summands:
        first = _paired_actions(f, h.rmul(r) @ sb)      # S(b_b) R1, indexed by b
        second = _paired_actions(f, h.lmul(s) @ sb)     # R2 S(b_a), indexed by a
        out = out + (first.T @ vp @ second).T
    return out


def elliptic_invariant_element(f: FrobeniusObject) -> Matrix:
    """The element of (F^ (x) F)^{(x)2} given by the packaged diagram, as a column vector."""
    (dg,) = packaged("elliptic_invariant.sd", {"F": f})
    return apply(dg, Matrix.identity(1, f.order))


def elliptic_oracle(f: FrobeniusObject) -> Matrix:
    """zeta through the diagram and the coend structure maps.

    The pairing of H^ (x) H^ with H_adj (x) H_adj is the nested one, so the
    slot order is reversed: zeta(b_a (x) b_b) = Xi[b, a].
    """
    n = f.dim
    io = coend_map(f.object)
    xi = io @ elliptic_invariant_element(f).reshape(n * n, n * n) @ io.T
    return xi.T


def is_adjoint_invariant(h: HopfData, form: Matrix, slots: int) -> bool:
    """A multilinear form on H_adj^{(x) slots}, given as a row of length d^slots, is a module map to I."""
    a = adjoint_module(h)
    m = a
    for _ in range(slots - 1):
        m = tensor(m, a)
    for g in h.generators:
        e = h.eps(h.basis_vector(g))
        if not (form @ m.act(g) - form.scale(e)).is_zero():
            return False
    return True


def verify_elliptic(f: FrobeniusObject, zeta: Matrix | None = None) -> Report:
    rep = Report()
    h = f.hopf
    zeta = zeta if zeta is not None else elliptic_class_function(f)
    rep.add("elliptic_matches_diagram", zeta == elliptic_oracle(f))
    rep.add("elliptic_adjoint_invariant", is_adjoint_invariant(h, zeta.reshape(1, h.dim * h.dim), 2))
    return rep


def genus_zero_class_function(f: FrobeniusObject, r: int) -> Matrix:
    """zeta_{0,r}(h_1 .. h_{r-1}) = prod_k <v_{2k-1}, S^{-1}(h_{r-k}) . v_{2k}> with v = v_{2(r-1)}.

    Each consecutive pair of legs of v is closed with the self-duality and
    the coend structure map; the slot order is reversed as for the nested
    pairing.  Returned as a row of length d^{r-1}, slot 1 slowest.
    """
    if not 2 <= r <= 5:
        raise CorrelatorError("genus zero class functions are provided for 2 <= r <= 5")
    h = f.hopf
    n, k = f.dim, r - 1
    paired = _paired_actions(f, h.antipode_inverse)        # columns vec(B rho(S^{-1} b_a))
    state = canonical_vn(f, 2 * k).T                        # row over F^{(x) 2k}
    # contract pair j (legs 2j, 2j+1) with slot k-1-j; build the form slot by slot
    form = state
    for j in range(k):
        rest = n ** (2 * (k - j - 1))
        done = h.dim ** j
        # form is (done) x (n^2) x (rest), contract the middle with paired
        form = form.reshape(done, n * n * rest)
        blocks = []
        for row in range(done):
            piece = form.select_rows([row]).reshape(n * n, rest)
            blocks.append((paired.T @ piece).reshape(1, h.dim * rest))
        form = vstack(blocks).reshape(1, done * h.dim * rest)
    # pair j carries slot k-1-j: reverse the slot order
    return permute_legs(form.T, [h.dim] * k, list(range(k - 1, -1, -1))).T


# torus transformations and modular invariance ------------------------------------------

def t_operator(h: HopfData) -> Matrix:
    """T: phi -> phi(v^{-1} -), with the twist convention theta = rho(v^{-1})."""
    return h.lmul(h.ribbon_inverse).T


def s_operator(h: HopfData) -> Matrix:
    """S: phi -> lambda(D(phi) -) with D(phi) = (phi (x) id)(R R21) and lambda a left cointegral."""
    lam = left_cointegral(h)
    drinfeld = h.t2_mul(h.r_matrix, h.r21).T
    return vstack([lam @ h.rmul(h.basis_vector(i)) @ drinfeld for i in range(h.dim)])


def proportionality(a: Matrix, b: Matrix) -> Scalar | None:
    """The scalar c with a = c b, or None (b must be non-zero)."""
    for i, j, x in nonzeros(b):
        c = a.entry(i, j) / x
        return c if a == b.scale(c) else None
    return None


@dataclass(eq=False)
class TorusOperators:
    space: Subspace          # V inside H^
    s: Matrix                # S_op in coordinates of ``space``
    t: Matrix                # T_op in coordinates of ``space``
    st_cubed_ratio: Scalar   # (S T)^3 = ratio * S^2
    s_fourth_ratio: Scalar   # S^4 = ratio * id


def _restrict_to(space: Subspace, op: Matrix, label: str) -> Matrix:
    image = op @ space.basis
    if not space.contains(image):
        raise CorrelatorError(f"{label} does not preserve the invariant forms")
    return space.coordinates(image)


def st_operators(h: HopfData, space: Subspace | None = None) -> TorusOperators:
    space = space or torus_block_space(h)
    s = _restrict_to(space, s_operator(h), "S_op")
    t = _restrict_to(space, t_operator(h), "T_op")
    for m, label in ((s, "S_op"), (t, "T_op")):
        if m.rank() != space.dim:
            raise CorrelatorError(f"{label} is not invertible on the invariant forms")
    s2 = s @ s
    st = s @ t
    r1 = proportionality(st @ st @ st, s2)
    r2 = proportionality(s2 @ s2, Matrix.identity(space.dim, h.field_order))
    if r1 is None or r1.is_zero():
        raise CorrelatorError("(S T)^3 is not a non-zero multiple of S^2")
    if r2 is None or r2.is_zero():
        raise CorrelatorError("S^4 is not a non-zero multiple of the identity")
    return TorusOperators(space, s, t, r1, r2)


@dataclass(eq=False)
class ClassAction:
    """Z^F on the span of the projective classes, in coordinates of V."""
    space: Subspace          # V
    classes: Matrix          # columns [f] over a basis of End(Q), all PIMs Q
    images: Matrix           # columns [z_f]
    span: Subspace           # V_proj, inside V coordinates
    well_defined: bool

    def apply(self, x: Matrix) -> Matrix:
        """Z^F on columns of x lying in V_proj."""
        piv = self.classes.pivot_columns()
        basis = self.classes.select_columns(piv)
        coeffs = Subspace(self.space.dim, basis).coordinates(x)
        return self.images.select_columns(piv) @ coeffs

    @property
    def full(self) -> bool:
        return self.span.dim == self.space.dim


def class_action(f: FrobeniusObject, projectives: list[ModuleRep], space: Subspace | None = None) -> ClassAction:
    h = f.hopf
    space = space or torus_block_space(h)
    a_cols, b_cols = [], []
    for q in projectives:
        fq = tensor(f.object, q)
        cq, cfq = _action_columns(q), _action_columns(fq)
        for e in hom_basis(q, q).maps():
            a_cols.append(proj_class(q, e, cq))
            b_cols.append(proj_class(fq, z_f_endomorphism(f, q, e), cfq))
    A, B = hstack(a_cols), hstack(b_cols)
    if not (space.contains(A) and space.contains(B)):
        raise CorrelatorError("a projective class is not an invariant form")
    A, B = space.coordinates(A), space.coordinates(B)
    kernel = A.kernel_basis().basis
    well_defined = kernel.cols == 0 or (B @ kernel).is_zero()
    return ClassAction(space, A, B, Subspace.span(A), well_defined)


NOT_CHECKABLE = "not checkable"


def modular_invariance_check(f: FrobeniusObject, projectives: list[ModuleRep],
                             operators: TorusOperators | None = None) -> Report:
    """[Z^F, T_op] on V_proj everywhere; [Z^F, S_op] on V when V_proj = V; S/T relations."""
    h = f.hopf
    rep = Report()
    space = operators.space if operators is not None else torus_block_space(h)
    z = class_action(f, projectives, space)
    rep.add("class_action_well_defined", z.well_defined)
    rep.info("dim_invariant_forms", space.dim)
    rep.info("dim_projective_classes", z.span.dim)
    t = operators.t if operators is not None else _restrict_to(space, t_operator(h), "T_op")
    basis = z.span.basis
    tb = t @ basis
    rep.add("t_preserves_projective_classes", z.span.contains(tb))
    if z.well_defined and z.span.contains(tb):
        rep.add("commutator_z_t", z.apply(tb) == t @ z.apply(basis))
    if operators is None:
        try:
            operators = st_operators(h, space)
        except CorrelatorError as exc:
            rep.info("st_relations", f"{NOT_CHECKABLE}: {exc}")
    if operators is not None:
        rep.info("st_cubed_ratio", str(operators.st_cubed_ratio))
        rep.info("s_fourth_ratio", str(operators.s_fourth_ratio))
        if z.full and z.well_defined:
            zm = z.apply(Matrix.identity(space.dim, h.field_order))
            rep.add("commutator_z_s", zm @ operators.s == operators.s @ zm)
        else:
            rep.info("commutator_z_s", NOT_CHECKABLE)
    return rep
