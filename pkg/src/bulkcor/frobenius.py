"""Frobenius algebra objects in H-mod and their verification suite.

A FrobeniusObject stores the five structure maps as plain matrices between
tensor powers of the underlying module (Kronecker convention of linalg).
The pairing is beta = counit o mult, the copairing is comult o unit, and the
self-duality psi: F -> F^ sends g to beta(g, -).  Symmetry is taken relative
to the pivotal structure: F -> F^^ is x -> rho(omega) x, so the symmetry
condition psi = psi^ o (pivotal iso) reads beta(x, y) = beta(y, omega . x).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .linalg import LinalgError, Matrix, apply_on_legs, kron, kron_all
from .report import Report
from .rep import (ModuleMap, ModuleRep, RepError, coev_left, coev_right, dual, ev_left, ev_right,
                  tensor, trivial)
from .scalar import Scalar


class FrobeniusError(ValueError):
    pass


@dataclass(eq=False)
class FrobeniusObject:
    object: ModuleRep
    mult: Matrix
    unit: Matrix
    comult: Matrix
    counit: Matrix
    name: str = "F"

    def __post_init__(self):
        n = self.object.dim
        shapes = {"mult": (self.mult, (n, n * n)), "unit": (self.unit, (n, 1)),
                  "comult": (self.comult, (n * n, n)), "counit": (self.counit, (1, n))}
        for key, (m, shape) in shapes.items():
            if m.shape != shape:
                raise FrobeniusError(f"{key} has shape {m.shape}, expected {shape}")
            if m.order != self.order:
                setattr(self, key, m.embed(self.order))

    @property
    def hopf(self):
        return self.object.hopf

    @property
    def order(self) -> int:
        return self.object.order

    @property
    def dim(self) -> int:
        return self.object.dim

    @cached_property
    def id(self) -> Matrix:
        return self.object.identity

    @cached_property
    def square(self) -> ModuleRep:
        return tensor(self.object, self.object)

    @cached_property
    def pairing(self) -> Matrix:
        """beta = counit o mult, a 1 x n^2 row."""
        return self.counit @ self.mult

    @cached_property
    def copairing(self) -> Matrix:
        """comult o unit, an n^2 x 1 column."""
        return self.comult @ self.unit

    @cached_property
    def psi(self) -> Matrix:
        """F -> F^, g -> beta(g, -)."""
        n = self.dim
        return self.pairing.reshape(n, n).T

    def mult_n(self, k: int) -> Matrix:
        """Left-associated k-fold product F^{(x)k} -> F (k >= 1)."""
        out = self.id
        for j in range(2, k + 1):
            out = self.mult @ kron(out, self.id)
        return out

    def comult_n(self, k: int) -> Matrix:
        """Left-associated k-fold coproduct F -> F^{(x)k} (k >= 1)."""
        out = self.id
        for j in range(2, k + 1):
            out = kron(self.comult, Matrix.identity(self.dim ** (j - 2), self.order)) @ out
        return out


def trivial_frobenius(h) -> FrobeniusObject:
    I = trivial(h)
    one = Matrix.identity(1, h.field_order)
    return FrobeniusObject(I, one, one, one, one, "I")


# verification ---------------------------------------------------------------------

def _maps_ok(f: FrobeniusObject) -> list[tuple[str, bool]]:
    F, FF, I = f.object, f.square, trivial(f.hopf)
    return [
        ("mult_intertwiner", ModuleMap(FF, F, f.mult).is_intertwiner()),
        ("unit_intertwiner", ModuleMap(I, F, f.unit).is_intertwiner()),
        ("comult_intertwiner", ModuleMap(F, FF, f.comult).is_intertwiner()),
        ("counit_intertwiner", ModuleMap(F, I, f.counit).is_intertwiner()),
    ]


def verify_frobenius(f: FrobeniusObject) -> Report:
    rep = Report()
    for key, ok in _maps_ok(f):
        rep.add(key, ok)
    i1 = f.id
    m, d = f.mult, f.comult
    rep.add("associative", m @ kron(m, i1) == m @ kron(i1, m))
    rep.add("unital", m @ kron(f.unit, i1) == i1 and m @ kron(i1, f.unit) == i1)
    rep.add("coassociative", kron(d, i1) @ d == kron(i1, d) @ d)
    rep.add("counital", kron(f.counit, i1) @ d == i1 and kron(i1, f.counit) @ d == i1)
    dm = d @ m
    rep.add("frobenius_left", kron(m, i1) @ kron(i1, d) == dm)
    rep.add("frobenius_right", kron(i1, m) @ kron(d, i1) == dm)
    beta = f.pairing
    rep.add("pairing_invariant", beta @ kron(m, i1) == beta @ kron(i1, m))
    rank = f.psi.rank()
    rep.add("nondegenerate", rank == f.dim, None if rank == f.dim else f"rank psi = {rank}")
    rep.add("symmetric", is_symmetric(f))
    return rep


def is_symmetric(f: FrobeniusObject) -> bool:
    """beta(x, y) = beta(y, omega . x), i.e. psi = psi^ o (F -> F^^)."""
    w = f.object.rho(f.hopf.pivot) if f.hopf.pivot is not None else f.id
    return f.psi == f.psi.T @ w


def special_constant(f: FrobeniusObject) -> Scalar | None:
    """lambda with mult o comult = lambda id, or None if it is not scalar."""
    md = f.mult @ f.comult
    lam = md.entry(0, 0) if f.dim else Scalar.rational(1, f.order)
    return lam if md == f.id.scale(lam) else None


def verify_special(f: FrobeniusObject) -> Report:
    rep = Report()
    eu = (f.counit @ f.unit).entry(0, 0)
    rep.add("counit_unit_nonzero", not eu.is_zero(), str(eu))
    lam = special_constant(f)
    one = Scalar.rational(1, f.order)
    if lam is None:
        rep.add("mult_comult_identity", False, "mult o comult is not a scalar multiple of id")
    else:
        rep.add("mult_comult_identity", lam == one, f"mult o comult = {lam} id")
    return rep


def is_special(f: FrobeniusObject) -> bool:
    return verify_special(f).ok


def handle_element(f: FrobeniusObject) -> tuple[Matrix, bool]:
    """h = mult o comult o unit and whether it equals the unit."""
    h = f.mult @ f.comult @ f.unit
    return h, h == f.unit


def canonical_vn(f: FrobeniusObject, n: int) -> Matrix:
    """The canonical vector v_n: I -> F^{(x)n}."""
    if n < 0:
        raise FrobeniusError("arity must be non-negative")
    if n == 0:
        return Matrix.identity(1, f.order)
    v = f.unit
    if n == 1:
        return v
    v = f.copairing
    for k in range(3, n + 1):
        v = apply_on_legs(f.comult, v, [f.dim] * (k - 1), 0, 1)
    return v


def canonical_vn_at(f: FrobeniusObject, n: int, slots: list[int]) -> Matrix:
    """v_n built with the k-th extra comultiplication applied on leg slots[k]."""
    if n < 2:
        return canonical_vn(f, n)
    v = f.copairing
    for k, s in zip(range(3, n + 1), slots):
        v = apply_on_legs(f.comult, v, [f.dim] * (k - 1), s, 1)
    return v


def partial_trace_identity(f: FrobeniusObject, n: int) -> bool:
    """(id_{F^n} (x) (beta o comult)) o v_{n+1} = v_n."""
    bd = f.pairing @ f.comult
    lhs = apply_on_legs(bd, canonical_vn(f, n + 1), [f.dim] * (n + 1), n, 1)
    return lhs == canonical_vn(f, n)


def normalize_special(f: FrobeniusObject) -> FrobeniusObject:
    """Rescale comult by 1/lambda and counit by lambda when mult o comult = lambda id."""
    lam = special_constant(f)
    if lam is None:
        raise FrobeniusError("mult o comult is not a scalar multiple of the identity")
    if lam.is_zero():
        raise FrobeniusError("mult o comult vanishes; no special normalization exists")
    return FrobeniusObject(f.object, f.mult, f.unit, f.comult.scale(lam.inverse()),
                           f.counit.scale(lam), f.name)


def internal_end_frobenius(x: ModuleRep, normalized: bool = True, name: str | None = None) -> FrobeniusObject:
    """X (x) X^ with mult = id (x) ev (x) id, unit = coev and the right duality for the coalgebra.

    Unnormalized: comult = id (x) coev~ (x) id and counit = ev~, so that
    mult o comult = d id with d = ev o coev~ = tr rho(omega^{-1}).  Normalized
    divides the comult by d and multiplies the counit by d.
    """
    n = x.dim
    F = tensor(x, dual(x), name or f"{x.name}(x){x.name}^")
    ix = Matrix.identity(n, x.order)
    mult = kron_all([ix, ev_left(x), ix])
    unit = coev_left(x)
    comult = kron_all([ix, coev_right(x), ix])
    counit = ev_right(x)
    f = FrobeniusObject(F, mult, unit, comult, counit, F.name)
    if not normalized:
        return f
    d = (ev_left(x) @ coev_right(x)).entry(0, 0)
    if d.is_zero():
        raise FrobeniusError(f"quantum dimension of {x.name} is zero; X (x) X^ has no special structure")
    return normalize_special(f)
