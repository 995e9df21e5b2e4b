from functools import lru_cache

import pytest
from conftest import FROBENIUS, UNNORMALIZED, frob, hopf, projectives, wd
from hypothesis import given, settings
from hypothesis import strategies as st

from bulkcor.correlator import (NOT_CHECKABLE, CorrelatorError, b2_defect, bulk_multiplication, bulk_object,
                                class_action, class_dinaturality, cylinder_idempotent,
                                cylinder_idempotent_by_diagram, dinaturality_by_diagram,
                                elliptic_class_function, elliptic_oracle, end_by_kernel,
                                end_module_consistent, end_object, free_module_internal_end,
                                genus_zero_class_function, hh0_check, invariant_subalgebra,
                                is_adjoint_invariant, modular_invariance_check, partition_coefficient,
                                partition_table, phi_idempotent, st_operators, torus_block_space,
                                verify_bulk, verify_bulk_algebra, verify_elliptic)
from bulkcor.frobenius import special_constant
from bulkcor.linalg import Matrix
from bulkcor.rep import direct_sum, dual, hom_basis, quantum_dimension, regular

CHEAP = [("d_z2", f) for f in FROBENIUS["d_z2"]] + [("d_sweedler", f) for f in FROBENIUS["d_sweedler"]]


@lru_cache(maxsize=None)
def end(hopf_name, name):
    return end_object(frob(hopf_name, name))


@lru_cache(maxsize=None)
def bulk(hopf_name, name):
    return bulk_object(frob(hopf_name, name), end(hopf_name, name))


def pim_modules(name):
    return [p.module for p in projectives(name)]


# the end --------------------------------------------------------------------------------

@pytest.mark.parametrize("hopf_name,name", CHEAP)
def test_end_equals_brute_force_dinatural_subspace(hopf_name, name):
    e = end(hopf_name, name)
    assert e.dim == e.frobenius.dim * e.hopf.dim
    assert end_by_kernel(e.frobenius).equals(e.subspace)


@pytest.mark.parametrize("hopf_name,name", CHEAP)
def test_end_action_agrees_with_ambient_tensor_action(hopf_name, name):
    e = end(hopf_name, name)
    assert e.module.verify()
    assert end_module_consistent(e)


@pytest.mark.parametrize("hopf_name,name", [("d_z2", "d_z2_end_s1x2"), ("d_sweedler", "d_sweedler_end_s1x2")])
def test_end_components_are_dinatural_through_the_diagram(hopf_name, name):
    e = end(hopf_name, name)
    reg = regular(hopf(hopf_name))
    vectors = Matrix.identity(e.dim, e.basis.order)
    for x in wd(hopf_name).simples:
        for g in hom_basis(x, reg).maps():
            assert dinaturality_by_diagram(e, x, reg, g, vectors)


def test_extra_bulk_relation_holds_on_bulk_but_not_on_end():
    b = bulk("d_z2", "d_z2_end_s1x2")
    assert b2_defect(b.end, b.inclusion).is_zero()
    assert b.dim < b.end.dim
    assert not b2_defect(b.end, Matrix.identity(b.end.dim)).is_zero()


# the cylinder idempotent ------------------------------------------------------------------

@pytest.mark.parametrize("hopf_name,name", CHEAP)
def test_cylinder_idempotent_agrees_with_diagram(hopf_name, name):
    f = frob(hopf_name, name)
    c = cylinder_idempotent(f, end(hopf_name, name))
    assert c == cylinder_idempotent_by_diagram(f, end(hopf_name, name))
    assert c @ c == c


def test_unnormalized_cylinder_map_squares_to_quantum_dimension_multiple():
    f = frob(*UNNORMALIZED)
    c = cylinder_idempotent(f)
    lam = quantum_dimension(direct_sum([wd("d_z2").simples[1]] * 2))
    assert lam == special_constant(f)
    assert lam != 1
    assert c @ c == c.scale(lam)
    assert c @ c != c
    assert c == cylinder_idempotent_by_diagram(f)
    with pytest.raises(CorrelatorError):
        bulk_object(f)


# bulk ---------------------------------------------------------------------------------

@pytest.mark.parametrize("hopf_name,name", CHEAP)
def test_bulk_structure(hopf_name, name):
    rep = verify_bulk(bulk(hopf_name, name))
    assert rep.ok, rep.to_text()


@pytest.mark.parametrize("hopf_name,name", CHEAP)
def test_bulk_equals_free_module_end(hopf_name, name):
    b = bulk(hopf_name, name)
    assert free_module_internal_end(b.end.frobenius, b.end).equals(b.subspace)


@pytest.mark.parametrize("hopf_name,name", CHEAP)
def test_generator_relations_imply_all_free_module_relations(hopf_name, name):
    e = end(hopf_name, name)
    f = e.frobenius
    assert free_module_internal_end(f, e).equals(free_module_internal_end(f, e, every_morphism=True))


def test_semisimple_bulk_dimensions_match_for_morita_equivalent_algebras():
    a, b = bulk("d_z2", "trivial_frob"), bulk("d_z2", "d_z2_end_s1x2")
    assert a.dim == b.dim == hopf("d_z2").dim


@pytest.mark.parametrize("hopf_name,name", [("d_z2", "trivial_frob"), ("d_z2", "d_z2_end_s1x2"),
                                            ("d_sweedler", "d_sweedler_end_s0")])
def test_bulk_algebra_is_unital_associative_module_algebra(hopf_name, name):
    alg = bulk_multiplication(bulk(hopf_name, name))
    n = alg.bulk.dim
    triples = None if n <= 4 else [(a, (a * 5 + 1) % n, (a * 7 + 3) % n) for a in range(n)]
    rep = verify_bulk_algebra(alg, triples)
    assert rep.ok, rep.to_text()


@pytest.mark.parametrize("hopf_name,name", [("d_z2", "trivial_frob"), ("d_sweedler", "trivial_frob")])
def test_invariant_subalgebra_is_commutative(hopf_name, name):
    inv, rep = invariant_subalgebra(bulk_multiplication(bulk(hopf_name, name)))
    assert rep.ok, rep.to_text()
    assert inv.dim > 0


@pytest.mark.parametrize("hopf_name,name", CHEAP)
def test_hochschild_degree_zero_dimensions_agree(hopf_name, name):
    rep = hh0_check(frob(hopf_name, name), bulk(hopf_name, name))
    assert rep["hh0_dimensions_agree"].witness == "yes"


# partition functions ------------------------------------------------------------------

@pytest.mark.parametrize("name", ["d_z2", "d_sweedler"])
def test_cardy_case_gives_hom_dimensions(name):
    f = frob(name, "trivial_frob")
    ps = pim_modules(name)
    for p in ps:
        for q in ps:
            c = partition_coefficient(f, p, q)
            assert c.value == hom_basis(dual(p), q).dim
            assert c.idempotent and c.value <= c.bound


@pytest.mark.parametrize("hopf_name,name", CHEAP)
def test_sphere_closure_is_idempotent(hopf_name, name):
    f = frob(hopf_name, name)
    ps = pim_modules(hopf_name)
    for p in ps[:2]:
        assert phi_idempotent(f, p, ps[-1]).is_idempotent()


@pytest.mark.parametrize("hopf_name", ["d_z2", "d_sweedler"])
def test_partition_table_is_morita_invariant(hopf_name):
    ps = pim_modules(hopf_name)
    tables = [partition_table(frob(hopf_name, name), ps) for name in FROBENIUS[hopf_name]]
    assert all(t.report.ok for t in tables)
    assert all(t.matrix == tables[0].matrix for t in tables)


def test_partition_table_does_not_depend_on_threads():
    f, ps = frob("d_sweedler", "d_sweedler_end_s1x2"), pim_modules("d_sweedler")
    one, two = partition_table(f, ps, threads=1), partition_table(f, ps, threads=2)
    assert one.matrix == two.matrix
    assert one.report.to_json() == two.report.to_json()


def _combination(maps, coeffs, rows, cols):
    out = Matrix.zeros(rows, cols)
    for m, c in zip(maps, coeffs):
        out = out + m.scale(c)
    return out


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=4, max_size=4), st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_projective_classes_are_cyclic(a, b):
    ps = pim_modules("d_sweedler")
    q, r = ps[0], ps[1]
    g = _combination(hom_basis(q, r).maps(), a, r.dim, q.dim)
    f = _combination(hom_basis(r, q).maps(), b, q.dim, r.dim)
    assert class_dinaturality(q, r, g, f)


# class functions ----------------------------------------------------------------------

@pytest.mark.parametrize("hopf_name,name", CHEAP)
def test_elliptic_class_function(hopf_name, name):
    f = frob(hopf_name, name)
    zeta = elliptic_class_function(f)
    assert zeta == elliptic_oracle(f)
    assert verify_elliptic(f, zeta).ok


@pytest.mark.parametrize("name", ["d_z2", "d_sweedler", "uq_sl2_3"])
def test_elliptic_class_function_of_unit_is_one_on_the_unit(name):
    h = hopf(name)
    zeta = elliptic_class_function(frob(name, "trivial_frob"))
    assert h.unit.T @ zeta @ h.unit == Matrix.identity(1, h.field_order)


def test_elliptic_class_function_is_morita_invariant_on_semisimple_double():
    a = elliptic_class_function(frob("d_z2", "trivial_frob"))
    b = elliptic_class_function(frob("d_z2", "d_z2_end_s1x2"))
    assert a == b


@pytest.mark.parametrize("hopf_name,name,r", [("d_z2", "d_z2_end_s1x2", 2), ("d_z2", "d_z2_end_s1x2", 3),
                                              ("d_z2", "d_z2_end_s1x2", 4), ("d_sweedler", "d_sweedler_end_s0", 2),
                                              ("d_sweedler", "d_sweedler_end_s0", 3)])
def test_genus_zero_class_functions_are_invariant(hopf_name, name, r):
    f = frob(hopf_name, name)
    form = genus_zero_class_function(f, r)
    assert form.shape == (1, f.hopf.dim ** (r - 1))
    assert is_adjoint_invariant(f.hopf, form, r - 1)


def test_genus_zero_range():
    with pytest.raises(CorrelatorError):
        genus_zero_class_function(frob("d_z2", "trivial_frob"), 6)


# torus operators and modular invariance -------------------------------------------------

def test_torus_operators_on_the_semisimple_double():
    ops = st_operators(hopf("d_z2"))
    assert ops.space.dim == torus_block_space(hopf("d_z2")).dim == len(wd("d_z2").simples)
    s2 = ops.s @ ops.s
    assert ops.s @ ops.t @ ops.s @ ops.t @ ops.s @ ops.t == s2.scale(ops.st_cubed_ratio)
    assert s2 @ s2 == Matrix.identity(ops.space.dim).scale(ops.s_fourth_ratio)


@pytest.mark.parametrize("name", FROBENIUS["d_z2"])
def test_modular_invariance_on_semisimple_double(name):
    rep = modular_invariance_check(frob("d_z2", name), pim_modules("d_z2"))
    assert rep.ok, rep.to_text()
    assert rep["commutator_z_t"].status == "pass"
    assert rep["commutator_z_s"].status == "pass"


@pytest.mark.parametrize("name", FROBENIUS["d_sweedler"])
def test_t_commutes_with_class_action_on_non_ribbon_double(name):
    rep = modular_invariance_check(frob("d_sweedler", name), pim_modules("d_sweedler"))
    assert rep.ok, rep.to_text()
    assert rep["commutator_z_t"].status == "pass"
    assert rep["st_relations"].witness.startswith(NOT_CHECKABLE)


def test_class_action_on_projective_classes_is_partial_for_non_semisimple():
    z = class_action(frob("d_sweedler", "trivial_frob"), pim_modules("d_sweedler"))
    assert z.well_defined
    assert not z.full
