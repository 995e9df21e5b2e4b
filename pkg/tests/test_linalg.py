import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bulkcor.linalg import (LinalgError, Matrix, Subspace, apply_on_legs, equalizer, hstack, idempotent_image,
                            kron, kron_all, permute_legs, trace, vstack)
from bulkcor.scalar import Scalar, phi

small = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, rows=None, cols=None, order=None):
    n = order or draw(st.sampled_from([1, 3, 4]))
    r = rows or draw(st.integers(1, 4))
    c = cols or draw(st.integers(1, 4))
    flat = [Scalar(n, [draw(small) for _ in range(phi(n))]) for _ in range(r * c)]
    return Matrix.from_entries(r, c, flat, n)


def identity_like(m):
    return Matrix.identity(m.rows, m.order)


def test_from_rows_and_access():
    m = Matrix.from_rows([[1, 2], [3, "1/2"]])
    assert m.shape == (2, 2)
    assert m[1, 1] == Scalar.rational("1/2")
    assert m.T[0, 1] == 3
    with pytest.raises(LinalgError):
        Matrix.from_rows([[1, 2], [3]])


def test_kron_convention_left_slowest():
    a = Matrix.from_rows([[1, 2]])
    b = Matrix.from_rows([[1, 10]])
    assert kron(a, b) == Matrix.from_rows([[1, 10, 2, 20]])


def test_cyclotomic_inverse():
    z = Scalar.zeta(3)
    m = Matrix.from_rows([[z, 1], [0, z]])
    assert m @ m.inverse() == Matrix.identity(2, 3)


def test_singular_inverse_raises():
    with pytest.raises(LinalgError):
        Matrix.from_rows([[1, 2], [2, 4]]).inverse()
    z = Scalar.zeta(3)
    with pytest.raises(LinalgError):
        Matrix.from_rows([[1, z], [z * z, z ** 3]]).inverse()


def test_rank_over_extension_differs_from_rational_shadow():
    # rows (1, z) and (z, z^2) are dependent over Q(z) but not over Q
    z = Scalar.zeta(3)
    m = Matrix.from_rows([[1, z], [z, z * z]])
    assert m.rank() == 1
    assert m.kernel_basis().dim == 1


def test_equalizer_and_trace():
    f = Matrix.from_rows([[1, 0], [0, 0]])
    g = Matrix.from_rows([[1, 0], [0, 1]])
    assert equalizer(f, g).dim == 1
    assert trace(kron(g, g)) == 4


def test_idempotent_image():
    p = Matrix.from_rows([[1, 1], [0, 0]])
    image, j, q = idempotent_image(p)
    assert image.dim == 1
    assert j @ q == p and q @ j == Matrix.identity(1)
    with pytest.raises(LinalgError):
        idempotent_image(Matrix.from_rows([[2, 0], [0, 0]]))


def test_subspace_coordinates_and_membership():
    s = Subspace.span(Matrix.from_rows([[1, 2], [0, 0], [1, 2]]))
    assert s.dim == 1
    v = Matrix.column_vector([3, 0, 3])
    assert s.coordinates(v) == Matrix.from_rows([[3]])
    assert Matrix.column_vector([1, 1, 1]) not in s
    t = Subspace.span(Matrix.from_rows([[1, 0], [0, 1], [1, 0]]))
    assert s.intersect(t).equals(s)


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    k = m.kernel_basis()
    assert k.dim + m.rank() == m.cols
    assert (m @ k.basis).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_inverse_when_full_rank(data):
    n = data.draw(st.sampled_from([1, 3, 4]))
    size = data.draw(st.integers(1, 4))
    m = data.draw(matrices(size, size, n))
    if m.rank() < size:
        with pytest.raises(LinalgError):
            m.inverse()
    else:
        assert m.inverse() @ m == identity_like(m)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_kron_mixed_product(data):
    n = data.draw(st.sampled_from([1, 3]))
    a = data.draw(matrices(2, 3, n))
    b = data.draw(matrices(2, 2, n))
    c = data.draw(matrices(3, 2, n))
    e = data.draw(matrices(2, 1, n))
    assert kron(a, b) @ kron(c, e) == kron(a @ c, b @ e)
    assert trace(kron(a @ c, b)) == trace(a @ c) * trace(b)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_apply_on_legs_matches_kron(data):
    n = data.draw(st.sampled_from([1, 3]))
    dims = [2, 3, 2]
    start = data.draw(st.integers(0, 2))
    g = data.draw(matrices(data.draw(st.integers(1, 3)), dims[start], n))
    state = data.draw(matrices(12, 2, n))
    ops = [Matrix.identity(d, n) for d in dims]
    ops[start] = g
    assert apply_on_legs(g, state, dims, start, 1) == kron_all(ops) @ state


@settings(max_examples=30, deadline=None)
@given(st.permutations([0, 1, 2]), st.data())
def test_permute_legs_inverse(perm, data):
    dims = [2, 3, 2]
    state = data.draw(matrices(12, 1, 1))
    moved = permute_legs(state, dims, perm)
    inv = [perm.index(p) for p in range(3)]
    assert permute_legs(moved, [dims[p] for p in perm], inv) == state


@settings(max_examples=30, deadline=None)
@given(matrices(3, 2, 3), matrices(3, 2, 3))
def test_stacks(a, b):
    assert hstack([a, b]).select_columns([2, 3]) == b
    assert vstack([a, b]).select_rows([3, 4, 5]) == b


@settings(max_examples=30, deadline=None)
@given(matrices(4, 3, 3))
def test_span_equals_itself_and_contains_columns(m):
    s = Subspace.span(m)
    assert s.dim == m.rank()
    assert s.contains(m)
    assert s.equals(Subspace.span(hstack([m, m])))
