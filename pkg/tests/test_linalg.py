import pytest
from fractions import Fraction

from hypothesis import given, strategies as st

from cotilt.errors import InputError
from cotilt.linalg import (
    GF, QQ, Matrix, FieldMismatchError, ShapeError,
    field_from_name, hstack, vstack, block_diag, subspace_sum,
)

GF2 = GF(2)
GF3 = GF(3)


def test_field_basics():
    assert GF2.add(1, 1) == 0
    assert GF3.inv(2) == 2
    assert QQ.parse("2/4") == Fraction(1, 2)
    assert GF3.parse("-1") == 2
    with pytest.raises(InputError):
        GF(4)
    with pytest.raises(InputError):
        field_from_name("gfx")
    assert field_from_name("gf 5") == GF(5)
    assert field_from_name("rational") == QQ


def test_rank_identity_and_zero():
    assert Matrix.identity(GF2, 2).rank() == 2
    assert Matrix.zeros(QQ, 3, 3).rank() == 0


def test_rank_dependent_rows_over_q():
    m = Matrix.from_rows(QQ, [[1, 2], [2, 4]])
    assert m.rank() == 1


def test_kernel_identity_and_zero():
    assert Matrix.identity(QQ, 3).kernel_basis().cols == 0
    k = Matrix.zeros(GF2, 4, 4).kernel_basis()
    assert k.cols == 4 and k.rank() == 4


def test_kernel_gf2_row():
    # [[1,1]] over GF(2): kernel spanned by (1,1), checked by enumerating GF(2)^2
    m = Matrix.from_rows(GF2, [[1, 1]])
    k = m.kernel_basis()
    assert k.cols == 1
    assert tuple(k.col(0)) == (1, 1)
    sols = [(a, b) for a in range(2) for b in range(2) if (a + b) % 2 == 0]
    assert len(sols) == 2  # (0,0) and (1,1)


def test_solve_right():
    a = Matrix.identity(QQ, 2)
    b = Matrix.from_rows(QQ, [[3], [5]])
    assert a.solve_right(b) == b
    assert Matrix.zeros(QQ, 2, 2).solve_right(b) is None
    a2 = Matrix.from_rows(QQ, [[1], [1]])
    b2 = Matrix.from_rows(QQ, [[1], [0]])
    assert a2.solve_right(b2) is None


def test_solve_right_degenerate_shapes():
    a = Matrix.zeros(QQ, 2, 0)
    b = Matrix.zeros(QQ, 2, 3)
    x = a.solve_right(b)
    assert x is not None and x.rows == 0 and x.cols == 3
    wide = Matrix.from_rows(GF2, [[1, 0, 1]])
    rhs = Matrix.from_rows(GF2, [[1]])
    x = wide.solve_right(rhs)
    assert x is not None and (wide @ x) == rhs


def test_subspace_sum():
    e1 = Matrix.from_cols(QQ, [[1, 0]])
    e2 = Matrix.from_cols(QQ, [[0, 1]])
    assert subspace_sum(QQ, 2, [e1, e2]).cols == 2
    v = Matrix.from_cols(QQ, [[1, 1]])
    assert subspace_sum(QQ, 2, [v, v]).cols == 1
    w = Matrix.from_cols(QQ, [[1, -1]])
    assert subspace_sum(QQ, 2, [v, w]).cols == 2
    assert subspace_sum(QQ, 5, []).cols == 0


def test_stack_and_block_diag():
    a = Matrix.identity(GF2, 2)
    b = Matrix.zeros(GF2, 2, 1)
    h = hstack([a, b])
    assert (h.rows, h.cols) == (2, 3)
    v = vstack([a, Matrix.zeros(GF2, 1, 2)])
    assert (v.rows, v.cols) == (3, 2)
    d = block_diag(GF2, [a, Matrix.from_rows(GF2, [[1]])])
    assert (d.rows, d.cols) == (3, 3) and d.rank() == 3
    with pytest.raises(FieldMismatchError):
        hstack([a, Matrix.identity(GF3, 2)])
    with pytest.raises(ShapeError):
        vstack([a, b])


def test_field_mismatch_in_arithmetic():
    with pytest.raises(FieldMismatchError):
        Matrix.identity(GF2, 2) @ Matrix.identity(QQ, 2)


def test_column_space_basis_canonical():
    m = Matrix.from_cols(QQ, [[2, 4], [1, 2], [0, 1]])
    b = m.column_space_basis()
    assert b.cols == 2
    # reduced column echelon: leading entries are 1 with zeros elsewhere in their row
    assert b.col(0)[0] == 1 and b.col(1)[0] == 0


@st.composite
def gf2_matrices(draw):
    r = draw(st.integers(0, 6))
    c = draw(st.integers(0, 6))
    ents = draw(st.lists(st.integers(0, 1), min_size=r * c, max_size=r * c))
    return Matrix(GF2, r, c, tuple(ents))


@given(gf2_matrices())
def test_rank_nullity(m):
    assert m.rank() + m.kernel_basis().cols == m.cols


@given(gf2_matrices())
def test_kernel_columns_independent_and_annihilated(m):
    k = m.kernel_basis()
    assert k.rank() == k.cols
    if k.cols:
        assert (m @ k).is_zero()


@given(gf2_matrices(), st.data())
def test_solve_right_roundtrip(a, data):
    x_cols = data.draw(st.integers(0, 3))
    ents = data.draw(st.lists(st.integers(0, 1), min_size=a.cols * x_cols,
                              max_size=a.cols * x_cols))
    x = Matrix(GF2, a.cols, x_cols, tuple(ents))
    b = a @ x
    got = a.solve_right(b)
    assert got is not None
    assert (a @ got) == b


@given(st.lists(st.fractions(min_value=-5, max_value=5), min_size=4, max_size=4),
       st.lists(st.fractions(min_value=-5, max_value=5), min_size=4, max_size=4))
def test_exact_rational_arithmetic(xs, ys):
    a = Matrix(QQ, 2, 2, tuple(Fraction(x) for x in xs))
    b = Matrix(QQ, 2, 2, tuple(Fraction(y) for y in ys))
    assert (a + b) - b == a
