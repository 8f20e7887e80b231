import pytest
from hypothesis import given, settings, strategies as st

from idempotoric.errors import InputError
from idempotoric.lattices import (
    IntegerMatrix,
    Sublattice,
    determinant,
    hermite_normal_form,
    kernel_lattice,
    lattice_member,
    rank,
    row_times_matrix,
    saturate,
    smith_normal_form,
)

M = IntegerMatrix.from_rows

settings.register_profile("exact", deadline=None, max_examples=80)
settings.load_profile("exact")

entry = st.integers(min_value=-9, max_value=9)


def matrices(max_rows=4, max_cols=4):
    def build(shape):
        r, c = shape
        return st.lists(
            st.lists(entry, min_size=c, max_size=c), min_size=r, max_size=r
        ).map(lambda rows: M(rows, cols=c))

    return st.tuples(
        st.integers(min_value=1, max_value=max_rows),
        st.integers(min_value=1, max_value=max_cols),
    ).flatmap(build)


def is_canonical_hermite(h):
    pivots = []
    for row in h.entries:
        nz = [j for j, t in enumerate(row) if t]
        pivots.append(nz[0] if nz else None)
    seen_zero = False
    prev = -1
    for i, p in enumerate(pivots):
        if p is None:
            seen_zero = True
            continue
        if seen_zero:
            return False  # nonzero row below a zero row
        if p <= prev:
            return False  # pivot columns must strictly increase
        prev = p
        if h.entries[i][p] <= 0:
            return False
        for k in range(i):
            if not 0 <= h.entries[k][p] < h.entries[i][p]:
                return False
    return True


# ---------------------------------------------------------------- hermite


def test_hermite_frozen_example():
    m = M([[2, 4], [1, 1]])
    h, u = hermite_normal_form(m)
    assert h.entries == ((1, 1), (0, 2))
    assert (u @ m).entries == h.entries
    assert abs(determinant(u)) == 1


def test_hermite_zero_row_retained():
    h, u = hermite_normal_form(M([[0, 0]]))
    assert h.entries == ((0, 0),)
    assert u.entries == ((1,),)


def test_hermite_pivot_sign_normalized():
    h, u = hermite_normal_form(M([[-1]]))
    assert h.entries == ((1,),)
    assert u.entries == ((-1,),)


def test_hermite_degenerate_shapes():
    h, u = hermite_normal_form(IntegerMatrix((), 3))
    assert h.entries == () and h.cols == 3
    assert u.entries == ()
    h, u = hermite_normal_form(M([[], [], []], cols=0))
    assert h.entries == ((), (), ())
    assert u.entries == IntegerMatrix.identity(3).entries


@given(matrices())
def test_hermite_properties(m):
    h, u = hermite_normal_form(m)
    assert (u @ m).entries == h.entries
    assert abs(determinant(u)) == 1
    assert is_canonical_hermite(h)


@given(
    matrices(),
    st.lists(
        st.tuples(
            st.sampled_from(["swap", "neg", "add"]),
            st.integers(min_value=0, max_value=9),
            st.integers(min_value=0, max_value=9),
            st.integers(min_value=-3, max_value=3),
        ),
        max_size=6,
    ),
)
def test_hermite_canonical_under_row_transforms(m, ops):
    # applying any unimodular transform on the left leaves the form unchanged
    rows = [list(r) for r in m.entries]
    n = len(rows)
    for kind, i, j, k in ops:
        i, j = i % n, j % n
        if kind == "swap":
            rows[i], rows[j] = rows[j], rows[i]
        elif kind == "neg":
            rows[i] = [-t for t in rows[i]]
        elif i != j:
            rows[i] = [a + k * b for a, b in zip(rows[i], rows[j])]
    h1, _ = hermite_normal_form(m)
    h2, _ = hermite_normal_form(M(rows, cols=m.cols))
    assert h1.entries == h2.entries


# ------------------------------------------------------------------ smith


def test_smith_frozen_example():
    m = M([[2, 0], [0, 3]])
    s, u, v = smith_normal_form(m)
    assert s.entries == ((1, 0), (0, 6))
    assert (u @ m @ v).entries == s.entries
    assert abs(determinant(u)) == 1
    assert abs(determinant(v)) == 1


def test_smith_zero_matrix():
    s, u, v = smith_normal_form(M([[0, 0], [0, 0]]))
    assert s.entries == ((0, 0), (0, 0))


@given(matrices())
def test_smith_properties(m):
    s, u, v = smith_normal_form(m)
    assert (u @ m @ v).entries == s.entries
    assert abs(determinant(u)) == 1
    assert abs(determinant(v)) == 1
    diag = [s.entries[i][i] for i in range(min(s.rows, s.cols))]
    for i in range(s.rows):
        for j in range(s.cols):
            if i != j:
                assert s.entries[i][j] == 0
    for a, b in zip(diag, diag[1:]):
        assert a >= 0 and b >= 0
        if b:
            assert a != 0 and b % a == 0


# ----------------------------------------------------------------- kernel


def test_kernel_frozen_example():
    k = kernel_lattice(M([[1, 0], [0, 1], [1, 1]]))
    assert k.ambient_rank == 3
    assert k.basis.entries == ((1, 1, -1),)


def test_kernel_of_full_rank_is_trivial():
    k = kernel_lattice(M([[1, 0], [0, 1]]))
    assert k.rank == 0
    assert k.basis.entries == ()


@given(matrices())
def test_kernel_properties(m):
    k = kernel_lattice(m)
    assert k.ambient_rank == m.rows
    for z in k.basis.entries:
        assert all(t == 0 for t in row_times_matrix(z, m))
    assert k.rank == m.rows - rank(m)
    assert saturate(k) == k  # kernels are saturated


# --------------------------------------------------------------- saturate


def test_saturate_frozen_example():
    sub = Sublattice.span(2, [(2, 0)])
    assert saturate(sub).basis.entries == ((1, 0),)


def test_saturate_preserves_saturated():
    sub = Sublattice.span(2, [(1, 0), (0, 1)])
    assert saturate(sub) == sub


def test_saturate_zero_lattice():
    sub = Sublattice.span(3, [])
    sat = saturate(sub)
    assert sat.rank == 0 and sat.ambient_rank == 3


@given(matrices())
def test_saturate_properties(m):
    sub = Sublattice.span(m.cols, m.entries)
    sat = saturate(sub)
    assert sat.rank == sub.rank
    for row in sub.basis.entries:
        assert lattice_member(sat, row) is not None
    assert saturate(sat) == sat


# ----------------------------------------------------------------- member


def test_member_examples():
    sub = Sublattice.span(2, [(2, 0)])
    assert lattice_member(sub, (2, 0)) == (1,)
    assert lattice_member(sub, (4, 0)) == (2,)
    assert lattice_member(sub, (1, 0)) is None
    assert lattice_member(sub, (0, 1)) is None
    assert lattice_member(sub, (0, 0)) == (0,)
    # rank-0 lattice: the zero vector is a member with empty (falsy) coefficients
    zero = Sublattice.span(2, [])
    assert lattice_member(zero, (0, 0)) == ()
    assert lattice_member(zero, (1, 0)) is None


def test_member_dimension_mismatch():
    sub = Sublattice.span(2, [(1, 0)])
    with pytest.raises(InputError):
        lattice_member(sub, (1, 0, 0))


@given(matrices(), st.lists(st.integers(min_value=-3, max_value=3), max_size=4))
def test_member_roundtrip(m, coeffs):
    sub = Sublattice.span(m.cols, m.entries)
    coeffs = (coeffs + [0] * sub.rank)[: sub.rank]
    v = [0] * m.cols
    for q, row in zip(coeffs, sub.basis.entries):
        v = [a + q * b for a, b in zip(v, row)]
    got = lattice_member(sub, v)
    assert got == tuple(coeffs)


# ------------------------------------------------------------ matrix type


def test_matrix_rejects_non_int_entries():
    with pytest.raises(InputError):
        M([[1.5]])
    with pytest.raises(InputError):
        M([[True]])


def test_matrix_rejects_ragged_rows():
    with pytest.raises(InputError):
        M([[1, 2], [3]])


def test_determinant_examples():
    assert determinant(M([[2, 1], [1, 1]])) == 1
    assert determinant(M([[0, 1], [1, 0]])) == -1
    assert determinant(M([[2, 0, 0], [0, 3, 0], [0, 0, 4]])) == 24
    assert determinant(IntegerMatrix((), 0)) == 1
    with pytest.raises(InputError):
        determinant(M([[1, 2]]))
