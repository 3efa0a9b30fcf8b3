from fractions import Fraction

from hypothesis import given, settings, strategies as st

from greenring import linalg as la

small = st.integers(-4, 4)


def mats(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0]))


def naive_rank(rows):
    """Textbook Gaussian elimination over Fraction."""
    a = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(a[0])
    while rank < len(a) and col < ncols:
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col] != 0:
                f = a[i][col] / a[rank][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        col += 1
    return rank


@settings(max_examples=60, deadline=None)
@given(mats())
def test_rank_matches_textbook_elimination(rows):
    assert la.rank(la.matrix(rows)) == naive_rank(rows)


@settings(max_examples=60, deadline=None)
@given(mats())
def test_nullspace_is_kernel_of_right_size(rows):
    m = la.matrix(rows)
    ns = la.nullspace(m)
    assert ns.ncols() == m.ncols() - la.rank(m)
    if ns.ncols():
        assert la.is_zero(m * ns)
        assert la.rank(ns) == ns.ncols()


@settings(max_examples=60, deadline=None)
@given(mats())
def test_rref_pivots_and_column_basis(rows):
    m = la.matrix(rows)
    r, piv = la.rref(m)
    assert len(piv) == la.rank(m) == r.nrows()
    cb = la.column_basis(m)
    assert cb.ncols() == la.rank(m)
    assert la.rank(la.hstack([cb, m])) == la.rank(m)


@settings(max_examples=60, deadline=None)
@given(mats(), st.lists(small, min_size=5, max_size=5))
def test_solve_consistent_systems(rows, xs):
    m = la.matrix(rows)
    x = la.matrix([[v] for v in xs[: m.ncols()]])
    b = m * x
    sol = la.solve(m, b)
    assert sol is not la.NO_SOLUTION
    assert m * sol == b


def test_solve_reports_inconsistency():
    m = la.matrix([[1, 1], [1, 1]])
    assert la.solve(m, la.matrix([[1], [2]])) is la.NO_SOLUTION


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_cayley_hamilton_and_inverse(rows):
    m = la.matrix(rows)
    assert la.is_zero(la.poly_eval_matrix(la.char_poly(m), m))
    if la.det(m) != 0:
        assert la.inverse(m) * m == la.identity(m.nrows())


def test_squarefree_split_reconstructs():
    # (t-1)^2 (t+2) (t^2+1)
    p = la.poly_from_coeffs([1, -1]) ** 2 * la.poly_from_coeffs([2, 1]) * la.poly_from_coeffs([1, 0, 1])
    parts = la.squarefree_split(p)
    prod = la.poly_from_coeffs([1])
    for f, k in parts:
        prod *= f ** k
    assert la.monic(prod) == la.monic(p)
    assert (la.poly_from_coeffs([-1, 1]), 2) in [(la.monic(f), k) for f, k in parts]


def test_kron_shape_and_mixed_product():
    a = la.matrix([[1, 2], [0, 1]])
    b = la.matrix([[0, 1], [1, 0]])
    k = la.kron(a, b)
    assert (k.nrows(), k.ncols()) == (4, 4)
    assert la.kron(a, b) * la.kron(b, a) == la.kron(a * b, b * a)


@settings(max_examples=40, deadline=None)
@given(mats(), mats())
def test_sparse_matches_dense(r1, r2):
    a, b = la.matrix(r1), la.matrix(r2)
    sa, sb = la.SparseMatrix.from_dense(a), la.SparseMatrix.from_dense(b)
    assert sa.to_dense() == a
    assert sa.kron(sb).to_dense() == la.kron(a, b)
    v = {j: la.to_fmpq(j + 1) for j in range(a.ncols())}
    dense_v = la.matrix([[j + 1] for j in range(a.ncols())])
    got = sa.matvec(v)
    want = a * dense_v
    assert all(got.get(i, 0) == want[i, 0] for i in range(a.nrows()))


def test_string_round_trip():
    m = la.matrix([[Fraction(1, 2), -3], [0, Fraction(7, 5)]])
    assert la.matrix_from_strings(la.matrix_to_strings(m)) == m
    assert la.fraction_str(Fraction(-3, 4)) == "-3/4"
