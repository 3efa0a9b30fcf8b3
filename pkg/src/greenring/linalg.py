"""Exact rational linear algebra on top of python-flint.

Matrices are ``flint.fmpq_mat``; polynomials are ``flint.fmpq_poly``.
Scalars at the public boundary are ``fractions.Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from flint import fmpq, fmpq_mat, fmpq_poly, fmpz_mat

Matrix = fmpq_mat
Polynomial = fmpq_poly


class NoSolution:
    """Sentinel returned by :func:`solve` for inconsistent systems."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NoSolution"

    def __bool__(self):
        return False


NO_SOLUTION = NoSolution()


def to_fmpq(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return fmpq(x)
    if isinstance(x, str):
        return to_fmpq(Fraction(x))
    raise TypeError(f"cannot convert {x!r} to a rational")


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(int(x.p), int(x.q))


def matrix(rows: Sequence[Sequence]) -> Matrix:
    rows = [list(r) for r in rows]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    flat = [to_fmpq(v) for r in rows for v in r]
    return fmpq_mat(nr, nc, flat)


def from_entries(nr: int, nc: int, flat: list) -> Matrix:
    return fmpq_mat(nr, nc, flat)


def zeros(nr: int, nc: int) -> Matrix:
    return fmpq_mat(nr, nc)


def identity(n: int) -> Matrix:
    m = fmpq_mat(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def diag(values: Iterable) -> Matrix:
    values = list(values)
    n = len(values)
    m = fmpq_mat(n, n)
    for i, v in enumerate(values):
        m[i, i] = to_fmpq(v)
    return m


def to_rows(m: Matrix) -> list[list[Fraction]]:
    e = m.entries()
    nc = m.ncols()
    return [[to_fraction(e[i * nc + j]) for j in range(nc)] for i in range(m.nrows())]


def is_zero(m: Matrix) -> bool:
    return all(v == 0 for v in m.entries())


def is_diagonal(m: Matrix) -> bool:
    n = m.ncols()
    e = m.entries()
    return all(v == 0 for k, v in enumerate(e) if k // n != k % n)


def diagonal(m: Matrix) -> list:
    n = m.ncols()
    e = m.entries()
    return [e[i * n + i] for i in range(min(n, m.nrows()))]


def select(m: Matrix, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> Matrix:
    nr, nc = m.nrows(), m.ncols()
    rows = range(nr) if rows is None else rows
    cols = range(nc) if cols is None else cols
    e = m.entries()
    if len(cols) == nc:
        flat = [v for i in rows for v in e[i * nc:(i + 1) * nc]]
    else:
        flat = [e[i * nc + j] for i in rows for j in cols]
    return fmpq_mat(len(rows), len(cols), flat)


def hstack(mats: Sequence[Matrix]) -> Matrix:
    mats = [m for m in mats]
    nr = mats[0].nrows()
    ents = [m.entries() for m in mats]
    ncs = [m.ncols() for m in mats]
    flat = []
    for i in range(nr):
        for e, nc in zip(ents, ncs):
            flat.extend(e[i * nc:(i + 1) * nc])
    return fmpq_mat(nr, sum(ncs), flat)


def vstack(mats: Sequence[Matrix]) -> Matrix:
    nc = mats[0].ncols()
    flat = []
    for m in mats:
        flat.extend(m.entries())
    return fmpq_mat(sum(m.nrows() for m in mats), nc, flat)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; only nonzero entries are visited."""
    p, q = a.nrows(), a.ncols()
    r, s = b.nrows(), b.ncols()
    ae, be = a.entries(), b.entries()
    bnz = [(k // s, k % s, v) for k, v in enumerate(be) if v != 0]
    ncol = q * s
    flat = [0] * (p * r * ncol)
    for k, av in enumerate(ae):
        if av == 0:
            continue
        i, j = divmod(k, q)
        for bi, bj, bv in bnz:
            flat[(i * r + bi) * ncol + j * s + bj] = av * bv
    return fmpq_mat(p * r, ncol, flat)


def _integer_rows(m: Matrix) -> fmpz_mat:
    num, _ = m.numer_denom()
    return num


def rank(m: Matrix) -> int:
    if m.nrows() == 0 or m.ncols() == 0:
        return 0
    return _integer_rows(m).rank()


def nullspace(m: Matrix) -> Matrix:
    """Columns form a basis of {v : m v = 0}."""
    nc = m.ncols()
    if m.nrows() == 0:
        return identity(nc)
    if nc == 0:
        return zeros(0, 0)
    basis, nullity = _integer_rows(m).nullspace()
    if nullity == 0:
        return zeros(nc, 0)
    cols = list(range(nullity))
    return fmpq_mat(select(fmpq_mat(basis), None, cols))


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    if m.nrows() == 0:
        return m, []
    r, rk = m.rref()
    nc = m.ncols()
    e = r.entries()
    pivots = []
    for i in range(rk):
        for j in range(nc):
            if e[i * nc + j] != 0:
                pivots.append(j)
                break
    return select(r, list(range(rk)), None), pivots


def column_basis(m: Matrix) -> Matrix:
    """A basis of the column space (as columns of a new matrix)."""
    if m.ncols() == 0:
        return m
    _, piv = rref(m)
    return select(m, None, piv)


def pivot_columns(m: Matrix) -> list[int]:
    return rref(m)[1]


def solve(a: Matrix, b: Matrix):
    """Some x with a x = b, or ``NO_SOLUTION``."""
    if a.nrows() != b.nrows():
        raise ValueError("row mismatch")
    n = a.ncols()
    aug = hstack([a, b]) if a.nrows() else a
    r, piv = rref(aug)
    if any(p >= n for p in piv):
        return NO_SOLUTION
    k = b.ncols()
    x = fmpq_mat(n, k)
    re = r.entries()
    w = r.ncols()
    for i, p in enumerate(piv):
        for j in range(k):
            x[p, j] = re[i * w + n + j]
    return x


def inverse(a: Matrix) -> Matrix:
    return a.inv()


def det(a: Matrix) -> Fraction:
    return to_fraction(a.det())


def trace(a: Matrix) -> fmpq:
    return sum(diagonal(a), fmpq(0))


def char_poly(m: Matrix) -> Polynomial:
    if m.nrows() != m.ncols():
        raise ValueError("square matrix required")
    return m.charpoly()


def poly_eval_matrix(p: Polynomial, m: Matrix) -> Matrix:
    n = m.nrows()
    out = zeros(n, n)
    ident = identity(n)
    for c in reversed(p.coeffs()):
        out = out * m + ident * c
    return out


def monic(p: Polynomial) -> Polynomial:
    lc = p.leading_coefficient() if hasattr(p, "leading_coefficient") else p.coeffs()[-1]
    return p / lc


def _rational_roots(p: Polynomial) -> list[fmpq]:
    roots = []
    for fac, _ in p.factor()[1]:
        if fac.degree() == 1:
            c = fac.coeffs()
            roots.append(-c[0] / c[1])
    return roots


def squarefree_split(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's squarefree decomposition, then rational roots split off.

    Returns monic, pairwise coprime, squarefree factors with multiplicities.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    p = monic(p)
    out: list[tuple[Polynomial, int]] = []
    if p.degree() == 0:
        return out
    # Yun
    dp = p.derivative()
    a = p.gcd(dp)
    b = p / a
    c = dp / a
    d = c - b.derivative()
    i = 1
    while b.degree() > 0:
        a = monic(b.gcd(d))
        if a.degree() > 0:
            out.append((a, i))
        b = b / a
        c = d / a
        d = c - b.derivative()
        i += 1
    split: list[tuple[Polynomial, int]] = []
    x = fmpq_poly([0, 1])
    for f, mult in out:
        rest = f
        for root in _rational_roots(f):
            lin = x - root
            split.append((lin, mult))
            rest = rest / lin
        if rest.degree() > 0:
            split.append((monic(rest), mult))
    return split


def poly_from_coeffs(coeffs: Sequence) -> Polynomial:
    return fmpq_poly([to_fmpq(c) for c in coeffs])


def poly_coeffs(p: Polynomial) -> list[Fraction]:
    return [to_fraction(c) for c in p.coeffs()]


def fraction_str(x) -> str:
    f = to_fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def matrix_to_strings(m: Matrix) -> list[list[str]]:
    return [[fraction_str(v) for v in row] for row in to_rows(m)]


def matrix_from_strings(rows: Sequence[Sequence[str]]) -> Matrix:
    return matrix([[Fraction(v) for v in r] for r in rows])


def restrict(action: Matrix, basis: Matrix, pivots: Sequence[int] | None = None) -> Matrix:
    """Matrix of ``action`` on the invariant subspace spanned by ``basis`` columns."""
    if pivots is None:
        pivots = pivot_columns(basis.transpose())
    sq = select(basis, pivots, None)
    img = select(action * basis, pivots, None)
    return sq.inv() * img if sq.nrows() else zeros(0, 0)


class SparseMatrix:
    """Column-sparse rational matrix: ``cols[j]`` maps row -> nonzero fmpq."""

    __slots__ = ("nrows", "cols")

    def __init__(self, nrows: int, cols: list):
        self.nrows = nrows
        self.cols = cols

    @property
    def ncols(self) -> int:
        return len(self.cols)

    @classmethod
    def from_dense(cls, m: Matrix) -> "SparseMatrix":
        nc = m.ncols()
        cols = [dict() for _ in range(nc)]
        for k, v in enumerate(m.entries()):
            if v != 0:
                cols[k % nc][k // nc] = v
        return cls(m.nrows(), cols)

    def to_dense(self) -> Matrix:
        nc = len(self.cols)
        flat = [0] * (self.nrows * nc)
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                flat[i * nc + j] = v
        return fmpq_mat(self.nrows, nc, flat)

    def matvec(self, vec: dict) -> dict:
        out: dict = {}
        for j, a in vec.items():
            for i, b in self.cols[j].items():
                v = out.get(i, 0) + a * b
                if v == 0:
                    out.pop(i, None)
                else:
                    out[i] = v
        return out

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        r = other.nrows
        cols = []
        for ca in self.cols:
            for cb in other.cols:
                cols.append({ia * r + ib: va * vb for ia, va in ca.items() for ib, vb in cb.items()})
        return SparseMatrix(self.nrows * r, cols)

    def add(self, other: "SparseMatrix", scale=1) -> "SparseMatrix":
        cols = []
        for ca, cb in zip(self.cols, other.cols):
            c = dict(ca)
            for i, v in cb.items():
                w = c.get(i, 0) + scale * v
                if w == 0:
                    c.pop(i, None)
                else:
                    c[i] = w
            cols.append(c)
        return SparseMatrix(self.nrows, cols)

    def scale(self, c) -> "SparseMatrix":
        return SparseMatrix(self.nrows, [{i: v * c for i, v in col.items()} for col in self.cols])

    def is_diagonal(self) -> bool:
        return all(not col or (len(col) == 1 and j in col) for j, col in enumerate(self.cols))

    def diagonal(self) -> list:
        return [col.get(j, 0) for j, col in enumerate(self.cols)]
