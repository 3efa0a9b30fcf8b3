"""Krull–Schmidt engine: Hom spaces, idempotent splitting, identification."""
from __future__ import annotations

import itertools
import math
import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpz_mat

from . import linalg as la
from .hopf import Element, HopfAlgebra, IdempotentSystem, build_algebra, jacobson_radical, standard_idempotents
from .labels import (FAMILIES, Label, allowed_signs, format_label, label_dim)
from .modules import ModuleRep, build, change_basis, left_ideal, regular_module

NAMED = ("mabar", "DH4", "HH")


class NonSplitEndo(ArithmeticError):
    """End(m)/J is a division algebra of dimension > 1 over Q."""


class IdentificationFailure(ValueError):
    pass


class _Local:
    def __repr__(self):
        return "LocalRing"


LOCAL = _Local()


# ---------------------------------------------------------------- results

@dataclass(frozen=True)
class Fingerprint:
    dim: int
    sign_multiplicities: tuple   # sorted ((s1, s2), count) pairs
    top_dim: int
    socle_dim: int
    x_rank: int
    y_rank: int
    loewy_length: int
    band_eta: Fraction | None = None


@dataclass
class Decomposition:
    algebra: str
    input_dim: int
    summands: tuple           # sorted Labels, repeated by multiplicity
    seed: int = 0
    input: str | None = None

    def counts(self) -> Counter:
        return Counter(self.summands)

    def dims_ok(self) -> bool:
        return sum(label_dim(s, self.algebra) for s in self.summands) == self.input_dim

    def text(self) -> str:
        if not self.summands:
            return "0"
        parts = []
        for lab, c in sorted(self.counts().items()):
            parts.append(format_label(lab) if c == 1 else f"{c}·{format_label(lab)}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"input": self.input, "algebra": self.algebra, "input_dim": self.input_dim,
                "seed": self.seed, "summands": [s.to_json() for s in self.summands]}


# ---------------------------------------------------------------- weights & Hom

def weight_normalize(m: ModuleRep) -> ModuleRep:
    """Same module in a basis where every group-like acts diagonally."""
    T = _weight_basis(m)
    return m if T is None else change_basis(m, T)


def _weight_basis(m: ModuleRep):
    """Columns spanning the simultaneous eigenspaces of the group-likes, or None if already diagonal."""
    if m.dim == 0 or m.has_diagonal_weights():
        return None
    n = m.dim
    ident = la.identity(n)
    gls = [m.actions[g] for g in m.algebra.grouplikes]
    blocks = []
    for signs in itertools.product((1, -1), repeat=len(gls)):
        p = ident
        for s, g in zip(signs, gls):
            p = p * (ident + g * s) * fmpq(1, 2)
        if not la.is_zero(p):
            blocks.append(la.column_basis(p))
    return la.hstack(blocks)


@dataclass
class HomSpace:
    """Hom_A(m, n) as a null space over the weight-compatible matrix entries."""
    source_dim: int
    target_dim: int
    pairs: list              # unknown k <-> entry (i, j), i in target, j in source
    basis: la.Matrix         # len(pairs) x dim, columns are solutions
    _mats: list | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.basis.ncols()

    def element(self, coeffs) -> la.Matrix:
        out = la.zeros(self.target_dim, self.source_dim)
        b = self.basis
        for k, (i, j) in enumerate(self.pairs):
            v = sum((b[k, c] * la.to_fmpq(a) for c, a in enumerate(coeffs) if a), fmpq(0))
            if v != 0:
                out[i, j] = v
        return out

    def matrices(self) -> list:
        if self._mats is None:
            out = []
            b = self.basis
            for c in range(self.dim):
                mat = la.zeros(self.target_dim, self.source_dim)
                for k, (i, j) in enumerate(self.pairs):
                    v = b[k, c]
                    if v != 0:
                        mat[i, j] = v
                out.append(mat)
            self._mats = out
        return self._mats


def _nonzero_by_col(a: la.Matrix) -> list:
    n, c = a.nrows(), a.ncols()
    e = a.entries()
    out = [[] for _ in range(c)]
    for k, v in enumerate(e):
        if v != 0:
            out[k % c].append((k // c, v))
    return out


def _nonzero_by_row(a: la.Matrix) -> list:
    c = a.ncols()
    e = a.entries()
    out = [[] for _ in range(a.nrows())]
    for k, v in enumerate(e):
        if v != 0:
            out[k // c].append((k % c, v))
    return out


def hom_space(m: ModuleRep, n: ModuleRep) -> HomSpace:
    if m.algebra is not n.algebra:
        raise ValueError("modules over different algebras")
    wm, wn = m.weights(), n.weights()
    by_w = defaultdict(list)
    for j, w in enumerate(wm):
        by_w[w].append(j)
    pairs = [(i, j) for i in range(n.dim) for j in by_w.get(wn[i], ())]
    idx = {p: k for k, p in enumerate(pairs)}
    U = len(pairs)
    if U == 0:
        return HomSpace(m.dim, n.dim, pairs, la.zeros(0, 0))
    rows = []
    seen = set()
    for g in m.algebra.generators:
        if g in m.algebra.grouplikes:
            continue
        acol = _nonzero_by_col(m.actions[g])
        brow = _nonzero_by_row(n.actions[g])
        for i in range(n.dim):
            for j in range(m.dim):
                row: dict = {}
                for k, a in acol[j]:
                    u = idx.get((i, k))
                    if u is not None:
                        row[u] = row.get(u, 0) + a
                for k, b in brow[i]:
                    u = idx.get((k, j))
                    if u is not None:
                        row[u] = row.get(u, 0) - b
                row = {u: v for u, v in row.items() if v != 0}
                if not row:
                    continue
                den = math.lcm(*(int(v.q) for v in row.values()))
                key = tuple(sorted((u, int(v.p) * (den // int(v.q))) for u, v in row.items()))
                if key not in seen:
                    seen.add(key)
                    rows.append(key)
    if not rows:
        return HomSpace(m.dim, n.dim, pairs, la.identity(U))
    flat = [0] * (len(rows) * U)
    for r, key in enumerate(rows):
        for u, v in key:
            flat[r * U + u] = v
    ker, nullity = fmpz_mat(len(rows), U, flat).nullspace()
    basis = la.zeros(U, nullity)
    for c in range(nullity):
        for k in range(U):
            v = ker[k, c]
            if v != 0:
                basis[k, c] = v
    return HomSpace(m.dim, n.dim, pairs, basis)


def hom_basis(m: ModuleRep, n: ModuleRep) -> list:
    return hom_space(weight_normalize(m), weight_normalize(n)).matrices()


def endomorphism_basis(m: ModuleRep) -> list:
    return hom_basis(m, m)


def _pairing_gram(h1: HomSpace, h2: HomSpace) -> la.Matrix:
    """G[a, b] = trace(psi_b phi_a) for phi in h1 = Hom(m,n), psi in h2 = Hom(n,m)."""
    if h1.dim == 0 or h2.dim == 0:
        return la.zeros(h1.dim, h2.dim)
    where = {p: k for k, p in enumerate(h2.pairs)}
    perm = [where[(j, i)] for (i, j) in h1.pairs]
    return h1.basis.transpose() * la.select(h2.basis, perm, None)


def radical_codim(m: ModuleRep) -> int:
    """dim End(m)/J(End(m)) through the trace form on End(m)."""
    m = weight_normalize(m)
    hs = hom_space(m, m)
    return la.rank(_pairing_gram(hs, hs))


# ---------------------------------------------------------------- splitting

def _idempotent_from(phi: la.Matrix):
    factors = la.squarefree_split(la.char_poly(phi))
    if len(factors) < 2:
        return None
    f1 = factors[0][0] ** factors[0][1]
    rest = la.poly_from_coeffs([1])
    for f, mult in factors[1:]:
        rest = rest * f ** mult
    _, _, t = f1.xgcd(rest)
    e = la.poly_eval_matrix(t * rest, phi)
    return e


def find_splitting_idempotent(m: ModuleRep, seed: int = 0, retries: int = 32):
    """A nontrivial idempotent of End(m), or ``LOCAL``."""
    m = weight_normalize(m)
    if m.dim == 0:
        raise ValueError("zero module")
    hs = hom_space(m, m)
    if la.rank(_pairing_gram(hs, hs)) <= 1:
        return LOCAL
    basis = hs.matrices()
    rng = random.Random(seed)
    order = list(range(len(basis)))
    if seed:
        rng.shuffle(order)
    for k in order:
        e = _idempotent_from(basis[k])
        if e is not None:
            return e
    for _ in range(retries):
        coeffs = [rng.randint(-4, 4) for _ in basis]
        e = _idempotent_from(hs.element(coeffs))
        if e is not None:
            return e
    raise NonSplitEndo(f"no rational splitting found for a module of dim {m.dim}")


def submodule(m: ModuleRep, basis: la.Matrix) -> ModuleRep:
    piv = la.pivot_columns(basis.transpose())
    acts = {g: la.restrict(a, basis, piv) for g, a in m.actions.items()}
    return ModuleRep(m.algebra, acts)


def split_fully(m: ModuleRep, seed: int = 0) -> list:
    """Indecomposable pieces as (module, basis in m's coordinates)."""
    if m.dim == 0:
        return []
    T = _weight_basis(m)
    if T is None:
        T = la.identity(m.dim)
    else:
        m = change_basis(m, T)
    out = []
    stack = [(m, T)]
    depth = 0
    while stack:
        piece, B = stack.pop()
        e = find_splitting_idempotent(piece, seed + depth)
        depth += 1
        if e is LOCAL:
            out.append((piece, B))
            continue
        ident = la.identity(piece.dim)
        for proj in (e, ident - e):
            cb = la.column_basis(proj)
            stack.append((submodule(piece, cb), B * cb))
    out.reverse()
    return out


def is_indecomposable(m: ModuleRep) -> bool:
    return m.dim > 0 and find_splitting_idempotent(m) is LOCAL


def primitive_idempotents(h: HopfAlgebra, seed: int = 0) -> IdempotentSystem:
    """Complete orthogonal primitive idempotents from splitting the regular module."""
    reg = regular_module(h)
    pieces = split_fully(reg, seed)
    T = la.hstack([B for _, B in pieces])
    Ti = T.inv()
    unit = la.zeros(h.dim, 1)
    for k, c in h.unit.items():
        unit[k, 0] = la.to_fmpq(c)
    coords = Ti * unit
    els = []
    off = 0
    for _, B in pieces:
        k = B.ncols()
        part = B * la.select(coords, list(range(off, off + k)), None)
        off += k
        els.append(Element(h, {i: la.to_fraction(part[i, 0]) for i in range(h.dim) if part[i, 0] != 0}))
    return IdempotentSystem(h, els, tuple(f"p{i + 1}" for i in range(len(els))))


# ---------------------------------------------------------------- projectives

@dataclass(frozen=True)
class ProjectiveClass:
    label: Label
    e: Element          # primitive idempotent
    z: Element          # socle element with z = z·e
    words: tuple        # words w with {w·e} a basis of A·e


def projective_classes(alg: HopfAlgebra) -> list:
    """One entry per isomorphism class of indecomposable projectives."""
    if "proj_classes" in alg._cache:
        return alg._cache["proj_classes"]
    system = standard_idempotents(alg)["e"]
    J = jacobson_radical(alg)
    out = []
    reps = []
    for e in system.elements:
        L = left_ideal(alg, e)
        if any(_same_projective(L, other) for other in reps):
            continue
        reps.append(L)
        emb = L.embedding
        cond = la.vstack([alg.left_mult_matrix(j.v) * emb for j in J])
        soc = emb * la.nullspace(cond)
        z = None
        for f in system.elements:
            for c in range(soc.ncols()):
                s = Element(alg, {k: la.to_fraction(soc[k, c]) for k in range(alg.dim) if soc[k, c] != 0})
                cand = f * s
                if cand.v:
                    z = cand
                    break
            if z is not None:
                break
        z = z / next(iter(z.v.values()))
        lab = next(p for p in (Label("P", 0, s) for s in allowed_signs(alg.name, "P"))
                   if _same_projective(L, build(p, alg)))
        words = tuple(alg.words[k] for k in la.pivot_columns(_ideal_candidates(alg, e)))
        out.append(ProjectiveClass(lab, e, z, words))
    alg._cache["proj_classes"] = out
    return out


def _ideal_candidates(alg: HopfAlgebra, e: Element) -> la.Matrix:
    mat = la.zeros(alg.dim, alg.dim)
    for col in range(alg.dim):
        for k, v in (alg.basis_vec(col) * e).v.items():
            mat[k, col] = la.to_fmpq(v)
    return mat


def _same_projective(a: ModuleRep, b: ModuleRep) -> bool:
    if a.dim != b.dim:
        return False
    a, b = weight_normalize(a), weight_normalize(b)
    return _trace_pairing_iso(a, b)


def _weight_groups(m: ModuleRep) -> dict:
    groups = defaultdict(list)
    for i, w in enumerate(m.weights()):
        groups[w].append(i)
    return groups


def _pivots_by_weight(cols: dict, wts: list) -> list:
    """Indices j (keys of ``cols``) whose sparse columns are independent, block by block."""
    by_w = defaultdict(list)
    for j in sorted(cols):
        by_w[wts[j]].append(j)
    out = []
    for js in by_w.values():
        rows = sorted(set().union(*(cols[j].keys() for j in js)))
        rpos = {r: k for k, r in enumerate(rows)}
        D = la.zeros(len(rows), len(js))
        for c, j in enumerate(js):
            for r, v in cols[j].items():
                D[rpos[r], c] = v
        out += [js[p] for p in la.pivot_columns(D)]
    return sorted(out)


def quotient(m: ModuleRep, qcols: list) -> ModuleRep:
    """m / span(qcols) in complementary standard coordinates.

    ``qcols`` are sparse, weight-homogeneous vectors; echelon forms are
    computed one weight block at a time.
    """
    wts = m.weights()
    groups = _weight_groups(m)
    by_w = defaultdict(list)
    for col in qcols:
        if col:
            by_w[wts[next(iter(col))]].append(col)
    c_all, piv_all, rows_R = [], [], {}
    for w, idx in groups.items():
        qc = by_w.get(w, [])
        if not qc:
            c_all += idx
            continue
        pos = {i: k for k, i in enumerate(idx)}
        D = la.zeros(len(qc), len(idx))
        for r, col in enumerate(qc):
            for i, v in col.items():
                D[r, pos[i]] = v
        R, piv = la.rref(D)
        if len(piv) != len(qc):
            raise ArithmeticError("projective summands are not independent")
        pset = set(piv)
        ent = R.entries()
        nc = R.ncols()
        for r, p in enumerate(piv):
            rows_R[idx[p]] = {idx[i]: ent[r * nc + i] for i in range(nc)
                              if i not in pset and ent[r * nc + i] != 0}
        piv_all += [idx[p] for p in piv]
        c_all += [i for k, i in enumerate(idx) if k not in pset]
    c_all.sort()
    cpos = {c: k for k, c in enumerate(c_all)}
    acts = {}
    for g, a in m.sparse.items():
        cols = []
        for cj in c_all:
            new: dict = {}
            for i, v in a.cols[cj].items():
                if i in cpos:
                    new[cpos[i]] = new.get(cpos[i], 0) + v
                else:
                    for c, rv in rows_R[i].items():
                        new[cpos[c]] = new.get(cpos[c], 0) - v * rv
            cols.append({k: v for k, v in new.items() if v != 0})
        acts[g] = la.SparseMatrix(len(c_all), cols)
    return ModuleRep(m.algebra, sparse=acts, weights=[wts[c] for c in c_all])


def peel_projectives(m: ModuleRep) -> tuple:
    """(Counter of projective labels, complement module) for named algebras."""
    m = weight_normalize(m)
    counts: Counter = Counter()
    alg = m.algebra
    if alg.name not in NAMED or m.dim == 0:
        return counts, m
    wts = m.weights()
    one = fmpq(1)
    qcols = []
    for pc in projective_classes(alg):
        zcols = {}
        for j in range(m.dim):
            v = m.apply(pc.z, {j: one})
            if v:
                zcols[j] = v
        if not zcols:
            continue
        piv = _pivots_by_weight(zcols, wts)
        counts[pc.label] += len(piv)
        for j in piv:
            v = m.apply(pc.e, {j: one})
            qcols += [m.apply_word(w, v) for w in pc.words]
    if not qcols:
        return counts, m
    return counts, quotient(m, qcols)


# ---------------------------------------------------------------- fingerprints

def _radical_images(m: ModuleRep) -> list:
    return [m.act(j) for j in jacobson_radical(m.algebra)]


def fingerprint(m: ModuleRep) -> Fingerprint:
    m = weight_normalize(m)
    alg = m.algebra
    n = m.dim
    Js = _radical_images(m)
    layers = []
    cur = la.identity(n)
    while cur.ncols():
        nxt = la.column_basis(la.hstack([j * cur for j in Js]))
        layers.append(nxt)
        cur = nxt
    rad = layers[0]
    soc = la.nullspace(la.vstack(Js)) if Js else la.identity(n)
    xr = la.rank(m.actions["x"]) if "x" in m.actions else 0
    yr = la.rank(m.actions["y"]) if "y" in m.actions else 0
    eta = _band_eta(m, rad) if len(layers) == 2 and alg.name in NAMED else None
    return Fingerprint(n, tuple(sorted(m.weight_counts().items())), n - rad.ncols(), soc.ncols(),
                       xr, yr, len(layers), eta)


def _top_maps(m: ModuleRep, rad: la.Matrix):
    _, piv = la.rref(rad.transpose())
    top = [i for i in range(m.dim) if i not in set(piv)]
    out = []
    for g in ("x", "y"):
        img = la.select(m.actions[g], None, top)
        sol = la.solve(rad, img)
        if sol is la.NO_SOLUTION:
            return None
        out.append(sol)
    return out


def _band_eta(m: ModuleRep, rad: la.Matrix):
    if rad.ncols() * 2 != m.dim:
        return None
    maps = _top_maps(m, rad)
    if maps is None:
        return None
    X, Y = maps
    if X.nrows() != X.ncols() or la.rank(X) < X.nrows():
        return None
    K = X.inv() * Y
    t = K.nrows()
    tr = la.trace(K * K) if m.algebra.name == "HH" else la.trace(K)
    eta = la.to_fraction(tr) / t
    return eta or None


# ---------------------------------------------------------------- aliasing

_ALIAS_SAMPLE_RANKS = (1, 2, 3, 4)
_ALIAS_SAMPLE_ETAS = (Fraction(1), Fraction(2), Fraction(-1))


def _alias_samples(family: str) -> list:
    if family in ("S", "P"):
        return [Label(family, 0, (1, 1))]
    if family == "C":
        return [Label("C", r, (1, 1), eta) for r in _ALIAS_SAMPLE_RANKS for eta in _ALIAS_SAMPLE_ETAS]
    return [Label(family, r) for r in _ALIAS_SAMPLE_RANKS]


def alias_sweep(algebra: str) -> dict:
    """family -> {sample label: frozenset of sign twists t with X ≅ X_t}."""
    alg = build_algebra(algebra)
    out = {}
    for fam in FAMILIES:
        per = {}
        for base in _alias_samples(fam):
            if algebra == "DH4" and fam == "P":
                # P(+,+)/P(-,-) and P(+,-)/P(-,+) are separate orbits
                bases = [base, Label("P", 0, (1, -1))]
            else:
                bases = [base]
            for b in bases:
                mod = build(b, alg)
                found = set()
                for t in allowed_signs(algebra, fam):
                    other = build(b.twist(t), alg)
                    if _iso_exact(mod, other):
                        found.add(t)
                per[b] = frozenset(found)
        out[fam] = per
    return out


@lru_cache(maxsize=None)
def alias_table(algebra: str) -> dict:
    """family -> frozenset of sign twists fixing the isomorphism class (uniform over the sweep)."""
    sweep = alias_sweep(algebra)
    table = {}
    for fam, per in sweep.items():
        groups = set(per.values())
        if len(groups) != 1:
            raise ArithmeticError(f"non-uniform sign aliasing for {fam} over {algebra}")
        table[fam] = next(iter(groups))
    return table


def canonicalize(label: Label, algebra: str) -> Label:
    if algebra not in NAMED:
        return label
    group = alias_table(algebra)[label.family]
    return min(label.twist(t) for t in group)


def canonical_labels(algebra: str, dim: int, etas=()) -> list:
    """Canonical labels of the given dimension (bands with the listed η)."""
    out = set()
    fams = []
    if dim == 1:
        fams.append(Label("S", 0))
    if dim in (2, 4):
        fams.append(Label("P", 0))
    if dim % 2 == 1 and dim > 1:
        r = (dim - 1) // 2
        fams += [Label("M", r), Label("W", r)]
    if dim % 2 == 0 and dim > 0:
        r = dim // 2
        fams += [Label("N", r), Label("Nprime", r)]
        rc = dim // 4 if algebra == "HH" else dim // 2
        if rc >= 1 and label_dim(Label("C", rc, (1, 1), Fraction(1)), algebra) == dim:
            fams += [Label("C", rc, (1, 1), Fraction(e)) for e in etas if e]
    for base in fams:
        for s in allowed_signs(algebra, base.family):
            lab = base.twist(s)
            if label_dim(lab, algebra) == dim:
                out.add(canonicalize(lab, algebra))
    return sorted(out)


@lru_cache(maxsize=None)
def canonical_fingerprint(algebra: str, label: Label) -> Fingerprint:
    return fingerprint(build(label, algebra))


# ---------------------------------------------------------------- iso & identify

def _trace_pairing_iso(m: ModuleRep, n: ModuleRep) -> bool:
    """Exact test when n is indecomposable and dim m = dim n."""
    if m.dim != n.dim:
        return False
    h1 = hom_space(m, n)
    if h1.dim == 0:
        return False
    h2 = hom_space(n, m)
    return not la.is_zero(_pairing_gram(h1, h2))


def _iso_exact(m: ModuleRep, n: ModuleRep) -> bool:
    m, n = weight_normalize(m), weight_normalize(n)
    if m.dim != n.dim or m.weight_counts() != n.weight_counts():
        return False
    return _trace_pairing_iso(m, n)


def identify(m: ModuleRep, certified_indecomposable: bool = True) -> Label:
    m = weight_normalize(m)
    alg = m.algebra
    if alg.name not in NAMED:
        raise IdentificationFailure(f"no label list for {alg.name}")
    if not certified_indecomposable and not is_indecomposable(m):
        raise IdentificationFailure("module is decomposable")
    fp = fingerprint(m)
    etas = [fp.band_eta] if fp.band_eta is not None else []
    for lab in canonical_labels(alg.name, m.dim, etas):
        if canonical_fingerprint(alg.name, lab) != fp:
            continue
        if _trace_pairing_iso(m, build(lab, alg)):
            return lab
    raise IdentificationFailure(f"no canonical label matches fingerprint {fp}")


def find_isomorphism(m: ModuleRep, n: ModuleRep, seed: int = 0, tries: int = 8):
    """An invertible intertwiner T (n-basis × m-basis) with T·m = n·T, or None."""
    m, n = weight_normalize(m), weight_normalize(n)
    if m.dim != n.dim or m.weight_counts() != n.weight_counts():
        return None
    hs = hom_space(m, n)
    if hs.dim == 0:
        return None
    rng = random.Random(seed)
    for k in range(tries):
        coeffs = [1] * hs.dim if k == 0 else [rng.randint(-5, 5) for _ in range(hs.dim)]
        T = hs.element(coeffs)
        if la.det(T) != 0:
            return T
    if hs.dim <= 2:
        # det of a generic combination is a polynomial of degree <= dim; a grid
        # with dim+1 points per variable certifies vanishing
        pts = range(m.dim + 1)
        for coeffs in itertools.product(pts, repeat=hs.dim):
            T = hs.element(coeffs)
            if la.det(T) != 0:
                return T
        return None
    for _ in range(32):
        T = hs.element([rng.randint(-50, 50) for _ in range(hs.dim)])
        if la.det(T) != 0:
            return T
    return None


def certified_isomorphism(m: ModuleRep, n: ModuleRep, seed: int = 0):
    """(T, verified): an intertwiner found by search and an independent check of it.

    The check recomputes T·a = b·T for every algebra generator and det T != 0, in the
    weight-diagonal bases of m and n.
    """
    T = find_isomorphism(m, n, seed)
    if T is None:
        return None, False
    m, n = weight_normalize(m), weight_normalize(n)
    ok = la.det(T) != 0 and all(T * m.actions[g] == n.actions[g] * T for g in m.algebra.generators)
    return T, ok


def iso_check(m: ModuleRep, n: ModuleRep, seed: int = 0) -> bool:
    if m.algebra is not n.algebra:
        raise ValueError("modules over different algebras")
    m, n = weight_normalize(m), weight_normalize(n)
    if m.dim != n.dim or m.weight_counts() != n.weight_counts():
        return False
    if find_isomorphism(m, n, seed) is not None:
        return True
    if m.algebra.name in NAMED:
        return decompose(m, seed).counts() == decompose(n, seed).counts()
    return False


# ---------------------------------------------------------------- decompose

def decompose(m: ModuleRep, seed: int = 0, input: str | None = None) -> Decomposition:
    alg = m.algebra
    m = weight_normalize(m)
    if m.dim == 0:
        return Decomposition(alg.name, 0, (), seed, input)
    counts, rest = peel_projectives(m)
    labels = list(counts.elements())
    for piece, _ in split_fully(rest, seed):
        labels.append(identify(piece))
    out = Decomposition(alg.name, m.dim, tuple(sorted(labels)), seed, input)
    if not out.dims_ok():
        raise ArithmeticError("summand dimensions do not add up")
    return out
