"""Module representations, canonical constructors and tensor products."""
from __future__ import annotations

import json
from collections import deque
from fractions import Fraction

from flint import fmpq

from . import linalg as la
from .hopf import Element, HopfAlgebra, build_algebra, standard_idempotents
from .labels import Label, allowed_signs, format_label

F = Fraction


class ModuleRep:
    """A finite-dimensional left module given by generator actions.

    Actions are held densely (``actions``) or column-sparse (``sparse``);
    either view is derived from the other on demand.
    """

    def __init__(self, algebra: HopfAlgebra, actions: dict | None = None,
                 embedding: la.Matrix | None = None, basis_names: tuple | None = None,
                 *, sparse: dict | None = None, weights: list | None = None):
        if actions is None and sparse is None:
            raise ValueError("module needs actions")
        self.algebra = algebra
        self._dense = dict(actions) if actions is not None else None
        self._sparse = dict(sparse) if sparse is not None else None
        self.embedding = embedding
        self.basis_names = basis_names
        self._cache: dict = {}
        if weights is not None:
            self._cache["weights"] = list(weights)

    @property
    def actions(self) -> dict:
        if self._dense is None:
            self._dense = {g: a.to_dense() for g, a in self._sparse.items()}
        return self._dense

    @property
    def sparse(self) -> dict:
        if self._sparse is None:
            self._sparse = {g: la.SparseMatrix.from_dense(a) for g, a in self._dense.items()}
        return self._sparse

    @property
    def dim(self) -> int:
        if self._dense is not None:
            return next(iter(self._dense.values())).nrows() if self._dense else 0
        return next(iter(self._sparse.values())).nrows if self._sparse else 0

    def act_word(self, word: tuple) -> la.Matrix:
        word = tuple(word)
        if word in self._cache:
            return self._cache[word]
        if not word:
            m = la.identity(self.dim)
        elif len(word) == 1:
            m = self.actions[word[0]]
        else:
            m = self.act_word(word[:-1]) * self.actions[word[-1]]
        self._cache[word] = m
        return m

    def act_basis(self, k: int) -> la.Matrix:
        return self.act_word(self.algebra.words[k])

    def act(self, element) -> la.Matrix:
        v = element.v if isinstance(element, Element) else element
        out = la.zeros(self.dim, self.dim)
        for k, c in v.items():
            out += self.act_basis(k) * la.to_fmpq(c)
        return out

    def sparse_word(self, word: tuple) -> la.SparseMatrix:
        key = ("sparse", tuple(word))
        if key not in self._cache:
            if not word:
                m = la.SparseMatrix(self.dim, [{j: fmpq(1)} for j in range(self.dim)])
            else:
                first = self.sparse[word[0]]
                rest = self.sparse_word(word[1:])
                m = la.SparseMatrix(self.dim, [first.matvec(c) for c in rest.cols])
            self._cache[key] = m
        return self._cache[key]

    def apply(self, element, vec: dict) -> dict:
        """element · vec for a sparse vector {index: value}."""
        v = element.v if isinstance(element, Element) else element
        out: dict = {}
        for k, c in v.items():
            w = vec
            for letter in reversed(self.algebra.words[k]):
                w = self.sparse[letter].matvec(w)
            cq = la.to_fmpq(c)
            for i, a in w.items():
                t = out.get(i, 0) + cq * a
                if t == 0:
                    out.pop(i, None)
                else:
                    out[i] = t
        return out

    def apply_word(self, word: tuple, vec: dict) -> dict:
        for letter in reversed(word):
            vec = self.sparse[letter].matvec(vec)
        return vec

    def weights(self) -> list:
        """Joint (g, h) eigenvalue per basis vector; requires diagonal group-likes."""
        if "weights" not in self._cache:
            diags = []
            for g in self.algebra.grouplikes:
                if self._dense is None:
                    a = self._sparse[g]
                    if not a.is_diagonal():
                        raise ValueError("group-like actions are not diagonal in this basis")
                    diags.append([int(v) for v in a.diagonal()])
                else:
                    a = self._dense[g]
                    if not la.is_diagonal(a):
                        raise ValueError("group-like actions are not diagonal in this basis")
                    diags.append([int(v) for v in la.diagonal(a)])
            self._cache["weights"] = [tuple(d[i] for d in diags) for i in range(self.dim)]
        return self._cache["weights"]

    def has_diagonal_weights(self) -> bool:
        try:
            self.weights()
        except ValueError:
            return False
        return True

    def weight_counts(self) -> dict:
        out: dict = {}
        for w in self.weights():
            out[w] = out.get(w, 0) + 1
        return out

    def to_json(self) -> dict:
        return {"algebra": self.algebra.name, "dim": self.dim,
                "generators": {g: la.matrix_to_strings(a) for g, a in sorted(self.actions.items())},
                "basis": list(self.basis_names) if self.basis_names else None}

    def to_dot(self, name: str = "module") -> str:
        names = self.basis_names or tuple(f"b{i + 1}" for i in range(self.dim))
        try:
            wts = self.weights()
        except ValueError:
            wts = None
        lines = [f"digraph {json.dumps(name)} {{", "  rankdir=TB;"]
        for i, n in enumerate(names):
            lab = n
            if wts is not None:
                lab += " (" + ",".join("+" if s > 0 else "-" for s in wts[i]) + ")"
            lines.append(f"  {json.dumps(n)} [label={json.dumps(lab)}];")
        styles = {"x": "solid", "y": "dashed", "b": "solid"}
        for g in sorted(self.actions):
            if g in self.algebra.grouplikes:
                continue
            rows = la.to_rows(self.actions[g])
            for j in range(self.dim):
                for i in range(self.dim):
                    c = rows[i][j]
                    if c:
                        attrs = [f"style={styles.get(g, 'dotted')}"]
                        if c != 1:
                            attrs.append(f"label={json.dumps(la.fraction_str(c))}")
                        lines.append(f"  {json.dumps(names[j])} -> {json.dumps(names[i])} [{', '.join(attrs)}];")
        lines.append("}")
        return "\n".join(lines)


def module_from_json(d: dict) -> ModuleRep:
    alg = build_algebra(d["algebra"])
    acts = {g: la.matrix_from_strings(rows) for g, rows in d["generators"].items()}
    names = tuple(d["basis"]) if d.get("basis") else None
    return ModuleRep(alg, acts, basis_names=names)


# ---------------------------------------------------------------- helpers

def _weight_flip(alg: HopfAlgebra, gen: str) -> tuple:
    """Factor by which ``gen`` multiplies each group-like eigenvalue."""
    out = []
    for g in alg.grouplikes:
        gv = alg.generators[g]
        xv = alg.generators[gen]
        gx = alg.mul(gv, xv)
        xg = alg.mul(xv, gv)
        if gx == xg:
            out.append(1)
        elif gx == {k: -c for k, c in xg.items()}:
            out.append(-1)
        else:
            raise ValueError(f"{gen} is not homogeneous for {g}")
    return tuple(out)


def from_edges(alg: HopfAlgebra, names: list, edges: list, start_weight: tuple) -> ModuleRep:
    """Module with basis ``names``; ``edges`` are (generator, src, tgt, coef).

    Group-like eigenvalues are propagated from the first basis vector.
    """
    n = len(names)
    idx = {nm: i for i, nm in enumerate(names)}
    flips = {g: _weight_flip(alg, g) for g in alg.generators if g not in alg.grouplikes}
    wt: dict = {0: tuple(start_weight)}
    adj: dict = {i: [] for i in range(n)}
    for g, s, t, _ in edges:
        adj[idx[s]].append((idx[t], flips[g]))
        adj[idx[t]].append((idx[s], flips[g]))
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for j, fl in adj[i]:
            w = tuple(a * b for a, b in zip(wt[i], fl))
            if j in wt:
                if wt[j] != w:
                    raise ValueError("inconsistent weights along diagram")
            else:
                wt[j] = w
                queue.append(j)
    if len(wt) != n:
        raise ValueError("diagram is not connected")
    acts = {}
    for k, g in enumerate(alg.grouplikes):
        acts[g] = la.diag([wt[i][k] for i in range(n)])
    for g in alg.generators:
        if g not in alg.grouplikes:
            acts[g] = la.zeros(n, n)
    for g, s, t, c in edges:
        acts[g][idx[t], idx[s]] += la.to_fmpq(F(c))
    return ModuleRep(alg, acts, basis_names=tuple(names))


def _alg(h) -> HopfAlgebra:
    return build_algebra(h) if isinstance(h, str) else h


# ---------------------------------------------------------------- constructors

def simple(h, signs: tuple) -> ModuleRep:
    alg = _alg(h)
    signs = tuple(signs)
    if alg.name == "DH4" and signs[0] != signs[1]:
        raise ValueError("DH4 has one-dimensional modules only for equal signs (xy+yx=1-gh)")
    acts = {g: la.matrix([[s]]) for g, s in zip(alg.grouplikes, signs)}
    for g in alg.generators:
        if g not in alg.grouplikes:
            acts[g] = la.zeros(1, 1)
    return ModuleRep(alg, acts, basis_names=("u",))


def left_ideal(h, e) -> ModuleRep:
    """The left ideal A·e with basis chosen greedily from (basis word)·e."""
    alg = _alg(h)
    e = alg.el(e)
    cands = [alg.basis_vec(k) * e for k in range(alg.dim)]
    mat = la.zeros(alg.dim, alg.dim)
    for col, c in enumerate(cands):
        for k, v in c.v.items():
            mat[k, col] = la.to_fmpq(v)
    piv = la.pivot_columns(mat)
    emb = la.select(mat, None, piv)
    rows = la.pivot_columns(emb.transpose())
    acts = {}
    for g, gv in alg.generators.items():
        acts[g] = la.restrict(alg.left_mult_matrix(gv), emb, rows)
    names = tuple(("" if alg.basis_labels[k] == "1" else alg.basis_labels[k]) + "e" for k in piv)
    return ModuleRep(alg, acts, embedding=emb, basis_names=names)


def regular_module(h) -> ModuleRep:
    alg = _alg(h)
    acts = {g: alg.left_mult_matrix(v) for g, v in alg.generators.items()}
    return ModuleRep(alg, acts, embedding=la.identity(alg.dim), basis_names=alg.basis_labels)


def projective_idempotent(h, signs: tuple) -> Element:
    alg = _alg(h)
    s1, s2 = signs
    if alg.name == "DH4":
        es = standard_idempotents(alg)["e"].elements
        return {(1, 1): es[0], (-1, -1): es[1], (1, -1): es[2], (-1, 1): es[4]}[tuple(signs)]
    g, hh = alg.gen("g"), alg.gen("h")
    return (1 + s1 * g) * (1 + s2 * hh) / 4


def projective(h, signs: tuple) -> ModuleRep:
    return left_ideal(h, projective_idempotent(h, signs))


def _rank_check(r: int) -> None:
    if r < 1:
        raise ValueError("rank must be positive")


def string_module(h, family: str, r: int) -> ModuleRep:
    alg = _alg(h)
    _rank_check(r)
    if alg.name not in ("mabar", "DH4", "HH"):
        raise ValueError("string modules are defined for mabar, DH4, HH")
    hh = alg.name == "HH"
    nu = {"M": r, "W": r + 1, "N": r, "Nprime": r}[family]
    nv = {"M": r + 1, "W": r, "N": r, "Nprime": r}[family]
    U = [f"u{i}" for i in range(1, nu + 1)]
    V = [f"v{i}" for i in range(1, nv + 1)]
    edges = []

    def add(g, i, j):
        if 1 <= i <= nu and 1 <= j <= nv:
            edges.append((g, f"u{i}", f"v{j}", 1))

    for i in range(1, nu + 1):
        if family in ("M",) or (family == "N" and hh):
            add("x", i, i)
            add("y", i, i + 1)
        elif family == "N":
            add("x", i, i)
            add("y", i, i - 1)
        elif family == "W" and not hh:
            add("x", i, i)
            add("y", i, i - 1)
        else:  # W over HH, N' everywhere
            add("y", i, i)
            add("x", i, i - 1)
    return from_edges(alg, U + V, edges, (1, 1))


def band_module(h, r: int, eta) -> ModuleRep:
    alg = _alg(h)
    _rank_check(r)
    eta = F(eta)
    if eta == 0:
        raise ValueError("eta must be nonzero")
    edges = []
    if alg.name == "HH":
        n = 2 * r
        for j in range(1, n + 1):
            edges.append(("x", f"u{j}", f"v{j}", 1))
        for i in range(1, r + 1):
            edges.append(("y", f"u{2 * i - 1}", f"v{2 * i}", eta))
            if i > 1:
                edges.append(("y", f"u{2 * i - 1}", f"v{2 * i - 2}", 1))
            edges.append(("y", f"u{2 * i}", f"v{2 * i - 1}", 1))
        start = (-1, -1)
    elif alg.name in ("mabar", "DH4"):
        n = r
        for i in range(1, r + 1):
            edges.append(("x", f"u{i}", f"v{i}", 1))
            edges.append(("y", f"u{i}", f"v{i}", eta))
            if i > 1:
                edges.append(("y", f"u{i}", f"v{i - 1}", 1))
        start = (1, 1)
    else:
        raise ValueError("band modules are defined for mabar, DH4, HH")
    names = [f"u{i}" for i in range(1, n + 1)] + [f"v{i}" for i in range(1, n + 1)]
    return from_edges(alg, names, edges, start)


def tensor(m: ModuleRep, n: ModuleRep) -> ModuleRep:
    if m.algebra is not n.algebra:
        raise ValueError("modules over different algebras")
    alg = m.algebra
    acts = {}
    for g, gv in alg.generators.items():
        out = None
        for (i, j), c in alg.comul(gv).items():
            term = m.sparse_word(alg.words[i]).kron(n.sparse_word(alg.words[j]))
            if c != 1:
                term = term.scale(la.to_fmpq(c))
            out = term if out is None else out.add(term)
        acts[g] = out
    names = None
    if m.basis_names and n.basis_names:
        names = tuple(f"{a}*{b}" for a in m.basis_names for b in n.basis_names)
    weights = None
    if m.has_diagonal_weights() and n.has_diagonal_weights() and all(
            alg.comul(alg.generators[g]) == {(alg.index(g), alg.index(g)): 1} for g in alg.grouplikes):
        weights = [tuple(a * b for a, b in zip(u, v)) for u in m.weights() for v in n.weights()]
    return ModuleRep(alg, sparse=acts, basis_names=names, weights=weights)


def sign_twist(m: ModuleRep, signs: tuple) -> ModuleRep:
    if tuple(signs) == (1, 1):
        return m
    t = tensor(m, simple(m.algebra, signs))
    t.basis_names = m.basis_names
    return t


def direct_sum(mods: list) -> ModuleRep:
    alg = mods[0].algebra
    dims = [m.dim for m in mods]
    n = sum(dims)
    acts = {}
    for g in alg.generators:
        a = la.zeros(n, n)
        off = 0
        for m, d in zip(mods, dims):
            ent = m.actions[g].entries()
            for k, v in enumerate(ent):
                if v != 0:
                    a[off + k // d, off + k % d] = v
            off += d
        acts[g] = a
    return ModuleRep(alg, acts)


def change_basis(m: ModuleRep, T: la.Matrix) -> ModuleRep:
    """Module with actions T⁻¹ A T."""
    Ti = T.inv()
    return ModuleRep(m.algebra, {g: Ti * a * T for g, a in m.actions.items()})


def build(label: Label, h) -> ModuleRep:
    alg = _alg(h)
    f = label.family
    if alg.name == "DH4" and label.signs not in allowed_signs("DH4", f):
        raise ValueError(f"{format_label(label)} is not a DH4 label")
    if f == "S":
        return simple(alg, label.signs)
    if f == "P":
        return projective(alg, label.signs)
    if f == "C":
        base = band_module(alg, label.rank, label.eta)
    else:
        base = string_module(alg, f, label.rank)
    return sign_twist(base, label.signs)


# ---------------------------------------------------------------- validation

def validate_module(m: ModuleRep) -> dict:
    alg = m.algebra
    pres = alg.presentation
    rep: dict = {}
    n = m.dim
    ident = la.identity(n)
    rep["unit"] = m.act_word(()) == ident
    if pres is None:
        raise ValueError("validation needs a presented algebra")
    for (a, b), rhs in pres.rules.items():
        lhs = m.actions[a] * m.actions[b]
        r = la.zeros(n, n)
        for c, w in rhs:
            r += _word_matrix(m, w) * la.to_fmpq(c)
        text = "+".join(f"{c}*{''.join(w) or '1'}" for c, w in rhs) or "0"
        rep[f"{a}{b}={text}"] = lhs == r
    if m.embedding is not None:
        E = m.embedding
        rep["left_ideal_closure"] = all(
            alg.left_mult_matrix(gv) * E == E * m.actions[g] for g, gv in alg.generators.items())
    return rep


def _word_matrix(m: ModuleRep, w) -> la.Matrix:
    out = la.identity(m.dim)
    for letter in w:
        out = out * m.actions[letter]
    return out


def is_valid(m: ModuleRep) -> bool:
    return all(validate_module(m).values())
