"""Nichols algebras of braided vector spaces: symmetrizers, skew derivations, graded dimensions.

Tensors of degree k are sparse dicts keyed by words (tuples of letters in
range(dim)). The braiding acts on adjacent letters.

Two independent routes give dim B^k:

* the derivation tower realizes B^k inside B^(k-1) (x) V as the image of
  x -> (pi_(k-1) d_f(x))_f, so every matrix stays small;
* the symmetrizer Q_k = (Q_(k-1) (x) id)(id + c_(k-1) + c_(k-1)c_(k-2) + ...)
  is applied column by column, blockwise by multidegree when c is diagonal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cyclo import CycMatrix, CycScalar, one, rank, rref, zero
from .hopf_core import vadd
from .transport import BraidedSpace

DEFAULT_BUDGET = 4096


class CapacityError(RuntimeError):
    """The requested computation exceeds the configured tensor-dimension budget."""


# ---------------------------------------------------------------------------
# braid words


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple  # generator indices, 1 <= i <= strands - 1

    def __post_init__(self):
        for a in self.letters:
            if not 1 <= a < self.strands:
                raise ValueError(f"letter {a} out of range for {self.strands} strands")

    def __len__(self):
        return len(self.letters)


def perm_of_word(word: BraidWord) -> tuple:
    """Underlying permutation; letter i swaps positions i-1 and i, applied right to left."""
    p = list(range(word.strands))
    for a in reversed(word.letters):
        p[a - 1], p[a] = p[a], p[a - 1]
    return tuple(p)


def inversions(perm) -> int:
    return sum(1 for a, b in itertools.combinations(range(len(perm)), 2) if perm[a] > perm[b])


def matsumoto(perm) -> BraidWord:
    """Canonical reduced word (bubble sort) lifted to a positive braid."""
    p = list(perm)
    n = len(p)
    letters = []
    changed = True
    while changed:
        changed = False
        for a in range(n - 1):
            if p[a] > p[a + 1]:
                p[a], p[a + 1] = p[a + 1], p[a]
                letters.append(a + 1)
                changed = True
    word = BraidWord(n, tuple(letters))
    if perm_of_word(word) != tuple(perm):  # pragma: no cover - guards the orientation
        raise AssertionError("reduced word does not represent the permutation")
    return word


def reduced_word_from_right(perm) -> BraidWord:
    """A second reduced word: sort by moving the largest entry right first."""
    p = list(perm)
    n = len(p)
    letters = []
    for top in range(n - 1, 0, -1):
        pos = p.index(top)
        while pos < top:
            p[pos], p[pos + 1] = p[pos + 1], p[pos]
            letters.append(pos + 1)
            pos += 1
    return BraidWord(n, tuple(letters))


# ---------------------------------------------------------------------------
# sparse tensor calculus


def diagonal_braiding(q: list[list[CycScalar]]) -> BraidedSpace:
    """c(v_a (x) v_b) = q[a][b] v_b (x) v_a."""
    d = len(q)
    N = q[0][0].order
    c = CycMatrix.zeros(N, d * d, d * d)
    entries = [list(row) for row in c.entries]
    for a in range(d):
        for b in range(d):
            entries[b * d + a][a * d + b] = q[a][b].embed(N)
    return BraidedSpace(d, CycMatrix(N, entries))


def braid_table(B: BraidedSpace) -> dict:
    """(a, b) -> list of ((u, s), coefficient) with c(v_a v_b) = sum coef v_u v_s."""
    d = B.dim
    tab: dict = {}
    for a in range(d):
        for b in range(d):
            col = B.c.column(a * d + b)
            tab[(a, b)] = [(divmod(row, d), c) for row, c in enumerate(col) if not c.is_zero()]
    return tab


def _clean(v: dict) -> dict:
    return {k: c for k, c in v.items() if not c.is_zero()}


def apply_c(tab: dict, vec: dict, pos: int) -> dict:
    """c acting on letters pos-1, pos (1-based generator index)."""
    out: dict = {}
    for w, a in vec.items():
        for (u, s), c in tab[(w[pos - 1], w[pos])]:
            nw = w[: pos - 1] + (u, s) + w[pos + 1 :]
            vadd(out, nw, a * c)
    return _clean(out)


def apply_braid_word(tab: dict, word: BraidWord, vec: dict) -> dict:
    for a in reversed(word.letters):
        vec = apply_c(tab, vec, a)
    return vec


def apply_shuffle(tab: dict, vec: dict, k: int) -> dict:
    """T_k = id + c_(k-1) (T_(k-1) (x) id) on the first k letters."""
    if k <= 1:
        return dict(vec)
    inner = apply_shuffle(tab, vec, k - 1)
    out = dict(vec)
    for w, c in apply_c(tab, inner, k - 1).items():
        vadd(out, w, c)
    return _clean(out)


def words(d: int, k: int) -> list[tuple]:
    return list(itertools.product(range(d), repeat=k))


def _budget_check(size: int, budget: int, what: str) -> None:
    if size > budget:
        raise CapacityError(f"{what}: dimension {size} exceeds budget {budget}")


def _matrix_from_columns(N: int, rows_index: dict, cols: list[dict]) -> CycMatrix:
    z = zero(N)
    entries = [[z] * len(cols) for _ in range(len(rows_index))]
    for j, col in enumerate(cols):
        for w, c in col.items():
            entries[rows_index[w]][j] = c
    return CycMatrix(N, entries)


# ---------------------------------------------------------------------------
# symmetrizer


def symmetrizer_bruteforce(B: BraidedSpace, k: int, budget: int = DEFAULT_BUDGET) -> CycMatrix:
    """Sum over S_k of the Matsumoto lifts. Oracle only; cost grows like k!."""
    d = B.dim
    _budget_check(d**k, budget, "symmetrizer_bruteforce")
    tab = braid_table(B)
    basis = words(d, k)
    index = {w: i for i, w in enumerate(basis)}
    cols = []
    perms = [matsumoto(p) for p in itertools.permutations(range(k))]
    for w in basis:
        acc: dict = {}
        for word in perms:
            for u, c in apply_braid_word(tab, word, {w: one(B.order)}).items():
                vadd(acc, u, c)
        cols.append(_clean(acc))
    return _matrix_from_columns(B.order, index, cols)


class Symmetrizer:
    """Columns of Q_k via Q_k e_w = sum over T_k e_w = y (x) v of Q_(k-1)(y) (x) v."""

    def __init__(self, B: BraidedSpace):
        self.B = B
        self.tab = braid_table(B)
        self._memo: dict = {}

    def column(self, w: tuple) -> dict:
        got = self._memo.get(w)
        if got is not None:
            return got
        k = len(w)
        if k <= 1:
            res = {w: one(self.B.order)}
        else:
            res = {}
            for u, c in apply_shuffle(self.tab, {w: one(self.B.order)}, k).items():
                for y, e in self.column(u[:-1]).items():
                    vadd(res, y + u[-1:], c * e)
            res = _clean(res)
        self._memo[w] = res
        return res

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        for w, a in vec.items():
            for u, c in self.column(w).items():
                vadd(out, u, a * c)
        return _clean(out)

    def matrix(self, basis: list[tuple]) -> CycMatrix:
        index = {w: i for i, w in enumerate(basis)}
        return _matrix_from_columns(self.B.order, index, [self.column(w) for w in basis])


def multidegree_blocks(d: int, k: int) -> list[list[tuple]]:
    blocks: dict = {}
    for w in words(d, k):
        key = tuple(w.count(a) for a in range(d))
        blocks.setdefault(key, []).append(w)
    return list(blocks.values())


def symmetrizer_block_ranks(B: BraidedSpace, k: int, budget: int = DEFAULT_BUDGET) -> dict:
    """Rank of Q_k on each multidegree block (diagonal braidings only)."""
    if not B.is_diagonal():
        raise ValueError("block decomposition needs a diagonal braiding")
    Q = Symmetrizer(B)
    out = {}
    for block in multidegree_blocks(B.dim, k):
        _budget_check(len(block), budget, "symmetrizer block")
        key = tuple(block[0].count(a) for a in range(B.dim))
        out[key] = rank(Q.matrix(block))
    return out


def symmetrizer_rank(B: BraidedSpace, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """dim B^k(V) as the rank of the factorized symmetrizer."""
    if k == 0:
        return 1
    if B.is_diagonal():
        return sum(symmetrizer_block_ranks(B, k, budget).values())
    _budget_check(B.dim**k, budget, "symmetrizer")
    return rank(Symmetrizer(B).matrix(words(B.dim, k)))


# ---------------------------------------------------------------------------
# skew derivations


class SkewDerivations:
    """d_i for the dual basis functionals, from the twisted Leibniz rule.

    d_i(1) = 0, d_i(v) = delta, and d_i(x v) = x d_i(v) + sum_j d_j(x) y_j where
    the pair (f_j, y_j) comes from moving f_i past v: the coefficient of
    f_a (x) v_u is that of v_u (x) v_i in c(v_a (x) v).
    """

    def __init__(self, B: BraidedSpace):
        self.B = B
        d = B.dim
        tab = braid_table(B)
        # move[(v, i)] = list of (a, u, coef)
        self.move: dict = {}
        for a in range(d):
            for v in range(d):
                for (u, s), c in tab[(a, v)]:
                    self.move.setdefault((v, s), []).append((a, u, c))
        self._memo: dict = {}

    def of_word(self, i: int, w: tuple) -> dict:
        key = (i, w)
        got = self._memo.get(key)
        if got is not None:
            return got
        N = self.B.order
        if not w:
            res: dict = {}
        elif len(w) == 1:
            res = {(): one(N)} if w[0] == i else {}
        else:
            x, v = w[:-1], w[-1]
            res = {x: one(N)} if v == i else {}
            for a, u, c in self.move.get((v, i), []):
                for y, e in self.of_word(a, x).items():
                    vadd(res, y + (u,), c * e)
            res = _clean(res)
        self._memo[key] = res
        return res

    def apply(self, i: int, vec: dict) -> dict:
        out: dict = {}
        for w, a in vec.items():
            for u, c in self.of_word(i, w).items():
                vadd(out, u, a * c)
        return _clean(out)


def skew_derivation(B: BraidedSpace, i: int):
    """The operator family d_i as a callable on sparse tensors of any degree."""
    D = SkewDerivations(B)
    return lambda vec: D.apply(i, vec)


def derivation_by_shuffle(B: BraidedSpace, i: int, vec: dict) -> dict:
    """(id (x) v_i*) T_k, the closed form of d_i used as a cross-check."""
    tab = braid_table(B)
    out: dict = {}
    for w, a in vec.items():
        for u, c in apply_shuffle(tab, {w: one(B.order)}, len(w)).items():
            if u[-1] == i:
                vadd(out, u[:-1], a * c)
    return _clean(out)


# ---------------------------------------------------------------------------
# derivation tower


@dataclass
class GradedDims:
    dims: list
    truncated: bool

    @property
    def total(self) -> int | None:
        return sum(self.dims) if self.truncated else None

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "truncated": self.truncated, "total": self.total}


@dataclass
class Tower:
    """B^k as a subspace of B^(k-1) (x) V.

    ``incl[k]`` has the basis of B^k as columns (coordinates on B^(k-1) (x) V,
    index b*d + v); ``proj[k]`` maps B^(k-1) (x) V onto those coordinates.
    """

    B: BraidedSpace
    incl: list = field(default_factory=list)
    proj: list = field(default_factory=list)

    def dim(self, k: int) -> int:
        return self.incl[k].cols

    @property
    def top(self) -> int:
        return len(self.incl) - 1

    def project_word(self, w: tuple, memo: dict | None = None) -> list[CycScalar]:
        """Coordinates in B^k of the class of a word of length k."""
        memo = {} if memo is None else memo
        got = memo.get(w)
        if got is not None:
            return got
        d = self.B.dim
        k = len(w)
        if k == 0:
            res = [one(self.B.order)]
        elif k > self.top:
            raise ValueError(f"tower only built to degree {self.top}")
        else:
            prev = self.project_word(w[:-1], memo)
            vec = [zero(self.B.order)] * (len(prev) * d)
            for b, c in enumerate(prev):
                vec[b * d + w[-1]] = c
            res = self.proj[k].apply(vec) if self.proj[k].rows else []
        memo[w] = res
        return res

    def project(self, vec: dict) -> list[CycScalar]:
        k = len(next(iter(vec))) if vec else 0
        acc = [zero(self.B.order)] * self.dim(k)
        memo: dict = {}
        for w, a in vec.items():
            for t, c in enumerate(self.project_word(w, memo)):
                acc[t] = acc[t] + a * c
        return acc


def _tower_step(B: BraidedSpace, tab: dict, incl_prev: CycMatrix, proj_prev: CycMatrix) -> CycMatrix:
    """M_k = I + (E_(k-1) (x) id)(id (x) c)(iota_(k-1) (x) id) on B^(k-1) (x) V."""
    d = B.dim
    N = B.order
    dim_prev = incl_prev.cols
    size = dim_prev * d
    entries = [[zero(N)] * size for _ in range(size)]
    for b in range(dim_prev):
        icol = incl_prev.column(b)
        for v in range(d):
            col = b * d + v
            entries[col][col] = entries[col][col] + 1
            # iota(b) = sum icol[b'*d + a] (b' (x) a); then c on (a, v)
            acc: dict = {}
            for idx, e in enumerate(icol):
                if e.is_zero():
                    continue
                bp, a = divmod(idx, d)
                for (u, s), c in tab[(a, v)]:
                    vadd(acc, (bp * d + u, s), e * c)
            for (src, s), c in acc.items():
                for t in range(proj_prev.rows):
                    p = proj_prev[t, src]
                    if not p.is_zero():
                        entries[t * d + s][col] = entries[t * d + s][col] + c * p
    return CycMatrix(N, entries)


def build_tower(B: BraidedSpace, max_deg: int, budget: int = DEFAULT_BUDGET) -> Tower:
    N = B.order
    d = B.dim
    tab = braid_table(B)
    T = Tower(B)
    T.incl.append(CycMatrix(N, [[one(N)]]))
    T.proj.append(CycMatrix(N, [[one(N)]]))
    if max_deg >= 1:
        T.incl.append(CycMatrix.identity(N, d))
        T.proj.append(CycMatrix.identity(N, d))
    for k in range(2, max_deg + 1):
        prev_dim = T.incl[k - 1].cols
        if prev_dim == 0:
            T.incl.append(CycMatrix.zeros(N, 0, 0))
            T.proj.append(CycMatrix.zeros(N, 0, 0))
            continue
        _budget_check(prev_dim * d, budget, f"derivation tower degree {k}")
        Mk = _tower_step(B, tab, T.incl[k - 1], T.proj[k - 1])
        rows, pivots = rref(Mk)
        r = len(pivots)
        size = Mk.rows
        if r == 0:
            T.incl.append(CycMatrix.zeros(N, size, 0))
            T.proj.append(CycMatrix.zeros(N, 0, size))
            continue
        T.incl.append(CycMatrix(N, [[Mk[a, p] for p in pivots] for a in range(size)]))
        T.proj.append(CycMatrix(N, [list(rows[t]) for t in range(r)]))
    return T


def graded_dims_derivation(B: BraidedSpace, max_deg: int, budget: int = DEFAULT_BUDGET) -> GradedDims:
    """dims[k] = dim B^k for k <= max_deg; stops once a degree vanishes."""
    T = build_tower(B, max_deg, budget)
    dims = [T.dim(k) for k in range(max_deg + 1)]
    truncated = 0 in dims
    if truncated:
        dims = dims[: dims.index(0) + 1]
    return GradedDims(dims, truncated)


def nichols_dims(B: BraidedSpace, max_deg: int = 64, budget: int = DEFAULT_BUDGET) -> GradedDims:
    """Grow the tower until a degree vanishes or max_deg is reached."""
    N = B.order
    d = B.dim
    tab = braid_table(B)
    incl = CycMatrix.identity(N, d)
    proj = CycMatrix.identity(N, d)
    dims = [1, d]
    for k in range(2, max_deg + 1):
        _budget_check(incl.cols * d, budget, f"derivation tower degree {k}")
        Mk = _tower_step(B, tab, incl, proj)
        rows, pivots = rref(Mk)
        r = len(pivots)
        dims.append(r)
        if r == 0:
            return GradedDims(dims, True)
        incl = CycMatrix(N, [[Mk[a, p] for p in pivots] for a in range(Mk.rows)])
        proj = CycMatrix(N, [list(rows[t]) for t in range(r)])
    return GradedDims(dims, False)


# ---------------------------------------------------------------------------
# relations


def relation_member(B: BraidedSpace, element: dict, tower: Tower | None = None) -> bool:
    """True iff the homogeneous tensor lies in J_k = ker Q_k.

    Decided twice, by the symmetrizer and by projection through the
    derivation tower; a disagreement is an internal error.
    """
    element = _clean(element)
    if not element:
        return True
    degrees = {len(w) for w in element}
    if len(degrees) != 1:
        raise ValueError("element must be homogeneous")
    (k,) = degrees
    if k <= 1:
        return False
    by_sym = not Symmetrizer(B).apply(element)
    if tower is None or tower.top < k:
        tower = build_tower(B, k)
    by_tower = all(c.is_zero() for c in tower.project(element))
    if by_sym != by_tower:
        raise AssertionError("symmetrizer and derivation tower disagree on a relation")
    return by_sym


# ---------------------------------------------------------------------------
# Hilbert series


def hilbert_expand(factors: list[tuple[int, int]]) -> list[int]:
    """Coefficients of prod (n_i)_(t^d_i), with (n)_t = 1 + t + ... + t^(n-1)."""
    poly = [1]
    for n, d in factors:
        if n < 1 or d < 1:
            raise ValueError("factors need n >= 1 and d >= 1")
        out = [0] * (len(poly) + (n - 1) * d)
        for a, c in enumerate(poly):
            for e in range(n):
                out[a + e * d] += c
        poly = out
    return poly


def format_hilbert(factors: list[tuple[int, int]]) -> str:
    parts = []
    for n, d in factors:
        parts.append(f"({n})_t" if d == 1 else f"({n})_t^{d}")
    return " ".join(parts)
