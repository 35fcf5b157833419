"""The chain complex of a triple (A, B, eps).

A degree-n chain space has basis tensors with n+1 factors from the A basis
(slots a_0..a_n) and one factor from the B basis for every index pair
(r, s) with 0 <= r < s <= n.  A basis tensor is linearized mixed-radix:
a-digits first (a_0 most significant), then the b-digits in lexicographic
pair order.  The total dimension is dim(A)^(n+1) * dim(B)^(n(n+1)/2).

The boundary is the alternating sum of n+1 face maps.  Face i < n merges
slots i and i+1, multiplying a_i and a_{i+1} through eps of the connecting
b-slot and pairing up the b-slots that used to reach the merged columns.
Face n wraps around, merging slot n into slot 0 the same way.  The cyclic
operator rotates the a-slots one step and reindexes the b-slots
accordingly, with sign (-1)^n; its (n+1)-st power is the identity.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import multiply
from .linalg import (ONE, QuotientStructure, SparseMat, Subspace,
                     InternalCheckError, colspace)
from .triples import Triple


def pair_list(n: int) -> list:
    """Index pairs (r, s), 0 <= r < s <= n, in lexicographic order."""
    return [(r, s) for r in range(n + 1) for s in range(r + 1, n + 1)]


def chain_dim(T: Triple, n: int) -> int:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return T.A.dim ** (n + 1) * T.B.dim ** (n * (n + 1) // 2)


@dataclass(frozen=True)
class ChainIndex:
    """A basis tensor: a-slot digits and a digit per b-slot pair."""
    degree: int
    a: tuple
    b: tuple  # aligned with pair_list(degree)

    def b_dict(self) -> dict:
        return dict(zip(pair_list(self.degree), self.b))


class ChainSpace:
    """Linearization bookkeeping for one degree."""

    def __init__(self, dim_a: int, dim_b: int, degree: int):
        self.degree = degree
        self.dim_a = dim_a
        self.dim_b = dim_b
        self.pairs = pair_list(degree)
        self.radices = [dim_a] * (degree + 1) + [dim_b] * len(self.pairs)
        self.dim = 1
        for r in self.radices:
            self.dim *= r
        self.weights = [0] * len(self.radices)
        w = 1
        for p in range(len(self.radices) - 1, -1, -1):
            self.weights[p] = w
            w *= self.radices[p]

    def linearize(self, a, b=None) -> int:
        """Linear index of a basis tensor.

        `a` lists the a-slot basis indices; `b` maps pairs (r, s) to basis
        indices.  Pairs may be omitted only when dim(B) is 1.
        """
        a = tuple(a)
        if len(a) != self.degree + 1:
            raise ValueError(f"need {self.degree + 1} a-slot indices, got {len(a)}")
        b = dict(b) if b else {}
        unknown = set(b) - set(self.pairs)
        if unknown:
            raise ValueError(f"unexpected b-slot pairs {sorted(unknown)}")
        digits = list(a)
        for pr in self.pairs:
            if pr in b:
                digits.append(b[pr])
            elif self.dim_b == 1:
                digits.append(0)
            else:
                raise ValueError(f"missing b-slot index for pair {pr}")
        ix = 0
        for d, r, w in zip(digits, self.radices, self.weights):
            if not 0 <= d < r:
                raise ValueError(f"basis digit {d} out of range 0..{r - 1}")
            ix += d * w
        return ix

    def delinearize(self, ix: int) -> ChainIndex:
        if not 0 <= ix < self.dim:
            raise ValueError(f"index {ix} outside chain space of dimension {self.dim}")
        digits = []
        for r in reversed(self.radices):
            ix, d = divmod(ix, r)
            digits.append(d)
        digits.reverse()
        na = self.degree + 1
        return ChainIndex(self.degree, tuple(digits[:na]), tuple(digits[na:]))

    def all_digit_tuples(self):
        """Digit tuples in increasing linear-index order."""
        return product(*(range(r) for r in self.radices))


# -- per-triple caches -----------------------------------------------------

class _Tables:
    """Products and matrices reused across degrees for one triple."""

    def __init__(self, T: Triple):
        self.triple = T
        A, B, eps = T.A, T.B, T.eps
        da, db = A.dim, B.dim

        def support(vec):
            return tuple((k, x) for k, x in enumerate(vec) if x)

        self.bprod = [[support(B.mult[i][j]) for j in range(db)]
                      for i in range(db)]
        basis_a = [[ONE if t == i else Fraction(0) for t in range(da)]
                   for i in range(da)]
        self.sandwich = [[[support(multiply(A, multiply(A, basis_a[i],
                                                        eps.columns[k]),
                                            basis_a[j]))
                           for j in range(da)]
                          for k in range(db)]
                         for i in range(da)]
        self.spaces: dict = {}
        self.boundaries: dict = {}
        self.cyclics: dict = {}
        self.wspaces: dict = {}
        self.quotients: dict = {}
        self.compat_checked: set = set()


_TABLES: "weakref.WeakKeyDictionary[Triple, _Tables]" = weakref.WeakKeyDictionary()


def _tables(T: Triple) -> _Tables:
    tb = _TABLES.get(T)
    if tb is None:
        tb = _Tables(T)
        _TABLES[T] = tb
    return tb


def chain_space(T: Triple, n: int) -> ChainSpace:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    tb = _tables(T)
    cs = tb.spaces.get(n)
    if cs is None:
        cs = ChainSpace(T.A.dim, T.B.dim, n)
        tb.spaces[n] = cs
    return cs


# -- face maps -------------------------------------------------------------

def _face_recipe(n: int, i: int) -> list:
    """One op per output slot of face i in degree n.

    Ops refer to input digit positions: a-slot t is position t, b-slot
    (r, s) is position n + 1 + its lexicographic rank.
    """
    bpos = {pr: n + 1 + t for t, pr in enumerate(pair_list(n))}
    recipe = []
    if i < n:
        for t in range(n):
            if t < i:
                recipe.append(("a", t))
            elif t == i:
                recipe.append(("aba", i, bpos[(i, i + 1)], i + 1))
            else:
                recipe.append(("a", t + 1))
        for (r, s) in pair_list(n - 1):
            if s < i:
                recipe.append(("b", bpos[(r, s)]))
            elif r < i and s == i:
                recipe.append(("bb", bpos[(r, i)], bpos[(r, i + 1)]))
            elif r < i:
                recipe.append(("b", bpos[(r, s + 1)]))
            elif r == i:
                recipe.append(("bb", bpos[(i, s + 1)], bpos[(i + 1, s + 1)]))
            else:
                recipe.append(("b", bpos[(r + 1, s + 1)]))
    else:
        recipe.append(("aba", n, bpos[(0, n)], 0))
        for t in range(1, n):
            recipe.append(("a", t))
        for (r, s) in pair_list(n - 1):
            if r == 0:
                recipe.append(("bb", bpos[(s, n)], bpos[(0, s)]))
            else:
                recipe.append(("b", bpos[(r, s)]))
    return recipe


def _face_column(tb: _Tables, recipe: list, weights: list, digits: tuple) -> dict:
    """Sparse column of an (unsigned) face on one basis tensor."""
    terms = [(0, ONE)]
    for slot, op in enumerate(recipe):
        w = weights[slot]
        kind = op[0]
        if kind == "a" or kind == "b":
            d = digits[op[1]]
            terms = [(ix + d * w, c) for ix, c in terms]
            continue
        if kind == "aba":
            opts = tb.sandwich[digits[op[1]]][digits[op[2]]][digits[op[3]]]
        else:
            opts = tb.bprod[digits[op[1]]][digits[op[2]]]
        if not opts:
            return {}
        terms = [(ix + d * w, c * x) for ix, c in terms for d, x in opts]
    col: dict = {}
    for ix, c in terms:
        y = col.get(ix)
        col[ix] = c if y is None else y + c
    return {ix: c for ix, c in col.items() if c}


def face_map(T: Triple, n: int, i: int) -> SparseMat:
    """The unsigned face i in degree n, as a matrix to degree n - 1."""
    if n < 1:
        raise ValueError("faces need degree at least 1")
    if not 0 <= i <= n:
        raise ValueError(f"face index {i} outside 0..{n}")
    tb = _tables(T)
    src = chain_space(T, n)
    dst = chain_space(T, n - 1)
    recipe = _face_recipe(n, i)
    cols = {}
    for ix, digits in enumerate(src.all_digit_tuples()):
        col = _face_column(tb, recipe, dst.weights, digits)
        if col:
            cols[ix] = col
    return SparseMat(dst.dim, src.dim, cols)


def boundary(T: Triple, n: int) -> SparseMat:
    """Alternating sum of the faces; degree 0 gets the zero map."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    tb = _tables(T)
    M = tb.boundaries.get(n)
    if M is not None:
        return M
    src = chain_space(T, n)
    if n == 0:
        M = SparseMat.zeros(0, src.dim)
        tb.boundaries[0] = M
        return M
    dst = chain_space(T, n - 1)
    recipes = [(_face_recipe(n, i), ONE if i % 2 == 0 else -ONE)
               for i in range(n + 1)]
    cols: dict = {}
    for ix, digits in enumerate(src.all_digit_tuples()):
        acc: dict = {}
        for recipe, sign in recipes:
            for r, x in _face_column(tb, recipe, dst.weights, digits).items():
                y = acc.get(r, 0) + sign * x
                if y:
                    acc[r] = y
                else:
                    acc.pop(r, None)
        if acc:
            cols[ix] = acc
    M = SparseMat(dst.dim, src.dim, cols)
    tb.boundaries[n] = M
    return M


# -- cyclic structure ------------------------------------------------------

def cyclic_operator(T: Triple, n: int) -> SparseMat:
    """Signed rotation: a-slots shift by one (slot n to slot 0) and b-slots
    follow, with global sign (-1)^n."""
    tb = _tables(T)
    M = tb.cyclics.get(n)
    if M is not None:
        return M
    cs = chain_space(T, n)
    bpos = {pr: t for t, pr in enumerate(cs.pairs)}
    na = n + 1
    src_of = list(range(na + len(cs.pairs)))
    for t in range(na):
        src_of[t] = n if t == 0 else t - 1
    for (r, s), t in bpos.items():
        if r == 0:
            src_of[na + t] = na + bpos[(s - 1, n)]
        else:
            src_of[na + t] = na + bpos[(r - 1, s - 1)]
    sign = ONE if n % 2 == 0 else -ONE
    cols = {}
    for ix, digits in enumerate(cs.all_digit_tuples()):
        out = 0
        for slot, w in enumerate(cs.weights):
            out += digits[src_of[slot]] * w
        cols[ix] = {out: sign}
    M = SparseMat(cs.dim, cs.dim, cols)
    tb.cyclics[n] = M
    return M


def _coinvariant_relations(T: Triple, n: int) -> Subspace:
    tb = _tables(T)
    W = tb.wspaces.get(n)
    if W is None:
        cs = chain_space(T, n)
        W = colspace(SparseMat.identity(cs.dim) - cyclic_operator(T, n))
        tb.wspaces[n] = W
    return W


def cyclic_quotient(T: Triple, n: int) -> QuotientStructure:
    """Coordinates on the cyclic coinvariants in degree n.

    Also certifies that the boundary descends: every column of
    boundary(T, n) composed with (1 - cyclic) must reduce to zero against
    the degree n-1 coinvariant relations.  Failure is a hard error since
    any quotient complex built afterwards would be meaningless.
    """
    tb = _tables(T)
    Q = tb.quotients.get(n)
    if Q is None:
        cs = chain_space(T, n)
        Q = QuotientStructure(cs.dim, _coinvariant_relations(T, n))
        tb.quotients[n] = Q
    if n >= 1 and n not in tb.compat_checked:
        W_low = _coinvariant_relations(T, n - 1)
        bnd = boundary(T, n)
        moved = bnd @ (SparseMat.identity(Q.ambient_dim) - cyclic_operator(T, n))
        for c in sorted(moved.cols):
            if not W_low.contains(moved.cols[c]):
                raise InternalCheckError(
                    f"boundary does not descend to cyclic coinvariants at "
                    f"degree {n} (column {c})")
        tb.compat_checked.add(n)
    return Q
