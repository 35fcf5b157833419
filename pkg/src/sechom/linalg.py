"""Exact linear algebra over the rationals.

Conventions used throughout the package:

* a *vector* is a plain list of Fraction (dense),
* a *sparse vector* is a dict mapping index -> nonzero Fraction,
* matrices are column-major sparse (`SparseMat`),
* subspaces are stored as reduced row echelon bases, so two subspaces are
  equal exactly when their stored data is equal.

Everything is exact; no floats enter at any point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Optional

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class AmbientDimensionError(ValueError):
    """Raised when vectors or matrices from different ambient spaces meet."""


class InternalCheckError(RuntimeError):
    """An internal consistency check failed; results would be unreliable."""


def _as_sparse(v) -> dict:
    """Accept a dense list or a sparse dict; return a sparse dict copy."""
    if isinstance(v, dict):
        return {i: Fraction(x) for i, x in v.items() if x}
    return {i: Fraction(x) for i, x in enumerate(v) if x}


def _to_dense(v: dict, n: int) -> list:
    out = [ZERO] * n
    for i, x in v.items():
        out[i] = x
    return out


def _axpy(v: dict, c: Fraction, w: dict) -> None:
    """v += c*w in place, dropping entries that cancel."""
    for i, x in w.items():
        y = v.get(i, ZERO) + c * x
        if y:
            v[i] = y
        else:
            v.pop(i, None)


def _strip_content(v: dict) -> None:
    """Scale v in place to a primitive integer vector with positive lead.

    Used between elimination steps to keep numerators and denominators
    small; the row's span is unchanged.
    """
    if not v:
        return
    den = 1
    for x in v.values():
        den = lcm(den, x.denominator)
    num = 0
    for x in v.values():
        num = gcd(num, x.numerator * (den // x.denominator))
    lead = min(v)
    scale = Fraction(den, num) if v[lead] > 0 else Fraction(-den, num)
    if scale != 1:
        for i in list(v):
            v[i] *= scale


class Subspace:
    """A linear subspace of Q^n held as a reduced row echelon basis.

    The basis rows are pivot-normalized and fully reduced, so the stored
    form is canonical: two Subspaces are equal iff they describe the same
    subspace of the same ambient space.
    """

    __slots__ = ("ambient_dim", "rows", "pivots", "_pivot_pos")

    def __init__(self, ambient_dim: int, vectors: Iterable = ()):
        self.ambient_dim = ambient_dim
        self.rows: list[dict] = []
        self.pivots: list[int] = []
        self._pivot_pos: dict[int, int] = {}
        for v in vectors:
            self._ref_insert(_as_sparse(v))
        self._finalize()

    # -- construction ------------------------------------------------------

    def _ref_insert(self, v: dict) -> None:
        """Insert one vector, keeping rows in echelon form (pivots distinct,
        each row content-stripped).  Full reduction happens in _finalize."""
        if any(i < 0 or i >= self.ambient_dim for i in v):
            raise AmbientDimensionError(
                f"vector index out of range for ambient dimension {self.ambient_dim}")
        while v:
            lead = min(v)
            pos = self._pivot_pos.get(lead)
            if pos is None:
                break
            row = self.rows[pos]
            _axpy(v, -v[lead] / row[lead], row)
        if not v:
            return
        _strip_content(v)
        lead = min(v)
        at = 0
        while at < len(self.pivots) and self.pivots[at] < lead:
            at += 1
        self.rows.insert(at, v)
        self.pivots.insert(at, lead)
        self._pivot_pos = {p: i for i, p in enumerate(self.pivots)}

    def _finalize(self) -> None:
        """Back-substitute and pivot-normalize, yielding the canonical RREF."""
        for i in range(len(self.rows) - 1, -1, -1):
            row = self.rows[i]
            for j in range(i + 1, len(self.rows)):
                p = self.pivots[j]
                c = row.get(p)
                if c:
                    _axpy(row, -c / self.rows[j][p], self.rows[j])
            lead = row[self.pivots[i]]
            if lead != 1:
                for k in row:
                    row[k] /= lead

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ({i: ONE} for i in range(ambient_dim)))

    # -- queries -----------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v) -> dict:
        """Remainder of v after reduction against the basis (sparse)."""
        v = _as_sparse(v)
        if any(i < 0 or i >= self.ambient_dim for i in v):
            raise AmbientDimensionError(
                f"vector index out of range for ambient dimension {self.ambient_dim}")
        for p, row in zip(self.pivots, self.rows):
            c = v.get(p)
            if c:
                _axpy(v, -c, row)
        return v

    def contains(self, v) -> bool:
        return not self.reduce(v)

    def coords_of(self, v, verify: bool = True) -> list:
        """Coordinates of v in the stored basis.

        With verify off the caller must know v lies in the subspace; the
        pivot entries of v are then already the coordinates.
        """
        v = _as_sparse(v)
        coords = [v.get(p, ZERO) for p in self.pivots]
        if verify:
            res = dict(v)
            for c, row in zip(coords, self.rows):
                if c:
                    _axpy(res, -c, row)
            if res:
                raise ValueError("vector is not in the subspace")
        return coords

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise AmbientDimensionError("subspace sum across different ambient spaces")
        out = Subspace(self.ambient_dim)
        for row in self.rows:
            out._ref_insert(dict(row))
        for row in other.rows:
            out._ref_insert(dict(row))
        out._finalize()
        return out

    def basis_vectors(self) -> list:
        """Basis as dense vectors (rows of the canonical form)."""
        return [_to_dense(row, self.ambient_dim) for row in self.rows]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace)
                and self.ambient_dim == other.ambient_dim
                and self.pivots == other.pivots
                and self.rows == other.rows)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(row) for row in self.rows)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


class SparseMat:
    """Column-major sparse matrix over the rationals."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int,
                 cols: Optional[dict[int, dict]] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols: dict[int, dict] = cols if cols is not None else {}

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries) -> "SparseMat":
        m = cls(nrows, ncols)
        for r, c, x in entries:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise AmbientDimensionError(f"entry ({r},{c}) outside {nrows}x{ncols}")
            x = Fraction(x)
            if x:
                col = m.cols.setdefault(c, {})
                y = col.get(r, ZERO) + x
                if y:
                    col[r] = y
                else:
                    del col[r]
        m._prune()
        return m

    @classmethod
    def from_columns(cls, nrows: int, columns: Iterable[dict]) -> "SparseMat":
        cols = {}
        columns = list(columns)
        for c, col in enumerate(columns):
            col = {r: Fraction(x) for r, x in col.items() if x}
            if any(r < 0 or r >= nrows for r in col):
                raise AmbientDimensionError(f"row index out of range in column {c}")
            if col:
                cols[c] = col
        return cls(nrows, len(columns), cols)

    @classmethod
    def identity(cls, n: int) -> "SparseMat":
        return cls(n, n, {i: {i: ONE} for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "SparseMat":
        return cls(nrows, ncols)

    def _prune(self) -> None:
        for c in [c for c, col in self.cols.items() if not col]:
            del self.cols[c]

    def column(self, c: int) -> dict:
        if not 0 <= c < self.ncols:
            raise AmbientDimensionError(f"column {c} outside width {self.ncols}")
        return dict(self.cols.get(c, {}))

    def entries(self) -> Iterator[tuple]:
        """Yield (row, col, value) sorted by (row, col)."""
        items = []
        for c, col in self.cols.items():
            for r, x in col.items():
                items.append((r, c, x))
        items.sort(key=lambda t: (t[0], t[1]))
        return iter(items)

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self.cols.values())

    def is_zero(self) -> bool:
        return not self.cols

    def transpose(self) -> "SparseMat":
        cols: dict[int, dict] = {}
        for c, col in self.cols.items():
            for r, x in col.items():
                cols.setdefault(r, {})[c] = x
        return SparseMat(self.ncols, self.nrows, cols)

    def matvec(self, v) -> list:
        """Dense product M v for a dense or sparse vector v."""
        v = _as_sparse(v)
        acc: dict = {}
        for c, x in v.items():
            if not 0 <= c < self.ncols:
                raise AmbientDimensionError(f"index {c} outside width {self.ncols}")
            col = self.cols.get(c)
            if col:
                _axpy(acc, x, col)
        return _to_dense(acc, self.nrows)

    def matvec_sparse(self, v: dict) -> dict:
        acc: dict = {}
        for c, x in v.items():
            col = self.cols.get(c)
            if col:
                _axpy(acc, x, col)
        return acc

    def __matmul__(self, other: "SparseMat") -> "SparseMat":
        if self.ncols != other.nrows:
            raise AmbientDimensionError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        cols = {}
        for c, col in other.cols.items():
            acc = self.matvec_sparse(col)
            if acc:
                cols[c] = acc
        return SparseMat(self.nrows, other.ncols, cols)

    def _combine(self, other: "SparseMat", sign: int) -> "SparseMat":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise AmbientDimensionError("matrix shapes differ")
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            acc = cols.setdefault(c, {})
            _axpy(acc, Fraction(sign), col)
        out = SparseMat(self.nrows, self.ncols, cols)
        out._prune()
        return out

    def __add__(self, other: "SparseMat") -> "SparseMat":
        return self._combine(other, 1)

    def __sub__(self, other: "SparseMat") -> "SparseMat":
        return self._combine(other, -1)

    def scale(self, c) -> "SparseMat":
        c = Fraction(c)
        if not c:
            return SparseMat.zeros(self.nrows, self.ncols)
        return SparseMat(self.nrows, self.ncols,
                         {j: {r: c * x for r, x in col.items()}
                          for j, col in self.cols.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparseMat)
                and (self.nrows, self.ncols) == (other.nrows, other.ncols)
                and self.cols == other.cols)

    def to_dense(self) -> list:
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for c, col in self.cols.items():
            for r, x in col.items():
                out[r][c] = x
        return out

    def __repr__(self) -> str:
        return f"SparseMat({self.nrows}x{self.ncols}, nnz={self.nnz})"


# -- matrix-level operations ----------------------------------------------

def _row_dicts(M: SparseMat) -> list:
    rows: list[dict] = [dict() for _ in range(M.nrows)]
    for c, col in M.cols.items():
        for r, x in col.items():
            rows[r][c] = x
    return rows


def rank(M: SparseMat) -> int:
    """Rank via row elimination with content stripping."""
    sp = Subspace(M.ncols, _row_dicts(M))
    return sp.dim


def row_space(M: SparseMat) -> Subspace:
    return Subspace(M.ncols, _row_dicts(M))


def colspace(M: SparseMat) -> Subspace:
    return Subspace(M.nrows, (M.cols[c] for c in sorted(M.cols)))


def nullspace(M: SparseMat) -> Subspace:
    """Kernel of M as a subspace of Q^ncols."""
    R = row_space(M)
    pivset = set(R.pivots)
    free = [c for c in range(M.ncols) if c not in pivset]
    basis = []
    for f in free:
        v = {f: ONE}
        for p, row in zip(R.pivots, R.rows):
            x = row.get(f)
            if x:
                v[p] = -x
        basis.append(v)
    ker = Subspace(M.ncols, basis)
    if ker.dim != M.ncols - R.dim:
        raise InternalCheckError("rank-nullity violated in nullspace computation")
    return ker


def solve(M: SparseMat, b) -> Optional[list]:
    """One solution of M x = b, or None when the system is inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    b = _as_sparse(b)
    if any(i < 0 or i >= M.nrows for i in b):
        raise AmbientDimensionError("right-hand side has wrong length")
    aug = M.ncols
    rows = _row_dicts(M)
    for i, x in b.items():
        rows[i][aug] = x
    R = Subspace(M.ncols + 1, rows)
    x = [ZERO] * M.ncols
    for p, row in zip(R.pivots, R.rows):
        if p == aug:
            return None
        x[p] = row.get(aug, ZERO)
    check = M.matvec(x)
    if _as_sparse(check) != b:
        raise InternalCheckError("solver produced an invalid solution")
    return x


class QuotientStructure:
    """Coordinates on Q^n / R for a relation subspace R.

    The non-pivot coordinates of the canonical form of R serve as
    coordinates on the quotient.  `project` reduces a vector against R and
    reads those coordinates; `section` embeds quotient coordinates back
    using the non-pivot axes, so project(section(c)) == c.
    """

    __slots__ = ("ambient_dim", "relations", "nonpivots", "_proj", "_sect")

    def __init__(self, ambient_dim: int, relations: Subspace):
        if relations.ambient_dim != ambient_dim:
            raise AmbientDimensionError("relations live in a different ambient space")
        self.ambient_dim = ambient_dim
        self.relations = relations
        pivset = set(relations.pivots)
        self.nonpivots = [c for c in range(ambient_dim) if c not in pivset]
        self._proj: Optional[SparseMat] = None
        self._sect: Optional[SparseMat] = None

    @property
    def dim(self) -> int:
        return len(self.nonpivots)

    def project(self, v) -> list:
        r = self.relations.reduce(v)
        return [r.get(c, ZERO) for c in self.nonpivots]

    def section(self, coords) -> list:
        if len(coords) != self.dim:
            raise AmbientDimensionError(
                f"expected {self.dim} quotient coordinates, got {len(coords)}")
        out = [ZERO] * self.ambient_dim
        for c, x in zip(self.nonpivots, coords):
            out[c] = Fraction(x)
        return out

    def project_matrix(self) -> SparseMat:
        """Matrix of `project` (dim x ambient_dim), read off the canonical form."""
        if self._proj is None:
            pos = {c: i for i, c in enumerate(self.nonpivots)}
            cols: dict[int, dict] = {}
            for c, i in pos.items():
                cols[c] = {i: ONE}
            for p, row in zip(self.relations.pivots, self.relations.rows):
                col = {}
                for c, x in row.items():
                    if c in pos:
                        col[pos[c]] = -x
                if col:
                    cols[p] = col
            self._proj = SparseMat(self.dim, self.ambient_dim, cols)
        return self._proj

    def section_matrix(self) -> SparseMat:
        if self._sect is None:
            cols = {i: {c: ONE} for i, c in enumerate(self.nonpivots)}
            self._sect = SparseMat(self.ambient_dim, self.dim, cols)
        return self._sect

    def __repr__(self) -> str:
        return f"QuotientStructure(ambient={self.ambient_dim}, dim={self.dim})"


def quotient_map(ambient_dim: int, relations: Subspace) -> QuotientStructure:
    return QuotientStructure(ambient_dim, relations)


def induced_on_quotients(M: SparseMat, src: QuotientStructure,
                         dst: QuotientStructure, check: bool = True) -> SparseMat:
    """Matrix of the map induced by M on quotient coordinates.

    Well-definedness needs M(src relations) inside the dst relations; with
    check on this is verified and violation is a hard error.
    """
    if M.ncols != src.ambient_dim or M.nrows != dst.ambient_dim:
        raise AmbientDimensionError("matrix shape does not match the quotients")
    if check:
        for row in src.relations.rows:
            if not dst.relations.contains(M.matvec_sparse(row)):
                raise InternalCheckError(
                    "map does not descend to the quotient: image of a relation "
                    "is not a relation")
    return dst.project_matrix() @ M @ src.section_matrix()


# -- sparse triplet serialization ------------------------------------------

def export_triplets(M: SparseMat) -> str:
    """Text form: `rows cols nnz` header, then `row col num/den` lines."""
    lines = [f"{M.nrows} {M.ncols} {M.nnz}"]
    for r, c, x in M.entries():
        lines.append(f"{r} {c} {x.numerator}/{x.denominator}")
    return "\n".join(lines) + "\n"


def parse_triplets(text: str) -> SparseMat:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty triplet text")
    head = lines[0].split()
    if len(head) != 3:
        raise ValueError(f"bad triplet header: {lines[0]!r}")
    nrows, ncols, nnz = (int(t) for t in head)
    if len(lines) - 1 != nnz:
        raise ValueError(f"header promises {nnz} entries, found {len(lines) - 1}")
    entries = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ValueError(f"bad triplet line: {ln!r}")
        r, c = int(parts[0]), int(parts[1])
        num, _, den = parts[2].partition("/")
        entries.append((r, c, Fraction(int(num), int(den or "1"))))
    return SparseMat.from_entries(nrows, ncols, entries)
