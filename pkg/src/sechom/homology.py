"""Homology of the chain complex of a triple, in two flavors.

The plain flavor is kernel-mod-image of the boundary; the cyclic flavor
runs the same computation on the quotient complex by the cyclic operator's
coinvariant relations.  Degrees above the cap (default 3) must be
requested explicitly since space grows as dim(A)^(n+1) * dim(B)^(n(n+1)/2).

Representatives are always reported in the chain coordinates of the
requested degree; their classes form a basis of the homology space.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import boundary, chain_dim, chain_space, cyclic_quotient
from .linalg import (ONE, ZERO, InternalCheckError, QuotientStructure,
                     SparseMat, Subspace, colspace, induced_on_quotients,
                     nullspace, rank)
from .triples import Triple

DEFAULT_MAX_DEGREE = 3


class DegreeCapError(ValueError):
    """Degree exceeds the cap; pass max_degree explicitly to go higher."""

    def __init__(self, n: int, cap: int, dims: str):
        super().__init__(
            f"degree {n} exceeds the cap {cap}; chain spaces involved have "
            f"dimensions {dims}. Pass max_degree={n} (library) or the "
            f"override flag (command line) to proceed anyway.")
        self.requested = n
        self.cap = cap


def _check_degree(T: Triple, n: int, max_degree) -> None:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    cap = DEFAULT_MAX_DEGREE if max_degree is None else max_degree
    if n > cap:
        dims = ", ".join(str(chain_dim(T, k)) for k in range(n, n + 2))
        raise DegreeCapError(n, cap, dims)


@dataclass
class HomologyResult:
    triple_name: str
    flavor: str  # "hh" or "hc"
    degree: int
    dimension: int
    representatives: list = field(default_factory=list)

    def __str__(self) -> str:
        return (f"{self.flavor.upper()}_{self.degree}({self.triple_name}) "
                f"has dimension {self.dimension}")


def _combo(rows: list, coords: list, ambient: int) -> list:
    out = [ZERO] * ambient
    for c, row in zip(coords, rows):
        if c:
            for i, x in row.items():
                out[i] += c * x
    return out


def _quotient_of_complex(cycles: Subspace, next_boundary_cols) -> QuotientStructure:
    """Homology quotient: cycle coordinates modulo boundary coordinates.

    Callers must have certified that the given columns are cycles; the
    coordinates are then read off the canonical basis without a second
    membership pass.
    """
    rels = []
    for col in next_boundary_cols:
        rels.append({i: x for i, x in
                     enumerate(cycles.coords_of(col, verify=False)) if x})
    return QuotientStructure(cycles.dim, Subspace(cycles.dim, rels))


def _hh_pieces(T: Triple, n: int):
    """Cycles of the boundary at degree n and the homology quotient."""
    bnd_next = boundary(T, n + 1)
    if n == 0:
        cycles = Subspace.full(chain_dim(T, 0))
    else:
        bnd = boundary(T, n)
        if not (bnd @ bnd_next).is_zero():
            raise InternalCheckError(
                f"boundary squared is nonzero between degrees {n + 1} and {n - 1}")
        cycles = nullspace(bnd)
    Q = _quotient_of_complex(
        cycles, (bnd_next.cols[c] for c in sorted(bnd_next.cols)))
    return cycles, Q


def hh(T: Triple, n: int, max_degree=None) -> HomologyResult:
    """Homology of the chain complex at degree n."""
    _check_degree(T, n, max_degree)
    cycles, Q = _hh_pieces(T, n)
    reps = []
    for j in range(Q.dim):
        unit = [ONE if t == j else ZERO for t in range(Q.dim)]
        reps.append(_combo(cycles.rows, Q.section(unit), chain_dim(T, n)))
    return HomologyResult(T.name, "hh", n, Q.dim, reps)


def _induced_boundary(T: Triple, k: int) -> SparseMat:
    """Boundary on cyclic coinvariant coordinates, degree k to k - 1.

    cyclic_quotient has already certified that the boundary descends, so
    the induced matrix is assembled without re-checking relations.
    """
    q_src = cyclic_quotient(T, k)
    if k == 0:
        return SparseMat.zeros(0, q_src.dim)
    q_dst = cyclic_quotient(T, k - 1)
    return induced_on_quotients(boundary(T, k), q_src, q_dst, check=False)


def _hc_pieces(T: Triple, n: int):
    """Cycle subspace and homology quotient on coinvariant coordinates."""
    q_n = cyclic_quotient(T, n)
    dbar_next = _induced_boundary(T, n + 1)
    if n == 0:
        cycles = Subspace.full(q_n.dim)
    else:
        dbar = _induced_boundary(T, n)
        if not (dbar @ dbar_next).is_zero():
            raise InternalCheckError(
                f"induced boundary squared is nonzero between degrees "
                f"{n + 1} and {n - 1}")
        cycles = nullspace(dbar)
    Q = _quotient_of_complex(
        cycles, (dbar_next.cols[c] for c in sorted(dbar_next.cols)))
    return q_n, cycles, Q


def hc(T: Triple, n: int, max_degree=None) -> HomologyResult:
    """Homology of the cyclic coinvariant complex at degree n."""
    _check_degree(T, n, max_degree)
    q_n, cycles, Q = _hc_pieces(T, n)
    reps = []
    for j in range(Q.dim):
        unit = [ONE if t == j else ZERO for t in range(Q.dim)]
        in_coinv = _combo(cycles.rows, Q.section(unit), q_n.dim)
        reps.append(q_n.section(in_coinv))
    return HomologyResult(T.name, "hc", n, Q.dim, reps)


# -- the degree-one connecting maps ---------------------------------------

def connes_b_chain(T: Triple) -> SparseMat:
    """The map sending a in A to (1 (x) a) + (a (x) 1) in degree one, with
    the connecting b-slot carrying the unit of B.

    Its image consists of cycles for any triple, because the boundary of
    either term is the commutator of a with the unit.
    """
    cs1 = chain_space(T, 1)
    da, db = T.A.dim, T.B.dim
    unit_a = T.A.unit
    unit_b = T.B.unit
    cols = {}
    for i in range(da):
        acc: dict = {}
        for j, ua in enumerate(unit_a):
            if not ua:
                continue
            for k, ub in enumerate(unit_b):
                if not ub:
                    continue
                for a0, a1 in ((j, i), (i, j)):
                    ix = cs1.linearize((a0, a1), {(0, 1): k})
                    val = acc.get(ix, ZERO) + ua * ub
                    if val:
                        acc[ix] = val
                    else:
                        acc.pop(ix, None)
        if acc:
            cols[i] = acc
    return SparseMat(chain_dim(T, 1), da, cols)


@dataclass
class SegmentReport:
    """Exactness of the degree-one connecting segment.

    The chain-level map from A lands in cycles; passing means the induced
    map to cyclic homology in degree one is onto and its kernel is exactly
    the image of A in plain degree-one homology.
    """
    triple_name: str
    hh1_dim: int
    hc1_dim: int
    image_rank: int
    chain_map_ok: bool
    surjective: bool
    kernel_matches_image: bool

    @property
    def passed(self) -> bool:
        return self.chain_map_ok and self.surjective and self.kernel_matches_image


def connes_segment_check(T: Triple) -> SegmentReport:
    """Verify exactness of A -> H_1 -> cyclic H_1 -> 0 at the matrix level."""
    cycles, Q_hh = _hh_pieces(T, 1)
    q_1, hc_cycles, Q_hc = _hc_pieces(T, 1)

    # The projection to coinvariants intertwines the two boundaries; this
    # is the well-definedness of the induced map on homology.
    lhs = _induced_boundary(T, 2) @ cyclic_quotient(T, 2).project_matrix()
    rhs = q_1.project_matrix() @ boundary(T, 2)
    chain_map_ok = lhs == rhs

    def hh1_coords(chain_vec) -> list:
        cc = cycles.coords_of(chain_vec)
        return Q_hh.project({t: x for t, x in enumerate(cc) if x})

    # Induced map on degree-one homology classes, column per basis class.
    i_cols = []
    for j in range(Q_hh.dim):
        unit = [ONE if t == j else ZERO for t in range(Q_hh.dim)]
        rep = _combo(cycles.rows, Q_hh.section(unit), chain_dim(T, 1))
        cc = hc_cycles.coords_of(q_1.project(rep))
        qc = Q_hc.project({t: x for t, x in enumerate(cc) if x})
        i_cols.append({t: x for t, x in enumerate(qc) if x})
    i_mat = SparseMat.from_columns(Q_hc.dim, i_cols)

    b_chain = connes_b_chain(T)
    b_cols = []
    for c in range(T.A.dim):
        b_cols.append({i: x for i, x in
                       enumerate(hh1_coords(b_chain.column(c))) if x})
    b_mat = SparseMat.from_columns(Q_hh.dim, b_cols)

    image_rank = rank(i_mat)
    surjective = image_rank == Q_hc.dim
    kernel_matches = nullspace(i_mat) == colspace(b_mat)
    return SegmentReport(T.name, Q_hh.dim, Q_hc.dim, image_rank,
                         chain_map_ok, surjective, kernel_matches)
