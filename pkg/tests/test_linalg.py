"""Exact sparse linear algebra: subspaces, quotients, solvers."""

import random
from fractions import Fraction

import pytest

from sechom.linalg import (AmbientDimensionError, InternalCheckError,
                           QuotientStructure, SparseMat, Subspace, colspace,
                           export_triplets, induced_on_quotients, nullspace,
                           parse_triplets, rank, row_space, solve)

F = Fraction


def test_subspace_basic_membership():
    S = Subspace(3, [[1, 0, 1], [0, 1, 1]])
    assert S.dim == 2
    assert S.contains([1, 1, 2])
    assert S.contains([F(1, 2), 0, F(1, 2)])
    assert not S.contains([0, 0, 1])


def test_subspace_canonical_under_generator_order():
    gens = [[2, 4, 6], [1, 1, 1], [3, 5, 7]]
    spans = []
    for perm in ([0, 1, 2], [2, 1, 0], [1, 2, 0]):
        spans.append(Subspace(3, [gens[i] for i in perm]))
    assert spans[0] == spans[1] == spans[2]
    assert spans[0].rows == spans[1].rows  # literally the same echelon data


def test_subspace_accepts_sparse_dict_vectors():
    S = Subspace(4, [{0: F(1), 3: F(-2)}, {1: F(5)}])
    assert S.dim == 2
    assert S.contains({0: F(2), 3: F(-4), 1: F(1)})


def test_subspace_zero_and_full():
    Z = Subspace.zero(5)
    assert Z.dim == 0 and not Z.contains([1, 0, 0, 0, 0])
    E = Subspace.full(3)
    assert E.dim == 3 and E.contains([7, -2, F(1, 3)])


def test_coords_of_round_trip_and_rejection():
    S = Subspace(3, [[1, 2, 0], [0, 0, 3]])
    v = [2, 4, 5]
    coords = S.coords_of(v)
    rebuilt = [sum(F(c) * F(row.get(i, 0)) for c, row in zip(coords, S.rows))
               for i in range(3)]
    assert rebuilt == [F(x) for x in v]
    with pytest.raises(ValueError):
        S.coords_of([1, 0, 0])


def test_subspace_sum_and_order():
    S = Subspace(3, [[1, 0, 0]])
    T = Subspace(3, [[0, 1, 0]])
    U = S.sum(T)
    assert U.dim == 2
    assert S <= U and T <= U
    with pytest.raises(AmbientDimensionError):
        S.sum(Subspace(4, [[1, 0, 0, 0]]))


def test_reduce_length_checked():
    # Trailing zeros are harmless padding; a live entry past the ambient
    # dimension is an error.
    S = Subspace(3, [[1, 0, 0]])
    assert S.reduce([1, 0, 0, 0]) == {}
    with pytest.raises(AmbientDimensionError):
        S.reduce({5: F(1)})


def test_sparse_matrix_constructors_agree():
    entries = [(0, 0, F(1)), (1, 0, F(-2)), (0, 2, F(1, 3))]
    M = SparseMat.from_entries(2, 3, entries)
    N = SparseMat.from_columns(2, [{0: F(1), 1: F(-2)}, {}, {0: F(1, 3)}])
    assert M == N
    assert sorted(M.entries()) == sorted(entries)
    assert M.nnz == 3


def test_sparse_matrix_bounds_checked():
    with pytest.raises(AmbientDimensionError):
        SparseMat.from_entries(2, 2, [(2, 0, F(1))])
    M = SparseMat.identity(2)
    with pytest.raises(AmbientDimensionError):
        M.column(5)


def test_matvec_matches_dense():
    M = SparseMat.from_entries(2, 3, [(0, 0, F(2)), (1, 1, F(3)), (0, 2, F(-1))])
    v = [F(1), F(1, 3), F(2)]
    dense = M.to_dense()
    expect = [sum(row[j] * v[j] for j in range(3)) for row in dense]
    assert M.matvec(v) == expect
    sparse_out = M.matvec_sparse({0: F(1), 1: F(1, 3), 2: F(2)})
    assert [sparse_out.get(i, F(0)) for i in range(2)] == expect


def test_matmul_add_transpose():
    A = SparseMat.from_entries(2, 2, [(0, 0, F(1)), (0, 1, F(2)), (1, 1, F(1))])
    B = SparseMat.from_entries(2, 2, [(0, 1, F(1)), (1, 0, F(3))])
    C = A @ B
    assert C.to_dense() == [[F(6), F(1)], [F(3), F(0)]]
    assert (A + B - B) == A
    assert A.transpose().transpose() == A
    with pytest.raises(AmbientDimensionError):
        A @ SparseMat.identity(3)


def test_rank_nullspace_rowspace_colspace():
    M = SparseMat.from_entries(3, 3, [
        (0, 0, F(1)), (0, 1, F(2)), (1, 0, F(2)), (1, 1, F(4)), (2, 2, F(1))])
    assert rank(M) == 2
    ker = nullspace(M)
    assert ker.dim == 1
    for row in ker.rows:
        assert not any(M.matvec_sparse(row).values())
    assert row_space(M).dim == 2
    assert colspace(M).dim == 2


def test_solve_finds_and_rejects():
    M = SparseMat.from_entries(2, 2, [(0, 0, F(1)), (1, 1, F(2))])
    x = solve(M, [F(3), F(5)])
    assert x is not None
    assert M.matvec(x) == [F(3), F(5)]
    singular = SparseMat.from_entries(2, 1, [(0, 0, F(1))])
    assert solve(singular, [F(0), F(1)]) is None
    with pytest.raises(AmbientDimensionError):
        solve(M, [F(1), F(0), F(5)])


def test_quotient_projection_section_identities():
    rel = Subspace(4, [[1, 1, 0, 0], [0, 0, 1, -1]])
    Q = QuotientStructure(4, rel)
    assert Q.dim == 2
    for j in range(Q.dim):
        unit = [F(1) if t == j else F(0) for t in range(Q.dim)]
        assert Q.project(Q.section(unit)) == unit
    v = [F(3), F(1), F(2), F(7)]
    back = Q.section(Q.project(v))
    assert rel.contains([a - b for a, b in zip(v, back)])
    assert Q.project_matrix() @ Q.section_matrix() == SparseMat.identity(Q.dim)


def test_quotient_relations_ambient_checked():
    with pytest.raises(AmbientDimensionError):
        QuotientStructure(3, Subspace(4, [[1, 0, 0, 0]]))


def test_induced_map_compatibility_enforced():
    rel = Subspace(2, [[1, -1]])
    Q = QuotientStructure(2, rel)
    flip = SparseMat.from_entries(2, 2, [(0, 1, F(1)), (1, 0, F(1))])
    ind = induced_on_quotients(flip, Q, Q)
    assert ind == SparseMat.identity(1)
    bad = SparseMat.from_entries(2, 2, [(0, 0, F(1))])  # kills one summand
    with pytest.raises(InternalCheckError):
        induced_on_quotients(bad, Q, Q)


def test_triplet_export_parse_round_trip():
    M = SparseMat.from_entries(3, 4, [
        (0, 0, F(1, 2)), (2, 3, F(-5)), (1, 1, F(7, 3))])
    text = export_triplets(M)
    head = text.splitlines()[0].split()
    assert head == ["3", "4", "3"]
    assert parse_triplets(text) == M
    with pytest.raises(ValueError):
        parse_triplets("3 4\n")


def test_random_span_membership_and_rank_nullity():
    rng = random.Random(20240817)
    for _ in range(25):
        nrows = rng.randrange(1, 5)
        ncols = rng.randrange(1, 6)
        entries = []
        for r in range(nrows):
            for c in range(ncols):
                if rng.random() < 0.5:
                    entries.append((r, c, F(rng.randrange(-4, 5))))
        M = SparseMat.from_entries(nrows, ncols, entries)
        assert rank(M) + nullspace(M).dim == ncols
        S = colspace(M)
        combo = [F(0)] * nrows
        for c in range(ncols):
            w = F(rng.randrange(-3, 4))
            for i, x in M.column(c).items():
                combo[i] += w * x
        assert S.contains(combo)


def test_random_quotient_consistency():
    rng = random.Random(5)
    for _ in range(15):
        amb = rng.randrange(1, 6)
        gens = [[F(rng.randrange(-2, 3)) for _ in range(amb)]
                for _ in range(rng.randrange(0, amb + 1))]
        rel = Subspace(amb, gens)
        Q = QuotientStructure(amb, rel)
        assert Q.dim == amb - rel.dim
        v = [F(rng.randrange(-5, 6)) for _ in range(amb)]
        u = [F(rng.randrange(-5, 6)) for _ in range(amb)]
        lhs = Q.project([a + b for a, b in zip(v, u)])
        rhs = [a + b for a, b in zip(Q.project(v), Q.project(u))]
        assert lhs == rhs
