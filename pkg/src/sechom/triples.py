"""Triples (A, B, eps): a unital algebra A, a commutative unital algebra B,
and a unital homomorphism eps from B into the center of A.

`make_triple` enforces every axiom and raises a distinct error carrying a
concrete witness, so a failed build can always be replayed by hand.  A
small catalog of ready-made triples covers the cases used by the tests
and the command line tool.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (AlgMorphism, FinAlgebra, field_algebra, is_central,
                      matrix_algebra, multiply, split_product_algebra,
                      truncated_polynomial_algebra, validate_algebra)
from .linalg import ONE, ZERO


class TripleAxiomError(ValueError):
    """Base class for triple validation failures; carries a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class AlgebraInvalidError(TripleAxiomError):
    """A or B fails associativity or unitality."""


class BaseNotCommutativeError(TripleAxiomError):
    """B must be commutative."""


class EpsNotUnitalError(TripleAxiomError):
    """eps must send the unit of B to the unit of A."""


class EpsNotMultiplicativeError(TripleAxiomError):
    """eps must respect products."""


class EpsImageNotCentralError(TripleAxiomError):
    """eps must land in the center of A."""


class CommutativeTripleRequiredError(ValueError):
    """Operation defined only when A is commutative."""


@dataclass(eq=False)
class Triple:
    A: FinAlgebra
    B: FinAlgebra
    eps: AlgMorphism
    commutative: bool  # whether A is commutative
    name: str = ""

    def require_commutative(self, what: str) -> None:
        if not self.commutative:
            raise CommutativeTripleRequiredError(
                f"{what} requires a commutative algebra A "
                f"(triple {self.name or '<unnamed>'} is not)")


def _basis(dim: int, i: int) -> list:
    return [ONE if t == i else ZERO for t in range(dim)]


def make_triple(A: FinAlgebra, B: FinAlgebra, eps_columns,
                name: str = "") -> Triple:
    """Validate and assemble a triple.

    eps_columns lists the image in A of each basis vector of B.  Failures
    raise subclasses of TripleAxiomError with a replayable witness.
    """
    for label, alg in (("A", A), ("B", B)):
        rep = validate_algebra(alg)
        if not rep.valid:
            bad = ("associativity", rep.assoc_witness) if not rep.associative \
                else ("unit law", rep.unit_witness)
            raise AlgebraInvalidError(
                f"algebra {label} ({alg.name or 'unnamed'}) fails {bad[0]} "
                f"at basis witness {bad[1]}", witness=(label, *bad))
    rep_b = validate_algebra(B)
    if not rep_b.commutative:
        i, j = rep_b.comm_witness
        raise BaseNotCommutativeError(
            f"B is not commutative: basis products {i},{j} and {j},{i} differ",
            witness=rep_b.comm_witness)
    eps = AlgMorphism(B, A, eps_columns, name=f"eps:{name}" if name else "eps")
    img_unit = eps.apply(B.unit)
    if img_unit != A.unit:
        raise EpsNotUnitalError(
            f"eps(1_B) = {img_unit} differs from 1_A = {A.unit}",
            witness=img_unit)
    for i in range(B.dim):
        for j in range(B.dim):
            lhs = eps.apply(B.mult[i][j])
            rhs = multiply(A, eps.columns[i], eps.columns[j])
            if lhs != rhs:
                raise EpsNotMultiplicativeError(
                    f"eps is not multiplicative on basis pair ({i}, {j}): "
                    f"eps(f_{i} f_{j}) = {lhs} but eps(f_{i}) eps(f_{j}) = {rhs}",
                    witness=(i, j, lhs, rhs))
    for i in range(B.dim):
        if not is_central(A, eps.columns[i]):
            raise EpsImageNotCentralError(
                f"eps(f_{i}) = {eps.columns[i]} is not central in A",
                witness=(i, eps.columns[i]))
    rep_a = validate_algebra(A)
    return Triple(A, B, eps, commutative=rep_a.commutative, name=name)


# -- catalog ---------------------------------------------------------------

def _eps_to_unit(B: FinAlgebra, A: FinAlgebra) -> list:
    """Columns of the map sending every nilpotent basis vector to zero and
    the unit to the unit; only valid when B is Q."""
    if B.dim != 1:
        raise ValueError("helper only applies to a one-dimensional B")
    return [list(A.unit)]


def _catalog_k_k() -> Triple:
    A = field_algebra("Q")
    B = field_algebra("Q")
    return make_triple(A, B, [[ONE]], name="k_k")


def _catalog_dual_k() -> Triple:
    A = truncated_polynomial_algebra(2, "Q[x]/x^2")
    B = field_algebra("Q")
    return make_triple(A, B, _eps_to_unit(B, A), name="dual_k")


def _catalog_dual_dual_zero() -> Triple:
    A = truncated_polynomial_algebra(2, "Q[x]/x^2")
    B = truncated_polynomial_algebra(2, "Q[y]/y^2")
    eps = [list(A.unit), [ZERO, ZERO]]
    return make_triple(A, B, eps, name="dual_dual_zero")


def _catalog_dual_dual_x() -> Triple:
    A = truncated_polynomial_algebra(2, "Q[x]/x^2")
    B = truncated_polynomial_algebra(2, "Q[y]/y^2")
    eps = [list(A.unit), [ZERO, ONE]]
    return make_triple(A, B, eps, name="dual_dual_x")


def _catalog_prod_k() -> Triple:
    A = split_product_algebra(2, "QxQ")
    B = field_algebra("Q")
    return make_triple(A, B, _eps_to_unit(B, A), name="prod_k")


def _catalog_trunc3_k() -> Triple:
    A = truncated_polynomial_algebra(3, "Q[x]/x^3")
    B = field_algebra("Q")
    return make_triple(A, B, _eps_to_unit(B, A), name="trunc3_k")


def _catalog_dual_over_dual_id() -> Triple:
    A = truncated_polynomial_algebra(2, "Q[x]/x^2")
    B = truncated_polynomial_algebra(2, "Q[x]/x^2")
    eps = [[ONE, ZERO], [ZERO, ONE]]
    return make_triple(A, B, eps, name="dual_over_dual_id")


def _catalog_mat2_k() -> Triple:
    A = matrix_algebra(2, "M2(Q)")
    B = field_algebra("Q")
    return make_triple(A, B, _eps_to_unit(B, A), name="mat2_k")


_CATALOG = {
    "k_k": _catalog_k_k,
    "dual_k": _catalog_dual_k,
    "dual_dual_zero": _catalog_dual_dual_zero,
    "dual_dual_x": _catalog_dual_dual_x,
    "prod_k": _catalog_prod_k,
    "trunc3_k": _catalog_trunc3_k,
    "dual_over_dual_id": _catalog_dual_over_dual_id,
    "mat2_k": _catalog_mat2_k,
}


def catalog_names() -> list:
    return list(_CATALOG)


def catalog(name: str) -> Triple:
    """A fresh instance of a named catalog triple."""
    try:
        build = _CATALOG[name]
    except KeyError:
        raise KeyError(
            f"unknown catalog triple {name!r}; available: {', '.join(_CATALOG)}"
        ) from None
    return build()
