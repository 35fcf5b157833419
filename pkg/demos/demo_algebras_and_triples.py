"""Build algebras from structure constants and assemble validated triples.

Run:  python3 demos/demo_algebras_and_triples.py
"""

from fractions import Fraction

from sechom import (catalog, catalog_names, field_algebra, make_triple,
                    matrix_algebra, multiply, truncated_polynomial_algebra,
                    validate_algebra)
from sechom.triples import EpsNotMultiplicativeError

F = Fraction


def main():
    # An algebra is a multiplication table: mult[i][j] lists the
    # coordinates of (basis i) * (basis j).
    dual = truncated_polynomial_algebra(2, name="Q[x]/(x^2)")
    print(f"{dual.name}: dimension {dual.dim}, unit {dual.unit}")
    x = [F(0), F(1)]
    print(f"  x * x = {multiply(dual, x, x)}   (nilpotent)")
    rep = validate_algebra(dual)
    print(f"  associative={rep.associative} unital={rep.unital} "
          f"commutative={rep.commutative}")

    mat2 = matrix_algebra(2)
    rep = validate_algebra(mat2)
    print(f"{mat2.name}: commutative={rep.commutative}, "
          f"witness pair {rep.comm_witness}")

    # A triple needs a second commutative algebra B and a map eps from B
    # into the center of A, given by one column per basis vector of B.
    T = make_triple(dual, truncated_polynomial_algebra(2, name="Q[y]/(y^2)"),
                    [[F(1), F(0)], [F(0), F(1)]], name="demo")
    print(f"\ntriple {T.name}: dim A = {T.A.dim}, dim B = {T.B.dim}, "
          f"commutative = {T.commutative}")

    # Violations are rejected with a replayable witness.
    try:
        make_triple(dual, truncated_polynomial_algebra(2),
                    [[F(1), F(0)], [F(1), F(0)]])  # y -> 1 breaks y^2 = 0
    except EpsNotMultiplicativeError as exc:
        print(f"rejected bad map: {exc}")

    print("\nbuilt-in catalog:")
    for name in catalog_names():
        C = catalog(name)
        kind = "commutative" if C.commutative else "noncommutative"
        print(f"  {name:20s} dim A = {C.A.dim}, dim B = {C.B.dim}  ({kind})")


if __name__ == "__main__":
    main()
