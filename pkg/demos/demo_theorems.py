"""Mechanical verification of the degree-one isomorphisms.

Run:  python3 demos/demo_theorems.py
"""

from sechom import (catalog, truncated_polynomial_algebra, verify_cor_hc1,
                    verify_main, verify_prop_hh1_omega, verify_prop_omega_J,
                    verify_reduction_Bk)


def main():
    T = catalog("dual_dual_x")
    print("three descriptions of the same degree-one invariant:\n")

    rep = verify_prop_hh1_omega(T)
    print(f"{rep}")
    rep = verify_prop_omega_J(T)
    print(f"{rep}")
    rep = verify_main(T)
    print(f"{rep}")
    print("\nchecks performed by the main comparison:")
    for label, ok in rep.checks:
        print(f"  [{'ok' if ok else 'FAIL'}] {label}")

    rep = verify_cor_hc1(T)
    print(f"\n{rep}")

    print("\nwith B the ground field the engine must reproduce the "
          "classical theory:")
    rep = verify_reduction_Bk(truncated_polynomial_algebra(3))
    print(f"{rep}")

    print("\nthe whole commutative catalog:")
    for name in ("k_k", "dual_k", "dual_dual_zero", "dual_dual_x",
                 "prod_k", "trunc3_k", "dual_over_dual_id"):
        print(f"  {verify_main(catalog(name))}")


if __name__ == "__main__":
    main()
