"""Birkhoff-James orthogonality, hands on.

x is orthogonal to y when no multiple of y brings x closer to the origin:
norm(x + t y) >= norm(x) for every t. In a polyhedral space this reduces to
a sign test over the functionals that attain the norm at x, and an exact
linear program over t reproduces the same answer from the definition. The
relaxed variant tolerates a shrinkage of epsilon per unit of y.
"""

from fractions import Fraction

import coapprox as ca

F = Fraction


def fmt(v):
    return "(" + ", ".join(str(F(c)) for c in v) + ")"


def check(space, label, x, y):
    fast = ca.bj_orthogonal(space, x, y)
    oracle = ca.bj_orthogonal_lambda_oracle(space, x, y)
    state = "orthogonal" if fast else "not orthogonal"
    print(f"  {fmt(x)} vs {fmt(y)}: {state} (definition-based oracle agrees: {fast == oracle})")


def main():
    linf = ca.make_linf(2)
    print("max norm on R^2:")
    check(linf, "smooth", (1, F(1, 2)), (0, 1))
    check(linf, "corner", (1, 1), (1, -1))
    check(linf, "corner", (1, 0), (1, 1))
    print("  note the asymmetry:")
    check(linf, "flip", (0, 1), (1, F(1, 2)))

    print()
    l1 = ca.make_l1(2)
    print("sum norm on R^2:")
    check(l1, "diag", (1, 1), (1, -1))
    check(l1, "diag", (1, 1), (1, 0))

    print()
    print("the relaxed form on the max norm:")
    x, y = (1, 0), (F(1, 4), 1)
    for eps in [F(0), F(1, 8), F(1, 4), F(1, 2)]:
        ans = ca.eps_bj_orthogonal(linf, x, y, eps)
        print(f"  tolerance {eps}: {fmt(x)} vs {fmt(y)} -> {ans}")
    print("  the support values of y over J(x) sit 1/4 away from zero,")
    print("  so tolerances from 1/4 on accept the pair.")

    print()
    print("defects measure how far a candidate is from being a best coapproximation:")
    sp = ca.make_linf(3)
    span = ca.subspace([(1, 1, 2), (2, 2, 1)])
    for x in [(1, -1, 0), (5, 1, 2), (1, 0, 0)]:
        d = ca.eps_coapprox_defect(sp, span, x, (0, 0, 0))
        tag = "a best coapproximation" if d == 0 else f"defect {d}"
        print(f"  origin against {x}: {tag}")


if __name__ == "__main__":
    main()
