"""How the max norm decides anti-coproximinality from the basis alone.

For a subspace of the max-norm space spanned by rows a_1..a_m, collect the
i-th coordinates of all rows into the i-th component vector. Two clauses
decide everything:

  1. no two components may agree up to sign (each index associated only
     with itself), and
  2. each component must strictly dominate all others under some choice of
     coefficients (the separation property).

Both clauses hold for every coordinate exactly when no point outside the
subspace has a best coapproximation, and in this space that automatically
upgrades to the strong version: relaxed coapproximations fail too.
"""

import coapprox as ca

FIXTURES = {
    "wide (five coordinates, three rows)": [
        (-4, 2, 3, 1, 3),
        (1, -5, 4, 2, -3),
        (1, 3, -7, 4, 6),
    ],
    "narrow (first two components equal)": [
        (1, 1, 2),
        (2, 2, 1),
    ],
    "small strong pair": [
        (3, 0, 2),
        (0, 3, 2),
    ],
}


def describe(name, rows):
    print(name)
    table = ca.component_table(rows)
    for i in range(1, table.n + 1):
        comp = tuple(str(c) for c in table.component(i))
        assoc = sorted(table.associated(i))
        star = ca.star_property(rows, i)
        mark = "holds" if star.holds else "fails"
        extra = ""
        if star.holds:
            extra = f", witness {tuple(str(b) for b in star.witness)}"
        print(f"  component {i} = {comp}: associated {assoc}, separation {mark}{extra}")

    verdict = ca.linf_classify(rows)
    if verdict.strongly_anti:
        print("  verdict: strongly anti-coproximinal")
    else:
        print(f"  verdict: not strongly anti ({verdict.reason})")

    n = len(rows[0])
    generic = ca.is_strongly_anti_coproximinal(ca.make_linf(n), ca.subspace(rows))
    agree = (generic.status == "yes") == verdict.strongly_anti
    print(f"  generic engine agrees: {agree}")
    print()


def main():
    for name, rows in FIXTURES.items():
        describe(name, rows)

    print("appending an all-zero coordinate breaks separation there:")
    rows = [row + (0,) for row in FIXTURES["wide (five coordinates, three rows)"]]
    verdict = ca.linf_classify(rows)
    print(
        f"  six-coordinate version: failing index {verdict.failing_index},"
        f" clause {verdict.failing_clause}"
    )


if __name__ == "__main__":
    main()
