"""The base-p digit combinatorics behind the projector recursion.

For each n the digits of n+1 produce a set of signed digit sums (the
p-support), a distinguished ancestor (the father), and a chain ending at an
n with a single nonzero digit (a p-Adam).  Printed over a range of n the
supports trace out a fractal.
"""

from wenzl.padic import (
    admissible_expansion,
    father_chain,
    lucas_jw_defined,
    p_support,
    support_via_admissible,
)

print(__doc__)

p = 2
print(f"p = {p}: supports of n = 1..31 (columns mark elements of supp):\n")
width = 34
for n in range(1, 32):
    data = p_support(n, p)
    row = ["."] * width
    for s in data.supp:
        row[s] = "#"
    tag = "adam" if data.is_adam else f"father {data.father}"
    print(f"  n={n:2d} |{''.join(row)}| {tag}")

print("\nFather chains descend to an Adam in one step per extra digit:")
for n in [10, 11, 12, 100]:
    print(f"  {n}: {' -> '.join(map(str, father_chain(n, 2)))}")

print("\nThe admissible expansion re-encodes the same data "
      "(digits in [p-1, 2p-2] below the top):")
for n, q in [(10, 2), (10, 3), (100, 5)]:
    exp = admissible_expansion(n, q)
    assert support_via_admissible(n, q) == p_support(n, q).supp
    print(f"  n={n}, p={q}: digits {list(exp.digits)}; both support roads agree")

print("\nLucas-style definability of JW_n over F_2 "
      "(exactly the n with all low digits p-1):")
good = [n for n in range(1, 32) if lucas_jw_defined(n, 2)]
print(f"  {good}")
