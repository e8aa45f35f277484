"""The Kazhdan-Lusztig shadow of the construction.

In the Hecke algebra of the infinite dihedral group, the element attached to
n+1 letters expands over the KL basis with support exactly the p-support of
n -- the same index set that organizes the diagram-side decomposition.  The
three-case multiplication rule makes everything here a few lines of exact
Laurent arithmetic.
"""

from wenzl.hecke import (
    HeckeElement,
    b1_power_closed_form,
    lemma_positivity_check,
    mul_b1_power,
    mul_by_generator,
    p_canonical,
)
from wenzl.padic import p_support
from wenzl.pjw import rational_pjw

print(__doc__)

print("Right multiplication, the three cases:")
b2 = HeckeElement.basis(2)
print(f"  b2 * b_t (same letter)  = {mul_by_generator(b2, 't')}")
print(f"  b2 * b_s (extension)    = {mul_by_generator(b2, 's')}")
print(f"  b1 * b_t (short word)   = {mul_by_generator(HeckeElement.basis(1), 't')}")

print("\nPowers of b_1 expand binomially:")
x = mul_b1_power(HeckeElement.basis(8), 2)
print(f"  b8 * b1^2 = {x}")
print(f"  closed form agrees: {x == b1_power_closed_form(8, 2)}")

print("\np-canonical elements read off the p-support:")
for n_plus_1, p in [(11, 2), (11, 3), (8, 2)]:
    print(f"  p={p}: pb[{n_plus_1}] = {p_canonical(n_plus_1, p)}")

print("\nClimbing from the father level leaves a nonnegative remainder"
      " off the support:")
for n, p in [(10, 3), (9, 2), (10, 2)]:
    rep = lemma_positivity_check(n, p)
    rem = " + ".join(f"{c}*b{k}" for k, c in rep.remainder.items()) or "0"
    print(f"  p={p}, n={n}: remainder {rem}, ok={rep.ok}")

print("\nThe diagram-side index set matches the Hecke support"
      " (shifted by one):")
for p in (2, 3):
    for n in (9, 10, 12):
        dec = rational_pjw(n, p)
        hecke = tuple(sorted(p_canonical(n + 1, p).terms))
        print(f"  p={p}, n={n}: diagram {dec.index_set} + 1 == hecke {hecke}:",
              tuple(i + 1 for i in dec.index_set) == hecke)
