"""A tour of the diagram calculus: matchings, stacking, and the loop rule.

The objects are crossingless matchings: planar pairings of points on the
bottom and top edges of a rectangle.  Stacking one diagram on another glues
the middle points; every closed loop that appears is erased against a factor
of -2.
"""

from fractions import Fraction

from wenzl.render import ascii_matching, ascii_morphism
from wenzl.tl import (
    TLMorphism,
    catalan,
    compose,
    e_matching,
    enumerate_basis,
    identity_matching,
    markov_trace,
)

print(__doc__)

print("The identity on three strands:")
print(ascii_matching(identity_matching(3)))

print("\nThe cup-cap generator e_1 on two strands:")
print(ascii_matching(e_matching(1, 2)))

e1 = TLMorphism.from_matching(e_matching(1, 2))
sq = compose(e1, e1)
print("\nStacking e_1 on itself closes one loop, so e_1 o e_1 = -2 e_1:")
print(ascii_morphism(sq))

print("\nHom spaces have Catalan-number dimensions:")
for n, m in [(2, 2), (3, 3), (4, 4), (1, 3), (2, 4)]:
    print(f"  dim Hom({n},{m}) = {len(enumerate_basis(n, m))}"
          f"  (catalan {catalan((n + m) // 2)})")

print("\nMixed parity spaces are zero:")
print(f"  dim Hom(1,2) = {len(enumerate_basis(1, 2))}")

print("\nClosing every strand of an endomorphism counts circles at -2 each:")
id3 = TLMorphism.identity(3)
print(f"  closure of id_3 = {markov_trace(id3)}  (three circles: (-2)^3)")
e13 = TLMorphism.from_matching(e_matching(1, 3))
print(f"  closure of e_1 in TL_3 = {markov_trace(e13)}  (two circles)")
