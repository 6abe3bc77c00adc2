"""A walk through the twisted Bruhat order on the A2 Weyl group.

The order <=J interpolates between the Bruhat order (J empty) and the
reversed Bruhat order (J = all nodes).  Along the way it is graded by
the J-length l(w^J) - l(w_J), which can be negative.
"""

from twistflag import (ParabolicContext, cartan_A, j_interval, j_leq,
                       j_length, minimal_c)
from twistflag.posets import poset_to_dot
from twistflag.weyl import weyl_group

g = weyl_group(cartan_A(2))
s1, s2 = g.simple(0), g.simple(1)
e = g.identity
w0 = s1 * s2 * s1

print("The 6 elements of W(A2), with lengths:")
for w in g.ball(3):
    print(f"  {str(w):12s} length {w.length()}")

J = ParabolicContext(g, {1})
print("\nJ = {2}: J-lengths can go negative:")
for w in g.ball(3):
    print(f"  {str(w):12s} l^J = {j_length(w, J):+d}")

print("\nSome comparisons in <=J:")
for v, w in [(s2, s1), (s1, w0), (e, w0)]:
    verdict = j_leq(v, w, J)
    line = f"  {str(v):10s} <=J {str(w):10s} : {verdict}"
    if verdict:
        line += f"   (minimal witness c = {minimal_c(v, w, J)})"
    print(line)

print("\nThe interval [s2, s1] in (W, <=J) is graded by J-length:")
iv = j_interval(s2, s1, J)
for z in iv.elements:
    print(f"  rank {iv.rank_of(z)}: {z}")

print("\nIts Hasse diagram in DOT form:")
print(poset_to_dot(iv.to_finite_poset()))
