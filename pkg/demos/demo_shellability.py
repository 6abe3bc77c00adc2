"""Certifying that twisted Bruhat intervals are spheres, combinatorially.

Three certificates per interval: pure + thin (chain counting), an
EL-labeling by reflections (unique increasing chain, lex-minimal), and
the reduced integral homology of the open interval's order complex,
which must be that of a sphere of dimension rank - 2.
"""

from twistflag import (ParabolicContext, cartan_A, cartan_affine_A1,
                       check_pure, check_thin, j_interval, j_length,
                       order_complex, reduced_homology,
                       reflection_order_from_word, verify_el)
from twistflag.batteries import order_for_interval
from twistflag.homology import homology_to_json
from twistflag.posets import el_label_twisted_interval
from twistflag.weyl import weyl_group

g = weyl_group(cartan_A(2))
e = g.identity
w0 = g.simple(0) * g.simple(1) * g.simple(0)
J0 = ParabolicContext(g, set())

iv = j_interval(e, w0, J0)
fp = iv.to_finite_poset()
print(f"Bruhat interval [e, w0] in A2: {len(fp)} elements")
print("  pure:", check_pure(fp)[0], " thin:", check_thin(fp)[0])

order = reflection_order_from_word(g, (0, 1, 0))
print("  reflection order:", [str(t) for t in order.reflections])
lp = el_label_twisted_interval(iv, order)
print("  EL verified:", bool(verify_el(lp)))

sc = order_complex(fp, "open-interval")
print("  open-interval order complex:", sc.to_json())
print("  homology:", homology_to_json(reduced_homology(sc)))
print("  (a circle: the interval is a 2-sphere's worth of cells, rank 3)")

print("\nThe same machinery runs in infinite type.  Affine A1:")
aff = weyl_group(cartan_affine_A1())
J = ParabolicContext(aff, {1})
x = aff.identity
y = aff.from_word((0, 1, 0))
print(f"interval [e, s0 s1 s0] under <=J, J = {{2nd node}}:")
iv = j_interval(x, y, J)
print("  size:", len(iv.elements),
      " ranks:", sorted({j_length(z, J) for z in iv.elements}))
order = order_for_interval(iv)
print("  fitted reflection order:", [str(t) for t in order.reflections])
print("  EL verified:", bool(verify_el(el_label_twisted_interval(iv, order))))
