"""Double flag strata through the thickened group.

Adding one node joined to everything by -2 turns pairs (w, v) into
single elements w s_inf v of a bigger Weyl group; the triple poset of
double-flag strata embeds into twisted intervals there, giving both the
shellability certificates and the positive parametrization.
"""

import itertools

from twistflag import (PinnedGroup, TripleIndex, cartan_A, check_pure,
                       check_thin, extend_cartan, is_sphere_signature,
                       link_boundary_poset, order_complex, q_el_label,
                       q_interval_hat, q_member, reduced_homology,
                       verify_el, z_sample)
from twistflag.cells import (bruhat_stratum, double_minus_stratum,
                             mixed_stratum)
from twistflag.weyl import weyl_group

tc = extend_cartan(cartan_A(1))
print("Thickened A1 Cartan matrix:", [list(r) for r in tc.extended.entries])
g = tc.base_group
e, s = g.identity, g.simple(0)
print("th(s, s) =", tc.th(s, s), "of length", tc.th(s, s).length())

print("\nMembership in the triple poset Q (w o_l v <= u):")
for w, v, u in [(s, e, e), (e, s, e), (s, s, e)]:
    print(f"  ({w}, {v}, {u}) member: {q_member(w, v, u)}")

top = TripleIndex(s, e, s)
fp = q_interval_hat(top)
print(f"\n[0-hat, (s, e, s)]: {len(fp.elements)} elements,",
      "pure:", check_pure(fp)[0], "thin:", check_thin(fp)[0])
lp = q_el_label(fp, tc)
print("EL-labeling through the thickened group verified:", bool(verify_el(lp)))

print("\nZ-stratum sampling in SL2 (three stratum checks inside):")
pin = PinnedGroup(2)
g1, g2 = z_sample(pin, s, e, s, [3, 4])
print("  (w,v,u) = (s,e,s): g1 =", g1.rows, " g2 =", g2.rows)
print("  g1 in B+ w B+:", bruhat_stratum(pin, g1) == s)
print("  g2 in B+ v B-:", mixed_stratum(pin, g2) == e)
print("  g1 g2 in B- u B-:", double_minus_stratum(pin, g1 * g2) == s)

print("\nLink-of-identity boundaries are homology spheres:")
gA2 = weyl_group(cartan_A(2))
for w, u in [(gA2.simple(0), gA2.simple(0)),
             (gA2.simple(0) * gA2.simple(1), gA2.simple(0))]:
    bd = link_boundary_poset(w, u)
    h = reduced_homology(order_complex(bd, "full"))
    d = w.length() + u.length() - 2
    print(f"  (w,u) = ({w}, {u}): sphere of dim {d}:",
          is_sphere_signature(h, d))
