"""
From cohomological invariants to indexes, and motivic equivalence
=================================================================

Profiles carry classes in small finite groups standing in for H^3.
"""

from titsindex import (
    InvariantProfile,
    constraints_for_index,
    index_from_profile,
    motivic_equivalent,
    motivic_equivalent_mod_p,
)
from titsindex.invariants import CohGroup, cyclic

Z2, Z3, Z4 = cyclic(2), cyclic(3), cyclic(4)

# F4: f3 != 0 and f5 = 0 gives the index of the real form with signature -20
g = InvariantProfile("F4", f3=Z2.element(1), f5=Z2.zero(), g3=Z3.element(1))
print("F4 2-index:", index_from_profile(g, 2))
print("F4 3-index:", index_from_profile(g, 3))

# replacing g3 by -g3 keeps the group in the same motivic class at every prime
g_prime = InvariantProfile("F4", f3=Z2.element(1), f5=Z2.zero(), g3=-Z3.element(1))
print("F4 pair:", motivic_equivalent(g, g_prime).to_json())

# 2E6: b in H^3(Z/4); the flags record symbol / killed-by-K information
for b in (Z4.element(2, is_symbol=True, killed_by_K=True), Z4.element(2, is_symbol=False), Z4.element(1)):
    print("2E6 with b =", b.coordinates, b.is_symbol, b.killed_by_K, "->",
          index_from_profile(InvariantProfile("2E6", b=b), 2))

# E7 at p = 3: b and -b are equivalent, independent classes are not
Z3Z3 = CohGroup((3, 3))
a, b, c = (InvariantProfile("E7", b=Z3Z3.element(*v)) for v in [(1, 0), (2, 0), (0, 1)])
print("E7 b vs -b:", motivic_equivalent_mod_p(a, b, 3).verdict)
print("E7 b vs b':", motivic_equivalent_mod_p(a, c, 3).verdict)

# E7 at p = 2: only ind A is tabulated, which does not pin the index down
res = index_from_profile(InvariantProfile("E7", ind_A=2), 2)
print("E7 with ind A = 2:", [str(ix) for ix in res.candidates])

# the inverse direction: what a given index says about the invariants
anis = index_from_profile(InvariantProfile("E7", ind_A=8), 2)
print("anisotropic E7 needs ind A", constraints_for_index(anis, 2).get("ind_A"))
