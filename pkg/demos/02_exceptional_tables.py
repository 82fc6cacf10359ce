"""
Exceptional groups: which indexes occur at which prime
=======================================================

Rebuilds the occurrence columns of the E7 and E8 tables and prints the
Killing-form signature of the real form, when one exists.
"""

from titsindex import enumerate_indexes, signature_of_real_form, torsion_primes
from titsindex.diagrams import to_bourbaki

for family in ("F4", "E7", "E8"):
    primes = sorted(torsion_primes(family[0], int(family[1])))
    seen = {}
    for p in primes:
        for ix in enumerate_indexes(family, p=p):
            seen.setdefault(ix, []).append(p)
    print(f"{family}: torsion primes {primes}")
    for ix, ps in seen.items():
        sig = signature_of_real_form(ix)
        bourbaki = to_bourbaki(ix.diagram, ix.distinguished_vertices)
        print(f"  {str(ix):34s} Bourbaki {str(list(bourbaki)):26s} primes {ps}  signature {sig}")
    print()
