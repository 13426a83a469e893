"""
Hilbert functions from Betti diagrams
=====================================

The Hilbert function is the alternating sum of generators below each
bidegree.  For a ray it vanishes from total degree d2 - 1 on.
"""

from bettycone import extremal_rays
from bettycone.diagram import hilbert_function, hilbert_numerator, pure_type

for ray in extremal_rays(2, 3):
    D = ray.diagram
    d2 = pure_type(D).d[2]
    h = hilbert_function(D, d2)
    print("T =", ray.T, "numerator", hilbert_numerator(D))
    for total in range(d2):
        row = [h[(total - j, j)] for j in range(total + 1)]
        print(f"  degree {total}: {[int(v) for v in row]}")
    print("  length", sum(h.values()))
