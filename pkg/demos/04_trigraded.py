"""
Three variables: HK is not enough
=================================

A nonnegative combination of twists of the equivariant diagram of type
(1, 2, 1) satisfies HK, but a degree-0 generator has no partner in F1 that
differs in the last coordinate only.  So no module has that diagram.
"""

from bettycone.trigraded import (
    collapse_obstruction,
    diagram_report,
    equivariant_diagram,
    equivariant_shapes,
    example_alpha,
    hk_only_candidate,
)

print(equivariant_shapes((1, 2, 1)))
beta = equivariant_diagram((1, 2, 1))
print(beta)
print("ranks", beta.ranks())

candidate = hk_only_candidate()
print("\ncandidate:", diagram_report(candidate))
print("obstructed in z:", collapse_obstruction(candidate, 3))

alpha = example_alpha()
print("\nalpha:", diagram_report(alpha))
