"""
Greedy decomposition into rays
==============================

A pair (A, B) with A * xi_q = B * xi_p and nonnegative coefficients lies in
the cone.  Peeling off the smallest ray at the lowest degree recovers a
nonnegative combination of shifted rays.
"""

import random

from bettycone import decompose, order_ideals, ray_polynomials
from bettycone.cone2 import verify_pair
from bettycone.multipoly import LaurentPoly, inflate

p, q, m = 3, 4, 2
rng = random.Random(7)

A = LaurentPoly.zero(1)
B = LaurentPoly.zero(1)
planted = []
for _ in range(4):
    T = rng.choice(order_ideals(p, q))
    shift, gamma = rng.randint(0, 6), rng.randint(1, 3)
    AT, BT = ray_polynomials(T, p, q)
    A = A + inflate(AT, m).shift(shift).scale(gamma)
    B = B + inflate(BT, m).shift(shift).scale(gamma)
    planted.append((gamma, shift, T))

print("A =", A)
print("B =", B)
print("in the linear span:", verify_pair(A, B, p, q, m))

dec = decompose(A, B, p, q, m)
for term in dec.terms:
    print(f"  {term.gamma} * ray(T={term.T}) shifted by {term.shift}")
print("re-summation reproduces the input:", dec.resum() == (A, B))

# The decomposition need not match the planted terms: it is one of possibly
# several, but every term is a genuine ray with positive weight.
print("planted:", planted)
