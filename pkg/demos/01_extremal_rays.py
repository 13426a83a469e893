"""
Extremal rays of the bigraded cone
==================================

For a pure type (e1, e2) in two variables, each order ideal in the region
px + qy < (p-1)(q-1) gives one translation class of extremal rays.
"""

from bettycone import extremal_rays, hk_check

# Type (2, 3): two classes, the monomial quotient and the equivariant resolution.
for ray in extremal_rays(2, 3):
    print("T =", ray.T, ray.label())
    print(ray.diagram)
    print()

# Both satisfy the HK equations, as every Betti diagram of finite length must.
print([hk_check(ray.diagram) for ray in extremal_rays(2, 3)])

# A bigger type: one ray per order ideal of the region.
rays = extremal_rays(5, 7)
print(len(rays), "classes for (5, 7)")
for ray in rays[:4]:
    lam, mu = ray.partitions
    print(ray.T, "lambda", lam, "mu", mu)

# When e1 and e2 share a factor m, the polynomials are inflated in t^m.
ray = extremal_rays(4, 6)[-1]
print("m =", ray.m, " A =", ray.A, " B =", ray.B)
