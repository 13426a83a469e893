"""Cones of bigraded Betti diagrams of artinian modules with pure total degrees.

Submodules:

* :mod:`bettycone.multipoly` -- exact Laurent polynomials.
* :mod:`bettycone.diagram` -- multigraded Betti diagrams, HK equations, Hilbert functions.
* :mod:`bettycone.cone2` -- extremal rays and greedy decomposition in two variables.
* :mod:`bettycone.realize2` -- explicit resolutions realizing each ray, with certificates.
* :mod:`bettycone.trigraded` -- SSYT characters and the three-variable example.
"""

from .multipoly import LaurentPoly, xi, inflate, homogenize, dehomogenize
from .diagram import BettiDiagram, hk_check, pure_type, twist, combine
from .cone2 import OrderIdeal, order_ideals, ray_polynomials, ray_diagram, decompose, extremal_rays
from .realize2 import realize
from .trigraded import equivariant_diagram, ssyt_character

__all__ = [
    "LaurentPoly", "xi", "inflate", "homogenize", "dehomogenize",
    "BettiDiagram", "hk_check", "pure_type", "twist", "combine",
    "OrderIdeal", "order_ideals", "ray_polynomials", "ray_diagram", "decompose", "extremal_rays",
    "realize", "equivariant_diagram", "ssyt_character",
]
__version__ = "0.1.0"
