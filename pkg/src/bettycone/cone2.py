"""The cone of pure bigraded diagrams in two variables.

After dehomogenizing, an element of the cone for differences
``(e1, e2) = (m*q, m*p)`` (``p``, ``q`` coprime) is a pair of one-variable
Laurent polynomials ``(A, B)`` with nonnegative coefficients satisfying

    A(t) * xi_q(t^m) == B(t) * xi_p(t^m).

Its extremal rays are ``(t^c A_T(t^m), t^c B_T(t^m))`` for order ideals ``T``
of the lattice region ``p*x + q*y < (p-1)(q-1)``.  This module enumerates
those ideals, builds the ray polynomials and their canonical Betti
diagrams, and decomposes arbitrary cone elements greedily into rays.

Order ideals are stored as sets of points ``(x, y)``.  The row partition
``lam[y] = 1 + max{x : (x, y) in T}`` and the column partition
``mu[x] = 1 + max{y : (x, y) in T}`` are dual to each other.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .diagram import BettiDiagram, hk_check, membership_L2
from .errors import InternalError, InvalidArgument, NotInConeError
from .multipoly import (
    LaurentPoly,
    frac_str,
    homogenize,
    inflate,
    is_nonnegative,
    max_exponent,
    min_exponent,
    xi,
)


def region_points(p, q):
    if p < 1 or q < 1:
        raise InvalidArgument("p and q must be positive")
    bound = (p - 1) * (q - 1)
    return frozenset((x, y) for x in range(q) for y in range(p)
                     if p * x + q * y < bound)


@dataclass(frozen=True)
class OrderIdeal:
    points: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        pts = frozenset((int(x), int(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        for x, y in pts:
            if x < 0 or y < 0:
                raise InvalidArgument(f"point {(x, y)} is outside N^2")
            if (x > 0 and (x - 1, y) not in pts) or (y > 0 and (x, y - 1) not in pts):
                raise InvalidArgument(f"{sorted(pts)} is not downward closed")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))

    def __contains__(self, pt):
        return tuple(pt) in self.points

    def sort_key(self):
        return (len(self.points), sorted(self.points))

    def maximal_elements(self):
        return sorted((x, y) for x, y in self.points
                      if (x + 1, y) not in self.points and (x, y + 1) not in self.points)

    def __str__(self):
        return "{" + ", ".join(f"({x},{y})" for x, y in self) + "}"


def _check_coprime(p, q):
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise InvalidArgument(f"p={p} and q={q} must be coprime positive integers")


def order_ideals(p, q):
    """Every order ideal inside the region, sorted by size then points."""
    _check_coprime(p, q)
    region = region_points(p, q)
    widths = []
    y = 0
    while True:
        w = sum(1 for (x, yy) in region if yy == y)
        if not w:
            break
        widths.append(w)
        y += 1

    found = []

    def rows(y, cap, acc):
        if y == len(widths) or cap == 0:
            found.append(acc)
            return
        for length in range(min(cap, widths[y]) + 1):
            rows(y + 1, length, acc + [(x, y) for x in range(length)])

    rows(0, widths[0] if widths else 0, [])
    ideals = [OrderIdeal(frozenset(pts)) for pts in found]
    return sorted(ideals, key=OrderIdeal.sort_key)


def maximal_ideal(p, q):
    return OrderIdeal(region_points(p, q))


def dual_partition(parts, length=None):
    """``mu_i = #{j : parts_j > i}``, padded with zeros to ``length``."""
    top = max(parts, default=0)
    mu = [sum(1 for lam in parts if lam > i) for i in range(top)]
    if length is not None:
        if len(mu) > length:
            raise InvalidArgument("dual partition does not fit the requested length")
        mu += [0] * (length - len(mu))
    return tuple(mu)


def ideal_from_partition(lam):
    """Order ideal whose row lengths are ``lam`` (row ``y`` has ``lam[y]`` points)."""
    lam = list(lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(a < 0 for a in lam):
        raise InvalidArgument(f"{lam} is not a partition")
    return OrderIdeal(frozenset((x, y) for y, n in enumerate(lam) for x in range(n)))


def partitions_of(T, p, q):
    """The row partition (length ``p``) and column partition (length ``q``) of ``T``."""
    if not T.points <= region_points(p, q):
        raise InvalidArgument(f"ideal {T} is not contained in R({p},{q})")
    lam = [0] * p
    mu = [0] * q
    for x, y in T.points:
        lam[y] = max(lam[y], x + 1)
        mu[x] = max(mu[x], y + 1)
    return tuple(lam), tuple(mu)


def ray_polynomials(T, p, q):
    """``(A_T, B_T)`` with ``A_T = sum_a t^(a q - p lam[p-1-a])`` and symmetrically ``B_T``."""
    _check_coprime(p, q)
    lam, mu = partitions_of(T, p, q)
    a_exps = [a * q - p * lam[p - 1 - a] for a in range(p)]
    b_exps = [a * p - q * mu[q - 1 - a] for a in range(q)]
    if min(a_exps) < 0 or min(b_exps) < 0:
        raise InternalError(f"negative exponent for ideal {T}")
    return LaurentPoly.from_exponents(a_exps, 1), LaurentPoly.from_exponents(b_exps, 1)


def type_parameters(e1, e2):
    """``(p, q, m)`` with ``e1 = m q``, ``e2 = m p``."""
    if e1 < 1 or e2 < 1:
        raise InvalidArgument("degree differences must be positive")
    m = gcd(e1, e2)
    return e2 // m, e1 // m, m


def ray_triple(T, e1, e2):
    """Canonical homogeneous Betti triple of the ray for ``T``.

    ``B0`` is homogenized at its own degree (its top-``t`` generator has
    ``u``-exponent 0); ``B2`` and ``B1`` follow from the linear relations.
    """
    p, q, m = type_parameters(e1, e2)
    A, B = ray_polynomials(T, p, q)
    A, B = inflate(A, m), inflate(B, m)
    d0 = max_exponent(A)
    B0 = homogenize(A, d0)
    B2 = homogenize(B.shift(p * m), d0 + e1 + e2)
    B1 = B2.shift((0, -p * m)) + B0.shift((0, q * m))
    return B0, B1, B2


def ray_diagram(T, e1, e2):
    B0, B1, B2 = ray_triple(T, e1, e2)
    D = BettiDiagram.from_polynomials([B0, B1, B2])
    if not D.is_nonnegative() or hk_check(D) or not membership_L2((B0, B1, B2), e1, e2):
        raise InternalError(f"ray diagram for {T} failed its own checks")
    return D


@dataclass(frozen=True)
class ExtremalRay:
    T: OrderIdeal
    p: int
    q: int
    m: int
    A: LaurentPoly
    B: LaurentPoly
    triple: tuple

    @property
    def diagram(self):
        return BettiDiagram.from_polynomials(self.triple)

    @property
    def partitions(self):
        return partitions_of(self.T, self.p, self.q)

    def label(self):
        labels = []
        if not self.T.points:
            labels.append("monomial-quotient")
        if self.T.points == region_points(self.p, self.q):
            labels.append("equivariant")
        return "/".join(labels)


def extremal_rays(e1, e2):
    """One representative of each translation class of extremal rays."""
    p, q, m = type_parameters(e1, e2)
    rays = []
    for T in order_ideals(p, q):
        A, B = ray_polynomials(T, p, q)
        rays.append(ExtremalRay(T, p, q, m, inflate(A, m), inflate(B, m),
                                ray_triple(T, e1, e2)))
    return rays


def _residue_coordinates(e, p, q):
    """Write ``e = a q - b p`` with ``0 <= a < p``."""
    a = (e * pow(q, -1, p)) % p if p > 1 else 0
    return a, (a * q - e) // p


def min_extract(A, p, q):
    """Split ``A = A_min + A_plus``.

    Each exponent is written uniquely as ``a q - b p`` with ``0 <= a < p``;
    ``lam[p-1-a]`` is the largest ``b`` occurring for residue ``a`` (``None``
    if the residue class is empty) and ``A_min`` keeps those terms.
    """
    _check_coprime(p, q)
    if not is_nonnegative(A):
        raise InvalidArgument("min_extract needs nonnegative coefficients")
    best = {}
    for (e,), c in A:
        a, b = _residue_coordinates(e, p, q)
        if a not in best or b > best[a][0]:
            best[a] = (b, e, c)
    lam = [None] * p
    kept = {}
    for a, (b, e, c) in best.items():
        lam[p - 1 - a] = b
        kept[(e,)] = c
    A_min = LaurentPoly(1, kept)
    return A_min, tuple(lam), A - A_min


@dataclass(frozen=True)
class DecompositionTerm:
    T: OrderIdeal
    shift: int
    gamma: Fraction


@dataclass
class Decomposition:
    p: int
    q: int
    m: int
    terms: list

    def resum(self):
        A = LaurentPoly.zero(1)
        B = LaurentPoly.zero(1)
        for term in self.terms:
            AT, BT = ray_polynomials(term.T, self.p, self.q)
            A = A + inflate(AT, self.m).shift(term.shift).scale(term.gamma)
            B = B + inflate(BT, self.m).shift(term.shift).scale(term.gamma)
        return A, B

    def to_json(self):
        return {
            "p": self.p, "q": self.q, "m": self.m,
            "terms": [{"ideal": [list(pt) for pt in t.T], "shift": t.shift,
                       "gamma": frac_str(t.gamma)} for t in self.terms],
        }

    @classmethod
    def from_json(cls, data):
        return cls(int(data["p"]), int(data["q"]), int(data["m"]), [
            DecompositionTerm(OrderIdeal(frozenset(tuple(pt) for pt in t["ideal"])),
                              int(t["shift"]), Fraction(t["gamma"]))
            for t in data["terms"]])


def verify_pair(A, B, p, q, m=1):
    if not (is_nonnegative(A) and is_nonnegative(B)):
        return False
    return B * inflate(xi(p), m) == A * inflate(xi(q), m)


def split_residues(f, m):
    """``f = sum_i t^i f_i(t^m)``; returns ``[f_0, ..., f_{m-1}]``."""
    parts = [dict() for _ in range(m)]
    for (e,), c in f:
        parts[e % m][((e - e % m) // m,)] = c
    return [LaurentPoly(1, d) for d in parts]


def _greedy(A, B, p, q):
    """Greedy ray decomposition of one residue class (``m = 1``)."""
    terms = []
    while A or B:
        if not (A and B):
            raise InternalError("one side of the pair vanished before the other")
        c = min_exponent(A)
        if min_exponent(B) != c:
            raise InternalError("pair sides have different trailing degrees")
        A0, B0 = A.shift(-c), B.shift(-c)
        A_min, lam, _ = min_extract(A0, p, q)
        B_min, mu, _ = min_extract(B0, q, p)
        if None in lam or None in mu:
            raise InternalError("a residue class is empty mid-decomposition")
        T = ideal_from_partition(lam)
        if partitions_of(T, p, q) != (lam, mu):
            raise InternalError(f"extracted partitions {lam}, {mu} are not dual")
        gamma = min(c for _, c in list(A_min) + list(B_min))
        AT, BT = ray_polynomials(T, p, q)
        A = A - AT.shift(c).scale(gamma)
        B = B - BT.shift(c).scale(gamma)
        if not (is_nonnegative(A) and is_nonnegative(B)):
            raise InternalError("subtraction produced a negative coefficient")
        terms.append((T, c, gamma))
    return terms


def decompose(A, B, p, q, m=1):
    """Write ``(A, B)`` as a positive combination of shifted extremal rays."""
    _check_coprime(p, q)
    if m < 1:
        raise InvalidArgument("m must be positive")
    if A.nvars != 1 or B.nvars != 1:
        raise InvalidArgument("decompose works on one-variable polynomials")
    if not (is_nonnegative(A) and is_nonnegative(B)):
        raise NotInConeError("pair has a negative coefficient")
    if B * inflate(xi(p), m) != A * inflate(xi(q), m):
        raise NotInConeError("pair does not satisfy A xi_q(t^m) = B xi_p(t^m)")
    terms = []
    for r, (Ai, Bi) in enumerate(zip(split_residues(A, m), split_residues(B, m))):
        for T, c, gamma in _greedy(Ai, Bi, p, q):
            terms.append(DecompositionTerm(T, r + m * c, gamma))
    return Decomposition(p, q, m, terms)


@dataclass(frozen=True)
class HoppTable:
    """Coefficients of ``P * xi_d`` with the consecutive-difference identity per index."""

    rows: tuple    # (j, alpha_j, alpha_j - alpha_{j-1}, c_j - c_{j-d})
    ok: bool

    @property
    def alphas(self):
        return tuple(r[1] for r in self.rows)


def hopp_delta(P, d):
    if not is_nonnegative(P):
        raise InvalidArgument("hopp_delta needs nonnegative coefficients")
    prod = P * xi(d)
    if not P:
        return HoppTable((), True)
    lo, hi = min_exponent(P), max_exponent(prod)
    rows = []
    for j in range(lo, hi + 1):
        da = prod.coefficient(j) - prod.coefficient(j - 1)
        dc = P.coefficient(j) - P.coefficient(j - d)
        rows.append((j, prod.coefficient(j), da, dc))
    return HoppTable(tuple(rows), all(r[2] == r[3] for r in rows))
