"""Multigraded Betti diagrams and the multigraded Herzog-Kuehl equations.

A diagram is a finitely supported map ``(i, a) -> beta_{i,a}`` with ``i`` a
homological index and ``a`` a multidegree in ``Z^n``.  Multiplicities are
rational and may be negative, so signed combinations of twists (virtual
diagrams) are first-class values; :meth:`BettiDiagram.is_module_candidate`
tells them apart from diagrams that could come from an actual resolution.

Twisting follows the convention ``twist(D, a)[i, b] = D[i, b - a]``: every
generator degree moves by ``+a``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from functools import reduce

import numpy as np

from .errors import EmptySupportError, InvalidArgument
from .multipoly import (
    LaurentPoly,
    frac_str,
    inflate,
    is_homogeneous,
    max_exponent,
    min_exponent,
    total_degree_range,
    xi,
)


class BettiDiagram:
    """Immutable multigraded Betti diagram."""

    __slots__ = ("nvars", "length", "_entries")

    def __init__(self, nvars, length, entries=None):
        if nvars < 1:
            raise InvalidArgument("nvars must be positive")
        if length < 0:
            raise InvalidArgument("length must be nonnegative")
        clean = {}
        for (h, deg), mult in (entries or {}).items():
            deg = tuple(int(a) for a in deg)
            if len(deg) != nvars:
                raise InvalidArgument(f"degree {deg} does not have {nvars} coordinates")
            if not 0 <= h <= length:
                raise InvalidArgument(f"homological index {h} outside 0..{length}")
            mult = Fraction(mult)
            if mult:
                key = (int(h), deg)
                clean[key] = clean.get(key, 0) + mult
                if not clean[key]:
                    del clean[key]
        self.nvars = nvars
        self.length = length
        self._entries = {k: clean[k] for k in sorted(clean)}

    @classmethod
    def from_polynomials(cls, polys):
        polys = list(polys)
        if not polys:
            raise InvalidArgument("need at least one Betti polynomial")
        nvars = polys[0].nvars
        entries = {}
        for h, f in enumerate(polys):
            if f.nvars != nvars:
                raise InvalidArgument("Betti polynomials must share the variable count")
            for e, c in f:
                entries[(h, e)] = c
        return cls(nvars, len(polys) - 1, entries)

    @classmethod
    def from_generators(cls, gens, nvars=None):
        """Build from ``[[deg, ...] per homological index]``; repeats add up."""
        gens = [list(g) for g in gens]
        if nvars is None:
            nvars = next(len(d) for g in gens for d in g)
        entries = {}
        for h, degs in enumerate(gens):
            for d in degs:
                key = (h, tuple(d))
                entries[key] = entries.get(key, 0) + 1
        return cls(nvars, len(gens) - 1, entries)

    def entries(self):
        return list(self._entries.items())

    def __getitem__(self, key):
        h, deg = key
        return self._entries.get((h, tuple(deg)), Fraction(0))

    def __len__(self):
        return len(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return (self.nvars, self.length, self._entries) == (other.nvars, other.length, other._entries)

    def __hash__(self):
        return hash((self.nvars, self.length, tuple(self._entries.items())))

    def __add__(self, other):
        self._check_compatible(other)
        entries = dict(self._entries)
        for k, v in other._entries.items():
            entries[k] = entries.get(k, 0) + v
        return BettiDiagram(self.nvars, self.length, entries)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        c = Fraction(c)
        return BettiDiagram(self.nvars, self.length, {k: c * v for k, v in self._entries.items()})

    def _check_compatible(self, other):
        if (self.nvars, self.length) != (other.nvars, other.length):
            raise InvalidArgument("diagrams have different shapes")

    def without(self, h, deg):
        """Copy with the entry at ``(h, deg)`` removed."""
        entries = dict(self._entries)
        entries.pop((h, tuple(deg)), None)
        return BettiDiagram(self.nvars, self.length, entries)

    def degrees(self, h):
        """Distinct generator degrees in homological index ``h`` (sorted)."""
        return [deg for (i, deg) in self._entries if i == h]

    def generators(self, h):
        """Generator degrees in index ``h`` with multiplicity expanded.

        Requires positive integer multiplicities.  Sorted by first coordinate,
        ties by the second, as the matrix constructions expect.
        """
        out = []
        for (i, deg), mult in self._entries.items():
            if i != h:
                continue
            if mult <= 0 or mult.denominator != 1:
                raise InvalidArgument(f"multiplicity {mult} at {deg} is not a positive integer")
            out.extend([deg] * int(mult))
        return out

    def rank(self, h):
        return sum(v for (i, _), v in self._entries.items() if i == h)

    def ranks(self):
        return tuple(self.rank(h) for h in range(self.length + 1))

    def is_nonnegative(self):
        return all(v > 0 for v in self._entries.values())

    def is_module_candidate(self):
        return all(v > 0 and v.denominator == 1 for v in self._entries.values())

    def __repr__(self):
        return f"BettiDiagram(nvars={self.nvars}, length={self.length}, entries={len(self)})"

    def __str__(self):
        lines = []
        for h in range(self.length + 1):
            cells = []
            for (i, deg), v in self._entries.items():
                if i == h:
                    tag = "".join(str(a) for a in deg) if all(0 <= a < 10 for a in deg) else str(deg)
                    cells.append(tag if v == 1 else f"{frac_str(v)}x{tag}")
            lines.append(f"F{h}: " + (" ".join(cells) if cells else "-"))
        return "\n".join(lines)

    def to_json(self):
        return {
            "nvars": self.nvars,
            "length": self.length,
            "entries": [{"h": h, "deg": list(deg), "mult": frac_str(v)}
                        for (h, deg), v in self._entries.items()],
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["nvars"]), int(data["length"]),
                       {(int(e["h"]), tuple(e["deg"])): Fraction(str(e["mult"]))
                        for e in data["entries"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgument(f"malformed diagram JSON: {exc}") from exc


@dataclass(frozen=True)
class PureType:
    """Total-degree data of a pure diagram.

    ``p`` and ``q`` are only set for two variables, where ``e1 = m*q`` and
    ``e2 = m*p``.
    """

    d: tuple
    e: tuple
    m: int
    p: int = None
    q: int = None


def betti_polynomials(D):
    polys = [dict() for _ in range(D.length + 1)]
    for (h, deg), v in D.entries():
        polys[h][deg] = v
    return [LaurentPoly(D.nvars, terms) for terms in polys]


def hk_check(D):
    """All Herzog-Kuehl violations of ``D``.

    Returns ``(k, fiber, alternating_sum)`` triples with ``k`` the 1-based
    index of the summed-out variable and ``fiber`` the remaining coordinates.
    An empty list means every equation holds.
    """
    sums = {}
    for (h, deg), v in D.entries():
        sign = -1 if h % 2 else 1
        for k in range(D.nvars):
            key = (k + 1, deg[:k] + deg[k + 1:])
            sums[key] = sums.get(key, 0) + sign * v
    return [(k, fiber, s) for (k, fiber), s in sorted(sums.items()) if s]


def pure_type(D):
    if not D:
        raise EmptySupportError("the zero diagram has no type")
    d = []
    for h in range(D.length + 1):
        totals = {sum(deg) for deg in D.degrees(h)}
        if len(totals) != 1:
            return None
        d.append(totals.pop())
    e = tuple(b - a for a, b in zip(d, d[1:]))
    if any(x < 1 for x in e):
        return None
    m = reduce(gcd, e) if e else 0
    if D.nvars == 2 and len(e) == 2:
        return PureType(tuple(d), e, m, p=e[1] // m, q=e[0] // m)
    return PureType(tuple(d), e, m)


def twist(D, a):
    a = tuple(a)
    if len(a) != D.nvars:
        raise InvalidArgument("twist vector has the wrong length")
    return BettiDiagram(D.nvars, D.length, {
        (h, tuple(x + y for x, y in zip(deg, a))): v for (h, deg), v in D.entries()})


def combine(terms, D):
    """``sum coeff * twist(D, shift)`` over ``(coeff, shift)`` pairs."""
    out = BettiDiagram(D.nvars, D.length)
    for coeff, shift in terms:
        out = out + twist(D, shift).scaled(coeff)
    return out


def hilbert_numerator(D):
    terms = {}
    for (h, deg), v in D.entries():
        terms[deg] = terms.get(deg, 0) + (-v if h % 2 else v)
    return LaurentPoly(D.nvars, terms)


def hilbert_function(D, box):
    """Coefficients of ``numerator / prod(1 - t_k)`` on a box of multidegrees.

    ``box`` holds one upper bound per variable (an int applies to all of
    them).  The lower corner is the componentwise minimum of 0 and the
    numerator's support.  Values come from iterated cumulative sums, so they
    are exact on the whole box.  Returns ``{multidegree: Fraction}``.
    """
    if isinstance(box, int):
        box = (box,) * D.nvars
    box = tuple(box)
    if len(box) != D.nvars:
        raise InvalidArgument("box needs one bound per variable")
    num = hilbert_numerator(D)
    if num:
        lo = tuple(min(0, min_exponent(num, k)) for k in range(D.nvars))
        for k in range(D.nvars):
            if max_exponent(num, k) > box[k]:
                raise InvalidArgument(
                    f"box bound {box[k]} in variable {k + 1} is below the numerator "
                    f"support {max_exponent(num, k)}")
    else:
        lo = (0,) * D.nvars
    if any(b < l for b, l in zip(box, lo)):
        raise InvalidArgument("box is empty")
    shape = tuple(b - l + 1 for b, l in zip(box, lo))
    arr = np.full(shape, Fraction(0), dtype=object)
    for e, c in num:
        arr[tuple(x - l for x, l in zip(e, lo))] = c
    for axis in range(D.nvars):
        arr = np.cumsum(arr, axis=axis)
    return {tuple(int(i + l) for i, l in zip(idx, lo)): Fraction(arr[idx])
            for idx in np.ndindex(*shape)}


def membership_L2(triple, e1, e2):
    """Whether ``(B0, B1, B2)`` lies in the linear span for differences ``(e1, e2)``.

    Checks ``B2 xi_p(t^m,u^m) = (tu)^(pm) B0 xi_q(t^m,u^m)`` and both
    expressions of ``B1`` in terms of ``B0, B2`` exactly.
    """
    B0, B1, B2 = triple
    for f in triple:
        if f.nvars != 2 or not is_homogeneous(f):
            raise InvalidArgument("triple must consist of nonzero homogeneous polynomials in (t, u)")
    d = [total_degree_range(f)[0] for f in triple]
    if (d[1] - d[0], d[2] - d[1]) != (e1, e2):
        raise InvalidArgument(
            f"total degrees {d} are not spaced by ({e1}, {e2})")
    m = gcd(e1, e2)
    q, p = e1 // m, e2 // m
    pm, qm = p * m, q * m
    xp = inflate(xi(p, 2), m)
    xq = inflate(xi(q, 2), m)
    if B2 * xp != B0 * xq.shift((pm, pm)):
        return False
    if B1 != B2.shift((0, -pm)) + B0.shift((0, qm)):
        return False
    return B1 == B2.shift((-pm, 0)) + B0.shift((qm, 0))
