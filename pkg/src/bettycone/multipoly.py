"""Exact multivariate Laurent polynomials over the rationals.

A :class:`LaurentPoly` is an immutable map from exponent vectors to nonzero
:class:`fractions.Fraction` coefficients.  Exponents may be negative.  Terms
are always reported in graded-lex order (total degree first, then
lexicographic on the exponent vector) so that printing and serialization are
deterministic.

One- and two-variable polynomials are the workhorses: the one-variable ring
holds the pairs ``(A, B)`` of the cone, and the two-variable ring holds Betti
polynomials ``B_i(t, u)``.
"""

from fractions import Fraction
from numbers import Rational

from .errors import EmptySupportError, InvalidArgument

VARIABLE_NAMES = {1: ("t",), 2: ("t", "u"), 3: ("x", "y", "z")}


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise InvalidArgument(f"coefficient must be rational, got {c!r}")


def _grlex(exps):
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable sparse Laurent polynomial in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars, terms=None):
        if not isinstance(nvars, int) or nvars < 1:
            raise InvalidArgument(f"nvars must be a positive integer, got {nvars!r}")
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise InvalidArgument(
                    f"exponent {exps} has length {len(exps)}, expected {nvars}")
            c = _as_fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.nvars = nvars
        self._terms = {e: clean[e] for e in sorted(clean, key=_grlex)}
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps, coef=1):
        exps = tuple(exps)
        return cls(len(exps), {exps: coef})

    @classmethod
    def from_coeffs(cls, coeffs, start=0):
        """One-variable polynomial ``sum coeffs[k] t^(start+k)``."""
        return cls(1, {(start + k,): c for k, c in enumerate(coeffs)})

    @classmethod
    def from_exponents(cls, exponents, nvars=None):
        """Sum of ``t^e`` over an iterable of exponents (repeats add up).

        Exponents may be ints (one variable) or tuples.
        """
        terms = {}
        for e in exponents:
            e = (e,) if isinstance(e, int) else tuple(e)
            terms[e] = terms.get(e, 0) + 1
        if nvars is None:
            if not terms:
                raise InvalidArgument("nvars required for an empty exponent list")
            nvars = len(next(iter(terms)))
        return cls(nvars, terms)

    # container protocol

    def terms(self):
        """List of ``(exponent tuple, Fraction)`` in graded-lex order."""
        return list(self._terms.items())

    def support(self):
        return list(self._terms)

    def coefficient(self, exps):
        if isinstance(exps, int):
            exps = (exps,)
        return self._terms.get(tuple(exps), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == LaurentPoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._terms.items())))
        return self._hash

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise InvalidArgument(
                    f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Rational, str)):
            return LaurentPoly.constant(other, self.nvars)
        raise InvalidArgument(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational, str)):
            return self.scale(other)
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, terms)

    __rmul__ = __mul__

    def scale(self, c):
        c = _as_fraction(c)
        return LaurentPoly(self.nvars, {e: c * v for e, v in self._terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise InvalidArgument("only nonnegative integer powers are supported")
        result = LaurentPoly.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, exps):
        """Multiply by the monomial ``t^exps``."""
        if isinstance(exps, int):
            exps = (exps,)
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise InvalidArgument("shift vector has the wrong length")
        return LaurentPoly(self.nvars, {
            tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()})

    def evaluate(self, point):
        """Value at a point; every coordinate must be nonzero if exponents are negative."""
        point = tuple(point)
        if len(point) != self.nvars:
            raise InvalidArgument("point has the wrong dimension")
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                v *= Fraction(x) ** k
            total += v
        return total

    # printing

    def __repr__(self):
        return f"LaurentPoly({self.nvars}, {dict(self._terms)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        names = VARIABLE_NAMES.get(self.nvars) or tuple(f"t{k + 1}" for k in range(self.nvars))
        pieces = []
        for e, c in self._terms.items():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    # serialization

    def to_json(self):
        return {
            "nvars": self.nvars,
            "terms": [{"exp": list(e), "coef": _frac_str(c)} for e, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["nvars"]),
                       {tuple(t["exp"]): Fraction(str(t["coef"])) for t in data["terms"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgument(f"malformed polynomial JSON: {exc}") from exc


def _frac_str(c):
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)


def frac_str(c):
    """Exact string form of a rational, ``"p/q"`` or ``"p"``."""
    return _frac_str(c)


def xi(d, nvars=1):
    """``1 + t + ... + t^(d-1)``, or its homogeneous version in ``(t, u)``."""
    if not isinstance(d, int) or d < 1:
        raise InvalidArgument(f"xi needs d >= 1, got {d!r}")
    if nvars == 1:
        return LaurentPoly(1, {(k,): 1 for k in range(d)})
    if nvars == 2:
        return LaurentPoly(2, {(d - 1 - k, k): 1 for k in range(d)})
    raise InvalidArgument("xi is defined for 1 or 2 variables")


def inflate(f, m):
    """Substitute ``t_i -> t_i^m`` in every variable."""
    if not isinstance(m, int) or m < 1:
        raise InvalidArgument(f"inflation factor must be >= 1, got {m!r}")
    return LaurentPoly(f.nvars, {tuple(m * a for a in e): c for e, c in f})


def dehomogenize(f):
    """Set ``u = 1`` in a two-variable polynomial."""
    if f.nvars != 2:
        raise InvalidArgument("dehomogenize expects a polynomial in (t, u)")
    terms = {}
    for (a, _), c in f:
        terms[(a,)] = terms.get((a,), 0) + c
    return LaurentPoly(1, terms)


def homogenize(f, d):
    """Turn ``c t^e`` into ``c t^e u^(d-e)``; needs every ``e <= d``."""
    if f.nvars != 1:
        raise InvalidArgument("homogenize expects a one-variable polynomial")
    bad = [e for (e,), _ in f if e > d]
    if bad:
        raise InvalidArgument(f"exponent {max(bad)} exceeds homogenization degree {d}")
    return LaurentPoly(2, {(e, d - e): c for (e,), c in f})


def is_nonnegative(f):
    return all(c >= 0 for _, c in f)


def _var_index(f, var):
    if isinstance(var, int):
        if not 0 <= var < f.nvars:
            raise InvalidArgument(f"variable index {var} out of range")
        return var
    names = VARIABLE_NAMES.get(f.nvars, ())
    if var not in names:
        raise InvalidArgument(f"unknown variable {var!r} for {f.nvars} variables")
    return names.index(var)


def min_exponent(f, var=0):
    if not f:
        raise EmptySupportError("zero polynomial has no exponents")
    k = _var_index(f, var)
    return min(e[k] for e in f.support())


def max_exponent(f, var=0):
    if not f:
        raise EmptySupportError("zero polynomial has no exponents")
    k = _var_index(f, var)
    return max(e[k] for e in f.support())


def total_degree_range(f):
    if not f:
        raise EmptySupportError("zero polynomial has no total degree")
    degs = [sum(e) for e in f.support()]
    return min(degs), max(degs)


def is_homogeneous(f):
    if not f:
        return False
    lo, hi = total_degree_range(f)
    return lo == hi
