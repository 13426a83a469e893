"""Schur-module characters, equivariant pure diagrams, and the three-variable example.

For three variables the cone of actual Betti diagrams is strictly smaller than
the cone cut out by nonnegativity and the Herzog-Kuehl equations.  The
witness is a signed combination of twists of the equivariant diagram of type
``(1, 2, 1)``: it is nonnegative and satisfies HK, yet a degree-0 generator
has no first-syzygy partner in a single direction, so no complex with that
diagram can present a module of finite length.
"""

from .diagram import BettiDiagram, combine, hk_check
from .errors import InvalidArgument
from .multipoly import LaurentPoly


def _check_shape(shape, nvars):
    shape = tuple(int(x) for x in shape)
    if len(shape) > nvars:
        raise InvalidArgument(f"shape {shape} has more than {nvars} parts")
    if any(x < 0 for x in shape) or any(a < b for a, b in zip(shape, shape[1:])):
        raise InvalidArgument(f"shape {shape} is not a partition")
    return shape + (0,) * (nvars - len(shape))


def semistandard_tableaux(shape, nvars):
    """Yield every SSYT of ``shape`` with entries ``1..nvars`` as a tuple of rows."""
    shape = [x for x in _check_shape(shape, nvars) if x]
    cells = [(r, c) for r, n in enumerate(shape) for c in range(n)]
    filling = {}

    def fill(k):
        if k == len(cells):
            yield tuple(tuple(filling[(r, c)] for c in range(n)) for r, n in enumerate(shape))
            return
        r, c = cells[k]
        lo = 1
        if c:
            lo = max(lo, filling[(r, c - 1)])
        if r:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, nvars + 1):
            filling[(r, c)] = v
            yield from fill(k + 1)
        filling.pop((r, c), None)

    yield from fill(0)


def ssyt_character(shape, nvars):
    """Weight enumerator ``sum_T t^weight(T)`` of semistandard tableaux."""
    if nvars not in (2, 3):
        raise InvalidArgument("characters are supported for 2 or 3 variables")
    terms = {}
    for tab in semistandard_tableaux(shape, nvars):
        w = [0] * nvars
        for row in tab:
            for v in row:
                w[v - 1] += 1
        terms[tuple(w)] = terms.get(tuple(w), 0) + 1
    return LaurentPoly(nvars, terms)


def equivariant_shapes(e, n=None):
    """Partitions indexing the free modules of the equivariant pure resolution.

    The base ``lam_i = e_{i+1} + ... + e_n - (n - i)``; the ``i``-th shape adds
    ``e_1, ..., e_i`` to the first ``i`` parts.
    """
    e = tuple(int(x) for x in e)
    n = len(e) if n is None else n
    if len(e) != n or n not in (2, 3):
        raise InvalidArgument("need a difference vector of length 2 or 3")
    if any(x < 1 for x in e):
        raise InvalidArgument("differences must be positive")
    base = [sum(e[i:]) - (n - i) for i in range(1, n + 1)]
    shapes = []
    for i in range(n + 1):
        shape = tuple(base[k] + (e[k] if k < i else 0) for k in range(n))
        if any(x < 0 for x in shape) or any(a < b for a, b in zip(shape, shape[1:])):
            raise InvalidArgument(f"{shape} is not a partition")
        shapes.append(shape)
    return shapes


def equivariant_diagram(e, n=None):
    shapes = equivariant_shapes(e, n)
    n = len(shapes) - 1
    entries = {}
    for h, shape in enumerate(shapes):
        for deg, c in ssyt_character(shape, n):
            entries[(h, deg)] = c
    return BettiDiagram(n, n, entries)


def collapse_obstruction(D, k):
    """Degree-0 generators with no first-syzygy partner in direction ``k`` (1-based).

    A generator at ``a`` is unobstructed when some ``F1`` generator ``b``
    agrees with ``a`` off coordinate ``k`` and has ``b_k > a_k``.
    """
    if not 1 <= k <= D.nvars:
        raise InvalidArgument(f"direction {k} out of range")
    if not D.is_nonnegative():
        raise InvalidArgument("collapse obstruction needs a nonnegative diagram")
    i = k - 1
    f1 = D.degrees(1)
    out = []
    for a in D.degrees(0):
        if not any(b[i] > a[i] and b[:i] + b[i + 1:] == a[:i] + a[i + 1:] for b in f1):
            out.append(a)
    return out


EXAMPLE_TYPE = (1, 2, 1)
CANDIDATE_SHIFTS = [(1, (2, 1, 0)), (1, (0, 2, 1)), (1, (1, 0, 2)), (-1, (1, 1, 1))]
ALPHA_SHIFTS = [(1, s) for s in [(2, 1, 0), (2, 0, 1), (1, 2, 0), (0, 2, 1), (1, 0, 2), (0, 1, 2)]]
ALPHA_SHIFTS.append((-1, (1, 1, 1)))


def example_beta():
    return equivariant_diagram(EXAMPLE_TYPE, 3)


def hk_only_candidate():
    """Nonnegative HK diagram of type (1,2,1) that is not a module's diagram."""
    return combine(CANDIDATE_SHIFTS, example_beta())


def example_alpha():
    return combine(ALPHA_SHIFTS, example_beta())


def diagram_report(D):
    """Summary used by the demo: nonnegativity, HK, and obstructions per direction."""
    nonneg = D.is_nonnegative()
    return {
        "nonnegative": nonneg,
        "hk_violations": hk_check(D),
        "obstructions": {k: collapse_obstruction(D, k) for k in range(1, D.nvars + 1)}
        if nonneg else {},
    }
