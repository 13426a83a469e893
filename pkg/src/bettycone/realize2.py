"""Explicit bigraded resolutions realizing a Betti triple in ``k[x, y]``.

Given a triple ``(B0, B1, B2)`` in the cone whose outer polynomials have
0/1 coefficients, we build

    S.B0 <--alpha-- S.B1 <--beta-- S.B2

with ``alpha`` a general bihomogeneous matrix supported on its thick
diagonal and the columns of ``beta`` exact kernel vectors of ``alpha``.  The
result is certified by an exact polynomial product ``alpha * beta = 0``,
by maximal minors that are pure powers of ``x`` and of ``y`` for both
``alpha`` and the dual of ``beta``, and by degreewise rank computations
against the Hilbert function.

Row and column indices are 0-based throughout.  Generators are ordered by
first coordinate, then second, so that within a homogeneous free module
the ``x``-exponent increases and the ``y``-exponent decreases.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .diagram import BettiDiagram, hilbert_function, membership_L2
from .errors import (
    DegenerateChoiceError,
    InvalidArgument,
    MalformedTripleError,
    RealizationFailedError,
)
from .multipoly import LaurentPoly, frac_str, is_homogeneous, total_degree_range

SCALAR_RANGE = 1000


def _leq(a, b):
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class ThickDiagonal:
    """Staircase ``{(i, j) : s[i] <= j <= e[i]}`` in an ``nrows x ncols`` grid."""

    nrows: int
    ncols: int
    s: tuple
    e: tuple

    def __post_init__(self):
        if len(self.s) != self.nrows or len(self.e) != self.nrows:
            raise InvalidArgument("s and e need one entry per row")
        for i in range(self.nrows):
            if not 0 <= self.s[i] <= self.e[i] < self.ncols:
                raise InvalidArgument(f"row {i} window [{self.s[i]}, {self.e[i]}] is invalid")
            if i and (self.s[i] < self.s[i - 1] or self.e[i] < self.e[i - 1]):
                raise InvalidArgument("s and e must be weakly increasing")

    def positions(self):
        return [(i, j) for i in range(self.nrows) for j in range(self.s[i], self.e[i] + 1)]

    def __contains__(self, ij):
        i, j = ij
        return 0 <= i < self.nrows and self.s[i] <= j <= self.e[i]


def thick_diagonal(row_gens, col_gens):
    """Support pattern of a bihomogeneous map: row ``i`` meets column ``j`` iff ``row_i <= col_j``."""
    s, e = [], []
    for i, a in enumerate(row_gens):
        hits = [j for j, b in enumerate(col_gens) if _leq(a, b)]
        if not hits:
            raise MalformedTripleError(f"generator {a} has no admissible partner (HK fails)")
        if hits != list(range(hits[0], hits[-1] + 1)):
            raise MalformedTripleError(f"admissible columns of generator {a} are not contiguous")
        s.append(hits[0])
        e.append(hits[-1])
    try:
        return ThickDiagonal(len(row_gens), len(col_gens), tuple(s), tuple(e))
    except InvalidArgument as exc:
        raise MalformedTripleError(str(exc)) from exc


def classify(D):
    """``"strict"``, ``"semi-strict"`` or ``"general"``."""
    s, e, last = D.s, D.e, D.ncols - 1
    pairs = list(zip(range(D.nrows - 1), range(1, D.nrows)))
    if (s[0] == 0 and e[-1] == last
            and all(s[i] < s[k] and e[i] < e[k] for i, k in pairs)):
        return "strict"
    s_ok = all(s[k] > s[i] for i, k in pairs if s[i] > 0)
    e_ok = all(e[k] > e[i] for i, k in pairs if e[i] < last)
    return "semi-strict" if s_ok and e_ok else "general"


class GradedMatrix:
    """Bihomogeneous matrix ``F_src -> F_tgt`` with scalar-times-monomial entries.

    Entry ``(i, j)`` is ``scalar * x^a y^b`` with ``(a, b) = col_degs[j] -
    row_degs[i]``, so only the scalars are stored.
    """

    def __init__(self, row_degs, col_degs, entries=None):
        self.row_degs = tuple(tuple(d) for d in row_degs)
        self.col_degs = tuple(tuple(d) for d in col_degs)
        self.entries = {}
        for (i, j), c in (entries or {}).items():
            c = Fraction(c)
            if not c:
                continue
            if not (0 <= i < self.nrows and 0 <= j < self.ncols):
                raise InvalidArgument(f"entry {(i, j)} outside the matrix")
            if not _leq(self.row_degs[i], self.col_degs[j]):
                raise InvalidArgument(f"entry {(i, j)} would need a negative exponent")
            self.entries[(i, j)] = c

    @property
    def nrows(self):
        return len(self.row_degs)

    @property
    def ncols(self):
        return len(self.col_degs)

    def monomial(self, i, j):
        return tuple(b - a for a, b in zip(self.row_degs[i], self.col_degs[j]))

    def entry(self, i, j):
        c = self.entries.get((i, j))
        if c is None:
            return LaurentPoly.zero(2)
        return LaurentPoly.monomial(self.monomial(i, j), c)

    def thick_diagonal(self):
        return thick_diagonal(self.row_degs, self.col_degs)

    def scalars(self, rows=None, cols=None):
        rows = range(self.nrows) if rows is None else rows
        cols = range(self.ncols) if cols is None else cols
        return [[self.entries.get((i, j), Fraction(0)) for j in cols] for i in rows]

    def scaled(self, c):
        return GradedMatrix(self.row_degs, self.col_degs,
                            {k: c * v for k, v in self.entries.items()})

    def dual(self):
        """Transpose with negated degrees, re-sorted to the canonical order."""
        nr, nc = self.nrows, self.ncols
        return GradedMatrix(
            [tuple(-x for x in d) for d in reversed(self.col_degs)],
            [tuple(-x for x in d) for d in reversed(self.row_degs)],
            {(nc - 1 - j, nr - 1 - i): c for (i, j), c in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (self.row_degs, self.col_degs, self.entries) == (
            other.row_degs, other.col_degs, other.entries)

    def to_json(self):
        return {
            "rows": [list(d) for d in self.row_degs],
            "cols": [list(d) for d in self.col_degs],
            "entries": [{"i": i, "j": j, "coef": frac_str(c), "mono": list(self.monomial(i, j))}
                        for (i, j), c in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, data):
        return cls(data["rows"], data["cols"],
                   {(e["i"], e["j"]): Fraction(e["coef"]) for e in data["entries"]})

    def grid(self):
        """Human-readable table of entries in ``x``/``y``."""
        cells = [[_entry_str(self.entries.get((i, j)), self.monomial(i, j))
                  for j in range(self.ncols)] for i in range(self.nrows)]
        head = [str(d) for d in self.col_degs]
        width = max([len(c) for row in cells for c in row] + [len(h) for h in head] + [1])
        lab = max([len(str(d)) for d in self.row_degs] + [1])
        lines = [" " * lab + " | " + " ".join(h.rjust(width) for h in head)]
        for d, row in zip(self.row_degs, cells):
            lines.append(str(d).rjust(lab) + " | " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def _entry_str(c, mono):
    if c is None:
        return "."
    a, b = mono
    var = "".join(n if k == 1 else f"{n}{k}" for n, k in (("x", a), ("y", b)) if k)
    if not var:
        return frac_str(c)
    if c == 1:
        return var
    if c == -1:
        return "-" + var
    return frac_str(c) + var


def _triple_of(triple):
    if isinstance(triple, BettiDiagram):
        if triple.nvars != 2 or triple.length != 2:
            raise MalformedTripleError("need a two-variable diagram of length 2")
        return tuple(LaurentPoly(2, {deg: v for (h, deg), v in triple.entries() if h == k})
                     for k in range(3))
    return tuple(triple)


def triple_generators(triple):
    """Validate a triple and return the sorted generator lists ``(F0, F1, F2)``."""
    polys = _triple_of(triple)
    if len(polys) != 3 or any(f.nvars != 2 or not is_homogeneous(f) for f in polys):
        raise MalformedTripleError("need three nonzero homogeneous polynomials in (t, u)")
    d = [total_degree_range(f)[0] for f in polys]
    e1, e2 = d[1] - d[0], d[2] - d[1]
    if e1 < 1 or e2 < 1:
        raise MalformedTripleError("total degrees must increase")
    if not membership_L2(polys, e1, e2):
        raise MalformedTripleError("triple does not satisfy the linear relations")
    for k, f in enumerate(polys):
        for _, c in f:
            if c <= 0 or c.denominator != 1:
                raise MalformedTripleError(f"B{k} has a non-positive-integer coefficient")
            if k != 1 and c != 1:
                raise MalformedTripleError(f"B{k} must have 0/1 coefficients")
    D = BettiDiagram.from_polynomials(polys)
    return tuple(D.generators(h) for h in range(3))


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _draw(rng):
    return rng.randint(1, SCALAR_RANGE) * rng.choice((1, -1))


def generic_alpha(triple, seed=0):
    """General bihomogeneous ``alpha : S.B1 -> S.B0`` on its thick diagonal."""
    F0, F1, _ = triple_generators(triple)
    return _alpha(F0, F1, _rng(seed))


def _alpha(F0, F1, rng):
    return GradedMatrix(F0, F1, {ij: _draw(rng) for ij in thick_diagonal(F0, F1).positions()})


def kernel_column(alpha, col_deg):
    """Exact kernel vector of ``alpha`` in the bidegree of one ``B2`` generator.

    Returns ``{j: (scalar, monomial)}`` over the admissible columns of
    ``alpha``, scaled to coprime integers with positive first entry.
    """
    col_deg = tuple(col_deg)
    cols = [j for j, b in enumerate(alpha.col_degs) if _leq(b, col_deg)]
    if not cols:
        raise MalformedTripleError(f"B2 generator {col_deg} has no admissible B1 partner")
    if cols != list(range(cols[0], cols[-1] + 1)):
        raise MalformedTripleError(f"admissible columns for {col_deg} are not contiguous")
    rows = [i for i, a in enumerate(alpha.row_degs)
            if any(_leq(a, alpha.col_degs[j]) for j in cols)]
    if len(cols) != len(rows) + 1:
        raise MalformedTripleError(
            f"window for {col_deg} has {len(rows)} rows and {len(cols)} columns")
    basis = linalg.nullspace(alpha.scalars(rows, cols), len(cols))
    if len(basis) != 1:
        raise DegenerateChoiceError(f"kernel at {col_deg} has dimension {len(basis)}")
    v = linalg.primitive_integer_vector(basis[0])
    if v[0] == 0 or v[-1] == 0:
        raise DegenerateChoiceError(f"kernel vector at {col_deg} vanishes at an end")
    return {j: (Fraction(c), tuple(x - y for x, y in zip(col_deg, alpha.col_degs[j])))
            for j, c in zip(cols, v) if c}


def build_beta(alpha, f2_gens):
    entries = {}
    for k, c in enumerate(f2_gens):
        for j, (scalar, _) in kernel_column(alpha, c).items():
            entries[(j, k)] = scalar
    return GradedMatrix(alpha.col_degs, f2_gens, entries)


def verify_composition(alpha, beta):
    """Whether the polynomial matrix product ``alpha * beta`` vanishes."""
    if alpha.col_degs != beta.row_degs:
        raise InvalidArgument("alpha's source and beta's target differ")
    for i in range(alpha.nrows):
        for k in range(beta.ncols):
            total = LaurentPoly.zero(2)
            for j in range(alpha.ncols):
                if (i, j) in alpha.entries and (j, k) in beta.entries:
                    total = total + alpha.entry(i, j) * beta.entry(j, k)
            if total:
                return False
    return True


@dataclass(frozen=True)
class MinorWitness:
    """A maximal minor equal to ``scalar * x^a y^b`` with one of ``a, b`` zero."""

    columns: tuple
    scalar: Fraction
    monomial: tuple

    @property
    def variable(self):
        return "x" if self.monomial[1] == 0 else "y"

    def to_json(self):
        return {"columns": list(self.columns), "scalar": frac_str(self.scalar),
                "mono": list(self.monomial)}


def _minor(M, cols):
    scalar = linalg.det(M.scalars(None, cols))
    mono = tuple(sum(M.col_degs[j][k] for j in cols) - sum(d[k] for d in M.row_degs)
                 for k in range(2))
    return MinorWitness(tuple(cols), scalar, mono)


def minor_certificate(M):
    """Pure-power maximal minors ``(witness_x, witness_y)``.

    The minor on the first admissible columns of each row must be a nonzero
    multiple of a power of ``y``; on the last admissible columns, of ``x``.
    """
    if M.nrows > M.ncols:
        raise InvalidArgument("minor certificate needs rows <= columns")
    D = M.thick_diagonal()
    wy = _minor(M, list(D.s))
    wx = _minor(M, list(D.e))
    if len(set(D.s)) < M.nrows or wy.scalar == 0 or wy.monomial[0] != 0:
        raise DegenerateChoiceError(f"first-position minor is not a nonzero y-power: {wy}")
    if len(set(D.e)) < M.nrows or wx.scalar == 0 or wx.monomial[1] != 0:
        raise DegenerateChoiceError(f"last-position minor is not a nonzero x-power: {wx}")
    return wx, wy


@dataclass
class ExactnessReport:
    box: tuple
    failures: list = field(default_factory=list)   # (bidegree, reason)
    coker_dims: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.failures


def degreewise_exactness(alpha, beta, box=None):
    """Rank check of ``0 <- coker <- F0 <- F1 <- F2 <- 0`` in every bidegree of ``[0, box]^2``.

    ``box`` defaults to the top total degree of ``F2``.
    """
    F0, F1, F2 = alpha.row_degs, alpha.col_degs, beta.col_degs
    if alpha.col_degs != beta.row_degs:
        raise InvalidArgument("alpha's source and beta's target differ")
    d2 = max(sum(c) for c in F2)
    if box is None:
        box = d2
    if isinstance(box, int):
        box = (box, box)
    if min(box) < d2:
        raise InvalidArgument(f"box {box} does not cover [0, {d2}]^2")
    D = BettiDiagram.from_generators([F0, F1, F2], nvars=2)
    hilb = hilbert_function(D, box)
    report = ExactnessReport(tuple(box))
    for i in range(box[0] + 1):
        for j in range(box[1] + 1):
            deg = (i, j)
            r0 = [k for k, a in enumerate(F0) if _leq(a, deg)]
            r1 = [k for k, b in enumerate(F1) if _leq(b, deg)]
            r2 = [k for k, c in enumerate(F2) if _leq(c, deg)]
            rank_a = linalg.rank(alpha.scalars(r0, r1)) if r0 and r1 else 0
            rank_b = linalg.rank(beta.scalars(r1, r2)) if r1 and r2 else 0
            coker = len(r0) - rank_a
            report.coker_dims[deg] = coker
            if rank_b != len(r2):
                report.failures.append((deg, "beta not injective"))
            if rank_b != len(r1) - rank_a:
                report.failures.append((deg, "ker alpha != im beta"))
            if coker != hilb[deg]:
                report.failures.append((deg, f"coker dim {coker} != Hilbert value {hilb[deg]}"))
            if i + j >= d2 - 1 and hilb[deg] != 0:
                report.failures.append((deg, "Hilbert value nonzero at total degree >= d2 - 1"))
    return report


@dataclass
class RealizationCertificate:
    alpha: GradedMatrix
    beta: GradedMatrix
    seed: int
    attempts: int
    checks: dict

    def to_json(self):
        checks = {k: (v.to_json() if isinstance(v, MinorWitness) else v)
                  for k, v in self.checks.items()}
        return {"seed": self.seed, "attempts": self.attempts,
                "alpha": self.alpha.to_json(), "beta": self.beta.to_json(),
                "checks": checks}


def _attempt(gens, seed):
    F0, F1, F2 = gens
    alpha = _alpha(F0, F1, random.Random(seed))
    beta = build_beta(alpha, F2)
    if not verify_composition(alpha, beta):
        raise DegenerateChoiceError("composition")
    ax, ay = minor_certificate(alpha)
    bx, by = minor_certificate(beta.dual())
    report = degreewise_exactness(alpha, beta)
    if not report.ok:
        raise DegenerateChoiceError(f"exactness_box: {report.failures[0]}")
    checks = {"composition_zero": True, "alpha_minor_x": ax, "alpha_minor_y": ay,
              "beta_minor_x": bx, "beta_minor_y": by, "exactness_box": True}
    return alpha, beta, checks


def realize(triple, seed=0, max_retries=5):
    """Build and certify a resolution of ``triple``; reseeds ``seed+1, seed+2, ...`` on degeneracy."""
    gens = triple_generators(triple)
    last = None
    for attempt in range(max_retries + 1):
        try:
            alpha, beta, checks = _attempt(gens, seed + attempt)
        except DegenerateChoiceError as exc:
            last = exc
            continue
        return RealizationCertificate(alpha, beta, seed + attempt, attempt + 1, checks)
    raise RealizationFailedError(
        f"no valid general choice after {max_retries + 1} attempts: {last}",
        failed_check=str(last).split(":")[0])
