"""Bound constants, series enclosures, inequality checks, and constant scans.

Everything here is exact: closed-form quantities are Fractions, and the
two infinite series that appear in the bound coefficients are bracketed
by an Interval (exact partial sum plus integral tail bounds).  Inequality
verdicts are exact rational comparisons; thresholds such as n/26 + 2 are
never rounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arrangement import Arrangement, lines_with_at_most, max_lines_through_point, visibility_edge_count
from .errors import DomainError, InvalidCutoff, Unresolved
from .geometry import Rational

DEFAULT_CUTOFF = 4096
MAX_CUTOFF = 1 << 20


@dataclass(frozen=True)
class Interval:
    """Closed rational interval [lo, hi] enclosing a real value.

    Supports the affine arithmetic the bound formulas need: addition and
    subtraction with scalars or intervals, sign-aware scalar multiplication,
    and division by a nonzero scalar.
    """

    lo: Rational
    hi: Rational

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError(f"interval endpoints out of order: {self.lo} > {self.hi}")

    @classmethod
    def of(cls, lo, hi) -> "Interval":
        return cls(Fraction(lo), Fraction(hi))

    @classmethod
    def point(cls, v) -> "Interval":
        v = Fraction(v)
        return cls(v, v)

    @property
    def width(self) -> Rational:
        return self.hi - self.lo

    def contains(self, v) -> bool:
        return self.lo <= v <= self.hi

    def encloses(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __add__(self, other):
        if isinstance(other, Interval):
            return Interval(self.lo + other.lo, self.hi + other.hi)
        if isinstance(other, (int, Fraction)):
            return Interval(self.lo + other, self.hi + other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Interval):
            return Interval(self.lo - other.hi, self.hi - other.lo)
        if isinstance(other, (int, Fraction)):
            return Interval(self.lo - other, self.hi - other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Interval(other - self.hi, other - self.lo)
        return NotImplemented

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other >= 0:
                return Interval(self.lo * other, self.hi * other)
            return Interval(self.hi * other, self.lo * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other > 0:
                return Interval(self.lo / other, self.hi / other)
            if other < 0:
                return Interval(self.hi / other, self.lo / other)
            raise ZeroDivisionError("interval divided by zero")
        return NotImplemented

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class CrossingConstants:
    """Constants (alpha, beta) of the crossing-number lower bound.

    Every graph with n vertices and m >= alpha*n edges has crossing
    number at least m^3 / (beta * n^2).  Defaults are the sharpest
    published pair; both are overridable for sensitivity scans.
    """

    alpha: Rational = Fraction(103, 16)
    beta: Rational = Fraction(31827, 1024)

    def __post_init__(self):
        if self.alpha <= 0 or self.beta <= 0:
            raise DomainError("crossing constants must be positive")


DEFAULT_CONSTANTS = CrossingConstants()


@dataclass(frozen=True)
class GraphSize:
    """Vertex and edge counts of an abstract graph."""

    n_vertices: int
    m_edges: int

    def __post_init__(self):
        if self.n_vertices < 1:
            raise DomainError("graph needs at least one vertex")
        max_edges = self.n_vertices * (self.n_vertices - 1) // 2
        if not 0 <= self.m_edges <= max_edges:
            raise DomainError(f"edge count {self.m_edges} outside [0, {max_edges}]")


def crossing_lower_bound(g: GraphSize, k: CrossingConstants = DEFAULT_CONSTANTS) -> Rational:
    """Lower bound m^3/(beta*n^2) on the crossing number, 0 below the edge threshold."""
    if g.m_edges < k.alpha * g.n_vertices:
        return Fraction(0)
    return Fraction(g.m_edges**3) / (k.beta * g.n_vertices**2)


def st_bound_edges(n: int, i: int, k: CrossingConstants = DEFAULT_CONSTANTS) -> Rational:
    """Upper bound max{alpha*n, beta*n^2 / (2(i-1)^2)} on sum_{j>=i} (j-1)*s_j."""
    _check_n_i(n, i)
    return max(k.alpha * n, k.beta * n**2 / (2 * (i - 1) ** 2))


def st_bound_lines(n: int, i: int, k: CrossingConstants = DEFAULT_CONSTANTS) -> Rational:
    """Upper bound max{alpha*n / (i-1), beta*n^2 / (2(i-1)^3)} on sum_{j>=i} s_j."""
    _check_n_i(n, i)
    return max(k.alpha * n / (i - 1), k.beta * n**2 / (2 * (i - 1) ** 3))


def _check_n_i(n: int, i: int) -> None:
    if n < 1:
        raise DomainError(f"point count must be >= 1, got {n}")
    if i < 2:
        raise DomainError(f"line size threshold must be >= 2, got {i}")


@dataclass(frozen=True)
class HirzebruchReport:
    applicable: bool
    lhs: Rational
    rhs: Rational
    holds: Optional[bool]


def hirzebruch_check(arr: Arrangement) -> HirzebruchReport:
    """Check s_2 + (3/4) s_3 >= n + sum_{i>=5} (2i-9) s_i.

    Applicable only when at most n-3 points are collinear; otherwise the
    sides are still reported but no verdict is asserted.
    """
    s = arr.size_hist
    lhs = Fraction(s.get(2, 0)) + Fraction(3, 4) * s.get(3, 0)
    rhs = Fraction(arr.n + sum((2 * i - 9) * c for i, c in s.items() if i >= 5))
    applicable = arr.max_collinear <= arr.n - 3
    return HirzebruchReport(applicable, lhs, rhs, lhs >= rhs if applicable else None)


TAIL_KINDS = ("1/i^2", "(i+1)/i^3")


def tail_sum(kind: str, c: int, cutoff: int) -> Interval:
    """Rigorous enclosure of sum_{i>=c} of 1/i^2 or (i+1)/i^3.

    Exact rational partial sum for i in [c, cutoff] plus integral bounds
    for the remainder: sum_{i>M} 1/i^2 is in [1/(M+1), 1/M] and
    sum_{i>M} 1/i^3 in [1/(2(M+1)^2), 1/(2M^2)]; (i+1)/i^3 splits as
    1/i^2 + 1/i^3.  Enclosures nest as the cutoff grows.
    """
    _check_tail_args(kind, c, cutoff)
    if kind == "1/i^2":
        partial = sum(Fraction(1, i * i) for i in range(c, cutoff + 1))
    else:
        partial = sum(Fraction(i + 1, i**3) for i in range(c, cutoff + 1))
    t_lo, t_hi = _tail_bounds(kind, cutoff)
    return Interval(partial + t_lo, partial + t_hi)


def _check_tail_args(kind: str, c: int, cutoff: int) -> None:
    if kind not in TAIL_KINDS:
        raise DomainError(f"unknown series kind {kind!r}; expected one of {TAIL_KINDS}")
    if c < 2:
        raise DomainError(f"series start must be >= 2, got {c}")
    if cutoff < c:
        raise InvalidCutoff(f"cutoff {cutoff} below series start {c}")


def _tail_bounds(kind: str, cutoff: int) -> tuple[Rational, Rational]:
    sq_lo, sq_hi = Fraction(1, cutoff + 1), Fraction(1, cutoff)
    if kind == "1/i^2":
        return sq_lo, sq_hi
    cb_lo = Fraction(1, 2 * (cutoff + 1) ** 2)
    cb_hi = Fraction(1, 2 * cutoff**2)
    return sq_lo + cb_lo, sq_hi + cb_hi


def _suffix_tail_table(kind: str, c_min: int, c_max: int, cutoff: int) -> dict[int, Interval]:
    """tail_sum for every c in [c_min, c_max] from one backward pass."""
    _check_tail_args(kind, c_min, cutoff)
    if c_max > cutoff:
        raise InvalidCutoff(f"cutoff {cutoff} below scan end {c_max}")
    t_lo, t_hi = _tail_bounds(kind, cutoff)
    acc = Fraction(0)
    partials: dict[int, Fraction] = {}
    for i in range(cutoff, c_min - 1, -1):
        acc += Fraction(1, i * i) if kind == "1/i^2" else Fraction(i + 1, i**3)
        if i <= c_max:
            partials[i] = acc
    return {c: Interval(p + t_lo, p + t_hi) for c, p in partials.items()}


# ---------------------------------------------------------------------------
# Incidence lower-bound constants (the n^2/26 + 2n family)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundParamsWD:
    """Constant bundle of the incidence lower bound I >= delta*n^2 + r*n.

    h = c(c-2)/(5c-18); x = (h+1)/2 dominates the per-size pair/incidence
    ratios; y = c - 5h - 2 + 18h/(c+1) is the negative correction that
    folds the medium sizes into the series term; delta is an enclosure
    (it absorbs an infinite series) while r is exact.
    """

    c: int
    eps: Rational
    q: int
    h: Rational
    x: Rational
    y: Rational
    delta: Interval
    r: Rational


@dataclass(frozen=True)
class BoundParamsFew:
    """Constant bundle of the few-point-line count bound A*n^2 - B*l*n.

    h = (c^2-c-2)/(4c-16); x = h+1 dominates the per-size ratios; A is an
    enclosure (series term), B = (2c-8)*alpha/(c^2+3c-18) is exact.
    """

    c: int
    h: Rational
    x: Rational
    a: Interval
    b: Rational


def _wd_h(c: int) -> Rational:
    return Fraction(c * (c - 2), 5 * c - 18)


def _wd_series_offset(c: int) -> Rational:
    # y * (c+1)/c^3 in closed form
    return Fraction(-18 * (c - 2), c**3 * (5 * c - 18))


def wd_params(
    c: int,
    eps: Rational,
    q: int,
    k: CrossingConstants = DEFAULT_CONSTANTS,
    cutoff: int = DEFAULT_CUTOFF,
) -> BoundParamsWD:
    """Exact constants of the incidence bound for a given (c, eps, q).

    delta = (1 - eps*alpha - (beta/2)(offset + sum_{i>=c}(i+1)/i^3)) / (h+1)
    as an Interval; r = (2h - 1 + alpha)/(h + 1) exactly.
    """
    if c < 8:
        raise DomainError(f"c must be >= 8, got {c}")
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 2):
        raise DomainError(f"eps must lie in (0, 1/2), got {eps}")
    if not 0 <= q <= 3:
        raise DomainError(f"q must be in [0, 3], got {q}")
    h = _wd_h(c)
    series = tail_sum("(i+1)/i^3", c, cutoff)
    delta = _wd_delta_from_series(c, eps, series, k)
    return BoundParamsWD(
        c=c,
        eps=eps,
        q=q,
        h=h,
        x=(h + 1) / 2,
        y=c - 5 * h - 2 + 18 * h / (c + 1),
        delta=delta,
        r=(2 * h - 1 + k.alpha) / (h + 1),
    )


def f_wd(
    c: int, k: CrossingConstants = DEFAULT_CONSTANTS, cutoff: int = DEFAULT_CUTOFF
) -> Interval:
    """Largest eps the incidence bound supports at this c (enclosure).

    f(c) = (1 - (beta/2)(offset + sum_{i>=c}(i+1)/i^3)) / (h + 1 + alpha).
    """
    if c < 8:
        raise DomainError(f"c must be >= 8, got {c}")
    series = tail_sum("(i+1)/i^3", c, cutoff)
    return _f_wd_from_series(c, series, k)


def _f_wd_from_series(c: int, series: Interval, k: CrossingConstants) -> Interval:
    num = 1 - (k.beta / 2) * (_wd_series_offset(c) + series)
    return num / (_wd_h(c) + 1 + k.alpha)


def _wd_delta_from_series(c: int, eps: Rational, series: Interval, k: CrossingConstants) -> Interval:
    num = 1 - eps * k.alpha - (k.beta / 2) * (_wd_series_offset(c) + series)
    return num / (_wd_h(c) + 1)


@dataclass(frozen=True)
class ScanResult:
    argmax_c: int
    table: tuple[tuple[int, Interval], ...]
    cutoff: int


def _scan_argmax(kind, from_series, c_min, c_max, k, cutoff, max_cutoff) -> ScanResult:
    """Isolate the c maximizing an enclosure-valued map by interval dominance.

    The argmax is accepted only when its enclosure's lower bound exceeds
    every other enclosure's upper bound.  While enclosures overlap at the
    top, the cutoff doubles (up to max_cutoff); if the maximum still
    cannot be isolated, Unresolved is raised naming the overlapping set.
    """
    cutoff = max(cutoff, c_max)
    while True:
        tails = _suffix_tail_table(kind, c_min, c_max, cutoff)
        table = tuple((c, from_series(c, tails[c], k)) for c in range(c_min, c_max + 1))
        best_c, best = max(table, key=lambda row: row[1].lo)
        overlapping = [c for c, iv in table if c != best_c and iv.hi >= best.lo]
        if not overlapping:
            return ScanResult(argmax_c=best_c, table=table, cutoff=cutoff)
        if cutoff * 2 > max_cutoff:
            raise Unresolved(
                f"argmax not isolated at cutoff {cutoff}: "
                f"{best_c} overlaps with {overlapping}"
            )
        cutoff *= 2


def scan_constants_wd(
    c_min: int,
    c_max: int,
    k: CrossingConstants = DEFAULT_CONSTANTS,
    cutoff: int = DEFAULT_CUTOFF,
    max_cutoff: int = MAX_CUTOFF,
) -> ScanResult:
    """Isolate the c in [c_min, c_max] maximizing f(c)."""
    if not 8 <= c_min <= c_max:
        raise DomainError(f"need 8 <= c_min <= c_max, got [{c_min}, {c_max}]")
    return _scan_argmax("(i+1)/i^3", _f_wd_from_series, c_min, c_max, k, cutoff, max_cutoff)


# ---------------------------------------------------------------------------
# Few-point-line count constants (the A*n^2 - B*l*n family)
# ---------------------------------------------------------------------------


def few_params(
    c: int, k: CrossingConstants = DEFAULT_CONSTANTS, cutoff: int = DEFAULT_CUTOFF
) -> BoundParamsFew:
    """Exact constants of the lines-with-at-most-c-points lower bound."""
    if c < 29:
        raise DomainError(f"c must be >= 29, got {c}")
    series = tail_sum("1/i^2", c, cutoff)
    return BoundParamsFew(
        c=c,
        h=Fraction(c * c - c - 2, 4 * c - 16),
        x=Fraction(c * c + 3 * c - 18, 4 * c - 16),
        a=_few_a_from_series(c, series, k),
        b=Fraction(2 * c - 8) * k.alpha / (c * c + 3 * c - 18),
    )


def _few_series_offset(c: int) -> Rational:
    return Fraction(c * c - 3 * c - 14, 2 * c**3 * (c - 4))


def _few_a_from_series(c: int, series: Interval, k: CrossingConstants) -> Interval:
    num = 1 - (k.beta / 2) * (_few_series_offset(c) + series)
    return num * Fraction(2 * c - 8, c * c + 3 * c - 18)


def few_lines_lower_bound(n: int, l: int, p: BoundParamsFew) -> Interval:
    """Enclosure of A*n^2 - B*l*n, the guaranteed count of lines with <= c points."""
    if not 2 <= l <= n:
        raise DomainError(f"need 2 <= l <= n, got l={l}, n={n}")
    return p.a * n**2 - p.b * l * n


def eps_few(
    c: int, k: CrossingConstants = DEFAULT_CONSTANTS, cutoff: int = DEFAULT_CUTOFF
) -> Interval:
    """Enclosure of 2A/(1 + 2B), the largest eps with A*n^2 - B*l*n >= eps*n(n-l)/2."""
    p = few_params(c, k, cutoff)
    return 2 * p.a / (1 + 2 * p.b)


def _eps_few_from_series(c: int, series: Interval, k: CrossingConstants) -> Interval:
    a = _few_a_from_series(c, series, k)
    b = Fraction(2 * c - 8) * k.alpha / (c * c + 3 * c - 18)
    return 2 * a / (1 + 2 * b)


def scan_constants_few(
    c_min: int,
    c_max: int,
    k: CrossingConstants = DEFAULT_CONSTANTS,
    cutoff: int = DEFAULT_CUTOFF,
    max_cutoff: int = MAX_CUTOFF,
) -> ScanResult:
    """Isolate the c in [c_min, c_max] maximizing 2A(c)/(1 + 2B(c))."""
    if not 29 <= c_min <= c_max:
        raise DomainError(f"need 29 <= c_min <= c_max, got [{c_min}, {c_max}]")
    return _scan_argmax("1/i^2", _eps_few_from_series, c_min, c_max, k, cutoff, max_cutoff)


# ---------------------------------------------------------------------------
# Per-configuration theorem verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremCheck:
    """Outcome of one inequality check on one arrangement.

    holds is None when the check's premise fails (inapplicable); the
    sides are still reported.  relation is the asserted comparison of
    lhs against rhs.
    """

    name: str
    applicable: bool
    relation: str
    lhs: Rational
    rhs: Rational
    holds: Optional[bool]
    note: str = ""


def _check(name, applicable, relation, lhs, rhs, note="") -> TheoremCheck:
    lhs = Fraction(lhs)
    rhs = Fraction(rhs)
    if applicable:
        holds = lhs <= rhs if relation == "<=" else lhs >= rhs
    else:
        holds = None
    return TheoremCheck(name, applicable, relation, lhs, rhs, holds, note)


def verify_theorems(
    arr: Arrangement,
    k: CrossingConstants = DEFAULT_CONSTANTS,
    cutoff: int = DEFAULT_CUTOFF,
) -> list[TheoremCheck]:
    """Run every supported inequality against one arrangement.

    Premises are part of the statements: an inapplicable check reports
    its sides with holds=None and counts as success for exit purposes.
    The point-degree and incidence checks require a non-collinear set of
    at least 5 points (the n=3 triangle violates both literal bounds);
    the incidence check additionally needs max_collinear <= n/26 + 2,
    and the half-lines check a non-collinear set.  cutoff is accepted
    for interface compatibility; the current checks compare exact
    rationals and consume no series enclosure.
    """
    del cutoff
    n = arr.n
    l = arr.max_collinear
    non_collinear = l < n
    checks = []

    hz = hirzebruch_check(arr)
    checks.append(
        _check(
            "hirzebruch",
            hz.applicable,
            ">=",
            hz.lhs,
            hz.rhs,
            note="" if hz.applicable else f"needs max_collinear <= n-3, have {l} > {n - 3}",
        )
    )
    checks.append(_st_check("st_edges", arr, visibility_edge_count, st_bound_edges, k))
    checks.append(_st_check("st_lines", arr, _lines_from, st_bound_lines, k))

    idx, degree = max_lines_through_point(arr)
    checks.append(
        _check(
            "point_degree",
            non_collinear and n >= 5,
            ">=",
            degree,
            Fraction(n, 26) + 2,
            note=f"witness point {idx}" if non_collinear and n >= 5 else "needs a non-collinear set with n >= 5",
        )
    )
    incid_applicable = non_collinear and n >= 5 and l <= Fraction(n, 26) + 2
    checks.append(
        _check(
            "incidences",
            incid_applicable,
            ">=",
            arr.incidences,
            Fraction(n * n, 26) + 2 * n,
            note="" if incid_applicable else "needs non-collinear, n >= 5, and max_collinear <= n/26 + 2",
        )
    )
    checks.append(
        _check("total_lines", True, ">=", arr.num_lines, Fraction(n * (n - l), 61))
    )
    le3 = lines_with_at_most(arr, 3)
    checks.append(_check("lines_le3", True, ">=", le3, Fraction(n * (n - l), 122)))
    checks.append(
        _check(
            "half_le3",
            non_collinear,
            ">=",
            le3,
            Fraction(arr.num_lines, 2),
            note="" if non_collinear else "needs a non-collinear set",
        )
    )
    return checks


def _lines_from(arr: Arrangement, i: int) -> int:
    return sum(count for j, count in arr.size_hist.items() if j >= i)


def _st_check(name, arr, measure, bound, k) -> TheoremCheck:
    """Check measure(arr, i) <= bound(n, i) for every i in [2, max_collinear].

    The verdict covers all thresholds; the displayed sides are those of
    the tightest i (smallest slack).
    """
    worst = None
    all_hold = True
    for i in range(2, arr.max_collinear + 1):
        lhs = Fraction(measure(arr, i))
        rhs = bound(arr.n, i, k)
        all_hold = all_hold and lhs <= rhs
        slack = rhs - lhs
        if worst is None or slack < worst[0]:
            worst = (slack, i, lhs, rhs)
    _, i, lhs, rhs = worst
    note = f"tightest at i={i} over i in [2, {arr.max_collinear}]"
    return TheoremCheck(name, True, "<=", lhs, rhs, all_hold, note)
