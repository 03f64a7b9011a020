"""Line arrangements of finite point sets and their incidence statistics.

Enumerates every line determined by a point set (a line through at least
two of its points), then derives the statistics the verification suite
quantifies over: the histogram of line sizes, the total point-line
incidence count, the maximum collinear count, and per-point line counts.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from . import _kern
from .errors import DomainError, DuplicatePoint, PreconditionViolated, TooFewPoints
from .geometry import LineKey, Point, Rational


@dataclass(frozen=True)
class PointSet:
    """Ordered, duplicate-free collection of exact rational points."""

    points: tuple[Point, ...]

    def __post_init__(self):
        if len(self.points) < 1:
            raise DomainError("a point set needs at least one point")
        if len(set(self.points)) != len(self.points):
            seen = set()
            for idx, p in enumerate(self.points):
                if p in seen:
                    raise DuplicatePoint(f"point {idx} duplicates an earlier point: {p}")
                seen.add(p)

    @property
    def n(self) -> int:
        return len(self.points)

    @classmethod
    def of(cls, points: Iterable[Point]) -> "PointSet":
        return cls(tuple(points))


@dataclass(frozen=True)
class LineRecord:
    """One determined line: its canonical key and the indices it contains."""

    key: LineKey
    members: tuple[int, ...]


@dataclass(frozen=True)
class Arrangement:
    """Full line/incidence structure of a point set.

    size_hist maps line size i (>= 2) to the number of lines with exactly
    i points; only sizes that occur are stored.  incidences is the total
    number of (point, line) incidences; max_collinear is the size of the
    largest collinear subset.
    """

    n: int
    lines: tuple[LineRecord, ...]
    size_hist: Mapping[int, int]
    max_collinear: int
    incidences: int
    lines_per_point: tuple[int, ...]

    @property
    def num_lines(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class IncidenceBreakdown:
    """Pair and incidence counts split into small / medium / large line sizes.

    A size i is large when i >= k, small when i <= c (and below k), and
    medium in between.  When k <= c the small and large ranges would
    overlap; large wins and degenerate_k is set.
    """

    c: int
    eps: Rational
    q: int
    k: int
    small_pairs: int
    medium_pairs: int
    large_pairs: int
    small_incidences: int
    medium_incidences: int
    large_incidences: int
    degenerate_k: bool = field(default=False)


def build_arrangement(ps: PointSet) -> Arrangement:
    """Enumerate all determined lines of ps and compute its statistics.

    Groups the C(n, 2) point pairs by canonical line key; output is
    deterministic (lines sorted by key) regardless of kernel choice.
    """
    n = ps.n
    if n < 2:
        raise TooFewPoints(f"need at least 2 points, got {n}")
    xs = [p.x for p in ps.points]
    ys = [p.y for p in ps.points]
    groups = _kern.group_collinear(xs, ys)

    records = []
    size_hist: dict[int, int] = {}
    incidences = 0
    per_point = [0] * n
    for raw_key in sorted(groups):
        members = tuple(sorted(groups[raw_key]))
        records.append(LineRecord(LineKey(*raw_key), members))
        size = len(members)
        size_hist[size] = size_hist.get(size, 0) + 1
        incidences += size
        for v in members:
            per_point[v] += 1
    return Arrangement(
        n=n,
        lines=tuple(records),
        size_hist=size_hist,
        max_collinear=max(size_hist),
        incidences=incidences,
        lines_per_point=tuple(per_point),
    )


def visibility_edge_count(arr: Arrangement, i: int) -> int:
    """Number of point pairs consecutive on lines with at least i points.

    Equals sum_{j >= i} (j - 1) * size_hist[j]; each j-line contributes
    j - 1 consecutive pairs.  Zero for i beyond the longest line.
    """
    if i < 2:
        raise DomainError(f"line size threshold must be >= 2, got {i}")
    return sum((j - 1) * count for j, count in arr.size_hist.items() if j >= i)


def max_lines_through_point(arr: Arrangement) -> tuple[int, int]:
    """Index and count of a point lying on the most determined lines.

    Ties break to the smallest index.
    """
    best = max(arr.lines_per_point)
    return arr.lines_per_point.index(best), best


def lines_with_at_most(arr: Arrangement, c: int) -> int:
    """Number of determined lines containing at most c points."""
    if c < 2:
        raise DomainError(f"line size cap must be >= 2, got {c}")
    return sum(count for i, count in arr.size_hist.items() if i <= c)


def compute_k(arr: Arrangement, alpha: Rational, eps: Rational, q: int) -> int:
    """Smallest size threshold k whose visibility edge count is <= alpha*n.

    k is searched over {2, ..., floor(eps*n) + q}; if every count in that
    range exceeds alpha*n the fallback floor(eps*n) + q + 1 is returned.
    """
    _check_eps_q(arr.n, eps, q)
    n = arr.n
    top = int(eps * n) + q
    for k in range(2, top + 1):
        if visibility_edge_count(arr, k) <= alpha * n:
            return k
    return top + 1


def classify_pairs_incidences(
    arr: Arrangement, c: int, eps: Rational, q: int, alpha: Rational
) -> IncidenceBreakdown:
    """Split all point pairs and incidences into small/medium/large sizes.

    Small: i <= c (below k); medium: c < i < k; large: i >= k, where k
    comes from compute_k.  Large takes precedence when k <= c, keeping
    the three groups a true partition; that case sets degenerate_k.
    The pair counts always sum to C(n, 2) and the incidence counts to the
    arrangement total.
    """
    if c < 8:
        raise DomainError(f"small-size cap c must be >= 8, got {c}")
    k = compute_k(arr, alpha, eps, q)
    pairs = [0, 0, 0]  # small, medium, large
    incid = [0, 0, 0]
    for i, count in arr.size_hist.items():
        if i >= k:
            bucket = 2
        elif i <= c:
            bucket = 0
        else:
            bucket = 1
        pairs[bucket] += i * (i - 1) // 2 * count
        incid[bucket] += i * count
    return IncidenceBreakdown(
        c=c,
        eps=Fraction(eps),
        q=q,
        k=k,
        small_pairs=pairs[0],
        medium_pairs=pairs[1],
        large_pairs=pairs[2],
        small_incidences=incid[0],
        medium_incidences=incid[1],
        large_incidences=incid[2],
        degenerate_k=k <= c,
    )


def _check_eps_q(n: int, eps: Rational, q: int) -> None:
    if not 0 <= q <= 3:
        raise DomainError(f"q must be in [0, 3], got {q}")
    if eps * n < 2:
        raise PreconditionViolated(f"eps*n must be >= 2, got {eps} * {n}")
