"""Exact integer geometry: points, crossing predicates, validation, generators.

All predicates work on integer coordinates with exact arithmetic; there is
no floating point anywhere in a decision path. Generators use floats only
to place candidate points, then certify the result exactly and retry on
failure, so their output is always certificate-grade.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

# Coordinates are capped so orientation determinants stay far inside the
# exact range of 64-bit products (Python ints are unbounded anyway; the cap
# keeps instances portable to fixed-width implementations of the formats).
COORD_LIMIT = 1 << 30

_GEN_BOX = 10**6
_GEN_RADIUS = 10**6


class GenerationError(RuntimeError):
    """A randomized generator exhausted its retry budget."""


@dataclass(frozen=True, slots=True)
class Point:
    x: int
    y: int

    def __post_init__(self) -> None:
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError(f"integer coordinates required: ({self.x!r}, {self.y!r})")
        if abs(self.x) > COORD_LIMIT or abs(self.y) > COORD_LIMIT:
            raise ValueError(f"coordinate exceeds +/-{COORD_LIMIT}: ({self.x}, {self.y})")


class Edge(NamedTuple):
    """Unordered vertex-index pair, stored with u < v."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise ValueError(f"degenerate edge ({a}, {b})")
        return cls(a, b) if a < b else cls(b, a)


def all_edges(n: int) -> list[Edge]:
    """Every edge of the complete graph on n vertices, lexicographic."""
    return [Edge(u, v) for u in range(n) for v in range(u + 1, n)]


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of det(b-a, c-a): +1 counter-clockwise, -1 clockwise, 0 collinear."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (d > 0) - (d < 0)


def segments_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff open segments ab and cd share an interior point.

    Segments that share an endpoint never cross. Assumes general position
    apart from possibly shared endpoints (no three distinct collinear
    points), which every validated PointSet guarantees.
    """
    if a == c or a == d or b == c or b == d:
        return False
    if orientation(a, b, c) * orientation(a, b, d) >= 0:
        return False
    return orientation(c, d, a) * orientation(c, d, b) < 0


def _as_points(points: Iterable) -> tuple[Point, ...]:
    out = []
    for p in points:
        if isinstance(p, Point):
            out.append(p)
        else:
            x, y = p
            out.append(Point(int(x), int(y)))
    return tuple(out)


def _reduced_direction(p: Point, q: Point) -> tuple[int, int]:
    # Canonical line direction: divided by gcd, sign-normalized so that a
    # direction and its negation coincide.
    dx, dy = q.x - p.x, q.y - p.y
    g = math.gcd(dx, dy)
    dx //= g
    dy //= g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


def find_duplicate(points: Sequence[Point]) -> tuple[int, int] | None:
    seen: dict[Point, int] = {}
    for i, p in enumerate(points):
        if p in seen:
            return seen[p], i
        seen[p] = i
    return None


def find_collinear_triple(points: Sequence[Point]) -> tuple[int, int, int] | None:
    """Indices of some collinear triple, or None. Points must be distinct.

    Per-anchor direction hashing: a triple (i, j, k) is collinear iff the
    reduced directions i->j and i->k coincide, so one dict per anchor finds
    a witness in O(n^2) instead of O(n^3).
    """
    n = len(points)
    for i in range(n):
        seen: dict[tuple[int, int], int] = {}
        for j in range(i + 1, n):
            d = _reduced_direction(points[i], points[j])
            if d in seen:
                return i, seen[d], j
            seen[d] = j
    return None


class PointSet(Sequence[Point]):
    """Ordered point set in general position.

    Construction rejects duplicate points and collinear triples outright:
    degenerate inputs are a caller error, never a downstream special case.
    """

    __slots__ = ("_points",)

    def __init__(self, points: Iterable):
        pts = _as_points(points)
        if not pts:
            raise ValueError("a point set needs at least one point")
        dup = find_duplicate(pts)
        if dup is not None:
            raise ValueError(f"duplicate points at indices {dup[0]} and {dup[1]}")
        bad = find_collinear_triple(pts)
        if bad is not None:
            raise ValueError(f"collinear triple at indices {bad[0]}, {bad[1]}, {bad[2]}")
        self._points = pts

    @property
    def n(self) -> int:
        return len(self._points)

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    def __len__(self) -> int:
        return len(self._points)

    def __getitem__(self, i):
        return self._points[i]

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self._points == other._points

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"PointSet({list(self._points)!r})"

    def edges_cross(self, e: Edge, f: Edge) -> bool:
        p = self._points
        return segments_cross(p[e.u], p[e.v], p[f.u], p[f.v])


@dataclass(frozen=True)
class ValidationReport:
    general_position: bool
    convex_position: bool
    convex_cyclic_order: tuple[int, ...] | None
    duplicate_pair: tuple[int, int] | None = None
    collinear_triple: tuple[int, int, int] | None = None


def convex_hull_indices(points: Sequence[Point]) -> list[int]:
    """Hull vertex indices in counter-clockwise order (monotone chain).

    Requires general position; with no collinear triples the hull is unique
    and every hull vertex is strict.
    """
    order = sorted(range(len(points)), key=lambda i: (points[i].x, points[i].y))
    if len(order) <= 2:
        return order

    def build(indices):
        chain: list[int] = []
        for i in indices:
            while len(chain) >= 2 and orientation(points[chain[-2]], points[chain[-1]], points[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = build(order)
    upper = build(reversed(order))
    return lower[:-1] + upper[:-1]


def validate_pointset(points) -> ValidationReport:
    """Check general position and convex position of raw points.

    Returns the clockwise cyclic order of hull indices (rotated to start at
    the smallest index) when the set is in convex position.
    """
    pts = points.points if isinstance(points, PointSet) else _as_points(points)
    if len(pts) < 3:
        raise ValueError(f"validation needs at least 3 points, got {len(pts)}")
    dup = find_duplicate(pts)
    if dup is not None:
        return ValidationReport(False, False, None, duplicate_pair=dup)
    bad = find_collinear_triple(pts)
    if bad is not None:
        return ValidationReport(False, False, None, collinear_triple=bad)
    hull = convex_hull_indices(pts)
    if len(hull) != len(pts):
        return ValidationReport(True, False, None)
    cw = list(reversed(hull))
    start = cw.index(min(cw))
    return ValidationReport(True, True, tuple(cw[start:] + cw[:start]))


def _attempt_points(raw: list[tuple[float, float]], rng: random.Random) -> list[Point]:
    # Round to the grid and break ties/collinearities with a +/-1 jitter.
    return [Point(round(x) + rng.randrange(-1, 2), round(y) + rng.randrange(-1, 2)) for x, y in raw]


def _is_clockwise_convex(points: Sequence[Point]) -> bool:
    n = len(points)
    return all(orientation(points[i], points[(i + 1) % n], points[(i + 2) % n]) == -1 for i in range(n))


def gen_convex_polygon(n: int, seed: int = 0, max_attempts: int = 64) -> PointSet:
    """n integer points in convex general position, clockwise in index order.

    Realized on a circle of radius ~10^6; only the cyclic order matters for
    crossing structure, so the polygon need not be metrically regular.
    """
    if n < 3:
        raise ValueError(f"a convex polygon needs n >= 3, got {n}")
    rng = random.Random(f"convex:{n}:{seed}")
    for _ in range(max_attempts):
        raw = []
        for i in range(n):
            theta = math.pi / 2 - 2.0 * math.pi * i / n  # clockwise from 12 o'clock
            raw.append((_GEN_RADIUS * math.cos(theta), _GEN_RADIUS * math.sin(theta)))
        pts = _attempt_points(raw, rng)
        if find_duplicate(pts) is None and find_collinear_triple(pts) is None and _is_clockwise_convex(pts):
            return PointSet(pts)
    raise GenerationError(f"convex generator failed for n={n}, seed={seed} after {max_attempts} attempts")


def gen_random_pointset(n: int, seed: int = 0, max_attempts_per_point: int = 500) -> PointSet:
    """n uniform integer points in a fixed box, collinear triples rejected."""
    if n < 1:
        raise ValueError(f"n >= 1 required, got {n}")
    rng = random.Random(f"random:{n}:{seed}")
    pts: list[Point] = []
    directions: list[set[tuple[int, int]]] = []  # per anchor: reduced directions to later points
    for _ in range(n):
        for _attempt in range(max_attempts_per_point):
            cand = Point(rng.randrange(0, _GEN_BOX + 1), rng.randrange(0, _GEN_BOX + 1))
            if any(cand == p for p in pts):
                continue
            dirs = [_reduced_direction(p, cand) for p in pts]
            if any(d in directions[i] for i, d in enumerate(dirs)):
                continue
            for i, d in enumerate(dirs):
                directions[i].add(d)
            directions.append(set())
            pts.append(cand)
            break
        else:
            raise GenerationError(f"random generator failed for n={n}, seed={seed}")
    return PointSet(pts)


def gen_perfect_crossing_family_pointset(
    n: int, seed: int = 0, max_attempts: int = 64
) -> tuple[PointSet, list[Edge]]:
    """2n points carrying a perfect crossing family of n pairwise crossing edges.

    Near-diametral chords of a large circle: chord i runs from angle a_i in
    (0, pi) to roughly a_i + pi, with all first endpoints separated and all
    opposite-end perturbations small enough that the 2n endpoints interleave
    as A_0..A_{n-1}, B_0..B_{n-1} around the circle. Any two such chords have
    interleaved endpoints and therefore cross. The construction is certified
    exactly (every pair checked with segments_cross) and re-sampled on failure.

    Returns the point set (endpoints of chord i at positions 2i, 2i+1) and
    the family edges (2i, 2i+1).
    """
    if n < 1:
        raise ValueError(f"n >= 1 required, got {n}")
    rng = random.Random(f"family:{n}:{seed}")
    for _ in range(max_attempts):
        raw: list[tuple[float, float]] = []
        for i in range(n):
            a = math.pi * (i + 0.2 + 0.6 * rng.random()) / n
            b = a + math.pi + (rng.random() - 0.5) * math.pi / (6.0 * n)
            raw.append((_GEN_RADIUS * math.cos(a), _GEN_RADIUS * math.sin(a)))
            raw.append((_GEN_RADIUS * math.cos(b), _GEN_RADIUS * math.sin(b)))
        pts = _attempt_points(raw, rng)
        if find_duplicate(pts) is not None or find_collinear_triple(pts) is not None:
            continue
        family = [Edge(2 * i, 2 * i + 1) for i in range(n)]
        ok = all(
            segments_cross(pts[e.u], pts[e.v], pts[f.u], pts[f.v])
            for idx, e in enumerate(family)
            for f in family[idx + 1 :]
        )
        if ok:
            return PointSet(pts), family
    raise GenerationError(f"crossing-family generator failed for n={n}, seed={seed}")
