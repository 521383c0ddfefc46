"""Plain-text instance and coloring formats with canonical writers.

Instance file: point count, one "x y" per line, then optionally a family
section ("family <count>" followed by one "u v" per line) whose edges must
pairwise cross. Coloring file: "n c" header, then one "u v color" line per
edge of K_n in lexicographic order. Writers are byte-stable; parsers
report 1-based line numbers on every error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring
from .geometry import Edge, Point, PointSet, all_edges, find_collinear_triple, find_duplicate
from .quasiplanar import check_pairwise_crossing


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Instance:
    points: PointSet
    family: tuple[Edge, ...] | None = None


def _tokens(text: str):
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield idx, line.split()


def _expect_ints(line_no: int, parts: list[str], count: int, what: str) -> list[int]:
    if len(parts) != count:
        raise ParseError(line_no, f"expected {what}, got {' '.join(parts)!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(line_no, f"expected {what}, got {' '.join(parts)!r}") from None


def write_instance(instance: Instance | PointSet) -> str:
    if isinstance(instance, PointSet):
        instance = Instance(instance)
    lines = [str(instance.points.n)]
    lines += [f"{p.x} {p.y}" for p in instance.points]
    if instance.family is not None:
        lines.append(f"family {len(instance.family)}")
        lines += [f"{e.u} {e.v}" for e in sorted(instance.family)]
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Instance:
    stream = _tokens(text)
    try:
        line_no, parts = next(stream)
    except StopIteration:
        raise ParseError(1, "empty instance file") from None
    (n,) = _expect_ints(line_no, parts, 1, "a point count")
    if n < 1:
        raise ParseError(line_no, f"point count must be >= 1, got {n}")

    pts = []
    for _ in range(n):
        try:
            line_no, parts = next(stream)
        except StopIteration:
            raise ParseError(line_no, f"expected {n} points, file ended after {len(pts)}") from None
        x, y = _expect_ints(line_no, parts, 2, "a point 'x y'")
        try:
            pts.append(Point(x, y))
        except ValueError as exc:
            raise ParseError(line_no, str(exc)) from None

    dup = find_duplicate(pts)
    if dup is not None:
        raise ParseError(line_no, f"duplicate points at indices {dup[0]} and {dup[1]}")
    triple = find_collinear_triple(pts)
    if triple is not None:
        raise ParseError(line_no, f"collinear triple at indices {triple[0]}, {triple[1]}, {triple[2]}")
    points = PointSet(pts)

    family = None
    rest = list(stream)
    if rest:
        line_no, parts = rest[0]
        if parts[0] != "family":
            raise ParseError(line_no, f"expected 'family <count>' or end of file, got {' '.join(parts)!r}")
        (fn,) = _expect_ints(line_no, parts[1:], 1, "'family <count>'")
        if len(rest) - 1 != fn:
            raise ParseError(line_no, f"family section declares {fn} edges, found {len(rest) - 1}")
        edges = []
        for line_no, parts in rest[1:]:
            u, v = _expect_ints(line_no, parts, 2, "a family edge 'u v'")
            if u == v or not 0 <= u < n or not 0 <= v < n:
                raise ParseError(line_no, f"invalid edge ({u}, {v}) for n={n}")
            edges.append(Edge.of(u, v))
        if len(set(edges)) != len(edges):
            raise ParseError(line_no, "family section repeats an edge")
        if not check_pairwise_crossing(points, edges):
            raise ParseError(line_no, "family edges do not pairwise cross")
        family = tuple(sorted(edges))
    return Instance(points, family)


def write_coloring(coloring: Coloring) -> str:
    lines = [f"{coloring.n} {coloring.num_colors}"]
    lines += [f"{e.u} {e.v} {c}" for e, c in coloring.items()]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    stream = _tokens(text)
    try:
        line_no, parts = next(stream)
    except StopIteration:
        raise ParseError(1, "empty coloring file") from None
    n, c = _expect_ints(line_no, parts, 2, "a header 'n num_colors'")
    if n < 2 or c < 1:
        raise ParseError(line_no, f"invalid header n={n}, num_colors={c}")

    assignment: dict[Edge, int] = {}
    last = line_no
    for line_no, parts in stream:
        last = line_no
        u, v, color = _expect_ints(line_no, parts, 3, "an edge line 'u v color'")
        if u == v or not 0 <= u < n or not 0 <= v < n:
            raise ParseError(line_no, f"invalid edge ({u}, {v}) for n={n}")
        e = Edge.of(u, v)
        if e in assignment:
            raise ParseError(line_no, f"duplicate line for edge ({e.u}, {e.v})")
        if not 0 <= color < c:
            raise ParseError(line_no, f"color {color} outside 0..{c - 1}")
        assignment[e] = color
    missing = [e for e in all_edges(n) if e not in assignment]
    if missing:
        e = missing[0]
        raise ParseError(last, f"missing edge ({e.u}, {e.v}) ({len(missing)} edges absent)")
    return Coloring(n, c, assignment)
