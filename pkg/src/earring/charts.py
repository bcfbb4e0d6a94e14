"""Numeric realization of the chart atlas: circle parametrizations, the
edge and vertex charts, the point-level projection, and the local
inverses whose round trips certify the local-homeomorphism structure.

Points downstairs are held symbolically as (circle index, parameter t)
with t in (0, 1); t in {0, 1} is identified with the origin.  The planar
embedding is used only for display and tolerance checks.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .graph import Vertex, base_vertex


@dataclass(frozen=True)
class PointH:
    """A point of the earring: the origin, or an interior point of the
    i-th circle."""

    circle: Optional[int] = None   # None encodes the origin
    t: Optional[float] = None

    @staticmethod
    def origin() -> "PointH":
        return PointH()

    @staticmethod
    def on_circle(i: int, t: float) -> "PointH":
        if i < 1:
            raise ValueError("circle index must be >= 1")
        if not 0.0 <= t <= 1.0:
            raise ValueError("parameter must lie in [0, 1]")
        if t in (0.0, 1.0):
            return PointH()
        return PointH(i, t)

    @property
    def is_origin(self) -> bool:
        return self.circle is None


def l_point(i: int, t: float) -> tuple:
    """Planar coordinates of the i-th circle at parameter t."""
    if i < 1:
        raise ValueError("circle index must be >= 1")
    return (math.sin(2 * math.pi * t) / i, (1 - math.cos(2 * math.pi * t)) / i)


def planar(p: PointH) -> tuple:
    if p.is_origin:
        return (0.0, 0.0)
    return l_point(p.circle, p.t)


@dataclass(frozen=True)
class Edge:
    """A directed edge upstairs, identified by its initial vertex and
    positive label; tree edges run to the reduced product, loops stay."""

    base: Vertex
    label: int
    kind: str    # 'tree' or 'loop'

    def __post_init__(self):
        if self.label < 1:
            raise ValueError("edge label must be a positive index")
        expected = "tree" if self.label in self.base.e_set else "loop"
        if self.kind != expected:
            raise ValueError(
                f"label {self.label} at this vertex forms a {expected} edge, not {self.kind}"
            )

    @property
    def terminal(self) -> Vertex:
        if self.kind == "loop":
            return self.base
        return self.base.step(self.label)[1]


def edge_at(v: Vertex, label: int) -> Edge:
    """The edge labeled a_label emanating from v."""
    kind = "tree" if label in v.e_set else "loop"
    return Edge(v, label, kind)


def edge_into(v: Vertex, label: int) -> Edge:
    """The edge labeled a_label terminating in v."""
    if label in v.e_set:
        u = v.step(-label)[1]
        return Edge(u, label, "tree")
    return Edge(v, label, "loop")


@dataclass(frozen=True)
class PointHat:
    """A point upstairs: a vertex, or an interior point of an edge."""

    vertex: Optional[Vertex] = None
    edge: Optional[Edge] = None
    t: Optional[float] = None

    @staticmethod
    def at_vertex(v: Vertex) -> "PointHat":
        return PointHat(vertex=v)

    @staticmethod
    def on_edge(e: Edge, t: float) -> "PointHat":
        if not 0.0 < t < 1.0:
            raise ValueError("edge-interior parameter must lie in (0, 1)")
        return PointHat(edge=e, t=t)

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None


def vertex_chart_level(v: Vertex) -> int:
    """Minimal n >= 2 with all tree labels of v at most n."""
    return max(2, max(v.e_set))


@dataclass(frozen=True)
class ChartId:
    """An atlas chart: either the chart of one edge (range: one arc of
    one circle) or the chart of one vertex (range: the small circles and
    both end-arcs of the large ones)."""

    tag: str                       # 'edge' or 'vertex'
    edge: Optional[Edge] = None
    owner: Optional[Vertex] = None

    @property
    def level(self) -> Optional[int]:
        """For a vertex chart, the n with range U_{n+1}^inf."""
        if self.tag != "vertex":
            return None
        return vertex_chart_level(self.owner)


def edge_chart(e: Edge) -> ChartId:
    return ChartId("edge", edge=e)


def vertex_chart(v: Vertex) -> ChartId:
    return ChartId("vertex", owner=v)


def q_point(p: PointHat) -> PointH:
    """The projection: vertices to the origin, an interior edge point at
    parameter t on an edge labeled a_i to the i-th circle at t."""
    if p.is_vertex:
        return PointH.origin()
    return PointH.on_circle(p.edge.label, p.t)


def charts_containing(p: PointHat) -> list:
    """All atlas charts containing the point, per the interval rules."""
    if p.is_vertex:
        return [vertex_chart(p.vertex)]
    e, t = p.edge, p.t
    charts = []
    if 0.25 < t < 0.75:
        charts.append(edge_chart(e))
    vertex_owners = []
    if t < 0.375:
        vertex_owners.append(e.base)
    if t > 0.625:
        vertex_owners.append(e.terminal)
    if e.kind == "loop" and e.label > vertex_chart_level(e.base):
        # the entire loop lies in its vertex's chart
        vertex_owners.append(e.base)
    seen = set()
    for v in vertex_owners:
        if v.word not in seen:
            seen.add(v.word)
            charts.append(vertex_chart(v))
    return charts


def in_circle_chart(x: PointH, i: int) -> bool:
    """Membership in the open middle arc of the i-th circle."""
    return not x.is_origin and x.circle == i and 0.25 < x.t < 0.75


def in_wedge_chart(x: PointH, n: int) -> bool:
    """Membership in the union of both end-arcs of circles 1..n together
    with all circles above n (the range of a level-n vertex chart)."""
    if x.is_origin:
        return True
    if x.circle > n:
        return True
    return x.t < 0.375 or x.t > 0.625


def chart_range_contains(c: ChartId, x: PointH) -> bool:
    if c.tag == "edge":
        return in_circle_chart(x, c.edge.label)
    return in_wedge_chart(x, c.level)


def local_inverse(c: ChartId, x: PointH) -> PointHat:
    """The unique preimage of x inside chart c; raises if x lies outside
    the chart's range."""
    if not chart_range_contains(c, x):
        raise ValueError("point lies outside the range of the chart")
    if c.tag == "edge":
        return PointHat.on_edge(c.edge, x.t)
    v = c.owner
    if x.is_origin:
        return PointHat.at_vertex(v)
    i, t = x.circle, x.t
    if i > c.level:
        return PointHat.on_edge(edge_at(v, i), t)
    if t < 0.375:
        return PointHat.on_edge(edge_at(v, i), t)
    return PointHat.on_edge(edge_into(v, i), t)


# --- atlas self-check ------------------------------------------------------

@dataclass(frozen=True)
class AtlasReport:
    samples: int
    round_trips: int
    overlaps: int
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


def _random_vertex(rng: random.Random, max_steps: int = 25) -> Vertex:
    v = base_vertex()
    from .words import anchor
    from .graph import Vertex as _V
    if rng.random() < 0.3:
        # start near an island to exercise high-label charts
        v = _V.make(anchor(rng.randrange(1, 30)))
    for _ in range(rng.randrange(max_steps)):
        labels = sorted(v.e_set)
        i = rng.choice(labels)
        v = v.step(i if rng.random() < 0.5 else -i)[1]
    return v


def _random_point(rng: random.Random) -> PointHat:
    v = _random_vertex(rng)
    roll = rng.random()
    if roll < 0.2:
        return PointHat.at_vertex(v)
    n = vertex_chart_level(v)
    label = rng.choice(sorted(v.e_set) + [n + 1, n + 2, n + 5])
    e = edge_at(v, label)
    # bias t toward chart boundaries
    boundary = (0.25, 0.375, 0.5, 0.625, 0.75)
    if rng.random() < 0.5:
        t = min(0.999, max(0.001, rng.choice(boundary) + rng.uniform(-0.05, 0.05)))
    else:
        t = rng.uniform(0.001, 0.999)
    return PointHat.on_edge(e, t)


def atlas_check(samples: int, seed: int = 0, tol: float = 1e-12) -> AtlasReport:
    """Sample points upstairs and verify: every point is covered by at
    least one chart and at most one edge chart and one vertex chart; the
    local inverse of the projection through every containing chart
    returns the point exactly, and within `tol` in planar coordinates;
    local inverses through overlapping charts agree; vertex-chart ranges
    are nested by level."""
    rng = random.Random(seed)
    failures = []
    round_trips = 0
    overlaps = 0
    for k in range(samples):
        p = _random_point(rng)
        charts = charts_containing(p)
        if not charts:
            failures.append(("cover", k))
            continue
        if sum(1 for c in charts if c.tag == "edge") > 1:
            failures.append(("edge-disjoint", k))
        if sum(1 for c in charts if c.tag == "vertex") > 1:
            failures.append(("vertex-disjoint", k))
        x = q_point(p)
        inverses = []
        for c in charts:
            if not chart_range_contains(c, x):
                failures.append(("range", k))
                continue
            back = local_inverse(c, x)
            inverses.append(back)
            round_trips += 1
            if q_point(back) != x:
                failures.append(("round-trip", k))
            px, bx = planar(q_point(p)), planar(q_point(back))
            if math.dist(px, bx) > tol:
                failures.append(("planar-tolerance", k))
        if len(inverses) > 1:
            overlaps += 1
            if any(b != inverses[0] for b in inverses[1:]):
                failures.append(("overlap", k))
        # range nesting at this sample: a point of U_{n+1}^inf lies in
        # U_{m+1}^inf for every m <= n
        for c in charts:
            if c.tag == "vertex" and in_wedge_chart(x, c.level):
                # smaller level means a larger range: it must contain x
                for m in range(2, c.level):
                    if not in_wedge_chart(x, m):
                        failures.append(("nesting", k))
    return AtlasReport(samples, round_trips, overlaps, tuple(failures))
