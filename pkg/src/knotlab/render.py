"""Planar layouts and SVG drawings of diagrams.

Coordinates come from a barycentric solve on the truncated map of the
diagram's 4-valent graph: each crossing becomes a small square of four
dart nodes with the crossing at its hub, each edge gets a midpoint
node, and every interior face gets a hub joined to its boundary.
Truncation removes pinch points (a face walk never repeats a node), so
the solve runs on a simple triangulated disk whose outer boundary is
pinned to a circle; barycentric coordinates on such a disk are
one-to-one, which is what makes the straight-line skeleton of every
route crossing-free even for diagrams full of kinks and clasps, where
the raw crossing graph is far from 3-connected.

Routes are dense polylines: the skeleton of a strand runs crossing,
dart corner, midpoint, dart corner, crossing, and the corners are
rounded with quadratic arcs short enough to stay inside their wedge.
Drawing, bounds, and intersection checks all share the sampled points.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np

from .catalog import catalog_entries
from .diagram import Diagram, _alpha, _face_orbits, _pieces, emit_pd, parse_pd, trace
from .errors import InconsistentLayoutError

Point = tuple[float, float]
Route = tuple[Point, ...]

CORNER_STEPS = 12  # samples per rounded corner
LINE_STEPS = 6  # samples per straight stretch
CORNER_FRACTION = 0.35  # of each adjacent segment consumed by the rounding
PIECE_SPACING = 3.0  # unit-disk pieces centered this far apart
LOOP_SPACING = 2.5
CONFLICT_TOLERANCE = 1e-6  # of the bounding-box diagonal

_STROKE = "#2e3440"
_PALETTE = ("#d1495b", "#00798c", "#66a182")


@dataclass(frozen=True)
class Layout:
    """Geometry for one diagram: crossing points, edge routes, bounds.

    Routes run tail to head along the strand and start and end exactly
    at their crossing positions; free loop routes close up (the first
    point repeats at the end).
    """

    position_of_crossing: tuple[Point, ...]
    edge_routes: Mapping[int, Route]
    free_loop_routes: tuple[Route, ...]
    bbox: tuple[float, float, float, float]

    @property
    def diagonal(self) -> float:
        x0, y0, x1, y1 = self.bbox
        return math.hypot(x1 - x0, y1 - y0)

    def to_wire(self) -> dict:
        return {
            "positions": [list(p) for p in self.position_of_crossing],
            "edge_routes": {
                str(e): [list(p) for p in r]
                for e, r in sorted(self.edge_routes.items())
            },
            "free_loop_routes": [
                [list(p) for p in r] for r in self.free_loop_routes
            ],
            "bbox": list(self.bbox),
        }


# ── barycentric solve ────────────────────────────────────────────────


def _truncated_walks(quads) -> list[list[tuple[str, int]]]:
    """Per face of the diagram, its boundary in the truncated map.

    Each orbit dart (ci, s) contributes the departing corner at slot
    s+1, the midpoint of that edge, and the arriving corner at the next
    crossing; consecutive corners at one crossing are joined by square
    edges.  The walks are simple cycles: midpoints have two non-hub
    neighbours and corners three, so no node can be visited twice.
    """
    alpha = _alpha(quads)
    walks = []
    for orbit in _face_orbits(quads):
        walk: list[tuple[str, int]] = []
        for d in orbit:
            ci, s = divmod(d, 4)
            out = 4 * ci + (s + 1) % 4
            walk.extend(
                [("d", out), ("m", quads[ci][(s + 1) % 4]), ("d", alpha[out])]
            )
        walks.append(walk)
    return walks


def _solve_positions(
    quads, preset: tuple[Point, ...] | None
) -> dict[tuple[str, int], Point]:
    n = len(quads)
    alpha = _alpha(quads)
    walks = _truncated_walks(quads)

    piece_of: dict[int, int] = {}
    for k, piece in enumerate(_pieces(quads)):
        for ci in piece:
            piece_of[ci] = k

    # one outer face per connected piece: most darts, then lowest dart
    by_piece: dict[int, list[int]] = {}
    for fi, walk in enumerate(walks):
        by_piece.setdefault(piece_of[walk[0][1] // 4], []).append(fi)
    outer = {
        k: min(faces, key=lambda fi: (-len(walks[fi]), walks[fi][0][1]))
        for k, faces in by_piece.items()
    }

    node_id: dict[tuple[str, int], int] = {}

    def nid(key: tuple[str, int]) -> int:
        return node_id.setdefault(key, len(node_id))

    edges: list[tuple[int, int]] = []
    for ci in range(n):
        for s in range(4):
            edges.append((nid(("x", ci)), nid(("d", 4 * ci + s))))
            edges.append((nid(("d", 4 * ci + s)), nid(("d", 4 * ci + (s + 1) % 4))))
    for dart in range(4 * n):
        if dart < alpha[dart]:
            e = quads[dart // 4][dart % 4]
            edges.append((nid(("d", dart)), nid(("m", e))))
            edges.append((nid(("m", e)), nid(("d", alpha[dart]))))
    for fi, walk in enumerate(walks):
        if fi in outer.values() or len(walk) == 3:
            continue
        f = nid(("f", fi))
        for key in walk:
            edges.append((f, nid(key)))

    pins: dict[int, Point] = {}
    for k, fi in sorted(outer.items()):
        cx = PIECE_SPACING * k
        walk = walks[fi]
        span = len(walk)
        for j, key in enumerate(walk):
            ang = 2.0 * math.pi * j / span
            pins[nid(key)] = (cx + math.cos(ang), math.sin(ang))
    if preset is not None:
        for ci, pt in enumerate(preset):
            pins[nid(("x", ci))] = pt

    free = [i for i in range(len(node_id)) if i not in pins]
    col = {i: k for k, i in enumerate(free)}
    a = np.zeros((len(free), len(free)))
    b = np.zeros((len(free), 2))
    for u, v in edges:
        for p, q in ((u, v), (v, u)):
            if p in pins:
                continue
            r = col[p]
            a[r, r] += 1.0
            if q in pins:
                b[r, 0] += pins[q][0]
                b[r, 1] += pins[q][1]
            else:
                a[r, col[q]] -= 1.0
    solved = np.linalg.solve(a, b) if free else np.zeros((0, 2))

    out: dict[tuple[str, int], Point] = {}
    for key, i in node_id.items():
        if i in pins:
            out[key] = pins[i]
        else:
            out[key] = (float(solved[col[i], 0]), float(solved[col[i], 1]))
    return out


def _rounded_route(points: list[Point]) -> Route:
    """Dense samples of a polyline with its interior corners rounded.

    Each corner is replaced by a quadratic arc that starts and ends a
    fixed fraction into the adjacent segments, so the arc stays inside
    its corner's wedge and two routes can only meet where their
    skeletons do.  Endpoints are kept exactly.
    """
    pts: list[Point] = [points[0]]

    def line_to(target: Point) -> None:
        sx, sy = pts[-1]
        for j in range(1, LINE_STEPS + 1):
            t = j / LINE_STEPS
            pts.append((sx + t * (target[0] - sx), sy + t * (target[1] - sy)))

    for i in range(1, len(points) - 1):
        prev, v, nxt = points[i - 1], points[i], points[i + 1]
        a = (
            v[0] + CORNER_FRACTION * (prev[0] - v[0]),
            v[1] + CORNER_FRACTION * (prev[1] - v[1]),
        )
        b = (
            v[0] + CORNER_FRACTION * (nxt[0] - v[0]),
            v[1] + CORNER_FRACTION * (nxt[1] - v[1]),
        )
        line_to(a)
        for j in range(1, CORNER_STEPS + 1):
            t = j / CORNER_STEPS
            u = 1.0 - t
            pts.append(
                (
                    u * u * a[0] + 2 * u * t * v[0] + t * t * b[0],
                    u * u * a[1] + 2 * u * t * v[1] + t * t * b[1],
                )
            )
    line_to(points[-1])
    pts[-1] = points[-1]
    return tuple(pts)


def _circle(center: Point, radius: float) -> Route:
    pts = []
    for j in range(64):
        ang = 2.0 * math.pi * j / 64
        pts.append((center[0] + radius * math.cos(ang), center[1] + radius * math.sin(ang)))
    pts.append(pts[0])
    return tuple(pts)


def _preset_positions(d: Diagram) -> tuple[Point, ...] | None:
    """Catalog crossing positions, reordered to d's quads, on exact match."""
    text = emit_pd(d)
    for entry in catalog_entries():
        if entry.preset_layout and emit_pd(entry.diagram) == text:
            base = parse_pd(entry.pd)
            remaining = list(enumerate(base.quads))
            order = []
            for q in d.quads:
                at = next(i for i, (_, bq) in enumerate(remaining) if bq == q)
                order.append(remaining.pop(at)[0])
            return tuple(entry.preset_layout[i] for i in order)
    return None


def layout_diagram(d: Diagram) -> Layout:
    """Deterministic drawing coordinates for a valid diagram.

    Catalog diagrams keep their preset crossing positions; everything
    else is solved fresh.  A lone free loop is a unit circle.
    """
    n = d.crossing_count
    routes: dict[int, Route] = {}
    positions: tuple[Point, ...] = ()
    pieces = 0
    if n:
        pos = _solve_positions(d.quads, _preset_positions(d))
        report = trace(d)
        for e in range(1, d.edge_count + 1):
            (tci, ts), (hci, hs) = report.orientation[e]
            routes[e] = _rounded_route(
                [
                    pos[("x", tci)],
                    pos[("d", 4 * tci + ts)],
                    pos[("m", e)],
                    pos[("d", 4 * hci + hs)],
                    pos[("x", hci)],
                ]
            )
        positions = tuple(pos[("x", ci)] for ci in range(n))
        pieces = len(_pieces(d.quads))

    loops = tuple(
        _circle((PIECE_SPACING * pieces + LOOP_SPACING * k, 0.0), 1.0)
        for k in range(d.free_loops)
    )

    xs = [p[0] for r in routes.values() for p in r]
    ys = [p[1] for r in routes.values() for p in r]
    for r in loops:
        xs.extend(p[0] for p in r)
        ys.extend(p[1] for p in r)
    bbox = (min(xs), min(ys), max(xs), max(ys)) if xs else (-1.0, -1.0, 1.0, 1.0)
    return Layout(positions, routes, loops, bbox)


# ── geometric faithfulness ───────────────────────────────────────────


def route_conflicts(
    layout: Layout, tolerance: float = CONFLICT_TOLERANCE
) -> tuple[Point, ...]:
    """Points where routes cross away from the diagram's crossings.

    Sampled segments that merely touch at shared endpoints (strands
    meeting at a crossing) do not count; a proper transversal
    intersection farther than tolerance x diagonal from every crossing
    position does.  Empty means the drawing realizes the diagram.
    """
    routes = [np.asarray(r) for r in layout.edge_routes.values()]
    routes.extend(np.asarray(r) for r in layout.free_loop_routes)
    if not routes:
        return ()
    radius = tolerance * layout.diagonal
    anchors = np.asarray(layout.position_of_crossing or [(math.inf, math.inf)])
    hits: list[Point] = []
    for i in range(len(routes)):
        s1, e1 = routes[i][:-1], routes[i][1:]
        for j in range(i, len(routes)):
            s2, e2 = routes[j][:-1], routes[j][1:]
            d1 = _cross(e1, s1, s2[:, None])
            d2 = _cross(e1, s1, e2[:, None])
            d3 = _cross(e2, s2, s1[:, None])
            d4 = _cross(e2, s2, e1[:, None])
            mask = (d1 * d2 < 0) & ((d3 * d4).T < 0)
            for b, a in zip(*np.nonzero(mask)):
                p, r = s1[a], e1[a] - s1[a]
                q, s = s2[b], e2[b] - s2[b]
                denom = r[0] * s[1] - r[1] * s[0]
                t = ((q[0] - p[0]) * s[1] - (q[1] - p[1]) * s[0]) / denom
                x = (float(p[0] + t * r[0]), float(p[1] + t * r[1]))
                if np.min(np.hypot(anchors[:, 0] - x[0], anchors[:, 1] - x[1])) > radius:
                    hits.append(x)
    return tuple(sorted(set(hits)))


def _cross(e, s, pts):
    """Cross product of segment vectors (e - s) with (pts - s)."""
    return (e[:, 0] - s[:, 0]) * (pts[..., 1] - s[:, 1]) - (
        e[:, 1] - s[:, 1]
    ) * (pts[..., 0] - s[:, 0])


# ── SVG ──────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class SvgOptions:
    """gap_width and stroke_width are in layout units; None means auto."""

    gap_width: float | None = None
    stroke_width: float | None = None
    coloring: Mapping[int, int] | None = None
    show_labels: bool = False


def _fmt(v: float) -> str:
    return f"{round(v, 3) + 0.0:.3f}"


def _check_consistency(d: Diagram, layout: Layout) -> None:
    if len(layout.position_of_crossing) != d.crossing_count:
        raise InconsistentLayoutError(
            f"layout has {len(layout.position_of_crossing)} crossing positions, "
            f"diagram has {d.crossing_count}"
        )
    want = set(range(1, d.edge_count + 1))
    if set(layout.edge_routes) != want:
        raise InconsistentLayoutError("layout edge routes do not match edge labels")
    if len(layout.free_loop_routes) != d.free_loops:
        raise InconsistentLayoutError(
            f"layout has {len(layout.free_loop_routes)} free loop routes, "
            f"diagram has {d.free_loops}"
        )
    tol = max(layout.diagonal, 1e-9) * 1e-6
    report = trace(d) if d.crossing_count else None
    for e, route in layout.edge_routes.items():
        if len(route) < 2:
            raise InconsistentLayoutError(f"route of edge {e} is degenerate")
        (tci, _), (hci, _) = report.orientation[e]
        ends = (layout.position_of_crossing[tci], layout.position_of_crossing[hci])
        if (
            math.dist(route[0], ends[0]) > tol
            or math.dist(route[-1], ends[1]) > tol
        ):
            raise InconsistentLayoutError(
                f"route of edge {e} does not meet its crossing endpoints"
            )


def _trim(points: list[Point], amount: float) -> list[Point]:
    """Shorten a polyline by amount from each end, along its length."""
    total = sum(math.dist(a, b) for a, b in zip(points, points[1:]))
    cut = min(amount, 0.3 * total)

    def eat(pts: list[Point]) -> list[Point]:
        left = cut
        while len(pts) > 1:
            step = math.dist(pts[0], pts[1])
            if step > left:
                f = left / step
                head = (
                    pts[0][0] + f * (pts[1][0] - pts[0][0]),
                    pts[0][1] + f * (pts[1][1] - pts[0][1]),
                )
                return [head] + pts[1:]
            left -= step
            pts = pts[1:]
        return pts

    points = eat(points)
    return eat(points[::-1])[::-1]


def _arc_paths(d: Diagram, layout: Layout) -> list[tuple[int, list[Point], bool]]:
    """(arc id, points, closed) per drawn strand, free loops included."""
    report = trace(d)
    arcs = report.arcs
    head_slot = {e: pos[1][1] for e, pos in report.orientation.items()}
    out: list[tuple[int, list[Point], bool]] = []
    for walk in report.components:
        if not walk:
            continue
        breaks = [i for i, e in enumerate(walk) if head_slot[e] == 0]
        if not breaks:
            pts: list[Point] = []
            for e in walk:
                pts.extend(layout.edge_routes[e][1 if pts else 0 :])
            out.append((arcs.arc_of_edge[walk[0]], pts, True))
            continue
        for prev, here in zip(breaks, breaks[1:] + [breaks[0] + len(walk)]):
            run = [walk[k % len(walk)] for k in range(prev + 1, here + 1)]
            pts = []
            for e in run:
                pts.extend(layout.edge_routes[e][1 if pts else 0 :])
            out.append((arcs.arc_of_edge[run[0]], pts, False))
    for arc_id, route in zip(arcs.free_loop_arcs, layout.free_loop_routes):
        out.append((arc_id, list(route), True))
    out.sort(key=lambda item: item[0])
    return out


def to_svg(d: Diagram, layout: Layout, options: SvgOptions = SvgOptions()) -> str:
    """Standalone SVG text for a diagram over its layout.

    One path per arc; the strand passing under is interrupted by a gap
    on both sides of each crossing, so a knot shows exactly one gap per
    crossing.  Output is deterministic text.
    """
    _check_consistency(d, layout)
    diag = max(layout.diagonal, 1e-9)
    gap = options.gap_width if options.gap_width is not None else 0.05 * diag
    stroke = (
        options.stroke_width if options.stroke_width is not None else 0.022 * diag
    )

    paths = []
    labels = []
    gaps = 0
    for arc_id, pts, closed in _arc_paths(d, layout):
        if not closed:
            pts = _trim(pts, gap / 2.0)
            gaps += 1
        body = " L ".join(f"{_fmt(x)} {_fmt(-y)}" for x, y in pts)
        tail = " Z" if closed else ""
        color = _STROKE
        if options.coloring is not None:
            color = _PALETTE[options.coloring[arc_id] % len(_PALETTE)]
        paths.append(
            f'    <path data-arc="{arc_id}" stroke="{color}" d="M {body}{tail}"/>'
        )
        if options.show_labels:
            mx, my = pts[len(pts) // 2]
            labels.append(
                f'    <text x="{_fmt(mx)}" y="{_fmt(-my)}" font-size="{_fmt(0.06 * diag)}"'
                f' fill="{_STROKE}" text-anchor="middle">{arc_id}</text>'
            )
    x0, y0, x1, y1 = layout.bbox
    margin = max(3.0 * stroke, 0.04 * diag)
    view = (
        f"{_fmt(x0 - margin)} {_fmt(-y1 - margin)} "
        f"{_fmt(x1 - x0 + 2 * margin)} {_fmt(y1 - y0 + 2 * margin)}"
    )
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}"'
        f' data-crossings="{d.crossing_count}" data-arcs="{trace(d).arcs.arc_count}"'
        f' data-free-loops="{d.free_loops}" data-gaps="{gaps}">',
        f'  <g fill="none" stroke-width="{_fmt(stroke)}" stroke-linecap="round">',
        *paths,
        "  </g>",
    ]
    if labels:
        lines.extend(['  <g font-family="sans-serif">', *labels, "  </g>"])
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
