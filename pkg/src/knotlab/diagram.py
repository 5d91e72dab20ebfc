"""Planar diagram codes for classical knots and links.

A diagram is a set of crossings plus a count of crossing-free loops.
Each crossing is a quad of edge labels listed counterclockwise starting
at the incoming under-edge, so the under-strand runs quad[0] -> quad[2]
and the over-strand occupies quad[1] and quad[3].  Which of those two
is the incoming over-edge is not stored; it is recovered from global
orientation consistency (every label appears exactly once as incoming
and once as outgoing).

Text form::

    diagram := item (WS item)*  |  ""
    item    := "O"  |  "X(" n "," n "," n "," n ")"

Labels must form the exact set 1..2*crossings, each appearing twice.
Canonical emission sorts crossings ascending by minimum label (ties by
quad), single-space separated, with free loops as trailing "O" tokens.

Validity further requires a consistent global orientation and, per
connected piece of the 4-valent graph, V - E + F = 2 for the faces
traced from the rotation system.  The Euler check is what rejects
virtual (non-planar) codes such as "X(1,2,1,2)".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import PDSyntaxError, StructureError

Quad = tuple[int, int, int, int]

# ── value types ──────────────────────────────────────────────────────


@dataclass(frozen=True, order=True)
class Crossing:
    """One crossing: quad of edge labels, CCW from the incoming under-edge."""

    quad: Quad

    def __getitem__(self, i: int) -> int:
        return self.quad[i % 4]

    @property
    def min_label(self) -> int:
        return min(self.quad)

    @property
    def under(self) -> tuple[int, int]:
        return (self.quad[0], self.quad[2])

    @property
    def over(self) -> tuple[int, int]:
        # unordered; direction comes from the global orientation
        return (self.quad[1], self.quad[3])


@dataclass(frozen=True)
class Diagram:
    """Immutable diagram value. Crossings are kept in emission order."""

    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        ordered = tuple(
            sorted(self.crossings, key=lambda c: (c.min_label, c.quad))
        )
        object.__setattr__(self, "crossings", ordered)

    @staticmethod
    def from_quads(quads: Iterable[Sequence[int]], free_loops: int = 0) -> "Diagram":
        return Diagram(tuple(Crossing(tuple(q)) for q in quads), free_loops)

    @cached_property
    def quads(self) -> tuple[Quad, ...]:
        return tuple(c.quad for c in self.crossings)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    def edges(self) -> range:
        return range(1, self.edge_count + 1)


@dataclass(frozen=True)
class Finding:
    """One validation problem. code is DOUBLE_USE, ORIENTATION, or EULER."""

    code: str
    message: str
    labels: tuple[int, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.findings


@dataclass(frozen=True)
class ArcMap:
    """Arcs are maximal strand runs cut only at under-passages."""

    arc_of_edge: Mapping[int, int]
    arc_count: int
    free_loop_arcs: tuple[int, ...] = ()


@dataclass(frozen=True)
class TraceReport:
    components: tuple[tuple[int, ...], ...]  # edge labels in walk order; () per free loop
    orientation: Mapping[int, tuple[tuple[int, int], tuple[int, int]]]
    faces: int
    arcs: ArcMap

    @property
    def component_count(self) -> int:
        return len(self.components)


# ── text form ────────────────────────────────────────────────────────

_WS = " \t\r\n"


def _scan(text: str) -> tuple[list[Quad], int]:
    """Tokenize PD text into (quads, free_loops). Raises PDSyntaxError."""
    quads: list[Quad] = []
    loops = 0
    i, n = 0, len(text)

    def skip_ws(j: int) -> int:
        while j < n and text[j] in _WS:
            j += 1
        return j

    def read_int(j: int) -> tuple[int, int]:
        k = j
        while k < n and text[k].isdigit():
            k += 1
        if k == j:
            raise PDSyntaxError("expected a label", j)
        val = int(text[j:k])
        if val < 1:
            raise PDSyntaxError("labels start at 1", j)
        return val, k

    i = skip_ws(i)
    while i < n:
        ch = text[i]
        if ch == "O":
            loops += 1
            i += 1
        elif ch == "X":
            if i + 1 >= n or text[i + 1] != "(":
                raise PDSyntaxError("expected '(' after 'X'", i + 1)
            j = i + 2
            labels = []
            for pos in range(4):
                val, j = read_int(j)
                labels.append(val)
                want = "," if pos < 3 else ")"
                if j >= n or text[j] != want:
                    raise PDSyntaxError(f"expected '{want}'", j)
                j += 1
            quads.append(tuple(labels))
            i = j
        else:
            raise PDSyntaxError("expected 'O' or 'X('", i)
        if i < n and text[i] not in _WS:
            raise PDSyntaxError("expected whitespace between items", i)
        i = skip_ws(i)
    return quads, loops


def emit_pd(d: Diagram) -> str:
    """Canonical text: crossings by (min label, quad), then free loops."""
    parts = [f"X({q[0]},{q[1]},{q[2]},{q[3]})" for q in d.quads]
    parts.extend(["O"] * d.free_loops)
    return " ".join(parts)


# ── structural checks ────────────────────────────────────────────────


def _label_findings(quads: Sequence[Quad]) -> list[Finding]:
    counts: dict[int, int] = {}
    for q in quads:
        for e in q:
            counts[e] = counts.get(e, 0) + 1
    expected = set(range(1, 2 * len(quads) + 1))
    bad = sorted(
        e for e in (set(counts) | expected) if counts.get(e, 0) != 2
    )
    if not bad:
        return []
    msg = "labels must form the set 1..%d with each used exactly twice" % (
        2 * len(quads)
    )
    return [Finding("DOUBLE_USE", msg, tuple(bad))]


def _occurrences(quads: Sequence[Quad]) -> dict[int, list[int]]:
    """Edge label -> its two darts. Dart encoding: 4*crossing + slot."""
    occ: dict[int, list[int]] = {}
    for ci, q in enumerate(quads):
        for s, e in enumerate(q):
            occ.setdefault(e, []).append(4 * ci + s)
    return occ


def _alpha(quads: Sequence[Quad]) -> list[int]:
    """Involution pairing each dart with the other end of its edge."""
    occ = _occurrences(quads)
    alpha = [0] * (4 * len(quads))
    for darts in occ.values():
        a, b = darts
        alpha[a], alpha[b] = b, a
    return alpha


def _solve_orientation(quads: Sequence[Quad]):
    """Assign over-strand directions consistently.

    Returns (over_in_b, head, tail, findings): over_in_b[ci] is True when
    the over-strand enters at slot 1; head/tail map each edge label to
    the dart where it arrives/departs.  Free choices (components that
    only pass over) default to True at their lowest-index crossing.

    Results are cached; callers must treat them as read-only.
    """
    return _solve_orientation_cached(tuple(map(tuple, quads)))


@lru_cache(maxsize=4096)
def _solve_orientation_cached(quads: tuple[Quad, ...]):
    n = len(quads)
    occ = _occurrences(quads)
    over_in_b: list[bool | None] = [None] * n
    findings: list[Finding] = []

    # is_in(dart) as (constant, None) or (crossing, flag meaning x or not-x)
    def role(dart: int):
        s = dart % 4
        if s == 0:
            return True, None
        if s == 2:
            return False, None
        return (dart // 4), (s == 1)

    # parity constraints between crossing variables
    adj: dict[int, list[tuple[int, bool, int]]] = {}
    forced: list[tuple[int, bool, int]] = []
    for e, (d1, d2) in sorted(occ.items()):
        r1, r2 = role(d1), role(d2)
        if r1[1] is None and r2[1] is None:
            if r1[0] == r2[0]:
                findings.append(
                    Finding("ORIENTATION", f"edge {e} has no consistent direction", (e,))
                )
        elif r1[1] is None or r2[1] is None:
            const, var = (r1, r2) if r1[1] is None else (r2, r1)
            # IN(var) must equal (not const): x == (not const) xor (not flag)
            want = (not const[0]) == var[1]
            forced.append((var[0], want, e))
        else:
            c1, f1 = r1
            c2, f2 = r2
            # IN1 != IN2  <=>  (x1 == f1) != (x2 == f2)
            parity = f1 == f2  # True when x1 != x2 required
            if c1 == c2:
                if parity:
                    findings.append(
                        Finding("ORIENTATION", f"edge {e} has no consistent direction", (e,))
                    )
            else:
                adj.setdefault(c1, []).append((c2, parity, e))
                adj.setdefault(c2, []).append((c1, parity, e))

    def propagate(ci: int):
        stack = [ci]
        while stack:
            c = stack.pop()
            for other, parity, e in adj.get(c, ()):
                want = (not over_in_b[c]) if parity else over_in_b[c]
                if over_in_b[other] is None:
                    over_in_b[other] = want
                    stack.append(other)
                elif over_in_b[other] != want:
                    findings.append(
                        Finding(
                            "ORIENTATION",
                            f"edge {e} has no consistent direction",
                            (e,),
                        )
                    )

    for ci, val, e in forced:
        if over_in_b[ci] is None:
            over_in_b[ci] = val
            propagate(ci)
        elif over_in_b[ci] != val:
            findings.append(
                Finding("ORIENTATION", f"edge {e} has no consistent direction", (e,))
            )
    for ci in range(n):
        if over_in_b[ci] is None:
            over_in_b[ci] = True
            propagate(ci)

    head: dict[int, int] = {}
    tail: dict[int, int] = {}
    if not findings:
        for e, darts in occ.items():
            for d in darts:
                s = d % 4
                is_in = (
                    s == 0
                    or (s == 1 and over_in_b[d // 4])
                    or (s == 3 and not over_in_b[d // 4])
                )
                if is_in:
                    head[e] = d
                else:
                    tail[e] = d
    return [bool(v) for v in over_in_b], head, tail, findings


def _face_orbits(quads: Sequence[Quad]) -> list[list[int]]:
    """Faces as dart orbits of d -> alpha(ccw_next(d)).

    With this convention a monogon's single dart lies on the kink loop
    edge itself: the orbit {d} at slot s forces quad[s] == quad[s+1].
    """
    alpha = _alpha(quads)
    total = 4 * len(quads)
    seen = [False] * total
    orbits: list[list[int]] = []
    for start in range(total):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = alpha[d - d % 4 + (d + 1) % 4]
        orbits.append(orbit)
    return orbits


def _pieces(quads: Sequence[Quad]) -> list[list[int]]:
    """Connected pieces of the 4-valent graph, as lists of crossing indices."""
    n = len(quads)
    occ = _occurrences(quads)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for darts in occ.values():
        a, b = find(darts[0] // 4), find(darts[1] // 4)
        if a != b:
            parent[a] = b
    groups: dict[int, list[int]] = {}
    for ci in range(n):
        groups.setdefault(find(ci), []).append(ci)
    return sorted(groups.values())


def _euler_findings(quads: Sequence[Quad]) -> list[Finding]:
    if not quads:
        return []
    orbits = _face_orbits(quads)
    face_of_piece: dict[int, int] = {}
    piece_of_crossing: dict[int, int] = {}
    pieces = _pieces(quads)
    for pi, members in enumerate(pieces):
        for ci in members:
            piece_of_crossing[ci] = pi
    for orbit in orbits:
        pi = piece_of_crossing[orbit[0] // 4]
        face_of_piece[pi] = face_of_piece.get(pi, 0) + 1
    findings = []
    for pi, members in enumerate(pieces):
        v = len(members)
        e = 2 * v
        f = face_of_piece.get(pi, 0)
        if v - e + f != 2:
            findings.append(
                Finding(
                    "EULER",
                    f"piece with crossings {members} traces {f} faces, "
                    f"needs {e - v + 2}; not realizable in the plane",
                    tuple(min(quads[ci]) for ci in members),
                )
            )
    return findings


def structural_findings(quads: Sequence[Quad], free_loops: int = 0) -> list[Finding]:
    findings = _label_findings(quads)
    if findings:
        return findings
    _, _, _, orient = _solve_orientation(quads)
    findings.extend(orient)
    findings.extend(_euler_findings(quads))
    return findings


def validate(d: Diagram) -> ValidationReport:
    """Report every invariant violation; empty findings means valid."""
    return ValidationReport(tuple(structural_findings(d.quads, d.free_loops)))


def validate_text(text: str) -> ValidationReport:
    """Grammar errors still raise; structural problems come back as findings."""
    quads, loops = _scan(text)
    return ValidationReport(tuple(structural_findings(quads, loops)))


def parse_pd(text: str) -> Diagram:
    """Parse and fully validate PD text.

    Raises PDSyntaxError (with byte offset) for grammar problems and
    StructureError (with findings detail) for label, orientation, or
    planarity violations.
    """
    quads, loops = _scan(text)
    findings = structural_findings(quads, loops)
    if findings:
        raise StructureError(
            "; ".join(f"{f.code}: {f.message}" for f in findings),
            detail={"findings": [f.__dict__ for f in findings]},
        )
    return Diagram.from_quads(quads, loops)


# ── tracing ──────────────────────────────────────────────────────────


def _walk_component(quads, alpha, head, start_edge: int) -> list[int]:
    """Edges along the strand from start_edge, following orientation."""
    edges = [start_edge]
    dart = head[start_edge]
    while True:
        nxt_slot = 4 * (dart // 4) + (dart + 2) % 4
        e = quads[dart // 4][nxt_slot % 4]
        if e == start_edge:
            return edges
        edges.append(e)
        dart = alpha[nxt_slot]


def trace(d: Diagram) -> TraceReport:
    """Components, edge orientation, face count, and arcs of a valid diagram."""
    quads = d.quads
    over_in_b, head, tail, findings = _solve_orientation(quads)
    if findings:
        raise StructureError("trace requires a valid diagram")
    alpha = _alpha(quads)

    components: list[tuple[int, ...]] = []
    seen: set[int] = set()
    for e in range(1, d.edge_count + 1):
        if e in seen:
            continue
        comp = _walk_component(quads, alpha, head, e)
        seen.update(comp)
        components.append(tuple(comp))
    components.sort(key=lambda c: c[0])
    components.extend(() for _ in range(d.free_loops))

    orientation = {
        e: (divmod(tail[e], 4), divmod(head[e], 4)) for e in range(1, d.edge_count + 1)
    }

    faces = sum(1 for _ in _face_orbits(quads)) + 2 * d.free_loops

    # arcs: union edges joined by an over-passage
    parent: dict[int, int] = {e: e for e in range(1, d.edge_count + 1)}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for q in quads:
        a, b = find(q[1]), find(q[3])
        if a != b:
            parent[a] = b
    classes: dict[int, list[int]] = {}
    for e in parent:
        classes.setdefault(find(e), []).append(e)
    arc_of_edge: dict[int, int] = {}
    for i, cls in enumerate(sorted(classes.values(), key=min)):
        for e in cls:
            arc_of_edge[e] = i
    base = len(classes)
    free_arcs = tuple(range(base, base + d.free_loops))
    arcs = ArcMap(arc_of_edge, base + d.free_loops, free_arcs)
    return TraceReport(tuple(components), orientation, faces, arcs)


# ── derived transforms ───────────────────────────────────────────────


def mirror(d: Diagram) -> Diagram:
    """Flip every crossing (reflect through the projection plane)."""
    over_in_b, _, _, findings = _solve_orientation(d.quads)
    if findings:
        raise StructureError("mirror requires a valid diagram")
    flipped = []
    for q, in_b in zip(d.quads, over_in_b):
        rot = 1 if in_b else 3
        flipped.append(tuple(q[(rot + i) % 4] for i in range(4)))
    return Diagram.from_quads(flipped, d.free_loops)


def canonical(d: Diagram) -> Diagram:
    """Minimal relabeling over per-component start edges and component order.

    Walks follow the strand directions, so a component traversed backwards
    is not identified with its reverse.  Requires a consistent orientation.
    """
    from . import _kernels

    _, head, _, findings = _solve_orientation(d.quads)
    if findings:
        raise StructureError("canonical requires a valid diagram")
    arrivals = sorted(head.values())
    return Diagram.from_quads(_kernels.canonical_quads(d.quads, arrivals), d.free_loops)


def gauss_code(d: Diagram) -> str:
    """Signed extended Gauss code, for display only."""
    from .invariants import crossing_signs

    quads = d.quads
    _, head, _, findings = _solve_orientation(quads)
    if findings:
        raise StructureError("gauss_code requires a valid diagram")
    signs = crossing_signs(d)
    alpha = _alpha(quads)
    tokens_per_comp: list[str] = []
    seen: set[int] = set()
    for e in range(1, d.edge_count + 1):
        if e in seen:
            continue
        comp = _walk_component(quads, alpha, head, e)
        seen.update(comp)
        tokens = []
        for edge in comp:
            dart = head[edge]
            ci, s = divmod(dart, 4)
            over = s in (1, 3)
            tokens.append(
                f"{'O' if over else 'U'}{ci + 1}{'+' if signs[ci] > 0 else '-'}"
            )
        tokens_per_comp.append(" ".join(tokens))
    tokens_per_comp.extend("o" for _ in range(d.free_loops))
    return " | ".join(tokens_per_comp)
