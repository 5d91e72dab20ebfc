"""Reidemeister move sites: enumeration and application.

Site loci use the diagram's own identifiers: crossings by index in
emission order, edges by label, face positions by dart (4*crossing +
slot).  Applying a site compacts the surviving labels back to 1..2n
in label order, which keeps every strand's direction intact; that is
what makes writhe-corrected invariants stable along a replayed path.
Full canonical relabeling (diagram.canonical) is reserved for
equality checks and visited-set keys.

Site shapes:

=====  =======  ==================  =====================================
kind   direction  locus             params
=====  =======  ==================  =====================================
R1     reduce   [crossing]          -
R1     grow     [edge] or []        sign {1,-1}, side {left,right}
R2     reduce   [c1, c2]            -
R2     grow     [edge_x, edge_y]    push/across darts, over edge label
R3     slide    [c1, c2, c3]        darts: the triangular face's orbit
=====  =======  ==================  =====================================

R1-grow with an empty locus kinks a crossing-free loop (the one case
where a move consumes a free loop); all four sign/side variants are
listed whenever a free loop exists.
"""

from __future__ import annotations

import json
import random
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from .diagram import (
    Diagram,
    Quad,
    _face_orbits,
    _occurrences,
    _solve_orientation,
    canonical,
    emit_pd,
    validate,
)
from .errors import InvalidSiteError, StructureError

KINDS = ("R1", "R2", "R3")
DIRECTIONS = ("reduce", "grow", "slide")

# crossing-count change per (kind, direction)
DELTA = {
    ("R1", "reduce"): -1,
    ("R1", "grow"): 1,
    ("R2", "reduce"): -2,
    ("R2", "grow"): 2,
    ("R3", "slide"): 0,
}


@dataclass(frozen=True)
class MoveSite:
    kind: str
    direction: str
    locus: tuple[int, ...]
    params: tuple[tuple[str, object], ...] = ()

    @property
    def params_dict(self) -> dict:
        return {
            k: list(v) if isinstance(v, tuple) else v for k, v in self.params
        }

    @cached_property
    def id(self) -> str:
        return json.dumps(self.to_wire(), sort_keys=True, separators=(",", ":"))

    def to_wire(self) -> dict:
        return {
            "kind": self.kind,
            "direction": self.direction,
            "locus": list(self.locus),
            "params": self.params_dict,
        }

    @classmethod
    def from_wire(cls, data) -> "MoveSite":
        try:
            kind = data["kind"]
            direction = data["direction"]
            locus = tuple(int(x) for x in data["locus"])
            params = tuple(
                sorted(
                    (str(k), tuple(v) if isinstance(v, list) else v)
                    for k, v in dict(data.get("params") or {}).items()
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidSiteError(f"malformed move site: {exc}") from exc
        if kind not in KINDS or direction not in DIRECTIONS:
            raise InvalidSiteError(
                f"unknown move {kind}/{direction}", detail=dict(data)
            )
        return cls(kind, direction, locus, params)


def _site(kind: str, direction: str, locus, **params) -> MoveSite:
    return MoveSite(
        kind, direction, tuple(locus), tuple(sorted(params.items()))
    )


# ── enumeration ──────────────────────────────────────────────────────


def _r1_reduce_sites(quads) -> list[MoveSite]:
    sites = []
    for ci, q in enumerate(quads):
        if any(q[s] == q[(s + 1) % 4] for s in range(4)):
            sites.append(_site("R1", "reduce", (ci,)))
    return sites


def _r1_grow_sites(d: Diagram) -> list[MoveSite]:
    sites = []
    for e in d.edges():
        for sign in (1, -1):
            for side in ("left", "right"):
                sites.append(_site("R1", "grow", (e,), sign=sign, side=side))
    if d.free_loops:
        for sign in (1, -1):
            for side in ("left", "right"):
                sites.append(_site("R1", "grow", (), sign=sign, side=side))
    return sites


def _r2_reduce_sites(quads, orbits) -> list[MoveSite]:
    pairs = set()
    for orbit in orbits:
        if len(orbit) != 2:
            continue
        d1, d2 = orbit
        c1, c2 = d1 // 4, d2 // 4
        # coherent bigon: distinct crossings, the same edge over at both
        if c1 != c2 and (d1 - d2) % 2 == 1:
            pairs.add((min(c1, c2), max(c1, c2)))
    return [_site("R2", "reduce", pair) for pair in sorted(pairs)]


def _r2_grow_sites(quads, orbits) -> list[MoveSite]:
    sites = []
    for orbit in orbits:
        for i in range(len(orbit)):
            for j in range(i + 1, len(orbit)):
                dp, da = sorted((orbit[i], orbit[j]))
                ex = quads[dp // 4][dp % 4]
                ey = quads[da // 4][da % 4]
                if ex == ey:
                    continue
                for over in (ex, ey):
                    sites.append(
                        _site(
                            "R2",
                            "grow",
                            (ex, ey),
                            push=dp,
                            across=da,
                            over=over,
                        )
                    )
    return sites


def _r3_sites(quads, orbits) -> list[MoveSite]:
    sites = []
    for orbit in orbits:
        if len(orbit) != 3:
            continue
        crossings = sorted(d // 4 for d in orbit)
        if len(set(crossings)) != 3:
            continue
        # coherent triangle: some boundary edge passes over at both of
        # its corners (equivalently some edge under at both); the
        # remaining cyclic over/under pattern admits no slide
        occ = _occurrences(quads)
        coherent = False
        for dart in orbit:
            e = quads[dart // 4][dart % 4]
            if all(x % 2 == 1 for x in occ[e]):
                coherent = True
                break
        if coherent:
            sites.append(
                _site("R3", "slide", crossings, darts=tuple(sorted(orbit)))
            )
    return sites


def enumerate_sites(
    d: Diagram,
    kinds=None,
    directions=None,
) -> list[MoveSite]:
    """Every applicable move site, in a stable deterministic order."""
    kinds = set(KINDS if kinds is None else kinds)
    directions = set(DIRECTIONS if directions is None else directions)
    quads = d.quads
    orbits = _face_orbits(quads)
    sites: list[MoveSite] = []
    if "R1" in kinds:
        if "reduce" in directions:
            sites.extend(_r1_reduce_sites(quads))
        if "grow" in directions:
            sites.extend(_r1_grow_sites(d))
    if "R2" in kinds:
        if "reduce" in directions:
            sites.extend(_r2_reduce_sites(quads, orbits))
        if "grow" in directions:
            sites.extend(_r2_grow_sites(quads, orbits))
    if "R3" in kinds and "slide" in directions:
        sites.extend(_r3_sites(quads, orbits))
    sites.sort(key=lambda s: (s.kind, s.direction, s.locus, s.id))
    return sites


# ── application ──────────────────────────────────────────────────────


def _fresh_labels(quads, count: int) -> list[int]:
    top = max((e for q in quads for e in q), default=0)
    return [top + 1 + i for i in range(count)]


def _remove_crossings(quads, free_loops: int, removed: set[int]):
    """Delete crossings, splicing their strands through.

    Each removed crossing joins its under pair and its over pair; any
    edge class left with no surviving occurrence closed into a loop.
    """
    parent = {e: e for q in quads for e in q}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ci in sorted(removed):
        q = quads[ci]
        for a, b in ((q[0], q[2]), (q[1], q[3])):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    new_quads = [
        tuple(find(e) for e in q)
        for ci, q in enumerate(quads)
        if ci not in removed
    ]
    surviving = {e for q in new_quads for e in q}
    touched = {find(e) for ci in removed for e in quads[ci]}
    closed = sum(1 for root in touched if root not in surviving)
    return new_quads, free_loops + closed


# quad templates for a new kink; e1 arrives, e2 leaves, l is the loop
_KINK_QUADS = {
    (1, "right"): lambda e1, e2, l: (e1, l, l, e2),
    (1, "left"): lambda e1, e2, l: (l, e1, e2, l),
    (-1, "left"): lambda e1, e2, l: (e1, e2, l, l),
    (-1, "right"): lambda e1, e2, l: (l, l, e2, e1),
}


def _apply_r1_grow(d: Diagram, site: MoveSite):
    params = dict(site.params)
    template = _KINK_QUADS[(params["sign"], params["side"])]
    quads = list(d.quads)
    if not site.locus:
        m, loop = _fresh_labels(quads, 2)
        quads.append(template(m, m, loop))
        return quads, d.free_loops - 1
    e = site.locus[0]
    _, head, _, _ = _solve_orientation(d.quads)
    e2, loop = _fresh_labels(quads, 2)
    hd = head[e]
    q = list(quads[hd // 4])
    q[hd % 4] = e2
    quads[hd // 4] = tuple(q)
    quads.append(template(e, e2, loop))
    return quads, d.free_loops


def _rotate_to(cycle: tuple[int, int, int, int], start: int):
    i = cycle.index(start)
    return tuple(cycle[(i + k) % 4] for k in range(4))


def _apply_r2_grow(d: Diagram, site: MoveSite):
    params = dict(site.params)
    dx, dy, over = params["push"], params["across"], params["over"]
    quads = list(d.quads)
    x = quads[dx // 4][dx % 4]
    y = quads[dy // 4][dy % 4]
    _, head, _, _ = _solve_orientation(d.quads)

    # Walk the shared face from edge x's far end to dx, then on to dy.
    # x splits into p1 (keeps label x), p2, p3 in face-walk order; the
    # walk meets the new crossings as k1 then k2 along x, in the other
    # order along y.  y splits into q1 (keeps y), q2, q3 likewise.
    p2, p3, q2, q3 = _fresh_labels(quads, 4)
    p1, q1 = x, y
    for dart, fresh in ((dx, p3), (dy, q3)):
        q = list(quads[dart // 4])
        q[dart % 4] = fresh
        quads[dart // 4] = tuple(q)

    k1_cycle = (q3, p2, q2, p1)
    k2_cycle = (q2, p2, q1, p3)
    if over == y:
        aligned = head[x] == dx  # x's own direction matches the face walk
        k1 = _rotate_to(k1_cycle, p1 if aligned else p2)
        k2 = _rotate_to(k2_cycle, p2 if aligned else p3)
    else:
        aligned = head[y] == dy
        k1 = _rotate_to(k1_cycle, q2 if aligned else q3)
        k2 = _rotate_to(k2_cycle, q1 if aligned else q2)
    quads.extend([k1, k2])
    return quads, d.free_loops


def _apply_r3(d: Diagram, site: MoveSite):
    darts = dict(site.params)["darts"]
    quads = [list(q) for q in d.quads]
    occ = _occurrences(d.quads)
    _, head, tail, _ = _solve_orientation(d.quads)

    # Each boundary edge m rides a strand s_in -> c_first -> m ->
    # c_second -> s_out.  The slide swaps each strand's two crossings
    # while every crossing keeps its slot pattern, so the rewrite is
    # four in-place label substitutions per strand.
    for dart in darts:
        m = d.quads[dart // 4][dart % 4]
        t_ci, t_s = divmod(tail[m], 4)
        h_ci, h_s = divmod(head[m], 4)
        s_in = d.quads[t_ci][(t_s + 2) % 4]
        s_out = d.quads[h_ci][(h_s + 2) % 4]
        quads[t_ci][(t_s + 2) % 4] = m
        quads[t_ci][t_s] = s_out
        quads[h_ci][h_s] = s_in
        quads[h_ci][(h_s + 2) % 4] = m
    return [tuple(q) for q in quads], d.free_loops


def _apply_raw(d: Diagram, site: MoveSite):
    if site.kind == "R1" and site.direction == "reduce":
        return _remove_crossings(d.quads, d.free_loops, {site.locus[0]})
    if site.kind == "R1" and site.direction == "grow":
        return _apply_r1_grow(d, site)
    if site.kind == "R2" and site.direction == "reduce":
        return _remove_crossings(d.quads, d.free_loops, set(site.locus))
    if site.kind == "R2" and site.direction == "grow":
        return _apply_r2_grow(d, site)
    if site.kind == "R3" and site.direction == "slide":
        return _apply_r3(d, site)
    raise InvalidSiteError(f"unknown move {site.kind}/{site.direction}")


def _compact_labels(quads: list[Quad]) -> list[Quad]:
    """Relabel onto 1..2n keeping label order, so edge directions survive."""
    dense = {e: i for i, e in enumerate(sorted({x for q in quads for x in q}), 1)}
    return [(dense[a], dense[b], dense[c], dense[d]) for a, b, c, d in quads]


def _apply_unchecked(d: Diagram, site: MoveSite) -> Diagram:
    quads, free_loops = _apply_raw(d, site)
    return Diagram.from_quads(_compact_labels(quads), free_loops)


def apply_move(d: Diagram, site: MoveSite) -> Diagram:
    """Apply a site enumerated from (or checked against) this diagram.

    Surviving labels are compacted in order and the result re-validated;
    a site that does not match the diagram raises InvalidSite, which is
    how stale UI state shows up.
    """
    candidates = enumerate_sites(d, kinds=[site.kind], directions=[site.direction])
    if site not in candidates:
        raise InvalidSiteError(
            f"site {site.id} does not apply to this diagram",
            detail={"site": site.to_wire(), "pd": emit_pd(d)},
        )
    result = _apply_unchecked(d, site)
    report = validate(result)
    if not report.ok:
        raise StructureError(
            "move produced an invalid diagram: "
            + "; ".join(f.message for f in report.findings)
        )
    expected = d.crossing_count + DELTA[(site.kind, site.direction)]
    if result.crossing_count != expected:
        raise StructureError("move changed the crossing count incorrectly")
    return result


def inverse_site(before: Diagram, site: MoveSite, after: Diagram) -> MoveSite | None:
    """The site on `after` that undoes `site`, found by enumerate-and-match.

    Candidates are compared up to canonical relabeling: undoing a
    reduce move reissues labels, so raw label equality is too strict.
    """
    inverse_dir = {"grow": "reduce", "reduce": "grow", "slide": "slide"}
    want = emit_pd(canonical(before))
    for cand in enumerate_sites(
        after, kinds=[site.kind], directions=[inverse_dir[site.direction]]
    ):
        if emit_pd(canonical(_apply_unchecked(after, cand))) == want:
            return cand
    return None


def invert_path(
    start: Diagram, path: Sequence[MoveSite], end: Diagram
) -> list[MoveSite]:
    """Moves that replay from `end` back to (a relabeling of) `start`.

    `path` must run from start to a diagram canonically equal to end.
    Each step is undone with inverse_site against the live labels, so
    the result replays through apply_move even though reduce moves
    reissue labels along the way.
    """
    stops = [start]
    for site in path:
        stops.append(apply_move(stops[-1], site))
    inverted: list[MoveSite] = []
    current = end
    for i in range(len(path) - 1, -1, -1):
        inverse = inverse_site(stops[i], path[i], current)
        if inverse is None:
            raise StructureError("path step has no inverse against the live diagram")
        inverted.append(inverse)
        current = _apply_unchecked(current, inverse)
    return inverted


# ── seeded walks ─────────────────────────────────────────────────────


def random_walk(
    d: Diagram,
    n: int,
    seed: int,
    policy: str = "grow_biased",
) -> tuple[Diagram, list[MoveSite]]:
    """n seeded moves from d; deterministic in (d, n, seed, policy).

    grow_biased picks a grow site 70% of the time so scrambles do not
    collapse while they are being built; "any" samples uniformly.
    """
    if policy not in ("any", "grow_biased"):
        raise ValueError(f"unknown policy {policy!r}")
    rng = random.Random(seed)
    path: list[MoveSite] = []
    current = d
    for _ in range(n):
        pool = enumerate_sites(current)
        if policy == "grow_biased" and rng.random() < 0.7:
            grown = [s for s in pool if s.direction == "grow"]
            pool = grown or pool
        site = pool[rng.randrange(len(pool))]
        path.append(site)
        current = _apply_unchecked(current, site)
    return current, path
