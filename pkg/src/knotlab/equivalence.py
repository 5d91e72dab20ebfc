"""Sameness questions at desk scale.

The move graph is infinite, so every search here is bounded and the
answers say so: decide_equivalent returns an explicit "unknown" when
budgets run out, because failing to find a path proves nothing.
Searches deduplicate diagrams by canonically relabeled PD string and
process each frontier in sorted key order, so results are deterministic
for fixed budgets.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .diagram import Diagram, _solve_orientation, trace
from .errors import BudgetExceededError, StructureError
from .invariants import (
    DEFAULT_BRACKET_BUDGET,
    jones_polynomial,
    linking_matrix,
    tricolor_count,
)
from .laurent import LaurentPoly
from .moves import (
    DELTA,
    MoveSite,
    _apply_raw,
    _compact_labels,
    apply_move,
    enumerate_sites,
    invert_path,
)

DEFAULT_MAX_EXTRA = 2
DEFAULT_NODE_BUDGET = 100_000
DEFAULT_CROSSING_CAP = 10


@dataclass(frozen=True)
class SearchStats:
    nodes_expanded: int
    max_crossings_reached: int

    def to_wire(self) -> dict:
        return {
            "nodes_expanded": self.nodes_expanded,
            "max_crossings_reached": self.max_crossings_reached,
        }


@dataclass(frozen=True)
class Verdict:
    """Three-way answer with evidence: a path, an invariant, or neither."""

    outcome: str  # "equivalent" | "distinguished" | "unknown"
    path: tuple[MoveSite, ...] | None
    separating_invariant: dict | None
    search_stats: SearchStats

    def to_wire(self) -> dict:
        sep = None
        if self.separating_invariant is not None:
            sep = {
                "name": self.separating_invariant["name"],
                "value_a": _wire_value(self.separating_invariant["value_a"]),
                "value_b": _wire_value(self.separating_invariant["value_b"]),
            }
        return {
            "outcome": self.outcome,
            "path": None if self.path is None else [s.to_wire() for s in self.path],
            "separating_invariant": sep,
            "search_stats": self.search_stats.to_wire(),
        }


def _wire_value(value):
    if isinstance(value, LaurentPoly):
        return value.to_wire()
    return value


def _canon_key(quads, free_loops: int) -> str:
    """emit_pd(canonical(...)) without building the intermediate Diagram."""
    _, head, _, findings = _solve_orientation(tuple(quads))
    if findings:
        raise StructureError("search reached an invalid diagram")
    canon = _kernels.canonical_quads(list(quads), sorted(head.values()))
    parts = [f"X({q[0]},{q[1]},{q[2]},{q[3]})" for q in canon]
    parts.extend(["O"] * free_loops)
    return " ".join(parts)


def diagram_key(d: Diagram) -> str:
    """Canonical PD string used for visited-set deduplication."""
    return _canon_key(d.quads, d.free_loops)


# ── simplify ─────────────────────────────────────────────────────────


def simplify(
    d: Diagram,
    max_extra_crossings: int = DEFAULT_MAX_EXTRA,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[Diagram, list[MoveSite]]:
    """Fewest-crossing diagram found, with a path that replays to it.

    Greedy reduction runs first (always take the first reducing site);
    breadth-first search then explores every move but discards diagrams
    whose crossing count exceeds the best count seen so far by more than
    max_extra_crossings.  Exhausting node_budget returns the best found,
    so the result is an upper bound on crossing number, not the number.
    """
    path: list[MoveSite] = []
    current = d
    while True:
        reduces = enumerate_sites(current, directions=("reduce",))
        if not reduces:
            break
        path.append(reduces[0])
        current = apply_move(current, reduces[0])

    best, best_path = current, list(path)
    if best.crossing_count == 0 or node_budget <= 0:
        return best, best_path

    start_key = diagram_key(current)
    visited = {start_key}
    frontier: list[tuple[str, Diagram, list[MoveSite]]] = [
        (start_key, current, list(path))
    ]
    expanded = 0
    while frontier and expanded < node_budget:
        grown: list[tuple[str, Diagram, list[MoveSite]]] = []
        for _, node, node_path in frontier:
            if expanded >= node_budget:
                break
            if node.crossing_count > best.crossing_count + max_extra_crossings:
                continue
            expanded += 1
            count = node.crossing_count
            for site in enumerate_sites(node):
                delta = DELTA[(site.kind, site.direction)]
                if count + delta > best.crossing_count + max_extra_crossings:
                    continue
                quads, loops = _apply_raw(node, site)
                quads = _compact_labels(quads)
                key = _canon_key(quads, loops)
                if key in visited:
                    continue
                visited.add(key)
                child = Diagram.from_quads(quads, loops)
                child_path = node_path + [site]
                grown.append((key, child, child_path))
                if child.crossing_count < best.crossing_count:
                    best, best_path = child, child_path
                    if best.crossing_count == 0:
                        return best, best_path
        grown.sort(key=lambda item: item[0])
        frontier = grown
    return best, best_path


# ── distinguish ──────────────────────────────────────────────────────


def distinguish(
    a: Diagram,
    b: Diagram,
    bracket_budget: int = DEFAULT_BRACKET_BUDGET,
) -> dict | None:
    """First invariant that tells the diagrams apart, cheapest first.

    Order: component count, tricolor count, linking-number multiset
    (links only), Jones polynomial.  The Jones check is skipped when
    either diagram is over the bracket budget; a skipped check cannot
    distinguish, so the answer stays None.
    """
    comp_a = trace(a).component_count
    comp_b = trace(b).component_count
    if comp_a != comp_b:
        return {"name": "component_count", "value_a": comp_a, "value_b": comp_b}
    tri_a = tricolor_count(a).count
    tri_b = tricolor_count(b).count
    if tri_a != tri_b:
        return {"name": "tricolor_count", "value_a": tri_a, "value_b": tri_b}
    if comp_a > 1:
        lk_a = sorted(linking_matrix(a).values())
        lk_b = sorted(linking_matrix(b).values())
        if lk_a != lk_b:
            return {"name": "linking_multiset", "value_a": lk_a, "value_b": lk_b}
    try:
        jones_a = jones_polynomial(a, bracket_budget)
        jones_b = jones_polynomial(b, bracket_budget)
    except BudgetExceededError:
        return None
    if jones_a != jones_b:
        return {"name": "jones_polynomial", "value_a": jones_a, "value_b": jones_b}
    return None


# ── decide ───────────────────────────────────────────────────────────


def decide_equivalent(
    a: Diagram,
    b: Diagram,
    crossing_cap: int = DEFAULT_CROSSING_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
    bracket_budget: int = DEFAULT_BRACKET_BUDGET,
) -> Verdict:
    """Distinguish by invariants, else search for an explicit move path.

    The search is bidirectional breadth-first over canonically relabeled
    diagrams, never generating more than crossing_cap crossings, and is
    one-sided: "unknown" means budgets ran out, not "different".
    """
    separating = distinguish(a, b, bracket_budget=bracket_budget)
    if separating is not None:
        return Verdict("distinguished", None, separating, SearchStats(0, 0))

    key_a = diagram_key(a)
    key_b = diagram_key(b)
    max_seen = max(a.crossing_count, b.crossing_count)
    if key_a == key_b:
        return Verdict("equivalent", (), None, SearchStats(0, max_seen))

    seen: dict[str, dict[str, tuple[Diagram, list[MoveSite]]]] = {
        "a": {key_a: (a, [])},
        "b": {key_b: (b, [])},
    }
    frontier: dict[str, list[tuple[str, Diagram, list[MoveSite]]]] = {
        "a": [(key_a, a, [])],
        "b": [(key_b, b, [])],
    }
    expanded = 0
    meets: list[str] = []
    while (frontier["a"] or frontier["b"]) and expanded < node_budget and not meets:
        # expand the smaller frontier: meet-in-the-middle stays balanced
        if not frontier["b"]:
            side = "a"
        elif not frontier["a"]:
            side = "b"
        else:
            side = "a" if len(frontier["a"]) <= len(frontier["b"]) else "b"
        other = "b" if side == "a" else "a"
        grown: list[tuple[str, Diagram, list[MoveSite]]] = []
        for _, node, node_path in frontier[side]:
            if expanded >= node_budget:
                break
            expanded += 1
            count = node.crossing_count
            for site in enumerate_sites(node):
                if count + DELTA[(site.kind, site.direction)] > crossing_cap:
                    continue
                quads, loops = _apply_raw(node, site)
                quads = _compact_labels(quads)
                key = _canon_key(quads, loops)
                if key in seen[side]:
                    continue
                child = Diagram.from_quads(quads, loops)
                max_seen = max(max_seen, child.crossing_count)
                child_path = node_path + [site]
                seen[side][key] = (child, child_path)
                grown.append((key, child, child_path))
                if key in seen[other]:
                    meets.append(key)
        grown.sort(key=lambda item: item[0])
        frontier[side] = grown

    stats = SearchStats(expanded, max_seen)
    if meets:
        meet_key = min(meets)
        meet_diagram, path_a = seen["a"][meet_key]
        _, path_b = seen["b"][meet_key]
        tail = invert_path(b, path_b, meet_diagram)
        return Verdict("equivalent", tuple(path_a + tail), None, stats)
    return Verdict("unknown", None, None, stats)
