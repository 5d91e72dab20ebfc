"""Activity logic: scramble puzzles, coloring feedback, play sessions.

Puzzles are scrambled catalog entries that carry their own solution
(the scramble walk inverted step by step), so solvability is a
construction fact checked at generation, not a hope.  Sessions are
immutable snapshots: playing a move returns a new session, and the
completion flag is recomputed from the target every time, so moves can
un-solve a puzzle.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from pathlib import Path

from .catalog import catalog_get
from .diagram import Diagram, canonical, emit_pd, parse_pd, trace
from .errors import (
    BudgetExceededError,
    IncompleteColoringError,
    StructureError,
)
from .moves import MoveSite, apply_move, invert_path, random_walk

# ── puzzles ──────────────────────────────────────────────────────────


@dataclass(frozen=True)
class Puzzle:
    id: str
    start: Diagram
    target_crossings: int
    solution_path: tuple[MoveSite, ...]
    seed: int
    move_budget: int | None = None
    target_diagram: Diagram | None = None

    def target_met(self, d: Diagram) -> bool:
        """Crossing-count target by default; exact diagram when one is set."""
        if self.target_diagram is not None:
            return emit_pd(canonical(d)) == emit_pd(canonical(self.target_diagram))
        return d.crossing_count <= self.target_crossings

    def to_wire(self, include_solution: bool = True) -> dict:
        wire = {
            "id": self.id,
            "start": emit_pd(self.start),
            "target_crossings": self.target_crossings,
            "seed": self.seed,
            "move_budget": self.move_budget,
            "target_diagram": (
                None if self.target_diagram is None else emit_pd(self.target_diagram)
            ),
            "par": len(self.solution_path),
        }
        if include_solution:
            wire["solution_path"] = [s.to_wire() for s in self.solution_path]
        return wire

    @classmethod
    def from_wire(cls, data: Mapping) -> "Puzzle":
        target = data.get("target_diagram")
        return cls(
            id=str(data["id"]),
            start=parse_pd(data["start"]),
            target_crossings=int(data["target_crossings"]),
            solution_path=tuple(
                MoveSite.from_wire(s) for s in data["solution_path"]
            ),
            seed=int(data["seed"]),
            move_budget=(
                None if data.get("move_budget") is None else int(data["move_budget"])
            ),
            target_diagram=None if target is None else parse_pd(target),
        )


def make_puzzle(
    base: str,
    n_scramble: int,
    seed: int,
    move_budget: int | None = None,
) -> Puzzle:
    """Scramble a catalog entry into a puzzle with a known solution.

    The solution inverts the scramble walk step by step against live
    labels, so it replays from the scrambled start; that replay is
    checked before the puzzle is returned.
    """
    entry = catalog_get(base)
    if n_scramble < 0:
        raise ValueError("n_scramble must be >= 0")
    start, walk = random_walk(entry.diagram, n_scramble, seed=seed)
    solution = tuple(invert_path(entry.diagram, walk, start))
    puzzle = Puzzle(
        id=f"{base}-n{n_scramble}-seed{seed}",
        start=start,
        target_crossings=entry.diagram.crossing_count,
        solution_path=solution,
        seed=seed,
        move_budget=move_budget,
    )
    current = start
    for site in solution:
        current = apply_move(current, site)
    if not puzzle.target_met(current):
        raise StructureError("generated puzzle solution misses its target")
    return puzzle


def save_puzzle(puzzle: Puzzle, path) -> None:
    """Write a puzzle file (solution included) for classroom hand-out."""
    Path(path).write_text(
        json.dumps(puzzle.to_wire(), indent=2, sort_keys=True) + "\n"
    )


def load_puzzle(path) -> Puzzle:
    return Puzzle.from_wire(json.loads(Path(path).read_text()))


# ── coloring feedback ────────────────────────────────────────────────


@dataclass(frozen=True)
class ColoringFeedback:
    valid: bool
    monochromatic: bool
    violations: tuple[int, ...]  # crossings where exactly two colors meet

    def to_wire(self) -> dict:
        return {
            "valid": self.valid,
            "monochromatic": self.monochromatic,
            "violations": list(self.violations),
        }


def check_coloring(d: Diagram, coloring: Mapping[int, int]) -> ColoringFeedback:
    """Per-crossing feedback on an arc coloring.

    A crossing is fine when it sees one color or all three; seeing
    exactly two is the violation players need pointed out.  A coloring
    in a single color is rule-valid but flagged monochromatic.  Every
    arc must be colored.
    """
    arcs = trace(d).arcs
    missing = [a for a in range(arcs.arc_count) if a not in coloring]
    if missing:
        raise IncompleteColoringError(
            f"{len(missing)} arcs uncolored",
            detail={"missing_arcs": missing},
        )
    violations = []
    for ci, q in enumerate(d.quads):
        seen = {
            coloring[arcs.arc_of_edge[q[1]]],  # over strand
            coloring[arcs.arc_of_edge[q[0]]],  # under, incoming
            coloring[arcs.arc_of_edge[q[2]]],  # under, outgoing
        }
        if len(seen) == 2:
            violations.append(ci)
    used = {coloring[a] for a in range(arcs.arc_count)}
    return ColoringFeedback(
        valid=not violations,
        monochromatic=len(used) == 1,
        violations=tuple(violations),
    )


# ── sessions ─────────────────────────────────────────────────────────


def _now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


@dataclass(frozen=True)
class Session:
    session_id: str
    puzzle: Puzzle
    current: Diagram
    history: tuple[MoveSite, ...]
    completed: bool
    created_at: str
    updated_at: str

    @property
    def moves_used(self) -> int:
        return len(self.history)

    def to_wire(self, include_solution: bool = True) -> dict:
        return {
            "session_id": self.session_id,
            "puzzle": self.puzzle.to_wire(include_solution=include_solution),
            "current": emit_pd(self.current),
            "history": [s.to_wire() for s in self.history],
            "move_count": self.moves_used,
            "completed": self.completed,
            "created_at": self.created_at,
            "updated_at": self.updated_at,
        }

    @classmethod
    def from_wire(cls, data: Mapping) -> "Session":
        puzzle = Puzzle.from_wire(data["puzzle"])
        history = tuple(MoveSite.from_wire(s) for s in data["history"])
        current = puzzle.start
        for site in history:
            current = apply_move(current, site)
        if emit_pd(current) != data["current"]:
            raise StructureError(
                "session file is inconsistent: history does not replay to current"
            )
        return cls(
            session_id=str(data["session_id"]),
            puzzle=puzzle,
            current=current,
            history=history,
            completed=puzzle.target_met(current),
            created_at=str(data["created_at"]),
            updated_at=str(data["updated_at"]),
        )


def new_session(puzzle: Puzzle, now: str | None = None) -> Session:
    stamp = now or _now()
    return Session(
        session_id=puzzle.id,
        puzzle=puzzle,
        current=puzzle.start,
        history=(),
        completed=puzzle.target_met(puzzle.start),
        created_at=stamp,
        updated_at=stamp,
    )


def play_move(s: Session, site: MoveSite, now: str | None = None) -> Session:
    """One move against the session's current diagram.

    History grows, completion is recomputed (not latched), and budgeted
    sessions refuse moves once the budget is used.  A site that no
    longer matches the diagram raises InvalidSite, which is how a stale
    client finds out.
    """
    budget = s.puzzle.move_budget
    if budget is not None and len(s.history) >= budget:
        raise BudgetExceededError(
            f"move budget {budget} used up",
            detail={"moves_used": len(s.history), "move_budget": budget},
        )
    current = apply_move(s.current, site)
    return replace(
        s,
        current=current,
        history=s.history + (site,),
        completed=s.puzzle.target_met(current),
        updated_at=now or _now(),
    )


def reset_session(s: Session, now: str | None = None) -> Session:
    """Back to the puzzle start with an empty history."""
    return replace(
        s,
        current=s.puzzle.start,
        history=(),
        completed=s.puzzle.target_met(s.puzzle.start),
        updated_at=now or _now(),
    )


def score(s: Session) -> dict:
    """Solved flag, moves used, and par (the hidden solution's length)."""
    return {
        "solved": s.completed,
        "moves_used": s.moves_used,
        "par": len(s.puzzle.solution_path),
    }


def save_session(s: Session, path) -> None:
    Path(path).write_text(json.dumps(s.to_wire(), indent=2, sort_keys=True) + "\n")


def load_session(path) -> Session:
    return Session.from_wire(json.loads(Path(path).read_text()))
