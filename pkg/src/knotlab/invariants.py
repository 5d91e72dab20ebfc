"""Diagram invariants: signs and writhe, tricoloring, linking numbers,
Kauffman bracket, Jones polynomial.

Sign convention: a crossing is +1 when its over-strand enters at quad
slot 1 (runs quad[1] -> quad[3]) and -1 when it enters at slot 3.  The
same convention feeds writhe, linking numbers, and the Jones writhe
correction, so the catalog trefoil has writhe +3 and the catalog Hopf
link has linking number +1.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .diagram import Diagram, _solve_orientation, trace
from .errors import BadComponentError, BudgetExceededError, StructureError
from .laurent import LaurentPoly

DEFAULT_BRACKET_BUDGET = 20

# delta: the bracket value of one extra disjoint loop, -A^2 - A^(-2)
_DELTA = LaurentPoly.a_power(2, -1) + LaurentPoly.a_power(-2, -1)


# ── signs and writhe ─────────────────────────────────────────────────


@dataclass(frozen=True)
class SignData:
    sign_of_crossing: tuple[int, ...]
    writhe: int


def crossing_signs(d: Diagram) -> tuple[int, ...]:
    """Sign of each crossing, indexed in emission order."""
    over_in_b, _, _, findings = _solve_orientation(d.quads)
    if findings:
        raise StructureError("signs require a valid diagram")
    return tuple(1 if in_b else -1 for in_b in over_in_b)


def signs_and_writhe(d: Diagram) -> SignData:
    signs = crossing_signs(d)
    return SignData(signs, sum(signs))


# ── tricoloring ──────────────────────────────────────────────────────


@dataclass(frozen=True)
class TricolorReport:
    count: int
    tricolorable: bool
    witness: dict[int, int] | None


def _nullspace_mod3(rows: list[list[int]], width: int) -> list[list[int]]:
    """Basis of the mod-3 solution space of rows . x = 0."""
    mat = [row[:] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 if mat[r][c] == 1 else 2  # inverse of the pivot mod 3
        mat[r] = [(x * inv) % 3 for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % 3 for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * width
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-mat[i][fc]) % 3
        basis.append(v)
    return basis


def tricolor_count(d: Diagram) -> TricolorReport:
    """Count arc colorings where every crossing sees one or all three
    colors (2*over = under_in + under_out mod 3), via the mod-3
    nullspace; tricolorable means some coloring uses at least two
    colors, which is exactly count > 3."""
    report = trace(d)
    arcs = report.arcs
    width = arcs.arc_count
    rows = []
    for q in d.quads:
        row = [0] * width
        row[arcs.arc_of_edge[q[1]]] += 2
        row[arcs.arc_of_edge[q[0]]] -= 1
        row[arcs.arc_of_edge[q[2]]] -= 1
        rows.append([x % 3 for x in row])
    basis = _nullspace_mod3(rows, width)
    count = 3 ** len(basis)
    tricolorable = count > 3
    witness = None
    if tricolorable:
        vec = next(v for v in basis if len(set(v)) > 1)
        witness = {arc: vec[arc] for arc in range(width)}
    return TricolorReport(count, tricolorable, witness)


# ── linking numbers ──────────────────────────────────────────────────


def linking_number(d: Diagram, comp_a: int, comp_b: int) -> int:
    """Half the signed count of crossings between two components."""
    components = trace(d).components
    for comp in (comp_a, comp_b):
        if not 0 <= comp < len(components):
            raise BadComponentError(
                f"no component {comp}; diagram has {len(components)}"
            )
    if comp_a == comp_b:
        raise BadComponentError("linking number needs two distinct components")
    comp_of = {
        e: i for i, edges in enumerate(components) for e in edges
    }
    signs = crossing_signs(d)
    total = 0
    want = {comp_a, comp_b}
    for ci, q in enumerate(d.quads):
        if {comp_of[q[0]], comp_of[q[1]]} == want:
            total += signs[ci]
    return total // 2


def linking_matrix(d: Diagram) -> dict[tuple[int, int], int]:
    """Linking number for every unordered component pair."""
    count = trace(d).component_count
    return {
        (a, b): linking_number(d, a, b)
        for a in range(count)
        for b in range(a + 1, count)
    }


# ── bracket and Jones ────────────────────────────────────────────────


def kauffman_bracket(
    d: Diagram, budget: int = DEFAULT_BRACKET_BUDGET
) -> LaurentPoly:
    """State sum over all 2^n smoothings.

    A state with a A-smoothings, b B-smoothings, and s loops contributes
    A^(a-b) * delta^(s-1), delta = -A^2 - A^(-2); a single crossing-free
    loop has bracket 1.
    """
    n = d.crossing_count
    if n > budget:
        raise BudgetExceededError(
            f"bracket needs 2^{n} states but the budget is {budget} "
            "crossings; simplify first",
            detail={"crossings": n, "budget": budget},
        )
    if n == 0 and d.free_loops == 0:
        return LaurentPoly.one("A")
    counts = _kernels.state_loop_counts(d.quads)
    delta_powers = [LaurentPoly.one("A")]
    for _ in range(2 * n + d.free_loops):
        delta_powers.append(delta_powers[-1] * _DELTA)
    total = LaurentPoly.zero("A")
    if n == 0:
        return delta_powers[d.free_loops - 1]
    for a in range(n + 1):
        for loops, count in enumerate(counts[a]):
            if count:
                term = LaurentPoly.a_power(2 * a - n, count)
                total = total + term * delta_powers[loops + d.free_loops - 1]
    return total


def jones_polynomial(
    d: Diagram, budget: int = DEFAULT_BRACKET_BUDGET
) -> LaurentPoly:
    """Writhe-corrected bracket in t: V = (-A)^(-3w) <d>, A = t^(-1/4)."""
    bracket = kauffman_bracket(d, budget)
    w = signs_and_writhe(d).writhe
    correction = LaurentPoly.a_power(-3 * w, 1 if w % 2 == 0 else -1)
    return (correction * bracket).substitute_a_to_t()
