"""Pure-Python kernels: canonical relabeling and bracket state sums.

These are the reference implementations.  The compiled extension in
_kernels_c.pyx mirrors them operation for operation; the two must stay
byte-for-byte interchangeable (the test suite runs both).

Dart encoding throughout: dart = 4 * crossing_index + slot.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Sequence

Quad = tuple[int, int, int, int]


def _alpha_pairs(quads: Sequence[Quad]) -> list[int]:
    occ: dict[int, list[int]] = {}
    for ci, q in enumerate(quads):
        for s, e in enumerate(q):
            occ.setdefault(e, []).append(4 * ci + s)
    alpha = [0] * (4 * len(quads))
    for a, b in occ.values():
        alpha[a], alpha[b] = b, a
    return alpha


def _strand_components(quads: Sequence[Quad]) -> list[list[int]]:
    """Edges grouped by strand (passages join opposite slots)."""
    edges = sorted({e for q in quads for e in q})
    parent = {e: e for e in edges}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for q in quads:
        for a, b in ((q[0], q[2]), (q[1], q[3])):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for e in edges:
        groups.setdefault(find(e), []).append(e)
    return sorted(groups.values())


def canonical_quads(quads: Sequence[Quad], arrivals: Sequence[int]) -> list[Quad]:
    """Lexicographically minimal relabeling of a valid quad set.

    Minimizes the emission-ordered quad tuple over every choice of
    per-component starting edge and every component order.  Walks step
    only from arrival darts (the caller supplies them), so relabeling
    follows the strand directions: a reversed component is a different
    diagram, not an alias.
    """
    n = len(quads)
    if n == 0:
        return []
    alpha = _alpha_pairs(quads)
    occ: dict[int, list[int]] = {}
    for ci, q in enumerate(quads):
        for s, e in enumerate(q):
            occ.setdefault(e, []).append(4 * ci + s)
    comps = _strand_components(quads)
    arrival_set = set(arrivals)
    comp_darts = [
        sorted(d for e in comp for d in occ[e] if d in arrival_set)
        for comp in comps
    ]

    best: tuple[Quad, ...] | None = None
    for order in permutations(range(len(comps))):
        for starts in product(*[comp_darts[i] for i in order]):
            label: dict[int, int] = {}
            nxt = 1
            for start in starts:
                d = start
                while True:
                    ci, s = divmod(d, 4)
                    e = quads[ci][s]
                    if e in label:
                        break
                    label[e] = nxt
                    nxt += 1
                    d = alpha[4 * ci + (s + 2) % 4]
            candidate = tuple(
                sorted(
                    (tuple(label[e] for e in q) for q in quads),
                    key=lambda q: (min(q), q),
                )
            )
            if best is None or candidate < best:
                best = candidate
    return list(best)


def state_loop_counts(quads: Sequence[Quad]) -> list[list[int]]:
    """Loop census over all 2^n smoothing states.

    Returns counts[a][loops]: the number of states with exactly `a`
    A-smoothings whose smoothed diagram has `loops` closed loops.
    The A-smoothing of quad (a,b,c,d) joins the end pairs (a,d),(b,c);
    the B-smoothing joins (a,b),(c,d).  Bit i of the state index set
    means crossing i takes the A-smoothing.
    """
    n = len(quads)
    counts = [[0] * (2 * n + 2) for _ in range(n + 1)]
    if n == 0:
        counts[0][0] = 1
        return counts
    alpha = _alpha_pairs(quads)
    total = 4 * n
    for state in range(1 << n):
        parent = list(range(total))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x: int, y: int):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for d in range(total):
            union(d, alpha[d])
        for ci in range(n):
            base = 4 * ci
            if (state >> ci) & 1:
                union(base, base + 3)
                union(base + 1, base + 2)
            else:
                union(base, base + 1)
                union(base + 2, base + 3)
        loops = sum(1 for d in range(total) if find(d) == d)
        counts[bin(state).count("1")][loops] += 1
    return counts
