# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: canonical relabeling and bracket state sums.

Mirrors _kernels_py operation for operation; inputs above the fixed
buffer sizes fall back to the pure implementations so behavior never
diverges.  Dart encoding: dart = 4 * crossing_index + slot.

Buffers are sized for 64 crossings (256 darts), far beyond desk scale.
"""

from itertools import permutations

from . import _kernels_py

_MAX_CROSSINGS = 64
_MAX_STATE_CROSSINGS = 30  # 2^30 states is already far past any budget


cdef int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef void _fill_darts(quads, int n, int* flat, int* alpha, int* first_seen):
    """Dense-relabel edge labels and pair up dart ends."""
    cdef int ci, s, d, e
    labels = sorted({e for q in quads for e in q})
    index = {e: i for i, e in enumerate(labels)}
    for ci in range(n):
        q = quads[ci]
        for s in range(4):
            flat[4 * ci + s] = index[q[s]]
    for e in range(2 * n):
        first_seen[e] = -1
    for d in range(4 * n):
        e = flat[d]
        if first_seen[e] < 0:
            first_seen[e] = d
        else:
            alpha[d] = first_seen[e]
            alpha[first_seen[e]] = d


def state_loop_counts(quads):
    """Loop census over all 2^n smoothing states; see _kernels_py."""
    cdef int n = len(quads)
    if n == 0 or n > _MAX_STATE_CROSSINGS:
        return _kernels_py.state_loop_counts(quads)

    cdef int total = 4 * n
    cdef int flat[256]
    cdef int alpha[256]
    cdef int first_seen[128]
    cdef int parent[256]
    cdef int ci, d, loops, ra, rb, bits
    cdef unsigned long state, nstates

    _fill_darts(quads, n, flat, alpha, first_seen)

    counts = [[0] * (2 * n + 2) for _ in range(n + 1)]
    nstates = (<unsigned long> 1) << n
    for state in range(nstates):
        for d in range(total):
            parent[d] = d
        for d in range(total):
            ra = _find(parent, d)
            rb = _find(parent, alpha[d])
            if ra != rb:
                parent[ra] = rb
        for ci in range(n):
            d = 4 * ci
            if (state >> ci) & 1:
                ra = _find(parent, d)
                rb = _find(parent, d + 3)
                if ra != rb:
                    parent[ra] = rb
                ra = _find(parent, d + 1)
                rb = _find(parent, d + 2)
                if ra != rb:
                    parent[ra] = rb
            else:
                ra = _find(parent, d)
                rb = _find(parent, d + 1)
                if ra != rb:
                    parent[ra] = rb
                ra = _find(parent, d + 2)
                rb = _find(parent, d + 3)
                if ra != rb:
                    parent[ra] = rb
        loops = 0
        for d in range(total):
            if _find(parent, d) == d:
                loops += 1
        bits = 0
        for ci in range(n):
            if (state >> ci) & 1:
                bits += 1
        counts[bits][loops] += 1
    return counts


cdef bint _quad_less(int* key0, int* label, int* flat, int a, int b) noexcept:
    if key0[a] != key0[b]:
        return key0[a] < key0[b]
    cdef int k, va, vb
    for k in range(4):
        va = label[flat[4 * a + k]]
        vb = label[flat[4 * b + k]]
        if va != vb:
            return va < vb
    return False


def canonical_quads(quads, arrivals):
    """Minimal orientation-preserving relabeling; see _kernels_py."""
    cdef int n = len(quads)
    if n == 0:
        return []
    if n > _MAX_CROSSINGS:
        return _kernels_py.canonical_quads(quads, arrivals)

    cdef int total = 4 * n
    cdef int nedges = 2 * n
    cdef int flat[256]
    cdef int alpha[256]
    cdef int first_seen[128]
    cdef int label[128]
    cdef bint is_arrival[256]
    cdef int best[256]
    cdef int cand[256]
    cdef int order_idx[64]
    cdef int key0[64]
    cdef int ci, s, d, e, nxt, k, i, j, pos, tmp
    cdef bint have_best = False, smaller

    _fill_darts(quads, n, flat, alpha, first_seen)
    for d in range(total):
        is_arrival[d] = False
    for d in arrivals:
        is_arrival[d] = True

    # strand components over dense edges: union opposite slots
    parent_py = list(range(nedges))

    def find_e(x):
        while parent_py[x] != x:
            parent_py[x] = parent_py[parent_py[x]]
            x = parent_py[x]
        return x

    for ci in range(n):
        for s in range(2):
            a = find_e(flat[4 * ci + s])
            b = find_e(flat[4 * ci + s + 2])
            if a != b:
                parent_py[a] = b
    groups = {}
    for e in range(nedges):
        groups.setdefault(find_e(e), []).append(e)
    comps = sorted(groups.values())
    comp_darts = []
    for comp in comps:
        darts = []
        for e in comp:
            for d in (first_seen[e], alpha[first_seen[e]]):
                if is_arrival[d]:
                    darts.append(d)
        comp_darts.append(sorted(darts))

    ncomp = len(comps)
    for order in permutations(range(ncomp)):
        ordered_darts = [comp_darts[c] for c in order]
        sizes = [len(dl) for dl in ordered_darts]
        starts = [0] * ncomp
        while True:
            for e in range(nedges):
                label[e] = -1
            nxt = 1
            for i in range(ncomp):
                d = ordered_darts[i][starts[i]]
                while True:
                    ci = d >> 2
                    s = d & 3
                    e = flat[4 * ci + s]
                    if label[e] >= 0:
                        break
                    label[e] = nxt
                    nxt += 1
                    d = alpha[4 * ci + ((s + 2) & 3)]
            # emission order: sort crossings by (min label, quad)
            for ci in range(n):
                k = label[flat[4 * ci]]
                for s in range(1, 4):
                    e = label[flat[4 * ci + s]]
                    if e < k:
                        k = e
                key0[ci] = k
                order_idx[ci] = ci
            for i in range(1, n):
                j = i
                while j > 0 and _quad_less(
                    key0, label, flat, order_idx[j], order_idx[j - 1]
                ):
                    tmp = order_idx[j]
                    order_idx[j] = order_idx[j - 1]
                    order_idx[j - 1] = tmp
                    j -= 1
            pos = 0
            for i in range(n):
                ci = order_idx[i]
                for k in range(4):
                    cand[pos] = label[flat[4 * ci + k]]
                    pos += 1
            if have_best:
                smaller = False
                for i in range(total):
                    if cand[i] != best[i]:
                        smaller = cand[i] < best[i]
                        break
            else:
                smaller = True
            if smaller:
                for i in range(total):
                    best[i] = cand[i]
                have_best = True
            # odometer over start darts, rightmost fastest
            i = ncomp - 1
            while i >= 0:
                starts[i] += 1
                if starts[i] < sizes[i]:
                    break
                starts[i] = 0
                i -= 1
            if i < 0:
                break
    return [
        (best[4 * i], best[4 * i + 1], best[4 * i + 2], best[4 * i + 3])
        for i in range(n)
    ]
