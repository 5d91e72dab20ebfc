"""Backend dispatch and pure/compiled kernel agreement."""

import os
import subprocess
import sys

import pytest

from knotlab import _kernels, _kernels_py
from knotlab.catalog import catalog_get, catalog_names
from knotlab.diagram import _solve_orientation, canonical, emit_pd, parse_pd
from knotlab.moves import random_walk

TREFOIL_QUADS = [(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)]


def _arrivals(quads):
    _, head, _, findings = _solve_orientation(quads)
    assert not findings
    return sorted(head.values())


def _walked_corpus():
    out = []
    for name in catalog_names():
        base = catalog_get(name).diagram
        for seed in range(4):
            d, _ = random_walk(base, 3, seed=seed)
            out.append([cr.quad for cr in d.crossings])
    return out


def test_backend_is_reported():
    assert _kernels.backend in ("pure", "compiled")


def test_pure_fallback_env(tmp_path):
    code = "from knotlab import _kernels; print(_kernels.backend)"
    env = dict(os.environ, KNOTLAB_PURE_KERNELS="1")
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    assert out.stdout.strip() == "pure"


def test_state_loop_counts_kink():
    # X(1,1,2,2): A-state one loop, B-state two loops
    counts = _kernels_py.state_loop_counts([(1, 1, 2, 2)])
    assert counts[1][1] == 1 and counts[0][2] == 1


def test_state_loop_counts_trefoil_census():
    counts = _kernels_py.state_loop_counts(TREFOIL_QUADS)
    # 8 states total
    assert sum(c for row in counts for c in row) == 8
    # all-A state has 2 loops; all-B state has 3
    assert counts[3][2] == 1
    assert counts[0][3] == 1


@pytest.mark.parametrize("quads", _walked_corpus())
def test_state_census_backends_agree(quads):
    if len(quads) > 10:
        pytest.skip("census too large for test budget")
    a = _kernels_py.state_loop_counts(quads)
    b = _kernels.state_loop_counts(quads)
    assert a == b


@pytest.mark.parametrize("quads", _walked_corpus())
def test_canonical_backends_agree(quads):
    arrivals = _arrivals(quads)
    a = _kernels_py.canonical_quads(quads, arrivals)
    b = _kernels.canonical_quads(quads, arrivals)
    assert a == b


def test_canonical_quads_trefoil_fixed_point():
    arrivals = _arrivals(TREFOIL_QUADS)
    assert _kernels_py.canonical_quads(TREFOIL_QUADS, arrivals) == TREFOIL_QUADS


def test_canonical_survives_label_permutation():
    d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    want = emit_pd(canonical(d))
    # rotate labels cyclically: a valid repositioning of the basepoint
    shifted = [tuple((e % 6) + 1 for e in q) for q in TREFOIL_QUADS]
    from knotlab.diagram import Diagram

    assert emit_pd(canonical(Diagram.from_quads(shifted))) == want
