"""Built-in starter diagrams.

Five entries: unknot, trefoil (right-handed), figure_eight, hopf
(positive Hopf link), solomon (4-crossing doubled Hopf pattern).
Preset layouts are flat coordinate lists: one position per crossing in
emission order, then one control point per edge in label order; the
renderer threads each edge through its control point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .diagram import Diagram, parse_pd, trace
from .errors import NotFoundError

Point = tuple[float, float]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    pd: str
    notes: str
    preset_layout: tuple[Point, ...] | None = None

    @cached_property
    def diagram(self) -> Diagram:
        return parse_pd(self.pd)

    @cached_property
    def component_count(self) -> int:
        return trace(self.diagram).component_count if self.pd else 0


def _entries() -> tuple[CatalogEntry, ...]:
    return (
        CatalogEntry(
            "unknot",
            "O",
            "one crossing-free loop",
            preset_layout=(),
        ),
        CatalogEntry(
            "trefoil",
            "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
            "right-handed trefoil, writhe +3",
            preset_layout=_TREFOIL_LAYOUT,
        ),
        CatalogEntry(
            "figure_eight",
            "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
            "figure-eight knot, writhe 0",
            preset_layout=_FIGURE_EIGHT_LAYOUT,
        ),
        CatalogEntry(
            "hopf",
            "X(1,4,2,3) X(3,2,4,1)",
            "Hopf link, both crossings positive",
            preset_layout=_HOPF_LAYOUT,
        ),
        CatalogEntry(
            "solomon",
            "X(1,2,6,5) X(2,3,7,6) X(3,4,8,7) X(4,1,5,8)",
            "Solomon link, |linking number| 2",
            preset_layout=_SOLOMON_LAYOUT,
        ),
    )


# Crossing positions frozen from the layout solve, one point per
# crossing in pd order; each verified by the route-intersection check
# in the render tests.  The trefoil's are 3-fold symmetric, the hopf
# link's 2-fold, the solomon link's 4-fold.
_TREFOIL_LAYOUT: tuple[Point, ...] | None = (
    (0.636347, -0.231611),
    (-0.117592, 0.666898),
    (-0.518755, -0.435287),
)
_FIGURE_EIGHT_LAYOUT: tuple[Point, ...] | None = (
    (0.628621, -0.256781),
    (-0.502887, -0.456297),
    (-0.037704, 0.213829),
    (-0.129571, 0.734835),
)
_HOPF_LAYOUT: tuple[Point, ...] | None = (
    (0.5, -0.288675),
    (-0.5, 0.288675),
)
_SOLOMON_LAYOUT: tuple[Point, ...] | None = (
    (0.702516, -0.188239),
    (-0.188239, -0.702516),
    (0.188239, 0.702516),
    (-0.702516, 0.188239),
)

_BY_NAME = {e.name: e for e in _entries()}


def catalog_names() -> tuple[str, ...]:
    return tuple(_BY_NAME)


def catalog_entries() -> list[CatalogEntry]:
    return list(_BY_NAME.values())


def catalog_get(name: str) -> CatalogEntry:
    entry = _BY_NAME.get(name)
    if entry is None:
        raise NotFoundError(
            f"no catalog entry named {name!r}; valid names: "
            + ", ".join(catalog_names())
        )
    return entry
