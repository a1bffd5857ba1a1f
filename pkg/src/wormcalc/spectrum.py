"""Theory spectra: finite unions of consistency progressions and their points.

A presentation assigns to finitely many levels n a worm driving the level-n
progression over the fixed base theory; absent levels mean the stage-0
progression, i.e. the base itself. Normalization collapses any presentation
to the unique world of the universal model whose coordinates are the
per-level proof-theoretic ordinals of the presented theory: a single
top-down pass replaces the worm at level n whenever the level above already
proves more, by prefixing that stronger worm onto the part of level n that
the level above cannot see.

Conservation between two theories reads off directly: the largest level at
which the two points still agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Union

from .ignatiev import Point, min_point_for_worm, print_point
from .ordinal import from_int, omega_power, print_ordinal
from .worm import (
    TOP,
    Worm,
    compare_worms,
    concat,
    head,
    ordinal_of,
    parse_worm,
    print_worm,
    remainder,
    worm_of_ordinal,
)

__all__ = [
    "TheoryPresentation",
    "Spectrum",
    "LimitTheory",
    "spectrum_of_worm",
    "normalize_presentation",
    "normalize",
    "conservation_level",
    "describe_conservation",
    "registry",
]


@dataclass(frozen=True, repr=False)
class TheoryPresentation:
    """A finite map level -> worm, the union of the per-level progressions."""

    entries: tuple[tuple[int, Worm], ...] = ()
    name: str | None = None

    def __post_init__(self):
        levels = [level for level, _ in self.entries]
        if any(level < 0 for level in levels):
            raise ValueError("levels must be natural numbers")
        if levels != sorted(set(levels)):
            raise ValueError("entries must be sorted by level without duplicates")

    @classmethod
    def of(cls, entries: Mapping[int, Worm], name: str | None = None) -> "TheoryPresentation":
        return cls(tuple(sorted(entries.items())), name)

    def worm_at(self, level: int) -> Worm:
        for entry_level, worm in self.entries:
            if entry_level == level:
                return worm
        return TOP

    @property
    def max_level(self) -> int:
        return self.entries[-1][0] if self.entries else 0

    def to_json(self) -> dict:
        data: dict = {"entries": {str(level): print_worm(w) for level, w in self.entries}}
        if self.name is not None:
            data = {"name": self.name, **data}
        return data

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "TheoryPresentation":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "entries" not in data:
            raise ValueError('presentation JSON needs an "entries" object')
        entries = {}
        for key, text in data["entries"].items():
            level = int(key)
            if level < 0:
                raise ValueError(f"level {key!r} must be a natural number")
            entries[level] = parse_worm(text)
        name = data.get("name")
        return cls.of(entries, name)

    def __repr__(self):
        inner = ", ".join(f"{level}: {print_worm(w)!r}" for level, w in self.entries)
        return f"TheoryPresentation({{{inner}}})"


@dataclass(frozen=True, repr=False)
class Spectrum:
    """A world of the universal model together with its canonical worm view.

    The worm at position n denotes coordinate n at level n. Two spectra are
    the same theory exactly when their points coincide; worms are a
    derived, canonical rendering, never compared as strings.
    """

    point: Point
    worms: tuple[Worm, ...] = field(compare=False)

    @classmethod
    def of_point(cls, p: Point) -> "Spectrum":
        worms = tuple(worm_of_ordinal(p.coord(n), n) for n in range(p.support))
        return cls(p, worms)

    def as_presentation(self, name: str | None = None) -> TheoryPresentation:
        return TheoryPresentation.of(
            {n: w for n, w in enumerate(self.worms)}, name
        )

    def to_json(self) -> dict:
        return {
            "coords": [print_ordinal(c) for c in self.point.coords],
            "worms": [print_worm(w) for w in self.worms],
        }

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "Spectrum":
        if isinstance(data, str):
            data = json.loads(data)
        from .ordinal import parse_ordinal

        point = Point.of(parse_ordinal(text) for text in data["coords"])
        return cls.of_point(point)

    def __repr__(self):
        return f"Spectrum({print_point(self.point)})"


def spectrum_of_worm(a: Worm) -> Spectrum:
    """The spectrum of the theory axiomatized by a single worm statement.

    Such a theory is the union of its progressions at every level, so its
    point is the minimal world forcing the worm.
    """
    return Spectrum.of_point(min_point_for_worm(a))


def normalize_presentation(t: TheoryPresentation) -> tuple[Worm, ...]:
    """The per-level worms after closure, for levels 0 through the max level.

    Pass 1 replaces each stored worm by its level head (a level-n
    progression only sees the level-n head). Pass 2 walks top-down: when
    the level above outstrips the head of the level below, the lower worm
    is replaced by the upper worm followed by whatever part of the lower
    one the upper level cannot express. One pass suffices: after a rewrite
    the new level-(n+1) head is exactly the worm above, so no earlier step
    can fire again.
    """
    top = t.max_level
    worms = [head(t.worm_at(n), n) for n in range(top + 1)]
    for n in range(top - 1, -1, -1):
        upper = worms[n + 1]
        if compare_worms(head(worms[n], n + 1), upper, n + 1) < 0:
            worms[n] = concat(upper, remainder(worms[n], n + 1))
    return tuple(worms)


def normalize(t: TheoryPresentation) -> Spectrum:
    """Collapse a presentation to its unique point of the universal model."""
    worms = normalize_presentation(t)
    point = Point.of(ordinal_of(w, n) for n, w in enumerate(worms))
    return Spectrum.of_point(point)


@dataclass(frozen=True)
class LimitTheory:
    """Registry sentinel for theories whose spectrum leaves the model."""

    name: str
    note: str


def conservation_level(p: Spectrum, q: Spectrum) -> int | str:
    """Largest n with coordinates 0..n equal; 'all' for equal points,
    'none' when already coordinate 0 differs."""
    if p.point == q.point:
        return "all"
    support = max(p.point.support, q.point.support)
    level = -1
    for n in range(support):
        if p.point.coord(n) != q.point.coord(n):
            break
        level = n
    return "none" if level < 0 else level


def describe_conservation(level: int | str) -> str:
    if level == "all":
        return "level=all (identical spectra)"
    if level == "none":
        return "level=none (already Pi^0_1 ordinals differ)"
    return f"level={level} (Pi^0_{level + 1} agreement)"


def registry() -> dict[str, Spectrum | LimitTheory]:
    """Built-in theory placements over the fixed base.

    The base itself sits at the root; the two classical fragments sit at
    their known points, one relation-2 step apart. Full arithmetic has
    every coordinate equal to the limit ordinal and therefore no point.
    """
    w = omega_power(from_int(1))
    w_to_w = omega_power(w)
    one = from_int(1)
    return {
        "EA+": Spectrum.of_point(Point.of([from_int(0)])),
        "ISigma1": Spectrum.of_point(Point.of([w_to_w, w, one])),
        "PRA": Spectrum.of_point(Point.of([w_to_w, w])),
        "PA": LimitTheory(
            "PA", "limit: every coordinate is epsilon_0, outside the model"
        ),
    }
