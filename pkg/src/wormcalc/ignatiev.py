"""The universal Kripke model for the closed fragment.

Worlds are finite-support sequences of ordinals whose every coordinate is
bounded by the last exponent of the one before it; relation n drops
coordinate n while fixing all earlier ones. The full model is infinite, so
model checking runs over explicitly enumerated finite fragments. Forcing
results carry an exactness flag: on a universe that is an initial segment
of the naturals every possible witness lies inside the fragment and
evaluation agrees with the full model, otherwise diamonds are
underapproximated.

`forces_worm` decides worm statements in constant passes through the
coordinatewise criterion rank_n(worm) <= coordinate_n. That criterion is
folklore rather than textbook; the test suite certifies it by exhaustive
agreement with the definitional evaluator on exact fragments, and any
disagreement fails the build.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import formula as fm
from .ordinal import ZERO, Ordinal, compare, last_exponent, parse_ordinal, print_ordinal
from .parsing import ParseError
from .worm import Worm, ordinal_of

__all__ = [
    "Point",
    "parse_coords",
    "parse_point",
    "print_point",
    "first_violation",
    "is_valid_point",
    "relation_holds",
    "min_point_for_worm",
    "forces_worm",
    "FiniteSubmodel",
    "enumerate_submodel",
    "ForcingResult",
    "forces",
    "validity_check",
    "render_dot",
    "UniverseError",
    "PointNotInModelError",
    "ModalityOutOfRangeError",
]


class UniverseError(ValueError):
    """The requested universe cannot carry a submodel."""


class PointNotInModelError(ValueError):
    """Evaluation was asked at a world the submodel does not contain."""


class ModalityOutOfRangeError(ValueError):
    """The formula mentions a modality above the submodel's max index."""


@dataclass(frozen=True, repr=False)
class Point:
    """A world: stored coordinates, with an implicit all-zero tail.

    Canonical support: the final stored coordinate is nonzero unless the
    point is the root, stored as the single coordinate 0. Equal points are
    therefore structurally identical.
    """

    coords: tuple[Ordinal, ...]

    def __post_init__(self):
        if not self.coords:
            raise ValueError("a point stores at least one coordinate")
        if len(self.coords) > 1 and self.coords[-1].is_zero:
            raise ValueError("non-canonical point: trailing zero coordinate")

    @classmethod
    def of(cls, coords: Iterable[Ordinal]) -> "Point":
        stored = list(coords)
        while len(stored) > 1 and stored[-1].is_zero:
            stored.pop()
        if not stored:
            stored = [ZERO]
        return cls(tuple(stored))

    def coord(self, n: int) -> Ordinal:
        return self.coords[n] if n < len(self.coords) else ZERO

    @property
    def support(self) -> int:
        return len(self.coords)

    def sort_key(self):
        return self.coords

    def __str__(self) -> str:
        return print_point(self)

    def __repr__(self) -> str:
        return f"Point({print_point(self)!r})"


def parse_coords(text: str) -> tuple[Ordinal, ...]:
    """The raw coordinate list of `<w^w, w, 1>`; no trimming, no validity check."""
    s = text.strip()
    for opener, closer in (("<", ">"), ("⟨", "⟩")):
        if s.startswith(opener) and s.endswith(closer) and len(s) > 1:
            body = s[len(opener) : -len(closer)]
            return tuple(parse_ordinal(part) for part in body.split(","))
    raise ParseError("expected an angle-bracketed point like <w, 1>", 0)


def parse_point(text: str) -> Point:
    """Angle-bracket syntax with canonical trimming; does not check validity."""
    return Point.of(parse_coords(text))


def print_point(p: Point, unicode: bool = False) -> str:
    inner = ", ".join(print_ordinal(c, unicode) for c in p.coords)
    return f"⟨{inner}⟩" if unicode else f"<{inner}>"


def first_violation(coords: Sequence[Ordinal]) -> int | None:
    """Index of the first adjacent pair breaking the world condition, if any.

    The condition: each coordinate is at most the last exponent of its
    predecessor. The implicit zero tail can never violate it.
    """
    for i in range(len(coords) - 1):
        if compare(coords[i + 1], last_exponent(coords[i])) > 0:
            return i
    return None


def is_valid_point(coords: Sequence[Ordinal] | Point) -> bool:
    if isinstance(coords, Point):
        coords = coords.coords
    return first_violation(coords) is None


def relation_holds(n: int, p: Point, q: Point) -> bool:
    """p sees q through relation n: coordinates below n agree, coordinate n drops."""
    for i in range(n):
        if p.coord(i) != q.coord(i):
            return False
    return compare(p.coord(n), q.coord(n)) > 0


def min_point_for_worm(a: Worm) -> Point:
    """The world whose n-th coordinate is the worm's level-n rank.

    This is the spectrum of the theory axiomatized by the worm; it always
    satisfies the world condition.
    """
    top = (max(a.letters) + 1) if a.letters else 0
    return Point.of(ordinal_of(a, n) for n in range(top + 1))


def forces_worm(p: Point, a: Worm) -> bool:
    """Decide a worm statement at a world via the coordinatewise rank criterion."""
    top = (max(a.letters) + 1) if a.letters else 0
    return all(compare(ordinal_of(a, n), p.coord(n)) <= 0 for n in range(top + 1))


class FiniteSubmodel:
    """A finite fragment: all valid points over a fixed coordinate universe.

    Worlds are every valid point with support at most max_index + 1 and all
    coordinates drawn from the universe; edges are the full relations
    restricted to those worlds. Immutable after construction.
    """

    def __init__(self, universe: Sequence[Ordinal], max_index: int):
        if max_index < 0:
            raise UniverseError("max index must be a natural number")
        ordered = sorted(set(universe))
        if not ordered or not ordered[0].is_zero:
            raise UniverseError("universe must contain 0")
        universe_set = set(ordered)
        for u in ordered:
            if last_exponent(u) not in universe_set:
                raise UniverseError(
                    f"universe is not closed under last exponents: missing {last_exponent(u)}"
                )
        self.universe: tuple[Ordinal, ...] = tuple(ordered)
        self.max_index = max_index
        self.worlds: tuple[Point, ...] = tuple(
            sorted(self._generate(), key=Point.sort_key)
        )
        self._world_set = frozenset(self.worlds)
        self._successors: dict[tuple[int, Point], tuple[Point, ...]] = {}
        for n in range(max_index + 1):
            for p in self.worlds:
                self._successors[(n, p)] = tuple(
                    q for q in self.worlds if relation_holds(n, p, q)
                )
        # exactness is certified only for initial segments of the naturals:
        # there every coordinate beyond the first is forced to zero, so all
        # full-model successors of a world already lie in the fragment
        self.witness_complete = all(u.is_finite for u in self.universe) and [
            u.as_int() for u in self.universe
        ] == list(range(len(self.universe)))

    def _generate(self) -> Iterable[Point]:
        found: list[Point] = []
        seen: set[Point] = set()

        def extend(prefix: list[Ordinal]) -> None:
            point = Point.of(prefix)
            if point not in seen:
                seen.add(point)
                found.append(point)
            if len(prefix) > self.max_index:
                return
            bound = last_exponent(prefix[-1])
            for u in self.universe:
                if compare(u, bound) <= 0:
                    extend(prefix + [u])

        for u in self.universe:
            extend([u])
        return found

    def successors(self, n: int, p: Point) -> tuple[Point, ...]:
        return self._successors[(n, p)]

    def edges(self, n: int) -> list[tuple[Point, Point]]:
        return [
            (p, q)
            for p in self.worlds
            for q in self._successors[(n, p)]
        ]

    def __contains__(self, p: Point) -> bool:
        return p in self._world_set

    def __repr__(self) -> str:
        return (
            f"FiniteSubmodel(|universe|={len(self.universe)}, "
            f"max_index={self.max_index}, worlds={len(self.worlds)})"
        )


def enumerate_submodel(universe: Iterable[Ordinal], max_index: int) -> FiniteSubmodel:
    return FiniteSubmodel(list(universe), max_index)


@dataclass(frozen=True)
class ForcingResult:
    """Truth value plus whether it is exact for the full model."""

    value: bool
    exact: bool

    def __bool__(self) -> bool:
        return self.value


def forces(m: FiniteSubmodel, p: Point, f: fm.Formula) -> ForcingResult:
    """Kripke evaluation of a closed formula at a world of the fragment.

    Boxes quantify over the fragment's edges, diamonds existentially; on a
    witness-complete fragment the answer is exact for the full model,
    otherwise diamonds are underapproximated and the result says so.
    """
    if p not in m:
        raise PointNotInModelError(f"{p} is not a world of {m!r}")
    top = fm.max_modality(f)
    if top > m.max_index:
        raise ModalityOutOfRangeError(
            f"formula mentions [{top}] but the submodel stops at [{m.max_index}]"
        )

    def ev(point: Point, g: fm.Formula) -> bool:
        match g:
            case fm.Top():
                return True
            case fm.Bottom():
                return False
            case fm.Implies(left=left, right=right):
                return (not ev(point, left)) or ev(point, right)
            case fm.Box(index=n, body=body):
                return all(ev(q, body) for q in m.successors(n, point))
            case fm.Diamond(index=n, body=body):
                return any(ev(q, body) for q in m.successors(n, point))
        raise TypeError(f"not a formula: {g!r}")

    return ForcingResult(ev(p, f), m.witness_complete)


def validity_check(f: fm.Formula, m: FiniteSubmodel) -> ForcingResult:
    """True iff the formula holds at every world of the fragment.

    A False answer on a witness-complete fragment refutes theoremhood in
    the closed fragment; a True answer is only a necessary condition.
    """
    top = fm.max_modality(f)
    if top > m.max_index:
        raise ModalityOutOfRangeError(
            f"formula mentions [{top}] but the submodel stops at [{m.max_index}]"
        )
    value = all(forces(m, p, f).value for p in m.worlds)
    return ForcingResult(value, m.witness_complete)


# --- DOT rendering ------------------------------------------------------


def _edge_style(n: int) -> str:
    """Multi-stroke edges: relation n is drawn with n+1 parallel strokes."""
    if n == 0:
        return ""
    color = "black" + ":invis:black" * n
    return f' [color="{color}"]'


def _reduce(edges: list[tuple[Point, Point]]) -> list[tuple[Point, Point]]:
    """Transitive reduction of a strict order: keep covering pairs only."""
    present = set(edges)
    return [
        (p, q)
        for (p, q) in edges
        if not any((p, r) in present and (r, q) in present for r in {e[1] for e in present if e[0] == p})
    ]


def render_dot(
    m: FiniteSubmodel,
    labels: Mapping[Point, str] | None = None,
    reduce_transitive: bool = True,
) -> str:
    """Deterministic DOT digraph of the fragment.

    Relation 0 uses plain arrows; higher relations stack parallel strokes
    (double for 1, triple for 2, and so on). By default only covering
    arrows of each relation are drawn.
    """
    labels = labels or {}
    index = {p: i for i, p in enumerate(m.worlds)}
    lines = ["digraph ignatiev {", "  node [shape=box];"]
    for p in m.worlds:
        text = print_point(p)
        if p in labels:
            text = f"{labels[p]}\\n{text}"
        lines.append(f'  n{index[p]} [label="{text}"];')
    for n in range(m.max_index + 1):
        edges = m.edges(n)
        if reduce_transitive:
            edges = _reduce(edges)
        for p, q in sorted(edges, key=lambda e: (index[e[0]], index[e[1]])):
            lines.append(f"  n{index[p]} -> n{index[q]}{_edge_style(n)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
