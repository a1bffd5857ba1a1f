"""Closed polymodal formulas: AST, parser, printer and axiom fixtures.

The semantic core is falsum, implication and the indexed box/diamond;
negation, conjunction and disjunction are surface sugar expanded at parse
time and recovered by the printer. Diamonds stay primitive so the model
checker can use the existential clause directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .parsing import Cursor, ParseError
from .worm import Worm

__all__ = [
    "Formula",
    "Top",
    "Bottom",
    "Implies",
    "Box",
    "Diamond",
    "neg",
    "conj",
    "disj",
    "as_worm",
    "formula_of_worm",
    "max_modality",
    "axiom_instances",
    "parse_formula",
    "print_formula",
]


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True, repr=False)
class Top(Formula):
    def __repr__(self):
        return "Top()"


@dataclass(frozen=True, repr=False)
class Bottom(Formula):
    def __repr__(self):
        return "Bottom()"


@dataclass(frozen=True, repr=False)
class Implies(Formula):
    left: Formula
    right: Formula

    def __repr__(self):
        return f"Implies({self.left!r}, {self.right!r})"


@dataclass(frozen=True, repr=False)
class Box(Formula):
    index: int
    body: Formula

    def __repr__(self):
        return f"Box({self.index}, {self.body!r})"


@dataclass(frozen=True, repr=False)
class Diamond(Formula):
    index: int
    body: Formula

    def __repr__(self):
        return f"Diamond({self.index}, {self.body!r})"


def neg(f: Formula) -> Formula:
    return Implies(f, Bottom())


def conj(f: Formula, g: Formula) -> Formula:
    return Implies(Implies(f, neg(g)), Bottom())


def disj(f: Formula, g: Formula) -> Formula:
    return Implies(neg(f), g)


def as_worm(f: Formula) -> Worm | None:
    """The index string when f is a diamond nest ending in truth, else None."""
    letters = []
    while isinstance(f, Diamond):
        letters.append(f.index)
        f = f.body
    return Worm(tuple(letters)) if isinstance(f, Top) else None


def formula_of_worm(a: Worm) -> Formula:
    f: Formula = Top()
    for letter in reversed(a.letters):
        f = Diamond(letter, f)
    return f


def max_modality(f: Formula) -> int:
    """Largest box/diamond index occurring in f; -1 when purely propositional."""
    match f:
        case Box(index=n, body=b) | Diamond(index=n, body=b):
            return max(n, max_modality(b))
        case Implies(left=l, right=r):
            return max(max_modality(l), max_modality(r))
        case _:
            return -1


def axiom_instances(worm_pool: list[Worm], max_index: int) -> list[Formula]:
    """Instances of the five axiom schemata over a pool of worm statements.

    Candidate formulas are the pool worms and their negations (the trivially
    true statement is always included). Propositional tautologies are
    represented by a fixed family of classical shapes; the modal schemata
    are instantiated for every index pair n < m <= max_index. Used as a
    validity fixture: every instance must hold at every world of an exactly
    evaluated submodel.
    """
    pool = [Worm(())] + [w for w in worm_pool if not w.is_empty]
    seen = set()
    candidates = []
    for w in pool:
        base = formula_of_worm(w)
        for f in (base, neg(base)):
            if f not in seen:
                seen.add(f)
                candidates.append(f)

    instances: list[Formula] = []

    def emit(f: Formula) -> None:
        if f not in instances_seen:
            instances_seen.add(f)
            instances.append(f)

    instances_seen: set[Formula] = set()

    # propositional tautologies (representative classical shapes)
    for phi in candidates:
        emit(Implies(phi, phi))
        emit(Implies(Bottom(), phi))
        emit(neg(neg(Implies(phi, phi))))
        emit(disj(phi, neg(phi)))
        for psi in candidates:
            emit(Implies(phi, Implies(psi, phi)))
            emit(Implies(Implies(Implies(phi, psi), phi), phi))

    for n in range(max_index + 1):
        for phi in candidates:
            # transitivity-flavored fixed point: Loeb's schema
            emit(Implies(Box(n, Implies(Box(n, phi), phi)), Box(n, phi)))
            for psi in candidates:
                # distribution
                emit(
                    Implies(
                        Box(n, Implies(phi, psi)),
                        Implies(Box(n, phi), Box(n, psi)),
                    )
                )
        for m in range(n + 1, max_index + 1):
            for phi in candidates:
                # monotonicity and negative introspection across levels
                emit(Implies(Box(n, phi), Box(m, phi)))
                emit(Implies(Diamond(n, phi), Box(m, Diamond(n, phi))))

    return instances


# --- text form ---------------------------------------------------------
#
# atoms T, F; prefix ~, [n], <n>; infix & | -> with precedence
# ~ > & > | > -> and right-associative ->; modalities bind tightest.

_PREC_IMPLIES = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_UNARY = 4


def parse_formula(text: str) -> Formula:
    cur = Cursor(text)
    f = _parse_implies(cur)
    cur.skip_ws()
    cur.expect_end()
    return f


def _parse_implies(cur: Cursor) -> Formula:
    left = _parse_or(cur)
    cur.skip_ws()
    if cur.try_eat("->"):
        return Implies(left, _parse_implies(cur))
    return left


def _parse_or(cur: Cursor) -> Formula:
    f = _parse_and(cur)
    while True:
        cur.skip_ws()
        if cur.try_eat("|"):
            f = disj(f, _parse_and(cur))
        else:
            return f


def _parse_and(cur: Cursor) -> Formula:
    f = _parse_unary(cur)
    while True:
        cur.skip_ws()
        if cur.try_eat("&"):
            f = conj(f, _parse_unary(cur))
        else:
            return f


def _parse_unary(cur: Cursor) -> Formula:
    cur.skip_ws()
    if cur.try_eat("~"):
        return neg(_parse_unary(cur))
    if cur.try_eat("["):
        n = cur.natural()
        cur.expect("]")
        return Box(n, _parse_unary(cur))
    if cur.try_eat("<"):
        n = cur.natural()
        cur.expect(">")
        return Diamond(n, _parse_unary(cur))
    if cur.try_eat("T"):
        return Top()
    if cur.try_eat("F"):
        return Bottom()
    if cur.try_eat("("):
        f = _parse_implies(cur)
        cur.skip_ws()
        cur.expect(")")
        return f
    raise cur.error("expected a formula")


def print_formula(f: Formula) -> str:
    return _print(f, 0)


def _print(f: Formula, context: int) -> str:
    match f:
        case Top():
            return "T"
        case Bottom():
            return "F"
        case Box(index=n, body=b):
            return f"[{n}]{_print(b, _PREC_UNARY)}"
        case Diamond(index=n, body=b):
            return f"<{n}>{_print(b, _PREC_UNARY)}"
        case Implies(left=Implies(left=x, right=Implies(left=y, right=Bottom())), right=Bottom()):
            text = f"{_print(x, _PREC_AND)} & {_print(y, _PREC_UNARY)}"
            return f"({text})" if context > _PREC_AND else text
        case Implies(left=x, right=Bottom()):
            return f"~{_print(x, _PREC_UNARY)}"
        case Implies(left=Implies(left=x, right=Bottom()), right=y):
            text = f"{_print(x, _PREC_OR)} | {_print(y, _PREC_AND)}"
            return f"({text})" if context > _PREC_OR else text
        case Implies(left=x, right=y):
            text = f"{_print(x, _PREC_OR)} -> {_print(y, _PREC_IMPLIES)}"
            return f"({text})" if context > _PREC_IMPLIES else text
    raise TypeError(f"not a formula: {f!r}")
