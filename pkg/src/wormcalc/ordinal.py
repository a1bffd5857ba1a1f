"""Exact ordinal arithmetic below epsilon_0 in Cantor normal form.

An ordinal is a finite sum w^e1*c1 + ... + w^ek*ck with ordinal exponents
e1 > e2 > ... > ek and positive integer coefficients; the empty sum is 0.
Canonical form is unique, so structural equality decides ordinal equality.
Provided operations are the ones the worm calculus needs: comparison,
(non-commutative) addition, w-powers, the last-exponent map and the
hyperexponentials; general multiplication and exponentiation are out of
scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from .parsing import Cursor, ParseError

__all__ = [
    "Ordinal",
    "ZERO",
    "ONE",
    "OMEGA",
    "from_int",
    "compare",
    "add",
    "omega_power",
    "last_exponent",
    "hyperexp",
    "parse_ordinal",
    "print_ordinal",
    "check_invariants",
]


@total_ordering
@dataclass(frozen=True, repr=False)
class Ordinal:
    """Cantor normal form: a tuple of (exponent, coefficient) terms.

    Instances are immutable and validated on construction, so any reachable
    value is canonical. Exponents are themselves Ordinals; coefficients are
    positive ints. The empty term tuple is 0.
    """

    terms: tuple[tuple["Ordinal", int], ...] = ()

    def __post_init__(self):
        for i, (exponent, coefficient) in enumerate(self.terms):
            if not isinstance(exponent, Ordinal):
                raise TypeError(f"exponent {exponent!r} is not an Ordinal")
            if not isinstance(coefficient, int) or coefficient < 1:
                raise ValueError(f"coefficient {coefficient!r} must be a positive int")
            if i > 0 and compare(self.terms[i - 1][0], exponent) <= 0:
                raise ValueError("exponents must be strictly decreasing")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        """True for 0 and for ordinals whose single term has exponent 0."""
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    def as_int(self) -> int:
        """The value of a finite ordinal as an int."""
        if not self.terms:
            return 0
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self.terms[0][1]

    def __lt__(self, other: "Ordinal") -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) < 0

    def __str__(self) -> str:
        return print_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({print_ordinal(self)!r})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def from_int(n: int) -> Ordinal:
    if n < 0:
        raise ValueError("ordinals are non-negative")
    return ZERO if n == 0 else Ordinal(((ZERO, n),))


def compare(a: Ordinal, b: Ordinal) -> int:
    """Total order on canonical forms: -1, 0 or 1.

    Lexicographic on the term lists, comparing exponents before
    coefficients; a proper prefix is smaller.
    """
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c != 0:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal sum a + b; terms of a below the leading exponent of b are absorbed."""
    if b.is_zero:
        return a
    if a.is_zero:
        return b
    lead = b.terms[0][0]
    cut = 0
    while cut < len(a.terms) and compare(a.terms[cut][0], lead) > 0:
        cut += 1
    if cut < len(a.terms) and compare(a.terms[cut][0], lead) == 0:
        merged = (lead, a.terms[cut][1] + b.terms[0][1])
        return Ordinal(a.terms[:cut] + (merged,) + b.terms[1:])
    return Ordinal(a.terms[:cut] + b.terms)


def omega_power(e: Ordinal) -> Ordinal:
    """w^e as a single-term canonical ordinal (w^0 = 1)."""
    return Ordinal(((e, 1),))


def last_exponent(a: Ordinal) -> Ordinal:
    """The exponent of the final, smallest term; 0 for input 0.

    This is the map sending alpha + w^beta to beta, which decides which
    coordinate sequences are worlds of the universal model.
    """
    if a.is_zero:
        return ZERO
    return a.terms[-1][0]


def hyperexp(n: int, x: Ordinal) -> Ordinal:
    """n-fold iterate of the shifted exponential x -> -1 + w^x.

    The base map sends 0 to 0 (the "-1 +" cancels w^0 = 1) and any x > 0 to
    w^x, which is then already additively indecomposable.
    """
    if n < 0:
        raise ValueError("iteration count must be a natural number")
    for _ in range(n):
        x = ZERO if x.is_zero else omega_power(x)
    return x


def check_invariants(a: Ordinal) -> None:
    """Deep re-validation used by the test suite; raises on any violation."""
    if not isinstance(a, Ordinal):
        raise TypeError(f"{a!r} is not an Ordinal")
    for i, (exponent, coefficient) in enumerate(a.terms):
        check_invariants(exponent)
        if not isinstance(coefficient, int) or coefficient < 1:
            raise ValueError(f"bad coefficient {coefficient!r} in {a!r}")
        if i > 0 and compare(a.terms[i - 1][0], exponent) <= 0:
            raise ValueError(f"exponents not strictly decreasing in {a!r}")


# --- text form ---------------------------------------------------------
#
# ordinal ::= "0" | term ("+" term)*
# term    ::= atom ("*" nat)?
# atom    ::= nat | "w" | "w^" factor
# factor  ::= atom | "(" ordinal ")"
#
# nat is a nonzero decimal; terms must already be in decreasing exponent
# order (non-canonical spellings are rejected, not normalized).


def parse_ordinal(text: str) -> Ordinal:
    cur = Cursor(text.strip())
    value = _parse_ordinal(cur)
    cur.expect_end()
    return value


def _parse_ordinal(cur: Cursor) -> Ordinal:
    if cur.peek() == "0":
        mark = cur.pos
        cur.pos += 1
        if cur.peek().isdigit():
            raise ParseError("numbers may not have leading zeros", mark)
        return ZERO
    parsed = [_parse_term(cur)]
    while cur.try_eat("+"):
        parsed.append(_parse_term(cur))
    result = Ordinal((parsed[0][0],))
    for term, pos in parsed[1:]:
        if compare(term[0], result.terms[-1][0]) >= 0:
            raise ParseError("non-canonical form: exponents must strictly decrease", pos)
        result = Ordinal(result.terms + (term,))
    return result


def _parse_term(cur: Cursor) -> tuple[tuple[Ordinal, int], int]:
    pos = cur.pos
    atom, is_numeral = _parse_atom(cur)
    if cur.try_eat("*") or cur.try_eat("·"):
        if is_numeral:
            raise ParseError("a coefficient may only follow a w-power", cur.pos - 1)
        coefficient = _nonzero_nat(cur)
        return ((atom, coefficient), pos)
    if is_numeral:
        # a bare numeral n is the term w^0 * n
        return ((ZERO, atom), pos)
    return ((atom, 1), pos)


def _parse_atom(cur: Cursor):
    """Returns (exponent Ordinal, False) for a w-power, or (int, True) for a numeral."""
    if cur.peek().isdigit():
        return _nonzero_nat(cur), True
    if cur.try_eat("w") or cur.try_eat("ω"):
        if cur.try_eat("^"):
            return _parse_factor(cur), False
        return ONE, False
    raise cur.error("expected a term (number, 'w' or 'w^...')")


def _parse_factor(cur: Cursor) -> Ordinal:
    if cur.try_eat("("):
        inner = _parse_ordinal(cur)
        cur.expect(")")
        return inner
    atom, is_numeral = _parse_atom(cur)
    if is_numeral:
        return from_int(atom)
    return omega_power(atom)


def _nonzero_nat(cur: Cursor) -> int:
    pos = cur.pos
    value = cur.natural()
    if value == 0:
        raise ParseError("zero is not allowed here", pos)
    if cur.text[pos] == "0":
        raise ParseError("numbers may not have leading zeros", pos)
    return value


def print_ordinal(a: Ordinal, unicode: bool = False) -> str:
    """Grammar text for a canonical ordinal; round-trips through parse_ordinal.

    With unicode=True emits the omega and middle-dot glyphs instead of the
    ASCII 'w' and '*'.
    """
    if a.is_zero:
        return "0"
    w = "ω" if unicode else "w"
    dot = "·" if unicode else "*"
    parts = []
    for exponent, coefficient in a.terms:
        if exponent.is_zero:
            parts.append(str(coefficient))
            continue
        if exponent == ONE:
            base = w
        else:
            inner = print_ordinal(exponent, unicode)
            base = f"{w}^{inner}" if _is_atom(exponent) else f"{w}^({inner})"
        parts.append(base if coefficient == 1 else f"{base}{dot}{coefficient}")
    return "+".join(parts)


def _is_atom(e: Ordinal) -> bool:
    # printable without parentheses in exponent position
    if e.is_finite:
        return True
    return len(e.terms) == 1 and e.terms[0][1] == 1
