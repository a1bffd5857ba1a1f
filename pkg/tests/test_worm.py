import itertools
from collections import defaultdict
from functools import cmp_to_key

import pytest
from hypothesis import given, settings

import samples
from wormcalc.ordinal import OMEGA, ONE, ZERO, add, compare, hyperexp, parse_ordinal
from wormcalc.parsing import ParseError
from wormcalc.worm import (
    TOP,
    Worm,
    compare_worms,
    concat,
    head,
    in_worms,
    ordinal_of,
    parse_worm,
    print_worm,
    promote,
    remainder,
    worm_of_ordinal,
)


def test_head_examples():
    assert head(parse_worm("0.1"), 1) == TOP
    assert head(parse_worm("2.1.0.3"), 1) == parse_worm("2.1")
    for a in samples.all_worms(4, 3):
        assert head(a, 0) == a


def test_remainder_examples():
    assert remainder(parse_worm("0.1"), 1) == parse_worm("0.1")
    assert remainder(parse_worm("2.1.0.3"), 1) == parse_worm("0.3")
    assert remainder(TOP, 7) == TOP


def test_promote_examples():
    assert promote(parse_worm("0.1.0"), 1) == parse_worm("1.2.1")
    assert promote(parse_worm("2"), 0) == parse_worm("2")
    assert promote(TOP, 2) == TOP


def test_rank_examples():
    assert ordinal_of(TOP) == ZERO
    assert ordinal_of(parse_worm("1.0.1")) == parse_ordinal("w*2")
    assert ordinal_of(parse_worm("0.1")) == parse_ordinal("w+1")
    assert ordinal_of(parse_worm("2")) == parse_ordinal("w^w")


def test_rank_at_level_examples():
    assert ordinal_of(parse_worm("2"), level=1) == OMEGA
    assert ordinal_of(parse_worm("2"), level=2) == ONE
    assert ordinal_of(parse_worm("1.0.1"), level=1) == ONE


def test_compare_examples():
    assert compare_worms(parse_worm("0.1"), parse_worm("1.0.1")) == -1
    for a in samples.all_worms(3, 3):
        assert compare_worms(a, a, 2) == 0
    assert compare_worms(parse_worm("1"), parse_worm("2"), level=1) == -1


def test_worm_of_ordinal_examples():
    assert worm_of_ordinal(ZERO) == TOP
    w2 = worm_of_ordinal(parse_ordinal("w*2"))
    assert ordinal_of(w2) == parse_ordinal("w*2")
    assert w2 == parse_worm("1.0.1")
    ww = worm_of_ordinal(parse_ordinal("w^w"))
    assert ordinal_of(ww) == parse_ordinal("w^w")
    assert ww == parse_worm("2")


def test_parse_print():
    assert parse_worm("T") == TOP
    assert parse_worm("2.1.0.3") == Worm((2, 1, 0, 3))
    assert parse_worm("<2><1>T") == Worm((2, 1))
    assert parse_worm("10.2") == Worm((10, 2))
    assert print_worm(Worm((2, 1))) == "2.1"
    assert print_worm(Worm((2, 1)), diamonds=True) == "<2><1>T"
    assert print_worm(TOP) == "T"
    assert print_worm(TOP, diamonds=True) == "T"
    for text in ["", "2.", ".1", "2..1", "<1>", "T.1", "<01>T", "02"]:
        with pytest.raises(ParseError):
            parse_worm(text)


def test_membership_predicate():
    assert in_worms(TOP, 9)
    assert in_worms(parse_worm("2.1"), 1)
    assert not in_worms(parse_worm("2.1.0.3"), 1)


def test_concatenation_identity():
    for a in samples.all_worms(5, 3):
        for n in range(5):
            assert concat(head(a, n), remainder(a, n)) == a
            r = remainder(a, n)
            assert r.is_empty or r.letters[0] < n
            assert in_worms(head(a, n), n)


def test_split_independence_exhaustive():
    # rank computed by splitting at any zero must agree with the leftmost split
    for a in samples.all_worms(6, 3):
        value = ordinal_of(a)
        for i, letter in enumerate(a.letters):
            if letter == 0:
                split = add(
                    add(ordinal_of(Worm(a.letters[i + 1 :])), ONE),
                    ordinal_of(Worm(a.letters[:i])),
                )
                assert split == value, (a, i)


def test_order_isomorphism_shadow_small():
    pool = samples.all_worms(5, 3)
    ranks = {a: ordinal_of(a) for a in pool}
    fibers = defaultdict(list)
    for a in pool:
        fibers[ranks[a]].append(a)
    # equal classes are exactly the rank fibers
    for a, b in itertools.product(samples.all_worms(3, 3), repeat=2):
        assert (compare_worms(a, b) == 0) == (ranks[a] == ranks[b])
    # ranks are totally ordered consistently
    distinct = sorted(fibers, key=cmp_to_key(compare))
    for i in range(len(distinct) - 1):
        assert compare(distinct[i], distinct[i + 1]) == -1


def test_promotion_law():
    for a in samples.all_worms(5, 3):
        for n in range(4):
            assert ordinal_of(promote(a, n)) == hyperexp(n, ordinal_of(a))


def test_round_trip_through_ordinals():
    image = {ordinal_of(a) for a in samples.all_worms(5, 3)}
    for x in image:
        for n in range(4):
            assert ordinal_of(worm_of_ordinal(x, n), n) == x
    for x in samples.ordinal_sample():
        assert ordinal_of(worm_of_ordinal(x)) == x


def test_worm_of_ordinal_lands_in_level():
    for x in samples.ordinal_sample()[:60]:
        for n in range(4):
            assert in_worms(worm_of_ordinal(x, n), n)


def test_head_drop():
    for a in samples.all_worms(4, 3):
        for n in range(4):
            for m in range(n + 1):
                assert ordinal_of(a, n) == ordinal_of(head(a, m), n)


def test_compare_factors_through_head():
    for a in samples.all_worms(4, 2):
        for n in range(3):
            assert compare_worms(a, head(a, n), n) == 0


@given(samples.worms(), samples.worms())
@settings(max_examples=200)
def test_prefixing_never_lowers_rank(a, b):
    assert compare(ordinal_of(concat(b, a)), ordinal_of(a)) >= 0


@given(samples.worms())
@settings(max_examples=200)
def test_text_round_trip_random(a):
    assert parse_worm(print_worm(a)) == a
    assert parse_worm(print_worm(a, diamonds=True)) == a
