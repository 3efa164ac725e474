import random
from fractions import Fraction

import pytest

from tarski.intervals import (
    INF,
    Interval,
    closed,
    constraints_of,
    finite,
    format_interval,
    full_line,
    intersect,
    is_empty,
    mem,
    midpoint,
    open_,
    parse_interval,
    split,
    subint,
)


def F(a, b=1):
    return Fraction(a, b)


def rand_interval(rng):
    lo = INF if rng.random() < 0.2 else finite(F(rng.randint(-6, 6), rng.randint(1, 4)),
                                               rng.random() < 0.5)
    hi = INF if rng.random() < 0.2 else finite(F(rng.randint(-6, 6), rng.randint(1, 4)),
                                               rng.random() < 0.5)
    return Interval(lo, hi)


def sample_points(rng, n=9):
    return [F(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(n)]


def test_mem_endpoints():
    i = closed(F(0), F(1))
    assert mem(F(0), i) and mem(F(1), i) and mem(F(1, 2), i)
    j = open_(F(0), F(1))
    assert not mem(F(0), j) and not mem(F(1), j) and mem(F(1, 2), j)
    assert mem(F(10 ** 9), full_line())


def test_is_empty():
    assert is_empty(open_(F(1), F(1)))
    assert is_empty(closed(F(2), F(1)))
    assert not is_empty(closed(F(1), F(1)))
    assert not is_empty(full_line())


def test_subint_examples():
    assert subint(open_(F(0), F(1)), closed(F(0), F(1)))
    assert not subint(closed(F(0), F(1)), open_(F(0), F(1)))
    assert subint(open_(F(1), F(1)), open_(F(5), F(6)))  # empty into anything
    assert subint(closed(F(0), F(1)), full_line())
    assert not subint(full_line(), closed(F(0), F(1)))


def test_subint_matches_pointwise_membership():
    rng = random.Random(7)
    for _ in range(300):
        i1, i2 = rand_interval(rng), rand_interval(rng)
        if subint(i1, i2):
            for x in sample_points(rng):
                assert not mem(x, i1) or mem(x, i2)


def test_intersect_is_pointwise_conjunction():
    rng = random.Random(8)
    for _ in range(300):
        i1, i2 = rand_interval(rng), rand_interval(rng)
        both = intersect(i1, i2)
        pts = sample_points(rng)
        for b in (i1.lo, i1.hi, i2.lo, i2.hi):
            if not b.infinite:
                pts.append(b.value)
        for x in pts:
            assert mem(x, both) == (mem(x, i1) and mem(x, i2))


def test_midpoint_and_split():
    i = open_(F(0), F(1))
    assert midpoint(i) == F(1, 2)
    left, right = split(i)
    assert mem(F(1, 2), left) and not mem(F(1, 2), right)
    rng = random.Random(9)
    for _ in range(100):
        a = F(rng.randint(-6, 6), rng.randint(1, 4))
        b = a + F(rng.randint(1, 5), rng.randint(1, 4))
        i = Interval(finite(a, rng.random() < 0.5), finite(b, rng.random() < 0.5))
        left, right = split(i)
        for x in sample_points(rng) + [a, b, midpoint(i)]:
            assert mem(x, i) == (mem(x, left) or mem(x, right))
            assert not (mem(x, left) and mem(x, right))


def test_midpoint_requires_finite_proper_bounds():
    with pytest.raises(ValueError):
        midpoint(full_line())
    with pytest.raises(ValueError):
        midpoint(closed(F(1), F(1)))


def test_constraints_of_matches_membership():
    rng = random.Random(10)
    ops = {">": lambda x, b: x > b, ">=": lambda x, b: x >= b,
           "<": lambda x, b: x < b, "<=": lambda x, b: x <= b}
    for _ in range(200):
        i = rand_interval(rng)
        for x in sample_points(rng, 5):
            holds = all(ops[op](x, b) for op, b in constraints_of(x, i))
            assert holds == mem(x, i)


def test_format_interval_notation():
    assert format_interval(closed(F(0), F(1))) == "[0,1]"
    assert format_interval(open_(F(-1, 2), F(3))) == "]-1/2,3["
    assert format_interval(full_line()) == "]-oo,+oo["


def test_parse_format_round_trip():
    rng = random.Random(11)
    for _ in range(200):
        i = rand_interval(rng)
        assert parse_interval(format_interval(i)) == i


def test_parse_interval_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_interval("(0,1)")
    with pytest.raises(ValueError):
        parse_interval("[-oo,3]")
    with pytest.raises(ValueError):
        parse_interval("[1 2]")
