import random

import pytest

from cyclo4 import f2


def test_known_small_irreducibles():
    assert f2.is_irreducible(0b111)          # X^2 + X + 1
    assert f2.is_irreducible(0b1011)         # X^3 + X + 1
    assert not f2.is_irreducible(0b101)      # X^2 + 1 = (X + 1)^2
    assert not f2.is_irreducible(0b110)      # X(X + 1)
    assert f2.is_irreducible(0b10)           # X
    assert f2.is_irreducible(0b11)           # X + 1
    assert not f2.is_irreducible(1)          # constants are units


def test_rabin_agrees_beyond_trial_division_threshold():
    # X^17 + X^3 + 1 is a classic irreducible trinomial; its square is not.
    h = (1 << 17) | (1 << 3) | 1
    assert f2.is_irreducible(h)
    assert not f2.is_irreducible(f2.mul(h, h))
    assert not f2.is_irreducible(f2.mul(h, 0b111))


def test_table_matches_fresh_ordered_search():
    # Re-derive the canonical entries from scratch for small degrees.
    for r in range(1, 19):
        if r == 1:
            assert f2.lex_smallest_irreducible(1) == 2
            continue
        found = None
        for low in range(1 << r):
            h = (1 << r) | low
            if f2.is_irreducible(h):
                found = h
                break
        assert f2.lex_smallest_irreducible(r) == found


def test_table_entries_have_right_degree_and_are_irreducible():
    for r, h in f2._LEX_SMALLEST.items():
        assert f2.degree(h) == r
        if r <= 64:
            assert f2.is_irreducible(h)


def test_search_fallback_off_table():
    # degree 65 is not in the table; the ordered search must produce it
    h = f2.lex_smallest_irreducible(65)
    assert f2.degree(h) == 65
    assert f2.is_irreducible(h)


def test_inverse_mod_round_trips():
    rng = random.Random(5)
    m = f2.lex_smallest_irreducible(11)
    for _ in range(100):
        a = rng.randrange(1, 1 << 11)
        inv = f2.inverse_mod(a, m)
        assert f2.mulmod(a, inv, m) == 1


def test_inverse_of_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        f2.inverse_mod(0, 0b111)
