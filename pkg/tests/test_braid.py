"""Braid words, twists and the family builders."""
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hzknot.braid import (BraidError, BraidWord, FamilyIndex, concat,
                          family_braid, full_twist, jm_twist, jm_twist_e,
                          parse_braid, torus_braid)


def test_letter_validation():
    with pytest.raises(BraidError):
        BraidWord(3, (3,))
    with pytest.raises(BraidError):
        BraidWord(3, (0,))
    with pytest.raises(BraidError):
        BraidWord(0, ())


def test_concat():
    a = BraidWord(2, (1,))
    assert concat(a, a).letters == (1, 1) and concat(a, a).writhe == 2
    b3 = concat(torus_braid(3, 1), full_twist(3))
    assert b3.letters == (2, 1) + (2, 1) * 3
    assert b3.writhe == 8 and b3.is_knot()  # closure T(3,4)
    c = concat(torus_braid(3, 1), full_twist(2, strands=3))
    assert c.letters == (2, 1, 1, 1) and c.writhe == 4
    with pytest.raises(BraidError):
        concat(a, BraidWord(3, (1,)))


def test_full_twist():
    assert full_twist(2).letters == (1, 1) and full_twist(2).writhe == 2
    assert full_twist(3).letters == (2, 1) * 3 and full_twist(3).writhe == 6
    assert full_twist(5).letters == (4, 3, 2, 1) * 5 and full_twist(5).writhe == 20
    assert full_twist(3, power=-1).letters == (-1, -2) * 3


def test_jm_twist():
    assert jm_twist(3).letters == (2, 1, 1, 2)
    assert jm_twist(4).letters == (3, 2, 1, 1, 2, 3) and jm_twist(4).writhe == 6
    assert jm_twist(2).letters == (1, 1)
    assert jm_twist_e(3).letters == (1, 2, 2, 1)
    assert jm_twist_e(4).letters == (1, 2, 3, 3, 2, 1)


def test_torus_braid():
    assert torus_braid(2, 3).letters == (1, 1, 1)
    t32 = torus_braid(3, 2)
    assert t32.letters == (2, 1, 2, 1) and t32.writhe == 4 and t32.is_knot()
    assert torus_braid(3, 0).letters == () and torus_braid(3, 0).component_count() == 3
    assert torus_braid(2, -3).letters == (-1, -1, -1)


@given(st.integers(2, 5), st.integers(-9, 9))
def test_torus_components_gcd(m, n):
    if n == 0:
        return
    assert torus_braid(m, n).component_count() == math.gcd(m, n)


def test_component_count():
    assert BraidWord(2, (1, 1, 1)).component_count() == 1
    assert BraidWord(3, ()).component_count() == 3
    assert full_twist(3).component_count() == 3


def test_family_braid():
    b = family_braid(FamilyIndex(3, 0, 0, 1))
    assert b.letters == (2, 1) + (2, 1) * 3 and b.writhe == 8  # T(3,4)
    assert family_braid(FamilyIndex(4, -2, 0, 1)).writhe == 3 * (1 + 4 - 4)
    u = family_braid(FamilyIndex(5, 0, 0, 0))
    assert u.letters == (4, 3, 2, 1) and u.writhe == 4 and u.is_knot()


@given(st.integers(3, 6), st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_family_writhe_formula(m, j, k, l):
    idx = FamilyIndex(m, j, k, l)
    b = family_braid(idx)
    assert b.writhe == (m - 1) * (1 + l * m + 2 * k + (m - 2) * j)


@given(st.integers(2, 5), st.lists(st.integers(-4, 4).filter(bool), max_size=8))
def test_parse_render_roundtrip(m, letters):
    letters = [x for x in letters if abs(x) < m]
    b = BraidWord(m, tuple(letters))
    assert parse_braid(str(b), m) == b
    assert BraidWord.from_json(b.to_json()) == b


def test_mirror_and_inverse():
    b = BraidWord(3, (1, -2, 1))
    assert b.mirror().letters == (-1, 2, -1)
    assert b.inverse().letters == (-1, 2, -1)
    assert BraidWord(3, (1, 2)).inverse().letters == (-2, -1)


def test_writhe_additive():
    a = BraidWord(3, (1, -2, -2))
    b = BraidWord(3, (2, 2, 1, 1))
    assert concat(a, b).writhe == a.writhe + b.writhe
