from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from quiveratlas import linalg as la
from quiveratlas.linalg import GF, QQ, field_from_tag


def test_field_tags():
    assert field_from_tag("Q") is QQ
    assert field_from_tag("Fp:5") is GF(5)
    with pytest.raises(ValueError):
        field_from_tag("R")
    with pytest.raises(ValueError):
        GF(4)


def test_prime_field_coercion():
    F = GF(7)
    assert F(Fraction(1, 2)) == 4
    assert F("3/2") == 5
    assert F(-1) == 6
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 7))


def test_rank_nullspace_small():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    m = [[Fraction(x) for x in r] for r in m]
    assert la.rank(QQ, m) == 2
    ns = la.nullspace(QQ, m)
    assert len(ns) == 1
    v = ns[0]
    assert all(sum(r[j] * v[j] for j in range(3)) == 0 for r in m)


def test_rank_mod_p_differs():
    m = [[1, 1], [1, 3]]
    assert la.rank(QQ, [[Fraction(x) for x in r] for r in m]) == 2
    assert la.rank(GF(2), m) == 1


def test_inverse_and_det():
    m = [[Fraction(x) for x in r] for r in [[2, 1], [7, 4]]]
    assert la.det(QQ, m) == 1
    inv = la.inverse(QQ, m)
    assert la.matmul(QQ, m, inv) == la.identity(QQ, 2)


def test_integer_kernel_is_primitive():
    # kernel of (2 4 6) over Z
    ker = la.integer_kernel([[2, 4, 6]], 3)
    assert len(ker) == 2
    assert all(2 * a + 4 * b + 6 * c == 0 for a, b, c in ker)
    # saturated lattice: the 2x2 minors have gcd one
    M = sympy.Matrix(ker)
    g =sympy.gcd_list([M[:, [0, 1]].det(), M[:, [0, 2]].det(), M[:, [1, 2]].det()])
    assert abs(g) == 1


small = st.integers(min_value=-4, max_value=4)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_matches_sympy(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    assert la.rank(QQ, m) == sympy.Matrix(rows).rank()


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=3))
def test_nullspace_dimension(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    ns = la.nullspace(QQ, m, 3)
    assert len(ns) == 3 - la.rank(QQ, m)
    for v in ns:
        assert all(sum(r[j] * v[j] for j in range(3)) == 0 for r in m)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_det_matches_sympy(rows):
    assert la.det(QQ, [[Fraction(x) for x in r] for r in rows]) == sympy.Matrix(rows).det()
