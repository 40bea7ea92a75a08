import pytest
import sympy
from hypothesis import given, settings, strategies as st

from quiveratlas.quiver import Arrow, Quiver, QuiverPresentation, make_AA, make_B8, make_EE6
from quiveratlas.reptype import (BudgetExceeded, TitsForm, binary_dim_vectors, census, census_many,
                                 finite_type_check, is_psd, radical_lattice, tits_form)

import oracles

# the displayed form: sum x_i^2 - x1x2 - x2x3 - x3x4 - x4x5 - x3x6 - x2x7 - x4x8 + x1x7 + x5x8
B8_TERMS = {(1, 2): -1, (2, 3): -1, (3, 4): -1, (4, 5): -1, (3, 6): -1, (2, 7): -1, (4, 8): -1,
            (1, 7): 1, (5, 8): 1}


def test_b8_form_term_by_term():
    q = tits_form(make_B8())
    for i in range(1, 9):
        assert q.coefficient(i, i) == 1
    for i in range(1, 9):
        for j in range(i + 1, 9):
            assert q.coefficient(i, j) == B8_TERMS.get((i, j), 0), (i, j)


def test_b8_psd_and_radical():
    q = tits_form(make_B8())
    assert is_psd(q)
    assert radical_lattice(q) == [[1, 3, 4, 3, 1, 2, 1, 1]]
    # oracle: sympy's eigen-free PSD test and rational nullspace
    G = sympy.Matrix(q.gram())
    assert G.is_positive_semidefinite
    ns = G.nullspace()
    assert len(ns) == 1 and list(ns[0] / ns[0][0]) == [1, 3, 4, 3, 1, 2, 1, 1]


def test_small_forms():
    empty = QuiverPresentation(Quiver([1, 2, 3], []))
    q = tits_form(empty)
    assert q.coeffs == {(0, 0): 1, (1, 1): 1, (2, 2): 1}
    assert is_psd(q) and radical_lattice(q) == []
    bad = TitsForm([1, 2], {(0, 0): 1, (0, 1): -3, (1, 1): 1})
    assert bad((1, 1)) == -1 and not is_psd(bad)


def test_aa2_form():
    # the 2-cycle relations go from a vertex back to itself and add x_1^2 and x_2^2
    q = tits_form(make_AA(2))
    assert q.coeffs == {(0, 0): 2, (0, 1): -2, (1, 1): 2}
    assert str(q) == "2*x1^2 - 2*x1*x2 + 2*x2^2"


def test_ee6_form_matches_hand_count():
    q = tits_form(make_EE6())
    # 6 squares, 10 arrows, 14 relations
    assert q((1,) * 6) == 6 - 10 + 14
    g = q.gram()
    assert sum(sum(r) for r in g) == 2 * q((1,) * 6)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3).filter(any))
def test_psd_against_sympy(c):
    form = TitsForm([1, 2], {(0, 0): c[0], (0, 1): c[1], (1, 1): c[2]})
    assert is_psd(form) == sympy.Matrix(form.gram()).is_positive_semidefinite


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=6, max_size=6))
def test_psd_3x3_against_sympy(c):
    form = TitsForm([1, 2, 3], {(0, 0): c[0], (0, 1): c[1], (0, 2): c[2], (1, 1): c[3],
                                (1, 2): c[4], (2, 2): c[5]})
    G = sympy.Matrix(form.gram())
    assert is_psd(form) == G.is_positive_semidefinite
    rad = radical_lattice(form)
    assert len(rad) == len(G.nullspace())
    for v in rad:
        assert all(x == 0 for x in G * sympy.Matrix(v))


def test_census_aa2_spot():
    r = census(make_AA(2), (1, 1), 2)
    assert (r.count, r.total_classes, r.assignments) == (2, 3, 3)
    assert census(make_AA(1), (1,), 2).total_classes == 1


@pytest.mark.parametrize("n,p,classes,indec", [(2, 2, 5, 4), (3, 2, 19, 11), (3, 3, 19, 11),
                                               (4, 2, 67, 26)])
def test_binary_census_frozen(n, p, classes, indec):
    # frozen from the brute-force orbit oracle (see test_binary_census_oracle)
    reports = census_many(make_AA(n), binary_dim_vectors(n), p)
    assert sum(r.total_classes for r in reports) == classes
    assert sum(r.count for r in reports) == indec


@pytest.mark.parametrize("n,p", [(2, 2), (3, 2), (3, 3)])
def test_binary_census_oracle(n, p):
    verts, arrows, rels = oracles.doubled_chain(n)
    for d in binary_dim_vectors(n):
        r = census(make_AA(n), d, p)
        assert (r.total_classes, r.count) == oracles.census(verts, arrows, rels,
                                                            dict(zip(verts, d)), p)


@pytest.mark.parametrize("dims", [(2, 1), (1, 2), (2, 2)])
def test_higher_dims_oracle(dims):
    verts, arrows, rels = oracles.doubled_chain(2)
    r = census(make_AA(2), dims, 2)
    assert (r.total_classes, r.count) == oracles.census(verts, arrows, rels,
                                                        dict(zip(verts, dims)), 2)


def test_non_chain_oracle():
    # three arrows into a 2-dimensional vertex (a D4 orientation), over F_2
    q = Quiver([1, 2, 3, 4], [Arrow("x", 1, 4), Arrow("y", 2, 4), Arrow("z", 3, 4)])
    pres = QuiverPresentation(q)
    arrows = {a.id: (a.tail, a.head) for a in q.arrows}
    for dims in ((1, 1, 1, 2), (1, 1, 0, 1)):
        r = census(pres, dims, 2)
        want = oracles.census([1, 2, 3, 4], arrows, [], dict(zip([1, 2, 3, 4], dims)), 2)
        assert (r.total_classes, r.count) == want


def test_strategies_agree():
    # GL_1(F_2) is trivial: each of the 3 x 3 valid edge states is its own class
    for strategy in ("ranks", "reversed", "none"):
        r = census(make_AA(3), (1, 1, 1), 2, strategy=strategy)
        assert (r.total_classes, r.count) == (9, 4)
    with pytest.raises(ValueError):
        census(make_AA(2), (1, 1), 2, strategy="bogus")


def test_census_deterministic_and_parallel():
    a = census_many(make_AA(3), binary_dim_vectors(3), 2)
    b = census_many(make_AA(3), binary_dim_vectors(3), 2, workers=2)
    assert [r.lines() for r in a] == [r.lines() for r in b]


def test_census_errors():
    with pytest.raises(ValueError):
        census(make_AA(2), (1, 1), 4)
    with pytest.raises(BudgetExceeded):
        census(make_AA(3), (3, 3, 3), 2)


@pytest.mark.parametrize("n,p", [(2, 2), (3, 2), (3, 3)])
def test_finite_type_check(n, p):
    r = finite_type_check(n, p)
    assert r.ok and r.indecomposables == sum((n - l) * 2 ** l for l in range(n))
