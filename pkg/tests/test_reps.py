from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from quiveratlas.linalg import GF, QQ
from quiveratlas.quiver import Arrow, Quiver, QuiverPresentation, make_AA, make_EE6
from quiveratlas.reps import (Rep, StringSpec, UndeterminedError, all_string_specs, classify_AA,
                              decompose, direct_sum, dual_rep, end_algebra, hom_dim,
                              indecomposability, is_indecomposable, is_intertwiner, is_isomorphic,
                              simple_rep, string_module, validate_rep, weight_chain_rep, zero_rep)

import oracles


def test_paper_example_string():
    V = string_module(StringSpec(6, 2, 5, "+-+"))
    assert validate_rep(V).ok
    assert V.dim_vector == (0, 1, 1, 1, 1, 0)
    one, zero = [[Fraction(1)]], [[Fraction(0)]]
    assert (V.matrix("a2"), V.matrix("b2")) == (one, zero)
    assert (V.matrix("a3"), V.matrix("b3")) == (zero, one)
    assert (V.matrix("a4"), V.matrix("b4")) == (one, zero)
    # maps into or out of the zero spaces at the ends are empty
    assert V.matrix("a1") == [[]] and V.matrix("b1") == []
    assert classify_AA(V) == [StringSpec(6, 2, 5, "+-+")]


def test_validate():
    aa2 = make_AA(2)
    bad = Rep(aa2, (1, 1), {"a1": [[1]], "b1": [[1]]})
    report = validate_rep(bad)
    assert not report.ok and report.violated.arrows in (("a1", "b1"), ("b1", "a1"))
    assert validate_rep(zero_rep(make_EE6(), (2, 1, 3, 1, 2, 2))).ok


def test_shape_errors():
    with pytest.raises(ValueError):
        Rep(make_AA(2), (1, 2), {"a1": [[1]]})
    with pytest.raises(ValueError):
        Rep(make_AA(2), (1, 1), {"zz": [[1]]})
    with pytest.raises(ValueError):
        Rep(make_AA(2), (-1, 1))


def test_small_strings():
    assert string_module(StringSpec(3, 2, 2, "")) == simple_rep(make_AA(3), 2)
    V = string_module(StringSpec(2, 1, 2, "+"))
    assert V.matrix("a1") == [[1]] and V.matrix("b1") == [[0]]
    with pytest.raises(ValueError):
        StringSpec(3, 2, 1, "")
    with pytest.raises(ValueError):
        StringSpec(3, 1, 2, "++")


def test_string_counts():
    # sum over intervals of 2^(j-i)
    for n in range(1, 7):
        assert len(all_string_specs(n)) == sum((n - l) * 2 ** l for l in range(n))


def test_end_dims():
    S = simple_rep(make_AA(3), 1)
    assert len(end_algebra(S)) == 1
    assert len(end_algebra(string_module(StringSpec(3, 1, 3, "++")))) == 1
    assert len(end_algebra(direct_sum([S, S]))) == 4
    basis = end_algebra(direct_sum([S, S]))
    assert all(is_intertwiner(direct_sum([S, S]), direct_sum([S, S]), phi) for phi in basis)


def test_indecomposable_examples():
    aa2 = make_AA(2)
    assert not is_indecomposable(direct_sum([simple_rep(aa2, 1), simple_rep(aa2, 2)]))
    assert not is_indecomposable(Rep(aa2, (1, 1)))
    with pytest.raises(ValueError):
        is_indecomposable(zero_rep(aa2, (0, 0)))
    for s in all_string_specs(4):
        assert is_indecomposable(string_module(s))


def test_rational_only_raises():
    # Kronecker pair (I, rotation by 90 degrees): End is Q(i), so V does not split over Q
    # but would over C
    kron = QuiverPresentation(Quiver([1, 2], [Arrow("a", 1, 2), Arrow("b", 1, 2)]))
    V = Rep(kron, (2, 2), {"a": [[1, 0], [0, 1]], "b": [[0, -1], [1, 0]]})
    assert len(end_algebra(V)) == 2
    assert indecomposability(V) == "rational-only"
    with pytest.raises(UndeterminedError):
        is_indecomposable(V)
    # rotation by a rational eigenvalue pair splits
    W = Rep(kron, (2, 2), {"a": [[1, 0], [0, 1]], "b": [[0, 1], [1, 0]]})
    assert indecomposability(W) == "decomposable"
    # over F_5, i exists and the same pair splits
    assert indecomposability(Rep(kron, (2, 2), V.maps, GF(5))) == "decomposable"
    assert indecomposability(Rep(kron, (2, 2), V.maps, GF(3))) == "indecomposable"


def test_decompose_examples():
    aa2 = make_AA(2)
    dec = decompose(Rep(aa2, (1, 1)))
    assert sorted(s.dim_vector for s in dec.summands) == [(0, 1), (1, 0)]
    plus = string_module(StringSpec(2, 1, 2, "+"))
    minus = string_module(StringSpec(2, 1, 2, "-"))
    assert classify_AA(direct_sum([plus, minus])) == [StringSpec(2, 1, 2, "+"),
                                                       StringSpec(2, 1, 2, "-")]
    assert classify_AA(Rep(make_AA(4), (1, 1, 1, 1))) == [StringSpec(4, k, k, "") for k in range(1, 5)]


def test_isomorphism_examples():
    plus = string_module(StringSpec(2, 1, 2, "+"))
    minus = string_module(StringSpec(2, 1, 2, "-"))
    assert is_isomorphic(plus, plus)
    assert hom_dim(plus, minus) == 1 and hom_dim(minus, plus) == 1
    assert not is_isomorphic(plus, minus)
    s12 = direct_sum([simple_rep(make_AA(2), 1), simple_rep(make_AA(2), 2)])
    assert not is_isomorphic(s12, plus)
    # a base change keeps the class
    V = Rep(make_AA(2), (2, 1), {"a1": [[1, 0]], "b1": [[0], [0]]})
    W = Rep(make_AA(2), (2, 1), {"a1": [[1, 1]], "b1": [[0], [0]]})
    assert is_isomorphic(V, W)


def test_strings_pairwise_distinct():
    for n in range(1, 4):
        mods = [string_module(s) for s in all_string_specs(n)]
        assert all(not is_isomorphic(a, b) for a, b in combinations(mods, 2))


def test_dual_swaps_signs():
    V = string_module(StringSpec(4, 1, 4, "+-+"))
    D = dual_rep(V)
    assert classify_AA(D) == [StringSpec(4, 1, 4, "-+-")]


def test_weight_chain():
    V = weight_chain_rep((1, 1, 1), (1, 1), (0, 0))
    assert validate_rep(V).ok
    assert classify_AA(V) == [StringSpec(3, 1, 3, "++")]
    Z = weight_chain_rep((0, 0, 0), ([], []), ([], []))
    assert Z.total_dim == 0
    with pytest.raises(ValueError):
        weight_chain_rep((1, 1), (1,), (1,))


def test_weight_chain_general_n():
    # n x n determinant: n+1 one-dimensional weight spaces, f raises and f* kills
    for n in range(1, 6):
        V = weight_chain_rep([1] * (n + 1), [1] * n, [0] * n)
        assert classify_AA(V) == [StringSpec(n + 1, 1, n + 1, "+" * n)]


def _random_aa3_rep(data):
    vals = st.integers(min_value=0, max_value=1)
    a1, b1, a2, b2 = (data.draw(vals) for _ in range(4))
    if a1 and b1:
        b1 = 0
    if a2 and b2:
        b2 = 0
    return Rep(make_AA(3), (1, 1, 1), {"a1": [[a1]], "b1": [[b1]], "a2": [[a2]], "b2": [[b2]]})


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_random_aa3_classification(data):
    V = _random_aa3_rep(data)
    specs = classify_AA(V)
    assert sum(s.j - s.i + 1 for s in specs) == V.total_dim
    assert is_isomorphic(direct_sum([string_module(s) for s in specs]), V)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(all_string_specs(4)), min_size=1, max_size=3))
def test_sum_of_strings_roundtrip(specs):
    V = direct_sum([string_module(s) for s in specs])
    assert classify_AA(V) == sorted(specs, key=lambda s: (s.i, s.j, s.sigma))


def test_isomorphism_against_orbit_oracle():
    # over F_2 on the doubled 2-chain with dims (2, 1): library classes = brute-force orbits
    verts, arrows, rels = oracles.doubled_chain(2)
    dims = {1: 2, 2: 1}
    space = oracles.rep_space(verts, arrows, rels, dims, 2)
    reps = [Rep(make_AA(2), dims, {a: [list(r) for r in m] for a, m in rep.items()}, GF(2))
            for rep in space]
    classes = []
    for V in reps:
        if not any(is_isomorphic(V, W) for W in classes):
            classes.append(V)
    assert len(classes) == len(oracles.orbits(verts, arrows, rels, dims, 2))
    for V, raw in zip(reps, space):
        assert is_indecomposable(V) == oracles.is_indecomposable(verts, arrows, dims, raw, 2)
