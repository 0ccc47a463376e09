import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rspath.field import ExtField, PrimeField
from rspath.generators import ham_gadget, random_instance
from rspath.graph import Digraph, Instance
from rspath.oracle import (
    SparsePoly,
    deg_p_of,
    exists_r_simple_path,
    is_r_simple_path,
    iter_walks,
    longest_simple_path,
    poly_from_function,
    reduce_exponent,
    rmonomial_coefficients,
    symbolic_PG,
    y_index,
)

PATH3 = Digraph(3, frozenset({(0, 1), (1, 2)}))
CYCLE2 = Digraph(2, frozenset({(0, 1), (1, 0)}))


def brute_force(inst):
    """Independent oracle: enumerate every vertex sequence of length k."""
    g = inst.graph
    for seq in itertools.product(range(g.n), repeat=inst.k):
        if is_r_simple_path(g, seq, inst.r, inst.k):
            return True
    return False


def brute_longest(g):
    best = 0
    for L in range(1, g.n + 1):
        if any(g.is_path(perm) for perm in itertools.permutations(range(g.n), L)):
            best = L
    return best


def test_exists_examples():
    res = exists_r_simple_path(Instance(PATH3, 1, 3))
    assert res.answer == "yes" and res.witness == (0, 1, 2)
    assert exists_r_simple_path(Instance(CYCLE2, 2, 5)).answer == "no"
    assert exists_r_simple_path(Instance(Digraph(1), 1, 1)).witness == (0,)


def test_exists_on_gadget_has_predicted_shape():
    tri = Digraph(3, frozenset({(0, 1), (1, 2)}))
    inst = ham_gadget(tri, 2)
    res = exists_r_simple_path(inst)
    assert res.answer == "yes" and len(res.witness) == 11
    w = res.witness
    # starts and ends on twins, the middle is rho_{i1} rho_{i2} rho_{i3}
    assert w[0] >= 3 and w[-1] >= 3
    assert w[1:-1] in ((0, 3, 0, 1, 4, 1, 2, 5, 2), (2, 5, 2, 1, 4, 1, 0, 3, 0))


def test_budget_gives_unknown():
    inst = random_instance(8, 0.5, 2, 16, 1)
    res = exists_r_simple_path(inst, budget=3)
    assert res.answer == "unknown" and res.witness is None


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 4), st.floats(0, 1), st.integers(1, 3), st.integers(1, 6), st.integers(0, 10**6), st.booleans())
def test_dfs_matches_brute_force(n, density, r, k, seed, loops):
    inst = random_instance(n, density, min(r, k), k, seed, loops=loops)
    res = exists_r_simple_path(inst)
    assert res.yes == brute_force(inst)
    if res.yes:
        assert is_r_simple_path(inst.graph, res.witness, inst.r, inst.k)


def test_longest_examples():
    assert longest_simple_path(PATH3) == 3
    K4 = Digraph(4, frozenset((u, v) for u in range(4) for v in range(4) if u != v))
    assert longest_simple_path(K4) == 4
    assert longest_simple_path(Digraph(3)) == 1


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6), st.floats(0, 1), st.integers(0, 10**6))
def test_longest_matches_permutations(n, density, seed):
    g = random_instance(n, density, 1, 1, seed).graph
    assert longest_simple_path(g) == brute_longest(g)


def test_symbolic_examples():
    F = PrimeField(2)
    one_edge = Instance(Digraph(2, frozenset({(0, 1)})), 1, 2)
    poly = symbolic_PG(one_edge, F)
    e = [0] * (2 + 2 * 2)
    e[0] = e[1] = 1
    e[y_index(2, 1, 0)] = 1
    e[y_index(2, 2, 1)] = 1
    assert poly.terms == {tuple(e): 1}
    assert symbolic_PG(Instance(Digraph(3), 1, 2), F).is_zero()
    assert len(symbolic_PG(Instance(CYCLE2, 1, 3), F)) == 2


def test_reduce_exponent_rule():
    # x^e as a function on F_p equals x^{reduce(e)}
    for p in (2, 3, 5, 7):
        for e in range(0, 20):
            r = reduce_exponent(e, p)
            assert r < p
            assert all(pow(a, e, p) == pow(a, r, p) for a in range(p))


def test_deg_p_examples():
    F = PrimeField(3)
    x1p_x2 = SparsePoly.monomial(F, (1, 0)) * SparsePoly.monomial(F, (2, 0)) * SparsePoly.monomial(F, (0, 1))
    assert x1p_x2.terms == {(1, 1): 1} and deg_p_of(x1p_x2) == 2
    assert deg_p_of(SparsePoly.monomial(F, (3,))) == 1
    assert deg_p_of(SparsePoly(F, 2)) is None
    # homogeneous g with a 2-monomial over F_3 (r = p - 1) keeps its full degree
    g = SparsePoly(F, 2, {(2, 2): 1, (3, 1): 2, (4, 0): 1})
    assert deg_p_of(g) == 4
    g_no = SparsePoly(F, 2, {(3, 1): 2, (4, 0): 1})
    assert deg_p_of(g_no) < 4


@pytest.mark.parametrize("p,nvars", [(2, 3), (3, 2), (5, 1)])
def test_poly_from_function_interpolates(p, nvars):
    import random

    rng = random.Random(p)
    F = PrimeField(p)
    pts = list(itertools.product(range(p), repeat=nvars))
    for _ in range(30):
        vals = [rng.randrange(p) for _ in pts]
        poly = poly_from_function(vals, p, nvars)
        assert all(poly.evaluate(pt) == v for pt, v in zip(pts, vals))
        assert all(max(e) < p for e in poly.terms)
    assert F.p == p


def test_rmonomial_coefficients_sum_over_walks():
    F = ExtField(2, 3)
    inst = Instance(CYCLE2, 2, 4)
    b = [[F.one, F.one] for _ in range(4)]
    coeffs = rmonomial_coefficients(inst, F, b)
    # walks 0101 and 1010 share the multiset {0,0,1,1}; 2 = 0 in characteristic 2
    assert coeffs == {(2, 2): F.zero}
    assert sum(1 for _ in iter_walks(CYCLE2, 4)) == 2


def test_walk_count_matches_matrix_power():
    inst = random_instance(5, 0.4, 1, 4, 3, loops=True)
    A = inst.graph.adjacency()
    import numpy as np

    expected = int(np.ones(5) @ np.linalg.matrix_power(A, 3) @ np.ones(5))
    walks = list(iter_walks(inst.graph, 4))
    assert len(walks) == expected == len(set(walks))
    assert all(inst.graph.is_path(w) for w in walks)
    assert Counter(len(w) for w in walks) == Counter({4: expected}) or expected == 0
