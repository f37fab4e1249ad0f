import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from multichains.complexes import SimplicialComplex, multichain_complex
from multichains.homology import (
    HomologyResult,
    IntegerMatrix,
    boundary_matrices,
    is_homology_ball,
    is_homology_point,
    rational_rank,
    reduced_homology,
    smith_normal_form,
)
from multichains.poset import Poset, order_complex
from multichains.relations import IndexMap, Relation, all_index_maps

I = IndexMap.parse

RP2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5), (1, 2, 4), (2, 3, 5),
       (1, 3, 4), (1, 3, 5), (2, 4, 5)]
TORUS = [f for i in range(7) for f in ((i, (i + 1) % 7, (i + 3) % 7), (i, (i + 2) % 7, (i + 3) % 7))]


def cx(n, facets):
    return SimplicialComplex([str(i) for i in range(n)], facets)


def sympy_factors(rows):
    if not rows or not rows[0]:
        return []
    D = sympy_snf(Matrix(rows), domain=ZZ)
    return [abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0]


def test_snf_examples():
    assert smith_normal_form(IntegerMatrix.from_rows([[2, 0], [0, 3]])) == ([1, 6], 2)
    assert smith_normal_form(IntegerMatrix(3, 4)) == ([], 0)
    eye = [[int(i == j) for j in range(4)] for i in range(4)]
    assert smith_normal_form(IntegerMatrix.from_rows(eye)) == ([1] * 4, 4)


def test_snf_divisibility_and_big_entries():
    M = IntegerMatrix.from_rows([[10 ** 30, 6], [4, 8], [12, 10 ** 25 + 1]])
    d, _ = smith_normal_form(M)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    assert d == sympy_factors(M.entries)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6).flatmap(lambda m: st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m))))
def test_property_snf_matches_sympy(rows):
    M = IntegerMatrix.from_rows(rows)
    d, rank = smith_normal_form(M)
    assert d == sympy_factors(rows)
    assert rank == rational_rank(M) == Matrix(rows).rank()


def test_edge_boundary():
    K = cx(2, [(0, 1)])
    d = boundary_matrices(K)
    assert d[1].entries == [[1], [-1]] or d[1].entries == [[-1], [1]]
    assert (d[0] @ d[1]).is_zero()


def test_shape_validation():
    with pytest.raises(ValueError):
        IntegerMatrix(2, 2, [[1, 2]])


def test_classical_spaces():
    assert reduced_homology(cx(3, [(0, 1, 2)])).is_trivial()
    circle = reduced_homology(cx(3, [(0, 1), (1, 2), (0, 2)]))
    assert circle.betti == [0, 1]
    sphere = reduced_homology(cx(4, itertools.combinations(range(4), 3)))
    assert sphere.betti == [0, 0, 1]
    rp2 = reduced_homology(cx(6, RP2))
    assert rp2.betti == [0, 0, 0] and rp2.torsion == [[], [2], []]
    torus = reduced_homology(cx(7, TORUS))
    assert torus.betti == [0, 2, 1] and not any(torus.torsion)
    two_points = reduced_homology(cx(2, [(0,), (1,)]))
    assert two_points.betti == [1]


def test_example_complex_is_circle(c3):
    K = multichain_complex(c3, 3, I("1,2,4"))
    H = reduced_homology(K)
    assert H.betti == [0, 1, 0, 0, 0] and not any(H.torsion)
    assert not is_homology_point(K)
    assert H.to_dict() == {"betti": [0, 1, 0, 0, 0], "torsion": [[], [], [], [], []], "reduced": True}


def test_points_and_balls(c3):
    K = multichain_complex(c3, 2, I("1,3"))
    assert is_homology_point(K) and is_homology_ball(K, 2)
    assert not is_homology_ball(K, 3)
    cone = cx(4, [(0, 1, 3), (1, 2, 3), (0, 2, 3)])
    assert is_homology_point(cone)


def corpus_complexes(posets):
    for name, P in posets.items():
        yield name, order_complex(P)
        for r in (1, 2, 3):
            for iota in all_index_maps(r):
                yield f"{name} r={r} {iota}", multichain_complex(P, r, iota)
            yield f"{name} r={r} muhle", multichain_complex(P, r, Relation("muhle", r=r))


def test_boundary_squares_to_zero(posets):
    for name, K in corpus_complexes(posets):
        d = boundary_matrices(K)
        for a, b in zip(d, d[1:]):
            assert (a @ b).is_zero(), name


def test_euler_poincare(posets):
    for name, K in corpus_complexes(posets):
        H = reduced_homology(K)
        assert K.euler_characteristic() - 1 == sum((-1) ** k * b for k, b in enumerate(H.betti)), name


def test_rational_rank_agrees(posets):
    for name, K in corpus_complexes({k: posets[k] for k in ("chain3", "diamond", "bowtie")}):
        assert reduced_homology(K).betti == reduced_homology(K, rank=rational_rank).betti, name


def test_relabeling_invariance(posets):
    rng = random.Random(7)
    for name, K in corpus_complexes({k: posets[k] for k in ("chain3", "bowtie")}):
        perm = list(range(len(K.vertices)))
        rng.shuffle(perm)
        assert reduced_homology(K.relabel(perm)).same_groups(reduced_homology(K)), name


def test_normalized_comparison():
    a = HomologyResult([0, 1, 0, 0])
    b = HomologyResult([0, 1])
    assert a.same_groups(b)
    assert not a.same_groups(HomologyResult([0, 0]))
