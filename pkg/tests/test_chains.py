"""Chain-level regressions, pinned to the worked three-vertex example."""

import random

import pytest

from regobstruct.exact_linalg import GF, QQ, ZZ
from regobstruct.exact_linalg.presentation import NotAComplexError
from regobstruct.homology_engine import (
    chain_complex,
    inf_complex,
    projection_chain_map,
    sup_complex,
)
from regobstruct.hyperstructures import Hyperdigraph, Hypergraph

KD = Hyperdigraph([(1, 2, 0), (1, 0), (2, 0), (1, 2), (0,), (1,), (2,)])
KD_PRIME = Hyperdigraph([
    (1, 2, 0), (2, 0, 1), (0, 1, 2),
    (1, 0), (0, 1), (2, 0), (0, 2), (1, 2), (2, 1), (0,), (1,), (2,)])
K = KD.underlying()


def coeffs(C, n, vec):
    return {tok: a for tok, a in zip(C.tokens[n], vec) if a}


def test_directed_boundary_of_top_cell():
    C = chain_complex(KD, ZZ)
    col = C.boundary(2).column(0)
    assert coeffs(C, 1, col) == {(2, 0): 1, (1, 0): -1, (1, 2): 1}


def test_directed_boundary_edges():
    C = chain_complex(KD, ZZ)
    j = C.tokens[1].index((2, 0))
    assert coeffs(C, 0, C.boundary(1).column(j)) == {(0,): 1, (2,): -1}
    j = C.tokens[1].index((1, 0))
    assert coeffs(C, 0, C.boundary(1).column(j)) == {(0,): 1, (1,): -1}
    j = C.tokens[1].index((1, 2))
    assert coeffs(C, 0, C.boundary(1).column(j)) == {(2,): 1, (1,): -1}


def test_directed_boundary_all_orderings():
    C = chain_complex(KD_PRIME, ZZ)
    j = C.tokens[2].index((2, 0, 1))
    assert coeffs(C, 1, C.boundary(2).column(j)) == {(0, 1): 1, (2, 1): -1, (2, 0): 1}
    j = C.tokens[2].index((0, 1, 2))
    assert coeffs(C, 1, C.boundary(2).column(j)) == {(1, 2): 1, (0, 2): -1, (0, 1): 1}
    j = C.tokens[1].index((0, 2))
    assert coeffs(C, 0, C.boundary(1).column(j)) == {(2,): 1, (0,): -1}


def test_undirected_boundary():
    C = chain_complex(K, ZZ)
    col = C.boundary(2).column(0)
    assert coeffs(C, 1, col) == {(1, 2): 1, (0, 2): -1, (0, 1): 1}
    j = C.tokens[1].index((0, 2))
    assert coeffs(C, 0, C.boundary(1).column(j)) == {(2,): 1, (0,): -1}


def test_vertex_boundary_is_zero():
    C = chain_complex(Hyperdigraph([(7,)]), ZZ)
    assert C.boundary(0).shape == (0, 1)


def test_boundary_squares_to_zero_random():
    rng = random.Random(19)
    for _ in range(20):
        edges = [tuple(rng.sample(range(5), rng.randint(1, 4))) for _ in range(4)]
        Cd = chain_complex(Hyperdigraph(edges).delta_closure(), rng.choice([ZZ, QQ, GF(3)]))
        for n in range(1, Cd.top + 1):
            assert (Cd.boundary(n) @ Cd.boundary(n + 1)).is_zero()


def test_chain_complex_rejects_non_complexes():
    with pytest.raises(NotAComplexError):
        chain_complex(Hyperdigraph([(1, 2)]), ZZ)


def test_projection_signs():
    C = chain_complex(KD_PRIME, ZZ)
    CU = chain_complex(K, ZZ)
    pi = projection_chain_map(C, CU)
    m1 = pi.matrix(1)
    i12 = C.tokens[1].index((1, 2))
    i21 = C.tokens[1].index((2, 1))
    target = CU.tokens[1].index((1, 2))
    assert m1[target, i12] == 1
    assert m1[target, i21] == -1
    m2 = pi.matrix(2)
    for tok, sign in [((1, 2, 0), 1), ((2, 0, 1), 1), ((0, 1, 2), 1)]:
        # the three listed orderings are even permutations of (0,1,2)
        j = C.tokens[2].index(tok)
        assert m2[CU.tokens[2].index((0, 1, 2)), j] == sign


def test_projection_is_surjective_chain_map():
    rng = random.Random(22)
    for _ in range(10):
        edges = [tuple(rng.sample(range(4), rng.randint(1, 3))) for _ in range(3)]
        Kd = Hyperdigraph(edges).sym_closure().delta_closure()
        Cd = chain_complex(Kd, ZZ)
        CU = chain_complex(Kd.underlying(), ZZ)
        pi = projection_chain_map(Cd, CU)  # constructor verifies commutation
        assert pi.is_surjective_degreewise()


def test_odd_permutation_projects_negatively():
    Kd = Hyperdigraph([(2, 0, 1), (1, 0, 2)]).delta_closure()
    Cd = chain_complex(Kd, ZZ)
    CU = chain_complex(Kd.underlying(), ZZ)
    pi = projection_chain_map(Cd, CU)
    m = pi.matrix(2)
    j_even = Cd.tokens[2].index((2, 0, 1))
    j_odd = Cd.tokens[2].index((1, 0, 2))
    row = CU.tokens[2].index((0, 1, 2))
    assert m[row, j_even] == 1 and m[row, j_odd] == -1


def test_augmented_complex():
    C = chain_complex(K, ZZ, augmented=True)
    assert C.dim(-1) == 1
    assert C.boundary(0).to_rows() == [[1, 1, 1]]
    assert C.homology(0).group.is_trivial  # reduced homology of a cone


def test_inf_sup_single_edge():
    H = Hypergraph([(1, 2)])
    inf = inf_complex(H, ZZ)
    sup = sup_complex(H, ZZ)
    assert inf.dim(1) == 0  # the boundary leaves the span
    assert sup.dim(1) == 1 and sup.dim(0) == 1  # span + its boundary
    assert inf.homology(0).group.is_trivial and inf.homology(1).group.is_trivial
    assert sup.homology(0).group.is_trivial and sup.homology(1).group.is_trivial


def test_inf_sup_simplicial_input_is_full():
    Kfull = Hypergraph([(1, 2)]).delta_closure()
    C = chain_complex(Kfull, ZZ)
    inf = inf_complex(Kfull, ZZ)
    sup = sup_complex(Kfull, ZZ)
    for n in range(0, C.top + 1):
        assert inf.dim(n) == C.dim(n)
        assert sup.dim(n) == C.dim(n)


def test_inf_inside_sup():
    from regobstruct.exact_linalg import solve
    rng = random.Random(25)
    for _ in range(15):
        edges = {tuple(sorted(rng.sample(range(5), rng.randint(1, 3))))
                 for _ in range(4)}
        H = Hypergraph(edges)
        inf, sup = inf_complex(H, ZZ), sup_complex(H, ZZ)
        for n in range(0, max(inf.top, 0) + 1):
            G = inf.to_ambient(n)
            S = sup.to_ambient(n)
            for j in range(G.ncols):
                assert solve(S, G.column(j)) is not None


def test_sup_catches_escaping_boundaries():
    # sup of {(1,2,3)} has degree-1 part spanned by the boundary
    H = Hypergraph([(1, 2, 3)])
    sup = sup_complex(H, ZZ)
    assert sup.dim(2) == 1
    assert sup.dim(1) == 1
    assert sup.homology(2).group.is_trivial
