import random
from itertools import combinations

import pytest

from regobstruct.exact_linalg import GF, QQ, ZZ
from regobstruct.graph_topology import Graph, complete_graph, cycle, path
from regobstruct.hyperstructures import Hyperdigraph
from regobstruct.matroids import VectorSet, vectorial_matroid
from regobstruct.obstruction import (
    FOUND,
    NONE_EXISTS,
    TRUNCATED,
    assignment_from_json,
    enumerate_simplicial_embeddings,
    induced_diagram_report,
    kunneth_obstruction_report,
    mv_obstruction_report,
    search_G_regular,
    search_k_regular_embedding,
    verify_k_regular,
)

GENERIC5 = VectorSet(QQ, 2, [(i, (str(i), str(i * i))) for i in range(1, 6)])
PARALLEL = VectorSet(QQ, 2, [(1, ("1", "0")), (2, ("2", "0")), (3, ("3", "0")),
                             (4, ("0", "1")), (5, ("0", "2"))])


def random_graph(rng, labels, p=0.5):
    return Graph(labels, [e for e in combinations(labels, 2) if rng.random() < p])


def random_vectors(rng, field, dim, n):
    if field == QQ:
        coords = lambda: tuple(rng.randint(-2, 2) for _ in range(dim))
    else:
        coords = lambda: tuple(rng.randrange(field.p) for _ in range(dim))
    return VectorSet(field, dim, [(i, coords()) for i in range(1, n + 1)])


def test_verify_rejects_zero_image():
    g = path(2)
    m = vectorial_matroid(VectorSet(QQ, 2, [(1, (0, 0)), (2, (1, 0))]))
    ok, witness = verify_k_regular(g, {1: 1, 2: 2}, 2, m)
    assert not ok and witness == (1,)


def test_verify_generic_positions():
    g = cycle(5)
    m = vectorial_matroid(GENERIC5)
    ok, _ = verify_k_regular(g, {v: v for v in range(1, 6)}, 2, m)
    assert ok


def test_c5_generic_found():
    rep = search_k_regular_embedding(cycle(5), vectorial_matroid(GENERIC5), 2)
    assert rep.verdict == FOUND
    ok, _ = verify_k_regular(cycle(5), rep.witness, 2, vectorial_matroid(GENERIC5))
    assert ok


def test_c5_parallel_classes_unsat():
    # two parallel classes cannot 2-color an odd cycle
    rep = search_k_regular_embedding(cycle(5), vectorial_matroid(PARALLEL), 2)
    assert rep.verdict == NONE_EXISTS
    assert not enumerate_simplicial_embeddings(cycle(5), vectorial_matroid(PARALLEL), 2)


def test_k1_constant_map():
    m = vectorial_matroid(VectorSet(QQ, 1, [(7, (3,))]))
    rep = search_k_regular_embedding(complete_graph(4), m, 1)
    assert rep.verdict == FOUND
    assert set(rep.witness.values()) == {7}


def test_budget_truncation():
    rep = search_k_regular_embedding(cycle(5), vectorial_matroid(PARALLEL), 2,
                                     node_budget=5)
    assert rep.verdict == TRUNCATED


def test_injective_option():
    m = vectorial_matroid(VectorSet(QQ, 1, [(7, (3,))]))
    rep = search_k_regular_embedding(complete_graph(2), m, 1, injective=True)
    assert rep.verdict == NONE_EXISTS


def test_g_regular_p4():
    vs = VectorSet(QQ, 2, [(i, (str(i), str(i * i))) for i in range(1, 5)])
    rep = search_G_regular(path(4), vectorial_matroid(vs))
    assert rep.verdict == FOUND


def test_affine_search():
    from regobstruct.matroids import affine_matroid
    # three collinear points cannot host the triangle of Ind(empty K_3)
    g = Graph([1, 2, 3], [])
    vs = VectorSet(QQ, 2, [(1, (0, 0)), (2, (1, 0)), (3, (2, 0))])
    rep = search_k_regular_embedding(g, affine_matroid(vs), 3)
    assert rep.verdict == NONE_EXISTS
    vs2 = VectorSet(QQ, 2, [(1, (0, 0)), (2, (1, 0)), (3, (0, 1))])
    rep2 = search_k_regular_embedding(g, affine_matroid(vs2), 3)
    assert rep2.verdict == FOUND


def test_search_agrees_with_enumeration():
    rng = random.Random(61)
    for _ in range(15):
        n = rng.randint(2, 5)
        g = random_graph(rng, range(1, n + 1))
        field = rng.choice([QQ, GF(2), GF(3)])
        vs = random_vectors(rng, field, rng.randint(1, 3), rng.randint(1, 4))
        m = vectorial_matroid(vs)
        k = rng.randint(1, 3)
        rep = search_k_regular_embedding(g, m, k, all_solutions=True)
        brute = enumerate_simplicial_embeddings(g, m, k)
        if rep.verdict == FOUND:
            assert sorted(map(sorted, (s.items() for s in rep.solutions))) == \
                sorted(map(sorted, (s.items() for s in brute)))
        else:
            assert not brute


def test_unsat_monotone_in_k():
    rng = random.Random(62)
    for _ in range(10):
        g = random_graph(rng, range(1, 5), p=0.3)
        vs = random_vectors(rng, QQ, 2, 3)
        m = vectorial_matroid(vs)
        verdicts = [search_k_regular_embedding(g, m, k).verdict for k in (1, 2, 3)]
        for a, b in zip(verdicts, verdicts[1:]):
            if a == NONE_EXISTS:
                assert b == NONE_EXISTS


def test_assignment_json():
    f = assignment_from_json({"map": {"1": 4, "2": 7}})
    assert f == {1: 4, 2: 7}


def test_diagram_rejects_non_regular():
    with pytest.raises(ValueError):
        induced_diagram_report(cycle(5), {v: 1 for v in range(1, 6)}, 2,
                               GENERIC5, ZZ)


def test_diagram_commutes_for_c5_and_c7():
    for g, vecs in ((cycle(5), GENERIC5),
                    (cycle(7), VectorSet(QQ, 3, [(i, (str(i), str(i * i), str(i ** 3)))
                                                 for i in range(1, 8)]))):
        k = 2
        rep = search_k_regular_embedding(g, vectorial_matroid(vecs), k)
        assert rep.verdict == FOUND
        diag = induced_diagram_report(g, rep.witness, k, vecs, ZZ)
        assert diag["squares_commute"]


def test_diagram_single_orbit_subhyperdigraph():
    rep = search_k_regular_embedding(cycle(5), vectorial_matroid(GENERIC5), 2)
    sub = Hyperdigraph([(1, 3), (3, 1)])
    diag = induced_diagram_report(cycle(5), rep.witness, 2, GENERIC5, ZZ,
                                  sub_hyperdigraph=sub)
    assert diag["squares_commute"]


def test_diagram_rejects_outside_skeleton():
    rep = search_k_regular_embedding(cycle(5), vectorial_matroid(GENERIC5), 2)
    bad = Hyperdigraph([(1, 2)])  # adjacent pair: not an independent tuple
    with pytest.raises(ValueError):
        induced_diagram_report(cycle(5), rep.witness, 2, GENERIC5, ZZ,
                               sub_hyperdigraph=bad)


def test_mv_obstruction_small_case():
    g1, g2 = Graph([1], []), Graph([2], [])
    g3 = Graph([3, 4], [(3, 4)])
    S = VectorSet(QQ, 3, [(1, (1, 0, 0)), (2, (0, 1, 0)), (3, (0, 0, 1)),
                          (4, (1, 1, 1))])
    res = mv_obstruction_report(g1, g2, g3, {1: 1}, {2: 2}, {3: 3, 4: 4}, 2, S, ZZ)
    assert res.ok


def test_mv_obstruction_empty_third_graph_degenerates():
    g1, g2 = Graph([1], []), Graph([2], [])
    g3 = Graph([3], [])
    S = VectorSet(QQ, 2, [(1, (1, 0)), (2, (0, 1)), (3, (1, 1))])
    res = mv_obstruction_report(g1, g2, g3, {1: 1}, {2: 2}, {3: 3}, 2, S, ZZ)
    assert res.ok
    # with no shared graph at all the rows split into direct sums
    res2 = mv_obstruction_report(g1, g2, Graph([], []), {1: 1}, {2: 2}, {},
                                 2, S, ZZ)
    assert res2.ok


def test_mv_obstruction_random_triples():
    rng = random.Random(63)
    done = 0
    for _ in range(12):
        g1 = random_graph(rng, range(1, rng.randint(2, 4)))
        g2 = random_graph(rng, range(11, 11 + rng.randint(1, 3)))
        g3 = random_graph(rng, range(21, 21 + rng.randint(1, 3)))
        field = rng.choice([QQ, GF(2)])
        vs = random_vectors(rng, field, 3, 5)
        m = vectorial_matroid(vs)
        fs = []
        for g in (g1, g2, g3):
            rep = search_k_regular_embedding(g, m, 2)
            fs.append(rep.witness if rep.verdict == FOUND else None)
        if any(f is None for f in fs):
            continue
        done += 1
        ring = ZZ if field == QQ else field
        res = mv_obstruction_report(g1, g2, g3, fs[0], fs[1], fs[2], 2, vs, ring)
        assert res.ok
    assert done >= 4


def test_mv_obstruction_embedded_sub_pair():
    # pairs-only sub-hyperdigraphs: order-invariant, not closed under faces
    g1 = Graph([1, 5], [])
    g2 = Graph([2, 6], [])
    g3 = Graph([3, 4], [])
    S = VectorSet(QQ, 3, [(i, (1, i, i * i)) for i in range(1, 7)])
    f1, f2, f3 = {1: 1, 5: 5}, {2: 2, 6: 6}, {3: 3, 4: 4}
    H1 = Hyperdigraph([(1, 5), (5, 1), (3, 4), (4, 3)])
    H2 = Hyperdigraph([(2, 6), (6, 2), (3, 4), (4, 3)])
    res = mv_obstruction_report(g1, g2, g3, f1, f2, f3, 2, S, ZZ,
                                sub_pair=(H1, H2))
    assert res.embedded
    assert res.ok
    # the embedded degree-1 group of each piece: one cycle per orbit pair
    lad = res.ladders["projection_independence"]
    sums = {l: p.group for l, p in zip(lad.top.labels, lad.top.presentations)}
    assert sums["H_1(A)+H_1(B)"].rank == 4


def test_mv_obstruction_sub_pair_hypothesis_failure():
    from regobstruct.homology_engine import LadderConstructionError
    g1 = Graph([1, 5], [])
    g2 = Graph([2, 6], [])
    g3 = Graph([3, 4], [])
    S = VectorSet(QQ, 3, [(i, (1, i, i * i)) for i in range(1, 7)])
    f1, f2, f3 = {1: 1, 5: 5}, {2: 2, 6: 6}, {3: 3, 4: 4}
    bad = Hyperdigraph([(1, 5)])  # not order-invariant
    with pytest.raises(LadderConstructionError):
        mv_obstruction_report(g1, g2, g3, f1, f2, f3, 2, S, ZZ,
                              sub_pair=(bad, Hyperdigraph([(3, 4), (4, 3)])))


def test_kunneth_obstruction_p2_pair():
    p2a, p2b = path(2), Graph([10, 11], [(10, 11)])
    S1 = VectorSet(QQ, 2, [(1, (1, 0)), (2, (0, 1))])
    S2 = VectorSet(QQ, 2, [(1, (1, 0)), (2, (0, 1))])
    res = kunneth_obstruction_report(p2a, p2b, {1: 1, 2: 2}, {10: 1, 11: 2},
                                     2, 2, S1, S2, ZZ)
    assert res.ok
    lad = res.ladders["embedding_underlying"]
    assert lad.top.degrees[1]["middle"].group.rank == 1  # S^0 * S^0 = S^1


def test_kunneth_obstruction_cone_side():
    g1 = path(2)
    g2 = Graph([10], [])
    S1 = VectorSet(QQ, 2, [(1, (1, 0)), (2, (0, 1))])
    S2 = VectorSet(QQ, 1, [(1, (1,))])
    res = kunneth_obstruction_report(g1, g2, {1: 1, 2: 2}, {10: 1}, 2, 1,
                                     S1, S2, ZZ)
    assert res.ok
    for lad in res.ladders.values():
        for m, row in lad.top.degrees.items():
            if m >= 1:
                assert row["middle"].group.is_trivial
