"""Regular-embedding decisions and the obstruction diagram verification.

A vertex map into a labelled vector set is k-regular when every set of at
most k mutually non-adjacent vertices goes to distinct, linearly
independent vectors.  Search is exhaustive backtracking, so a negative
verdict is a proof; a budgeted run that stops early reports "truncated",
never "none exists".
"""

from itertools import product

from .graph_topology import (
    conf_layer,
    directed_independence_complex,
    independence_number,
    independent_sets,
    reduced_join,
)

__all__ = [
    "FOUND", "NONE_EXISTS", "TRUNCATED", "ObstructionReport",
    "assignment_from_json", "conf_layer", "enumerate_simplicial_embeddings",
    "induced_diagram_report", "kunneth_obstruction_report",
    "mv_obstruction_report", "search_G_regular", "search_k_regular_embedding",
    "verify_k_regular",
]
from .homology_engine.chains import (
    chain_complex,
    inf_complex,
    projection_chain_map,
    vertex_chain_map,
)
from .homology_engine.ladders import (
    KunnethLadderReport,
    LadderConstructionError,
    kunneth_row_for_pair,
    kunneth_row_for_pair_embedded,
    mv_hypotheses,
    mv_ladder,
    mv_row_for_pair,
    mv_row_for_pair_embedded,
)
from .matroids import (
    FULL_ORBIT,
    VectorSet,
    directed_vectorial_matroid,
    exact_rank,
    vectorial_matroid,
)

FOUND = "found"
NONE_EXISTS = "none exists"
TRUNCATED = "truncated"


class ObstructionReport:
    def __init__(self, verdict, witness=None, nodes_explored=0, solutions=None,
                 diagrams=None):
        self.verdict = verdict
        self.witness = witness
        self.nodes_explored = nodes_explored
        self.solutions = solutions
        self.diagrams = diagrams or {}

    def to_json(self):
        out = {"verdict": self.verdict, "nodes_explored": self.nodes_explored}
        if self.witness is not None:
            out["witness"] = {"map": {str(v): l for v, l in sorted(self.witness.items())}}
        if self.solutions is not None:
            out["solutions"] = [{str(v): l for v, l in sorted(s.items())}
                                for s in self.solutions]
        if self.diagrams:
            out["diagrams"] = self.diagrams
        return out


def assignment_from_json(data):
    return {int(v): int(l) for v, l in data["map"].items()}


def verify_k_regular(g, assignment, k, matroid):
    """Check k-regularity; returns (ok, first violating independent set)."""
    if k < 1:
        raise ValueError("k must be positive")
    for v in sorted(g.vertices):
        if v not in assignment:
            raise ValueError(f"assignment misses vertex {v}")
    for ind in independent_sets(g, min(k, max(1, len(g.vertices)))):
        images = [assignment[v] for v in ind]
        if len(set(images)) != len(images) or not matroid.is_independent(images):
            return False, ind
    return True, None


def search_k_regular_embedding(g, matroid, k, injective=False,
                               all_solutions=False, node_budget=None):
    """Complete backtracking search for a k-regular map into the matroid.

    Vertices are assigned most-constrained-first (by how many small
    independent sets they meet), candidate labels in numeric order, so the
    result is deterministic.  Exhausting the tree proves non-existence.
    """
    if k < 1:
        raise ValueError("k must be positive")
    verts = sorted(g.vertices)
    inds = [s for s in independent_sets(g, min(k, max(1, len(verts))))]
    by_vertex = {v: [] for v in verts}
    for s in inds:
        for v in s:
            by_vertex[v].append(s)
    order = sorted(verts, key=lambda v: (-len(by_vertex[v]), v))
    labels = list(matroid.ground)
    assignment = {}
    nodes = 0
    solutions = []
    budget_hit = False

    def consistent(v):
        for s in by_vertex[v]:
            if any(u not in assignment for u in s):
                continue
            images = [assignment[u] for u in s]
            if len(set(images)) != len(images) or not matroid.is_independent(images):
                return False
        return True

    def backtrack(i):
        nonlocal nodes, budget_hit
        if i == len(order):
            solutions.append(dict(assignment))
            return not all_solutions
        v = order[i]
        for label in labels:
            if node_budget is not None and nodes >= node_budget:
                budget_hit = True
                return True
            nodes += 1
            if injective and label in assignment.values():
                continue
            assignment[v] = label
            if consistent(v) and backtrack(i + 1):
                return True
            del assignment[v]
        return False

    backtrack(0)
    if budget_hit and not solutions:
        return ObstructionReport(TRUNCATED, nodes_explored=nodes)
    if not solutions:
        return ObstructionReport(NONE_EXISTS, nodes_explored=nodes)
    return ObstructionReport(FOUND, witness=solutions[0], nodes_explored=nodes,
                             solutions=solutions if all_solutions else None)


def search_G_regular(g, matroid, **options):
    """k-regular for every k: equivalent to k = independence number."""
    k = max(independence_number(g), 1)
    return search_k_regular_embedding(g, matroid, k, **options)


def enumerate_simplicial_embeddings(g, matroid, k):
    """Brute-force enumeration over all vertex maps; the search oracle.

    A map qualifies iff every independent set of size <= k lands on
    distinct labels forming an independent set: exactly the simplicial
    embeddings of the truncated independence complex into the matroid.
    """
    verts = sorted(g.vertices)
    inds = independent_sets(g, min(k, max(1, len(verts))))
    out = []
    for combo in product(matroid.ground, repeat=len(verts)):
        f = dict(zip(verts, combo))
        ok = True
        for s in inds:
            images = [f[v] for v in s]
            if len(set(images)) != len(images) or not matroid.is_independent(images):
                ok = False
                break
        if ok:
            out.append(f)
    return out


def _matroid_complexes(vset, ring, size_cap=None):
    dm = directed_vectorial_matroid(vset, mode=FULL_ORBIT, size_cap=size_cap)
    m = dm.underlying()
    Kd, K = dm.complex(), m.complex()
    return dm, m, chain_complex(Kd, ring), chain_complex(K, ring)


def induced_diagram_report(g, assignment, k, vset, ring, sub_hyperdigraph=None):
    """The projection square: embedding-induced maps over the projections.

    Corners: (embedded) homology of the chosen sub-hyperdigraph of the
    truncated ordered independence complex and of its underlying
    hypergraph, mapped into the homology of the directed matroid and its
    underlying matroid.  Returns per-degree corner groups and the verdict
    that every square commutes.
    """
    m = vectorial_matroid(vset)
    ok, violation = verify_k_regular(g, assignment, k, m)
    if not ok:
        raise ValueError(f"map is not {k}-regular: independent set {violation} breaks it")
    _, _, CMd, CM = _matroid_complexes(vset, ring)
    skd = directed_independence_complex(g, max_card=k)
    if sub_hyperdigraph is not None:
        if not sub_hyperdigraph.is_subset_of(skd):
            raise ValueError("hyperdigraph is not inside the truncated complex")
        Hd = sub_hyperdigraph
    else:
        Hd = skd
    H = Hd.underlying()
    if Hd.is_simplicial():
        Cd, C = chain_complex(Hd, ring), chain_complex(H, ring)
    else:
        Cd, C = inf_complex(Hd, ring), inf_complex(H, ring)
    pi_top = projection_chain_map(Cd, C)
    pi_right = projection_chain_map(CMd, CM)
    f_dir = vertex_chain_map(Cd, CMd, assignment, directed=True)
    f_und = vertex_chain_map(C, CM, assignment, directed=False)
    degrees = {}
    commutes = True
    for n in range(0, max(Cd.top, C.top) + 1):
        top_then_right = pi_right.induced_on_homology(n).compose(
            f_dir.induced_on_homology(n))
        left_then_bottom = f_und.induced_on_homology(n).compose(
            pi_top.induced_on_homology(n))
        square_ok = top_then_right.equals(left_then_bottom)
        commutes = commutes and square_ok
        degrees[n] = {
            "ordered": Cd.homology(n).group,
            "unordered": C.homology(n).group,
            "matroid_ordered": CMd.homology(n).group,
            "matroid_unordered": CM.homology(n).group,
            "square_commutes": square_ok,
        }
    return {"degrees": degrees, "squares_commute": commutes}


def _image_vector_set(vset, assignments):
    labels = sorted({l for f in assignments for l in f.values()})
    return VectorSet(vset.field, vset.dim,
                     [(l, vset.vector(l)) for l in labels])


def mv_obstruction_report(g1, g2, g3, f1, f2, f3, k, vset, ring,
                          sub_pair=None):
    """Commuting grid of four Mayer-Vietoris rows for a regular triple.

    Rows: ordered/unordered independence complexes of the two reduced
    joins, and the directed/underlying matroids of the two image vector
    sets.  Ladders checked: both projections and both embedding-induced
    morphisms.  With sub_pair=(H', H''), the independence rows use
    embedded homology and hypotheses (I) and (II) are required first.
    """
    for g, f in ((g1, f1), (g2, f2), (g3, f3)):
        ok, violation = verify_k_regular(g, f, k, vectorial_matroid(vset))
        if not ok:
            raise ValueError(f"a map is not {k}-regular (witness {violation})")
    if (g1.vertices & g2.vertices or g1.vertices & g3.vertices
            or g2.vertices & g3.vertices):
        raise ValueError("the three graphs must have disjoint vertex sets")
    L1, L2 = reduced_join(g1, g3), reduced_join(g2, g3)
    fL1 = {**f1, **f3}
    fL2 = {**f2, **f3}
    f_all = {**f1, **f2, **f3}

    S1 = _image_vector_set(vset, [fL1])
    S2 = _image_vector_set(vset, [fL2])
    M1d = directed_vectorial_matroid(S1)
    M2d = directed_vectorial_matroid(S2)
    Ad_m, Bd_m = M1d.complex(), M2d.complex()
    A_m, B_m = M1d.underlying().complex(), M2d.underlying().complex()

    if sub_pair is None:
        Ad = directed_independence_complex(L1, max_card=k)
        Bd = directed_independence_complex(L2, max_card=k)
        A, B = Ad.underlying(), Bd.underlying()
        embedded = False
    else:
        Ad, Bd = sub_pair
        skA = directed_independence_complex(L1, max_card=k)
        skB = directed_independence_complex(L2, max_card=k)
        if not (Ad.is_subset_of(skA) and Bd.is_subset_of(skB)):
            raise ValueError("sub-hyperdigraphs leave the truncated complexes")
        sigma_ok, ii_ok = mv_hypotheses(Ad, Bd)
        if not (sigma_ok and ii_ok):
            raise LadderConstructionError(
                "hypotheses (I)/(II) not satisfied for the sub-hyperdigraph pair")
        A, B = Ad.underlying(), Bd.underlying()
        embedded = True

    N = 1 + max((max(h.grades(), default=1) for h in (Ad, Bd, Ad_m, Bd_m)))
    builder = mv_row_for_pair_embedded if embedded else mv_row_for_pair
    top_ind_d = builder(Ad, Bd, ring, top_degree=N)
    top_ind = builder(A, B, ring, top_degree=N)
    top_mat_d = mv_row_for_pair(Ad_m, Bd_m, ring, top_degree=N)
    top_mat = mv_row_for_pair(A_m, B_m, ring, top_degree=N)

    pi_ind = _mv_projection_mats(top_ind_d.complexes, top_ind.complexes)
    pi_mat = _mv_projection_mats(top_mat_d.complexes, top_mat.complexes)
    f_dir = _mv_vertex_mats(top_ind_d.complexes, top_mat_d.complexes, f_all,
                            directed=True)
    f_und = _mv_vertex_mats(top_ind.complexes, top_mat.complexes, f_all,
                            directed=False)

    ladders = {
        "projection_independence": mv_ladder(top_ind_d, top_ind, pi_ind,
                                             kind="mv-projection-independence"),
        "projection_matroid": mv_ladder(top_mat_d, top_mat, pi_mat,
                                        kind="mv-projection-matroid"),
        "embedding_directed": mv_ladder(top_ind_d, top_mat_d, f_dir,
                                        kind="mv-embedding-directed"),
        "embedding_underlying": mv_ladder(top_ind, top_mat, f_und,
                                          kind="mv-embedding-underlying"),
    }
    return MvObstructionResult(ladders, embedded)


class MvObstructionResult:
    def __init__(self, ladders, embedded):
        self.ladders = ladders
        self.embedded = embedded

    @property
    def rows_exact(self):
        return all(l.rows_exact for l in self.ladders.values())

    @property
    def squares_commute(self):
        return all(l.squares_commute for l in self.ladders.values())

    @property
    def ok(self):
        return self.rows_exact and self.squares_commute

    def to_json(self):
        return {"embedded": self.embedded,
                "rows_exact": self.rows_exact,
                "squares_commute": self.squares_commute,
                "ladders": {k: l.to_json() for k, l in self.ladders.items()}}


def _mv_projection_mats(top_quad, bottom_quad):
    maps = [projection_chain_map(t, b) for t, b in zip(top_quad, bottom_quad)]
    return lambda n: tuple(cm.matrix(n) for cm in maps)


def _mv_vertex_mats(top_quad, bottom_quad, vmap, directed):
    maps = [vertex_chain_map(t, b, vmap, directed)
            for t, b in zip(top_quad, bottom_quad)]
    return lambda n: tuple(cm.matrix(n) for cm in maps)


def kunneth_obstruction_report(g, g2, f, f2, k, k2, vset, vset2, ring,
                               sub_pair=None, directed=True):
    """Commuting grid of Kunneth rows for a product of regular maps.

    Builds the block-sum vector set, checks that (f, f') is
    (G,k;G',k')-regular, that the joined matroid family agrees with the
    block-sum independence on concatenated tuples, and verifies the
    Kunneth rows and ladder squares.
    """
    m1, m2 = vectorial_matroid(vset), vectorial_matroid(vset2)
    for gg, ff, kk, mm in ((g, f, k, m1), (g2, f2, k2, m2)):
        ok, violation = verify_k_regular(gg, ff, kk, mm)
        if not ok:
            raise ValueError(f"a map is not {kk}-regular (witness {violation})")
    if g.vertices & g2.vertices:
        raise ValueError("graphs must have disjoint vertex sets")
    offset = max(vset.labels) + 1
    blocks = vset.block_sum(vset2, relabel_offset=offset)
    f_product = {**f, **{v: l + offset for v, l in f2.items()}}
    product_regular = _check_product_regular(g, g2, f_product, k, k2, blocks)

    S1 = _image_vector_set(vset, [f])
    S2 = _image_vector_set(vset2, [f2])
    M1d = directed_vectorial_matroid(S1)
    M2d = directed_vectorial_matroid(S2)
    join_matches_blocks = _join_matches_block_sum(M1d, M2d, blocks, offset)

    Ad = directed_independence_complex(g, max_card=k)
    Bd = directed_independence_complex(g2, max_card=k2)
    if sub_pair is not None:
        Hd, Hd2 = sub_pair
        if not (Hd.is_subset_of(Ad) and Hd2.is_subset_of(Bd)):
            raise ValueError("sub-hyperdigraphs leave the truncated complexes")
        Ad, Bd = Hd, Hd2
    A, B = Ad.underlying(), Bd.underlying()
    Ad_m = M1d.complex()
    Bd_m = M2d.complex().relabelled({l: l + offset for l in M2d.ground})
    A_m, B_m = Ad_m.underlying(), Bd_m.underlying()

    f_dirmap = f_product
    simplicial = Ad.is_simplicial() and Bd.is_simplicial()
    row_builder = kunneth_row_for_pair if simplicial else kunneth_row_for_pair_embedded

    ladders = {}
    N = max(max(Ad.grades(), default=1) + max(Bd.grades(), default=1),
            max(Ad_m.grades(), default=1) + max(Bd_m.grades(), default=1))
    if directed:
        top_d = row_builder(Ad, Bd, ring, top_degree=N)
        bot_d = kunneth_row_for_pair(Ad_m, Bd_m, ring, top_degree=N)
        ladders["embedding_directed"] = _kunneth_vertex_ladder(
            top_d, bot_d, f_dirmap, True, "kunneth-embedding-directed")
        top_u = row_builder(A, B, ring, top_degree=N)
        ladders["projection_independence"] = _kunneth_projection_ladder(
            top_d, top_u, "kunneth-projection-independence")
        bot_u = kunneth_row_for_pair(A_m, B_m, ring, top_degree=N)
        ladders["projection_matroid"] = _kunneth_projection_ladder(
            bot_d, bot_u, "kunneth-projection-matroid")
        ladders["embedding_underlying"] = _kunneth_vertex_ladder(
            top_u, bot_u, f_dirmap, False, "kunneth-embedding-underlying")
    else:
        top_u = row_builder(A, B, ring, top_degree=N)
        bot_u = kunneth_row_for_pair(A_m, B_m, ring, top_degree=N)
        ladders["embedding_underlying"] = _kunneth_vertex_ladder(
            top_u, bot_u, f_dirmap, False, "kunneth-embedding-underlying")
    return KunnethObstructionResult(ladders, product_regular, join_matches_blocks)


class KunnethObstructionResult:
    def __init__(self, ladders, product_regular, join_matches_blocks):
        self.ladders = ladders
        self.product_regular = product_regular
        self.join_matches_blocks = join_matches_blocks

    @property
    def rows_verified(self):
        return all(l.rows_verified for l in self.ladders.values())

    @property
    def squares_commute(self):
        return all(l.squares_commute for l in self.ladders.values())

    @property
    def ok(self):
        return (self.product_regular and self.join_matches_blocks
                and self.rows_verified and self.squares_commute)

    def to_json(self):
        return {"product_regular": self.product_regular,
                "join_matches_block_sum": self.join_matches_blocks,
                "rows_verified": self.rows_verified,
                "squares_commute": self.squares_commute,
                "ladders": {k: l.to_json() for k, l in self.ladders.items()}}


def _check_product_regular(g, g2, f_product, k, k2, blocks):
    field = blocks.field
    for s1 in independent_sets(g, k):
        for s2 in independent_sets(g2, k2):
            labels = [f_product[v] for v in s1] + [f_product[v] for v in s2]
            if len(set(labels)) != len(labels):
                return False
            vecs = [blocks.vector(l) for l in labels]
            if exact_rank(field, vecs) != len(vecs):
                return False
    return True


def _join_matches_block_sum(M1d, M2d, blocks, offset):
    from fractions import Fraction
    from math import lcm

    from .matroids import _bareiss_rank, _mod_p_rank

    field = blocks.field
    joined = M1d.join(
        type(M2d)(tuple(l + offset for l in M2d.ground),
                  [tuple(x + offset for x in s) for s in M2d.family if s],
                  mode=M2d.mode))
    # clear denominators once per label; per-vector scaling preserves rank
    cache = {}
    for l in blocks.labels:
        v = blocks.vector(l)
        if field.name == "Q":
            scale = lcm(*(Fraction(c).denominator for c in v)) if v else 1
            cache[l] = [int(Fraction(c) * scale) for c in v]
        else:
            cache[l] = list(v)
    rank_fn = _bareiss_rank if field.name == "Q" else (
        lambda rows: _mod_p_rank(field, rows))
    for seq in joined.family:
        if not seq:
            continue
        rows = [cache[l] for l in seq]
        if rank_fn([list(r) for r in rows]) != len(rows):
            return False
    return True


def _kunneth_projection_ladder(top_bundle, bottom_bundle, kind):
    CA_t, CB_t, CJ_t = top_bundle.complexes
    CA_b, CB_b, CJ_b = bottom_bundle.complexes
    pa = projection_chain_map(CA_t, CA_b)
    pb = projection_chain_map(CB_t, CB_b)
    pj = projection_chain_map(CJ_t, CJ_b)
    return KunnethLadderReport(kind, top_bundle, bottom_bundle,
                               pa.matrix, pb.matrix, pj.matrix)


def _kunneth_vertex_ladder(top_bundle, bottom_bundle, vmap, directed, kind):
    CA_t, CB_t, CJ_t = top_bundle.complexes
    CA_b, CB_b, CJ_b = bottom_bundle.complexes
    fa = vertex_chain_map(CA_t, CA_b, vmap, directed)
    fb = vertex_chain_map(CB_t, CB_b, vmap, directed)
    fj = vertex_chain_map(CJ_t, CJ_b, vmap, directed)
    return KunnethLadderReport(kind, top_bundle, bottom_bundle,
                               fa.matrix, fb.matrix, fj.matrix)
