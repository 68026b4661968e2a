"""Chain complexes of (directed) simplicial complexes and their submodules.

Dimension convention: a hyperedge on k vertices sits in chain degree k-1.
Augmented complexes add the empty simplex () in degree -1, so their
homology is reduced homology.
"""

from ..exact_linalg.matrix import Matrix
from ..exact_linalg.presentation import HomologyPresentation, NotAComplexError, homology_of_pair
from ..exact_linalg.snf import hermite_column_basis
from ..exact_linalg.solve import kernel_basis, solve_matrix
from ..hyperstructures import Hyperdigraph, Hypergraph

EMPTY_TOKEN = ()


def _sort_sign(t):
    """Sign of the permutation sorting the tuple t (by counting inversions)."""
    inv = sum(1 for i in range(len(t)) for j in range(i + 1, len(t)) if t[i] > t[j])
    return -1 if inv % 2 else 1


class ChainComplex:
    """Free chain complex with an ordered generator list per degree."""

    def __init__(self, ring, tokens_by_degree, boundaries, augmented=False):
        self.ring = ring
        self.tokens = dict(tokens_by_degree)
        self.boundaries = dict(boundaries)
        self.augmented = augmented
        self.min_degree = -1 if augmented else 0
        self.top = max(self.tokens, default=self.min_degree)
        self._index = {n: {t: i for i, t in enumerate(toks)}
                       for n, toks in self.tokens.items()}
        self._homology = {}
        for n in range(self.min_degree + 1, self.top + 1):
            D_n, D_np1 = self.boundary(n), self.boundary(n + 1)
            if not (D_n @ D_np1).is_zero():
                raise NotAComplexError(f"boundary composition nonzero at degree {n}")

    def dim(self, n):
        return len(self.tokens.get(n, ()))

    def generator_index(self, n, token):
        return self._index[n][token]

    def boundary(self, n):
        """D_n : C_n -> C_{n-1} (zero matrix outside the support)."""
        if n in self.boundaries:
            return self.boundaries[n]
        return Matrix.zeros(self.ring, self.dim(n - 1), self.dim(n))

    def to_ambient(self, n):
        return Matrix.identity(self.ring, self.dim(n))

    def ambient_tokens(self, n):
        return self.tokens.get(n, [])

    def ambient_dim(self, n):
        return self.dim(n)

    def ambient_boundary(self, n):
        return self.boundary(n)

    def homology(self, n):
        if n not in self._homology:
            if self.dim(n) == 0:
                self._homology[n] = trivial_presentation(self.ring)
            else:
                self._homology[n] = homology_of_pair(self.boundary(n), self.boundary(n + 1))
        return self._homology[n]

    def homology_groups(self):
        return {n: self.homology(n).group for n in range(max(self.min_degree, 0), self.top + 1)}


def trivial_presentation(ring):
    z = Matrix.zeros(ring, 0, 0)
    return HomologyPresentation(ring, z, z)


def chain_complex(K, ring, augmented=False):
    """Chain complex of a (directed) simplicial complex over a ring.

    Directed boundary: alternating-sign deletion on the tuple as given.
    Undirected: vertices sorted ascending before signing.
    """
    if not K.is_simplicial():
        raise NotAComplexError("input is not closed under faces")
    directed = isinstance(K, Hyperdigraph)
    if not directed and not isinstance(K, Hypergraph):
        raise TypeError(f"expected a hyper(di)graph, got {type(K)!r}")
    tokens = {}
    for k in K.grades():
        tokens[k - 1] = sorted(K.level(k))
    if augmented:
        tokens[-1] = [EMPTY_TOKEN]
    index = {n: {t: i for i, t in enumerate(toks)} for n, toks in tokens.items()}
    boundaries = {}
    one = ring.one()
    for n in sorted(tokens):
        if n - 1 not in tokens:
            continue
        trip = {}
        for j, tok in enumerate(tokens[n]):
            if n == 0:
                trip[(0, j)] = one
                continue
            for i in range(len(tok)):
                face = tok[:i] + tok[i + 1:]
                sign = one if i % 2 == 0 else ring.neg(one)
                trip[(index[n - 1][face], j)] = sign
        boundaries[n] = Matrix(ring, len(tokens[n - 1]), len(tokens[n]), triplets=trip)
    return ChainComplex(ring, tokens, boundaries, augmented=augmented)


class SubmoduleChainComplex:
    """Sub-chain-complex of an ambient complex, given by generator columns.

    Generators are Hermite-reduced so equal submodules get equal bases.
    The induced boundary is expressed in the generator coordinates.
    """

    def __init__(self, ambient, generators):
        self.ring = ambient.ring
        self.ambient = ambient
        self.min_degree = ambient.min_degree
        gens = {}
        for n, G in generators.items():
            H = hermite_column_basis(G)
            if H.ncols:
                gens[n] = H
        self.generators = gens
        self.top = max(gens, default=self.min_degree)
        self.boundaries = {}
        for n in sorted(gens):
            if n - 1 not in gens:
                if not (ambient.boundary(n) @ gens[n]).is_zero():
                    raise NotAComplexError(
                        f"boundary of degree-{n} generators leaves the submodule")
                continue
            image = ambient.boundary(n) @ gens[n]
            B = solve_matrix(gens[n - 1], image)
            if B is None:
                raise NotAComplexError(
                    f"boundary of degree-{n} generators leaves the submodule")
            self.boundaries[n] = B
        self._homology = {}

    def dim(self, n):
        G = self.generators.get(n)
        return G.ncols if G is not None else 0

    def boundary(self, n):
        if n in self.boundaries:
            return self.boundaries[n]
        return Matrix.zeros(self.ring, self.dim(n - 1), self.dim(n))

    def to_ambient(self, n):
        G = self.generators.get(n)
        if G is not None:
            return G
        return Matrix.zeros(self.ring, self.ambient.dim(n), 0)

    def ambient_tokens(self, n):
        return self.ambient.ambient_tokens(n)

    def ambient_dim(self, n):
        return self.ambient.dim(n)

    def ambient_boundary(self, n):
        return self.ambient.boundary(n)

    def homology(self, n):
        if n not in self._homology:
            if self.dim(n) == 0:
                z = Matrix.zeros(self.ring, 0, 0)
                self._homology[n] = HomologyPresentation(
                    self.ring, z, z,
                    ambient_cycles=Matrix.zeros(self.ring, self.ambient_dim(n), 0))
            else:
                pres = homology_of_pair(self.boundary(n), self.boundary(n + 1))
                self._homology[n] = HomologyPresentation(
                    self.ring, pres.cycles, pres.relations,
                    ambient_cycles=self.to_ambient(n) @ pres.cycles)
        return self._homology[n]

    def homology_groups(self):
        return {n: self.homology(n).group for n in range(max(self.min_degree, 0), self.top + 1)}


def _present_unit_columns(ambient, hyper, k):
    """Unit columns of ambient degree k-1 for the edges hyper has at grade k."""
    n = k - 1
    toks = ambient.ambient_tokens(n)
    ring = ambient.ring
    cols = []
    level = hyper.level(k)
    for tok in sorted(level):
        e = [ring.zero()] * len(toks)
        e[ambient.generator_index(n, tok)] = ring.one()
        cols.append(e)
    return Matrix.from_columns(ring, cols, nrows=len(toks))


def inf_complex(H, ring, augmented=False):
    """Largest sub-chain-complex of the closure supported on the edge span.

    Degree n part: chains in the span of the grade-(n+1) edges whose
    boundary stays in the span of the grade-n edges.
    """
    delta = H.delta_closure()
    ambient = chain_complex(delta, ring, augmented=augmented)
    gens = {}
    if augmented:
        gens[-1] = Matrix.identity(ring, 1)
    for k in H.grades():
        n = k - 1
        S = _present_unit_columns(ambient, H, k)
        if n == ambient.min_degree:
            gens[n] = S
            continue
        lower_present = {t for t in H.level(k - 1)} if k - 1 >= 1 else set()
        lower_tokens = ambient.ambient_tokens(n - 1)
        if n - 1 == -1:
            missing_rows = []  # the empty simplex is always present
        else:
            missing_rows = [i for i, t in enumerate(lower_tokens) if t not in lower_present]
        restricted = ambient.boundary(n) @ S
        projected = restricted.submatrix_rows(missing_rows)
        coeffs = kernel_basis(projected)
        gens[n] = S @ coeffs
    return SubmoduleChainComplex(ambient, gens)


def sup_complex(H, ring, augmented=False):
    """Smallest sub-chain-complex of the closure containing the edge span.

    Degree n part: span of the grade-(n+1) edges plus the boundaries of the
    grade-(n+2) edges.
    """
    delta = H.delta_closure()
    ambient = chain_complex(delta, ring, augmented=augmented)
    gens = {}
    degrees = set()
    for k in H.grades():
        degrees.add(k - 1)
        degrees.add(k - 2)
    if augmented:
        degrees.add(-1)
    for n in sorted(degrees):
        if n < ambient.min_degree:
            continue
        cols = None
        if n == -1:
            cols = Matrix.identity(ring, 1)
        elif H.level(n + 1):
            cols = _present_unit_columns(ambient, H, n + 1)
        if H.level(n + 2):
            bd = ambient.boundary(n + 1) @ _present_unit_columns(ambient, H, n + 2)
            cols = bd if cols is None else cols.hstack(bd)
        if cols is not None and cols.ncols:
            gens[n] = cols
    return SubmoduleChainComplex(ambient, gens)


class ChainMap:
    """Degreewise linear map between complexes, acting on ambient coordinates.

    Commutation with the boundaries is verified on the submodule
    generators at construction time; building one that fails raises.
    """

    def __init__(self, source, target, mats, check=True):
        self.source = source
        self.target = target
        self.mats = dict(mats)
        if check and not self.commutes_with_boundaries():
            raise ValueError("not a chain map: boundary squares do not commute")

    def matrix(self, n):
        if n in self.mats:
            return self.mats[n]
        return Matrix.zeros(self.source.ring, self.target.ambient_dim(n),
                            self.source.ambient_dim(n))

    def commutes_with_boundaries(self):
        lo = self.source.min_degree
        for n in range(lo + 1, self.source.top + 1):
            G = self.source.to_ambient(n)
            left = self.target.ambient_boundary(n) @ self.matrix(n) @ G
            right = self.matrix(n - 1) @ (self.source.ambient_boundary(n) @ G)
            if left != right:
                return False
        return True

    def is_surjective_degreewise(self):
        from ..exact_linalg.solve import solve
        for n in range(max(self.source.min_degree, self.target.min_degree),
                       self.target.top + 1):
            T = self.target.to_ambient(n)
            span = self.matrix(n) @ self.source.to_ambient(n)
            for j in range(T.ncols):
                if solve(span, T.column(j)) is None:
                    return False
        return True

    def compose(self, other):
        mats = {}
        for n in range(min(other.source.min_degree, self.source.min_degree),
                       max(other.source.top, self.source.top) + 1):
            mats[n] = self.matrix(n) @ other.matrix(n)
        return ChainMap(other.source, self.target, mats, check=False)

    def induced_on_homology(self, n):
        from ..exact_linalg.presentation import GroupHom
        return GroupHom.from_chain_matrix(self.source.homology(n),
                                          self.target.homology(n), self.matrix(n))


def token_inclusion_matrix(ring, src_tokens, dst_complex, n):
    trip = {}
    for j, tok in enumerate(src_tokens):
        trip[(dst_complex.generator_index(n, tok), j)] = ring.one()
    return Matrix(ring, dst_complex.dim(n), len(src_tokens), triplets=trip)


def inclusion_chain_map(sub, sup, check=True):
    """Chain map induced by a token inclusion of the underlying complexes."""
    ring = sub.ring
    mats = {}
    for n in range(sub.min_degree, sub.top + 1):
        toks = sub.ambient_tokens(n)
        if not toks and n >= 0:
            continue
        if n == -1:
            mats[n] = Matrix.identity(ring, 1)
        else:
            mats[n] = token_inclusion_matrix(ring, toks, _ambient_of(sup), n)
    return ChainMap(sub, sup, mats, check=check)


def _ambient_of(C):
    return C.ambient if isinstance(C, SubmoduleChainComplex) else C


def projection_chain_map(Kd_complex, K_complex):
    """Signed projection from a directed complex onto its underlying complex.

    An ordered simplex maps to sgn(sorting permutation) times the sorted
    simplex.  The chain-map property is verified at construction.  Both
    sides may be submodule complexes; the matrices act on the ambients.
    """
    ring = Kd_complex.ring
    dst_amb = _ambient_of(K_complex)
    mats = {}
    for n in range(Kd_complex.min_degree, Kd_complex.top + 1):
        toks = Kd_complex.ambient_tokens(n)
        if n == -1:
            mats[n] = Matrix.identity(ring, 1)
            continue
        trip = {}
        for j, tok in enumerate(toks):
            stok = tuple(sorted(tok))
            sign = _sort_sign(tok)
            trip[(dst_amb.generator_index(n, stok), j)] = (
                ring.one() if sign > 0 else ring.neg(ring.one()))
        mats[n] = Matrix(ring, dst_amb.dim(n), len(toks), triplets=trip)
    return ChainMap(Kd_complex, K_complex, mats)


def vertex_chain_map(src, dst, vmap, directed):
    """Chain map induced by a vertex map that embeds each simplex.

    Directed: (v_1..v_k) -> (f v_1 .. f v_k).  Undirected: the image
    vertex list is sorted and the sorting sign is attached.
    """
    ring = src.ring
    mats = {}
    dst_amb = _ambient_of(dst)
    for n in range(src.min_degree, src.top + 1):
        toks = src.ambient_tokens(n)
        if n == -1:
            mats[n] = Matrix.identity(ring, 1)
            continue
        trip = {}
        for j, tok in enumerate(toks):
            image = tuple(vmap[v] for v in tok)
            if len(set(image)) != len(image):
                raise ValueError(f"vertex map collapses the simplex {tok}")
            if directed:
                trip[(dst_amb.generator_index(n, image), j)] = ring.one()
            else:
                sign = _sort_sign(image)
                stok = tuple(sorted(image))
                trip[(dst_amb.generator_index(n, stok), j)] = (
                    ring.one() if sign > 0 else ring.neg(ring.one()))
        mats[n] = Matrix(ring, dst_amb.dim(n), len(toks), triplets=trip)
    return ChainMap(src, dst, mats)
