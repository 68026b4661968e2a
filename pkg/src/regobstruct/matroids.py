"""Vectorial matroids and directed matroids over exact fields.

Independence of a set of vectors is decided by exact rank: fraction-free
(Bareiss) elimination on cleared denominators over Q, standard elimination
over GF(p).  Duals and joins are explicit set families without vector
realizations; a dual need not be representable in the same dimension.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import lcm

from .exact_linalg.rings import QQ, ring_from_name
from .hyperstructures import DEFAULT_GRADE_CAP, Hyperdigraph, Hypergraph

FULL_ORBIT = "full-orbit"
FIRST_COORDINATE = "first-coordinate"


class VectorSet:
    """Labelled vectors of one dimension over Q or GF(p)."""

    def __init__(self, field, dim, labelled_vectors):
        if not field.is_field:
            raise ValueError("vector sets need a field")
        self.field = field
        self.dim = dim
        vectors = {}
        for label, coords in labelled_vectors:
            label = int(label)
            if label in vectors:
                raise ValueError(f"duplicate label {label}")
            vec = tuple(field.convert(c) for c in coords)
            if len(vec) != dim:
                raise ValueError(f"vector {label} has dimension {len(vec)}, expected {dim}")
            vectors[label] = vec
        self.vectors = vectors
        self.labels = tuple(sorted(vectors))

    def __len__(self):
        return len(self.labels)

    def vector(self, label):
        return self.vectors[label]

    def homogenized(self):
        """Prepend a constant 1 coordinate (affine independence test)."""
        one = self.field.one()
        return VectorSet(self.field, self.dim + 1,
                         [(l, (one,) + v) for l, v in self.vectors.items()])

    def block_sum(self, other, relabel_offset=0):
        """Place self in the first coordinates and other in the last ones."""
        if self.field != other.field:
            raise ValueError("field mismatch")
        z1 = [self.field.zero()] * other.dim
        z2 = [self.field.zero()] * self.dim
        items = [(l, v + tuple(z1)) for l, v in self.vectors.items()]
        items += [(l + relabel_offset, tuple(z2) + v) for l, v in other.vectors.items()]
        return VectorSet(self.field, self.dim + other.dim, items)

    def to_json(self):
        return {
            "field": self.field.name,
            "dim": self.dim,
            "vectors": [{"label": l,
                         "coords": [self.field.scalar_to_json(c) for c in self.vectors[l]]}
                        for l in self.labels],
        }

    @classmethod
    def from_json(cls, data):
        field = ring_from_name(data["field"])
        vecs = [(v["label"], [_parse_coord(field, c) for c in v["coords"]])
                for v in data["vectors"]]
        return cls(field, data["dim"], vecs)


def _parse_coord(field, c):
    if isinstance(c, str):
        if field == QQ:
            return Fraction(c)
        return int(c)
    return c


def exact_rank(field, vectors):
    """Rank of a list of vectors, by exact elimination."""
    if not vectors:
        return 0
    if field == QQ:
        rows = []
        for v in vectors:
            scale = lcm(*(Fraction(c).denominator for c in v)) if v else 1
            rows.append([int(Fraction(c) * scale) for c in v])
        return _bareiss_rank(rows)
    rows = [list(v) for v in vectors]
    return _mod_p_rank(field, rows)


def _bareiss_rank(rows):
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    prev = 1
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        for i in range(r + 1, m):
            ri = rows[i]
            if any(ri[col:]):
                f = ri[col]
                for j in range(col, n):
                    ri[j] = (pr[col] * ri[j] - f * pr[j]) // prev
        prev = pr[col]
        r += 1
        if r == m:
            break
    return r


def _mod_p_rank(field, rows):
    p = field.p
    m = len(rows)
    n = len(rows[0]) if rows else 0
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][col] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [(inv * a) % p for a in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] % p:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == m:
            break
    return r


class Matroid:
    """A finite ground set with an explicit hereditary independence family."""

    def __init__(self, ground, independent_sets, vectors=None):
        self.ground = tuple(sorted(set(int(g) for g in ground)))
        family = {frozenset()}
        for s in independent_sets:
            family.add(frozenset(int(x) for x in s))
        self.family = frozenset(family)
        self.rank = max((len(s) for s in self.family), default=0)
        self.vectors = vectors

    def is_independent(self, subset):
        subset = frozenset(int(x) for x in subset)
        if not subset <= set(self.ground):
            unknown = sorted(subset - set(self.ground))
            raise KeyError(f"labels {unknown} are not in the ground set")
        return subset in self.family

    def independent_sets_of_size(self, k):
        return sorted(tuple(sorted(s)) for s in self.family if len(s) == k)

    def bases(self):
        return [s for s in self.family if len(s) == self.rank]

    def dual(self):
        """Complements of bases span the dual's family; no vectors carried."""
        S = set(self.ground)
        dual_bases = [frozenset(S - b) for b in self.bases()]
        family = set()
        for b in dual_bases:
            for k in range(len(b) + 1):
                family.update(frozenset(c) for c in combinations(sorted(b), k))
        return Matroid(self.ground, family)

    def join(self, other):
        common = set(self.ground) & set(other.ground)
        if common:
            raise ValueError(f"ground sets overlap on {sorted(common)}")
        family = {a | b for a in self.family for b in other.family}
        return Matroid(self.ground + other.ground, family)

    def complex(self):
        """The simplicial complex of non-empty independent sets."""
        return Hypergraph([tuple(sorted(s)) for s in self.family if s],
                          grade_cap=max(self.rank, DEFAULT_GRADE_CAP))

    def __eq__(self, other):
        return (isinstance(other, Matroid) and self.ground == other.ground
                and self.family == other.family)

    def __repr__(self):
        return f"Matroid(|S|={len(self.ground)}, rank={self.rank}, |I|={len(self.family)})"


class DirectedMatroid:
    """Ground set with a family of independent sequences (ordered tuples)."""

    def __init__(self, ground, sequences, mode=None, vectors=None):
        self.ground = tuple(sorted(set(int(g) for g in ground)))
        family = {()}
        for s in sequences:
            family.add(tuple(int(x) for x in s))
        self.family = frozenset(family)
        self.rank = max((len(s) for s in self.family), default=0)
        self.mode = mode
        self.vectors = vectors

    def is_independent(self, seq):
        return tuple(int(x) for x in seq) in self.family

    def sequences_of_size(self, k):
        return sorted(s for s in self.family if len(s) == k)

    def underlying(self):
        return Matroid(self.ground, [frozenset(s) for s in self.family if s],
                       vectors=self.vectors)

    def join(self, other):
        common = set(self.ground) & set(other.ground)
        if common:
            raise ValueError(f"ground sets overlap on {sorted(common)}")
        family = {a + b for a in self.family for b in other.family}
        return DirectedMatroid(self.ground + other.ground, family)

    def complex(self):
        return Hyperdigraph([s for s in self.family if s],
                            grade_cap=max(self.rank, DEFAULT_GRADE_CAP))

    def is_sigma_invariant(self):
        return all(tuple(p) in self.family
                   for s in self.family for p in permutations(s))

    def __repr__(self):
        return (f"DirectedMatroid(|S|={len(self.ground)}, rank={self.rank}, "
                f"|I|={len(self.family)}, mode={self.mode})")


def vectorial_matroid(vset, size_cap=None):
    """All subsets of labels whose vectors are linearly independent."""
    cap = vset.dim if size_cap is None else size_cap
    cap = min(cap, len(vset))
    sets = []
    for k in range(1, cap + 1):
        for combo in combinations(vset.labels, k):
            if exact_rank(vset.field, [vset.vector(l) for l in combo]) == k:
                sets.append(combo)
    return Matroid(vset.labels, sets, vectors=vset)


def directed_vectorial_matroid(vset, mode=FULL_ORBIT, size_cap=None):
    """Ordered tuples of linearly independent vectors.

    full-orbit: every ordering of an independent set (order-invariant).
    first-coordinate: only orderings with weakly increasing first
    coordinates; generally not order-invariant.
    """
    base = vectorial_matroid(vset, size_cap=size_cap)
    seqs = []
    for s in base.family:
        if not s:
            continue
        for p in permutations(sorted(s)):
            if mode == FULL_ORBIT:
                seqs.append(p)
            elif mode == FIRST_COORDINATE:
                firsts = [vset.vector(l)[0] for l in p]
                if all(a <= b for a, b in zip(firsts, firsts[1:])):
                    seqs.append(p)
            else:
                raise ValueError(f"unknown mode {mode!r}")
    return DirectedMatroid(vset.labels, seqs, mode=mode, vectors=vset)


def affine_matroid(vset, size_cap=None):
    """Independence = affine independence = linear independence homogenized."""
    homog = vset.homogenized()
    cap = homog.dim if size_cap is None else size_cap
    m = vectorial_matroid(homog, size_cap=cap)
    return Matroid(vset.labels, [s for s in m.family if s], vectors=vset)


def check_hereditary(m):
    """(I2): subsets of independent sets are independent."""
    for s in m.family:
        for x in s:
            if frozenset(s - {x}) not in m.family:
                return False
    return True


def check_exchange(m):
    """(I3): a larger independent set lends an element to a smaller one."""
    by_size = {}
    for s in m.family:
        by_size.setdefault(len(s), []).append(s)
    for k, smaller in by_size.items():
        larger = by_size.get(k + 1, [])
        for s1 in smaller:
            for s2 in larger:
                if not any(s1 | {x} in m.family for x in s2 - s1):
                    return False
    return True


def check_directed_axioms(dm):
    """(I1)'-(I3)' for a directed matroid."""
    fam = dm.family
    if () not in fam:
        return False
    for s in fam:
        for i in range(len(s)):
            if s[:i] + s[i + 1:] not in fam:
                return False
    by_size = {}
    for s in fam:
        by_size.setdefault(len(s), []).append(s)
    for k, smaller in by_size.items():
        larger = by_size.get(k + 1, [])
        for s1 in smaller:
            for s2 in larger:
                extra = [x for x in s2 if x not in s1]
                if not extra:
                    continue
                ok = any(s1[:i] + (x,) + s1[i:] in fam
                         for x in extra for i in range(len(s1) + 1))
                if not ok:
                    return False
    return True
