"""Hypergraphs and hyperdigraphs: graded families of (ordered) vertex tuples.

Vertices are non-negative integers; the numeric order doubles as the total
order used everywhere (sorting simplices, orientation signs).  Edges are
stored graded by cardinality.  Values are immutable; every operation
returns a new object.
"""

from itertools import combinations, permutations

DEFAULT_GRADE_CAP = 12


def _check_edge(e, directed, cap):
    t = tuple(int(v) for v in e)
    if not t:
        raise ValueError("hyperedges must be non-empty")
    if len(set(t)) != len(t):
        raise ValueError(f"repeated vertex in hyperedge {t}")
    if any(v < 0 for v in t):
        raise ValueError("vertex labels must be non-negative")
    if len(t) > cap:
        raise ValueError(f"hyperedge of size {len(t)} exceeds the grade cap {cap}")
    return t if directed else tuple(sorted(t))


class _Graded:
    """Shared storage for both edge kinds: grade -> frozenset of tuples."""

    directed = None

    def __init__(self, edges=(), grade_cap=DEFAULT_GRADE_CAP):
        levels = {}
        for e in edges:
            t = _check_edge(e, self.directed, grade_cap)
            levels.setdefault(len(t), set()).add(t)
        self.levels = {k: frozenset(v) for k, v in sorted(levels.items())}
        self.grade_cap = grade_cap

    def level(self, k):
        return self.levels.get(k, frozenset())

    def grades(self):
        return sorted(self.levels)

    @property
    def dimension(self):
        return max(self.levels) - 1 if self.levels else -1

    def edges(self):
        """All edges in canonical order: by (cardinality, tuple)."""
        out = []
        for k in self.grades():
            out.extend(sorted(self.levels[k]))
        return out

    def vertex_support(self):
        return frozenset(v for k in self.levels for e in self.levels[k] for v in e)

    def __contains__(self, e):
        t = tuple(e) if self.directed else tuple(sorted(e))
        return t in self.level(len(t))

    def __len__(self):
        return sum(len(v) for v in self.levels.values())

    def __eq__(self, other):
        return type(self) is type(other) and self.levels == other.levels

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.levels.items()))))

    def __repr__(self):
        return f"{type(self).__name__}({self.edges()})"

    def _new(self, edges):
        return type(self)(edges, grade_cap=self.grade_cap)

    def union(self, other):
        return self._new(self.edges() + other.edges())

    def intersection(self, other):
        return self._new([e for e in self.edges() if e in other])

    def is_subset_of(self, other):
        return all(e in other for e in self.edges())

    def skeleton(self, top_dim):
        """Keep edges of cardinality <= top_dim + 1."""
        return self._new([e for e in self.edges() if len(e) <= top_dim + 1])

    def relabelled(self, mapping):
        return self._new([tuple(mapping[v] for v in e) for e in self.edges()])


class Hypergraph(_Graded):
    directed = False

    def delta_closure(self):
        """Smallest simplicial complex containing this hypergraph."""
        closed = set()
        for e in self.edges():
            for r in range(1, len(e) + 1):
                closed.update(combinations(e, r))
        return self._new(closed)

    def lower_closure(self):
        """Largest simplicial complex contained in this hypergraph."""
        keep = set()
        for k in self.grades():
            for e in sorted(self.levels[k]):
                if all(f in keep for r in range(1, len(e))
                       for f in combinations(e, r)):
                    keep.add(e)
        return self._new(keep)

    def is_simplicial(self):
        for e in self.edges():
            for r in range(1, len(e)):
                for f in combinations(e, r):
                    if f not in self.level(r):
                        return False
        return True

    def join(self, other):
        _require_disjoint(self, other)
        joined = list(self.edges()) + list(other.edges())
        for e in self.edges():
            for f in other.edges():
                joined.append(tuple(sorted(e + f)))
        return Hypergraph(joined, grade_cap=max(self.grade_cap, other.grade_cap))

    def to_json(self):
        return {"edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data, grade_cap=DEFAULT_GRADE_CAP):
        return cls(data["edges"], grade_cap=grade_cap)


class Hyperdigraph(_Graded):
    directed = True

    def sym_closure(self):
        """Smallest ambient family invariant under all coordinate permutations."""
        out = set()
        for e in self.edges():
            out.update(orbit(e))
        return self._new(out)

    def is_sigma_invariant(self):
        for k in self.grades():
            lv = self.levels[k]
            for e in lv:
                if any(p not in lv for p in permutations(e)):
                    return False
        return True

    def underlying(self):
        """Forget order; the projection pi onto unordered hyperedges."""
        return Hypergraph([tuple(sorted(e)) for e in self.edges()],
                          grade_cap=self.grade_cap)

    def delta_closure(self):
        """Smallest directed simplicial complex containing this hyperdigraph.

        Directed simplicial complexes are closed under order-preserving
        subsequences, not under reordering.
        """
        closed = set()
        for e in self.edges():
            for r in range(1, len(e) + 1):
                closed.update(combinations(e, r))
        return self._new(closed)

    def lower_closure(self):
        keep = set()
        for k in self.grades():
            for e in sorted(self.levels[k]):
                if all(f in keep for r in range(1, len(e))
                       for f in combinations(e, r)):
                    keep.add(e)
        return self._new(keep)

    def is_simplicial(self):
        for e in self.edges():
            for r in range(1, len(e)):
                for f in combinations(e, r):
                    if f not in self.level(r):
                        return False
        return True

    def join(self, other):
        _require_disjoint(self, other)
        joined = list(self.edges()) + list(other.edges())
        for e in self.edges():
            for f in other.edges():
                joined.append(e + f)
        return Hyperdigraph(joined, grade_cap=max(self.grade_cap, other.grade_cap))

    def to_json(self):
        return {"dedges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data, grade_cap=DEFAULT_GRADE_CAP):
        return cls(data["dedges"], grade_cap=grade_cap)


def orbit(e):
    """All permutations of a directed hyperedge."""
    return {tuple(p) for p in permutations(tuple(e))}


def _require_disjoint(a, b):
    common = a.vertex_support() & b.vertex_support()
    if common:
        raise ValueError(f"vertex sets overlap on {sorted(common)}; "
                         f"relabel one side first (see relabelled)")


def offset_relabel(h, offset):
    """Shift every vertex label by a fixed offset (disjointness helper)."""
    support = h.vertex_support()
    return h.relabelled({v: v + offset for v in support})


def hyper_from_json(data, grade_cap=DEFAULT_GRADE_CAP):
    """Dispatch on the JSON schema: "edges"=hypergraph, "dedges"=hyperdigraph."""
    if "dedges" in data:
        return Hyperdigraph.from_json(data, grade_cap=grade_cap)
    if "edges" in data:
        return Hypergraph.from_json(data, grade_cap=grade_cap)
    raise ValueError("expected an 'edges' or 'dedges' key")
