"""Graphs, geodesic distance, distance powers, and independence complexes."""

from collections import deque
from itertools import permutations

from .hyperstructures import DEFAULT_GRADE_CAP, Hyperdigraph, Hypergraph


class Infinity:
    """The infinite geodesic distance (disconnected vertices)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __hash__(self):
        return hash("Infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, Infinity)

    def __gt__(self, other):
        return not isinstance(other, Infinity)

    def __ge__(self, other):
        return True

    def __repr__(self):
        return "inf"


INF = Infinity()


class Graph:
    """Finite simple graph on non-negative integer vertices."""

    def __init__(self, vertices, edges):
        self.vertices = frozenset(int(v) for v in vertices)
        norm = set()
        for e in edges:
            u, v = sorted(int(x) for x in e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u},{v}) leaves the vertex set")
            norm.add((u, v))
        self.edges = frozenset(norm)
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    def adjacent(self, u, v):
        return v in self._adj[u]

    def neighbors(self, v):
        return self._adj[v]

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph({sorted(self.vertices)}, {sorted(self.edges)})"

    def to_json(self):
        return {"vertices": sorted(self.vertices),
                "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data):
        return cls(data["vertices"], data["edges"])

    def relabelled(self, mapping):
        return Graph([mapping[v] for v in self.vertices],
                     [(mapping[u], mapping[v]) for u, v in self.edges])


def geodesic_distance(g, u, v):
    """Length of a shortest path; INF when u and v are disconnected."""
    if u not in g.vertices or v not in g.vertices:
        raise ValueError(f"unknown vertex in ({u}, {v})")
    if u == v:
        return 0
    seen = {u: 0}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for x in g.neighbors(w):
            if x not in seen:
                seen[x] = seen[w] + 1
                if x == v:
                    return seen[x]
                queue.append(x)
    return INF


def distance_power(g, l):
    """Graph with u ~ v iff 0 < d_g(u, v) <= l."""
    if l < 1:
        raise ValueError("distance power needs l >= 1")
    edges = []
    verts = sorted(g.vertices)
    for i, u in enumerate(verts):
        dist = _bfs_up_to(g, u, l)
        for v in verts[i + 1:]:
            if dist.get(v, None) is not None:
                edges.append((u, v))
    return Graph(g.vertices, edges)


def _bfs_up_to(g, source, l):
    seen = {source: 0}
    queue = deque([source])
    while queue:
        w = queue.popleft()
        if seen[w] == l:
            continue
        for x in g.neighbors(w):
            if x not in seen:
                seen[x] = seen[w] + 1
                queue.append(x)
    del seen[source]
    return seen


def independence_number(g):
    """Exact maximum independent set size, by branch and bound."""
    verts = sorted(g.vertices)
    best = 0

    def grow(chosen, candidates):
        nonlocal best
        if chosen + len(candidates) <= best:
            return
        if not candidates:
            best = max(best, chosen)
            return
        v = max(candidates, key=lambda w: (len(g.neighbors(w) & candidates), -w))
        grow(chosen + 1, candidates - g.neighbors(v) - {v})
        grow(chosen, candidates - {v})

    grow(0, frozenset(verts))
    return best


def _resolve_max_card(g, max_card):
    if max_card is not None:
        if max_card < 1:
            raise ValueError("max_card must be positive")
        return max_card
    if len(g.vertices) > 24:
        raise ValueError("graph too large for a default cap; pass max_card")
    return max(independence_number(g), 1)


def independent_sets(g, max_card):
    """All non-empty independent sets of size <= max_card, sorted."""
    verts = sorted(g.vertices)
    index = {v: i for i, v in enumerate(verts)}
    masks = {v: 0 for v in verts}
    for v in verts:
        for w in g.neighbors(v):
            masks[v] |= 1 << index[w]
    out = []

    def extend(current, allowed_from):
        if len(current) >= max_card:
            return
        for i in range(allowed_from, len(verts)):
            v = verts[i]
            if any(masks[v] >> index[u] & 1 for u in current):
                continue
            nxt = current + (v,)
            out.append(nxt)
            extend(nxt, i + 1)

    extend((), 0)
    return out


def independence_complex(g, max_card=None):
    """Simplicial complex of independent vertex sets (size <= max_card)."""
    cap = _resolve_max_card(g, max_card)
    return Hypergraph(independent_sets(g, cap),
                      grade_cap=max(cap, DEFAULT_GRADE_CAP))


def directed_independence_complex(g, max_card=None):
    """Ordered tuples of distinct, mutually non-adjacent vertices."""
    cap = _resolve_max_card(g, max_card)
    tuples = []
    for s in independent_sets(g, cap):
        tuples.extend(permutations(s))
    return Hyperdigraph(tuples, grade_cap=max(cap, DEFAULT_GRADE_CAP))


def conf_layer(g, k):
    """Ordered configuration space Conf_k(G) and its quotient by reordering."""
    if k < 1:
        raise ValueError("k must be positive")
    sets_k = [s for s in independent_sets(g, k) if len(s) == k]
    ordered = Hyperdigraph([p for s in sets_k for p in permutations(s)],
                           grade_cap=max(k, DEFAULT_GRADE_CAP))
    unordered = Hypergraph(sets_k, grade_cap=max(k, DEFAULT_GRADE_CAP))
    return ordered, unordered


def skeleton(h, top_dim):
    if top_dim < 0:
        raise ValueError("skeleton dimension must be >= 0")
    return h.skeleton(top_dim)


def disjoint_union(g, h):
    if g.vertices & h.vertices:
        raise ValueError("vertex sets overlap; relabel first")
    return Graph(g.vertices | h.vertices, list(g.edges) + list(h.edges))


def reduced_join(g, h):
    """Disjoint union plus every cross edge; Ind splits into a disjoint union."""
    base = disjoint_union(g, h)
    cross = [(u, v) for u in g.vertices for v in h.vertices]
    return Graph(base.vertices, list(base.edges) + cross)


def cycle(n):
    if n < 3:
        raise ValueError("cycles need n >= 3")
    verts = list(range(1, n + 1))
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    return Graph(verts, edges)


def path(n):
    if n < 1:
        raise ValueError("paths need n >= 1")
    verts = list(range(1, n + 1))
    edges = [(i, i + 1) for i in range(1, n)]
    return Graph(verts, edges)


def complete_graph(n):
    verts = list(range(1, n + 1))
    return Graph(verts, [(i, j) for i in verts for j in verts if i < j])


def empty_graph(n):
    return Graph(range(1, n + 1), [])
