"""Embedded homology of hyper(di)graphs and the projection comparison."""

from math import factorial

from ..hyperstructures import Hyperdigraph
from .chains import chain_complex, inf_complex, projection_chain_map, sup_complex


class EmbeddedHomologyMismatch(AssertionError):
    """Inf-homology and Sup-homology disagree: would falsify the theory.

    Carries a minimized counterexample (edge list) for the bug report.
    """

    def __init__(self, hyper, ring, degree, inf_group, sup_group):
        self.hyper = hyper
        self.ring = ring
        self.degree = degree
        self.inf_group = inf_group
        self.sup_group = sup_group
        super().__init__(
            f"embedded homology mismatch over {ring} in degree {degree}: "
            f"Inf gives {inf_group}, Sup gives {sup_group}; "
            f"minimized edges: {hyper.edges()}")


class EmbeddedHomology:
    """Embedded homology with its quasi-isomorphism certificate."""

    def __init__(self, hyper, ring, inf, sup):
        self.hyper = hyper
        self.ring = ring
        self.inf = inf
        self.sup = sup
        self.groups = {}
        top = max(inf.top, sup.top)
        for n in range(max(inf.min_degree, 0), top + 1):
            self.groups[n] = inf.homology(n).group
        self.certificate = {
            n: (inf.homology(n).group, sup.homology(n).group)
            for n in range(max(inf.min_degree, 0), top + 1)
        }

    def presentation(self, n):
        return self.inf.homology(n)


def _first_mismatch(hyper, ring, augmented):
    inf = inf_complex(hyper, ring, augmented=augmented)
    sup = sup_complex(hyper, ring, augmented=augmented)
    top = max(inf.top, sup.top)
    for n in range(max(inf.min_degree, 0), top + 1):
        gi, gs = inf.homology(n).group, sup.homology(n).group
        if gi != gs:
            return n, gi, gs, inf, sup
    return None, None, None, inf, sup


def embedded_homology(hyper, ring, augmented=False):
    """Homology of the Inf and Sup complexes, checked to agree degreewise.

    A disagreement is a hard failure: the exception carries a minimized
    counterexample obtained by greedily dropping edges.
    """
    n, gi, gs, inf, sup = _first_mismatch(hyper, ring, augmented)
    if n is None:
        return EmbeddedHomology(hyper, ring, inf, sup)
    small = hyper
    shrinking = True
    while shrinking:
        shrinking = False
        for e in small.edges():
            cand = type(small)([f for f in small.edges() if f != e],
                               grade_cap=small.grade_cap)
            if len(cand) == 0:
                continue
            bad, bgi, bgs, _, _ = _first_mismatch(cand, ring, augmented)
            if bad is not None:
                small, n, gi, gs = cand, bad, bgi, bgs
                shrinking = True
                break
    raise EmbeddedHomologyMismatch(small, ring, n, gi, gs)


def homology_groups_of(K, ring, augmented=False):
    """Plain (or reduced, if augmented) homology of a (directed) simplicial complex."""
    return chain_complex(K, ring, augmented=augmented).homology_groups()


class SigmaComparisonReport:
    """Chain-rank identity versus the homology-level comparison.

    The chain-level statement rank C_{k-1}(ordered) = k! * rank C_{k-1}(unordered)
    is asserted; the homology-level comparison is only reported, degree by
    degree, because it can genuinely fail (see the two-vertex example).
    """

    def __init__(self, chain_ranks, homology_rows):
        self.chain_ranks = chain_ranks
        self.homology_rows = homology_rows
        self.chain_identity_holds = all(
            ordered == factorial(n + 1) * unordered
            for n, (ordered, unordered) in chain_ranks.items())
        self.homology_matches = all(row["match"] for row in homology_rows.values())

    def to_json(self):
        return {
            "chain_identity": self.chain_identity_holds,
            "chain_ranks": {str(n): list(v) for n, v in sorted(self.chain_ranks.items())},
            "homology": {
                str(n): {
                    "ordered": row["ordered"].to_json(),
                    "unordered_power": row["unordered_power"].to_json(),
                    "verdict": "MATCH" if row["match"] else "MISMATCH",
                }
                for n, row in sorted(self.homology_rows.items())
            },
        }


def sigma_invariant_comparison(Kd, ring):
    """Compare an order-invariant directed complex with its underlying complex."""
    if not isinstance(Kd, Hyperdigraph):
        raise TypeError("expected a hyperdigraph")
    if not Kd.is_sigma_invariant():
        raise ValueError("input is not invariant under reorderings")
    K = Kd.underlying()
    Cd = chain_complex(Kd, ring)
    C = chain_complex(K, ring)
    chain_ranks = {}
    for n in range(0, Cd.top + 1):
        chain_ranks[n] = (Cd.dim(n), C.dim(n))
    rows = {}
    for n in range(0, Cd.top + 1):
        ordered = Cd.homology(n).group
        base = C.homology(n).group
        power = base
        for _ in range(factorial(n + 1) - 1):
            power = power.direct_sum(base)
        rows[n] = {"ordered": ordered, "unordered_power": power,
                   "match": ordered == power}
    return SigmaComparisonReport(chain_ranks, rows)


def underlying_projection(Kd, ring, augmented=False):
    """The signed projection chain map and both complexes."""
    K = Kd.underlying()
    Cd = chain_complex(Kd, ring, augmented=augmented)
    C = chain_complex(K, ring, augmented=augmented)
    return projection_chain_map(Cd, C), Cd, C


def induced_map_on_homology(f):
    """All degreewise homomorphisms induced by a verified chain map."""
    lo = max(f.source.min_degree, 0)
    hi = max(f.source.top, f.target.top)
    return {n: f.induced_on_homology(n) for n in range(lo, hi + 1)}
