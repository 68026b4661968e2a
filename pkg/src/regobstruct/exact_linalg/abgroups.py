"""Finitely generated abelian groups as rank + invariant factors."""

from math import gcd


def _factorint(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors_of(orders):
    """Normalize a multiset of cyclic orders into the invariant factor chain.

    >>> invariant_factors_of([4, 6])
    [2, 12]
    """
    by_prime = {}
    for d in orders:
        if d in (0, 1):
            continue
        for p, e in _factorint(d).items():
            by_prime.setdefault(p, []).append(e)
    k = max((len(v) for v in by_prime.values()), default=0)
    factors = []
    for slot in range(k):
        f = 1
        for p, exps in by_prime.items():
            exps = sorted(exps, reverse=True)
            if slot < len(exps):
                f *= p ** exps[slot]
        factors.append(f)
    factors.reverse()
    return factors


class FgAbGroup:
    """Z^rank + torsion with invariant factors d_1 | d_2 | ..., each >= 2."""

    __slots__ = ("rank", "invariant_factors")

    def __init__(self, rank=0, invariant_factors=()):
        factors = [int(d) for d in invariant_factors]
        if any(d < 2 for d in factors):
            raise ValueError("invariant factors must be >= 2")
        for a, b in zip(factors, factors[1:]):
            if b % a != 0:
                factors = invariant_factors_of(factors)
                break
        self.rank = int(rank)
        self.invariant_factors = tuple(factors)

    @classmethod
    def from_orders(cls, rank, orders):
        return cls(rank, invariant_factors_of(orders))

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.invariant_factors

    def __eq__(self, other):
        return (isinstance(other, FgAbGroup)
                and self.rank == other.rank
                and self.invariant_factors == other.invariant_factors)

    def __hash__(self):
        return hash((self.rank, self.invariant_factors))

    def direct_sum(self, other):
        return FgAbGroup.from_orders(self.rank + other.rank,
                                     self.invariant_factors + other.invariant_factors)

    def __repr__(self):
        return f"FgAbGroup({self.rank}, {list(self.invariant_factors)})"

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " ⊕ ".join(parts) if parts else "0"

    def to_json(self):
        return {"rank": self.rank, "torsion": [str(d) for d in self.invariant_factors]}


def direct_sum(groups):
    rank = sum(g.rank for g in groups)
    orders = [d for g in groups for d in g.invariant_factors]
    return FgAbGroup.from_orders(rank, orders)


def tensor_fgab(A, B):
    """A (x) B for f.g. abelian groups.

    Z^a (x) Z^b = Z^(ab); Z/d (x) Z = Z/d; Z/d (x) Z/e = Z/gcd(d, e).
    """
    orders = []
    orders.extend(d for d in A.invariant_factors for _ in range(B.rank))
    orders.extend(e for e in B.invariant_factors for _ in range(A.rank))
    orders.extend(gcd(d, e) for d in A.invariant_factors for e in B.invariant_factors)
    return FgAbGroup.from_orders(A.rank * B.rank, orders)


def tor_fgab(A, B):
    """Tor(A, B): free parts die, Tor(Z/d, Z/e) = Z/gcd(d, e)."""
    orders = [gcd(d, e) for d in A.invariant_factors for e in B.invariant_factors]
    return FgAbGroup.from_orders(0, orders)
