"""Homology groups presented by cycle generators modulo boundary relations.

A presentation keeps the cycle basis in the chain coordinates of its
complex, so induced maps on homology can be built later from chain-level
data without recomputing anything.  All the diagram verdicts (equality of
maps, exactness, commutativity) reduce to lattice membership tests here;
over Z they are genuinely integral, never just rank counting.
"""

from .abgroups import FgAbGroup
from .matrix import Matrix
from .solve import diagonalize, kernel_basis, solve, solve_matrix


class NotAComplexError(ValueError):
    pass


class HomologyPresentation:
    """ker(D_n) / im(D_{n+1}) with lift data.

    cycles: chain_dim x r matrix whose columns generate the cycle module
    (over Z the full kernel lattice).  relations: r x s matrix expressing
    the boundaries in cycle coordinates.
    """

    __slots__ = ("ring", "cycles", "relations", "ambient_cycles", "group", "_uni", "_diag")

    def __init__(self, ring, cycles, relations, ambient_cycles=None):
        self.ring = ring
        self.cycles = cycles
        self.relations = relations
        self.ambient_cycles = cycles if ambient_cycles is None else ambient_cycles
        dec = diagonalize(relations)
        r = cycles.ncols
        diag = list(dec.diagonal) + [ring.zero()] * (r - len(dec.diagonal))
        self._uni = dec.U
        self._diag = diag[:r]
        free = sum(1 for d in self._diag if ring.is_zero(d))
        if ring.is_field:
            self.group = FgAbGroup(free, ())
        else:
            self.group = FgAbGroup.from_orders(free, [d for d in self._diag if d >= 2])

    @property
    def num_generators(self):
        return self.cycles.ncols

    def cycle_coords(self, chain_vec):
        """Coordinates of an ambient cycle in the stored cycle basis (or None)."""
        return solve(self.ambient_cycles, chain_vec)

    def class_key(self, coords):
        """Canonical invariant coordinates of the class of a coordinate vector."""
        y = self._uni.apply_to_vector(coords)
        R = self.ring
        key = []
        for yi, d in zip(y, self._diag):
            if R.is_zero(d):
                key.append(yi)
            elif not R.is_field and d >= 2:
                key.append(yi % d)
            # d a unit: slot is killed
        return tuple(key)

    def coords_are_boundary(self, coords):
        return solve(self.relations, coords) is not None

    def chain_is_boundary(self, chain_vec):
        coords = self.cycle_coords(chain_vec)
        if coords is None:
            raise ValueError("vector is not a cycle")
        return self.coords_are_boundary(coords)

    def quotient_by(self, extra):
        """Group of cycles / (relations + extra columns)."""
        stacked = self.relations.hstack(extra)
        dec = diagonalize(stacked)
        r = self.num_generators
        diag = list(dec.diagonal) + [self.ring.zero()] * (r - len(dec.diagonal))
        free = sum(1 for d in diag[:r] if self.ring.is_zero(d))
        if self.ring.is_field:
            return FgAbGroup(free, ())
        return FgAbGroup.from_orders(free, [d for d in diag[:r] if d >= 2])


def homology_of_pair(D_n, D_np1):
    """Homology of a two-step complex: ker(D_n)/im(D_{n+1}).

    D_n leaves the degree in question, D_{n+1} enters it; requires
    D_n @ D_{n+1} = 0.
    """
    if D_n.ncols != D_np1.nrows:
        raise ValueError("boundary shapes do not compose")
    if not (D_n @ D_np1).is_zero():
        raise NotAComplexError("boundary composition is nonzero")
    cycles = kernel_basis(D_n)
    relations = solve_matrix(cycles, D_np1)
    assert relations is not None, "boundaries not inside the cycle module"
    return HomologyPresentation(D_n.ring, cycles, relations)


class GroupHom:
    """Homomorphism between presented homology groups.

    The matrix acts on cycle coordinates: target_coords = matrix @
    source_coords.  Well-definedness (relations map into relations) is a
    checked property, not an assumption.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = matrix
        if not self._is_well_defined():
            raise ValueError("matrix does not respect the boundary relations")

    def _is_well_defined(self):
        mapped = self.matrix @ self.source.relations
        for j in range(mapped.ncols):
            if not self.target.coords_are_boundary(mapped.column(j)):
                return False
        return True

    @classmethod
    def from_chain_matrix(cls, source, target, chain_matrix):
        """Build the induced map from a chain-level matrix on ambient chains."""
        mapped = chain_matrix @ source.ambient_cycles
        coords = solve_matrix(target.ambient_cycles, mapped)
        if coords is None:
            raise ValueError("chain map does not send cycles to target cycles")
        return cls(source, target, coords)

    @classmethod
    def identity(cls, pres):
        return cls(pres, pres, Matrix.identity(pres.ring, pres.num_generators))

    @classmethod
    def zero(cls, source, target):
        return cls(source, target,
                   Matrix.zeros(source.ring, target.num_generators, source.num_generators))

    def compose(self, other):
        """self after other."""
        if other.target is not self.source and other.target.cycles != self.source.cycles:
            raise ValueError("composition mismatch")
        return GroupHom(other.source, self.target, self.matrix @ other.matrix)

    def equals(self, other):
        if self.source.num_generators != other.source.num_generators:
            return False
        diff = self.matrix - other.matrix
        return all(self.target.coords_are_boundary(diff.column(j))
                   for j in range(diff.ncols))

    def is_zero(self):
        return all(self.target.coords_are_boundary(self.matrix.column(j))
                   for j in range(self.matrix.ncols))

    def kernel_generators(self):
        """Columns generating {x : F x lies in the target relations}."""
        block = self.matrix.hstack(self.target.relations)
        ker = kernel_basis(block)
        r = self.source.num_generators
        return ker.submatrix_rows(list(range(r)))

    def is_injective(self):
        gens = self.kernel_generators()
        return all(self.source.coords_are_boundary(gens.column(j))
                   for j in range(gens.ncols))

    def image_with_relations(self):
        return self.matrix.hstack(self.target.relations)

    def is_surjective(self):
        span = self.image_with_relations()
        R = self.target.ring
        n = self.target.num_generators
        for i in range(n):
            e = [R.zero()] * n
            e[i] = R.one()
            if solve(span, e) is None:
                return False
        return True


def is_exact_at(f, g):
    """Exactness of A --f--> B --g--> C at B, checked by double inclusion."""
    if not g.compose(f).is_zero():
        return False
    span = f.image_with_relations()
    ker = g.kernel_generators()
    return all(solve(span, ker.column(j)) is not None for j in range(ker.ncols))


def squares_commute(top, bottom, left, right):
    """Does right o top == bottom o left (a commuting square of GroupHoms)?"""
    return right.compose(top).equals(bottom.compose(left))
