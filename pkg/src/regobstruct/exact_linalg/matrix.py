"""Exact matrices over Z, Q, or GF(p).

A matrix is immutable after construction.  Small or dense matrices hold a
tuple of row tuples; matrices with at least SPARSE_CELLS cells and fewer
than SPARSE_FILL nonzeros are stored as a triplet dict instead.  The two
storages are interchangeable and never change any result.
"""

from .rings import ZZ

SPARSE_CELLS = 10_000
SPARSE_FILL = 0.05


class Matrix:
    __slots__ = ("ring", "nrows", "ncols", "_rows", "_trip", "_diag_cache")

    def __init__(self, ring, nrows, ncols, rows=None, triplets=None):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self._diag_cache = None
        if rows is None and triplets is None:
            raise ValueError("need rows or triplets")
        if rows is not None:
            nnz = sum(1 for row in rows for a in row if a)
            if nrows * ncols >= SPARSE_CELLS and nnz < SPARSE_FILL * nrows * ncols:
                self._rows = None
                self._trip = {
                    (i, j): a
                    for i, row in enumerate(rows)
                    for j, a in enumerate(row)
                    if a
                }
            else:
                self._rows = tuple(tuple(row) for row in rows)
                self._trip = None
        else:
            trip = {k: v for k, v in triplets.items() if v}
            if nrows * ncols >= SPARSE_CELLS and len(trip) < SPARSE_FILL * nrows * ncols:
                self._rows = None
                self._trip = trip
            else:
                zero = ring.zero()
                dense = [[zero] * ncols for _ in range(nrows)]
                for (i, j), v in trip.items():
                    dense[i][j] = v
                self._rows = tuple(tuple(row) for row in dense)
                self._trip = None

    @classmethod
    def from_rows(cls, ring, rows, ncols=None):
        rows = [[ring.convert(a) for a in row] for row in rows]
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise ValueError("ragged rows")
        return cls(ring, nrows, ncols, rows=rows)

    @classmethod
    def from_columns(cls, ring, cols, nrows=None):
        cols = list(cols)
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        rows = [[ring.convert(col[i]) for col in cols] for i in range(nrows)]
        return cls(ring, nrows, len(cols), rows=rows)

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        return cls(ring, nrows, ncols, triplets={})

    @classmethod
    def identity(cls, ring, n):
        one = ring.one()
        return cls(ring, n, n, triplets={(i, i): one for i in range(n)})

    def __getitem__(self, key):
        i, j = key
        if self._rows is not None:
            return self._rows[i][j]
        return self._trip.get((i, j), self.ring.zero())

    def row(self, i):
        if self._rows is not None:
            return list(self._rows[i])
        zero = self.ring.zero()
        out = [zero] * self.ncols
        for (r, c), v in self._trip.items():
            if r == i:
                out[c] = v
        return out

    def column(self, j):
        if self._rows is not None:
            return [row[j] for row in self._rows]
        zero = self.ring.zero()
        out = [zero] * self.nrows
        for (r, c), v in self._trip.items():
            if c == j:
                out[r] = v
        return out

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def to_rows(self):
        return [self.row(i) for i in range(self.nrows)]

    def iter_nonzero(self):
        if self._trip is not None:
            yield from sorted(self._trip.items())
        else:
            for i, row in enumerate(self._rows):
                for j, a in enumerate(row):
                    if a:
                        yield (i, j), a

    def nnz(self):
        return sum(1 for _ in self.iter_nonzero())

    def is_zero(self):
        return next(iter(self.iter_nonzero()), None) is None

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.ring, self.nrows, self.ncols) != (other.ring, other.nrows, other.ncols):
            return False
        return dict(self.iter_nonzero()) == dict(other.iter_nonzero())

    def __hash__(self):
        return hash((self.ring, self.nrows, self.ncols, tuple(self.iter_nonzero())))

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        R = self.ring
        trip = {}
        cols_of_other = {}
        for (k, j), b in other.iter_nonzero():
            cols_of_other.setdefault(k, []).append((j, b))
        for (i, k), a in self.iter_nonzero():
            for j, b in cols_of_other.get(k, ()):
                key = (i, j)
                prev = trip.get(key)
                trip[key] = R.mul(a, b) if prev is None else R.add(prev, R.mul(a, b))
        return Matrix(R, self.nrows, other.ncols, triplets=trip)

    def __add__(self, other):
        trip = dict(self.iter_nonzero())
        R = self.ring
        for key, v in other.iter_nonzero():
            trip[key] = R.add(trip.get(key, R.zero()), v)
        return Matrix(R, self.nrows, self.ncols, triplets=trip)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        R = self.ring
        return Matrix(R, self.nrows, self.ncols,
                      triplets={k: R.neg(v) for k, v in self.iter_nonzero()})

    def transpose(self):
        return Matrix(self.ring, self.ncols, self.nrows,
                      triplets={(j, i): v for (i, j), v in self.iter_nonzero()})

    def hstack(self, other):
        if self.nrows != other.nrows or self.ring != other.ring:
            raise ValueError("hstack mismatch")
        trip = dict(self.iter_nonzero())
        for (i, j), v in other.iter_nonzero():
            trip[(i, j + self.ncols)] = v
        return Matrix(self.ring, self.nrows, self.ncols + other.ncols, triplets=trip)

    def vstack(self, other):
        if self.ncols != other.ncols or self.ring != other.ring:
            raise ValueError("vstack mismatch")
        trip = dict(self.iter_nonzero())
        for (i, j), v in other.iter_nonzero():
            trip[(i + self.nrows, j)] = v
        return Matrix(self.ring, self.nrows + other.nrows, self.ncols, triplets=trip)

    def submatrix_columns(self, js):
        pos = {j: t for t, j in enumerate(js)}
        trip = {(i, pos[j]): v for (i, j), v in self.iter_nonzero() if j in pos}
        return Matrix(self.ring, self.nrows, len(js), triplets=trip)

    def submatrix_rows(self, iss):
        pos = {i: t for t, i in enumerate(iss)}
        trip = {(pos[i], j): v for (i, j), v in self.iter_nonzero() if i in pos}
        return Matrix(self.ring, len(iss), self.ncols, triplets=trip)

    def apply_to_vector(self, vec):
        R = self.ring
        add, mul = R.add, R.mul
        if self._rows is not None:
            out = []
            for row in self._rows:
                acc = R.ZERO
                for a, x in zip(row, vec):
                    if a and x:
                        acc = add(acc, mul(a, x))
                out.append(acc)
            return out
        out = [R.ZERO] * self.nrows
        for (i, j), a in self._trip.items():
            x = vec[j]
            if x:
                out[i] = add(out[i], mul(a, x))
        return out

    def change_ring(self, ring):
        return Matrix(ring, self.nrows, self.ncols,
                      triplets={k: ring.convert(v) for k, v in self.iter_nonzero()})

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __repr__(self):
        if self.nrows * self.ncols <= 64:
            body = "; ".join(" ".join(str(a) for a in self.row(i)) for i in range(self.nrows))
            return f"Matrix({self.ring}, [{body}])"
        return f"Matrix({self.ring}, {self.nrows}x{self.ncols}, nnz={self.nnz()})"


def integer_matrix(rows):
    return Matrix.from_rows(ZZ, rows)


def block_diag(ring, blocks):
    """Block-diagonal matrix from a list of matrices."""
    trip = {}
    ro = co = 0
    for b in blocks:
        for (i, j), v in b.iter_nonzero():
            trip[(ro + i, co + j)] = v
        ro += b.nrows
        co += b.ncols
    return Matrix(ring, ro, co, triplets=trip)


def kronecker(A, B):
    """Kronecker product: (A (x) B)[ia*Bm+ib, ja*Bn+jb] = A[ia,ja]*B[ib,jb]."""
    R = A.ring
    trip = {}
    for (ia, ja), a in A.iter_nonzero():
        for (ib, jb), b in B.iter_nonzero():
            trip[(ia * B.nrows + ib, ja * B.ncols + jb)] = R.mul(a, b)
    return Matrix(R, A.nrows * B.nrows, A.ncols * B.ncols, triplets=trip)
