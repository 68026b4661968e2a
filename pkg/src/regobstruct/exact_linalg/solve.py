"""Kernels, lattice solving, and diagonalization over any supported ring.

Over Z the workhorse is the Smith decomposition: U @ M @ V = D turns
M x = b into D y = U b with x = V y, and the kernel lattice into the
trailing columns of V.  Over a field the same interface is served by a
Gaussian diagonalization with recorded row/column operations.
"""

from .matrix import Matrix
from .rings import ZZ
from .snf import smith_normal_form


class Diagonalization:
    """U @ M @ V = D, D diagonal; U, V invertible over the ring."""

    __slots__ = ("U", "D", "V", "diagonal", "rank")

    def __init__(self, U, D, V):
        self.U = U
        self.D = D
        self.V = V
        self.diagonal = [D[i, i] for i in range(min(D.nrows, D.ncols))]
        self.rank = sum(1 for d in self.diagonal if d != 0)


def diagonalize(M):
    """Smith form over Z; invertible diagonalization over a field.

    Cached on the matrix: matrices are immutable and repeatedly solved
    against (one factorization, many right-hand sides).
    """
    if M._diag_cache is not None:
        return M._diag_cache
    if M.ring == ZZ:
        dec = smith_normal_form(M)
        out = Diagonalization(dec.U, dec.D, dec.V)
    elif M.ring.is_field:
        out = _field_diagonalize(M)
    else:
        raise ValueError(f"unsupported ring {M.ring}")
    M._diag_cache = out
    return out


def _field_diagonalize(M):
    R = M.ring
    m, n = M.nrows, M.ncols
    A = M.to_rows()
    U = Matrix.identity(R, m).to_rows()
    V = Matrix.identity(R, n).to_rows()
    zero = R.zero()
    t = 0
    for t in range(min(m, n)):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if not R.is_zero(A[i][j]):
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        A[t], A[pi] = A[pi], A[t]
        U[t], U[pi] = U[pi], U[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            for row in V:
                row[t], row[pj] = row[pj], row[t]
        inv = R.inv(A[t][t])
        A[t] = [R.mul(inv, a) for a in A[t]]
        U[t] = [R.mul(inv, a) for a in U[t]]
        for i in range(m):
            if i != t and not R.is_zero(A[i][t]):
                f = A[i][t]
                A[i] = [R.sub(a, R.mul(f, b)) for a, b in zip(A[i], A[t])]
                U[i] = [R.sub(a, R.mul(f, b)) for a, b in zip(U[i], U[t])]
        for j in range(t + 1, n):
            if not R.is_zero(A[t][j]):
                f = A[t][j]
                for row in A:
                    row[j] = R.sub(row[j], R.mul(f, row[t]))
                for row in V:
                    row[j] = R.sub(row[j], R.mul(f, row[t]))
    return Diagonalization(
        Matrix.from_rows(R, U, ncols=m),
        Matrix.from_rows(R, A, ncols=n),
        Matrix.from_rows(R, V, ncols=n),
    )


def rank(M):
    return diagonalize(M).rank


def kernel_basis(M):
    """Columns spanning {x : M x = 0}.

    Over Z the columns generate the full integer kernel lattice; over a
    field they are a basis of the kernel subspace.
    """
    dec = diagonalize(M)
    js = list(range(dec.rank, M.ncols))
    return dec.V.submatrix_columns(js)


def solve(M, b):
    """One solution of M x = b over the ring, or None.

    Over Z this is lattice solving: a solution exists iff one exists with
    integer entries.  The returned solution is deterministic.
    """
    R = M.ring
    if len(b) != M.nrows:
        raise ValueError(f"dimension mismatch: {M.nrows} rows, got {len(b)}")
    dec = diagonalize(M)
    c = dec.U.apply_to_vector([R.convert(x) for x in b])
    y = [R.zero()] * M.ncols
    for i in range(M.nrows):
        di = dec.D[i, i] if i < min(M.nrows, M.ncols) else R.zero()
        if R.is_zero(di):
            if not R.is_zero(c[i]):
                return None
        elif R.is_field:
            y[i] = R.mul(R.inv(di), c[i])
        else:
            q, r = divmod(c[i], di)
            if r != 0:
                return None
            y[i] = q
    return dec.V.apply_to_vector(y)


def solve_in_lattice(M, b):
    """Integer solution of M x = b, or None (kind-checked)."""
    if M.ring != ZZ:
        raise ValueError("solve_in_lattice expects an integer matrix")
    return solve(M, b)


def solve_matrix(M, B):
    """Columnwise solve M X = B; None if any column is unsolvable."""
    cols = []
    for j in range(B.ncols):
        x = solve(M, B.column(j))
        if x is None:
            return None
        cols.append(x)
    return Matrix.from_columns(M.ring, cols, nrows=M.ncols)


def in_column_span(M, b):
    """Is b in the column span (over Z: the column lattice) of M?"""
    return solve(M, b) is not None
