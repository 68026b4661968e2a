"""Smith normal form with compiled/pure dual path, plus Hermite column bases.

The compiled int64 kernel is used when it imported successfully and the
input entries are comfortably inside int64; any OverflowError during
reduction falls back to the pure arbitrary-precision path.  Both paths
implement the same pivoting rule and agree exactly.
"""

import os

from .matrix import Matrix
from .rings import ZZ
from .snf_pure import snf_pure

try:  # compiled extension is optional at runtime
    if os.environ.get("REGOBSTRUCT_PURE"):
        _snf_int64 = None
    else:
        from regobstruct._snfcore import snf_int64 as _snf_int64
except ImportError:  # pragma: no cover - depends on build environment
    _snf_int64 = None

HAVE_COMPILED_KERNEL = _snf_int64 is not None

# entries this large could overflow int64 during reduction; be conservative
_INT64_SAFE = 2**31


class SnfDecomposition:
    """U @ M @ V == D with U, V unimodular and D in Smith form."""

    __slots__ = ("U", "D", "V", "diagonal", "rank")

    def __init__(self, U, D, V):
        self.U = U
        self.D = D
        self.V = V
        self.diagonal = [D[i, i] for i in range(min(D.nrows, D.ncols))]
        self.rank = sum(1 for d in self.diagonal if d != 0)

    def verify(self, M):
        if (self.U @ M @ self.V) != self.D:
            return False
        return self._diag_ok()

    def _diag_ok(self):
        d = self.diagonal
        for i in range(len(d) - 1):
            if d[i + 1] and (d[i] == 0 or d[i + 1] % d[i] != 0):
                return False
        return all(x >= 0 for x in d)

    def verify_probed(self, M):
        """Divisibility chain plus U M V x == D x on probe vectors.

        Matrix-vector products only, so the check stays cheap on matrices
        where the full product verification would dominate the reduction.
        """
        if not self._diag_ok():
            return False
        n = M.ncols
        for probe in ([1] * n, [((7 * j) % 11) - 5 for j in range(n)]):
            lhs = self.U.apply_to_vector(M.apply_to_vector(self.V.apply_to_vector(probe)))
            if lhs != self.D.apply_to_vector(probe):
                return False
        return True


def smith_normal_form(M):
    """Smith normal form of an integer matrix; deterministic for fixed input."""
    if M.ring != ZZ:
        raise ValueError(f"Smith normal form needs integer entries, got {M.ring}")
    rows = M.to_rows()
    m, n = M.nrows, M.ncols
    used_fast = False
    if _snf_int64 is not None and m and n:
        if all(-_INT64_SAFE < a < _INT64_SAFE for row in rows for a in row):
            import numpy as np

            try:
                U, D, V = _snf_int64(np.array(rows, dtype=np.int64))
                U, D, V = U.tolist(), D.tolist(), V.tolist()
                used_fast = True
            except OverflowError:
                used_fast = False
    if not used_fast:
        U, D, V = snf_pure(rows, m, n)
    dec = SnfDecomposition(
        Matrix.from_rows(ZZ, U, ncols=m),
        Matrix.from_rows(ZZ, D, ncols=n),
        Matrix.from_rows(ZZ, V, ncols=n),
    )
    if m * n <= 4096:
        ok = dec.verify(M)
    else:
        ok = dec.verify_probed(M)
    assert ok, "internal error: Smith reduction failed self-check"
    return dec


def smith_normal_form_pure(M):
    """Pure-python path, exposed for the benchmark and the dual-path tests."""
    if M.ring != ZZ:
        raise ValueError("integer matrices only")
    U, D, V = snf_pure(M.to_rows(), M.nrows, M.ncols)
    return SnfDecomposition(
        Matrix.from_rows(ZZ, U, ncols=M.nrows),
        Matrix.from_rows(ZZ, D, ncols=M.ncols),
        Matrix.from_rows(ZZ, V, ncols=M.ncols),
    )


def hermite_column_basis(M):
    """Canonical basis of the column span.

    Over Z: the column-style Hermite normal form of the lattice spanned by
    the columns (pivot entries positive, entries to the right of each pivot
    reduced into [0, pivot)); zero columns dropped.  Over a field: the
    reduced column echelon basis.  Deterministic, so equal submodules get
    equal bases.
    """
    R = M.ring
    cols = [list(col) for col in M.columns()]
    nr = M.nrows
    if R.is_field:
        return _field_column_echelon(R, cols, nr, M)
    basis = []
    work = [c for c in cols if any(c)]
    for i in range(nr):
        carriers = [c for c in work if c[i] != 0]
        rest = [c for c in work if c[i] == 0]
        if not carriers:
            work = rest
            continue
        while len(carriers) > 1:
            carriers.sort(key=lambda c: abs(c[i]))
            base = carriers[0]
            new_carriers = [base]
            for c in carriers[1:]:
                q = c[i] // base[i]
                for k in range(nr):
                    c[k] -= q * base[k]
                if c[i] != 0:
                    new_carriers.append(c)
                elif any(c):
                    rest.append(c)
            carriers = new_carriers
        pivot_col = carriers[0]
        if pivot_col[i] < 0:
            for k in range(nr):
                pivot_col[k] = -pivot_col[k]
        for prev in basis:
            # reduce earlier columns against this pivot row
            q = prev[i] // pivot_col[i]
            if q:
                for k in range(nr):
                    prev[k] -= q * pivot_col[k]
        basis.append(pivot_col)
        work = rest
    return Matrix.from_columns(R, basis, nrows=nr)


def _field_column_echelon(R, cols, nr, M):
    work = [c for c in cols if any(not R.is_zero(a) for a in c)]
    basis = []
    for i in range(nr):
        carrier = None
        for c in work:
            if not R.is_zero(c[i]):
                carrier = c
                break
        if carrier is None:
            continue
        work.remove(carrier)
        inv = R.inv(carrier[i])
        carrier = [R.mul(inv, a) for a in carrier]
        for c in work:
            f = c[i]
            if not R.is_zero(f):
                for k in range(nr):
                    c[k] = R.sub(c[k], R.mul(f, carrier[k]))
        work = [c for c in work if any(not R.is_zero(a) for a in c)]
        for prev in basis:
            f = prev[i]
            if not R.is_zero(f):
                for k in range(nr):
                    prev[k] = R.sub(prev[k], R.mul(f, carrier[k]))
        basis.append(carrier)
    return Matrix.from_columns(R, basis, nrows=nr)
