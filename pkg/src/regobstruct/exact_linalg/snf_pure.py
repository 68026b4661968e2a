"""Smith normal form over Z in pure Python (arbitrary precision).

Pivoting rule: smallest-magnitude nonzero entry of the working submatrix,
ties broken by (row, col) index.  The compiled kernel follows the same
rule, so both paths return identical decompositions whenever the compiled
one does not overflow.
"""


def snf_pure(rows, m, n):
    """Return (U, D, V) as lists of list-rows with U @ M @ V == D.

    U is m x m, V is n x n, both unimodular; D is m x n diagonal with
    nonnegative entries d_1 | d_2 | ...
    """
    A = [list(row) for row in rows]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    for t in range(min(m, n)):
        piv = _min_pivot(A, m, n, t)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            A[t], A[pi] = A[pi], A[t]
            U[t], U[pi] = U[pi], U[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
            for row in V:
                row[t], row[pj] = row[pj], row[t]

        while True:
            # clear the pivot column (zero terms skipped: inputs are sparse)
            dirty = False
            for i in range(t + 1, m):
                if A[i][t] == 0:
                    continue
                q = A[i][t] // A[t][t]
                if q:
                    Ai, At = A[i], A[t]
                    for j in range(t, n):
                        a = At[j]
                        if a:
                            Ai[j] -= q * a
                    Ui, Ut = U[i], U[t]
                    for j in range(m):
                        a = Ut[j]
                        if a:
                            Ui[j] -= q * a
                if A[i][t] != 0:
                    dirty = True
            if dirty:
                pi, pj = _min_pivot(A, m, n, t)
                if pi != t:
                    A[t], A[pi] = A[pi], A[t]
                    U[t], U[pi] = U[pi], U[t]
                if pj != t:
                    for row in A:
                        row[t], row[pj] = row[pj], row[t]
                    for row in V:
                        row[t], row[pj] = row[pj], row[t]
                continue
            # clear the pivot row
            dirty = False
            for j in range(t + 1, n):
                if A[t][j] == 0:
                    continue
                q = A[t][j] // A[t][t]
                if q:
                    for row in A:
                        a = row[t]
                        if a:
                            row[j] -= q * a
                    for row in V:
                        a = row[t]
                        if a:
                            row[j] -= q * a
                if A[t][j] != 0:
                    dirty = True
            if not dirty:
                # divisibility sweep: pivot must divide the rest
                offender = None
                for i in range(t + 1, m):
                    Ai = A[i]
                    for j in range(t + 1, n):
                        if Ai[j] % A[t][t] != 0:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                Ao, At = A[offender], A[t]
                for j in range(t, n):
                    At[j] += Ao[j]
                Uo, Ut = U[offender], U[t]
                for j in range(m):
                    Ut[j] += Uo[j]
            pi, pj = _min_pivot(A, m, n, t)
            if pi != t:
                A[t], A[pi] = A[pi], A[t]
                U[t], U[pi] = U[pi], U[t]
            if pj != t:
                for row in A:
                    row[t], row[pj] = row[pj], row[t]
                for row in V:
                    row[t], row[pj] = row[pj], row[t]

        if A[t][t] < 0:
            for j in range(t, n):
                A[t][j] = -A[t][j]
            for j in range(m):
                U[t][j] = -U[t][j]

    return U, A, V


def _min_pivot(A, m, n, t):
    best = None
    best_pos = None
    for i in range(t, m):
        Ai = A[i]
        for j in range(t, n):
            a = Ai[j]
            if a:
                a = -a if a < 0 else a
                if best is None or a < best:
                    best = a
                    best_pos = (i, j)
                    if best == 1:
                        return best_pos
    return best_pos
