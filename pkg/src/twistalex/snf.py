"""Integer Smith normal form with transform tracking.

Used to read off the first homology of an abelianized presentation: the
invariant factors decide whether the cokernel is infinite cyclic, and
the column transform supplies an integer kernel vector.  Everything is
plain Python integers, so there is no overflow to worry about.
"""

from __future__ import annotations


def smith_decomposition(matrix):
    """Return (diag, rank, U, V) with U * A * V diagonal.

    ``diag`` lists the invariant factors d_1 | d_2 | ... (nonnegative,
    zeros trailing) of length min(rows, cols); U and V are unimodular,
    returned as lists of lists.
    """
    a = [list(map(int, row)) for row in matrix]
    r = len(a)
    c = len(a[0]) if r else 0
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]
    n = min(r, c)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row dst += q * row src, in A and U alike
        for k in range(c):
            a[dst][k] += q * a[src][k]
        for k in range(r):
            u[dst][k] += q * u[src][k]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def reduce_block(t):
        """Clear row t and column t of the block [t:, t:].  Returns False
        when the block is entirely zero."""
        pivot = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = abs(a[i][j])
                if x and (best is None or x < best):
                    best = x
                    pivot = (i, j)
        if pivot is None:
            return False
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            dirty = False
            for i in range(t + 1, r):
                if a[i][t] == 0:
                    continue
                add_row(i, t, -(a[i][t] // a[t][t]))
                if a[i][t]:
                    swap_rows(t, i)
                    dirty = True
            for j in range(t + 1, c):
                if a[t][j] == 0:
                    continue
                add_col(j, t, -(a[t][j] // a[t][t]))
                if a[t][j]:
                    swap_cols(t, j)
                    dirty = True
            if not dirty:
                break
        if a[t][t] < 0:
            add_row(t, t, -2)
        return True

    while True:
        for t in range(n):
            if not reduce_block(t):
                break
        # Divisibility chain: gluing column t+1 onto column t and
        # rediagonalizing replaces d_t by gcd(d_t, d_{t+1}).
        broken = None
        for t in range(n - 1):
            dt, dn = a[t][t], a[t + 1][t + 1]
            if dt and dn and dn % dt:
                broken = t
                break
        if broken is None:
            break
        add_col(broken, broken + 1, 1)

    diag = tuple(a[i][i] for i in range(n))
    rank = sum(1 for d in diag if d)
    return diag, rank, u, v


def smith_normal_form(matrix):
    """Invariant factors d_1 | d_2 | ... and the rank of an integer matrix."""
    diag, rank, _, _ = smith_decomposition(matrix)
    return diag, rank
