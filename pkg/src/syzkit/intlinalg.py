"""Exact integer linear algebra on small dense matrices."""

from fractions import Fraction


def det(rows) -> int:
    """Determinant of a square integer matrix, by fraction-free Bareiss elimination."""
    n = len(rows)
    m = [[int(x) for x in r] for r in rows]
    for r in m:
        if len(r) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def invert_unimodular(rows) -> list[list[int]]:
    """Inverse of an integer matrix with determinant +-1 (the inverse is again integral)."""
    n = len(rows)
    d = det(rows)
    if d not in (1, -1):
        raise ValueError(f"matrix has determinant {d}, expected +-1")
    aug = [
        [Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for c in range(n):
        pivot = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[pivot] = aug[pivot], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                factor = aug[r][c]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[c])]
    out = []
    for row in aug:
        entries = row[n:]
        if any(x.denominator != 1 for x in entries):
            raise AssertionError("unimodular inverse came out non-integral")
        out.append([int(x) for x in entries])
    return out


def solve_integer(rows, rhs) -> list[int] | None:
    """One integer solution x of A x = b, or None when no integer solution exists.

    Unimodular column operations bring A to a staircase form H with A U = H;
    forward substitution solves H y = b over the integers and x = U y.  Free
    columns are pinned to zero, so the output is deterministic.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    h = [[int(x) for x in r] for r in rows]
    for r in h:
        if len(r) != n:
            raise ValueError("ragged matrix")
    if len(rhs) != m:
        raise ValueError("right-hand side length mismatch")
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap(j, k):
        for r in range(m):
            h[r][j], h[r][k] = h[r][k], h[r][j]
        for r in range(n):
            u[r][j], u[r][k] = u[r][k], u[r][j]

    def combine(j, k, q):
        # column j -= q * column k
        for r in range(m):
            h[r][j] -= q * h[r][k]
        for r in range(n):
            u[r][j] -= q * u[r][k]

    def negate(j):
        for r in range(m):
            h[r][j] = -h[r][j]
        for r in range(n):
            u[r][j] = -u[r][j]

    pivot_col: dict[int, int] = {}
    c = 0
    for r in range(m):
        if c >= n:
            break
        while True:
            nonzero = [j for j in range(c, n) if h[r][j] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda j: abs(h[r][j]))
            if best != c:
                swap(c, best)
            reduced = True
            for j in range(c + 1, n):
                if h[r][j] != 0:
                    combine(j, c, h[r][j] // h[r][c])
                    if h[r][j] != 0:
                        reduced = False
            if reduced:
                break
        if c < n and h[r][c] != 0:
            if h[r][c] < 0:
                negate(c)
            pivot_col[r] = c
            c += 1

    y = [0] * n
    for r in range(m):
        residue = int(rhs[r]) - sum(h[r][j] * y[j] for j in range(n))
        if r in pivot_col:
            j = pivot_col[r]
            if residue % h[r][j] != 0:
                return None
            y[j] = residue // h[r][j]
        elif residue != 0:
            return None
    return [sum(u[i][j] * y[j] for j in range(n)) for i in range(n)]
