"""Pure-Python versions of the hot kernels.

Signatures match ``fflv._ckernels``; ``fflv.kernels`` picks one at import.
"""


def rank_int(rows, ncols):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    nrows = len(m)
    r = 0
    prev = 1
    for col in range(ncols):
        if r == nrows:
            break
        piv = r
        while piv < nrows and m[piv][col] == 0:
            piv += 1
        if piv == nrows:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
        top = m[r]
        p = top[col]
        for i in range(r + 1, nrows):
            row = m[i]
            q = row[col]
            for j in range(col + 1, ncols):
                row[j] = (row[j] * p - q * top[j]) // prev
            row[col] = 0
        prev = p
        r += 1
    return r


def det_int(rows):
    """Determinant of a square integer matrix (Bareiss)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for piv in range(k + 1, n):
                if m[piv][k] != 0:
                    m[k], m[piv] = m[piv], m[k]
                    sign = -sign
                    break
            else:
                return 0
        top = m[k]
        p = top[k]
        for i in range(k + 1, n):
            row = m[i]
            q = row[k]
            for j in range(k + 1, n):
                row[j] = (row[j] * p - q * top[j]) // prev
            row[k] = 0
        prev = p
    return sign * m[n - 1][n - 1]


def lattice_dfs(rows, rhs, ncols, max_nodes, collect):
    """Integer points of ``{x >= 0 : A x <= b}`` for nonnegative ``A``.

    Coordinates are fixed left to right; partial row sums prune the search,
    which is exact because every remaining contribution is nonnegative.
    Returns ``(count, points)``; ``count == -1`` signals the node cap was hit.
    """
    cover = [[(r, a[k]) for r, a in enumerate(rows) if a[k] > 0] for k in range(ncols)]
    for k, c in enumerate(cover):
        if not c:
            raise ValueError(f"coordinate {k} is unbounded")
    slack = list(rhs)
    if any(s < 0 for s in slack):
        return 0, ([] if collect else None)
    x = [0] * ncols
    points = [] if collect else None
    count = 0
    nodes = 0

    def limit(k):
        return min(slack[r] // a for r, a in cover[k])

    def visit(k):
        nonlocal count, nodes
        if k == ncols:
            count += 1
            if collect:
                points.append(tuple(x))
            return True
        top = limit(k)
        ck = cover[k]
        for v in range(top + 1):
            nodes += 1
            if nodes > max_nodes:
                return False
            x[k] = v
            if v:
                for r, a in ck:
                    slack[r] -= a
            if not visit(k + 1):
                return False
        if top:
            for r, a in ck:
                slack[r] += a * top
        x[k] = 0
        return True

    if not visit(0):
        return -1, None
    return count, points
