"""Exact linear algebra over the integers and rationals.

Dense matrices are lists of rows (int or Fraction entries), sparse rows
are dicts column -> value.  Elimination is fraction-free: rows are
cleared to primitive integer vectors and cross-multiplied, with a gcd
reduction after every step to keep entries small.  No floating point.
"""

from fractions import Fraction
from math import gcd


def clear_row(row):
    """Scale a row of ints/Fractions to a primitive integer row."""
    den = 1
    for v in row:
        d = v.denominator if isinstance(v, Fraction) else 1
        den = den * d // gcd(den, d)
    out = [int(v * den) for v in row]
    g = 0
    for v in out:
        g = gcd(g, v)
    if g > 1:
        out = [v // g for v in out]
    return out


def det_int(mat):
    """Determinant of a square integer matrix (Bareiss elimination)."""
    a = [list(map(int, r)) for r in mat]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                q, rem = divmod(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
                assert rem == 0
                a[i][j] = q
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def rank_rows(rows):
    """Rank of a dense matrix given as a list of rows."""
    work = [clear_row(r) for r in rows]
    work = [r for r in work if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        pr = work[rank]
        pv = pr[col]
        for i in range(rank + 1, len(work)):
            f = work[i][col]
            if f:
                row = [pv * a - f * b for a, b in zip(work[i], pr)]
                g = 0
                for v in row:
                    g = gcd(g, v)
                if g > 1:
                    row = [v // g for v in row]
                work[i] = row
        rank += 1
        if rank == len(work):
            break
    return rank


def pivot_columns(rows):
    """Column indices where Gaussian elimination finds pivots."""
    work = [[Fraction(v) for v in r] for r in rows]
    if not work:
        return []
    ncols = len(work[0])
    pivs = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pr = work[r]
        inv = 1 / pr[col]
        work[r] = pr = [v * inv for v in pr]
        for i in range(r + 1, len(work)):
            f = work[i][col]
            if f:
                work[i] = [a - f * b for a, b in zip(work[i], pr)]
        pivs.append(col)
        r += 1
        if r == len(work):
            break
    return pivs


def solve_dense(a, b):
    """Solve a nonsingular square rational system a x = b exactly."""
    n = len(a)
    work = [[Fraction(v) for v in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col]), None)
        if piv is None:
            raise ValueError("singular system")
        work[col], work[piv] = work[piv], work[col]
        pr = work[col]
        inv = 1 / pr[col]
        work[col] = pr = [v * inv for v in pr]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], pr)]
    return [work[i][n] for i in range(n)]


def inv_dense(a):
    """Exact inverse of a square rational matrix."""
    n = len(a)
    cols = []
    for j in range(n):
        e = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        cols.append(solve_dense(a, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


class SparseRREF:
    """Incremental echelon store for sparse integer rows.

    Rows are dicts column -> int.  Each added row is reduced against the
    stored pivot rows; a surviving remainder becomes a new pivot row
    (kept primitive with positive leading entry).  Only the rank is
    exposed; rows are not back-substituted.
    """

    def __init__(self):
        self.pivots = {}

    @staticmethod
    def _primitive(row):
        g = 0
        for v in row.values():
            g = gcd(g, v)
        if g > 1:
            row = {c: v // g for c, v in row.items()}
        return row

    def add(self, row):
        """Absorb `row`; return True if the rank grew."""
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                row = self._primitive(row)
                if row[c] < 0:
                    row = {k: -v for k, v in row.items()}
                self.pivots[c] = row
                return True
            a, b = piv[c], row[c]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = {k: v * ma for k, v in row.items()}
            for k, v in piv.items():
                w = new.get(k, 0) - v * mb
                if w:
                    new[k] = w
                elif k in new:
                    del new[k]
            row = self._primitive(new)
        return False

    @property
    def rank(self):
        return len(self.pivots)


def spmm(a, b):
    """Product of sparse row-dict matrices: (a b)[i][k] = sum a[i][j] b[j][k]."""
    out = {}
    for i, row in a.items():
        acc = {}
        for j, v in row.items():
            brow = b.get(j)
            if not brow:
                continue
            for k, w in brow.items():
                acc[k] = acc.get(k, 0) + v * w
        acc = {k: x for k, x in acc.items() if x}
        if acc:
            out[i] = acc
    return out


def sp_sub(a, b):
    """Sparse matrix difference a - b."""
    out = {i: dict(row) for i, row in a.items()}
    for i, row in b.items():
        acc = out.setdefault(i, {})
        for j, v in row.items():
            w = acc.get(j, 0) - v
            if w:
                acc[j] = w
            elif j in acc:
                del acc[j]
        if not acc:
            del out[i]
    return out


def sp_equal(a, b):
    return sp_sub(a, b) == {}
