import random
from fractions import Fraction
from itertools import permutations

from takiff._linalg import (SparseRREF, clear_row, det_int, pivot_columns,
                            rank_rows, solve_dense, spmm, sp_sub)


def perm_det(mat):
    """Brute-force determinant by permutation expansion (test oracle)."""
    n = len(mat)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if not seen[i]:
                j, ln = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    ln += 1
                if ln % 2 == 0:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= mat[i][perm[i]]
        total += term
    return total


def test_det_matches_permutation_expansion():
    rng = random.Random(0)
    for _ in range(30):
        n = rng.randint(1, 5)
        m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert det_int(m) == perm_det(m)


def test_det_singular():
    assert det_int([[1, 2], [2, 4]]) == 0


def test_rank_vs_minor_oracle():
    rng = random.Random(1)
    for _ in range(20):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        # oracle: largest k with a nonzero k x k minor
        best = 0
        for k in range(1, min(rows, cols) + 1):
            from itertools import combinations
            hit = False
            for rs in combinations(range(rows), k):
                for cs in combinations(range(cols), k):
                    sub = [[m[r][c] for c in cs] for r in rs]
                    if perm_det(sub) != 0:
                        hit = True
                        break
                if hit:
                    break
            if hit:
                best = k
        assert rank_rows(m) == best


def test_clear_row_primitive():
    assert clear_row([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
    assert clear_row([2, 4, 6]) == [1, 2, 3]


def test_solve_dense_roundtrip():
    rng = random.Random(2)
    for _ in range(10):
        n = rng.randint(1, 4)
        while True:
            a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
            if det_int(a) != 0:
                break
        x = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
        b = [sum(a[i][j] * x[j] for j in range(n)) for i in range(n)]
        assert solve_dense(a, b) == x


def test_pivot_columns_identify_independent_set():
    m = [[1, 2, 3], [2, 4, 7]]
    assert pivot_columns(m) == [0, 2]


def test_sparse_rref_rank():
    rng = random.Random(3)
    for _ in range(15):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        dense = [[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)]
        rref = SparseRREF()
        for r in dense:
            rref.add({j: v for j, v in enumerate(r) if v})
        assert rref.rank == rank_rows(dense)


def test_spmm_matches_dense():
    a = {0: {0: 1, 1: 2}, 1: {1: -1}}
    b = {0: {0: 3}, 1: {0: 1, 1: 5}}
    assert spmm(a, b) == {0: {0: 5, 1: 10}, 1: {0: -1, 1: -5}}
    assert sp_sub(a, a) == {}
