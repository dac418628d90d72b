import random

import pytest

from takiff.errors import UserInputError
from takiff.multiplicities import (SuperWeight, bgg_consistency, delta_mult,
                                   dual_simple, parity, proj_mult,
                                   restrict_simple, super_weight)
from takiff.rootsys import build_root_datum

A1 = build_root_datum("A", 1)
A2 = build_root_datum("A", 2)
sw = super_weight


def test_parity():
    assert parity(sw((0,), 0)) == 0
    assert parity(sw((1,), 3)) == 1
    assert parity(sw((1,), -3)) == 1
    x = sw((2,), 4)
    assert (parity(x) + parity(sw(x.lam, x.a - 1))) % 2 == 1


def test_restrict_simple():
    assert restrict_simple(A1, sw((0,), 5)) == [sw((0,), 5)]
    assert restrict_simple(A1, sw((2,), 0)) == [sw((2,), 0), sw((2,), -1)]
    with pytest.raises(UserInputError):
        restrict_simple(A1, sw((-1,), 0))


def test_delta_mult_diagonal_and_zero_above():
    for x in [sw((2,), 0), sw((1, 1), 3)]:
        rd = A1 if len(x.lam) == 1 else A2
        assert delta_mult(rd, x, x) == 1
        assert delta_mult(rd, x, SuperWeight(x.lam, x.a + 1)) == 0


def test_sl2_delta_identities():
    # frozen from the standard-filtration computation (and the paper)
    def fac(x):
        out = {}
        for m in range(0, 8):
            for b in range(x.a - 4, x.a + 1):
                v = delta_mult(A1, x, sw((m,), b))
                if v:
                    out[(m, b)] = v
        return out

    assert fac(sw((3,), 0)) == {(3, 0): 1, (5, -1): 1, (1, -1): 1, (3, -2): 1}
    assert fac(sw((1,), 0)) == {(1, 0): 1, (3, -1): 1, (1, -2): 1}
    assert fac(sw((0,), 0)) == {(0, 0): 1, (2, -1): 1, (0, -3): 1}
    # n = 2: the zero weight enters the mu = 0 case and adds L((a-2)d)
    assert fac(sw((2,), 0)) == {(2, 0): 1, (4, -1): 1, (0, -1): 1,
                                (2, -2): 1, (0, -2): 1}


def test_delta_dimension_bookkeeping():
    # sum over factors of mult * dim L(y) = 2^{dim s} * dim L0(lam)
    rng = random.Random(4)
    for rd, dim_s in ((A1, 3), (A2, 8)):
        for _ in range(4):
            lam = tuple(rng.randint(0, 2) for _ in range(rd.rank))
            x = sw(lam, 0)
            total = 0
            from takiff.rootsys import weyl_dim
            for m1 in range(0, 6):
                rng2 = [(m1,)] if rd.rank == 1 else [(m1, m2) for m2 in range(0, 6)]
                for mu in rng2:
                    for b in range(-dim_s - 1, 1):
                        v = delta_mult(rd, x, sw(mu, b))
                        if v:
                            d0 = weyl_dim(rd, mu)
                            total += v * (d0 if mu == rd.zero else 2 * d0)
            assert total == (2 ** dim_s) * weyl_dim(rd, lam)


def test_proj_mult():
    # P(-d) composition factors (six, each once)
    got = {}
    for m in range(0, 6):
        for b in range(-7, 2):
            v = proj_mult(A1, sw((0,), -1), sw((m,), b))
            if v:
                got[(m, b)] = v
    assert got == {(0, 0): 1, (0, -1): 1, (0, -3): 1, (0, -4): 1,
                   (2, -1): 1, (2, -2): 1}
    # [P(ad) : L((a+1)d)] = 1
    assert proj_mult(A1, sw((0,), 3), sw((0,), 4)) == 1
    # lam != 0: projective equals standard
    rng = random.Random(9)
    for _ in range(10):
        lam = (rng.randint(1, 3),)
        x, y = sw(lam, rng.randint(-2, 2)), sw((rng.randint(0, 4),), rng.randint(-4, 2))
        assert proj_mult(A1, x, y) == delta_mult(A1, x, y)


def test_proj_mult_support_bounds():
    rng = random.Random(10)
    for rd in (A1, A2):
        for _ in range(8):
            lam = tuple(rng.randint(0, 2) for _ in range(rd.rank))
            x = sw(lam, rng.randint(-2, 2))
            assert proj_mult(rd, x, x) == 1
            y = SuperWeight(x.lam, x.a + 2)
            assert proj_mult(rd, x, y) == 0


def test_dual_simple():
    assert dual_simple(A1, sw((0,), 7)) == sw((0,), -7)
    assert dual_simple(A2, sw((1, 0), 0)) == sw((0, 1), 1)
    rng = random.Random(11)
    for rd in (A1, A2):
        for _ in range(10):
            lam = tuple(rng.randint(0, 3) for _ in range(rd.rank))
            x = sw(lam, rng.randint(-3, 3))
            assert dual_simple(rd, dual_simple(rd, x)) == x


def test_bgg_consistency():
    rng = random.Random(12)
    assert bgg_consistency(A1, sw((0,), 0), [])
    for rd in (A1, A2):
        for _ in range(6):
            lam = tuple(rng.randint(0, 2) for _ in range(rd.rank))
            x = sw(lam, rng.randint(-2, 2))
            ys = [sw(tuple(rng.randint(0, 3) for _ in range(rd.rank)),
                     rng.randint(-4, 3)) for _ in range(5)]
            assert bgg_consistency(rd, x, ys)
