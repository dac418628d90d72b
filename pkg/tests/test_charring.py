import random

import pytest

from takiff.charring import (ad_char, adams, bracket, char_dim, decompose,
                             exterior_power, irr_character, is_weyl_invariant,
                             symmetric_power, tensor, unit_char)
from takiff.errors import UserInputError
from takiff.rootsys import build_root_datum, weyl_dim

A1 = build_root_datum("A", 1)
A2 = build_root_datum("A", 2)
B2 = build_root_datum("B", 2)


def test_irr_character_examples():
    assert irr_character(A1, (2,)) == {(2,): 1, (0,): 1, (-2,): 1}
    ad = irr_character(A2, A2.highest_root)
    assert ad[(0, 0)] == 2 and char_dim(ad) == 8
    assert char_dim(irr_character(A2, (2, 2))) == 27  # Weyl formula oracle


def test_irr_character_rejects_non_dominant():
    with pytest.raises(UserInputError):
        irr_character(A1, (-1,))


def test_freudenthal_matches_weyl_dim_randomized():
    rng = random.Random(42)
    for rd in (A1, A2, B2):
        for _ in range(20):
            lam = tuple(rng.randint(0, 4) for _ in range(rd.rank))
            ch = irr_character(rd, lam)
            assert char_dim(ch) == weyl_dim(rd, lam)
            assert is_weyl_invariant(rd, ch)


def test_decompose_idempotent_and_roundtrip():
    rng = random.Random(7)
    for rd in (A1, A2):
        for _ in range(6):
            target = {}
            for _ in range(rng.randint(1, 3)):
                lam = tuple(rng.randint(0, 2) for _ in range(rd.rank))
                target[lam] = target.get(lam, 0) + rng.randint(1, 2)
            ch = {}
            for lam, m in target.items():
                for w, k in irr_character(rd, lam).items():
                    ch[w] = ch.get(w, 0) + m * k
            assert decompose(rd, ch) == target


def test_decompose_examples():
    t = tensor(irr_character(A2, (1, 0)), irr_character(A2, (0, 1)))
    assert decompose(A2, t) == {(1, 1): 1, (0, 0): 1}
    assert decompose(A2, irr_character(A2, (2, 1))) == {(2, 1): 1}


def test_decompose_rejects_non_character():
    with pytest.raises(UserInputError):
        decompose(A1, {(1,): 1})  # lone non-extremal support


def test_tensor_with_adjoint_identity():
    # L(lam) (x) s for lam deep: one copy per root plus rank copies of L(lam)
    lam = (2, 2)
    dec = decompose(A2, tensor(irr_character(A2, lam), ad_char(A2)))
    want = {(2, 2): 2}
    for f in A2.pos_roots_fund:
        for s in (1, -1):
            w = tuple(lam[i] + s * f[i] for i in range(2))
            want[w] = 1
    assert dec == want


def test_tensor_commutative_associative():
    rng = random.Random(3)
    for _ in range(5):
        chars = [irr_character(A2, (rng.randint(0, 2), rng.randint(0, 2)))
                 for _ in range(3)]
        a, b, c = chars
        assert tensor(a, b) == tensor(b, a)
        assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))


def test_adams_dilates():
    ch = irr_character(A1, (1,))
    assert adams(ch, 2) == {(2,): 1, (-2,): 1}
    with pytest.raises(UserInputError):
        adams(ch, 0)


def test_exterior_symmetric_powers():
    s1 = ad_char(A1)
    assert exterior_power(A1, s1, 3) == unit_char(A1)   # top power
    assert decompose(A1, symmetric_power(A1, s1, 2)) == {(4,): 1, (0,): 1}
    assert char_dim(symmetric_power(A1, s1, 2)) == 6
    with pytest.raises(UserInputError):
        exterior_power(A1, s1, -1)


def test_newton_recurrences_exact():
    # k e_k = sum_i (-1)^{i-1} psi^i e_{k-i}; verify directly over Z
    a = ad_char(A2)
    es = [exterior_power(A2, a, k) for k in range(5)]
    for k in range(1, 5):
        acc = {}
        sign = 1
        for i in range(1, k + 1):
            for w, m in tensor(adams(a, i), es[k - i]).items():
                acc[w] = acc.get(w, 0) + sign * m
            sign = -sign
        assert acc == {w: k * m for w, m in es[k].items() if m}


def test_top_wedge_tensor_identity():
    # [wedge^ell(s) (x) L(lam) : L(lam + 2 rho)] = 1
    ell = len(A2.pos_roots)
    for lam in [(0, 0), (1, 0), (1, 1)]:
        e = exterior_power(A2, ad_char(A2), ell)
        t = tensor(e, irr_character(A2, lam))
        target = tuple(lam[i] + 2 for i in range(2))
        assert bracket(A2, t, target) == 1


def test_bracket_examples():
    assert bracket(A1, ad_char(A1), (0,)) == 0           # S^1 s has no invariants
    assert bracket(A1, symmetric_power(A1, ad_char(A1), 2), (0,)) == 1
