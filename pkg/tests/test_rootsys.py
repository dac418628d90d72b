import random
from fractions import Fraction
from itertools import permutations

import pytest

from takiff.errors import UserInputError
from takiff.rootsys import (build_root_datum, cartan_determinant, coset_key,
                            dominant, in_root_lattice, longest_element_negate,
                            minuscule_weights, neg_weight, root_coords,
                            to_dominant, weyl_dim, weyl_orbit, weyl_order)

ALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3),
             ("C", 2), ("C", 3), ("D", 4), ("G", 2), ("F", 4),
             ("E", 6), ("E", 7), ("E", 8)]


@pytest.mark.parametrize("series,rank", ALL_TYPES)
def test_construction_invariants(series, rank):
    rd = build_root_datum(series, rank)
    npos = len(rd.pos_roots)
    assert 2 * npos == rank * rd.coxeter_number
    assert sum(rd.exponents) == npos
    assert sum(root_coords(rd, rd.highest_root)) == rd.coxeter_number - 1
    assert cartan_determinant(rd) >= 1


def test_examples_from_tables():
    a2 = build_root_datum("A", 2)
    assert len(a2.pos_roots) == 3 and a2.coxeter_number == 3
    assert a2.exponents == (1, 2)
    g2 = build_root_datum("G", 2)
    assert len(g2.pos_roots) == 6 and g2.coxeter_number == 6
    assert g2.exponents == (1, 5)
    assert len(build_root_datum("D", 4).pos_roots) == 12


def test_invalid_types_rejected():
    for series, rank in [("A", 0), ("B", 1), ("D", 3), ("E", 5), ("F", 3),
                         ("G", 3), ("H", 2)]:
        with pytest.raises(UserInputError):
            build_root_datum(series, rank)


def perm_det(mat):
    n = len(mat)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if not seen[i]:
                j = i
                ln = 0
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


def test_cartan_determinants():
    assert cartan_determinant(build_root_datum("A", 2)) == 3
    assert cartan_determinant(build_root_datum("E", 8)) == 1
    d4 = build_root_datum("D", 4)
    # frozen from the permutation-expansion oracle
    assert perm_det([list(r) for r in d4.cartan]) == 4
    assert cartan_determinant(d4) == 4


def brute_force_minuscule(rd):
    """Oracle: dominant nu (coords <= 1 suffice) whose Weyl orbit exhausts
    the module, one per root-lattice coset."""
    out = []
    seen = set()

    def boxes(k):
        if k == 0:
            yield ()
            return
        for h in (0, 1):
            for t in boxes(k - 1):
                yield (h,) + t

    for nu in sorted(boxes(rd.rank), key=lambda w: (sum(w), w)):
        key = coset_key(rd, nu)
        if key in seen:
            continue
        if len(weyl_orbit(rd, nu)) == weyl_dim(rd, nu):
            seen.add(key)
            out.append(nu)
    return out


@pytest.mark.parametrize("series,rank", [("A", 2), ("A", 3), ("B", 2),
                                         ("B", 3), ("C", 3), ("D", 4),
                                         ("G", 2), ("A", 1)])
def test_minuscule_against_orbit_oracle(series, rank):
    rd = build_root_datum(series, rank)
    got = minuscule_weights(rd)
    assert len(got) == cartan_determinant(rd)
    assert set(got) == set(brute_force_minuscule(rd))
    keys = {coset_key(rd, w) for w in got}
    assert len(keys) == len(got)


def test_minuscule_examples():
    a2 = build_root_datum("A", 2)
    assert set(minuscule_weights(a2)) == {(0, 0), (1, 0), (0, 1)}
    assert minuscule_weights(build_root_datum("E", 8)) == [(0,) * 8]
    c3 = build_root_datum("C", 3)
    assert set(minuscule_weights(c3)) == {(0, 0, 0), (1, 0, 0)}


def test_weyl_action_properties():
    rng = random.Random(5)
    for series, rank in [("A", 2), ("B", 2), ("C", 3), ("G", 2)]:
        rd = build_root_datum(series, rank)
        order = weyl_order(rd)
        for _ in range(8):
            w = tuple(rng.randint(-3, 3) for _ in range(rank))
            orbit = weyl_orbit(rd, w)
            assert order % len(orbit) == 0
            dom, sign = to_dominant(rd, w)
            assert dominant(rd, dom)
            assert sign in (-1, 0, 1)
            assert sign == 0 or all(c != 0 for c in dom)
            # to_dominant constant on the orbit
            assert all(to_dominant(rd, v)[0] == dom for v in orbit)


def test_longest_element_negate():
    a2 = build_root_datum("A", 2)
    assert longest_element_negate(a2, (1, 0)) == (0, 1)
    assert longest_element_negate(a2, (2, 5)) == (5, 2)
    b2 = build_root_datum("B", 2)
    assert longest_element_negate(b2, (1, 2)) == (1, 2)  # -w0 = id for B2


def test_in_root_lattice():
    a2 = build_root_datum("A", 2)
    assert in_root_lattice(a2, a2.highest_root)
    assert not in_root_lattice(a2, (1, 0))
    a1 = build_root_datum("A", 1)
    assert not dominant(a1, (-2,))


def test_weyl_dim_known_values():
    a2 = build_root_datum("A", 2)
    assert weyl_dim(a2, (0, 0)) == 1
    assert weyl_dim(a2, (1, 1)) == 8
    assert weyl_dim(a2, (2, 2)) == 27
    assert weyl_dim(build_root_datum("G", 2), (1, 0)) == 7
