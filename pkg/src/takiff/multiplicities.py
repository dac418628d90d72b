"""Super weights lambda + a*delta and composition multiplicities.

Simple modules of the extended Takiff superalgebra are labelled by a
dominant weight lambda of the underlying simple algebra together with
an integer coefficient a of delta (delta(xi d_xi) = -1).  Composition
multiplicities of standard and projective covers reduce to brackets
[wedge^i(s) (x) L(lambda) : L(mu)] of the underlying algebra; those are
evaluated exactly with the character engine.
"""

from typing import NamedTuple

from . import charring, rootsys
from .errors import InternalCheckError, UserInputError


class SuperWeight(NamedTuple):
    lam: tuple
    a: int


def super_weight(lam, a):
    return SuperWeight(tuple(int(c) for c in lam), int(a))


def parity(x):
    """Z/2 parity of the simple module: a mod 2."""
    return x.a % 2


def _require_dominant(rd, x):
    if len(x.lam) != rd.rank:
        raise UserInputError(f"weight {x.lam} has wrong rank for {rd.series}{rd.rank}")
    if not rootsys.dominant(rd, x.lam):
        raise UserInputError(f"weight {x.lam} is not dominant")


def restrict_simple(rd, x):
    """Labels of the even-part restriction of L(x)."""
    _require_dominant(rd, x)
    if x.lam == rd.zero:
        return [x]
    return [x, SuperWeight(x.lam, x.a - 1)]


# wedge powers of the adjoint and their tensor decompositions, memoised

_wedge_cache = {}
_wedge_tensor_cache = {}


def _dim_s(rd):
    return 2 * len(rd.pos_roots) + rd.rank


def wedge_ad_char(rd, i):
    """Character of wedge^i(s); empty beyond dim s."""
    if i < 0 or i > _dim_s(rd):
        return {}
    key = (rd.key, i)
    ch = _wedge_cache.get(key)
    if ch is None:
        ch = charring.exterior_power(rd, charring.ad_char(rd), i)
        _wedge_cache[key] = ch
    return ch


def wedge_decomp(rd, i):
    """Decomposition of wedge^i(s) into irreducibles."""
    return _wedge_tensor_decomp(rd, rd.zero, i)


def _wedge_tensor_decomp(rd, lam, i):
    """Decomposition of wedge^i(s) (x) L(lam)."""
    if i < 0 or i > _dim_s(rd):
        return {}
    key = (rd.key, tuple(lam), i)
    dec = _wedge_tensor_cache.get(key)
    if dec is None:
        ch = wedge_ad_char(rd, i)
        if lam != rd.zero:
            ch = charring.tensor(ch, charring.irr_character(rd, lam))
        dec = charring.decompose(rd, ch)
        _wedge_tensor_cache[key] = dec
    return dec


def delta_mult(rd, x, y):
    """[Delta(x) : L(y)] for dominant super weights."""
    x, y = SuperWeight(*x), SuperWeight(*y)
    _require_dominant(rd, x)
    _require_dominant(rd, y)
    ab = x.a - y.a
    if ab < 0:
        return 0
    if y.lam == rd.zero:
        return _wedge_tensor_decomp(rd, x.lam, ab).get(rd.zero, 0)
    total = 0
    sign = 1 if ab % 2 == 0 else -1
    for i in range(ab + 1):
        m = _wedge_tensor_decomp(rd, x.lam, i).get(y.lam, 0)
        total += sign * m
        sign = -sign
    if total < 0:
        raise InternalCheckError(
            f"negative alternating sum in delta_mult({x}, {y}): {total}")
    return total


def proj_mult(rd, x, y):
    """[P(x) : L(y)]; equals delta_mult unless x is purely delta."""
    x, y = SuperWeight(*x), SuperWeight(*y)
    _require_dominant(rd, x)
    _require_dominant(rd, y)
    if x.lam != rd.zero:
        return delta_mult(rd, x, y)
    ab = x.a - y.a
    if ab < -1:
        return 0
    if ab == -1:
        return 1 if y.lam == rd.zero else 0
    if y.lam == rd.zero:
        return (wedge_decomp(rd, ab).get(rd.zero, 0)
                + wedge_decomp(rd, ab + 1).get(rd.zero, 0))
    return wedge_decomp(rd, ab + 1).get(y.lam, 0)


def dual_simple(rd, x):
    """Label of the contragredient simple module."""
    x = SuperWeight(*x)
    _require_dominant(rd, x)
    if x.lam == rd.zero:
        return SuperWeight(rd.zero, -x.a)
    return SuperWeight(rootsys.longest_element_negate(rd, x.lam), 1 - x.a)


def bgg_consistency(rd, x, sample):
    """Reciprocity check: the standard filtration of P(x) must reproduce the
    projective multiplicities.  Returns False on mismatch (bug detector)."""
    x = SuperWeight(*x)
    _require_dominant(rd, x)
    filtration = [x]
    if x.lam == rd.zero:
        filtration.append(SuperWeight(rd.zero, x.a + 1))
    for y in sample:
        y = SuperWeight(*y)
        lhs = sum(delta_mult(rd, kappa, y) for kappa in filtration)
        if lhs != proj_mult(rd, x, y):
            return False
    return True
