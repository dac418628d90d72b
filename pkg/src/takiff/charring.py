"""Formal character arithmetic.

A character is a plain dict mapping weights (fundamental coordinates)
to positive integer multiplicities.  Irreducible characters come from
the Freudenthal recursion; decomposition into irreducibles peels the
maximal-height support weight.  Exterior/symmetric powers are built by
the psi-operation (Adams) Newton recurrences; all arithmetic is exact.
"""

from fractions import Fraction

from . import rootsys
from .errors import InternalCheckError, UserInputError
from .rootsys import (add_weights, dominant, in_root_lattice, root_coords,
                      sub_weights, to_dominant, weyl_orbit)


def char_dim(ch):
    return sum(ch.values())


def unit_char(rd):
    """Character of the trivial module."""
    return {rd.zero: 1}


def tensor(a, b):
    """Product of characters (convolution of supports)."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            w = add_weights(w1, w2)
            out[w] = out.get(w, 0) + m1 * m2
    return out


def char_add(a, b, k=1):
    out = dict(a)
    for w, m in b.items():
        v = out.get(w, 0) + k * m
        if v:
            out[w] = v
        elif w in out:
            del out[w]
    return out


def adams(a, m):
    """Adams operation psi^m: dilates every weight by m."""
    if m < 1:
        raise UserInputError("adams operation needs m >= 1")
    return {tuple(m * c for c in w): mult for w, mult in a.items()}


# ---------------------------------------------------------------------------
# irreducible characters (Freudenthal)

_irr_cache = {}


def _simple_weight_set(rd, lam):
    """All weights of L(lam): the saturated set, by BFS over simple-root
    subtraction.  Membership: the dominant conjugate mu satisfies
    lam - mu in N-span of the simple roots."""
    simple_cols = rd.simple_roots
    member_cache = {}

    def member(w):
        if w in member_cache:
            return member_cache[w]
        dom, _ = to_dominant(rd, w)
        diff = sub_weights(lam, dom)
        rc = root_coords(rd, diff)
        ok = all(c.denominator == 1 and c >= 0 for c in rc)
        member_cache[w] = ok
        return ok

    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for col in simple_cols:
                v = sub_weights(w, col)
                if v not in seen and member(v):
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def irr_character(rd, lam):
    """Character of the simple module L(lam) by the Freudenthal recursion."""
    lam = tuple(lam)
    if not dominant(rd, lam):
        raise UserInputError(f"highest weight {lam} is not dominant")
    key = (rd.key, lam)
    cached = _irr_cache.get(key)
    if cached is not None:
        return dict(cached)

    weights = _simple_weight_set(rd, lam)
    dom_weights = [w for w in weights if dominant(rd, w)]
    # order by depth = height of lam - mu
    def depth(mu):
        return sum(root_coords(rd, sub_weights(lam, mu)))
    dom_weights.sort(key=lambda mu: (depth(mu), mu))

    lam_rho = add_weights(lam, rd.rho)
    c_top = rootsys.inner_weights(rd, lam_rho, lam_rho)
    mults = {lam: 1}
    dom_conj = {}

    def mult_of(w):
        if w in dom_conj:
            d = dom_conj[w]
        else:
            d = to_dominant(rd, w)[0]
            dom_conj[w] = d
        return mults.get(d, 0)

    for mu in dom_weights:
        if mu == lam:
            continue
        mu_rho = add_weights(mu, rd.rho)
        denom = c_top - rootsys.inner_weights(rd, mu_rho, mu_rho)
        rhs = Fraction(0)
        for c, f in zip(rd.pos_roots, rd.pos_roots_fund):
            k = 1
            while True:
                w = tuple(mu[i] + k * f[i] for i in range(rd.rank))
                if w not in weights:
                    break
                m = mult_of(w)
                if m:
                    rhs += m * rootsys.inner_weight_root(rd, w, c)
                k += 1
        val = 2 * rhs / denom
        if val.denominator != 1:
            raise InternalCheckError("Freudenthal produced a non-integer")
        mults[mu] = int(val)

    out = {}
    for mu, m in mults.items():
        if m:
            for w in weyl_orbit(rd, mu):
                out[w] = m
    _irr_cache[key] = out
    return dict(out)


def ad_char(rd):
    """Character of the adjoint module."""
    return irr_character(rd, rd.highest_root)


# ---------------------------------------------------------------------------
# decomposition into irreducibles

def decompose(rd, ch):
    """Multiplicities of irreducibles in a genuine module character.

    Raises UserInputError("not a module character") when the iterated
    highest-weight extraction hits a non-dominant leader or a negative
    multiplicity.
    """
    work = {w: m for w, m in ch.items() if m}
    out = {}
    heights = {}
    while work:
        best = None
        best_h = None
        for w in work:
            h = heights.get(w)
            if h is None:
                h = sum(root_coords(rd, w))
                heights[w] = h
            if best is None or h > best_h or (h == best_h and w > best):
                best, best_h = w, h
        m = work[best]
        if not dominant(rd, best) or m < 0:
            raise UserInputError(
                f"not a module character: leader {best} has multiplicity {m}")
        out[best] = m
        work = char_add(work, irr_character(rd, best), -m)
    return out


def bracket(rd, ch, mu):
    """[ch : L(mu)] via full decomposition."""
    mu = tuple(mu)
    if not dominant(rd, mu):
        raise UserInputError(f"weight {mu} is not dominant")
    return decompose(rd, ch).get(mu, 0)


# ---------------------------------------------------------------------------
# exterior and symmetric powers (Newton recurrences over Adams operations)

def _newton(rd, a, k, sign):
    if k < 0:
        raise UserInputError("power index must be >= 0")
    powers = [unit_char(rd)]
    psis = {}
    for deg in range(1, k + 1):
        acc = {}
        s = 1
        for i in range(1, deg + 1):
            psi = psis.get(i)
            if psi is None:
                psi = adams(a, i)
                psis[i] = psi
            term = tensor(psi, powers[deg - i])
            acc = char_add(acc, term, s)
            if sign < 0:
                s = -s
        out = {}
        for w, m in acc.items():
            q, r = divmod(m, deg)
            if r:
                raise InternalCheckError("Newton recurrence division failed")
            if q:
                out[w] = q
        powers.append(out)
    return powers[k]


def exterior_power(rd, a, k):
    """k-th exterior power of a character."""
    return _newton(rd, a, k, -1)


def symmetric_power(rd, a, k):
    """k-th symmetric power of a character."""
    return _newton(rd, a, k, +1)


def is_weyl_invariant(rd, ch, sample=None):
    """Check W-invariance of a character (full check by default)."""
    items = list(ch.items())
    if sample is not None:
        items = items[:sample]
    for w, m in items:
        d, _ = to_dominant(rd, w)
        if ch.get(d, 0) != m:
            return False
    return True
