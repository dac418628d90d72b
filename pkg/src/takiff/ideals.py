"""Ad-nilpotent ideals of the positive root poset and Borel classification.

An ideal is an up-closed set of positive roots (bitset over the root
list).  Twice their number is the count of Borel conjugacy classes of
the extended Takiff superalgebra, also given in closed form by
2/|W| * prod(h + e_i + 1).  Each ideal carries a rational witness
element h with alpha(h) > 1 exactly on the ideal and 0 < alpha(h) < 1
elsewhere, found by exact Fourier-Motzkin elimination.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import rootsys
from .errors import InternalCheckError, ResourceCapError, UserInputError
from .rootsys import add_weights, sub_weights, weyl_order

_ENUMERABLE = ("A", "B", "C", "D", "F", "G")


@dataclass(frozen=True)
class RootIdeal:
    mask: int

    def members(self, rd):
        return [i for i in range(len(rd.pos_roots)) if self.mask >> i & 1]

    def roots(self, rd):
        return [rd.pos_roots[i] for i in self.members(rd)]

    def size(self):
        return bin(self.mask).count("1")


def _cover_masks(rd):
    """up[i] = bitmask of roots alpha_i-th + one simple root."""
    idx = {c: i for i, c in enumerate(rd.pos_roots)}
    ups = []
    for c in rd.pos_roots:
        m = 0
        for col in range(rd.rank):
            up = tuple(c[t] + (1 if t == col else 0) for t in range(rd.rank))
            j = idx.get(up)
            if j is not None:
                m |= 1 << j
        ups.append(m)
    return ups


def is_ideal(rd, ideal):
    """Full up-closure: alpha in I and alpha+beta a positive root imply
    alpha+beta in I (beta any positive root)."""
    idx = {c: i for i, c in enumerate(rd.pos_roots)}
    mask = ideal.mask
    for i, a in enumerate(rd.pos_roots):
        if not mask >> i & 1:
            continue
        for b in rd.pos_roots:
            j = idx.get(add_weights(a, b))
            if j is not None and not mask >> j & 1:
                return False
    return True


def enumerate_ideals(rd):
    """All up-closed subsets of the positive roots, canonically sorted."""
    n = len(rd.pos_roots)
    if n > 64:
        raise ResourceCapError(
            f"{rd.series}{rd.rank} has {n} > 64 positive roots; "
            "only the closed-form count is available")
    ups = _cover_masks(rd)
    # roots come height-sorted; process from the top of the poset down
    order = sorted(range(n), key=lambda i: -sum(rd.pos_roots[i]))
    out = []

    def rec(pos, mask):
        if pos == n:
            out.append(mask)
            return
        i = order[pos]
        rec(pos + 1, mask)
        if ups[i] & mask == ups[i]:
            rec(pos + 1, mask | (1 << i))

    rec(0, 0)
    return [RootIdeal(m) for m in sorted(out)]


def count_borel_classes(rd):
    """Number of Borel conjugacy classes: closed form, cross-checked
    against the ideal enumeration whenever the type is enumerable."""
    num = 2
    for e in rd.exponents:
        num *= rd.coxeter_number + e + 1
    den = weyl_order(rd)
    closed, rem = divmod(num, den)
    if rem:
        raise InternalCheckError("closed-form Borel count is not an integer")
    if rd.series in _ENUMERABLE and len(rd.pos_roots) <= 64:
        enum = 2 * len(enumerate_ideals(rd))
        if enum != closed:
            raise InternalCheckError(
                f"enumeration ({enum}) disagrees with closed form ({closed})")
    return closed


def complement_ideal(rd, nprime):
    """The partner ideal N containing the Borel: N = b + span of the
    negative root vectors indexed by the complement of N'.  Returns the
    set of those indices after re-checking closure."""
    if not is_ideal(rd, nprime):
        raise UserInputError("input is not an up-closed root set")
    n = len(rd.pos_roots)
    neg = frozenset(i for i in range(n) if not nprime.mask >> i & 1)
    idx = {c: i for i, c in enumerate(rd.pos_roots)}
    # closure of N under the Borel: [n_beta, s_{-alpha}] lands in s_{-(alpha-beta)}
    # or inside b; alpha-beta must again avoid N' (down-closure of complement)
    for i in neg:
        a = rd.pos_roots[i]
        for b in rd.pos_roots:
            diff = sub_weights(a, b)
            j = idx.get(diff)
            if j is not None and j not in neg:
                raise InternalCheckError("complement closure check failed")
    return neg


# ---------------------------------------------------------------------------
# exact Fourier-Motzkin

def _fm_eliminate(ineqs, k):
    """Project strict inequalities sum c_i x_i > b onto variables < k."""
    lowers, uppers, rest = [], [], []
    for c, b in ineqs:
        if c[k] > 0:
            lowers.append((c, b))
        elif c[k] < 0:
            uppers.append((c, b))
        else:
            rest.append((c, b))
    for cl, bl in lowers:
        for cu, bu in uppers:
            # x_k > (bl - ...)/cl[k] and x_k < ... combine
            scale_l = -cu[k]
            scale_u = cl[k]
            c = [scale_l * cl[t] + scale_u * cu[t] for t in range(len(cl))]
            b = scale_l * bl + scale_u * bu
            c[k] = Fraction(0)
            rest.append((c, b))
    return rest, lowers, uppers


def _fm_solve(ineqs, nvars):
    """A rational point strictly satisfying all c . x > b, or None."""
    stages = []
    cur = [( [Fraction(v) for v in c], Fraction(b)) for c, b in ineqs]
    for k in range(nvars - 1, -1, -1):
        cur, lowers, uppers = _fm_eliminate(cur, k)
        stages.append((k, lowers, uppers))
        for c, b in cur:
            if all(v == 0 for v in c) and b >= 0:
                return None   # contradiction 0 > b >= 0
    x = [Fraction(0)] * nvars
    for k, lowers, uppers in reversed(stages):
        lo, hi = None, None
        for c, b in lowers:
            bound = (b - sum(c[t] * x[t] for t in range(nvars) if t != k)) / c[k]
            lo = bound if lo is None or bound > lo else lo
        for c, b in uppers:
            bound = (b - sum(c[t] * x[t] for t in range(nvars) if t != k)) / c[k]
            hi = bound if hi is None or bound < hi else hi
        if lo is None and hi is None:
            x[k] = Fraction(0)
        elif lo is None:
            x[k] = hi - 1
        elif hi is None:
            x[k] = lo + 1
        else:
            if lo >= hi:
                return None
            x[k] = (lo + hi) / 2
    return x


def shi_witness(rd, nprime):
    """Rational h (coordinates on the fundamental coweights) with
    alpha(h) > 1 for ideal members and 0 < alpha(h) < 1 otherwise."""
    if not is_ideal(rd, nprime):
        raise UserInputError("input is not an up-closed root set")
    ineqs = []
    for i, c in enumerate(rd.pos_roots):
        cv = [Fraction(v) for v in c]
        if nprime.mask >> i & 1:
            ineqs.append((cv, Fraction(1)))                      # alpha(h) > 1
        else:
            ineqs.append((cv, Fraction(0)))                      # alpha(h) > 0
            ineqs.append(([-v for v in cv], Fraction(-1)))       # alpha(h) < 1
    x = _fm_solve(ineqs, rd.rank)
    if x is None:
        raise InternalCheckError(
            "witness system infeasible; input cannot be an ideal")
    for i, c in enumerate(rd.pos_roots):
        val = sum(Fraction(c[t]) * x[t] for t in range(rd.rank))
        need = (val > 1) if nprime.mask >> i & 1 else (0 < val < 1)
        if not need:
            raise InternalCheckError("witness failed strict re-validation")
    return tuple(x)


# ---------------------------------------------------------------------------
# Borel descriptions

@dataclass(frozen=True)
class BorelDescription:
    kind: str                  # "A" (N contains b) | "B" (N' in the nilradical)
    ideal: RootIdeal           # always the N' side of the bijection
    includes_del_xi: bool
    witness: tuple             # rational h
    xi_sign: int               # regular element h + xi_sign * xi d_xi

    def odd_dimension(self, rd):
        npos = len(rd.pos_roots)
        dim_s = 2 * npos + rd.rank
        if self.kind == "B":
            return self.ideal.size() + 1
        return dim_s - self.ideal.size()


def classify_borels(rd):
    """Both Borel descriptions per ideal, with regular-element data."""
    out = []
    for ideal in enumerate_ideals(rd):
        h = shi_witness(rd, ideal)
        complement_ideal(rd, ideal)   # re-check the bijection partner
        out.append(BorelDescription(kind="B", ideal=ideal,
                                    includes_del_xi=True, witness=h, xi_sign=-1))
        out.append(BorelDescription(kind="A", ideal=ideal,
                                    includes_del_xi=False, witness=h, xi_sign=+1))
    return out
