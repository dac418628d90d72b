"""Block labels and counts for the finite-dimensional and BGG categories.

For rank >= 2 blocks are labelled by minuscule weights (coset of the
root lattice); sl(2) splits into three blocks.  linkage_chain produces
an explicit path of composition-multiplicity witnesses from a dominant
super weight down to its block representative, mirroring the inductive
construction: lift by 2*rho until every weight in sight stays dominant,
step down one simple root, repeat.
"""

from dataclasses import dataclass

from . import rootsys
from .errors import InternalCheckError, ResourceCapError, UserInputError
from .multiplicities import SuperWeight, delta_mult
from .rootsys import (add_weights, dominant, minuscule_weights, root_coords,
                      sub_weights)


@dataclass(frozen=True)
class BlockLabel:
    kind: str                 # "minuscule" | "sl2"
    weight: tuple = None      # minuscule representative (rank >= 2)
    tag: str = None           # "even" | "odd_a" | "odd_b" (sl2)

    def as_dict(self):
        if self.kind == "minuscule":
            return {"kind": "minuscule", "weight": list(self.weight)}
        return {"kind": "sl2", "tag": self.tag}


def _sl2_label(lam, a):
    m = lam[0]
    if m % 2 == 0:
        return BlockLabel("sl2", tag="even")
    n = (m - 1) // 2
    return BlockLabel("sl2", tag="odd_a" if (a + n) % 2 == 0 else "odd_b")


def _minuscule_label(rd, lam):
    for nu in minuscule_weights(rd):
        if rootsys.in_root_lattice(rd, sub_weights(lam, nu)):
            return BlockLabel("minuscule", weight=nu)
    raise InternalCheckError(f"no minuscule representative for {lam}")


def block_label_F(rd, x):
    """Block of L(x) in the finite-dimensional category (x dominant)."""
    x = SuperWeight(*x)
    if not dominant(rd, x.lam):
        raise UserInputError(f"weight {x.lam} is not dominant")
    if rd.rank == 1:
        return _sl2_label(x.lam, x.a)
    return _minuscule_label(rd, x.lam)


def block_label_O(rd, x):
    """Block of L(x) in the BGG category (x need not be dominant)."""
    x = SuperWeight(*x)
    if rd.rank == 1:
        return _sl2_label(x.lam, x.a)
    return _minuscule_label(rd, x.lam)


def num_blocks(rd, category="F"):
    if category not in ("F", "O"):
        raise UserInputError(f"unknown category {category!r}")
    if rd.rank == 1:
        return 3
    return rootsys.cartan_determinant(rd)


# ---------------------------------------------------------------------------
# constructive linkage

def _is_deep(rd, lam):
    """lam + gamma dominant for every root gamma."""
    return all(lam[i] >= rd.deep_margin[i] for i in range(rd.rank))


def _two_rho(rd):
    return tuple(2 for _ in range(rd.rank))


class _ChainBuilder:
    def __init__(self, rd, cap):
        self.rd = rd
        self.cap = cap
        self.edges = []
        self.ell = len(rd.pos_roots)

    def emit(self, u, v, rule, expect_at_least=1):
        w = delta_mult(self.rd, u, v)
        if w < expect_at_least:
            raise InternalCheckError(f"linkage witness failed: [D({u}):L({v})]={w}")
        self.edges.append((u, v, rule))
        if len(self.edges) > self.cap:
            raise ResourceCapError(f"linkage chain exceeded {self.cap} edges")

    def lift(self, lam, a):
        """One 2*rho lift: returns the new (lam, a)."""
        rd = self.rd
        up = add_weights(lam, _two_rho(rd))
        self.emit(SuperWeight(lam, a), SuperWeight(up, a - self.ell), "wedge-top")
        return up, a - self.ell

    def walk_same_lambda(self, lam, a, b):
        """Connect (lam, a) to (lam, b); may lift into the deep region."""
        rd = self.rd
        if a == b:
            return
        lifts = 0
        cur_lam, cur_a = lam, a
        while not _is_deep(rd, cur_lam):
            cur_lam, cur_a = self.lift(cur_lam, cur_a)
            lifts += 1
        target = b - lifts * self.ell
        step = -1 if cur_a > target else 1
        while cur_a != target:
            u = SuperWeight(cur_lam, max(cur_a, cur_a + step))
            v = SuperWeight(cur_lam, min(cur_a, cur_a + step))
            self.emit(u, v, "rank-term", expect_at_least=1)
            cur_a += step
        for _ in range(lifts):
            down = sub_weights(cur_lam, _two_rho(rd))
            self.emit(SuperWeight(down, cur_a + self.ell),
                      SuperWeight(cur_lam, cur_a), "wedge-top")
            cur_lam, cur_a = down, cur_a + self.ell
        assert cur_lam == lam and cur_a == b

    def link(self, lam, a, mu, b, kvec):
        """Connect (lam, a) to (mu, b); lam - mu = sum kvec[i] alpha_i >= 0."""
        rd = self.rd
        if all(k == 0 for k in kvec):
            self.walk_same_lambda(lam, a, b)
            return
        i = max(range(rd.rank), key=lambda t: kvec[t])
        kprime = list(kvec)
        kprime[i] -= 1
        drop = [sum(rd.cartan[t][s] * kprime[s] for s in range(rd.rank))
                for t in range(rd.rank)]
        j = 0
        while True:
            cand = tuple(lam[t] + 2 * j - drop[t] for t in range(rd.rank))
            if _is_deep(rd, cand):
                break
            j += 1
        top = tuple(lam[t] + 2 * j for t in range(rd.rank))   # lam + 2j rho
        mid = cand                                            # top - sum k' alpha
        low = sub_weights(mid, rd.simple_roots[i])            # = mu + 2j rho
        # (lam, a) ~ (top, a - j*ell)
        cur_lam, cur_a = lam, a
        for _ in range(j):
            cur_lam, cur_a = self.lift(cur_lam, cur_a)
        assert cur_lam == top
        # (top, .) ~ (mid, c+1) by induction on k'
        c1 = cur_a - sum(kprime)
        self.link(top, cur_a, mid, c1, kprime)
        # root step down: [Delta(mid + (c+1) d) : L(mid - alpha_i + c d)] = 1
        self.emit(SuperWeight(mid, c1), SuperWeight(low, c1 - 1), "root-step")
        # unlift (low, c) = (mu + 2j rho, c) down to mu
        cur_lam, cur_a = low, c1 - 1
        for _ in range(j):
            down = sub_weights(cur_lam, _two_rho(rd))
            self.emit(SuperWeight(down, cur_a + self.ell),
                      SuperWeight(cur_lam, cur_a), "wedge-top")
            cur_lam, cur_a = down, cur_a + self.ell
        assert cur_lam == mu
        self.walk_same_lambda(mu, cur_a, b)


def linkage_chain(rd, x, cap=10000):
    """Explicit witnessed chain from x to (block minuscule, 0); rank >= 2."""
    x = SuperWeight(*x)
    if rd.rank < 2:
        raise UserInputError("linkage chains require rank >= 2")
    if not dominant(rd, x.lam):
        raise UserInputError(f"weight {x.lam} is not dominant")
    nu = block_label_F(rd, x).weight
    if x.lam == nu and x.a == 0:
        return []
    kvec = root_coords(rd, sub_weights(x.lam, nu))
    if any(c.denominator != 1 or c < 0 for c in kvec):
        raise InternalCheckError("minuscule representative is not below the weight")
    builder = _ChainBuilder(rd, cap)
    builder.link(x.lam, x.a, nu, 0, [int(c) for c in kvec])
    return builder.edges


def chain_endpoint(rd, x, cap=10000):
    """Terminal vertex of the linkage chain (equals (block label, 0))."""
    edges = linkage_chain(rd, x, cap)
    if not edges:
        return SuperWeight(*x)
    # the chain is a path: the endpoint is the vertex of the last edge that
    # differs from the second-to-last edge's vertices
    verts = [SuperWeight(*x)]
    for u, v, _ in edges:
        verts.append(v if verts[-1] == u else u)
    return verts[-1]
