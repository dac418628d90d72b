"""Ext-group dimensions between finite-dimensional simples, Ext1 quivers
and the Koszulity diagonal check.

Two engines compute dim Ext^i(L(x), L(y)):

* Closed: the kernel/cokernel brackets collapse to symmetric-power
  brackets whenever lambda lies outside the root lattice (then L(lambda)
  has no zero weight and every D^n is onto), and for i <= 1 the first
  extensions have explicit formulas.  Purely character arithmetic.
* Oracle: exact matrix ranks of the contractions D^i and D^{i+1}.

Auto prefers Closed and falls back to the Oracle.  The conformal-module
Ext1 formulas are included for the quiver comparison.
"""

from dataclasses import dataclass, field
import random

from . import charring, dmap, rootsys
from .errors import InternalCheckError, UserInputError
from .multiplicities import SuperWeight, _wedge_tensor_decomp, dual_simple
from .rootsys import add_weights, dominant, in_root_lattice, sub_weights

DEFAULT_ORACLE_IMAX = 4


@dataclass(frozen=True)
class ExtQuery:
    i: int
    source: SuperWeight
    target: SuperWeight
    engine: str = "auto"


_sym_ad_cache = {}


def _sym_ad_decomp(rd, i):
    """Decomposition of S^i(s) into irreducibles."""
    key = (rd.key, i)
    dec = _sym_ad_cache.get(key)
    if dec is None:
        ch = charring.symmetric_power(rd, charring.ad_char(rd), i)
        dec = charring.decompose(rd, ch)
        _sym_ad_cache[key] = dec
    return dec


_sym_tensor_cache = {}


def _sym_tensor_bracket(rd, lam, i, mu):
    """[S^i(s) (x) L(lam) : L(mu)]."""
    if i < 0:
        return 0
    key = (rd.key, lam, i)
    dec = _sym_tensor_cache.get(key)
    if dec is None:
        ch = charring.symmetric_power(rd, charring.ad_char(rd), i)
        ch = charring.tensor(ch, charring.irr_character(rd, lam))
        dec = charring.decompose(rd, ch)
        _sym_tensor_cache[key] = dec
    return dec.get(mu, 0)


def _oracle_ker_bracket(rd, lam, i, mu, cap):
    if i == 0:
        return 1 if lam == mu else 0
    cb = dmap.chevalley_basis(rd)
    d = dmap.dmap_matrix(cb, lam, i, cap)
    ker, _ = dmap.ker_coker_multiplicities(d)
    return ker.get(mu, 0)


def _oracle_coker_bracket(rd, lam, i, mu, cap):
    cb = dmap.chevalley_basis(rd)
    d = dmap.dmap_matrix(cb, lam, i, cap)
    _, cok = dmap.ker_coker_multiplicities(d)
    return cok.get(mu, 0)


def closed_engine_valid(rd, i, x, y):
    """Closed formulas apply unless lambda, mu != 0, i >= 2 and lambda
    lies in the root lattice."""
    x, y = SuperWeight(*x), SuperWeight(*y)
    if x.lam == rd.zero or y.lam == rd.zero or i <= 1:
        return True
    return not in_root_lattice(rd, x.lam)


def ext_dim(rd, i, source, target, engine="auto",
            cap=dmap.DEFAULT_DIM_CAP, oracle_imax=DEFAULT_ORACLE_IMAX):
    """dim Ext^i(L(source), L(target)) in the finite-dimensional category."""
    if i < 0:
        raise UserInputError("Ext degree must be >= 0")
    if engine not in ("auto", "closed", "oracle"):
        raise UserInputError(f"unknown engine {engine!r}")
    x, y = SuperWeight(*source), SuperWeight(*target)
    for w in (x, y):
        if not dominant(rd, w.lam):
            raise UserInputError(f"weight {w.lam} is not dominant")
    ab = x.a - y.a
    zero = rd.zero

    if x.lam != zero and y.lam == zero:
        return _sym_ad_decomp(rd, i).get(x.lam, 0) if ab == i + 1 else 0
    if x.lam == zero and y.lam != zero:
        # the published formula names the source weight here; the target
        # weight is the only one that can be meant (duality-consistent)
        return _sym_ad_decomp(rd, i).get(y.lam, 0) if ab == i else 0
    if x.lam == zero and y.lam == zero:
        if (ab + i) % 2 == 0 and -i <= ab <= i:
            return _sym_ad_decomp(rd, (ab + i) // 2).get(zero, 0)
        return 0

    # generic case: lambda, mu != 0
    if ab not in (i, i + 1):
        return 0
    if engine == "closed" and not closed_engine_valid(rd, i, x, y):
        raise UserInputError(
            "closed engine is only valid for i <= 1 or highest weights "
            "outside the root lattice")
    use_closed = engine == "closed" or (engine == "auto"
                                        and closed_engine_valid(rd, i, x, y))
    if use_closed:
        if i == 0:
            return 1 if (ab == 0 and x.lam == y.lam) else 0
        if i == 1:
            if ab == 1:
                val = (_wedge_tensor_decomp(rd, x.lam, 1).get(y.lam, 0)
                       - (1 if x.lam == y.lam else 0))
                if val < 0:
                    raise InternalCheckError("negative Ext1 from closed formula")
                return val
            # ab == 2: cokernel of D^2 is zero or trivial, and mu != 0
            return 0
        # i >= 2, lambda outside the root lattice: every D^n is onto
        if ab == i + 1:
            return 0
        val = (_sym_tensor_bracket(rd, x.lam, i, y.lam)
               - _sym_tensor_bracket(rd, x.lam, i - 1, y.lam))
        if val < 0:
            raise InternalCheckError("negative Ext from closed formula")
        return val
    # oracle
    if i > oracle_imax:
        raise UserInputError(
            f"oracle engine capped at i <= {oracle_imax} (got i = {i})")
    if ab == i:
        return _oracle_ker_bracket(rd, x.lam, i, y.lam, cap)
    return _oracle_coker_bracket(rd, x.lam, i + 1, y.lam, cap)


def ext_query(rd, q, cap=dmap.DEFAULT_DIM_CAP):
    return ext_dim(rd, q.i, q.source, q.target, q.engine, cap)


# ---------------------------------------------------------------------------
# first extensions, closed forms

def ext1_closed(rd, source, target):
    """dim Ext^1 in the finite-dimensional category (explicit formulas)."""
    x, y = SuperWeight(*source), SuperWeight(*target)
    for w in (x, y):
        if not dominant(rd, w.lam):
            raise UserInputError(f"weight {w.lam} is not dominant")
    ab = x.a - y.a
    zero = rd.zero
    theta = rd.highest_root
    if x.lam != zero and y.lam != zero:
        if ab != 1:
            return 0
        val = (_wedge_tensor_decomp(rd, x.lam, 1).get(y.lam, 0)
               - (1 if x.lam == y.lam else 0))
        if val < 0:
            raise InternalCheckError("negative Ext1")
        return val
    if x.lam != zero:
        return 1 if (ab == 2 and x.lam == theta) else 0
    if y.lam != zero:
        return 1 if (ab == 1 and y.lam == theta) else 0
    return 1 if ab == -1 else 0


def ext1_conformal(rd, source, target):
    """dim Ext^1 between simple finite conformal modules of the current
    algebra (for the quiver comparison)."""
    x, y = SuperWeight(*source), SuperWeight(*target)
    for w in (x, y):
        if not dominant(rd, w.lam):
            raise UserInputError(f"weight {w.lam} is not dominant")
    ab = x.a - y.a
    zero = rd.zero
    theta = rd.highest_root
    if x.lam != zero and y.lam != zero:
        hit = ab == 1 or (ab == 2 and rd.key == ("A", 1))
        if not hit:
            return 0
        val = (_wedge_tensor_decomp(rd, x.lam, 1).get(y.lam, 0)
               - (1 if x.lam == y.lam else 0))
        if val < 0:
            raise InternalCheckError("negative conformal Ext1")
        return val
    if x.lam != zero:
        return 1 if (ab == 1 and x.lam == theta) else 0
    if y.lam != zero:
        return 0
    return 1 if ab == -1 else 0


# ---------------------------------------------------------------------------
# Ext1 quivers

@dataclass
class QuiverGraph:
    vertices: tuple
    edges: dict                  # (u, v) -> positive label
    interior: frozenset = field(default_factory=frozenset)


def _block_vertices(rd, label, max_coord, max_a):
    from .blocks import BlockLabel, block_label_F
    out = []
    if rd.rank == 1:
        for m in range(0, max_coord + 1):
            for a in range(-max_a, max_a + 1):
                x = SuperWeight((m,), a)
                if block_label_F(rd, x) == label:
                    out.append(x)
        return sorted(out)
    nu = label.weight

    def boxes(k):
        if k == 0:
            yield ()
            return
        for head in range(0, max_coord + 1):
            for tail in boxes(k - 1):
                yield (head,) + tail

    for lam in boxes(rd.rank):
        if rootsys.in_root_lattice(rd, sub_weights(lam, nu)):
            for a in range(-max_a, max_a + 1):
                out.append(SuperWeight(lam, a))
    return sorted(out)


def _neighbor_candidates(rd, x):
    """Super weights that could share a nonzero Ext1 with x (either way)."""
    lams = {x.lam, rd.zero, rd.highest_root}
    ch = charring.tensor(charring.ad_char(rd),
                         charring.irr_character(rd, x.lam))
    for mu in charring.decompose(rd, ch):
        lams.add(mu)
    out = set()
    for lam in lams:
        for da in (-2, -1, 1, 2):
            out.add(SuperWeight(lam, x.a + da))
    return out


def build_quiver(rd, label, max_coord, max_a, which="F"):
    """Ext1 quiver of a block restricted to a finite window."""
    if which not in ("F", "C"):
        raise UserInputError(f"unknown quiver flavour {which!r}")
    fn = ext1_closed if which == "F" else ext1_conformal
    verts = _block_vertices(rd, label, max_coord, max_a)
    vset = set(verts)
    edges = {}
    for u in verts:
        for v in verts:
            if u is v or u == v:
                continue
            lab = fn(rd, u, v)
            if lab:
                edges[(u, v)] = lab
    interior = set()
    from .blocks import block_label_F
    for u in verts:
        ok = True
        for w in _neighbor_candidates(rd, u):
            if w in vset or not dominant(rd, w.lam):
                continue
            if fn(rd, u, w) or fn(rd, w, u):
                ok = False
                break
        if ok:
            interior.add(u)
    return QuiverGraph(vertices=tuple(verts), edges=edges,
                       interior=frozenset(interior))


def compare_quivers(qf, qc):
    """Label-preserving edge equality on vertices with full neighborhoods
    inside the window."""
    inner = qf.interior & qc.interior
    if set(qf.vertices) != set(qc.vertices):
        return False
    ef = {e: m for e, m in qf.edges.items() if e[0] in inner and e[1] in inner}
    ec = {e: m for e, m in qc.edges.items() if e[0] in inner and e[1] in inner}
    return ef == ec


# ---------------------------------------------------------------------------
# Koszulity diagonal check

@dataclass
class KoszulReport:
    label: object
    pairs: tuple
    imax: int
    violations: tuple

    @property
    def ok(self):
        return not self.violations


def koszul_diagonal_check(rd, label, samples=10, imax=3, seed=0,
                          max_coord=3, max_a=3, cap=dmap.DEFAULT_DIM_CAP):
    """Check Ext^i(L(x), L(y)) != 0 => x.a - y.a = i on sampled pairs in a
    non-principal block (rank >= 2)."""
    if rd.rank < 2:
        raise UserInputError("Koszulity check requires rank >= 2")
    if label.kind != "minuscule" or label.weight == rd.zero:
        raise UserInputError("Koszulity check applies to non-principal blocks")
    verts = _block_vertices(rd, label, max_coord, max_a)
    rng = random.Random(seed)
    pairs = [(rng.choice(verts), rng.choice(verts)) for _ in range(samples)]
    violations = []
    for x, y in pairs:
        for i in range(0, imax + 1):
            val = ext_dim(rd, i, x, y, engine="auto", cap=cap)
            if val and x.a - y.a != i:
                violations.append((i, x, y, val))
    return KoszulReport(label=label, pairs=tuple(pairs), imax=imax,
                        violations=tuple(violations))
