"""Explicit exact-matrix realizations.

chevalley_basis computes integral structure constants N(a, b) for all
pairs of roots: extraspecial pairs get +(p+1), everything else follows
from the rotation identity N(a,b)/(c,c) = N(b,c)/(a,a) for a+b+c = 0
and the four-root Jacobi relation, resolved by increasing height.

simple_module realizes L(lambda) as the Verma quotient: level by level
it applies the lowering generators to the previous basis, computes the
contravariant Gram matrix of the candidates from lower-level data, and
keeps a pivot subset as the new basis.  Null candidates (the radical)
get expansions instead of basis slots, so the resulting matrices act on
the simple quotient.

The contraction D^n[V]: S^n(s) (x) V -> S^{n-1}(s) (x) V removes one
tensor factor and acts with it on V; its kernel/cokernel characters
drive the Ext computations.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
import random

from . import charring, rootsys
from ._linalg import pivot_columns, rank_rows, solve_dense, spmm, sp_sub
from .errors import InternalCheckError, ResourceCapError, UserInputError
from .rootsys import add_weights, dominant, neg_weight, sub_weights

DEFAULT_DIM_CAP = 2000


# ---------------------------------------------------------------------------
# structure constants

@dataclass(frozen=True)
class ChevalleyBasis:
    rd: object
    npos: dict          # (i, j) root indices, i-th + j-th a root -> N > 0 pairs table
    extraspecial: dict  # gamma index -> (i simple index in root list, beta index)
    root_index: dict    # coords -> index

    @property
    def dim(self):
        return 2 * len(self.rd.pos_roots) + self.rd.rank

    def symbols(self):
        """Basis symbols in adjoint order: e's, h's, f's."""
        m = len(self.rd.pos_roots)
        return ([("e", i) for i in range(m)]
                + [("h", k) for k in range(self.rd.rank)]
                + [("f", i) for i in range(m)])


def _chain_down(root_index, b, a):
    """p = max k with b - k a a root; the string may run into negative roots."""
    p = 0
    cur = sub_weights(b, a)
    while cur in root_index or neg_weight(cur) in root_index:
        p += 1
        cur = sub_weights(cur, a)
    return p


def _norm2_cache(rd):
    return {c: rootsys.root_norm2(rd, c) for c in rd.pos_roots}


def _lookup_n(npos, ridx, norm2_of, a, b):
    """N(a, b) for signed root coordinate tuples with a + b a root.

    Positive pairs read the table; the rest reduces by antisymmetry,
    N(-a,-b) = -N(a,b), and the rotation N(a,b)/(c,c) = N(b,c)/(a,a)
    for a + b + c = 0.
    """
    apos = min(a) >= 0
    bpos = min(b) >= 0
    if apos and bpos:
        i, j = ridx[a], ridx[b]
        if i < j:
            return Fraction(npos[(i, j)])
        return -Fraction(npos[(j, i)])
    if not apos and not bpos:
        return -_lookup_n(npos, ridx, norm2_of, neg_weight(a), neg_weight(b))
    if not apos:
        return -_lookup_n(npos, ridx, norm2_of, b, a)
    s = add_weights(a, b)
    if min(s) >= 0:
        # rotate through the all-negative pair (b, -s)
        return (norm2_of(s)
                * (-_lookup_n(npos, ridx, norm2_of, neg_weight(b), s))
                / norm2_of(a))
    # N(a,b) = -N(-a,-b) = N(-b,-a) with -b positive and sum -s positive
    return _lookup_n(npos, ridx, norm2_of, neg_weight(b), neg_weight(a))


_cb_cache = {}


def chevalley_basis(rd, validate=True):
    """Chevalley structure constants for rd, with Jacobi validation
    (exhaustive for rank <= 4, sampled above)."""
    key = rd.key
    if key in _cb_cache:
        return _cb_cache[key]
    roots = list(rd.pos_roots)           # sorted by (height, lex)
    ridx = {c: i for i, c in enumerate(roots)}
    norm2 = _norm2_cache(rd)

    def norm2_of(c):
        cc = c if c in norm2 else neg_weight(c)
        return norm2[cc]

    npos = {}
    extraspecial = {}

    def lookup(a, b):
        return _lookup_n(npos, ridx, norm2_of, a, b)

    for gi, gamma in enumerate(roots):
        if sum(gamma) == 1:
            continue
        pairs = [(ridx[a], ridx[sub_weights(gamma, a)]) for a in roots
                 if sub_weights(gamma, a) in ridx]
        pairs = sorted({(i, j) for i, j in pairs if i < j})
        ai, bi = pairs[0]
        if sum(roots[ai]) != 1:
            raise InternalCheckError("extraspecial first member is not simple")
        extraspecial[gi] = (ai, bi)
        p = _chain_down(ridx, roots[bi], roots[ai])
        npos[(ai, bi)] = p + 1
        a1, b1 = roots[ai], roots[bi]
        for (ci, di) in pairs[1:]:
            a, b = roots[ci], roots[di]
            total = Fraction(0)
            d1 = sub_weights(b1, a)
            if d1 in ridx or neg_weight(d1) in ridx:
                total += (lookup(b1, neg_weight(a)) * lookup(a1, neg_weight(b))
                          / norm2_of(d1))
            d2 = sub_weights(a1, a)
            if d2 in ridx or neg_weight(d2) in ridx:
                total += (lookup(neg_weight(a), a1) * lookup(b1, neg_weight(b))
                          / norm2_of(d2))
            val = norm2_of(gamma) * total / npos[(ai, bi)]
            if val.denominator != 1:
                raise InternalCheckError("non-integral structure constant")
            val = int(val)
            pexp = _chain_down(ridx, b, a)
            if abs(val) != pexp + 1:
                raise InternalCheckError(
                    f"|N| check failed at {a}+{b}: {val} vs {pexp + 1}")
            npos[(ci, di)] = val

    cb = ChevalleyBasis(rd=rd, npos=npos, extraspecial=extraspecial, root_index=ridx)
    if validate:
        validate_jacobi(cb, exhaustive=(rd.rank <= 4))
    _cb_cache[key] = cb
    return cb


def structure_constant(cb, a, b):
    """N(a, b) as an integer for root coordinate tuples (0 if a+b not a root)."""
    s = add_weights(a, b)
    if s not in cb.root_index and neg_weight(s) not in cb.root_index:
        return 0
    norm2 = _norm2_cache(cb.rd)

    def norm2_of(c):
        return norm2[c if c in norm2 else neg_weight(c)]

    v = _lookup_n(cb.npos, cb.root_index, norm2_of, a, b)
    if v.denominator != 1:
        raise InternalCheckError("non-integral structure constant lookup")
    return int(v)


def coroot_coords(rd, c):
    """alpha^vee = sum coeff_i alpha_i^vee for alpha with root coords c."""
    na = rootsys.root_norm2(rd, c)
    out = []
    for i in range(rd.rank):
        v = Fraction(c[i]) * 2 * rd.simple_norm_half[i] / na
        if v.denominator != 1:
            raise InternalCheckError("non-integral coroot coordinates")
        out.append(int(v))
    return tuple(out)


def bracket_symbols(cb, x, y):
    """[x, y] for basis symbols, as {symbol: integer coefficient}."""
    rd = cb.rd
    roots = rd.pos_roots

    def signed(sym):
        kind, i = sym
        if kind == "e":
            return roots[i]
        if kind == "f":
            return neg_weight(roots[i])
        return None

    def vector_sym(c):
        if min(c) >= 0:
            return ("e", cb.root_index[c])
        return ("f", cb.root_index[neg_weight(c)])

    kx, ix = x
    ky, iy = y
    if kx == "h" and ky == "h":
        return {}
    if kx == "h":
        c = signed(y)
        fund = rootsys.add_weights(
            tuple(0 for _ in range(rd.rank)),
            tuple(sum(rd.cartan[t][j] * c[j] for j in range(rd.rank))
                  for t in range(rd.rank)))
        coeff = fund[ix]
        return {y: coeff} if coeff else {}
    if ky == "h":
        out = bracket_symbols(cb, y, x)
        return {s: -v for s, v in out.items()}
    a = signed(x)
    b = signed(y)
    s = add_weights(a, b)
    if all(v == 0 for v in s):
        # [e_alpha, f_alpha] = h_alpha
        cor = coroot_coords(rd, a if min(a) >= 0 else b)
        sign = 1 if min(a) >= 0 else -1
        return {("h", k): sign * cor[k] for k in range(rd.rank) if cor[k]}
    n = structure_constant(cb, a, b)
    if n == 0:
        return {}
    return {vector_sym(s): n}


def validate_jacobi(cb, exhaustive=True, samples=2000, seed=0):
    """Jacobi identity on basis triples; raises on failure."""
    syms = cb.symbols()
    table = {}

    def br(x, y):
        key = (x, y)
        if key not in table:
            table[key] = bracket_symbols(cb, x, y)
        return table[key]

    def br_vec(x, vec):
        out = {}
        for s, c in vec.items():
            for t, d in br(x, s).items():
                v = out.get(t, 0) + c * d
                if v:
                    out[t] = v
                elif t in out:
                    del out[t]
        return out

    if exhaustive:
        triples = [(x, y, z) for x in syms for y in syms for z in syms]
    else:
        rng = random.Random(seed)
        triples = [tuple(rng.choice(syms) for _ in range(3)) for _ in range(samples)]
    for x, y, z in triples:
        lhs = br_vec(x, br(y, z))
        rhs1 = br_vec(y, br(x, z))
        yz = br(x, y)
        rhs2 = {}
        for s, c in yz.items():
            for t, d in br(s, z).items():
                v = rhs2.get(t, 0) + c * d
                if v:
                    rhs2[t] = v
                elif t in rhs2:
                    del rhs2[t]
        for t in set(lhs) | set(rhs1) | set(rhs2):
            if lhs.get(t, 0) != rhs1.get(t, 0) + rhs2.get(t, 0):
                raise InternalCheckError(f"Jacobi failed on {x},{y},{z}")


def max_structure_constant(cb):
    return max((abs(v) for v in cb.npos.values()), default=0)


# ---------------------------------------------------------------------------
# explicit modules

@dataclass
class ExplicitModule:
    cb: ChevalleyBasis
    highest_weight: tuple
    weights: tuple                 # weight of each basis vector
    action: dict                   # symbol -> sparse row-dict matrix

    @property
    def dim(self):
        return len(self.weights)

    def character(self):
        ch = {}
        for w in self.weights:
            ch[w] = ch.get(w, 0) + 1
        return ch


def _extend_action_to_all_roots(cb, act):
    """Fill in non-simple e/f matrices via extraspecial commutators."""
    rd = cb.rd
    for gi in range(len(rd.pos_roots)):
        if gi in cb.extraspecial:
            ai, bi = cb.extraspecial[gi]
            n = cb.npos[(ai, bi)]
            ea = spmm(act[("e", ai)], act[("e", bi)])
            eb = spmm(act[("e", bi)], act[("e", ai)])
            act[("e", gi)] = _sp_scale(sp_sub(ea, eb), Fraction(1, n))
            fa = spmm(act[("f", ai)], act[("f", bi)])
            fb = spmm(act[("f", bi)], act[("f", ai)])
            act[("f", gi)] = _sp_scale(sp_sub(fa, fb), Fraction(-1, n))


def _sp_scale(m, c):
    out = {}
    for i, row in m.items():
        r = {}
        for j, v in row.items():
            x = v * c
            if isinstance(x, Fraction) and x.denominator == 1:
                x = int(x)
            if x:
                r[j] = x
        if r:
            out[i] = r
    return out


_simple_cache = {}


def simple_module(cb, lam, cap=DEFAULT_DIM_CAP):
    """L(lambda) with exact matrices, via the Verma quotient with
    contravariant-form pruning."""
    rd = cb.rd
    lam = tuple(lam)
    if not dominant(rd, lam):
        raise UserInputError(f"highest weight {lam} is not dominant")
    key = (rd.key, lam)
    if key in _simple_cache:
        return _simple_cache[key]
    dim = rootsys.weyl_dim(rd, lam)
    if dim > cap:
        raise ResourceCapError(
            f"dim L{lam} = {dim} exceeds the dimension cap {cap}")

    rank = rd.rank
    weights = [lam]
    gram = {(0, 0): Fraction(1)}
    e_mat = {i: {} for i in range(rank)}   # e_mat[i][row][col]
    f_mat = {i: {} for i in range(rank)}
    level = [0]

    def pairing(w, i):
        return w[i]     # <w, alpha_i^vee> in fundamental coordinates

    while level:
        # candidate lowerings (i, b) grouped by weight
        cands = {}
        for b in level:
            for i in range(rank):
                w = sub_weights(weights[b], rd.simple_roots[i])
                cands.setdefault(w, []).append((i, b))
        new_level = []
        for w in sorted(cands):
            group = cands[w]
            # e_j action of each candidate, over the current-level basis
            evecs = []
            for (i, b) in group:
                per_j = []
                for j in range(rank):
                    vec = {}
                    col = {r: v for r, v in _column(e_mat[j], b).items()}
                    # f_i (e_j b): apply f_i to the level-(d-1) expansion
                    for k, v in col.items():
                        for r, u in _column(f_mat[i], k).items():
                            vec[r] = vec.get(r, 0) + v * u
                    if i == j:
                        vec[b] = vec.get(b, 0) + pairing(weights[b], i)
                    per_j.append({r: v for r, v in vec.items() if v})
                evecs.append(per_j)
            # Gram block: <(i,b), (j,b')> = <b, e_i f_j b'> = sum gram pairings
            gsize = len(group)
            gb = [[Fraction(0)] * gsize for _ in range(gsize)]
            for col_idx, (j, bp) in enumerate(group):
                for row_idx, (i, b) in enumerate(group):
                    vec = evecs[col_idx][i]
                    tot = Fraction(0)
                    for k, v in vec.items():
                        g = gram.get((b, k)) or gram.get((k, b))
                        if g:
                            tot += v * g
                    gb[row_idx][col_idx] = tot
            pivs = pivot_columns(gb)
            if not pivs:
                continue
            base_idx = []
            for p in pivs:
                idx = len(weights)
                weights.append(w)
                base_idx.append(idx)
                new_level.append(idx)
            # gram entries of the new basis
            for a_pos, p in enumerate(pivs):
                for b_pos, q in enumerate(pivs):
                    if base_idx[a_pos] <= base_idx[b_pos]:
                        gram[(base_idx[a_pos], base_idx[b_pos])] = gb[p][q]
            # expansion of every candidate in the new basis
            sub = [[gb[p][q] for q in pivs] for p in pivs]
            for c_idx, (i, b) in enumerate(group):
                rhs = [gb[p][c_idx] for p in pivs]
                coeffs = solve_dense(sub, rhs)
                col = f_mat[i]
                for t, cval in zip(base_idx, coeffs):
                    if cval:
                        col.setdefault(t, {})[b] = cval
            # e_j matrices on the new basis vectors
            for t, p in zip(base_idx, pivs):
                per_j = evecs[p]
                for j in range(rank):
                    for r, v in per_j[j].items():
                        e_mat[j].setdefault(r, {})[t] = v
        level = new_level

    if len(weights) != dim:
        raise InternalCheckError(
            f"Verma quotient dimension {len(weights)} != Weyl dim {dim}")

    action = {}
    for i in range(rank):
        action[("e", i)] = e_mat[i]
        action[("f", i)] = f_mat[i]
    for k in range(rank):
        action[("h", k)] = {t: {t: weights[t][k]} for t in range(dim)
                            if weights[t][k]}
    _extend_action_to_all_roots(cb, action)
    mod = ExplicitModule(cb=cb, highest_weight=lam,
                         weights=tuple(weights), action=action)
    _simple_cache[key] = mod
    return mod


def _column(mat, j):
    """Column j of a sparse row-dict matrix."""
    out = {}
    for r, row in mat.items():
        v = row.get(j)
        if v:
            out[r] = v
    return out


def adjoint_module(cb):
    """The adjoint module with matrices given by the structure constants."""
    rd = cb.rd
    syms = cb.symbols()
    pos = {s: i for i, s in enumerate(syms)}
    weights = []
    for kind, i in syms:
        if kind == "e":
            weights.append(rd.pos_roots_fund[i])
        elif kind == "f":
            weights.append(neg_weight(rd.pos_roots_fund[i]))
        else:
            weights.append(rd.zero)
    action = {}
    for g in syms:
        mat = {}
        for j, s in enumerate(syms):
            for t, v in bracket_symbols(cb, g, s).items():
                mat.setdefault(pos[t], {})[j] = v
        action[g] = mat
    return ExplicitModule(cb=cb, highest_weight=rd.highest_root,
                          weights=tuple(weights), action=action)


def symmetric_power_module(mod, n, cap=DEFAULT_DIM_CAP):
    """S^n of an explicit module, generators acting by derivations."""
    if n < 0:
        raise UserInputError("symmetric power needs n >= 0")
    d = mod.dim
    monos = list(combinations_with_replacement(range(d), n))
    if len(monos) > cap:
        raise ResourceCapError(
            f"dim S^{n} = {len(monos)} exceeds the dimension cap {cap}")
    midx = {m: i for i, m in enumerate(monos)}
    weights = []
    for m in monos:
        w = mod.cb.rd.zero
        for t in m:
            w = add_weights(w, mod.weights[t])
        weights.append(w)
    action = {}
    for g, gm in mod.action.items():
        mat = {}
        for ci, m in enumerate(monos):
            seen = {}
            for p, t in enumerate(m):
                seen[t] = seen.get(t, 0) + 1
            for t, mult in seen.items():
                col = _column(gm, t)
                rest = list(m)
                rest.remove(t)
                for r, v in col.items():
                    newm = tuple(sorted(rest + [r]))
                    row = midx[newm]
                    cur = mat.setdefault(row, {})
                    val = cur.get(ci, 0) + mult * v
                    if val:
                        cur[ci] = val
                    elif ci in cur:
                        del cur[ci]
        action[g] = {r: row for r, row in mat.items() if row}
    return ExplicitModule(cb=mod.cb, highest_weight=None,
                          weights=tuple(weights), action=action)


# ---------------------------------------------------------------------------
# the contraction maps D^n

@dataclass
class DMapMatrix:
    cb: ChevalleyBasis
    lam: tuple
    n: int
    matrix: dict          # sparse row-dict, target x source
    src_weights: tuple
    tgt_weights: tuple

    @property
    def src_dim(self):
        return len(self.src_weights)

    @property
    def tgt_dim(self):
        return len(self.tgt_weights)


_dmap_cache = {}


def dmap_matrix(cb, lam, n, cap=DEFAULT_DIM_CAP):
    """D^n[L(lambda)]: S^n(s) (x) L -> S^{n-1}(s) (x) L,
    X_1...X_n (x) v -> sum_i X_1...^X_i...X_n (x) X_i v."""
    if n < 1:
        raise UserInputError("D^n needs n >= 1")
    rd = cb.rd
    lam = tuple(lam)
    key = (rd.key, lam, n)
    if key in _dmap_cache:
        return _dmap_cache[key]
    mod = simple_module(cb, lam, cap)
    dims = cb.dim
    from math import comb
    src_size = comb(dims + n - 1, n) * mod.dim
    if src_size > cap:
        raise ResourceCapError(
            f"dim S^{n}(s)x L{lam} = {src_size} exceeds the dimension cap {cap}")

    syms = cb.symbols()
    sym_weights = []
    for kind, i in syms:
        if kind == "e":
            sym_weights.append(rd.pos_roots_fund[i])
        elif kind == "f":
            sym_weights.append(neg_weight(rd.pos_roots_fund[i]))
        else:
            sym_weights.append(rd.zero)

    src_monos = list(combinations_with_replacement(range(dims), n))
    tgt_monos = list(combinations_with_replacement(range(dims), n - 1))
    tgt_idx = {m: i for i, m in enumerate(tgt_monos)}

    def mono_weight(m):
        w = rd.zero
        for t in m:
            w = add_weights(w, sym_weights[t])
        return w

    src_weights = []
    vd = mod.dim
    mat = {}
    for mi, m in enumerate(src_monos):
        mw = mono_weight(m)
        seen = {}
        for t in m:
            seen[t] = seen.get(t, 0) + 1
        for v in range(vd):
            src_weights.append(add_weights(mw, mod.weights[v]))
        for t, mult in seen.items():
            rest = list(m)
            rest.remove(t)
            trow = tgt_idx[tuple(rest)] * vd
            act = mod.action[syms[t]]
            for r, row in act.items():
                for c, val in row.items():
                    entry = mat.setdefault(trow + r, {})
                    cur = entry.get(mi * vd + c, 0) + mult * val
                    if cur:
                        entry[mi * vd + c] = cur
                    elif mi * vd + c in entry:
                        del entry[mi * vd + c]
    tgt_weights = []
    for m in tgt_monos:
        mw = mono_weight(m)
        for v in range(vd):
            tgt_weights.append(add_weights(mw, mod.weights[v]))
    dm = DMapMatrix(cb=cb, lam=lam, n=n, matrix={r: row for r, row in mat.items() if row},
                    src_weights=tuple(src_weights), tgt_weights=tuple(tgt_weights))
    _dmap_cache[key] = dm
    return dm


def ker_coker_multiplicities(d):
    """Decompositions of ker D and coker D into irreducibles.

    D preserves weights, so the kernel splits over weight blocks; its
    dimension per block is (source block size) - (block rank), all exact.
    """
    rd = d.cb.rd
    src_blocks = {}
    for i, w in enumerate(d.src_weights):
        src_blocks.setdefault(w, []).append(i)
    tgt_blocks = {}
    for i, w in enumerate(d.tgt_weights):
        tgt_blocks.setdefault(w, []).append(i)

    ker_char = {}
    for w, cols in src_blocks.items():
        rows = tgt_blocks.get(w, [])
        if rows:
            block = [[d.matrix.get(r, {}).get(c, 0) for c in cols] for r in rows]
            r = rank_rows(block)
        else:
            r = 0
        k = len(cols) - r
        if k:
            ker_char[w] = k

    src_char = {w: len(v) for w, v in src_blocks.items()}
    tgt_char = {w: len(v) for w, v in tgt_blocks.items()}
    coker_char = dict(tgt_char)
    coker_char = charring.char_add(coker_char, src_char, -1)
    coker_char = charring.char_add(coker_char, ker_char, +1)
    if any(v < 0 for v in coker_char.values()):
        raise InternalCheckError("negative cokernel character")
    try:
        ker_dec = charring.decompose(rd, ker_char)
        coker_dec = charring.decompose(rd, coker_char)
    except UserInputError as exc:
        raise InternalCheckError(f"equivariance bug: {exc}") from exc
    return ker_dec, coker_dec


# ---------------------------------------------------------------------------
# tensor-space actions for equivariance checks

def tensor_product_action(cb, smod, vmod, sym):
    """Action of a generator on S-module (x) V-module (row-dicts)."""
    a = smod.action[sym]
    b = vmod.action[sym]
    dv = vmod.dim
    out = {}
    for r, row in a.items():
        for c, val in row.items():
            for t in range(dv):
                out.setdefault(r * dv + t, {})[c * dv + t] = val
    for r, row in b.items():
        for c, val in row.items():
            for m in range(smod.dim):
                ent = out.setdefault(m * dv + r, {})
                cur = ent.get(m * dv + c, 0) + val
                if cur:
                    ent[m * dv + c] = cur
                elif m * dv + c in ent:
                    del ent[m * dv + c]
    return {r: row for r, row in out.items() if row}


def equivariance_defect(d, cap=DEFAULT_DIM_CAP):
    """Return the first generator where g.D != D.g, or None if equivariant."""
    cb = d.cb
    adm = adjoint_module(cb)
    vmod = simple_module(cb, d.lam, cap)
    s_n = symmetric_power_module(adm, d.n, cap)
    s_n1 = symmetric_power_module(adm, d.n - 1, cap)
    for sym in cb.symbols():
        src_act = tensor_product_action(cb, s_n, vmod, sym)
        tgt_act = tensor_product_action(cb, s_n1, vmod, sym)
        if sp_sub(spmm(tgt_act, d.matrix), spmm(d.matrix, src_act)):
            return sym
    return None
