"""Invariant theory for the sl(n) case: the matrix realization inside
gl(n|n), signed symmetric-group actions on tensor powers, commutant
dimensions and the image of the group algebra.

The commutant is computed exactly in two stages.  Endomorphisms
commuting with the even subalgebra are spanned by explicit shuffle
operators: position permutations of the tensor factors composed with a
re-labelling of which factors are odd (for the full gl(n|n) even part
the permutation must also preserve the odd position set).  Their span
has computable rank (the Gram matrix of two shuffles is n^cycles).  The
odd constraints then cut this span down; by equivariance and the Jacobi
identity it suffices to impose one generator per irreducible odd
component, so the final system is small even when the tensor space has
dimension in the thousands.  Odd commutant elements vanish identically
here because the Cartan weight of a basis tensor determines its parity;
this is checked, not assumed.
"""

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb, factorial

from ._linalg import SparseRREF, det_int, rank_rows
from .errors import InternalCheckError, ResourceCapError, UserInputError

DEFAULT_TENSOR_CAP = 20736


# ---------------------------------------------------------------------------
# the matrix realization

@dataclass(frozen=True)
class SuperMatrixRep:
    n: int
    names: tuple
    parities: tuple
    matrices: tuple        # sparse {(row, col): value} over 2n x 2n indices

    @property
    def dim(self):
        return len(self.matrices)


def _sl_basis_mats(n):
    """Traceless n x n basis: elementary off-diagonal plus Cartan."""
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append(((f"E{i}{j}"), {(i, j): 1}))
    for i in range(n - 1):
        out.append((f"H{i}", {(i, i): 1, (i + 1, i + 1): -1}))
    return out


def realize_g(n):
    """Basis of g inside gl(n|n): block form [[A, b I], [C, A + d I]]
    with A, C traceless."""
    if n < 2:
        raise UserInputError("the matrix realization needs n >= 2")
    names, parities, mats = [], [], []
    for name, m in _sl_basis_mats(n):
        mat = {}
        for (i, j), v in m.items():
            mat[(i, j)] = v
            mat[(n + i, n + j)] = v
        names.append("A:" + name)
        parities.append(0)
        mats.append(mat)
    names.append("d")
    parities.append(0)
    mats.append({(n + i, n + i): 1 for i in range(n)})
    for name, m in _sl_basis_mats(n):
        mat = {(n + i, j): v for (i, j), v in m.items()}
        names.append("C:" + name)
        parities.append(1)
        mats.append(mat)
    names.append("b")
    parities.append(1)
    mats.append({(i, n + i): 1 for i in range(n)})
    return SuperMatrixRep(n=n, names=tuple(names), parities=tuple(parities),
                          matrices=tuple(mats))


def realize_gl(n):
    """Full gl(n|n) elementary-matrix basis."""
    names, parities, mats = [], [], []
    for a in range(2 * n):
        for b in range(2 * n):
            names.append(f"E{a}{b}")
            parities.append(((a >= n) + (b >= n)) % 2)
            mats.append({(a, b): 1})
    return SuperMatrixRep(n=n, names=tuple(names), parities=tuple(parities),
                          matrices=tuple(mats))


def _superbracket(n, x, px, y, py):
    """[x, y] = x y - (-1)^{px py} y x on sparse 2n x 2n matrices."""
    out = {}
    for (i, j), v in x.items():
        for (k, l), w in y.items():
            if j == k:
                out[(i, l)] = out.get((i, l), 0) + v * w
    sign = -1 if (px and py) else 1
    for (i, j), v in y.items():
        for (k, l), w in x.items():
            if j == k:
                out[(i, l)] = out.get((i, l), 0) - sign * v * w
    return {k: v for k, v in out.items() if v}


def bracket_closure_ok(rep):
    """Superbracket of any two basis elements stays in the span (exact)."""
    rref = SparseRREF()
    for m in rep.matrices:
        rref.add({r * 1000 + c: v for (r, c), v in m.items()})
    base_rank = rref.rank
    for i, x in enumerate(rep.matrices):
        for j, y in enumerate(rep.matrices):
            br = _superbracket(rep.n, x, rep.parities[i], y, rep.parities[j])
            if rref.add({r * 1000 + c: v for (r, c), v in br.items()}):
                return False
    return rref.rank == base_rank


# ---------------------------------------------------------------------------
# tensor space

@dataclass(frozen=True)
class TensorSpace:
    n: int
    r: int

    @property
    def letters(self):
        return 2 * self.n

    @property
    def dim(self):
        return self.letters ** self.r

    def digits(self, w):
        out = []
        for _ in range(self.r):
            out.append(w % self.letters)
            w //= self.letters
        return out

    def parity(self, w):
        return sum(1 for d in self.digits(w) if d >= self.n) % 2


def _check_cap(space, cap):
    if space.dim > cap:
        raise ResourceCapError(
            f"tensor space dimension {space.dim} exceeds the cap {cap}")


def tensor_action(rep, r, cap=DEFAULT_TENSOR_CAP):
    """Operators of the basis on the r-th tensor power, with Koszul signs
    for the odd elements (row-dict sparse matrices)."""
    space = TensorSpace(rep.n, r)
    _check_cap(space, cap)
    L = space.letters
    ops = []
    for parity, mat in zip(rep.parities, rep.matrices):
        op = {}
        cols = {}
        for (a, b), v in mat.items():
            cols.setdefault(b, []).append((a, v))
        for w in range(space.dim):
            digs = space.digits(w)
            odd_prefix = 0
            for p in range(r):
                d = digs[p]
                hits = cols.get(d)
                if hits:
                    sign = -1 if (parity and odd_prefix % 2) else 1
                    for a, v in hits:
                        w2 = w + (a - d) * (L ** p)
                        row = op.setdefault(w2, {})
                        nv = row.get(w, 0) + sign * v
                        if nv:
                            row[w] = nv
                        elif w in row:
                            del row[w]
                if d >= rep.n:
                    odd_prefix += 1
        ops.append({rw: row for rw, row in op.items() if row})
    return ops


def _perm_op(space, sigma):
    """Signed operator of sigma (factor p moves to slot sigma[p]);
    dict source word -> (target word, sign)."""
    L = space.letters
    n = space.n
    r = space.r
    out = {}
    for w in range(space.dim):
        digs = space.digits(w)
        w2 = 0
        for p in range(r):
            w2 += digs[p] * (L ** sigma[p])
        sign = 1
        for p in range(r):
            if digs[p] < n:
                continue
            for q in range(p + 1, r):
                if digs[q] >= n and sigma[p] > sigma[q]:
                    sign = -sign
        out[w] = (w2, sign)
    return out


def sym_action(n, r, cap=DEFAULT_TENSOR_CAP):
    """Adjacent-transposition generators of S_r on the tensor power
    (odd-odd swaps pick up a minus sign)."""
    space = TensorSpace(n, r)
    _check_cap(space, cap)
    gens = []
    for p in range(r - 1):
        sigma = list(range(r))
        sigma[p], sigma[p + 1] = sigma[p + 1], sigma[p]
        op = {}
        for w, (w2, sign) in _perm_op(space, sigma).items():
            op.setdefault(w2, {})[w] = sign
        gens.append(op)
    return gens


def phi_image_dim(n, r, cap=DEFAULT_TENSOR_CAP):
    """Rank of the span of the r! signed permutation operators."""
    if n < 2:
        raise UserInputError("n >= 2 required")
    space = TensorSpace(n, r)
    _check_cap(space, cap)
    rref = SparseRREF()
    for sigma in permutations(range(r)):
        row = {}
        for w, (w2, sign) in _perm_op(space, sigma).items():
            row[w2 * space.dim + w] = sign
        rref.add(row)
    return rref.rank


# ---------------------------------------------------------------------------
# shuffle basis of the even commutant

def _shuffles(n, r, algebra):
    """Spanning operators of End over the even subalgebra.

    Each operator is a bijection (dict source word -> target word): take
    the words whose odd positions are exactly S, move the content of
    position p to position sigma(p), and mark position q of the target
    odd iff q is in S'.  For algebra "gl" the even part separates the
    two copies of C^n, so sigma must map S onto S'.
    """
    space = TensorSpace(n, r)
    L = space.letters
    r_ = r
    subsets = {}
    for k in range(r + 1):
        subsets[k] = [frozenset(c) for c in combinations(range(r), k)]
    ops = []
    for k in range(r + 1):
        for s_src in subsets[k]:
            src_words = []
            for contents in _content_iter(n, r):
                w = 0
                for p in range(r):
                    d = contents[p] + (n if p in s_src else 0)
                    w += d * (L ** p)
                src_words.append((contents, w))
            for s_tgt in subsets[k]:
                for sigma in permutations(range(r)):
                    if algebra == "gl" and {sigma[p] for p in s_src} != set(s_tgt):
                        continue
                    mapping = {}
                    for contents, w in src_words:
                        w2 = 0
                        for p in range(r):
                            q = sigma[p]
                            d = contents[p] + (n if q in s_tgt else 0)
                            w2 += d * (L ** q)
                        mapping[w] = w2
                    ops.append(((s_src, s_tgt, sigma), mapping))
    return ops


def _content_iter(n, r):
    if r == 0:
        yield ()
        return
    for head in range(n):
        for tail in _content_iter(n, r - 1):
            yield (head,) + tail


def _ncycles(sigma):
    seen = [False] * len(sigma)
    c = 0
    for i in range(len(sigma)):
        if not seen[i]:
            c += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = sigma[j]
    return c


_gram_rank_cache = {}


def _perm_gram_rank(m, n):
    """Rank of [n^{cycles(sigma^-1 tau)}] over S_m: the dimension of the
    span of the permutation operators on the m-th tensor power of C^n."""
    key = (m, n)
    if key in _gram_rank_cache:
        return _gram_rank_cache[key]
    perms = list(permutations(range(m)))
    mat = []
    for sigma in perms:
        inv = [0] * m
        for i, v in enumerate(sigma):
            inv[v] = i
        row = []
        for tau in perms:
            comp = tuple(inv[tau[i]] for i in range(m))
            row.append(n ** _ncycles(comp))
        mat.append(row)
    rank = rank_rows(mat)
    _gram_rank_cache[key] = rank
    return rank


def _even_commutant_rank(n, r, algebra):
    """dim End over the even subalgebra = sum of shuffle-block Gram ranks."""
    total = 0
    for k in range(r + 1):
        blocks = comb(r, k) ** 2
        if algebra == "gl":
            total += blocks * _perm_gram_rank(k, n) * _perm_gram_rank(r - k, n)
        else:
            total += blocks * _perm_gram_rank(r, n)
    return total


def _odd_generators(n, algebra):
    """One odd basis matrix per irreducible odd component of the algebra."""
    if algebra == "gl":
        return [{(n, 0): 1}, {(0, n): 1}]
    # adjoint copy (traceless lower-left) and the b-line
    return [{(n, 1): 1}, {(i, n + i): 1 for i in range(n)}]


def _op_columns(op):
    cols = {}
    for rw, row in op.items():
        for cw, v in row.items():
            cols.setdefault(cw, []).append((rw, v))
    return cols


def commutant_parity_dims(n, r, algebra="g", cap=DEFAULT_TENSOR_CAP):
    """(even, odd) dimensions of the supercommutant of the action on the
    r-th tensor power."""
    if n < 2:
        raise UserInputError("n >= 2 required")
    if algebra not in ("g", "gl"):
        raise UserInputError(f"unknown algebra {algebra!r}")
    space = TensorSpace(n, r)
    _check_cap(space, cap)
    if r == 0:
        return 1, 0

    # odd commutant elements would have to preserve every Cartan weight
    # while flipping parity; the odd-letter count is itself a Cartan
    # weight and fixes the parity, so the odd part is zero.
    shuffles = _shuffles(n, r, algebra)
    r0 = _even_commutant_rank(n, r, algebra)

    # odd constraints: [rho(x), T] = 0 for T in the shuffle span; one
    # generator per irreducible odd component suffices (the rest follow
    # from even-equivariance and the Jacobi identity)
    odd_mats = _odd_generators(n, algebra)
    rep_like = SuperMatrixRep(n=n, names=("x",) * len(odd_mats),
                              parities=(1,) * len(odd_mats),
                              matrices=tuple(odd_mats))
    odd_ops = tensor_action(rep_like, r, cap)

    rows = {}
    for xi, x in enumerate(odd_ops):
        xcols = _op_columns(x)
        for j, (_, bmap) in enumerate(shuffles):
            for w_src, w_tgt in bmap.items():
                # (rho B)[a][w_src] = rho[a][w_tgt]
                for rw, v in xcols.get(w_tgt, ()):
                    key = (xi, rw, w_src)
                    d = rows.setdefault(key, {})
                    nv = d.get(j, 0) + v
                    if nv:
                        d[j] = nv
                    elif j in d:
                        del d[j]
                # (B rho)[w_tgt][b] = rho[w_src][b]
                for b, v in x.get(w_src, {}).items():
                    key = (xi, w_tgt, b)
                    d = rows.setdefault(key, {})
                    nv = d.get(j, 0) - v
                    if nv:
                        d[j] = nv
                    elif j in d:
                        del d[j]
    rref = SparseRREF()
    for key in sorted(rows):
        row = {j: v for j, v in rows[key].items() if v}
        if row:
            rref.add(row)
    even = r0 - rref.rank
    if even < 0:
        raise InternalCheckError("constraint rank exceeded the even commutant")
    return even, 0


def commutant_dim(n, r, algebra="g", cap=DEFAULT_TENSOR_CAP):
    """Total dimension (even + odd) of the supercommutant."""
    even, odd = commutant_parity_dims(n, r, algebra, cap)
    return even + odd


def commutant_dim_naive(n, r, algebra="g", cap=4096):
    """Independent small-scale commutant: block-diagonal ansatz over the
    Cartan weights, all non-Cartan constraints stacked.  For tests."""
    if algebra not in ("g", "gl"):
        raise UserInputError(f"unknown algebra {algebra!r}")
    space = TensorSpace(n, r)
    if space.dim ** 2 > cap * cap:
        raise ResourceCapError("naive commutant oracle cap exceeded")
    rep = realize_g(n) if algebra == "g" else realize_gl(n)
    ops = tensor_action(rep, r, cap=cap * cap)

    def weight_key(w):
        digs = space.digits(w)
        if algebra == "gl":
            content = [0] * (2 * n)
            for d in digs:
                content[d] += 1
            return tuple(content)
        content = [0] * n
        odd = 0
        for d in digs:
            content[d % n] += 1
            odd += d >= n
        return tuple(content) + (odd,)

    keys = {}
    for w in range(space.dim):
        keys.setdefault(weight_key(w), []).append(w)
    unknowns = {}
    for grp in keys.values():
        for i in grp:
            for j in grp:
                unknowns[(i, j)] = len(unknowns)
    rref = SparseRREF()
    rows = {}
    for xi, op in enumerate(ops):
        cols = _op_columns(op)
        # even T: [rho(x), T] = 0 entrywise; entries couple unknown blocks
        for (i, j), uid in unknowns.items():
            # (rho T)[a][j] picks up rho[a][i] T[i][j]
            for rw, v in cols.get(i, ()):
                key = (xi, rw, j)
                d = rows.setdefault(key, {})
                d[uid] = d.get(uid, 0) + v
            # (T rho)[i][b] picks up T[i][j] rho[j][b]
            for b, v in op.get(j, {}).items():
                key = (xi, i, b)
                d = rows.setdefault(key, {})
                d[uid] = d.get(uid, 0) - v
    for key in sorted(rows):
        row = {u: v for u, v in rows[key].items() if v}
        if row:
            rref.add(row)
    return len(unknowns) - rref.rank


def specht_dim(partition):
    """Hook length formula."""
    rows = list(partition)
    n = sum(rows)
    prod = 1
    for i, row in enumerate(rows):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for k in range(i + 1, len(rows)) if rows[k] > j)
            prod *= arm + leg + 1
    return factorial(n) // prod


def partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for head in range(min(n, max_part), 0, -1):
        for tail in partitions(n - head, head):
            yield (head,) + tail


def schur_weyl_gl_dim(n, r):
    """sum of (dim Specht)^2 over partitions of r with lambda_{n+1} <= n."""
    tot = 0
    for lam in partitions(r):
        if len(lam) > n and lam[n] > n:
            continue
        tot += specht_dim(lam) ** 2
    return tot


@dataclass(frozen=True)
class ThmITVerdict:
    n: int
    r: int
    commutant: int
    image: int
    injective: bool
    surjective: bool

    def as_dict(self):
        return {"n": self.n, "r": self.r, "commutant": self.commutant,
                "image": self.image, "injective": self.injective,
                "surjective": self.surjective}


def thmIT_verdict(n, r, cap=DEFAULT_TENSOR_CAP):
    """Injectivity/surjectivity verdict for CS_r -> End_g, with the
    paper-theorem guard rails."""
    c = commutant_dim(n, r, "g", cap)
    im = phi_image_dim(n, r, cap)
    if im > c:
        raise InternalCheckError("image exceeds commutant")
    verdict = ThmITVerdict(n=n, r=r, commutant=c, image=im,
                           injective=(im == factorial(r)),
                           surjective=(im == c))
    if r < n and not verdict.surjective:
        raise InternalCheckError("theorem violated: r < n must be surjective")
    if r > 2 * n - 2 and verdict.surjective:
        raise InternalCheckError("theorem violated: r > 2n-2 must not be surjective")
    if r == n == 2 and verdict.surjective:
        raise InternalCheckError("theorem violated: r = n = 2 must not be surjective")
    return verdict
